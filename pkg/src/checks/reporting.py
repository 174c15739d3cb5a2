"""Plain-text rendering of battery results"""

from typing import List

from .batteries import SuiteResult


def render_report(results: List[SuiteResult], verbose: bool = False) -> str:
    """
    One line per assertion with a ✓/✗ marker and totals per suite.

    Args:
        results: Output of run_suite
        verbose: Also print passing assertions' details

    Returns:
        Report text
    """
    lines = []
    total, failed = 0, 0
    for suite in results:
        status = "PASS" if suite.passed else "FAIL"
        lines.append(f"== {suite.name}: {status} ({len(suite.outcomes) - len(suite.failures)}/{len(suite.outcomes)})")
        for outcome in suite.outcomes:
            marker = "✓" if outcome.passed else "✗"
            value = "" if outcome.value is None else f" = {outcome.value:.9g}"
            line = f"  {marker} {outcome.name}{value}"
            if outcome.detail and (verbose or not outcome.passed):
                line += f"  [{outcome.detail}]"
            lines.append(line)
        total += len(suite.outcomes)
        failed += len(suite.failures)

    lines.append("")
    lines.append("=" * 60)
    lines.append(f"✓ Passed: {total - failed}/{total}")
    lines.append(f"✗ Failed: {failed}")
    return "\n".join(lines)
