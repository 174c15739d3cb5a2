"""CLI interface for the kappa-entanglement toolkit"""

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# Try to load .env file if available
try:
    from dotenv import load_dotenv
    # Load .env from project root
    env_path = Path(__file__).parent.parent / ".env"
    if env_path.exists():
        load_dotenv(env_path)
    else:
        load_dotenv()
except ImportError:
    pass

from cli.state_refs import resolve_state, save_state_file
from src.channels import one_shot_exact_cost
from src.checks import render_report, run_suite, suite_names
from src.config import ToolkitConfig, default_config, load_config, with_overrides
from src.errors import IntegrityFailure, SolverFailure, ValidationError
from src.measures import NEG_INF_LABEL, extract_witness, format_bits, kappa_program, measure_state
from src.sdp import dump_problem
from src.states import get_family
from src.sweeps import run_sweep, write_csv_atomic

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SOLVER = 2
EXIT_INTEGRITY = 3


class ToolkitArgumentParser(argparse.ArgumentParser):
    """Raises ValidationError on bad arguments instead of exiting"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise ValidationError(f"{self.prog}: {message}")


def _jsonable(value: Any) -> Any:
    """Floats stay floats except -inf, which becomes the string '-inf'"""
    if isinstance(value, float) and math.isinf(value) and value < 0:
        return NEG_INF_LABEL
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _print_pairs(pairs: Dict[str, Any]) -> None:
    width = max(len(k) for k in pairs)
    for key, value in pairs.items():
        if isinstance(value, float):
            value = format_bits(value, "%.9f")
        print(f"{key:<{width}} = {value}")


def build_config(args) -> ToolkitConfig:
    config = load_config(args.config) if args.config else default_config()
    config = with_overrides(config, gap_tol=args.gap_tol, feas_tol=args.feas_tol, seed=args.seed)
    if args.solver_verbose:
        config = config.model_copy(update={"solver": config.solver.model_copy(update={"verbose": True})})
    return config


def measure_command(args, config: ToolkitConfig) -> int:
    """Compute every measure for one state"""
    rho = resolve_state(args.state)
    report = measure_state(rho, config)
    if args.json:
        print(json.dumps(_jsonable(dict(report)), indent=2, default=str))
        return EXIT_OK

    print(f"State: {args.state} ({rho.dim_a}x{rho.dim_b})")
    _print_pairs({
        "e_kappa": report["e_kappa_primal"],
        "e_kappa_dual": report["e_kappa_dual"],
        "e_n": report["e_n"],
        "log2_z": report["log2_z"],
        "one_shot_lower": report["one_shot_lower"],
        "one_shot_upper": report["one_shot_upper"],
        "binegativity_holds": report["binegativity_holds"],
    })
    diagnostics = report["diagnostics"]
    print(
        f"✓ Solver {diagnostics['status']} in {diagnostics['iterations']} iterations "
        f"(gap {diagnostics['gap']:.2e}, pres {diagnostics['primal_residual']:.2e}, "
        f"dres {diagnostics['dual_residual']:.2e})"
    )
    return EXIT_OK


def sweep_command(args, config: ToolkitConfig) -> int:
    """Measure a family over a parameter grid and write CSV"""
    out = Path(args.out)
    if not out.parent.is_dir():
        raise ValidationError(f"Output directory does not exist: {out.parent}")
    get_family(args.family).grid(args.p_start, args.p_end, args.steps)
    print(f"Sweeping {args.family} over [{args.p_start}, {args.p_end}] with {args.steps} points...")
    frame = run_sweep(args.family, args.p_start, args.p_end, args.steps, config)
    negative = frame[frame["gap"] < -config.checks.tolerance]
    if not negative.empty:
        raise IntegrityFailure(
            f"E_kappa < E_N at p = {negative['p'].tolist()}",
            {"rows": negative.to_dict(orient="records")},
        )
    write_csv_atomic(frame, out, config.sweeps.float_format)
    print(f"✓ Wrote {len(frame)} rows to {out}")
    return EXIT_OK


def oneshot_command(args, config: ToolkitConfig) -> int:
    """Certify the exact one-shot cost of a state"""
    rho = resolve_state(args.state)
    certificate = one_shot_exact_cost(rho, config)
    problems = certificate.failures(
        config.channels.certificate_tol, config.channels.minimality_margin, config.measures.psd_tol
    )
    summary = certificate.summary()
    if args.json:
        print(json.dumps(_jsonable({**summary, "failures": problems}), indent=2, default=str))
    else:
        print(f"State: {args.state} ({rho.dim_a}x{rho.dim_b})")
        _print_pairs({k: v for k, v in summary.items() if k != "scanned"})
        print("scanned slack  = " + ", ".join(f"m={m}: {t:.3e}" for m, t in summary["scanned"].items()))
        for problem in problems:
            print(f"✗ {problem}")
        if not problems:
            print(f"✓ Certificate verified: m = {certificate.m}")
    if problems:
        raise IntegrityFailure("Preparation certificate failed verification", {"failures": problems, **summary})
    return EXIT_OK


def check_command(args, config: ToolkitConfig) -> int:
    """Run a property battery"""
    results = run_suite(args.suite, config)
    print(render_report(results, verbose=args.verbose))
    return EXIT_OK if all(r.passed for r in results) else EXIT_INTEGRITY


def witness_command(args, config: ToolkitConfig) -> int:
    """Entanglement witness from the dual optimizers"""
    rho = resolve_state(args.state)
    result = extract_witness(rho, config)
    print(f"State: {args.state} ({rho.dim_a}x{rho.dim_b})")
    _print_pairs({
        "violation": result.violation,
        "e_kappa_dual": result.kappa.e_kappa_dual,
        "ppt_min_expectation": result.ppt_min_expectation,
        "detects_entanglement": result.detects,
    })
    if args.out:
        path = save_state_file(result.witness, args.out)
        print(f"✓ Saved Z + I to {path}")
    return EXIT_OK


def dump_sdp_command(args, config: ToolkitConfig) -> int:
    """Write the kappa program of a state in the plain-text block format"""
    rho = resolve_state(args.state)
    problem, _ = kappa_program(rho)
    path = dump_problem(problem, args.out)
    print(f"✓ Wrote {problem.num_constraints} constraints over blocks {list(problem.sides)} to {path}")
    return EXIT_OK


COMMANDS = {
    "measure": measure_command,
    "sweep": sweep_command,
    "oneshot": oneshot_command,
    "check": check_command,
    "witness": witness_command,
    "dump-sdp": dump_sdp_command,
}


def build_parser() -> argparse.ArgumentParser:
    parser = ToolkitArgumentParser(
        description="kappa-entanglement and exact PPT entanglement cost toolkit"
    )
    parser.add_argument("--config", type=str, help="Path to configuration file (YAML or JSON)")
    parser.add_argument("--gap-tol", type=float, help="Relative duality gap tolerance")
    parser.add_argument("--feas-tol", type=float, help="Relative feasibility tolerance")
    parser.add_argument("--seed", type=int, help="Base seed for random batteries")
    parser.add_argument("--solver-verbose", action="store_true", help="Print the solver iteration table")
    parser.add_argument("--log-level", type=str, default="WARNING", help="Python logging level (default: WARNING)")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    measure_parser = subparsers.add_parser("measure", help="Compute all measures for a state")
    measure_parser.add_argument("state", help="Built-in name (e.g. rho_v, phi:3, sigma:0.25) or state file")
    measure_parser.add_argument("--json", action="store_true", help="Print the report as JSON")

    sweep_parser = subparsers.add_parser("sweep", help="Sweep a state family and write CSV")
    sweep_parser.add_argument("family", help="One of sigma, omega, tau")
    sweep_parser.add_argument("p_start", type=float)
    sweep_parser.add_argument("p_end", type=float)
    sweep_parser.add_argument("steps", type=int)
    sweep_parser.add_argument("--out", type=str, required=True, help="Output CSV path")

    oneshot_parser = subparsers.add_parser("oneshot", help="Certify the exact one-shot PPT cost")
    oneshot_parser.add_argument("state")
    oneshot_parser.add_argument("--json", action="store_true", help="Print the certificate as JSON")

    check_parser = subparsers.add_parser("check", help="Run a property battery")
    check_parser.add_argument("suite", help=f"One of {', '.join(suite_names())}")
    check_parser.add_argument("--verbose", action="store_true", help="Show details of passing assertions")

    witness_parser = subparsers.add_parser("witness", help="Extract an entanglement witness")
    witness_parser.add_argument("state")
    witness_parser.add_argument("--out", type=str, help="Write Z + I in state file layout")

    dump_parser = subparsers.add_parser("dump-sdp", help="Write the kappa SDP in plain-text block format")
    dump_parser.add_argument("state")
    dump_parser.add_argument("--out", type=str, required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValidationError as e:
        print(f"Validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION

    if not args.command:
        parser.print_help()
        return EXIT_VALIDATION

    try:
        logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
        config = build_config(args)
    except (FileNotFoundError, ValueError) as e:
        print(f"Error loading config: {e}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        return COMMANDS[args.command](args, config)
    except ValidationError as e:
        print(f"Validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except SolverFailure as e:
        print(f"Solver failure: {e}", file=sys.stderr)
        return EXIT_SOLVER
    except IntegrityFailure as e:
        print(f"Integrity failure: {e}", file=sys.stderr)
        for key, value in e.residuals.items():
            print(f"  {key}: {value}", file=sys.stderr)
        return EXIT_INTEGRITY
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
