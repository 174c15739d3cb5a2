"""Plain-text block format for cross-checking problems with external solvers

Layout (one record per line, '#' starts a comment):

    sides <s_1> <s_2> ... <s_r>
    objective <block>
    <row> <col> <value>
    ...
    constraint <rhs> [label]
    block <block>
    <row> <col> <value>
    ...

Entries are listed explicitly for both (p, q) and (q, p); numbers are
written with 17 significant digits so a load reproduces the problem.
"""

from pathlib import Path
from typing import Dict, List, Union

import numpy as np

from ..errors import ValidationError
from .problem import ProblemBuilder, SdpProblem, Triplet, triplets_of

_NUM = "%.17g"


def dump_problem(problem: SdpProblem, path: Union[str, Path]) -> Path:
    """Write a problem in the block format and return the path"""
    path = Path(path)
    lines = [
        f"# {problem.num_constraints} constraints, {len(problem.sides)} blocks",
        "sides " + " ".join(str(s) for s in problem.sides),
    ]
    for block, matrix in enumerate(problem.objective):
        rows, cols = np.nonzero(matrix)
        if rows.size == 0:
            continue
        lines.append(f"objective {block}")
        lines.extend(f"{r} {c} {_NUM % matrix[r, c]}" for r, c in zip(rows, cols))
    for k in range(problem.num_constraints):
        label = problem.labels[k] if k < len(problem.labels) else ""
        lines.append(f"constraint {_NUM % problem.rhs[k]} {label}".rstrip())
        for block in range(len(problem.sides)):
            triplets = triplets_of(problem, k, block)
            if triplets:
                lines.append(f"block {block}")
                lines.extend(f"{r} {c} {_NUM % v}" for r, c, v in triplets)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def load_problem(path: Union[str, Path]) -> SdpProblem:
    """Read a problem written by dump_problem"""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Problem file not found: {path}")

    builder = None
    objective: Dict[int, List[Triplet]] = {}
    constraints: List[dict] = []
    target: List[Triplet] = []

    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "sides":
                builder = ProblemBuilder([int(s) for s in rest])
            elif head == "objective":
                target = objective.setdefault(int(rest[0]), [])
            elif head == "constraint":
                constraints.append({"rhs": float(rest[0]), "label": " ".join(rest[1:]), "terms": {}})
            elif head == "block":
                if not constraints:
                    raise ValidationError("'block' before any 'constraint'")
                target = constraints[-1]["terms"].setdefault(int(rest[0]), [])
            else:
                r, c, v = line.split()
                target.append((int(r), int(c), float(v)))
        except (ValueError, IndexError) as e:
            raise ValidationError(f"{path}:{lineno}: cannot parse {raw!r} ({e})") from e

    if builder is None:
        raise ValidationError(f"{path}: missing 'sides' line")
    for block, triplets in objective.items():
        matrix = np.zeros((builder.sides[block], builder.sides[block]))
        for r, c, v in triplets:
            matrix[r, c] += v
        builder.set_objective(block, matrix)
    for con in constraints:
        builder.add_constraint(con["terms"], con["rhs"], con["label"])
    return builder.build()
