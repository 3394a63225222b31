"""Command-line interface.

Exit codes: 0 when every requested check passes, 1 when a mathematical check
fails, 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import cohomology, lie
from .algebra import NLieAlgebra, UnknownAlgebraError, builtin, check_filippov, invariants, is_stable
from .linalg import format_scalar
from .quotient import (
    build,
    check_ad_morphism,
    check_ad_well_defined,
    check_lie,
    is_nlie_cartan,
    is_nlie_ideal,
    push_subspace,
)
from .serialize import FormatError, dump, load_algebra, load_subspace, sparse_vector_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
QUERIES = ("stable", "ideal", "cartan", "invariant")


class UsageError(Exception):
    pass


def _load(args) -> NLieAlgebra:
    if (args.input is None) == (args.builtin is None):
        raise UsageError("give exactly one of an input file or --builtin NAME")
    if args.builtin is not None:
        try:
            return builtin(args.builtin)
        except UnknownAlgebraError as exc:
            raise UsageError(str(exc)) from None
    try:
        return load_algebra(args.input)
    except FormatError as exc:
        raise UsageError(str(exc)) from None


def _algebra_summary(g: NLieAlgebra, args) -> dict:
    return {
        "source": args.builtin if args.builtin is not None else args.input,
        "arity": g.arity,
        "dim": g.dim,
        "basis": list(g.basis_names),
    }


def _filippov_section(g: NLieAlgebra) -> dict:
    bad = check_filippov(g)
    return {
        "ok": not bad,
        "violations": [
            {"x": list(v.x), "y": list(v.y), "residual": sparse_vector_to_json(v.residual)} for v in bad
        ],
    }


def _quotient_section(q) -> dict:
    checks = {
        "lie_axioms": not check_lie(q),
        "ad_well_defined": check_ad_well_defined(q),
        "ad_morphism": check_ad_morphism(q),
    }
    return {
        "ext_dim": q.ext_dim,
        "relation_dim": q.V.dim,
        "lie_dim": q.lie_dim,
        "representatives": q.rep_labels(),
        "brackets": [{"args": list(k), "value": sparse_vector_to_json(v)} for k, v in q.c.items()],
        "checks": checks,
    }


def _analysis_section(q) -> dict:
    L = q.lie
    return {
        "semisimple": lie.is_semisimple(L),
        "solvable": lie.is_solvable(L),
        "nilpotent": lie.is_nilpotent(L),
        "abelian": lie.is_abelian(L),
        "killing_determinant": format_scalar(lie.killing_form(L).det()),
    }


def cmd_check(g, args) -> tuple[dict, int]:
    fil = _filippov_section(g)
    return {"command": "check", "filippov": fil}, EXIT_OK if fil["ok"] else EXIT_FAIL


def cmd_lie(g, args) -> tuple[dict, int]:
    report = {"command": "lie", "filippov": _filippov_section(g)}
    if not report["filippov"]["ok"]:
        return report, EXIT_FAIL
    q = build(g)
    report["quotient"] = _quotient_section(q)
    report["analysis"] = _analysis_section(q)
    report["invariants_dim"] = invariants(g).dim
    ok = all(report["quotient"]["checks"].values())
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_cohomology(g, args) -> tuple[dict, int]:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    report = {"command": "cohomology", "filippov": _filippov_section(g)}
    if not report["filippov"]["ok"]:
        return report, EXIT_FAIL
    q = build(g)
    squared = cohomology.d_squared_zero(q, args.max_degree)
    table = cohomology.cohomology_dims(q, args.max_degree)
    report["cohomology"] = {
        "lie_dim": q.lie_dim,
        "max_degree": args.max_degree,
        "d_squared_zero": squared,
        "table": [row._asdict() for row in table],
    }
    return report, EXIT_OK if squared else EXIT_FAIL


def cmd_subspace(g, args) -> tuple[dict, int]:
    if args.subspace is None:
        raise UsageError("--subspace FILE is required")
    try:
        s = load_subspace(args.subspace, g.dim)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    report = {"command": "subspace", "filippov": _filippov_section(g)}
    if not report["filippov"]["ok"]:
        return report, EXIT_FAIL
    q = build(g)
    if args.query == "stable":
        result = is_stable(g, s)
    elif args.query == "ideal":
        result = is_nlie_ideal(q, s)
    elif args.query == "cartan":
        result = is_nlie_cartan(q, s)
    else:
        result = s.is_subspace_of(invariants(g))
    report["subspace"] = {
        "dim": s.dim,
        "query": args.query,
        "result": result,
        "pushed_dim": push_subspace(q, s).dim,
    }
    return report, EXIT_OK if result else EXIT_FAIL


# --- text rendering -----------------------------------------------------------

def _render_vector(coords: dict, labels) -> str:
    if not coords:
        return "0"
    parts = []
    for j, val in coords.items():
        label = labels[int(j)]
        if val == "1":
            term = label
        elif val == "-1":
            term = f"-{label}"
        else:
            term = f"{val}*{label}"
        parts.append(term)
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def render_text(report: dict) -> str:
    lines = []
    alg = report["algebra"]
    lines.append(f"algebra: {alg['source']} (n={alg['arity']}, d={alg['dim']})")
    basis = alg["basis"]
    fil = report["filippov"]
    lines.append(f"fundamental identity: {'ok' if fil['ok'] else 'FAILED'}")
    for v in fil["violations"]:
        lines.append(f"  violation x={v['x']} y={v['y']} residual: {_render_vector(v['residual'], basis)}")
    if "quotient" in report:
        qs = report["quotient"]
        reps = qs["representatives"]
        lines.append(f"exterior power dim: {qs['ext_dim']}")
        lines.append(f"relation subspace dim: {qs['relation_dim']}")
        lines.append(f"lie algebra dim: {qs['lie_dim']}")
        lines.append("quotient basis: " + (", ".join(f"[{r}]" for r in reps) or "(empty)"))
        lines.append("structure constants:")
        if not qs["brackets"]:
            lines.append("  (all zero)")
        labels = [f"[{r}]" for r in reps]
        for b in qs["brackets"]:
            a, c = b["args"]
            lines.append(f"  [{labels[a]}, {labels[c]}] = {_render_vector(b['value'], labels)}")
        for name, ok in qs["checks"].items():
            lines.append(f"check {name}: {'pass' if ok else 'FAIL'}")
    if "analysis" in report:
        an = report["analysis"]
        for key in ("semisimple", "solvable", "nilpotent", "abelian"):
            lines.append(f"{key}: {str(an[key]).lower()}")
        lines.append(f"killing determinant: {an['killing_determinant']}")
    if "invariants_dim" in report:
        lines.append(f"invariants dim: {report['invariants_dim']}")
    if "cohomology" in report:
        co = report["cohomology"]
        lines.append(f"lie algebra dim: {co['lie_dim']}")
        lines.append(f"d^2 = 0 up to degree {co['max_degree']}: {'pass' if co['d_squared_zero'] else 'FAIL'}")
        lines.append(f"{'p':>3} {'dim C^p':>8} {'rank d':>7} {'dim ker':>8} {'dim H^p':>8}")
        for row in co["table"]:
            lines.append(
                f"{row['degree']:>3} {row['cochain_dim']:>8} {row['rank']:>7} "
                f"{row['kernel_dim']:>8} {row['h_dim']:>8}"
            )
    if "subspace" in report:
        sub = report["subspace"]
        lines.append(f"subspace dim: {sub['dim']}")
        lines.append(f"{sub['query']}: {str(sub['result']).lower()}")
        lines.append(f"pushed subspace dim: {sub['pushed_dim']}")
    return "\n".join(lines)


# --- entry point --------------------------------------------------------------

COMMANDS = {
    "check": cmd_check,
    "lie": cmd_lie,
    "cohomology": cmd_cohomology,
    "subspace": cmd_subspace,
}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="algebra JSON file")
    common.add_argument("--builtin", metavar="NAME", help="sl2, heisenberg3, abelian:n,d or simple:n")
    common.add_argument("--json", action="store_true", help="machine-readable report")

    parser = argparse.ArgumentParser(prog="nlie", description="Lie algebras of n-Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="check the fundamental identity")
    sub.add_parser("lie", parents=[common], help="build the quotient Lie algebra")
    p = sub.add_parser("cohomology", parents=[common], help="cohomology dimensions")
    p.add_argument("--max-degree", type=int, default=3, metavar="P")
    p = sub.add_parser("subspace", parents=[common], help="evaluate a predicate on a subspace")
    p.add_argument("--subspace", metavar="FILE")
    p.add_argument("--query", choices=QUERIES, default="stable")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        g = _load(args)
        body, code = COMMANDS[args.command](g, args)
    except UsageError as exc:
        print(f"nlie: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {"command": body.pop("command"), "algebra": _algebra_summary(g, args), **body}
    print(dump(report) if args.json else render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
