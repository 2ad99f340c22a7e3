"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence

from .arrangement import (
    DEFAULT_MAX_XP,
    ArrangementInput,
    enumerate_points,
    is_generic,
    parse_input,
    spanning_subsets,
    validate,
)
from .decomposer import (
    DEFAULT_STRATEGY,
    STRATEGIES,
    Decomposition,
    decompose,
    decomposition_from_json,
    point_polynomials,
)
from .errors import InternalError, InvalidInput, SubsetExplosion
from .exact_linear import format_rational
from .multipoly import poly_from_form, to_text
from .verifier import (
    report_passed,
    spot_check,
    verify_identity,
    verify_point_form,
    verify_residues,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_input(path: str) -> ArrangementInput:
    return validate(parse_input(_load_json(path)))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _coords_text(coords) -> str:
    return "(" + ", ".join(format_rational(x) for x in coords) + ")"


def _set_text(idx) -> str:
    return "{" + ", ".join(str(i) for i in idx) + "}"


def _factor_text(inp: ArrangementInput, i: int, power: int) -> str:
    poly = poly_from_form(inp.forms[i])
    body = to_text(poly)
    if power == 1:
        return body
    if len(poly.terms) > 1 or body.startswith("-"):
        body = f"({body})"
    return f"{body}^{power}"


def _term_text(inp: ArrangementInput, ell, coeff) -> tuple[str, str]:
    # Equal forms at different indices are shown as one power.
    counts: Counter = Counter()
    first: dict = {}
    for i in ell:
        f = inp.forms[i]
        key = (f.a, f.mu)
        counts[key] += 1
        first.setdefault(key, i)
    factors = [_factor_text(inp, first[k], counts[k]) for k in sorted(counts, key=first.get)]
    if len(factors) == 1:
        denom = f"({factors[0]})"
    else:
        wrapped = [f if " " not in f else f"({f})" for f in factors]
        denom = "(" + "*".join(wrapped) + ")"
    mag = abs(coeff)
    num = "1" if mag == 1 else f"({format_rational(mag)})"
    return ("-" if coeff < 0 else "+"), f"{num}/{denom}"


def render_expansion(d: Decomposition) -> str:
    pieces = []
    for t in sorted(d.terms, key=lambda t: (t.ell, t.point_index)):
        sign, body = _term_text(d.input, t.ell, t.coeff)
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces) or "0"


def _points_text(points, subsets=None) -> list[str]:
    lines = []
    for k, pt in enumerate(points):
        line = f"p{k} = {_coords_text(pt.coords)}  X_p = {_set_text(pt.xp)}"
        lines.append(line)
        if subsets is not None:
            lines.append("    L(X_p): " + " ".join(_set_text(s) for s in subsets[k]))
    return lines


def _report_text(report: dict, details: Sequence[str]) -> list[str]:
    lines = ["verification:"]
    for key in ("identity", "residues", "point_form"):
        lines.append(f"  {key}: {'pass' if report[key] else 'FAIL'}")
    spot = report["spot_check"]
    lines.append(f"  spot_check: {spot['trials']} trials, {spot['failures']} failures")
    lines.extend(f"  {d}" for d in details)
    return lines


def _verify(d: Decomposition, trials: int, seed: int) -> tuple[dict, list[str]]:
    cps = point_polynomials(d)
    checks = {
        "identity": verify_identity(d),
        "residues": verify_residues(d),
        "point_form": verify_point_form(cps, d.input),
    }
    spot = spot_check(d, trials, seed)
    report = {k: c.ok for k, c in checks.items()}
    report["spot_check"] = {"trials": spot.trials, "failures": spot.failures}
    details = [f"{k}: {c.detail}" for k, c in checks.items() if not c.ok and c.detail]
    return report, details


def _check_xp_cap(points, cap: int) -> None:
    for pt in points:
        if len(pt.xp) > cap:
            raise SubsetExplosion(len(pt.xp), cap)


def cmd_points(args) -> int:
    inp = load_input(args.input)
    points = enumerate_points(inp)
    subsets = None
    if args.subsets:
        subsets = [spanning_subsets(inp, pt, args.max_xp) for pt in points]
    if args.format == "json":
        records = [pt.to_json() for pt in points]
        if subsets is not None:
            for rec, subs in zip(records, subsets):
                rec["spanning_subsets"] = [list(s) for s in subs]
        sys.stdout.write(_dump({"points": records}))
    else:
        sys.stdout.write("\n".join(_points_text(points, subsets)) + "\n")
    return EXIT_OK


def cmd_decompose(args) -> int:
    inp = load_input(args.input)
    _check_xp_cap(enumerate_points(inp), args.max_xp)
    d = decompose(inp, args.strategy)
    cps = point_polynomials(d)
    report = details = None
    if args.verify:
        report, details = _verify(d, args.trials, args.seed)
    if args.format == "json":
        out = d.to_json()
        out["point_polynomials"] = [pp.to_json() for pp in cps]
        if report is not None:
            out["verification"] = report
        sys.stdout.write(_dump(out))
    else:
        lines = [f"strategy: {d.strategy}", "points:"]
        lines += ["  " + s for s in _points_text(d.points)]
        lines.append("expansion:")
        lines.append("  " + render_expansion(d))
        lines.append("terms:")
        for t in d.terms:
            lines.append(f"  p{t.point_index}  ell = {_set_text(t.ell)}  coeff = {format_rational(t.coeff)}")
        lines.append("point polynomials:")
        for pp in cps:
            lines.append(f"  C_p{pp.point_index} = {to_text(pp.cp)}")
        if report is not None:
            lines += _report_text(report, details)
        sys.stdout.write("\n".join(lines) + "\n")
    if report is not None and not report_passed(report):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    inp = load_input(args.input)
    d = decomposition_from_json(_load_json(args.decomposition), inp)
    report, details = _verify(d, args.trials, args.seed)
    if args.format == "json":
        out = dict(report)
        if details:
            out["failures"] = details
        sys.stdout.write(_dump(out))
    else:
        sys.stdout.write("\n".join(_report_text(report, details)) + "\n")
    return EXIT_OK if report_passed(report) else EXIT_VERIFY_FAILED


def cmd_generic(args) -> int:
    inp = load_input(args.input)
    rep = is_generic(inp)
    if args.format == "json":
        sys.stdout.write(_dump(rep.to_json()))
    else:
        lines = [f"generic={'true' if rep.generic else 'false'}"]
        if rep.witness_point is not None:
            pt = rep.witness_point
            lines.append(
                f"witness: point {_coords_text(pt.coords)} has |X_p| = {len(pt.xp)} > {inp.n}, X_p = {_set_text(pt.xp)}"
            )
        if rep.witness_bases is not None:
            b1, b2 = rep.witness_bases
            lines.append(f"witness: bases {_set_text(b1)} and {_set_text(b2)} share a point")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parfrac",
        description="Exact partial fractions of products of affine-linear reciprocals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="arrangement JSON file")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("points", help="list the points of the arrangement")
    common(p)
    p.add_argument("--subsets", action="store_true", help="also list the spanning subsets of each X_p")
    p.add_argument("--max-xp", type=int, default=DEFAULT_MAX_XP)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("decompose", help="decompose the product of reciprocals")
    common(p)
    p.add_argument("--strategy", choices=sorted(STRATEGIES), default=DEFAULT_STRATEGY)
    p.add_argument("--verify", action="store_true", help="run the exact verification oracles")
    p.add_argument("--seed", type=int, default=0, help="seed for the spot check")
    p.add_argument("--trials", type=int, default=100, help="spot-check sample count")
    p.add_argument("--max-xp", type=int, default=DEFAULT_MAX_XP)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="re-verify a saved decomposition")
    p.add_argument("decomposition", help="decomposition JSON written by 'decompose --format json'")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generic", help="report whether the arrangement is generic")
    common(p)
    p.set_defaults(func=cmd_generic)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, SubsetExplosion) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
