"""Exact checks of a decomposition that do not rely on how it was produced.

Only polynomial arithmetic and scalar evaluation are used here; point
membership is recomputed from the coordinates rather than trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import SamplingExhausted
from .multipoly import MultiPoly, product_of_forms

SAMPLE_BOUND = 10**6


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    residual: MultiPoly | None = None
    # Indices of points that failed, for the per-point checks.
    offending: tuple[int, ...] = ()
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SpotCheckResult:
    ok: bool
    trials: int
    failures: int
    samples: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False)

    def __bool__(self):
        return self.ok


def _complement(m: int, ell: Sequence[int]) -> list[int]:
    keep = set(ell)
    return [i for i in range(m) if i not in keep]


def verify_identity(d) -> CheckResult:
    """``sum c_ell * prod_{X \\ ell}(a + mu_a) == 1``."""
    inp = d.input
    total = MultiPoly.zero(inp.n)
    for t in d.terms:
        rest = [inp.forms[i] for i in _complement(inp.m, t.ell)]
        total = total + t.coeff * product_of_forms(rest, inp.n)
    if total.is_one():
        return CheckResult(True)
    residual = total - MultiPoly.one(inp.n)
    return CheckResult(False, residual=residual, detail=f"residual {residual}")


def _xp(inp, coords) -> tuple[int, ...]:
    return tuple(i for i, f in enumerate(inp.forms) if f(coords) == 0)


def verify_residues(d) -> CheckResult:
    """At every point the ``ell = X_p`` coefficient is the product of
    reciprocals of the non-vanishing form values."""
    inp = d.input
    bad = []
    for k, pt in enumerate(d.points):
        xp = _xp(inp, pt.coords)
        if tuple(pt.xp) != xp:
            bad.append(k)
            continue
        expected = Fraction(1)
        for i in _complement(inp.m, xp):
            expected /= inp.forms[i](pt.coords)
        found = [t.coeff for t in d.terms if t.point_index == k and tuple(t.ell) == xp]
        if found != [expected]:
            bad.append(k)
    if bad:
        names = ", ".join(f"#{k} {tuple(str(x) for x in d.points[k].coords)}" for k in bad)
        return CheckResult(False, offending=tuple(bad), detail=f"residue mismatch at {names}")
    return CheckResult(True)


def verify_point_form(cps, inp) -> CheckResult:
    """``sum_p C_p * prod_{X \\ X_p}(a + mu_a) == 1``."""
    total = MultiPoly.zero(inp.n)
    for pp in cps:
        xp = _xp(inp, pp.coords)
        rest = [inp.forms[i] for i in _complement(inp.m, xp)]
        total = total + pp.cp * product_of_forms(rest, inp.n)
    if total.is_one():
        return CheckResult(True)
    residual = total - MultiPoly.one(inp.n)
    return CheckResult(False, residual=residual, detail=f"residual {residual}")


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-SAMPLE_BOUND, SAMPLE_BOUND), rng.randint(1, SAMPLE_BOUND))


def spot_check(d, trials: int = 100, seed: int = 0, max_resamples: int = 1000) -> SpotCheckResult:
    """Compare both sides by exact evaluation at random off-hyperplane points."""
    inp = d.input
    rng = random.Random(seed)
    failures = 0
    samples = []
    for _ in range(trials):
        for _ in range(max_resamples):
            x = tuple(_random_rational(rng) for _ in range(inp.n))
            values = [f(x) for f in inp.forms]
            if all(v != 0 for v in values):
                break
        else:
            raise SamplingExhausted(f"no off-hyperplane sample after {max_resamples} draws")
        samples.append(x)
        lhs = Fraction(1)
        for v in values:
            lhs /= v
        rhs = Fraction(0)
        for t in d.terms:
            c = t.coeff
            for i in t.ell:
                c /= values[i]
            rhs += c
        if lhs != rhs:
            failures += 1
    return SpotCheckResult(failures == 0, trials, failures, tuple(samples))


def verification_report(d, cps, trials: int = 100, seed: int = 0) -> dict:
    spot = spot_check(d, trials, seed)
    return {
        "identity": verify_identity(d).ok,
        "residues": verify_residues(d).ok,
        "point_form": verify_point_form(cps, d.input).ok,
        "spot_check": {"trials": spot.trials, "failures": spot.failures},
    }


def report_passed(report: dict) -> bool:
    return (
        report["identity"]
        and report["residues"]
        and report["point_form"]
        and report["spot_check"]["failures"] == 0
    )
