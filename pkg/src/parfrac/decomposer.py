"""Partial fractions of ``prod_{a in X} 1/(a + mu_a)`` over arrangement points.

The recursion works on index sublists ``S`` of the input that span the
space.  If the forms of ``S`` share a common zero the product is already a
single term.  Otherwise one removable form ``z`` is taken out, the rest is
decomposed, and ``z`` is folded back into every resulting term: either it
vanishes at that term's point (the term just grows), or the denominators are
separated, which leaves one term at the same point plus smaller products that
are decomposed again.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .arrangement import ArrangementInput, ArrangementPoint, IndexSet, enumerate_points, validate
from .errors import InternalError, NuZero, SchemaError
from .exact_linear import dot, express, extract_spanning_basis, format_rational, parse_rational, solve_point
from .multipoly import AffineForm, MultiPoly, product_of_forms

DEFAULT_STRATEGY = "last-removable"


@dataclass(frozen=True)
class SeparationInstance:
    """Data for ``1/prod(b_i + nu_i)`` with ``b_0 = sum_{i>=1} alpha_i b_i``.

    ``pivot`` is ``b_0 + nu_0`` and ``others`` are the remaining factors.
    ``nu = nu_0 - sum alpha_i nu_i`` is the constant left over by
    ``(b_0 + nu_0) - sum alpha_i (b_i + nu_i)``.
    """

    pivot: AffineForm
    others: tuple[AffineForm, ...]
    alphas: tuple[Fraction, ...]
    nu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "others", tuple(self.others))
        object.__setattr__(self, "alphas", tuple(Fraction(x) for x in self.alphas))
        object.__setattr__(self, "nu", Fraction(self.nu))
        if len(self.alphas) != len(self.others):
            raise ValueError("one alpha per non-pivot factor is required")
        n = self.pivot.dim
        combo = tuple(
            sum((al * f.a[j] for al, f in zip(self.alphas, self.others)), Fraction(0)) for j in range(n)
        )
        if combo != self.pivot.a:
            raise ValueError("pivot vector is not the stated combination of the other vectors")
        if self.nu != self.pivot.mu - dot(self.alphas, [f.mu for f in self.others]):
            raise ValueError("nu does not match the pivot and the other constants")

    @classmethod
    def build(cls, pivot: AffineForm, others: Sequence[AffineForm], alphas: Sequence[Fraction]) -> SeparationInstance:
        alphas = [Fraction(x) for x in alphas]
        nu = pivot.mu - dot(alphas, [f.mu for f in others])
        return cls(pivot, tuple(others), tuple(alphas), nu)


def separate(inst: SeparationInstance) -> list[tuple[Fraction, int]]:
    """Expand ``1/prod`` into products that each miss one factor.

    Returns ``(coefficient, dropped)`` pairs; ``dropped`` is 0 for the pivot
    and ``i`` for ``others[i - 1]``.  Factors with a zero alpha are never
    dropped.
    """
    if inst.nu == 0:
        raise NuZero("separation with nu = 0")
    inv = 1 / inst.nu
    out = [(inv, 0)]
    for i, al in enumerate(inst.alphas, start=1):
        if al != 0:
            out.append((-al * inv, i))
    if len(out) == 1:
        # b_0 = 0 would be needed for this, and forms have nonzero vectors.
        raise InternalError("separation dropped only the pivot")
    return out


@dataclass(frozen=True)
class Term:
    point_index: int
    ell: IndexSet
    coeff: Fraction

    def to_json(self) -> dict:
        return {"point": self.point_index, "ell": list(self.ell), "coeff": format_rational(self.coeff)}


@dataclass(frozen=True)
class Decomposition:
    input: ArrangementInput
    points: tuple[ArrangementPoint, ...]
    terms: tuple[Term, ...]
    strategy: str = DEFAULT_STRATEGY
    # Number of separation steps performed; bookkeeping only.
    separations: int = field(default=0, compare=False)

    def terms_at(self, k: int) -> list[Term]:
        return [t for t in self.terms if t.point_index == k]

    def to_json(self) -> dict:
        return {
            "points": [p.to_json() for p in self.points],
            "terms": [t.to_json() for t in self.terms],
            "strategy": self.strategy,
        }


@dataclass(frozen=True)
class PointPolynomial:
    point_index: int
    cp: MultiPoly
    coords: tuple[Fraction, ...] = ()

    def to_json(self) -> dict:
        return {"point": self.point_index, "cp": self.cp.to_json()}


Strategy = Callable[[ArrangementInput, IndexSet], int]


def _removable(inp: ArrangementInput, s: IndexSet, order) -> int:
    for z in order:
        if inp.spans(tuple(i for i in s if i != z)):
            return z
    raise InternalError(f"no removable form in {s}")


def last_removable(inp: ArrangementInput, s: IndexSet) -> int:
    return _removable(inp, s, reversed(s))


def first_removable(inp: ArrangementInput, s: IndexSet) -> int:
    return _removable(inp, s, s)


STRATEGIES: dict[str, Strategy] = {
    "last-removable": last_removable,
    "first-removable": first_removable,
}


def _common_zero(inp: ArrangementInput, s: IndexSet):
    basis = [s[i] for i in extract_spanning_basis(inp.vectors(s), inp.n)]
    p = solve_point([inp.forms[i] for i in basis])
    if all(inp.forms[i](p) == 0 for i in s):
        return p
    return None


def decompose(inp: ArrangementInput, strategy: str = DEFAULT_STRATEGY) -> Decomposition:
    """Decompose the product of all input forms into arrangement-point terms."""
    validate(inp)
    try:
        pick = STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {sorted(STRATEGIES)}") from None
    separations = 0

    @lru_cache(maxsize=None)
    def sub(s: IndexSet) -> tuple[tuple[tuple, Fraction], ...]:
        nonlocal separations
        p = _common_zero(inp, s)
        if p is not None:
            return (((p, s), Fraction(1)),)
        z = pick(inp, s)
        rest = tuple(i for i in s if i != z)
        if z not in s or not inp.spans(rest):
            raise InternalError(f"strategy {strategy!r} chose {z}, which is not removable from {s}")
        fz = inp.forms[z]
        acc: dict[tuple, Fraction] = defaultdict(Fraction)
        for (q, ell), c in sub(rest):
            value = fz(q)
            if value == 0:
                acc[(q, tuple(sorted(ell + (z,))))] += c
                continue
            basis = [ell[i] for i in extract_spanning_basis(inp.vectors(ell), inp.n)]
            d = express(fz.a, inp.vectors(basis))
            inst = SeparationInstance.build(fz, [inp.forms[i] for i in basis], d)
            separations += 1
            if inst.nu == 0 or inst.nu != value:
                raise NuZero(f"nu = {inst.nu} but the pivot form is {value} at {q}")
            for coeff, dropped in separate(inst):
                if dropped == 0:
                    acc[(q, ell)] += c * coeff
                    continue
                a = basis[dropped - 1]
                smaller = tuple(sorted([i for i in ell if i != a] + [z]))
                for key, c2 in sub(smaller):
                    acc[key] += c * coeff * c2
        return tuple((k, v) for k, v in acc.items() if v != 0)

    points = tuple(enumerate_points(inp))
    where = {pt.coords: k for k, pt in enumerate(points)}
    terms = []
    for (q, ell), c in sub(tuple(range(inp.m))):
        if q not in where:
            raise InternalError(f"term at {q}, which is not a point of the arrangement")
        k = where[q]
        if not set(ell) <= set(points[k].xp) or not inp.spans(ell):
            raise InternalError(f"term {ell} is not a spanning subset of X_p at {q}")
        terms.append(Term(k, ell, c))
    terms.sort(key=lambda t: (t.point_index, len(t.ell), t.ell))
    return Decomposition(inp, points, tuple(terms), strategy, separations)


def residue_coefficient(inp: ArrangementInput, point: ArrangementPoint) -> Fraction:
    """Product of ``1/(<a|p> + mu_a)`` over the forms not vanishing at ``p``."""
    out = Fraction(1)
    for i, f in enumerate(inp.forms):
        if i not in point.xp:
            out /= f(point.coords)
    return out


def point_polynomials(d: Decomposition) -> list[PointPolynomial]:
    """Gather the terms at each point into ``C_p * prod_{X_p} 1/(a + mu_a)``.

    Each term's missing factors ``X_p \\ ell`` move to the numerator.
    """
    inp = d.input
    out = []
    for k, pt in enumerate(d.points):
        cp = MultiPoly.zero(inp.n)
        for t in d.terms_at(k):
            extra = [inp.forms[i] for i in pt.xp if i not in t.ell]
            cp = cp + t.coeff * product_of_forms(extra, inp.n)
        out.append(PointPolynomial(k, cp, pt.coords))
    return out


def decomposition_from_json(data: Mapping, inp: ArrangementInput) -> Decomposition:
    """Read a serialized decomposition of ``inp``; structure is checked, math is not."""
    if not isinstance(data, Mapping) or "points" not in data or "terms" not in data:
        raise SchemaError("decomposition needs 'points' and 'terms'")
    points = []
    for k, raw in enumerate(data["points"]):
        try:
            coords = tuple(parse_rational(x) for x in raw["coords"])
            xp = tuple(int(i) for i in raw["xp"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"point {k}: {exc}") from None
        if len(coords) != inp.n:
            raise SchemaError(f"point {k} has {len(coords)} coordinates, input dimension is {inp.n}")
        if any(not 0 <= i < inp.m for i in xp):
            raise SchemaError(f"point {k}: xp index out of range for {inp.m} forms")
        points.append(ArrangementPoint(coords, xp))
    terms = []
    for j, raw in enumerate(data["terms"]):
        try:
            k = int(raw["point"])
            ell = tuple(int(i) for i in raw["ell"])
            coeff = parse_rational(raw["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"term {j}: {exc}") from None
        if not 0 <= k < len(points):
            raise SchemaError(f"term {j}: point index {k} out of range")
        if any(not 0 <= i < inp.m for i in ell) or list(ell) != sorted(set(ell)):
            raise SchemaError(f"term {j}: ell must be increasing indices below {inp.m}")
        terms.append(Term(k, ell, coeff))
    strategy = data.get("strategy", DEFAULT_STRATEGY)
    return Decomposition(inp, tuple(points), tuple(terms), str(strategy))
