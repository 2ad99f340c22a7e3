"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch
from .exact_linear import RatVector, dot, format_rational, parse_rational, vector

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class AffineForm:
    """The function ``p -> <a|p> + mu``.

    Arrangement inputs reject forms with ``a == 0``; the form itself does not,
    so that validation can report which index is at fault.
    """

    a: RatVector
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", vector(self.a))
        object.__setattr__(self, "mu", Fraction(self.mu))

    @property
    def dim(self) -> int:
        return len(self.a)

    def __call__(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.a):
            raise DimensionMismatch(f"point has length {len(point)}, form has {len(self.a)}")
        return dot(self.a, point) + self.mu


def _grlex_key(mono: Monomial):
    return (sum(mono), mono)


@dataclass(frozen=True)
class MultiPoly:
    n_vars: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in self.terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.n_vars:
                raise DimensionMismatch(f"exponent vector {mono} has wrong length for {self.n_vars} variables")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = Fraction(c)
            if c != 0:
                clean[mono] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, n_vars: int) -> MultiPoly:
        return cls(n_vars)

    @classmethod
    def constant(cls, n_vars: int, c) -> MultiPoly:
        return cls(n_vars, {(0,) * n_vars: Fraction(c)})

    @classmethod
    def one(cls, n_vars: int) -> MultiPoly:
        return cls.constant(n_vars, 1)

    @classmethod
    def variable(cls, n_vars: int, i: int) -> MultiPoly:
        mono = [0] * n_vars
        mono[i] = 1
        return cls(n_vars, {tuple(mono): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.n_vars: 1}

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    def __add__(self, other: MultiPoly) -> MultiPoly:
        return poly_add(self, other)

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return poly_add(self, poly_scale(-1, other))

    def __neg__(self) -> MultiPoly:
        return poly_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return poly_mul(self, other)
        return poly_scale(other, self)

    __rmul__ = __mul__

    def __call__(self, point: Sequence[Fraction]) -> Fraction:
        return poly_eval(self, point)

    def __str__(self) -> str:
        return to_text(self)

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(mono), "coefficient": format_rational(c)}
            for mono, c in self.sorted_terms()
        ]


def _check(p: MultiPoly, q: MultiPoly) -> None:
    if p.n_vars != q.n_vars:
        raise DimensionMismatch(f"{p.n_vars} variables vs {q.n_vars}")


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check(p, q)
    out = dict(p.terms)
    for mono, c in q.terms.items():
        out[mono] = out.get(mono, 0) + c
    return MultiPoly(p.n_vars, out)


def poly_scale(c, p: MultiPoly) -> MultiPoly:
    c = Fraction(c)
    if c == 0:
        return MultiPoly(p.n_vars)
    return MultiPoly(p.n_vars, {m: c * v for m, v in p.terms.items()})


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check(p, q)
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            out[mono] = out.get(mono, 0) + c1 * c2
    return MultiPoly(p.n_vars, out)


def poly_eval(p: MultiPoly, point: Sequence[Fraction]) -> Fraction:
    if len(point) != p.n_vars:
        raise DimensionMismatch(f"point has length {len(point)}, polynomial has {p.n_vars} variables")
    point = [Fraction(x) for x in point]
    total = Fraction(0)
    for mono, c in p.terms.items():
        v = c
        for x, e in zip(point, mono):
            if e:
                v *= x**e
        total += v
    return total


def poly_from_form(f: AffineForm) -> MultiPoly:
    n = f.dim
    terms = {}
    for i, ai in enumerate(f.a):
        mono = [0] * n
        mono[i] = 1
        terms[tuple(mono)] = ai
    terms[(0,) * n] = f.mu
    return MultiPoly(n, terms)


def product_of_forms(forms: Iterable[AffineForm], n_vars: int | None = None) -> MultiPoly:
    """Expanded product of the forms; the empty product is 1.

    ``n_vars`` is only needed when ``forms`` may be empty.
    """
    forms = list(forms)
    if n_vars is None:
        if not forms:
            raise DimensionMismatch("n_vars is required for an empty product")
        n_vars = forms[0].dim
    result = MultiPoly.one(n_vars)
    for f in forms:
        if f.dim != n_vars:
            raise DimensionMismatch(f"form of dimension {f.dim} in a {n_vars}-variable product")
        result = poly_mul(result, poly_from_form(f))
    return result


def _monomial_text(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def to_text(p: MultiPoly) -> str:
    """Render as e.g. ``x0^2*x1 - 1/2*x1 + 3``."""
    if p.is_zero():
        return "0"
    out = []
    for k, (mono, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _monomial_text(mono)
        if not body:
            text = format_rational(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{format_rational(mag)}*{body}"
        if k == 0:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def from_json(records: Sequence[Mapping], n_vars: int) -> MultiPoly:
    return MultiPoly(
        n_vars,
        {tuple(r["exponents"]): parse_rational(r["coefficient"]) for r in records},
    )
