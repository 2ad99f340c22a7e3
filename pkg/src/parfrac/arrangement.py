"""Points of an affine hyperplane arrangement and their spanning subsets.

A point of the arrangement is a rational ``p`` at which the vanishing forms
span the whole space.  Forms are addressed by their position in the input
list, so repeated forms are distinct members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .errors import BadDimension, NotSpanning, SchemaError, SingularSystem, SubsetExplosion, ZeroVectorForm
from .exact_linear import RatVector, format_rational, parse_rational, rank, solve_point
from .multipoly import AffineForm

IndexSet = tuple[int, ...]

DEFAULT_MAX_XP = 20


@dataclass(frozen=True)
class ArrangementInput:
    n: int
    forms: tuple[AffineForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))

    @property
    def m(self) -> int:
        return len(self.forms)

    def vectors(self, idx: Sequence[int] | None = None) -> list[RatVector]:
        if idx is None:
            return [f.a for f in self.forms]
        return [self.forms[i].a for i in idx]

    def spans(self, idx: Sequence[int]) -> bool:
        return len(idx) >= self.n and rank(self.vectors(idx)) == self.n

    def vanishing(self, point: Sequence[Fraction]) -> IndexSet:
        return tuple(i for i, f in enumerate(self.forms) if f(point) == 0)

    def to_json(self) -> dict:
        return {
            "dimension": self.n,
            "forms": [
                {"vector": [format_rational(x) for x in f.a], "mu": format_rational(f.mu)}
                for f in self.forms
            ],
        }


@dataclass(frozen=True)
class ArrangementPoint:
    coords: RatVector
    xp: IndexSet

    def to_json(self) -> dict:
        return {"coords": [format_rational(x) for x in self.coords], "xp": list(self.xp)}


@dataclass(frozen=True)
class GenericityReport:
    generic: bool
    # A point whose X_p is larger than a basis, if any.
    witness_point: ArrangementPoint | None = None
    # Two distinct bases with the same common zero, if any.
    witness_bases: tuple[IndexSet, IndexSet] | None = None
    points: tuple[ArrangementPoint, ...] = field(default=(), repr=False)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"generic": self.generic}
        if self.witness_point is not None:
            out["witness_point"] = self.witness_point.to_json()
        if self.witness_bases is not None:
            out["witness_bases"] = [list(b) for b in self.witness_bases]
        return out


def parse_input(data: Mapping) -> ArrangementInput:
    """Build an input from the ``{"dimension": n, "forms": [...]}`` schema.

    Only the schema is checked here; call :func:`validate` for the rest.
    """
    if not isinstance(data, Mapping):
        raise SchemaError("input must be a JSON object")
    if "dimension" not in data or "forms" not in data:
        raise SchemaError("input needs 'dimension' and 'forms'")
    n = data["dimension"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("'dimension' must be an integer")
    raw = data["forms"]
    if not isinstance(raw, list):
        raise SchemaError("'forms' must be a list")
    forms = []
    for i, f in enumerate(raw):
        if not isinstance(f, Mapping) or "vector" not in f or "mu" not in f:
            raise SchemaError(f"form {i}: expected an object with 'vector' and 'mu'")
        vec = f["vector"]
        if not isinstance(vec, list) or len(vec) != n:
            raise SchemaError(f"form {i}: 'vector' must be a list of {n} rationals")
        try:
            forms.append(AffineForm(tuple(parse_rational(x) for x in vec), parse_rational(f["mu"])))
        except SchemaError as exc:
            raise SchemaError(f"form {i}: {exc}") from None
    return ArrangementInput(n, tuple(forms))


def validate(inp: ArrangementInput) -> ArrangementInput:
    if inp.n < 1:
        raise BadDimension(f"dimension must be at least 1, got {inp.n}")
    if inp.m < inp.n:
        raise BadDimension(f"need at least {inp.n} forms, got {inp.m}")
    for i, f in enumerate(inp.forms):
        if f.dim != inp.n:
            raise BadDimension(f"form {i} has dimension {f.dim}, expected {inp.n}")
        if all(x == 0 for x in f.a):
            raise ZeroVectorForm(i)
    r = rank(inp.vectors())
    if r < inp.n:
        raise NotSpanning(f"forms do not span: rank {r} < dimension {inp.n}", rank=r)
    return inp


def _solved_bases(inp: ArrangementInput):
    """Yield ``(basis, point)`` for every independent size-n index subset."""
    for basis in itertools.combinations(range(inp.m), inp.n):
        try:
            p = solve_point([inp.forms[i] for i in basis])
        except SingularSystem:
            continue
        yield basis, p


def enumerate_points(inp: ArrangementInput) -> list[ArrangementPoint]:
    """All points of the arrangement, sorted by coordinates."""
    seen: set[RatVector] = set()
    for _, p in _solved_bases(inp):
        seen.add(p)
    return [ArrangementPoint(p, inp.vanishing(p)) for p in sorted(seen)]


def spanning_subsets(inp: ArrangementInput, point: ArrangementPoint, max_xp: int = DEFAULT_MAX_XP) -> list[IndexSet]:
    """Subsets of ``point.xp`` whose vectors span, by size then lexicographically."""
    xp = point.xp
    if len(xp) > max_xp:
        raise SubsetExplosion(len(xp), max_xp)
    out = []
    for size in range(inp.n, len(xp) + 1):
        for sub in itertools.combinations(xp, size):
            if inp.spans(sub):
                out.append(sub)
    return out


def is_generic(inp: ArrangementInput) -> GenericityReport:
    first_basis: dict[RatVector, IndexSet] = {}
    shared = None
    for basis, p in _solved_bases(inp):
        if p in first_basis:
            if shared is None:
                shared = (first_basis[p], basis)
        else:
            first_basis[p] = basis
    points = tuple(ArrangementPoint(p, inp.vanishing(p)) for p in sorted(first_basis))
    big = next((pt for pt in points if len(pt.xp) > inp.n), None)
    return GenericityReport(
        generic=big is None and shared is None,
        witness_point=big,
        witness_bases=shared,
        points=points,
    )
