"""Exact rational scalars, vectors and the small amount of linear algebra we need.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are tuples of row vectors.  Everything is immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import NotSpanning, SchemaError, SingularSystem

Rational = Fraction
RatVector = tuple[Fraction, ...]
RatMatrix = tuple[RatVector, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str | int) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.  Integers are accepted, floats are not."""
    if isinstance(text, bool):
        raise SchemaError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise SchemaError(f"rationals must be strings like '3/4', got {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise SchemaError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise SchemaError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vector(values: Sequence) -> RatVector:
    return tuple(Fraction(v) for v in values)


def matrix(rows: Sequence[Sequence]) -> RatMatrix:
    return tuple(vector(r) for r in rows)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _echelon(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    # Gauss-Jordan with the first nonzero entry (in row order) as pivot.
    work = [list(map(Fraction, r)) for r in rows]
    if not work:
        return work, []
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, pivots


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over the rationals."""
    return len(_echelon(m)[1])


def extract_spanning_basis(vectors: Sequence[Sequence[Fraction]], n: int) -> tuple[int, ...]:
    """Greedy lowest-index choice of ``n`` independent vectors.

    Scans in order and keeps a vector whenever it raises the rank, so the
    result is the lexicographically first basis among the inputs.
    """
    chosen: list[int] = []
    # Incremental echelon basis: list of (pivot column, normalized row).
    reduced: list[tuple[int, list[Fraction]]] = []
    for idx, v in enumerate(vectors):
        row = [Fraction(x) for x in v]
        for pc, prow in reduced:
            if row[pc] != 0:
                f = row[pc]
                row = [x - f * y for x, y in zip(row, prow)]
        pc = next((j for j, x in enumerate(row) if x != 0), None)
        if pc is None:
            continue
        inv = 1 / row[pc]
        reduced.append((pc, [x * inv for x in row]))
        chosen.append(idx)
        if len(chosen) == n:
            return tuple(chosen)
    raise NotSpanning(rank=len(chosen))


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> RatVector:
    """Solve the square system ``a x = b`` exactly."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise SingularSystem("system is not square")
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    work, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise SingularSystem("dependent vectors")
    return tuple(work[i][n] for i in range(n))


def solve_point(basis_forms) -> RatVector:
    """Unique common zero of ``n`` affine forms with independent vectors."""
    forms = list(basis_forms)
    return solve([f.a for f in forms], [-f.mu for f in forms])


def express(z: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> RatVector:
    """Coordinates ``d`` with ``z == sum(d[i] * basis[i])``."""
    n = len(basis)
    if len(z) != n:
        raise SingularSystem("basis size does not match the dimension")
    transposed = [[basis[j][i] for j in range(n)] for i in range(n)]
    return solve(transposed, list(z))
