from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from parfrac.errors import NotSpanning, SchemaError, SingularSystem
from parfrac.exact_linear import (
    express,
    extract_spanning_basis,
    format_rational,
    matrix,
    parse_rational,
    rank,
    solve_point,
    vector,
)
from parfrac.multipoly import AffineForm

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0], [0, 1]], 2),
        ([[1, 0], [0, 1], [1, 1]], 2),
        ([[0]], 0),
    ],
)
def test_rank_examples(rows, expected):
    assert rank(matrix(rows)) == expected


@given(matrices())
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


@given(matrices(), st.randoms(use_true_random=False), st.lists(small.filter(bool), min_size=4, max_size=4))
def test_rank_invariant_under_permutation_and_scaling(rows, rnd, scales):
    perm = list(rows)
    rnd.shuffle(perm)
    scaled = [[s * x for x in r] for r, s in zip(perm, scales)]
    assert rank(scaled) == rank(rows)


@pytest.mark.parametrize(
    "vecs, expected",
    [
        ([(1, 0), (0, 1), (1, 1)], (0, 1)),
        ([(1, 1), (2, 2), (0, 1)], (0, 2)),
    ],
)
def test_extract_spanning_basis(vecs, expected):
    vs = [vector(v) for v in vecs]
    assert extract_spanning_basis(vs, 2) == expected
    assert extract_spanning_basis(vs, 2) == extract_spanning_basis(list(vs), 2)


def test_extract_spanning_basis_not_spanning():
    with pytest.raises(NotSpanning):
        extract_spanning_basis([vector((0, 1))], 2)


@given(matrices(rows=st.integers(1, 6), cols=st.just(3)))
def test_extract_spanning_basis_is_greedy(rows):
    # Brute force: index i is chosen iff it raises the rank of the prefix.
    if rank(rows) < 3:
        with pytest.raises(NotSpanning):
            extract_spanning_basis(rows, 3)
        return
    chosen = []
    for i in range(len(rows)):
        if len(chosen) < 3 and rank([rows[j] for j in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
    assert extract_spanning_basis(rows, 3) == tuple(chosen)


@pytest.mark.parametrize(
    "forms, expected",
    [
        ([((1, 0), -1), ((0, 1), -2)], (1, 2)),
        ([((1, 0), 0), ((0, 1), 0)], (0, 0)),
        ([((1, 0), 0), ((1, 1), -1)], (0, 1)),
    ],
)
def test_solve_point(forms, expected):
    fs = [AffineForm(a, mu) for a, mu in forms]
    p = solve_point(fs)
    assert p == vector(expected)
    assert all(f(p) == 0 for f in fs)


def test_solve_point_singular():
    with pytest.raises(SingularSystem):
        solve_point([AffineForm((1, 1), 0), AffineForm((2, 2), 1)])


@given(matrices(rows=st.just(3), cols=st.just(3)), st.lists(small, min_size=3, max_size=3))
def test_solve_point_zeroes_every_form(rows, mus):
    fs = [AffineForm(r, mu) for r, mu in zip(rows, mus)]
    if rank(rows) < 3:
        with pytest.raises(SingularSystem):
            solve_point(fs)
    else:
        p = solve_point(fs)
        assert all(f(p) == 0 for f in fs)


@pytest.mark.parametrize(
    "z, basis, expected",
    [
        ((1, 1), [(1, 0), (0, 1)], (1, 1)),
        ((1, 0), [(1, 1), (0, 1)], (1, -1)),
        ((0, 0), [(2, 1), (1, 3)], (0, 0)),
    ],
)
def test_express(z, basis, expected):
    assert express(vector(z), matrix(basis)) == vector(expected)


def test_express_dependent_basis():
    with pytest.raises(SingularSystem):
        express(vector((1, 0)), matrix([(1, 1), (2, 2)]))


@given(matrices(rows=st.just(3), cols=st.just(3)), st.lists(small, min_size=3, max_size=3))
def test_express_reconstructs(basis, z):
    if rank(basis) < 3:
        return
    d = express(z, basis)
    assert tuple(sum(d[i] * basis[i][j] for i in range(3)) for j in range(3)) == tuple(z)


@pytest.mark.parametrize("text, value", [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), ("6/-", None), ("4/8", Fraction(1, 2))])
def test_parse_rational(text, value):
    if value is None:
        with pytest.raises(SchemaError):
            parse_rational(text)
    else:
        assert parse_rational(text) == value


@pytest.mark.parametrize("bad", [0.5, "1/0", "x", None, True])
def test_parse_rational_rejects(bad):
    with pytest.raises(SchemaError):
        parse_rational(bad)


@given(small)
def test_rational_text_round_trip(x):
    s = format_rational(x)
    assert parse_rational(s) == x
    assert "/" not in s or not s.endswith("/1")
