"""Input builders and random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from parfrac import AffineForm, ArrangementInput, is_generic
from parfrac.exact_linear import rank


def mk(n, forms):
    return ArrangementInput(n, tuple(AffineForm(tuple(a), mu) for a, mu in forms))


CORPUS = {
    "line": mk(1, [((1,), 0), ((1,), 1)]),
    "triangle": mk(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), -1)]),
    "central": mk(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 0)]),
    "four": mk(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 0), ((1, 0), -1)]),
    "square": mk(1, [((1,), 0), ((1,), 0)]),
}

SMALL_MUS = [Fraction(0), Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-3, 2)]


def random_input(rng: random.Random) -> ArrangementInput:
    """Small spanning input with few distinct constants, so points coincide often."""
    n = rng.choice([1, 2, 3])
    while True:
        m = rng.randint(n, n + 4)
        forms = []
        for _ in range(m):
            if forms and rng.random() < 0.15:
                forms.append(rng.choice(forms))
                continue
            while True:
                a = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
                if any(a):
                    break
            forms.append(AffineForm(a, rng.choice(SMALL_MUS)))
        if rank([f.a for f in forms]) == n:
            return ArrangementInput(n, tuple(forms))


def random_generic_input(rng: random.Random) -> ArrangementInput:
    n = rng.choice([1, 2, 3])
    while True:
        m = rng.randint(n, n + 3)
        forms = []
        for _ in range(m):
            while True:
                a = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
                if any(a):
                    break
            forms.append(AffineForm(a, Fraction(rng.randint(-50, 50), rng.randint(1, 7))))
        inp = ArrangementInput(n, tuple(forms))
        if rank([f.a for f in forms]) == n and is_generic(inp).generic:
            return inp


def random_inputs(count: int, seed: int):
    rng = random.Random(seed)
    return [random_input(rng) for _ in range(count)]


def sym_form(f, xs):
    return sum(sympy.Rational(c.numerator, c.denominator) * x for c, x in zip(f.a, xs)) + sympy.Rational(
        f.mu.numerator, f.mu.denominator
    )


def sympy_residual(d):
    """Independent oracle: ``sum c_l prod_l 1/f - prod_X 1/f`` simplified by sympy."""
    inp = d.input
    xs = sympy.symbols(f"x0:{inp.n}")
    fs = [sym_form(f, xs) for f in inp.forms]
    lhs = sympy.Mul(*[1 / f for f in fs])
    rhs = sum(
        sympy.Rational(t.coeff.numerator, t.coeff.denominator) * sympy.Mul(*[1 / fs[i] for i in t.ell])
        for t in d.terms
    )
    return sympy.cancel(sympy.together(rhs - lhs))
