from math import comb

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from blockdepth.poly import Poly, Q, add, coeff, mul, rational_str, substitute
from blockdepth.block import p_gen, s_gen

from strategies import polys

z0, z1, z2 = (Poly.var(3, i) for i in range(3))
x0, x1 = Poly.var(2, 0), Poly.var(2, 1)


def test_rationals_are_exact_and_reject_floats():
    assert Q("6/4") == Q(3, 2)
    assert Q(Fraction(1, 3)) * 3 == 1
    assert rational_str(Q(-6, 4)) == "-3/2"
    with pytest.raises(TypeError):
        Q(0.5)


def test_add_examples():
    assert add(x0 ** 2, -(x0 ** 2)).is_zero()
    assert (x0 - x1) ** 2 + (x0 + x1) ** 2 == x0 ** 2 * 2 + x1 ** 2 * 2


def test_mul_examples():
    assert mul(x0 - x1, x0 + x1) == x0 ** 2 - x1 ** 2
    assert x0 * x1 * (x0 - x1) * p_gen(1) == s_gen(1)
    p = p_gen(2)
    assert p * Poly.const(2, 1) == p


def test_substitute_examples():
    assert substitute(x0 * x1, [x1, x0]) == x0 * x1
    assert substitute((x0 - x1) ** 2, [-x0, x1]) == (x0 + x1) ** 2
    p = p_gen(3)
    assert substitute(p, [x0, x1]) == p


def test_coeff_examples():
    assert coeff(x0 ** 2 * 2 + x0 * x1 * 3 + x1 ** 2 * 2, (1, 1)) == 3
    assert coeff(x0 ** 2, (0, 2)) == 0
    assert coeff((x0 - x1) ** 8, (4, 4)) == comb(8, 4) == 70


def test_canonical_form():
    p = Poly(2, {(1, 0): 1, (0, 1): 0})
    assert dict(p.terms) == {(1, 0): 1}
    assert hash(p) == hash(Poly.var(2, 0))
    with pytest.raises(ValueError):
        Poly(2, {(1,): 1})


def test_json_round_trip():
    p = p_gen(2) * Q(3, 7)
    assert Poly.from_json(p.to_json()) == p


@given(polys(3), polys(3), polys(3))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert (a - a).is_zero()


@given(polys(2), polys(2), polys(2), polys(2), polys(2))
def test_substitute_composes(p, a0, a1, b0, b1):
    A = [a0, a1]
    B = [b0, b1]
    AB = [substitute(a, B) for a in A]
    assert substitute(substitute(p, A), B) == substitute(p, AB)


@given(polys(3), polys(3))
def test_coeff_linear(a, b):
    for e in set(a.terms) | set(b.terms):
        assert coeff(a + b, e) == coeff(a, e) + coeff(b, e)


@given(polys(3), st.permutations([0, 1, 2]))
def test_rename_matches_substitute(p, perm):
    assert p.rename(perm, 3) == substitute(p, [Poly.var(3, i) for i in perm])
