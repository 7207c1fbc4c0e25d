import pytest
from hypothesis import given

from blockdepth.depth import (
    DihedralError,
    circ,
    dbracket,
    dbracket_via_dihedral,
    dihedral_check,
    phi,
    sdg_span,
)
from blockdepth.lie import left_normed_words
from blockdepth.poly import Poly, substitute

from strategies import odd_labels


def V(n, i):
    return Poly.var(n, i)


def circ_oracle(f, g):
    """Term-by-term sum with explicit substitutions."""
    r, s = f.nvars - 1, g.nvars - 1
    n = r + s + 1
    z = [V(n, i) for i in range(n)]
    sign = (-1) ** (f.degree() + r)
    out = Poly.zero(n)
    for i in range(s + 1):
        out += substitute(f, z[i : i + r + 1]) * substitute(g, z[: i + 1] + z[i + r + 1 :])
    for i in range(1, s + 1):
        out += substitute(f, z[i : i + r + 1][::-1]) * substitute(g, z[:i] + z[i + r :]) * sign
    return out


def test_phi_examples():
    x0, x1 = V(2, 0), V(2, 1)
    assert phi(1) == x0 ** 2 - x0 * x1 * 2 + x1 ** 2
    assert len(phi(2)) == 5
    for k in range(1, 6):
        assert substitute(phi(k), [x1, x0]) == phi(k)
    with pytest.raises(ValueError):
        phi(0)


def test_circ_examples():
    assert circ(phi(1), phi(2)) == circ_oracle(phi(1), phi(2))
    assert circ(phi(1), phi(2)).degree() == 6
    inner = dbracket(phi(1), phi(2))
    assert circ(phi(3), inner) == circ_oracle(phi(3), inner)
    assert circ(inner, phi(1)) == circ_oracle(inner, phi(1))


def test_dbracket_examples():
    assert dbracket(phi(1), phi(1)).is_zero()
    assert (dbracket(phi(1), phi(4)) - dbracket(phi(2), phi(3)) * 3).is_zero()
    b = dbracket(phi(1), phi(2))
    assert not b.is_zero() and b.is_homogeneous() and b.degree() == 6


def test_dihedral_examples():
    for k in range(1, 5):
        assert dihedral_check(phi(k)) == (True, True)
    assert dihedral_check(dbracket(phi(1), phi(2))) == (True, True)
    assert dihedral_check(V(2, 0) ** 2)[0] is False


def test_dbracket_via_dihedral_examples():
    assert dbracket_via_dihedral(phi(1), phi(4)) == dbracket(phi(1), phi(4))
    g = dbracket(phi(1), phi(2))
    assert dbracket_via_dihedral(phi(1), g) == dbracket(phi(1), g)
    bad = V(3, 0) ** 2 + V(3, 1) ** 2 + V(3, 2) ** 2
    with pytest.raises(DihedralError):
        dbracket_via_dihedral(phi(1), bad)


def test_sdg_span_examples():
    assert [str(w) for w, _ in sdg_span(12, 2)] == ["[3,9]", "[5,7]"]
    [(w, p)] = sdg_span(9, 3, basis="left-normed")
    assert str(w) == "[3,[3,3]]" and p.is_zero()
    assert len(sdg_span(33, 3, basis="left-normed")) == len(left_normed_words(33, 3))


def test_sdg_elements_are_dihedral():
    for W in range(9, 22):
        for _, p in sdg_span(W, 3, basis="left-normed"):
            assert dihedral_check(p) == (True, True)


@given(odd_labels, odd_labels)
def test_antisymmetry(a, b):
    f, g = phi((a - 1) // 2), phi((b - 1) // 2)
    assert dbracket(f, g) == -dbracket(g, f)


@given(odd_labels, odd_labels, odd_labels)
def test_jacobi(a, b, c):
    f, g, h = (phi((x - 1) // 2) for x in (a, b, c))
    total = dbracket(f, dbracket(g, h)) + dbracket(g, dbracket(h, f)) + dbracket(h, dbracket(f, g))
    assert total.is_zero()


@given(odd_labels, odd_labels, odd_labels)
def test_homogeneity_and_via_dihedral(a, b, c):
    f, g, h = (phi((x - 1) // 2) for x in (a, b, c))
    inner = dbracket(g, h)
    outer = dbracket(f, inner)
    if not outer.is_zero():
        assert outer.degree() + 2 == a + b + c - 3 + 2
    assert dbracket_via_dihedral(f, inner) == outer
