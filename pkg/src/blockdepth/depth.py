"""Polynomial model of the depth-graded motivic Lie algebra.

An element of depth ``r`` is a polynomial in ``z_0 .. z_r`` (so ``nvars = r + 1``);
its weight is its total degree plus ``r``.  The generators are
``phi_{2k+1} = (z_0 - z_1)^{2k}`` and the bracket is the antisymmetrisation of
Brown's ``circ`` operation.
"""

from __future__ import annotations

from typing import List, Tuple

from .poly import Poly


class DihedralError(ValueError):
    pass


def depth_of(f: Poly) -> int:
    return f.nvars - 1


def phi(k: int) -> Poly:
    """``phi_{2k+1} = (z_0 - z_1)^{2k}``."""
    if k < 1:
        raise ValueError(f"phi_(2k+1) needs k >= 1, got k={k}")
    return (Poly.var(2, 0) - Poly.var(2, 1)) ** (2 * k)


def circ(f: Poly, g: Poly) -> Poly:
    r, s = depth_of(f), depth_of(g)
    if r < 1 or s < 1:
        raise ValueError("circ needs elements of depth >= 1")
    n = r + s + 1
    out = Poly.zero(n)
    if f.is_zero() or g.is_zero():
        return out
    if not f.is_homogeneous():
        raise ValueError("circ needs a homogeneous left argument")
    sign = -1 if (f.degree() + r) % 2 else 1
    for i in range(s + 1):
        fi = f.rename(list(range(i, i + r + 1)), n)
        gi = g.rename(list(range(0, i + 1)) + list(range(i + r + 1, r + s + 1)), n)
        out = out + fi * gi
    for i in range(1, s + 1):
        fi = f.rename(list(range(i + r, i - 1, -1)), n)
        gi = g.rename(list(range(0, i)) + list(range(i + r, r + s + 1)), n)
        out = out + (fi * gi).scale(sign)
    return out


def dbracket(f: Poly, g: Poly) -> Poly:
    """Depth-graded Ihara bracket ``f o g - g o f``."""
    return circ(f, g) - circ(g, f)


def reversal(f: Poly) -> Poly:
    """``(-1)^(r+1) f(z_r, ..., z_0)``."""
    n = f.nvars
    sign = -1 if n % 2 else 1
    return f.rename(list(range(n - 1, -1, -1)), n).scale(sign)


def rotation(f: Poly) -> Poly:
    """``f(z_1, ..., z_r, z_0)``."""
    n = f.nvars
    return f.rename([(i - 1) % n for i in range(n)], n)


def dihedral_check(f: Poly) -> Tuple[bool, bool]:
    """Whether ``f`` satisfies the reflection and the cyclic symmetry."""
    return reversal(f) == f, rotation(f) == f


def dbracket_via_dihedral(f: Poly, g: Poly) -> Poly:
    """Bracket of a depth-1 ``f`` with a dihedrally symmetric ``g``.

    ``sum_i f(z_i, z_{i+1}) (g(.. omit z_{i+1} ..) - g(.. omit z_i ..))`` with
    indices read cyclically on the ``n`` output variables.
    """
    if f.nvars != 2:
        raise ValueError("the left argument must have depth 1")
    bad = [name for name, ok in zip(("reflection", "rotation"), dihedral_check(g)) if not ok]
    if bad:
        raise DihedralError(f"right argument violates the {' and '.join(bad)} symmetry")
    return cyclic_bracket(f, g)


def cyclic_bracket(r: Poly, q: Poly) -> Poly:
    """``sum_{i=0}^{n} r(z_i, z_{i+1}) (q(omit z_{i+1}) - q(omit z_i))`` on ``n+1`` variables, cyclically."""
    if r.nvars != 2:
        raise ValueError("the left argument must be bivariate")
    n = q.nvars + 1
    out = Poly.zero(n)
    if r.is_zero() or q.is_zero():
        return out
    omit = [q.rename([v for v in range(n) if v != j], n) for j in range(n)]
    for i in range(n):
        j = (i + 1) % n
        diff = omit[j] - omit[i]
        if diff:
            out = out + r.rename([i, j], n) * diff
    return out


def sdg_span(weight: int, degree: int, basis: str = "lyndon") -> List[tuple]:
    """``(word, polynomial)`` for every spanning word of the given weight and Lie degree."""
    from .components import component_polys

    return component_polys("depth", weight, degree, basis)
