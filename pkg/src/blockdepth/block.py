"""Reduced block-graded model, the totally even projection and the even algebra.

Block degree ``n`` elements are polynomials in ``z_0 .. z_n``.  Generators are
the reduced polynomials ``p_{2k+1}`` (the block image ``s_{2k+1}`` divided by
``z_0 z_1 (z_0 - z_1)``); the even algebra is generated by
``e_{2k+1} = pi_even(p_{2k+1})`` under the same bracket.
"""

from __future__ import annotations

from itertools import product

from .depth import cyclic_bracket
from .poly import Poly, Q


def _check_k(k: int, name: str) -> None:
    if k < 1:
        raise ValueError(f"{name}_(2k+1) needs k >= 1, got k={k}")


def p_gen(k: int) -> Poly:
    """``((2^{2k+1} - 1)(z_0 + z_1)^{2k} + (z_0 - z_1)^{2k}) / 2^{2k}``."""
    _check_k(k, "p")
    z0, z1 = Poly.var(2, 0), Poly.var(2, 1)
    num = (z0 + z1) ** (2 * k) * (2 ** (2 * k + 1) - 1) + (z0 - z1) ** (2 * k)
    return num.scale(Q(1, 2 ** (2 * k)))


def s_gen(k: int) -> Poly:
    """Unreduced block image ``z_0 z_1 (z_0 - z_1) p_{2k+1}``."""
    _check_k(k, "s")
    z0, z1 = Poly.var(2, 0), Poly.var(2, 1)
    return z0 * z1 * (z0 - z1) * p_gen(k)


def e_gen(k: int) -> Poly:
    """``(z_0 + z_1)^{2k} + (z_0 - z_1)^{2k}``."""
    _check_k(k, "e")
    z0, z1 = Poly.var(2, 0), Poly.var(2, 1)
    return (z0 + z1) ** (2 * k) + (z0 - z1) ** (2 * k)


def bbracket(r: Poly, q: Poly) -> Poly:
    """Block Ihara bracket of a bivariate ``r`` with ``q``; output has ``q.nvars + 1`` variables.

    Indices wrap modulo the number of output variables.
    """
    if r.nvars != 2:
        raise ValueError(f"left argument must be bivariate, got {r.nvars} variables")
    return cyclic_bracket(r, q)


def pi_even(p: Poly) -> Poly:
    """Projection onto the part even in every variable."""
    return p.even_part()


def pi_even_by_signs(p: Poly) -> Poly:
    """Same projection as the average of ``p`` over all ``2^n`` sign flips of the variables."""
    n = p.nvars
    acc = Poly.zero(n)
    for signs in product((1, -1), repeat=n):
        flip = Poly(n, {e: c * _sign(signs, e) for e, c in p.items()})
        acc = acc + flip
    return acc.scale(Q(1, 2 ** n))


def _sign(signs, e) -> int:
    s = 1
    for sg, k in zip(signs, e):
        if sg < 0 and k % 2:
            s = -s
    return s


def divide_by_prefactor_check(full: Poly, reduced: Poly) -> bool:
    """Whether ``full == z_0 ... z_n (z_0 - z_n) * reduced``."""
    n = reduced.nvars
    pre = Poly.const(n, 1)
    for i in range(n):
        pre = pre * Poly.var(n, i)
    pre = pre * (Poly.var(n, 0) - Poly.var(n, n - 1))
    return pre * reduced == full
