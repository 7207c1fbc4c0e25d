"""Truncated bivariate generating series and Broadhurst-Kreimer style predictions.

``s`` tracks weight and ``t`` tracks Lie (or depth) degree.  A series of the
form ``1 / (1 - A(s) t + sum_r B_r(s) t^r)`` is read as the Hilbert series of a
universal enveloping algebra; :func:`lie_dimensions` recovers the Lie algebra
dimensions by peeling off the PBW factors ``(1 - s^N t^r)^(-d)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from gmpy2 import mpq

from .lie import witt_count
from .poly import ZERO, Q, Rational, Scalar, rational_str

DEFAULT_S_MAX = 34
DEFAULT_T_MAX = 5


class Series2:
    """Exact bivariate series ``sum c[N][r] s^N t^r`` truncated at ``N <= s_max``, ``r <= t_max``."""

    __slots__ = ("s_max", "t_max", "c")

    def __init__(self, s_max: int, t_max: int, coeffs: Optional[Mapping[Tuple[int, int], Scalar]] = None):
        if s_max < 0 or t_max < 0:
            raise ValueError("truncation orders must be nonnegative")
        self.s_max, self.t_max = s_max, t_max
        self.c: List[List[Rational]] = [[ZERO] * (t_max + 1) for _ in range(s_max + 1)]
        for (N, r), v in (coeffs or {}).items():
            if 0 <= N <= s_max and 0 <= r <= t_max:
                self.c[N][r] = Q(v)

    @classmethod
    def one(cls, s_max: int, t_max: int) -> "Series2":
        return cls(s_max, t_max, {(0, 0): 1})

    @classmethod
    def from_univariate(cls, a: Sequence[Scalar], t_power: int, s_max: int, t_max: int) -> "Series2":
        """``A(s) t^k`` from the coefficient list of ``A``."""
        return cls(s_max, t_max, {(N, t_power): v for N, v in enumerate(a) if Q(v)})

    def __getitem__(self, key: Tuple[int, int]) -> Rational:
        N, r = key
        return self.c[N][r]

    def _like(self, other: "Series2") -> Tuple[int, int]:
        return min(self.s_max, other.s_max), min(self.t_max, other.t_max)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        S, T = self._like(other)
        return all(self.c[N][r] == other.c[N][r] for N in range(S + 1) for r in range(T + 1))

    def __add__(self, other: "Series2") -> "Series2":
        S, T = self._like(other)
        return Series2(S, T, {(N, r): self.c[N][r] + other.c[N][r] for N in range(S + 1) for r in range(T + 1)})

    def __neg__(self) -> "Series2":
        return self.scale(-1)

    def __sub__(self, other: "Series2") -> "Series2":
        return self + (-other)

    def scale(self, k: Scalar) -> "Series2":
        k = Q(k)
        return Series2(self.s_max, self.t_max, {(N, r): k * v for N, row in enumerate(self.c) for r, v in enumerate(row)})

    def __mul__(self, other: "Series2") -> "Series2":
        S, T = self._like(other)
        out = [[ZERO] * (T + 1) for _ in range(S + 1)]
        b = [(N, r, v) for N in range(S + 1) for r in range(T + 1) if (v := other.c[N][r])]
        for N1 in range(S + 1):
            for r1 in range(T + 1):
                a = self.c[N1][r1]
                if not a:
                    continue
                for N2, r2, v in b:
                    if N1 + N2 <= S and r1 + r2 <= T:
                        out[N1 + N2][r1 + r2] += a * v
        res = Series2(S, T)
        res.c = out
        return res

    def reciprocal(self) -> "Series2":
        """Inverse of a series with constant term 1 (any nonzero constant is accepted)."""
        c0 = self.c[0][0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        S, T = self.s_max, self.t_max
        inv = [[ZERO] * (T + 1) for _ in range(S + 1)]
        terms = [(N, r, v) for N in range(S + 1) for r in range(T + 1) if (v := self.c[N][r]) and (N, r) != (0, 0)]
        for r in range(T + 1):
            for N in range(S + 1):
                acc = mpq(1) if (N, r) == (0, 0) else ZERO
                for N2, r2, v in terms:
                    if N2 <= N and r2 <= r:
                        acc -= v * inv[N - N2][r - r2]
                inv[N][r] = acc / c0
        res = Series2(S, T)
        res.c = inv
        return res

    def table(self) -> List[List[Rational]]:
        return [list(row) for row in self.c]


# -- the two basic univariate series -------------------------------------------


def odd_series(s_max: int) -> List[int]:
    """``O(s) = s^3 / (1 - s^2)``."""
    return [1 if N >= 3 and N % 2 else 0 for N in range(s_max + 1)]


def cusp_series(s_max: int) -> List[int]:
    """``S(s) = s^12 / ((1 - s^4)(1 - s^6))``."""
    out = [0] * (s_max + 1)
    for i in range(0, s_max + 1, 4):
        for j in range(0, s_max + 1 - i, 6):
            if 12 + i + j <= s_max:
                out[12 + i + j] += 1
    return out


def general_bk_series(
    A: Sequence[Scalar], B: Mapping[int, Sequence[Scalar]], s_max: int, t_max: int
) -> Series2:
    """``1 / (1 - A(s) t + sum_r B_r(s) t^r)``."""
    if A and Q(A[0]):
        raise ValueError("A(0) must vanish so that the denominator has unit constant term")
    den = Series2.one(s_max, t_max) - Series2.from_univariate(A, 1, s_max, t_max)
    for r, Br in B.items():
        if r < 1:
            raise ValueError(f"B_r is only defined for r >= 1, got r={r}")
        if Br and Q(Br[0]):
            raise ValueError(f"B_{r}(0) must vanish so that the denominator has unit constant term")
        den = den + Series2.from_univariate(Br, r, s_max, t_max)
    return den.reciprocal()


def general_bk_table(A, B, s_max: int = DEFAULT_S_MAX, t_max: int = DEFAULT_T_MAX) -> List[List[Rational]]:
    return general_bk_series(A, B, s_max, t_max).table()


def uneven_bk_series(s_max: int = DEFAULT_S_MAX, t_max: int = DEFAULT_T_MAX) -> Series2:
    return general_bk_series(odd_series(s_max), {2: cusp_series(s_max)}, s_max, t_max)


def uneven_bk_table(s_max: int = DEFAULT_S_MAX, t_max: int = DEFAULT_T_MAX) -> List[List[int]]:
    """Integer coefficient table ``[N][r]`` of ``1 / (1 - O(s) t + S(s) t^2)``."""
    out = []
    for row in uneven_bk_series(s_max, t_max).table():
        assert all(v.denominator == 1 for v in row)
        out.append([int(v) for v in row])
    return out


# -- Lie dimensions -------------------------------------------------------------


def _binomial(d: int, j: int) -> int:
    """Generalised binomial coefficient ``C(d, j)`` for any integer ``d``."""
    num, den = 1, 1
    for i in range(j):
        num *= d - i
        den *= i + 1
    return num // den


def lie_dimensions(H: Series2) -> Dict[Tuple[int, int], int]:
    """Dimensions ``d[N, r]`` (``r >= 1``) with ``H = prod (1 - s^N t^r)^(-d[N, r])``.

    Factors are removed in order of increasing ``(r, N)``; each one leaves all
    earlier coefficients untouched, so the coefficient met at ``(N, r)`` is
    exactly the dimension there.
    """
    S, T = H.s_max, H.t_max
    if H[0, 0] != 1 or any(H[N, 0] for N in range(1, S + 1)):
        raise ValueError("expected a series with constant term 1 and no pure s terms")
    cur = H
    dims: Dict[Tuple[int, int], int] = {}
    for r in range(1, T + 1):
        for N in range(S + 1):
            d = cur[N, r]
            if d.denominator != 1:
                raise ValueError(f"non-integral dimension {d} at ({N}, {r})")
            d = int(d)
            dims[(N, r)] = d
            if d:
                factor = {(j * N, j * r): _binomial(d, j) * (-1) ** j for j in range(T // r + 1)}
                cur = cur * Series2(S, T, factor)
    return dims


def free_lie_dimension(weight: int, degree: int) -> int:
    return witt_count(weight, degree)


def uneven_bk_lie_dimension(weight: int, degree: int, s_max: Optional[int] = None, t_max: Optional[int] = None) -> int:
    H = uneven_bk_series(s_max or max(weight, 1), t_max or max(degree, 1))
    return lie_dimensions(H)[(weight, degree)]


# -- comparison -------------------------------------------------------------------


@dataclass(frozen=True)
class DimensionRow:
    weight: int
    degree: int
    predicted: int
    computed: int

    @property
    def mismatch(self) -> int:
        return self.computed - self.predicted


def predicted_dimensions(algebra: str, s_max: int, degree_max: int) -> Dict[Tuple[int, int], int]:
    """Free-Lie counts for ``block``; uneven Broadhurst-Kreimer Lie dimensions for ``even`` and ``depth``."""
    if algebra == "block":
        return {(W, r): witt_count(W, r) for W in range(s_max + 1) for r in range(1, degree_max + 1)}
    if algebra in ("even", "depth"):
        return lie_dimensions(uneven_bk_series(s_max, degree_max))
    raise ValueError(f"unknown algebra {algebra!r}")


def compare_dimensions(
    algebra: str,
    s_max: int = DEFAULT_S_MAX,
    degree_max: int = 3,
    rank_of: Optional[Callable[[str, int, int], int]] = None,
    weights: Optional[Sequence[int]] = None,
) -> List[DimensionRow]:
    """Computed component ranks against predicted Lie dimensions for every ``(weight, degree)``."""
    if rank_of is None:
        from .cache import component_rank as rank_of
    pred = predicted_dimensions(algebra, s_max, degree_max)
    rows = []
    for r in range(1, degree_max + 1):
        for W in weights if weights is not None else range(s_max + 1):
            if W > s_max:
                continue
            rows.append(DimensionRow(W, r, pred[(W, r)], rank_of(algebra, W, r)))
    return rows


def rows_to_csv(rows: Sequence[DimensionRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "degree", "predicted", "computed", "mismatch"])
    for row in rows:
        w.writerow([row.weight, row.degree, row.predicted, row.computed, row.mismatch])
    return buf.getvalue()


def table_to_csv(table: Sequence[Sequence[Scalar]]) -> str:
    """``weight`` rows by ``degree`` columns."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    ncols = len(table[0]) if table else 0
    w.writerow(["weight"] + [f"r={r}" for r in range(ncols)])
    for N, row in enumerate(table):
        w.writerow([N] + [rational_str(Q(v)) for v in row])
    return buf.getvalue()
