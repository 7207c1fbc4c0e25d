"""Exact sparse linear algebra over the rationals.

Elimination is plain rational Gauss-Jordan on sparse rows with deterministic
pivoting (smallest column index, then smallest row index).  A fraction-free
Bareiss rank on the integer-scaled dense matrix is kept as an independent
second route.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from gmpy2 import mpq, mpz

from .poly import Q, Rational, Scalar, rational_str

Row = Dict[int, Rational]


@dataclass
class QMatrix:
    nrows: int
    ncols: int
    rows: List[Row] = field(repr=False)

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        for r in self.rows:
            for j, v in r.items():
                if not 0 <= j < self.ncols:
                    raise ValueError(f"column index {j} out of range")
                if not v:
                    raise ValueError("explicit zero entry")

    @classmethod
    def from_rows(cls, rows: Sequence[Row], ncols: int) -> "QMatrix":
        return cls(len(rows), ncols, [{j: Q(v) for j, v in r.items() if v} for r in rows])

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Scalar]]) -> "QMatrix":
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls.from_rows([{j: v for j, v in enumerate(r) if Q(v)} for r in data], ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [{i: mpq(1)} for i in range(n)])

    def to_dense(self) -> List[List[Rational]]:
        out = [[mpq(0)] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self) -> "QMatrix":
        cols: List[Row] = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return QMatrix(self.ncols, self.nrows, cols)

    def entries(self) -> Iterable[Tuple[int, int, Rational]]:
        for i, r in enumerate(self.rows):
            for j in sorted(r):
                yield i, j, r[j]

    def permute_rows(self, order: Sequence[int]) -> "QMatrix":
        return QMatrix(self.nrows, self.ncols, [dict(self.rows[i]) for i in order])

    def left_apply(self, x: Sequence[Scalar]) -> List[Rational]:
        """``x M`` for a row vector ``x``."""
        if len(x) != self.nrows:
            raise ValueError("dimension mismatch")
        out = [mpq(0)] * self.ncols
        for xi, r in zip(x, self.rows):
            xi = Q(xi)
            if xi:
                for j, v in r.items():
                    out[j] += xi * v
        return out

    def apply(self, x: Sequence[Scalar]) -> List[Rational]:
        """``M x`` for a column vector ``x``."""
        if len(x) != self.ncols:
            raise ValueError("dimension mismatch")
        xs = [Q(v) for v in x]
        return [sum((v * xs[j] for j, v in r.items()), mpq(0)) for r in self.rows]

    # -- CSV ----------------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([self.nrows, self.ncols])
        for row in self.to_dense():
            w.writerow([rational_str(v) for v in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "QMatrix":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        nrows, ncols = int(header[0]), int(header[1])
        data = [[Q(cell) for cell in row] for row in reader]
        if len(data) != nrows or any(len(r) != ncols for r in data):
            raise ValueError("CSV shape does not match its header")
        return cls.from_rows([{j: v for j, v in enumerate(r) if v} for r in data], ncols)


def _axpy(target: Row, factor: Rational, source: Row) -> None:
    """``target -= factor * source`` in place, dropping zeros."""
    for j, v in source.items():
        nv = target.get(j, 0) - factor * v
        if nv:
            target[j] = nv
        else:
            target.pop(j, None)


def echelon(rows: Sequence[Row], aux: Optional[Sequence[Row]] = None):
    """Reduced row echelon form with deterministic pivots.

    Returns ``(pivots, reduced, reduced_aux)`` where ``pivots`` lists
    ``(column, original_row_index)`` in pivot order.  ``aux`` rows, if given,
    undergo the same row operations (used to track row combinations).
    """
    work = [dict(r) for r in rows]
    track = [dict(r) for r in aux] if aux is not None else None
    remaining = list(range(len(work)))
    pivots: List[Tuple[int, int]] = []
    done: List[int] = []
    while True:
        best = None
        for i in remaining:
            if work[i]:
                c = min(work[i])
                if best is None or c < best[0]:
                    best = (c, i)
        if best is None:
            break
        col, pi = best
        remaining.remove(pi)
        prow = work[pi]
        inv = 1 / prow[col]
        if inv != 1:
            for j in prow:
                prow[j] *= inv
            if track is not None:
                for j in track[pi]:
                    track[pi][j] *= inv
        for i in range(len(work)):
            if i != pi and col in work[i]:
                f = work[i][col]
                _axpy(work[i], f, prow)
                if track is not None:
                    _axpy(track[i], f, track[pi])
        pivots.append((col, pi))
        done.append(pi)
    return pivots, work, track


def rank(M: QMatrix) -> int:
    pivots, _, _ = echelon(M.rows)
    return len(pivots)


def _canonical_basis(vectors: List[Row], n: int) -> List[List[Rational]]:
    """Reduced echelon basis of the span (first nonzero coordinate 1), ordered by leading index."""
    pivots, work, _ = echelon(vectors)
    basis = [work[i] for _, i in sorted(pivots)]
    return [[v.get(j, mpq(0)) for j in range(n)] for v in basis]


def nullspace(M: QMatrix) -> List[List[Rational]]:
    """Basis of the left kernel ``{x : x M = 0}``, canonically normalised."""
    ident = [{i: mpq(1)} for i in range(M.nrows)]
    pivots, work, track = echelon(M.rows, ident)
    pivot_rows = {i for _, i in pivots}
    kernel = [track[i] for i in range(M.nrows) if i not in pivot_rows]
    return _canonical_basis(kernel, M.nrows)


def right_nullspace(M: QMatrix) -> List[List[Rational]]:
    """Basis of ``{x : M x = 0}``."""
    return nullspace(M.transpose())


@dataclass
class Solution:
    consistent: bool
    x: Optional[List[Rational]]
    pivot_columns: List[int]
    witness_row: Optional[int] = None


def solve(M: QMatrix, b: Sequence[Scalar]) -> Solution:
    """Solve ``M x = b`` exactly; free variables are set to zero.

    An inconsistent system returns ``consistent=False`` together with the
    index of an equation certifying it (a combination of rows of ``M`` that
    vanishes while the same combination of ``b`` does not).
    """
    if len(b) != M.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {M.nrows}")
    aug = [dict(r) for r in M.rows]
    rhs = M.ncols
    for r, v in zip(aug, b):
        v = Q(v)
        if v:
            r[rhs] = v
    pivots, work, _ = echelon(aug)
    x = [mpq(0)] * M.ncols
    cols = []
    for col, i in pivots:
        if col == rhs:
            return Solution(False, None, [], witness_row=i)
        cols.append(col)
        x[col] = work[i].get(rhs, mpq(0))
    return Solution(True, x, sorted(cols))


def bareiss_rank(M: QMatrix) -> int:
    """Rank by fraction-free elimination on rows scaled to integers."""
    dense = M.to_dense()
    mat: List[List[mpz]] = []
    for row in dense:
        den = 1
        for v in row:
            den = den * v.denominator // math.gcd(den, int(v.denominator))
        mat.append([mpz(v * den) for v in row])
    nrows, ncols = M.nrows, M.ncols
    r = 0
    prev = mpz(1)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                mat[i][j] = (mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j]) // prev
            mat[i][c] = mpz(0)
        prev = mat[r][c]
        r += 1
        if r == nrows:
            break
    return r


def in_row_span(v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]]) -> bool:
    n = len(v)
    rows = [{j: Q(x) for j, x in enumerate(b) if Q(x)} for b in basis]
    base = rank(QMatrix.from_rows(rows, n))
    rows.append({j: Q(x) for j, x in enumerate(v) if Q(x)})
    return rank(QMatrix.from_rows(rows, n)) == base
