
import pytest
from hypothesis import given, strategies as st

from blockdepth.components import graded_component
from blockdepth.linalg import QMatrix, bareiss_rank, in_row_span, nullspace, rank, right_nullspace, solve
from blockdepth.poly import Q

from strategies import rationals

matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(st.lists(st.sampled_from([0, 0, 1, -1, 2, Q(1, 2), 3]), min_size=m, max_size=m), min_size=n, max_size=n)
    )
).map(QMatrix.from_dense)


def test_rank_examples():
    assert rank(QMatrix.identity(3)) == 3
    assert rank(QMatrix.from_dense([[0, 0], [0, 0]])) == 0
    assert rank(graded_component("even", 12, 2).matrix()) == 1


def test_nullspace_examples():
    assert nullspace(graded_component("even", 12, 2).matrix()) == [[1, -3]]
    assert nullspace(QMatrix.identity(4)) == []
    assert len(nullspace(graded_component("even", 16, 2).matrix())) == 1


def test_solve_examples():
    b = [Q(1, 2), 3, -7]
    sol = solve(QMatrix.identity(3), b)
    assert sol.consistent and sol.x == b
    bad = solve(QMatrix.from_dense([[1, 1], [2, 2]]), [1, 3])
    assert not bad.consistent and bad.x is None


def test_csv_round_trip():
    M = QMatrix.from_dense([[1, Q(-2, 3)], [0, 5]])
    assert QMatrix.from_csv(M.to_csv()) == M
    with pytest.raises(ValueError):
        QMatrix.from_csv("3,2\n1,2\n")


def test_matrix_validation():
    with pytest.raises(ValueError):
        QMatrix(1, 1, [{0: Q(0)}])
    with pytest.raises(ValueError):
        QMatrix(1, 1, [{3: Q(1)}])


@given(matrices)
def test_rank_nullity(M):
    ker = nullspace(M)
    assert rank(M) + len(ker) == M.nrows
    assert bareiss_rank(M) == rank(M)
    for v in ker:
        assert all(x == 0 for x in M.left_apply(v))
        assert next(x for x in v if x) == 1


@given(matrices, st.randoms())
def test_row_permutation_invariance(M, rnd):
    order = list(range(M.nrows))
    rnd.shuffle(order)
    P = M.permute_rows(order)
    assert rank(P) == rank(M)
    ker_m = nullspace(M)
    ker_p = [[v[order.index(i)] for i in range(M.nrows)] for v in nullspace(P)]
    assert len(ker_m) == len(ker_p)
    for v in ker_p:
        assert in_row_span(v, ker_m)


@given(matrices, st.data())
def test_solve_residual(M, data):
    x0 = data.draw(st.lists(rationals(), min_size=M.ncols, max_size=M.ncols))
    b = M.apply(x0)
    sol = solve(M, b)
    assert sol.consistent
    assert M.apply(sol.x) == b


@given(matrices)
def test_right_nullspace(M):
    for v in right_nullspace(M):
        assert all(x == 0 for x in M.apply(v))
