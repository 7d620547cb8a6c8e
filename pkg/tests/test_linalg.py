from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (descartes_signature, matrices, rationals, square_matrices, symmetric_matrices,
                      sympy_det, to_sympy)
from cuspidal.errors import ShapeError
from cuspidal.fixtures import HYPERBOLA, P5, P5_GALE, SEGMENT
from cuspidal.linalg import (Matrix, Signature, det, inverse, kernel_basis, rank, rref,
                             signature_symmetric, solve, to_fraction)


def test_to_fraction_accepts_exact_inputs():
    assert to_fraction(3) == 3
    assert to_fraction("-2/6") == Fraction(-1, 3)
    assert to_fraction(Fraction(1, 2)) == Fraction(1, 2)


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_to_fraction_rejects_inexact_inputs(bad):
    with pytest.raises(TypeError):
        to_fraction(bad)


def test_matrix_shape_checks():
    with pytest.raises(ShapeError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(ShapeError):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix.identity(2) @ Matrix.identity(3)


def test_matrix_is_immutable_and_hashable():
    M = Matrix.identity(2)
    with pytest.raises(AttributeError):
        M.rows = 3
    assert hash(M) == hash(Matrix.identity(2))
    assert M == Matrix.from_rows([[1, 0], [0, 1]])


def test_det_examples():
    assert det(Matrix.identity(3)) == 1
    assert det(Matrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det(HYPERBOLA.matrix.select_columns([0, 1, 2])) == -24
    assert det(Matrix(0, 0, [])) == 1


def test_det_rejects_non_square():
    with pytest.raises(ShapeError):
        det(Matrix.zeros(2, 3))


def test_rank_examples():
    assert rank(Matrix.zeros(2, 3)) == 0
    assert rank(Matrix.identity(4)) == 4
    assert rank(P5.matrix) == 3


def test_kernel_examples():
    assert kernel_basis(Matrix.from_rows([[1, 2], [3, 4]])).cols == 0
    K = kernel_basis(SEGMENT.matrix)
    assert K.shape == (3, 1)
    assert K.column(0) == (1, -2, 1)
    K = kernel_basis(P5.matrix)
    assert K.shape == (5, 2)
    assert (P5.matrix @ K).is_zero()
    # the fixture dual spans the same space
    assert rank(K.augment(P5_GALE.matrix)) == 2


def test_kernel_identity_pattern_on_free_columns():
    K = kernel_basis(P5.matrix)
    _, pivots = rref(P5.matrix)
    free = [c for c in range(5) if c not in pivots]
    assert [[K[f, j] for j in range(K.cols)] for f in free] == [[1, 0], [0, 1]]


def test_signature_examples():
    assert signature_symmetric(Matrix.zeros(2, 2)) == Signature(0, 0, 2)
    assert signature_symmetric(Matrix.from_rows([[1, 0], [0, -1]])) == (1, 1, 0)
    assert signature_symmetric(Matrix.from_rows([[-4, -2], [-2, -4]])) == (0, 2, 0)
    assert str(Signature(1, 2, 0)) == "(1,2;0)"


def test_signature_needs_off_diagonal_pivot():
    # zero diagonal throughout: [[0,1],[1,0]] is a hyperbolic plane
    assert signature_symmetric(Matrix.from_rows([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature_symmetric(Matrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])) == (1, 2, 0)


def test_signature_rejects_non_symmetric():
    with pytest.raises(ShapeError):
        signature_symmetric(Matrix.from_rows([[1, 2], [3, 4]]))


def test_solve_and_inverse():
    M = Matrix.from_rows([[2, 1], [1, 1]])
    assert solve(M, [3, 2]) == [1, 1]
    assert inverse(M) @ M == Matrix.identity(2)
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [0, 1]) is None
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix.from_rows([[1, 1], [1, 1]]))


@given(square_matrices())
def test_det_matches_independent_oracle(M):
    assert det(M) == sympy_det(M)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    matrices(rows=n, cols=n), matrices(rows=n, cols=n))))
def test_det_is_multiplicative(pair):
    M, N = pair
    assert det(M @ N) == det(M) * det(N)


@given(matrices(elements=st.integers(-2, 2).map(Fraction)))
def test_rank_matches_independent_oracle(M):
    assert rank(M) == to_sympy(M).rank()


@given(matrices(max_dim=6, elements=st.integers(-2, 2).map(Fraction)))
def test_kernel_basis_is_a_basis(M):
    K = kernel_basis(M)
    assert K.rows == M.cols
    assert K.cols == M.cols - rank(M)
    if K.cols:
        assert (M @ K).is_zero()
        assert rank(K) == K.cols


@settings(max_examples=60)
@given(symmetric_matrices())
def test_signature_matches_characteristic_polynomial(Q):
    assert tuple(signature_symmetric(Q)) == descartes_signature(Q)


@given(symmetric_matrices(max_dim=4), st.data())
def test_signature_is_congruence_invariant(Q, data):
    n = Q.rows
    T = data.draw(matrices(rows=n, cols=n, elements=st.integers(-3, 3).map(Fraction)))
    if det(T) == 0:
        return
    s = signature_symmetric(Q)
    assert signature_symmetric(T.T @ Q @ T) == s
    assert sum(s) == n
    assert s.zeros == n - rank(Q)


@given(matrices(), rationals)
def test_scalar_and_transpose_algebra(M, c):
    assert (M * c).T == M.T * c
    assert M.T.T == M
    assert M + M == M * 2
    assert (M - M).is_zero()
