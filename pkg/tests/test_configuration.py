from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspidal import fixtures
from cuspidal.configuration import (GaleDual, PointConfiguration, adapted_gale_dual, gale_dual,
                                    is_circuit, is_pyramid, minor_duality_constant, subset_sign,
                                    validate_normalize)
from cuspidal.errors import DeletionDropsRank, NotPseudoHomogeneous, RankDeficient
from cuspidal.linalg import Matrix, det, rank
from cuspidal.rng import SplitMix64, draw_configuration


@st.composite
def configurations(draw, max_n=3, max_extra=3, bound=2, min_extra=0):
    rng = SplitMix64(draw(st.integers(0, 2 ** 64 - 1)))
    n = draw(st.integers(1, max_n))
    N = n + 1 + draw(st.integers(min_extra, max_extra))
    return draw_configuration(rng, n, N, bound)


def test_fixtures_are_valid_and_given_duals_annihilate():
    for name, (A, B) in fixtures.ALL.items():
        assert validate_normalize(A.matrix) == A, name
        if B is not None:
            assert B.is_dual_of(A), name


def test_normalized_input_is_unchanged():
    A = validate_normalize(fixtures.P5.matrix)
    assert A.matrix == fixtures.P5.matrix
    assert A.transform == Matrix.identity(3)


def test_not_pseudo_homogeneous():
    with pytest.raises(NotPseudoHomogeneous):
        validate_normalize(Matrix.from_rows([[1, 0, 0], [0, 1, 2]]))


def test_homogenize_prepends_ones():
    A = validate_normalize(Matrix.from_rows([[0, 1, 2], [0, 0, 1]]), homogenize=True)
    assert A.matrix.row(0) == (1, 1, 1)
    assert (A.n, A.N, A.m) == (2, 3, 0)
    assert gale_dual(A).matrix.shape == (3, 0)


def test_rank_deficiency_is_rejected():
    with pytest.raises(RankDeficient):
        validate_normalize(Matrix.from_rows([[0, 0, 0]]), homogenize=True)
    with pytest.raises(RankDeficient):
        validate_normalize(Matrix.from_rows([[1, 1, 1], [0, 1, 2], [0, 2, 4]]))


def test_pseudo_homogeneous_input_gets_ones_row():
    # rows are 2*(ones) and an affine coordinate: xi = (1/2, 0)
    raw = Matrix.from_rows([[2, 2, 2], [0, 1, 3]])
    A = validate_normalize(raw)
    assert A.matrix.row(0) == (1, 1, 1)
    assert A.transform @ raw == A.matrix
    assert det(A.transform) != 0


def test_canonical_duals():
    assert gale_dual(fixtures.SEGMENT).matrix.column(0) == (1, -2, 1)
    B = gale_dual(fixtures.PYRAMID)
    assert B.matrix.column(0) == (1, -2, 1, 0)
    triangle = PointConfiguration(Matrix.from_rows([[1, 1, 1], [0, 1, 0], [0, 0, 1]]))
    assert gale_dual(triangle).matrix.shape == (3, 0)


def test_adapted_dual_p5():
    A = fixtures.P5
    B = adapted_gale_dual(A, 2)
    assert B.is_dual_of(A)
    assert B.row(2) == (0, 1)
    rest = [0, 1, 3, 4]
    restricted = GaleDual(B.matrix.select_rows(rest).select_columns([0]))
    assert restricted.is_dual_of(A.delete(2))


def test_adapted_dual_segment_and_pyramid():
    assert adapted_gale_dual(fixtures.SEGMENT, 0).matrix.column(0) == (1, -2, 1)
    with pytest.raises(DeletionDropsRank):
        adapted_gale_dual(fixtures.PYRAMID, 3)


def test_pyramid_and_circuit_predicates():
    assert is_pyramid(fixtures.PYRAMID)
    assert not is_pyramid(fixtures.P5)
    assert not is_pyramid(fixtures.SEGMENT)
    assert is_circuit(fixtures.SEGMENT)
    assert not is_circuit(fixtures.PYRAMID)
    assert not is_circuit(fixtures.P5)


def test_subset_sign_uses_one_based_labels():
    assert subset_sign([0]) == -1
    assert subset_sign([0, 1]) == -1
    assert subset_sign([1]) == 1


def test_minor_duality_segment_by_hand():
    # s = {1,2}, {1,3}, {2,3} (1-based): |A_s| = 1, 2, 1, the complementary
    # entries of B are 1, -2, 1 and the signs are -1, 1, -1
    A = fixtures.SEGMENT
    B = gale_dual(A)
    C = minor_duality_constant(A, B)
    for sigma in combinations(range(3), 2):
        comp = [k for k in range(3) if k not in sigma]
        assert det(A.matrix.select_columns(sigma)) == C * subset_sign(sigma) * B.row(comp[0])[0]
    assert C == -1
    assert minor_duality_constant(A, GaleDual(B.matrix * 3)) == C / 3


def test_minor_duality_p5_given_dual():
    assert minor_duality_constant(fixtures.P5, fixtures.P5_GALE) == 1


@settings(max_examples=40, deadline=None)
@given(configurations())
def test_canonical_dual_is_a_gale_dual(A):
    B = gale_dual(A)
    assert (A.matrix @ B.matrix).is_zero()
    assert rank(B.matrix) == A.m if A.m else B.matrix.cols == 0


@settings(max_examples=40, deadline=None)
@given(configurations(), st.data())
def test_minor_duality_scales_inversely_with_det(A, data):
    if A.m == 0:
        return
    B = gale_dual(A)
    entries = data.draw(st.lists(st.integers(-3, 3), min_size=A.m ** 2, max_size=A.m ** 2))
    T = Matrix(A.m, A.m, entries)
    if det(T) == 0:
        return
    assert minor_duality_constant(A, B.transformed(T)) == minor_duality_constant(A, B) / det(T)


@settings(max_examples=40, deadline=None)
@given(configurations(), st.data())
def test_pyramid_test_is_invariant(A, data):
    perm = data.draw(st.permutations(range(A.N)))
    W = data.draw(st.lists(st.integers(-2, 2), min_size=A.n ** 2, max_size=A.n ** 2))
    W = Matrix(A.n, A.n, W)
    if det(W) == 0:
        return
    moved = PointConfiguration(Matrix.from_rows([[1] * A.N]).stack(W @ A.hat).select_columns(perm))
    assert is_pyramid(moved) == is_pyramid(A)


@settings(max_examples=40, deadline=None)
@given(configurations())
def test_adapted_dual_restricts_to_a_dual(A):
    for alpha in range(A.N):
        if not A.deletion_keeps_rank(alpha):
            with pytest.raises(DeletionDropsRank):
                adapted_gale_dual(A, alpha)
            continue
        B = adapted_gale_dual(A, alpha)
        assert B.is_dual_of(A)
        assert B.row(alpha) == (0,) * (A.m - 1) + (1,)
        rest = [k for k in range(A.N) if k != alpha]
        inherited = GaleDual(B.matrix.select_rows(rest).select_columns(list(range(A.m - 1))))
        assert inherited.is_dual_of(A.delete(alpha))


def test_duplicate_columns_are_accepted():
    # two copies of one point give a zero-sum pair of parallel rows
    A = PointConfiguration.from_points([(0,), (1,), (1,)])
    B = gale_dual(A)
    assert B.matrix.column(0) == (0, -1, 1)
    assert is_pyramid(A)
