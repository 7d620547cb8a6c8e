"""Point configurations, Gale duals and the basic predicates on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (ConsistencyFailure, DeletionDropsRank, NotPseudoHomogeneous,
                     RankDeficient, ShapeError)
from .linalg import Matrix, det, kernel_basis, rank, solve


@dataclass(frozen=True)
class PointConfiguration:
    """A spectrum as a (1+n) x N matrix whose top row is all ones.

    Columns may repeat.  ``transform`` is the invertible matrix U that took
    the raw input to ``matrix`` (``matrix == U @ raw``), or None when the
    input was homogenized or used as given.
    """

    matrix: Matrix
    transform: Matrix | None = field(default=None, compare=False)

    def __post_init__(self):
        A = self.matrix
        if A.rows < 1:
            raise ShapeError("a configuration needs at least the row of ones")
        if any(x != 1 for x in A.row(0)):
            raise NotPseudoHomogeneous("top row must be all ones")
        if rank(A) != A.rows:
            raise RankDeficient(f"rank {rank(A)} < {A.rows}")

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "PointConfiguration":
        """Build from affine points (homogenizing with a row of ones)."""
        n = len(points[0])
        return cls(Matrix.from_rows([[1] * len(points)] +
                                    [[p[i] for p in points] for i in range(n)]))

    @property
    def n(self) -> int:
        return self.matrix.rows - 1

    @property
    def N(self) -> int:
        return self.matrix.cols

    @property
    def m(self) -> int:
        return self.N - self.n - 1

    @property
    def hat(self) -> Matrix:
        """The matrix with the row of ones removed."""
        return self.matrix.delete_row(0)

    def point(self, k: int) -> tuple[Fraction, ...]:
        return self.matrix.column(k)[1:]

    @property
    def points(self) -> list[tuple[Fraction, ...]]:
        return [self.point(k) for k in range(self.N)]

    def subconfiguration(self, indices: Sequence[int]) -> "PointConfiguration":
        """Keep the listed columns; raises RankDeficient if dimension drops."""
        return PointConfiguration(self.matrix.select_columns(list(indices)))

    def delete(self, k: int) -> "PointConfiguration":
        return self.subconfiguration([j for j in range(self.N) if j != k])

    def deletion_keeps_rank(self, k: int) -> bool:
        return rank(self.matrix.delete_column(k)) == self.n + 1


@dataclass(frozen=True)
class GaleDual:
    """An N x m matrix whose columns span the kernel of A."""

    matrix: Matrix

    @property
    def m(self) -> int:
        return self.matrix.cols

    @property
    def N(self) -> int:
        return self.matrix.rows

    def row(self, k: int) -> tuple[Fraction, ...]:
        return self.matrix.row(k)

    @property
    def rows(self) -> list[tuple[Fraction, ...]]:
        return [self.row(k) for k in range(self.N)]

    def transformed(self, T: Matrix) -> "GaleDual":
        return GaleDual(self.matrix @ T)

    def is_dual_of(self, A: PointConfiguration) -> bool:
        return (self.N == A.N and self.m == A.m
                and (A.matrix @ self.matrix).is_zero() and rank(self.matrix) == A.m)


def validate_normalize(raw: Matrix, homogenize: bool = False) -> PointConfiguration:
    """Turn a raw matrix into a configuration with an all-ones top row.

    With ``homogenize`` the raw rows are affine coordinates and a row of
    ones is prepended.  Otherwise the all-ones vector must lie in the row
    span: the functional xi solving xi^T raw = 1 becomes the first row of U,
    and the remaining rows of U are unit vectors picked greedily to keep U
    invertible.
    """
    if homogenize:
        A = Matrix.from_rows([[1] * raw.cols]).stack(raw)
        if rank(A) < A.rows:
            raise RankDeficient(f"points span an affine space of dimension {rank(A) - 1} < {raw.rows}")
        return PointConfiguration(A)

    xi = solve(raw.T, [1] * raw.cols)
    if xi is None:
        raise NotPseudoHomogeneous("the all-ones vector is not in the row span")
    if rank(raw) < raw.rows:
        raise RankDeficient(f"rank {rank(raw)} < {raw.rows} rows")
    rows = [xi]
    for i in range(raw.rows):
        e = [0] * raw.rows
        e[i] = 1
        if rank(Matrix.from_rows(rows + [e])) == len(rows) + 1:
            rows.append(e)
        if len(rows) == raw.rows:
            break
    U = Matrix.from_rows(rows)
    return PointConfiguration(U @ raw, transform=U)


def gale_dual(A: PointConfiguration) -> GaleDual:
    """Canonical Gale dual: the RREF kernel basis of A."""
    return GaleDual(kernel_basis(A.matrix))


def adapted_gale_dual(A: PointConfiguration, alpha: int) -> GaleDual:
    """Gale dual whose row ``alpha`` is (0, ..., 0, 1).

    Its first m-1 columns, with row ``alpha`` removed, are the canonical Gale
    dual of A with point ``alpha`` deleted.
    """
    if not A.deletion_keeps_rank(alpha):
        raise DeletionDropsRank(f"deleting point {alpha} lowers the rank")
    rest = [k for k in range(A.N) if k != alpha]
    Ap = A.matrix.select_columns(rest)
    Bp = kernel_basis(Ap)
    x = solve(Ap, [-v for v in A.matrix.column(alpha)])
    cols = []
    for j in range(Bp.cols):
        c = list(Bp.column(j))
        c.insert(alpha, Fraction(0))
        cols.append(c)
    x.insert(alpha, Fraction(1))
    cols.append(x)
    return GaleDual(Matrix.from_columns(cols, A.N))


def is_pyramid(A: PointConfiguration, B: GaleDual | None = None) -> bool:
    B = B or gale_dual(A)
    return any(not any(r) for r in B.rows)


def is_circuit(A: PointConfiguration) -> bool:
    return A.m == 1 and not is_pyramid(A)


def subset_sign(sigma: Sequence[int]) -> int:
    """prod_{k in sigma} (-1)^k with 1-based point labels."""
    return -1 if sum(k + 1 for k in sigma) % 2 else 1


def minor_duality_constant(A: PointConfiguration, B: GaleDual) -> Fraction:
    """The constant C(B) with |A_s| = C(B) sgn(s) |B_s| for all (1+n)-subsets s.

    ``B_s`` is B with the rows in s deleted.  Every subset is checked; a
    mismatch raises ConsistencyFailure.
    """
    if not B.is_dual_of(A):
        raise ShapeError("B is not a Gale dual of A")
    N, d = A.N, A.n + 1
    pairs = []
    for sigma in combinations(range(N), d):
        a = det(A.matrix.select_columns(sigma))
        comp = [k for k in range(N) if k not in sigma]
        b = det(B.matrix.select_rows(comp))
        pairs.append((sigma, a, b))
    C = None
    for sigma, a, b in pairs:
        if a:
            if not b:
                raise ConsistencyFailure(f"|A_s| != 0 but |B_s| = 0 for s = {sigma}")
            C = a / (subset_sign(sigma) * b)
            break
    if C is None:
        raise ConsistencyFailure("every maximal minor of A vanishes")
    for sigma, a, b in pairs:
        if a != C * subset_sign(sigma) * b:
            raise ConsistencyFailure(f"minor identity fails for s = {sigma}")
    return C
