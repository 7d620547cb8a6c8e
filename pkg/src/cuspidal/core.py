"""The cuspidal form and the computations that characterize it.

For a configuration A (top row ones, n-dimensional, N points) with Gale
dual B, the cuspidal form is

    P(t) = sum over n-subsets s of [N] of |hat A_s|^2 * prod_{k in s} <beta_k, t>

where hat A is A without its row of ones and beta_k is row k of B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .configuration import GaleDual, PointConfiguration, gale_dual
from .errors import ExceptionalParameter, InternalCheckError, ShapeError, WrongCodimension
from .linalg import Matrix, det, rank, to_fraction
from .poly import Polynomial


@dataclass(frozen=True)
class CuspidalForm:
    poly: Polynomial
    configuration: PointConfiguration
    gale: GaleDual

    @property
    def is_trivial(self) -> bool:
        return self.poly.is_zero()


def linear_forms(B: GaleDual) -> list[Polynomial]:
    return [Polynomial.linear(B.row(k)) for k in range(B.N)]


def _check_pair(A: PointConfiguration, B: GaleDual):
    if B.N != A.N or B.m != A.m:
        raise ShapeError(f"Gale dual shape {B.matrix.shape} does not fit {A.N} points of codimension {A.m}")


def cuspidal_polynomial(A: PointConfiguration, B: GaleDual) -> Polynomial:
    _check_pair(A, B)
    n, m = A.n, A.m
    hat = A.hat
    forms = linear_forms(B)

    @lru_cache(maxsize=None)
    def prefix_product(prefix: tuple) -> Polynomial:
        if not prefix:
            return Polynomial.constant(1, m)
        return prefix_product(prefix[:-1]) * forms[prefix[-1]]

    total = Polynomial.zero(m)
    for sigma in combinations(range(A.N), n):
        minor = det(hat.select_columns(sigma))
        if minor:
            total = total + prefix_product(sigma) * (minor * minor)
    prefix_product.cache_clear()
    if not total.is_homogeneous(n):
        raise InternalCheckError("cuspidal form is not homogeneous of degree n")
    return total


def cuspidal_form(A: PointConfiguration, B: GaleDual | None = None) -> CuspidalForm:
    """The cuspidal form of A in the coordinates given by B (canonical if omitted)."""
    B = B if B is not None else gale_dual(A)
    return CuspidalForm(cuspidal_polynomial(A, B), A, B)


def is_dual_defective(A: PointConfiguration) -> bool:
    return cuspidal_form(A).is_trivial


def _poly_det(M: list[list[Polynomial]], nvars: int) -> Polynomial:
    """Determinant of a square polynomial matrix by memoized Laplace expansion."""
    n = len(M)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> Polynomial:
        if row == n:
            return Polynomial.constant(1, nvars)
        out = Polynomial.zero(nvars)
        for pos, c in enumerate(sorted(cols)):
            if M[row][c].is_zero():
                continue
            term = M[row][c] * minor(row + 1, cols - {c})
            out = out - term if pos % 2 else out + term
        return out

    return minor(0, frozenset(range(n)))


def hessian_matrix(A: PointConfiguration, B: GaleDual) -> list[list[Polynomial]]:
    """Entries sum_j hatA[k, j] hatA[l, j] <beta_j, t>: the Hessian at the singular point."""
    _check_pair(A, B)
    hat = A.hat
    forms = linear_forms(B)
    n = A.n
    H = [[None] * n for _ in range(n)]
    for k in range(n):
        for l in range(k, n):
            entry = Polynomial.zero(A.m)
            for j in range(A.N):
                c = hat[k, j] * hat[l, j]
                if c:
                    entry = entry + forms[j] * c
            H[k][l] = H[l][k] = entry
    return H


def hessian_form(A: PointConfiguration, B: GaleDual | None = None) -> Polynomial:
    B = B if B is not None else gale_dual(A)
    return _poly_det(hessian_matrix(A, B), A.m)


def jacobian_matrix(A: PointConfiguration, B: GaleDual, t: Sequence) -> Matrix:
    """Jacobian of the Horn-Kapranov map at omega = 0 (exponentials all equal 1)."""
    _check_pair(A, B)
    t = [to_fraction(x) for x in t]
    if len(t) != A.m:
        raise ShapeError(f"parameter point has {len(t)} coordinates, expected {A.m}")
    values = [sum((b * x for b, x in zip(B.row(k), t)), Fraction(0)) for k in range(A.N)]
    zero = [k for k, v in enumerate(values) if not v]
    if zero:
        raise ExceptionalParameter(f"<beta_k, t> vanishes for k = {zero}")
    hat = A.hat
    top = [[hat[i, k] * values[k] for k in range(A.N)] for i in range(A.n)]
    bottom = [list(B.matrix.column(j)) for j in range(A.m)]
    return Matrix.from_rows(top + bottom, A.N)


def jacobian_rank(A: PointConfiguration, B: GaleDual, t: Sequence) -> int:
    return rank(jacobian_matrix(A, B, t))


def circuit_dual(A: PointConfiguration) -> GaleDual:
    """For m = 1: the dual with beta_k = (-1)^k |A_k| (1-based k, column k deleted)."""
    if A.m != 1:
        raise WrongCodimension(f"codimension is {A.m}, expected 1")
    col = [(-1) ** (k + 1) * det(A.matrix.delete_column(k)) for k in range(A.N)]
    return GaleDual(Matrix.from_columns([col], A.N))


def codim1_form(A: PointConfiguration) -> Polynomial:
    """Cuspidal form of a codimension-one configuration, as c * t^n.

    The configuration is first translated so its first point is the origin;
    translation leaves every maximal minor of A unchanged.
    """
    B = circuit_dual(A)
    origin = A.point(0)
    shifted = Matrix.from_rows(
        [A.matrix.row(0)] + [[x - origin[i] for x in A.hat.row(i)] for i in range(A.n)])
    return cuspidal_polynomial(PointConfiguration(shifted), B)
