"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Determinant and rank work on
integer matrices obtained by clearing denominators row by row, followed by
Bareiss fraction-free elimination; kernels and linear solves go through a
reduced row echelon form with leftmost pivots, which makes their output
canonical.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import ShapeError


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: every entry must be exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class Matrix:
    """Immutable dense matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(to_fraction(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self.rows, self.cols, self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(columns, rows).T if columns else cls(rows, 0, [])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.rows, len(idx), [self[i, j] for i in range(self.rows) for j in idx])

    def select_rows(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(len(idx), self.cols, [x for i in idx for x in self.row(i)])

    def delete_column(self, j: int) -> "Matrix":
        return self.select_columns([k for k in range(self.cols) if k != j])

    def delete_row(self, i: int) -> "Matrix":
        return self.select_rows([k for k in range(self.rows) if k != i])

    def stack(self, other: "Matrix") -> "Matrix":
        """Vertical concatenation."""
        if self.cols != other.cols:
            raise ShapeError("column counts differ")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def augment(self, other: "Matrix") -> "Matrix":
        """Horizontal concatenation."""
        if self.rows != other.rows:
            raise ShapeError("row counts differ")
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                self.cols + other.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols)
        return Matrix(self.rows, other.cols, out)

    def __mul__(self, scalar) -> "Matrix":
        s = to_fraction(scalar)
        return Matrix(self.rows, self.cols, [s * x for x in self.entries])

    __rmul__ = __mul__

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError("shapes differ")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _integer_rows(M: Matrix) -> tuple[list[list[int]], int]:
    """Scale every row to integers; return rows and the product of the scales."""
    out, scale = [], 1
    for i in range(M.rows):
        r = M.row(i)
        L = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * L) for x in r])
        scale *= L
    return out, scale


def _bareiss(a: list[list[int]]) -> tuple[int, int]:
    """In-place fraction-free elimination on an integer matrix.

    Returns (rank, sign * last pivot).  For square full-rank input the second
    value is the determinant.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev, sign, r = 1, 1, 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, ncols):
                ai[j] = (piv * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = piv
        r += 1
    return r, sign * prev


def det(M: Matrix) -> Fraction:
    """Exact determinant."""
    if not M.is_square():
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    if M.rows == 0:
        return Fraction(1)
    a, scale = _integer_rows(M)
    r, d = _bareiss(a)
    if r < M.rows:
        return Fraction(0)
    return Fraction(d, scale)


def rank(M: Matrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    a, _ = _integer_rows(M)
    return _bareiss(a)[0]


def rref(M: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    a = M.tolist()
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        p = next((i for i in range(r, M.rows) if a[i][c]), None)
        if p is None:
            continue
        a[p], a[r] = a[r], a[p]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(M.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return a[:r], pivots


def kernel_basis(M: Matrix) -> Matrix:
    """Canonical basis of the right kernel, one column per free variable.

    Column j of the result has a 1 in the j-th free position and zeros in
    the other free positions.
    """
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    cols = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        cols.append(v)
    return Matrix.from_columns(cols, M.cols)


def solve(M: Matrix, rhs: Sequence) -> list[Fraction] | None:
    """A particular solution of ``M x = rhs`` (free variables zero), or None."""
    b = [to_fraction(x) for x in rhs]
    if len(b) != M.rows:
        raise ShapeError("right-hand side has the wrong length")
    aug = M.augment(Matrix.from_columns([b], M.rows))
    R, pivots = rref(aug)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [Fraction(0)] * M.cols
    for row, pc in zip(R, pivots):
        x[pc] = row[-1]
    return x


def inverse(M: Matrix) -> Matrix:
    if not M.is_square():
        raise ShapeError("inverse of non-square matrix")
    n = M.rows
    R, pivots = rref(M.augment(Matrix.identity(n)))
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix.from_rows([row[n:] for row in R], n)


class Signature(NamedTuple):
    positives: int
    negatives: int
    zeros: int

    def __str__(self) -> str:
        return f"({self.positives},{self.negatives};{self.zeros})"


def signature_symmetric(Q: Matrix) -> Signature:
    """Inertia of a symmetric matrix by exact congruence diagonalization."""
    if not Q.is_symmetric():
        raise ShapeError("signature requires a symmetric matrix")
    a = Q.tolist()
    n = Q.rows
    pos = neg = 0
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][i]), None)
        if p is None:
            hit = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if hit is None:
                break
            i, j = hit
            # congruence by I + E_ij: row/col j added to row/col i
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            p = i
        if p != k:
            a[p], a[k] = a[k], a[p]
            for r in a:
                r[p], r[k] = r[k], r[p]
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
            a[i][k] = Fraction(0)
        for j in range(k + 1, n):
            a[k][j] = Fraction(0)
    return Signature(pos, neg, n - pos - neg)
