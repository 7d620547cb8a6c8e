"""Iterated circuits and the dual-defectiveness classifier.

A configuration is an iterated circuit when, after an affine change of
coordinates, it has the upper block-triangular shape

    1  1    1    ...  1
    0  C_1  *    ...  *
    0  0    C_2  ...  *
    ...
    0  0    0    ...  C_j

with every diagonal configuration (0, C_i) a circuit.  Geometrically: a base
point b and an ordered partition of the remaining points into blocks
G_1, ..., G_j such that, with V_i the span of (G_1 u ... u G_i) - b, each
step raises the dimension by n_i = |G_i| - 1 and the image of G_i in
V_i / V_{i-1}, together with the origin, is a circuit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .configuration import PointConfiguration, is_circuit
from .core import cuspidal_form
from .errors import InconsistencyDetected
from .linalg import Matrix, inverse, kernel_basis, rank


@dataclass(frozen=True)
class IteratedCircuitWitness:
    base_point: int
    blocks: tuple[tuple[tuple[int, ...], int], ...]
    transform: Matrix

    @property
    def points(self) -> list[int]:
        """Columns in block order: base point first."""
        return [self.base_point] + [k for g, _ in self.blocks for k in g]

    def to_dict(self) -> dict:
        return {
            "base_point": self.base_point,
            "blocks": [{"points": list(g), "dim": d} for g, d in self.blocks],
            "transform": [[str(x) for x in self.transform.row(i)]
                          for i in range(self.transform.rows)],
        }


def _block_relation(vectors, basis) -> list[Fraction] | None:
    """Coefficients c with sum c_g g in span(basis), if unique up to scale.

    Returns the part of the kernel vector belonging to ``vectors``, or None
    when the relation space is not one-dimensional.
    """
    n = len(vectors[0])
    M = Matrix.from_columns(list(vectors) + list(basis), n)
    K = kernel_basis(M)
    if K.cols != 1:
        return None
    return list(K.column(0)[:len(vectors)])


def _search(points, n, base, available, nblocks, exact_cover) -> Iterator[list]:
    """Yield block lists (each a tuple of point indices) in deterministic order."""
    origin = points[base]
    shifted = {k: tuple(x - o for x, o in zip(points[k], origin)) for k in available}

    def extend(blocks, basis, free, dim):
        if dim == n:
            if len(blocks) == nblocks and (not exact_cover or not free):
                yield list(blocks)
            return
        remaining_blocks = nblocks - len(blocks)
        if remaining_blocks <= 0:
            return
        for ni in range(1, n - dim - remaining_blocks + 2):
            # the other blocks need at least 2 points each
            if ni + 1 + 2 * (remaining_blocks - 1) > len(free):
                break
            for G in combinations(free, ni + 1):
                vecs = [shifted[k] for k in G]
                if rank(Matrix.from_columns(vecs + basis, n)) != dim + ni:
                    continue
                c = _block_relation(vecs, basis)
                if c is None or not all(c) or not sum(c):
                    continue
                new_basis = list(basis)
                for v in vecs:
                    if rank(Matrix.from_columns(new_basis + [v], n)) > len(new_basis):
                        new_basis.append(v)
                rest = [k for k in free if k not in G]
                yield from extend(blocks + [(G, ni)], new_basis, rest, dim + ni)

    yield from extend([], [], [k for k in available if k != base], 0)


def _witness(A: PointConfiguration, base: int, blocks) -> IteratedCircuitWitness:
    """Build the row operation that puts the chosen columns in block form."""
    n = A.n
    origin = A.point(base)
    basis: list[tuple] = []
    for G, _ in blocks:
        for k in G:
            v = tuple(x - o for x, o in zip(A.point(k), origin))
            if rank(Matrix.from_columns(basis + [v], n)) > len(basis):
                basis.append(v)
    Minv = inverse(Matrix.from_columns(basis, n))
    shift = Minv @ Matrix.from_columns([origin], n)
    rows = [[1] + [0] * n]
    for i in range(n):
        rows.append([-shift[i, 0]] + list(Minv.row(i)))
    return IteratedCircuitWitness(base, tuple((tuple(G), d) for G, d in blocks),
                                  Matrix.from_rows(rows))


def is_iterated_circuit(A: PointConfiguration) -> IteratedCircuitWitness | None:
    """A witness that all of A is an iterated circuit, or None."""
    if A.m < 1:
        return None
    pts = A.points
    for base in range(A.N):
        for blocks in _search(pts, A.n, base, range(A.N), A.m, exact_cover=True):
            return _witness(A, base, blocks)
    return None


def contains_iterated_circuit(A: PointConfiguration) -> IteratedCircuitWitness | None:
    """A full-dimensional iterated circuit inside A, largest first, or None."""
    pts = A.points
    for nblocks in range(A.m, 0, -1):
        for base in range(A.N):
            for blocks in _search(pts, A.n, base, range(A.N), nblocks, exact_cover=False):
                return _witness(A, base, blocks)
    return None


def check_witness(A: PointConfiguration, w: IteratedCircuitWitness) -> bool:
    """Replay a witness: the transformed columns must have the literal block shape."""
    M = w.transform @ A.matrix.select_columns(w.points)
    if M.column(0) != (1,) + (0,) * A.n:
        return False
    if any(x != 1 for x in M.row(0)):
        return False
    col, top = 1, 0
    for G, d in w.blocks:
        for j in range(col, col + len(G)):
            if any(M[i, j] for i in range(1 + top + d, 1 + A.n)):
                return False
        diag = Matrix.from_rows(
            [[1] * (len(G) + 1)] +
            [[0] + [M[1 + top + i, j] for j in range(col, col + len(G))] for i in range(d)])
        try:
            if not is_circuit(PointConfiguration(diag)):
                return False
        except ValueError:
            return False
        col += len(G)
        top += d
    return top == A.n


@dataclass(frozen=True)
class ClassifyReport:
    dual_defective: bool
    witness: IteratedCircuitWitness | None
    consistent: bool

    def to_dict(self) -> dict:
        return {"dual_defective": self.dual_defective,
                "witness": self.witness.to_dict() if self.witness else None,
                "consistent": self.consistent}


def classify(A: PointConfiguration) -> ClassifyReport:
    defective = cuspidal_form(A).is_trivial
    witness = contains_iterated_circuit(A)
    if defective != (witness is None):
        raise InconsistencyDetected(
            f"dual_defective={defective} but witness={'present' if witness else 'absent'}")
    return ClassifyReport(defective, witness, True)
