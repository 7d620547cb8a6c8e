"""Planar configurations: the quadratic cuspidal form and its signature.

For n = 2 the cuspidal form is a quadratic form whose signature records
which kind of conic (if any) passes through all points.  Two independent
routes are provided: :func:`classify_conic` reads the class off the
signature, :func:`conic_fit_oracle` fits a conic to the points directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .configuration import GaleDual, PointConfiguration
from .errors import DegenerateConfiguration, ShapeError, TooFewPoints, UnrecognizedSignature
from .linalg import Matrix, Signature, det, inverse, kernel_basis, rank, signature_symmetric, to_fraction

CLASSES = ("pyramid", "nonreal_parabola", "real_parabola", "hyperbola", "ellipse", "generic")

Point = Sequence[Fraction]


@dataclass(frozen=True)
class NormalForm2D:
    """A planar configuration moved so its first three columns are 0, e1, e2.

    ``order`` lists the original column indices in their new positions and
    ``transform`` is the 3x3 matrix U with ``configuration.matrix ==
    U @ original.matrix[:, order]``.
    """

    configuration: PointConfiguration
    order: tuple[int, ...]
    transform: Matrix
    gale: GaleDual

    @property
    def alphas(self) -> list[tuple[Fraction, Fraction]]:
        return self.configuration.points[3:]


def standard_gale(alphas: Sequence[Point]) -> GaleDual:
    """Dual with column k = (|a_k| - 1, -a_k1, -a_k2, e_k) for points 0, e1, e2, a_1.. a_m."""
    m = len(alphas)
    cols = []
    for k, (a1, a2) in enumerate(alphas):
        unit = [0] * m
        unit[k] = 1
        cols.append([a1 + a2 - 1, -a1, -a2] + unit)
    return GaleDual(Matrix.from_columns(cols, m + 3) if cols else Matrix.zeros(3, 0))


def normal_form_2d(A: PointConfiguration) -> NormalForm2D:
    if A.n != 2:
        raise ShapeError(f"expected a planar configuration, got n = {A.n}")
    triple = next((s for s in combinations(range(A.N), 3)
                   if det(A.matrix.select_columns(s))), None)
    if triple is None:
        raise DegenerateConfiguration("all points are collinear")
    # U sends the chosen columns to (1,0,0), (1,1,0), (1,0,1)
    target = Matrix.from_rows([[1, 1, 1], [0, 1, 0], [0, 0, 1]])
    U = target @ inverse(A.matrix.select_columns(triple))
    order = tuple(triple) + tuple(k for k in range(A.N) if k not in triple)
    moved = PointConfiguration(U @ A.matrix.select_columns(order))
    return NormalForm2D(moved, order, U, standard_gale(moved.points[3:]))


def g_entry(a: Point, b: Point) -> Fraction:
    """Entry of the quadratic-form matrix for two points in normal position."""
    a1, a2 = (to_fraction(x) for x in a)
    b1, b2 = (to_fraction(x) for x in b)
    cross = a1 * b2 - a2 * b1
    return (a1 * b2 * (1 - a1 - b2) + a2 * b1 * (1 - a2 - b1) + cross * cross) / 2


def q_matrix(nf: NormalForm2D | Sequence[Point]) -> Matrix:
    alphas = nf.alphas if isinstance(nf, NormalForm2D) else list(nf)
    m = len(alphas)
    return Matrix.from_rows([[g_entry(alphas[k], alphas[j]) for j in range(m)] for k in range(m)], m)


def g_minor(rows: Sequence[Point], cols: Sequence[Point]) -> Fraction:
    if len(rows) != len(cols):
        raise ShapeError("row and column point lists differ in length")
    k = len(rows)
    return det(Matrix.from_rows([[g_entry(a, d) for d in cols] for a in rows], k))


def evaluate_H(p1: Point, p2: Point, p3: Point) -> Fraction:
    """The 24-term polynomial whose square (over 4) is the 3x3 g-minor."""
    a11, a12 = (to_fraction(x) for x in p1)
    a21, a22 = (to_fraction(x) for x in p2)
    a31, a32 = (to_fraction(x) for x in p3)
    return (a11 * a12 * a22 * a31 * (1 - a22) * (1 - a31)
            - a11 * a12 * a21 * a32 * (1 - a21) * (1 - a32)
            + a12 * a21 * a31 * a32 * (1 - a12) * (1 - a21)
            - a12 * a21 * a22 * a31 * (1 - a12) * (1 - a31)
            - a11 * a22 * a31 * a32 * (1 - a11) * (1 - a22)
            + a11 * a21 * a22 * a32 * (1 - a11) * (1 - a32))


def signature_2d(A: PointConfiguration) -> Signature:
    return signature_symmetric(q_matrix(normal_form_2d(A)))


def class_from_signature(s: Signature, m: int) -> str:
    p, q, z = s
    table = {
        (0, 0, m): "pyramid",
        # (1,0;m-1) with m > 1 needs repeated points: four distinct ones remain
        (1, 0, m - 1): "nonreal_parabola",
        (0, 1, m - 1): "real_parabola",
        (1, 1, m - 2): "hyperbola",
        (0, 2, m - 2): "ellipse",
        (1, 2, m - 3): "generic",
    }
    try:
        return table[(p, q, z)]
    except KeyError:
        raise UnrecognizedSignature(f"signature {s} with m = {m}") from None


@dataclass(frozen=True)
class ConicClass:
    kind: str
    signature: Signature


def classify_conic(A: PointConfiguration) -> ConicClass:
    s = signature_2d(A)
    if s.positives + s.negatives > 3:
        raise UnrecognizedSignature(f"rank of {s} exceeds 3")
    return ConicClass(class_from_signature(s, A.m), s)


# -- independent route: fit a conic to the points ---------------------------

@dataclass(frozen=True)
class OracleResult:
    """Classification by direct geometry of the distinct points.

    ``kind`` is one of :data:`CLASSES`, or ``"line_pair"``,
    ``"parallel_lines"``, ``"underdetermined"`` for degenerate situations.
    ``conic`` holds (a, b, c, d, e, f) of a x^2 + b xy + c y^2 + d x + e y + f
    when a unique conic contains the points.
    """

    kind: str
    conic: tuple[Fraction, ...] | None = None
    degenerate: bool = False


def _collinear(pts) -> bool:
    if len(pts) <= 2:
        return True
    o = pts[0]
    return rank(Matrix.from_columns([(p[0] - o[0], p[1] - o[1]) for p in pts[1:]], 2)) <= 1


def _orient(a, b, c) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _inside_triangle(p, a, b, c) -> bool:
    s = _orient(a, b, c)
    return all(_orient(*e) * s > 0 for e in ((a, b, p), (b, c, p), (c, a, p)))


def fit_conic(points: Sequence[Point]) -> Matrix:
    """Kernel of the monomial matrix: coefficient vectors of conics through the points."""
    rows = [[x * x, x * y, y * y, x, y, 1] for x, y in ((to_fraction(p[0]), to_fraction(p[1])) for p in points)]
    return kernel_basis(Matrix.from_rows(rows, 6))


def conic_matrix(c: Sequence[Fraction]) -> Matrix:
    a, b, cc, d, e, f = c
    return Matrix.from_rows([[a, b / 2, d / 2], [b / 2, cc, e / 2], [d / 2, e / 2, f]])


def _normalize(c):
    lead = next(x for x in c if x)
    return tuple(x / lead for x in c)


def conic_fit_oracle(points: Sequence[Point]) -> OracleResult:
    pts = [(to_fraction(p[0]), to_fraction(p[1])) for p in points]
    if len(pts) < 4:
        raise TooFewPoints(f"need at least 4 points, got {len(pts)}")
    # repeated exponents merge into one monomial
    pts = list(dict.fromkeys(pts))
    if len(pts) < 4:
        return OracleResult("pyramid")
    if any(_collinear(pts[:k] + pts[k + 1:]) for k in range(len(pts))):
        return OracleResult("pyramid")
    if len(pts) == 4:
        for k in range(4):
            others = pts[:k] + pts[k + 1:]
            if _inside_triangle(pts[k], *others):
                return OracleResult("nonreal_parabola")
        return OracleResult("real_parabola")
    K = fit_conic(pts)
    if K.cols == 0:
        return OracleResult("generic")
    if K.cols > 1:
        return OracleResult("underdetermined", degenerate=True)
    c = _normalize(K.column(0))
    a, b, cc = c[:3]
    disc = b * b - 4 * a * cc
    if det(conic_matrix(c)) == 0:
        kind = "line_pair" if disc > 0 else "parallel_lines" if disc == 0 else "underdetermined"
        return OracleResult(kind, c, degenerate=True)
    kind = "hyperbola" if disc > 0 else "ellipse" if disc < 0 else "real_parabola"
    return OracleResult(kind, c)


# Degenerate conics are limits of the non-degenerate kinds with the same
# discriminant sign; the signature cannot tell them apart.
_DEGENERATE_MATCH = {"line_pair": "hyperbola", "parallel_lines": "real_parabola"}


def oracle_agrees(kind: str, oracle: OracleResult) -> bool:
    return _DEGENERATE_MATCH.get(oracle.kind, oracle.kind) == kind


@dataclass(frozen=True)
class ConicReport:
    signature: Signature
    kind: str
    oracle: OracleResult

    @property
    def agree(self) -> bool:
        return oracle_agrees(self.kind, self.oracle)

    def to_dict(self) -> dict:
        doc = {"signature": list(self.signature), "class": self.kind,
               "oracle": self.oracle.kind, "agree": self.agree}
        if self.oracle.conic is not None:
            doc["conic"] = [str(x) for x in self.oracle.conic]
        return doc


def conic_report(A: PointConfiguration) -> ConicReport:
    cls = classify_conic(A)
    return ConicReport(cls.signature, cls.kind, conic_fit_oracle(A.points))
