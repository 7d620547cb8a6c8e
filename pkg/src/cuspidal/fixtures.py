"""Reference configurations, with the Gale duals printed alongside them where known."""

from __future__ import annotations

from .configuration import GaleDual, PointConfiguration
from .linalg import Matrix


def _config(rows):
    return PointConfiguration(Matrix.from_rows(rows))


def _dual_from_transpose(rows_of_bt):
    return GaleDual(Matrix.from_rows(rows_of_bt).T)


P5 = _config([[1, 1, 1, 1, 1],
              [0, 1, 2, 0, 1],
              [0, 0, 0, 1, 2]])
P5_GALE = _dual_from_transpose([[2, -1, 0, -2, 1],
                                [1, -2, 1, 0, 0]])

NINE = _config([[1, 1, 1, 1, 1, 1, 1, 1, 1],
                [0, 1, 0, 0, 1, 1, 0, 0, 1],
                [0, 0, 1, 0, 1, 0, 0, 0, 1],
                [0, 0, 0, 1, 0, 1, 0, 0, 1],
                [0, 0, 0, 0, 0, 0, 1, 0, 3],
                [0, 0, 0, 0, 0, 0, 0, 1, 2]])
NINE_GALE = GaleDual(Matrix.from_rows([[1, 1, 7],
                                       [-1, -1, -1],
                                       [-1, 0, -1],
                                       [0, -1, -1],
                                       [1, 0, 0],
                                       [0, 1, 0],
                                       [0, 0, -3],
                                       [0, 0, -2],
                                       [0, 0, 1]]))

HYPERBOLA = _config([[1, 1, 1, 1, 1],
                     [3, -3, 5, 5, -5],
                     [0, 0, 4, -4, 4]])
HYPERBOLA_GALE = _dual_from_transpose([[5, -5, -3, 0, 3],
                                       [-8, 2, 3, 3, 0]])

ELLIPSE = _config([[1, 1, 1, 1, 1],
                   [0, 1, 0, 1, 2],
                   [0, 0, 1, 2, 1]])
ELLIPSE_GALE = _dual_from_transpose([[2, -2, -1, 0, 1],
                                     [2, -1, -2, 1, 0]])

SEGMENT = _config([[1, 1, 1],
                   [0, 1, 2]])

PYRAMID = _config([[1, 1, 1, 1],
                   [0, 1, 2, 0],
                   [0, 0, 0, 1]])

CUBIC = _config([[1, 1, 1, 1, 1, 1, 1],
                 [0, 1, 1, 2, 3, 3, 3],
                 [3, 0, 2, 2, 1, 2, 3],
                 [0, 3, 2, 2, 2, 3, 0]])

UNIT_SQUARE = _config([[1, 1, 1, 1],
                       [0, 1, 0, 1],
                       [0, 0, 1, 1]])

ALL = {
    "P5": (P5, P5_GALE),
    "9PT": (NINE, NINE_GALE),
    "HYP": (HYPERBOLA, HYPERBOLA_GALE),
    "PAR": (ELLIPSE, ELLIPSE_GALE),
    "SEG": (SEGMENT, None),
    "PYR": (PYRAMID, None),
    "CUBIC": (CUBIC, None),
    "SQUARE": (UNIT_SQUARE, None),
}
