from fractions import Fraction

import sympy
from hypothesis import strategies as st

from cuspidal.linalg import Matrix

small_ints = st.integers(min_value=-5, max_value=5)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def matrices(draw, rows=None, cols=None, elements=rationals, max_dim=5):
    r = draw(st.integers(1, max_dim)) if rows is None else rows
    c = draw(st.integers(1, max_dim)) if cols is None else cols
    return Matrix.from_rows([[draw(elements) for _ in range(c)] for _ in range(r)], c)


@st.composite
def square_matrices(draw, max_dim=5, elements=rationals):
    n = draw(st.integers(1, max_dim))
    return draw(matrices(rows=n, cols=n, elements=elements))


@st.composite
def symmetric_matrices(draw, max_dim=5, elements=small_ints):
    n = draw(st.integers(1, max_dim))
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = Fraction(draw(elements))
    return Matrix.from_rows(a, n)


def to_sympy(M: Matrix) -> sympy.Matrix:
    return sympy.Matrix(M.rows, M.cols,
                        [sympy.Rational(x.numerator, x.denominator) for x in M.entries])


def sympy_det(M: Matrix) -> Fraction:
    d = to_sympy(M).det(method="berkowitz")
    return Fraction(int(d.p), int(d.q))


def descartes_signature(M: Matrix) -> tuple[int, int, int]:
    """Inertia from the characteristic polynomial, whose roots are all real.

    For a real-rooted polynomial the number of positive roots equals the
    number of sign changes in its coefficient sequence.
    """
    lam = sympy.Symbol("lam")
    cp = to_sympy(M).charpoly(lam)
    coeffs = [c for c in cp.all_coeffs()]
    zeros = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zeros += 1

    def changes(seq):
        signs = [s for s in (sympy.sign(c) for c in seq) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    pos = changes(coeffs)
    neg = changes([c * (-1) ** k for k, c in enumerate(reversed(coeffs))])
    return pos, neg, zeros


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
