"""Seeded property suites: each one checks a structural identity of the
cuspidal form on generated instances.

A suite is a generator (seeded stream -> list of instances) and a check
(instance -> failures, counters).  Instances are produced serially from the
seed, so the instance set never depends on how many workers run the checks.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable

from . import fixtures
from .bivariate import (classify_conic, conic_fit_oracle, evaluate_H, g_minor, oracle_agrees,
                        signature_2d)
from .circuits import check_witness, contains_iterated_circuit
from .configuration import (GaleDual, PointConfiguration, adapted_gale_dual, gale_dual,
                            is_circuit, minor_duality_constant)
from .core import cuspidal_polynomial, hessian_form, jacobian_rank
from .errors import (ConsistencyFailure, ExceptionalParameter, InternalCheckError,
                     RankDeficient, UnknownSuite, UnrecognizedSignature)
from .linalg import Matrix, det, kernel_basis, rank, signature_symmetric, solve
from .poly import Polynomial
from .rng import SplitMix64, draw_configuration


@dataclass
class Instance:
    config: PointConfiguration
    extra: dict = field(default_factory=dict)
    label: str = ""

    def to_dict(self) -> dict:
        doc = {"matrix": _strings(self.config.matrix)}
        if self.label:
            doc["label"] = self.label
        for k, v in self.extra.items():
            doc[k] = _strings(v) if isinstance(v, Matrix) else _jsonable(v)
        return doc


def _strings(M: Matrix) -> list[list[str]]:
    return [[str(x) for x in M.row(i)] for i in range(M.rows)]


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Matrix):
        return _strings(v)
    if isinstance(v, Polynomial):
        return v.to_dict()
    return v


@dataclass
class SuiteReport:
    suite: str
    count: int
    seed: int
    failures: list
    elapsed: float
    stats: dict = field(default_factory=dict)
    instances: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"suite": self.suite, "count": self.count, "instances": self.instances,
                "seed": self.seed, "failures": self.failures, "stats": self.stats,
                "elapsed": round(self.elapsed, 3)}


def _failure(expected, actual, **context) -> dict:
    return {"expected": _jsonable(expected), "actual": _jsonable(actual), **context}


# -- random building blocks -------------------------------------------------

def random_rational(rng: SplitMix64, bound: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_invertible(rng: SplitMix64, m: int, bound: int = 3) -> Matrix:
    while True:
        T = Matrix.from_rows([[rng.randint(-bound, bound) for _ in range(m)] for _ in range(m)], m)
        if det(T):
            return T


def _config_from_columns(points) -> PointConfiguration:
    n = len(points[0])
    return PointConfiguration(Matrix.from_rows(
        [[1] * len(points)] + [[p[i] for p in points] for i in range(n)], len(points)))


def _try_config(points) -> PointConfiguration | None:
    try:
        return _config_from_columns(points)
    except RankDeficient:
        return None


def _permute(rng: SplitMix64, points: list) -> list:
    pts = list(points)
    for i in range(len(pts) - 1, 0, -1):
        j = rng.randint(0, i)
        pts[i], pts[j] = pts[j], pts[i]
    return pts


def _mixed_random(rng: SplitMix64, count: int, dims=(1, 2, 3), max_points=8, bound=3) -> list[Instance]:
    out = []
    for i in range(count):
        n = dims[i % len(dims)]
        N = rng.randint(n + 2, max(n + 2, max_points))
        out.append(Instance(draw_configuration(rng, n, N, bound)))
    return out


def _fixture_instances(include_gales=True) -> list[Instance]:
    out = []
    for name, (A, B) in fixtures.ALL.items():
        extra = {"gale": B.matrix} if (B is not None and include_gales) else {}
        out.append(Instance(A, extra, label=f"fixture {name}"))
    return out


def _gale_of(inst: Instance) -> GaleDual:
    G = inst.extra.get("gale")
    return GaleDual(G) if G is not None else gale_dual(inst.config)


# -- lemma-schur ------------------------------------------------------------

def gen_lemma_schur(rng, count):
    out = _fixture_instances()
    for inst in _mixed_random(rng, count, dims=(1, 2, 3), max_points=7):
        if inst.config.m:
            inst.extra["T"] = random_invertible(rng, inst.config.m)
        out.append(inst)
    return out


def check_lemma_schur(inst: Instance):
    A, B = inst.config, _gale_of(inst)
    try:
        C = minor_duality_constant(A, B)
    except ConsistencyFailure as exc:
        return [_failure("consistent constant", str(exc))], {}
    if "T" in inst.extra:
        T = inst.extra["T"]
        C2 = minor_duality_constant(A, B.transformed(T))
        if C2 != C / det(T):
            return [_failure(C / det(T), C2, check="C(BT) = C(B)/|T|")], {}
    return [], {"subsets": len(list(combinations(range(A.N), A.n + 1)))}


# -- hessian ----------------------------------------------------------------

def gen_hessian(rng, count):
    return _fixture_instances() + _mixed_random(rng, count, dims=(1, 2, 3), max_points=8)


def check_hessian(inst: Instance):
    A, B = inst.config, _gale_of(inst)
    P = cuspidal_polynomial(A, B)
    H = hessian_form(A, B)
    if P != H:
        return [_failure(P, H)], {}
    return [], {"nonzero": int(not P.is_zero())}


# -- jacobian ---------------------------------------------------------------

def _block_diagonal(blocks: list[PointConfiguration]):
    """Assemble a diagonal configuration from blocks whose first point is the origin.

    Returns (A, B, offsets) where B is the block-structured Gale dual built
    from the canonical duals of the blocks.
    """
    n = sum(b.n for b in blocks)
    m = sum(b.m for b in blocks)
    points = [(0,) * n]
    base_row = [Fraction(0)] * m
    rows = []
    dim_off = var_off = 0
    offsets = []
    for blk in blocks:
        Bj = gale_dual(blk)
        for k in range(1, blk.N):
            p = [0] * n
            p[dim_off:dim_off + blk.n] = blk.point(k)
            points.append(tuple(p))
            r = [Fraction(0)] * m
            r[var_off:var_off + blk.m] = Bj.row(k)
            rows.append(r)
        for j in range(blk.m):
            base_row[var_off + j] = Bj.row(0)[j]
        offsets.append(var_off)
        dim_off += blk.n
        var_off += blk.m
    B = GaleDual(Matrix.from_rows([base_row] + rows, m))
    return _config_from_columns(points), B, offsets


def _random_block(rng, n, N, bound=2) -> PointConfiguration:
    """Random configuration whose first point is the origin."""
    while True:
        pts = [(0,) * n] + [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(N - 1)]
        A = _try_config(pts)
        if A is not None:
            return A


def gen_jacobian(rng, count):
    """Instances with nontrivial cuspidal form, so that P(t) = 0 marks genuine cusps."""
    out = []
    i = 0
    while len(out) < count:
        kind = i % 3
        i += 1
        if kind == 0:
            A, extra = draw_configuration(rng, 1, rng.randint(3, 6), 3), {}
        elif kind == 1:
            n = rng.randint(2, 3)
            A, extra = draw_configuration(rng, n, rng.randint(n + 3, min(8, n + 4)), 2), {}
        else:
            line = _random_block(rng, 1, rng.randint(4, 5))
            n2 = rng.randint(1, 2)
            other = _random_block(rng, n2, n2 + rng.randint(2, 3))
            A, B, _ = _block_diagonal([line, other])
            extra = {"gale": B.matrix}
        inst = Instance(A, extra, label="diagonal" if extra else "")
        if cuspidal_polynomial(A, _gale_of(inst)).is_zero():
            continue
        inst.extra["seed"] = rng.next()
        out.append(inst)
    return out


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """Rational roots of sum coeffs[k] s^k."""
    import sympy

    s = sympy.Symbol("s")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * s ** k for k, c in enumerate(coeffs))
    poly = sympy.Poly(expr, s, domain="QQ")
    if poly.degree() < 1:
        return []
    return [Fraction(int(r.p), int(r.q)) for r in poly.ground_roots()]


def _admissible(B: GaleDual, t) -> bool:
    return all(sum((b * x for b, x in zip(B.row(k), t)), Fraction(0)) for k in range(B.N))


def _cusp_points(P: Polynomial, B: GaleDual, rng: SplitMix64, want: int, tries: int = 12):
    """Admissible rational zeros of P found on random lines t0 + s v."""
    m = P.nvars
    found = []
    for _ in range(tries):
        if len(found) >= want:
            break
        t0 = [Fraction(rng.randint(-4, 4)) for _ in range(m)]
        v = [Fraction(rng.randint(-4, 4)) for _ in range(m)]
        # P(u t0 + s v) as a binary form, then u = 1
        binary = P.substitute_linear(Matrix.from_columns([t0, v], m))
        coeffs = [Fraction(0)] * (P.degree() + 1)
        for (eu, es), c in binary.terms.items():
            coeffs[es] += c
        if not any(coeffs[1:]):
            continue
        for r in _rational_roots(coeffs):
            t = [a + r * b for a, b in zip(t0, v)]
            if _admissible(B, t) and P.evaluate(t) == 0:
                found.append(t)
    return found[:want]


def check_jacobian(inst: Instance):
    A, B = inst.config, _gale_of(inst)
    P = cuspidal_polynomial(A, B)
    n, m = A.n, A.m
    if any(not any(r) for r in B.rows):
        # a zero row makes every parameter exceptional
        return [], {"pyramids": 1}
    rng = SplitMix64(inst.extra["seed"])
    points = _cusp_points(P, B, rng, 2) if m >= 2 and not P.is_zero() else []
    for _ in range(200):
        if len(points) >= 5:
            break
        t = [Fraction(rng.randint(-5, 5)) for _ in range(m)]
        if _admissible(B, t):
            points.append(t)
    failures, cusps = [], 0
    for t in points:
        try:
            r = jacobian_rank(A, B, t)
        except ExceptionalParameter:
            continue
        zero = P.evaluate(t) == 0
        cusps += zero
        if P.is_zero():
            # defective: every point is a cusp and the rank may drop further
            ok, expected = r < n + m, f"<= {n + m - 1}"
        else:
            expected = n + m - 1 if zero else n + m
            ok = r == expected
        if not ok:
            failures.append(_failure(expected, r, t=[str(x) for x in t]))
    return failures, {"points": len(points), "cusp_points": cusps}


# -- restriction ------------------------------------------------------------

def gen_restriction(rng, count):
    return _mixed_random(rng, count, dims=(1, 2, 3), max_points=7)


def check_restriction(inst: Instance):
    A = inst.config
    failures, deletions = [], 0
    for alpha in range(A.N):
        if not A.deletion_keeps_rank(alpha):
            continue
        deletions += 1
        B = adapted_gale_dual(A, alpha)
        P = cuspidal_polynomial(A, B)
        rest = [k for k in range(A.N) if k != alpha]
        Bp = GaleDual(B.matrix.select_rows(rest).select_columns(list(range(A.m - 1))))
        Pd = cuspidal_polynomial(A.delete(alpha), Bp)
        restricted = P.restrict_zero(A.m - 1)
        if restricted != Pd:
            failures.append(_failure(Pd, restricted, deleted=alpha))
        if not Pd.is_zero() and P.is_zero():
            failures.append(_failure("nontrivial", "trivial", deleted=alpha, check="monotonicity"))
    return failures, {"deletions": deletions}


# -- diagonal-product -------------------------------------------------------

def gen_diagonal_product(rng, count):
    out = []
    for _ in range(count):
        nblocks = rng.randint(2, 3)
        blocks = []
        for _ in range(nblocks):
            nj = rng.randint(1, 2)
            blocks.append(_random_block(rng, nj, nj + rng.randint(2, 3)))
        A, B, offsets = _block_diagonal(blocks)
        out.append(Instance(A, {"gale": B.matrix,
                                "blocks": [b.matrix for b in blocks],
                                "offsets": offsets}, label="diagonal"))
    return out


def check_diagonal_product(inst: Instance):
    A, B = inst.config, _gale_of(inst)
    m = A.m
    P = cuspidal_polynomial(A, B)
    expected = Polynomial.constant(1, m)
    for M, off in zip(inst.extra["blocks"], inst.extra["offsets"]):
        blk = PointConfiguration(M)
        expected = expected * cuspidal_polynomial(blk, gale_dual(blk)).embed(off, m)
    if P != expected:
        return [_failure(expected, P)], {}
    return [], {"nonzero": int(not P.is_zero())}


# -- leading-monomial (upper diagonal, circuit blocks) ----------------------

def _random_circuit_block(rng, nj, bound=3):
    """nj + 1 points which, with the origin, form a circuit in dimension nj."""
    while True:
        pts = [tuple(rng.randint(-bound, bound) for _ in range(nj)) for _ in range(nj + 1)]
        A = _try_config([(0,) * nj] + pts)
        if A is not None and is_circuit(A):
            return pts


def gen_leading_monomial(rng, count):
    out = []
    for _ in range(count):
        nblocks = rng.randint(1, 3)
        dims = [rng.randint(1, 2) for _ in range(nblocks)]
        n = sum(dims)
        points = [(0,) * n]
        groups, top = [], 0
        for nj in dims:
            block = _random_circuit_block(rng, nj)
            idx = []
            for q in block:
                p = [0] * n
                for r in range(top):
                    p[r] = rng.randint(-2, 2)
                p[top:top + nj] = q
                idx.append(len(points))
                points.append(tuple(p))
            groups.append(idx)
            top += nj
        A = _config_from_columns(points)
        cols, relations = [], []
        for j, G in enumerate(groups):
            earlier = [0] + [k for g in groups[:j] for k in g]
            vecs = [A.point(k)[sum(dims[:j]):sum(dims[:j + 1])] for k in G]
            c = list(kernel_basis(Matrix.from_columns(vecs, dims[j])).column(0))
            relations.append(c)
            rhs = [-sum((ci * A.matrix[r, k] for ci, k in zip(c, G)), Fraction(0))
                   for r in range(A.matrix.rows)]
            x = solve(A.matrix.select_columns(earlier), rhs)
            col = [Fraction(0)] * A.N
            for k, v in zip(earlier, x):
                col[k] = v
            for k, v in zip(G, c):
                col[k] = v
            cols.append(col)
        B = Matrix.from_columns(cols, A.N)
        out.append(Instance(A, {"gale": B, "dims": dims, "groups": groups,
                                "relations": relations}, label="upper diagonal"))
    return out


def check_leading_monomial(inst: Instance):
    A, B = inst.config, _gale_of(inst)
    if not B.is_dual_of(A):
        return [_failure("Gale dual", "A.B != 0")], {}
    dims, groups = inst.extra["dims"], inst.extra["groups"]
    P = cuspidal_polynomial(A, B)
    expected = Fraction(1)
    top = 0
    for nj, G, c in zip(dims, groups, inst.extra["relations"]):
        blk = _config_from_columns([(0,) * nj] + [A.point(k)[top:top + nj] for k in G])
        Bj = GaleDual(Matrix.from_columns([[-sum(c)] + list(c)], nj + 2))
        Pj = cuspidal_polynomial(blk, Bj)
        expected *= Pj.coefficient((nj,))
        top += nj
    actual = P.coefficient(tuple(dims))
    failures = []
    if actual != expected:
        failures.append(_failure(expected, actual, monomial=dims))
    if P.is_zero():
        failures.append(_failure("nontrivial", "trivial", check="iterated circuit"))
    return failures, {}


# -- divisibility -----------------------------------------------------------

def gen_divisibility(rng, count):
    """Configurations with a point whose deletion leaves a pyramid."""
    out = []
    for i in range(count):
        n = (2, 3, 1)[i % 3]
        while True:
            pts = []
            for _ in range(rng.randint(n + 1, n + 2)):
                pts.append(tuple(rng.randint(-2, 2) for _ in range(n - 1)) + (0,))
            pts.append(tuple(rng.randint(-2, 2) for _ in range(n - 1)) + (rng.nonzero(2),))
            for _ in range(rng.randint(1, 2)):
                pts.append(tuple(rng.randint(-2, 2) for _ in range(n)))
            A = _try_config(_permute(rng, pts))
            if A is not None:
                out.append(Instance(A))
                break
    return out


def check_divisibility(inst: Instance):
    A = inst.config
    B = gale_dual(A)
    P = cuspidal_polynomial(A, B)
    failures, checked = [], 0
    for alpha in range(A.N):
        if not A.deletion_keeps_rank(alpha):
            continue
        Ad = A.delete(alpha)
        if not cuspidal_polynomial(Ad, gale_dual(Ad)).is_zero():
            continue
        checked += 1
        form = Polynomial.linear(B.row(alpha))
        if form.is_zero():
            continue
        if P.exact_divide(form) is None:
            failures.append(_failure(f"<beta_{alpha}, t> divides P", str(P), deleted=alpha))
    return failures, {"defective_deletions": checked}


# -- parallel-rows ----------------------------------------------------------

def _parallel_families(B: GaleDual) -> list[list[int]]:
    fams: dict[tuple, list[int]] = {}
    for k, r in enumerate(B.rows):
        if not any(r):
            continue
        lead = next(x for x in r if x)
        fams.setdefault(tuple(x / lead for x in r), []).append(k)
    return [f for f in fams.values() if len(f) > 1]


def gen_parallel_rows(rng, count):
    A, B = fixtures.ALL["9PT"]
    out = [Instance(A, {"gale": B.matrix}, label="fixture 9PT")]
    for i in range(count):
        zero_sum = i % 2 == 1
        n = rng.randint(2, 3)
        k = rng.randint(2, n)
        d = n - k + 1          # dimension of the remaining part
        while True:
            # remaining points: d + 1 + extra in the first d coordinates
            # at least one extra point keeps m >= 2
            base = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(d + 2 + rng.randint(0, 1))]
            gamma = [Fraction(rng.nonzero(3), rng.randint(1, 2)) for _ in range(k - 1)]
            if zero_sum:
                gamma[-1] = 1 - sum(gamma[:-1])
                if not gamma[-1]:
                    continue
            pts = [p + (0,) * (k - 1) for p in base]
            for j in range(k):
                star = tuple(rng.randint(-2, 2) for _ in range(d))
                tail = [Fraction(int(i == j)) for i in range(k - 1)] if j < k - 1 else gamma
                pts.append(star + tuple(tail))
            A = _try_config(pts)
            if A is not None:
                out.append(Instance(A, {"k": k, "gamma": gamma}))
                break
    return out


def check_parallel_rows(inst: Instance):
    A = inst.config
    B = GaleDual(inst.extra["gale"]) if "gale" in inst.extra else gale_dual(A)
    P = cuspidal_polynomial(A, B)
    if P.is_zero():
        return [], {"trivial": 1}
    if A.m < 2:
        # every row of a circuit's dual is parallel and the bound exceeds deg P
        return [], {"skipped_circuits": 1}
    failures, families, zero_sum = [], 0, 0
    for fam in _parallel_families(B):
        families += 1
        k = len(fam)
        rows = [B.row(j) for j in fam]
        form = Polynomial.linear(rows[0])
        mult = P.linear_multiplicity(form)
        need = k - 1
        if not any(sum(col) for col in zip(*rows)):
            need = k
            zero_sum += 1
        if mult < need:
            failures.append(_failure(f">= {need}", mult, family=fam))
    return failures, {"families": families, "zero_sum_families": zero_sum}


# -- esterov ----------------------------------------------------------------

def esterov_sweep() -> list[Instance]:
    """All multisets of 4..6 points in {0,1,2}^2 spanning the plane."""
    grid = [(x, y) for x in range(3) for y in range(3)]
    out = []
    for N in (4, 5, 6):
        for pts in combinations_with_replacement(grid, N):
            A = _try_config(list(pts))
            if A is not None:
                out.append(Instance(A))
    return out


def gen_esterov(rng, count):
    if count == 0:
        return esterov_sweep()
    out = []
    for i in range(count):
        N = (5, 6, 7)[i % 3]
        bound = (1, 2)[(i // 3) % 2]
        out.append(Instance(draw_configuration(rng, 3, N, bound)))
    return out


def check_esterov(inst: Instance):
    A = inst.config
    defective = cuspidal_polynomial(A, gale_dual(A)).is_zero()
    w = contains_iterated_circuit(A)
    failures = []
    if defective != (w is None):
        failures.append(_failure(f"witness {'absent' if defective else 'present'}",
                                 w.to_dict() if w else None, dual_defective=defective))
    if w is not None and not check_witness(A, w):
        failures.append(_failure("witness replays to block form", w.to_dict()))
    return failures, {"defective": int(defective)}


# -- bivariate-table --------------------------------------------------------

def _affine_image(rng, pts):
    while True:
        M = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        if M[0][0] * M[1][1] - M[0][1] * M[1][0]:
            break
    s = (rng.randint(-3, 3), rng.randint(-3, 3))
    return [(M[0][0] * x + M[0][1] * y + s[0], M[1][0] * x + M[1][1] * y + s[1]) for x, y in pts]


def _distinct_params(rng, count, exclude=()):
    vals: list[Fraction] = []
    while len(vals) < count:
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if v not in vals and v not in exclude:
            vals.append(v)
    return vals


def _class_points(rng, kind):
    if kind == "pyramid":
        N = rng.randint(4, 7)
        a = (random_rational(rng), random_rational(rng))
        d = (Fraction(rng.nonzero(3)), Fraction(rng.randint(-3, 3)))
        line = [(a[0] + s * d[0], a[1] + s * d[1]) for s in _distinct_params(rng, N - 1)]
        while True:
            apex = (random_rational(rng), random_rational(rng))
            if (apex[0] - a[0]) * d[1] - (apex[1] - a[1]) * d[0]:
                return line + [apex]
    if kind == "nonreal_parabola":
        while True:
            tri = [(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))) for _ in range(3)]
            (ax, ay), (bx, by), (cx, cy) = tri
            if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax):
                break
        w = [Fraction(rng.randint(1, 5)) for _ in range(3)]
        tot = sum(w)
        inner = (sum(wi * p[0] for wi, p in zip(w, tri)) / tot,
                 sum(wi * p[1] for wi, p in zip(w, tri)) / tot)
        return tri + [inner]
    if kind == "real_parabola":
        N = rng.randint(4, 7)
        a = Fraction(rng.nonzero(3), rng.randint(1, 3))
        b, c = random_rational(rng), random_rational(rng)
        pts = [(x, a * x * x + b * x + c) for x in _distinct_params(rng, N)]
    elif kind == "hyperbola":
        N = rng.randint(5, 7)
        c = Fraction(rng.nonzero(5), rng.randint(1, 3))
        pts = [(x, c / x) for x in _distinct_params(rng, N, exclude=(0,))]
    elif kind == "ellipse":
        N = rng.randint(5, 7)
        a, b = Fraction(rng.randint(1, 4)), Fraction(rng.randint(1, 4))
        pts = [(a * (1 - s * s) / (1 + s * s), b * 2 * s / (1 + s * s)) for s in _distinct_params(rng, N)]
    else:  # generic: no conic through all points
        while True:
            N = rng.randint(6, 7)
            pts = list(dict.fromkeys((Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)))
                                     for _ in range(N)))
            if len(pts) < 6:
                continue
            mono = Matrix.from_rows([[x * x, x * y, y * y, x, y, 1] for x, y in pts], 6)
            if rank(mono) == 6:
                break
    return _affine_image(rng, pts)


_CLASS_ORDER = ("pyramid", "nonreal_parabola", "real_parabola", "hyperbola", "ellipse", "generic")


def gen_bivariate_table(rng, count):
    out = []
    for i in range(count):
        kind = _CLASS_ORDER[i % 6]
        while True:
            A = _try_config(_class_points(rng, kind))
            if A is not None:
                break
        out.append(Instance(A, {"class": kind}))
    return out


def check_bivariate_table(inst: Instance):
    A = inst.config
    want = inst.extra["class"]
    try:
        got = classify_conic(A)
    except UnrecognizedSignature as exc:
        return [_failure(want, str(exc))], {}
    oracle = conic_fit_oracle(A.points)
    failures = []
    if got.kind != want:
        failures.append(_failure(want, got.kind, signature=list(got.signature)))
    if not oracle_agrees(got.kind, oracle):
        failures.append(_failure(got.kind, oracle.kind, check="oracle agreement"))
    return failures, {want: 1}


# -- g4-vanish and g3-factor ------------------------------------------------

def _random_points(rng, k):
    return [(random_rational(rng, 4, 3), random_rational(rng, 4, 3)) for _ in range(k)]


def gen_g4_vanish(rng, count):
    return [Instance(fixtures.SEGMENT, {"rows": _random_points(rng, 4), "cols": _random_points(rng, 4)})
            for _ in range(count)]


def check_g4_vanish(inst: Instance):
    v = g_minor(inst.extra["rows"], inst.extra["cols"])
    return ([_failure(0, v)] if v else []), {}


def gen_g3_factor(rng, count):
    return [Instance(fixtures.SEGMENT, {"rows": _random_points(rng, 3), "cols": _random_points(rng, 3)})
            for _ in range(count)]


def check_g3_factor(inst: Instance):
    rows, cols = inst.extra["rows"], inst.extra["cols"]
    lhs = g_minor(rows, cols)
    rhs = evaluate_H(*rows) * evaluate_H(*cols) / 4
    return ([_failure(rhs, lhs)] if lhs != rhs else []), {"nonzero": int(bool(lhs))}


# -- equivariance -----------------------------------------------------------

def gen_equivariance(rng, count):
    out = []
    for inst in _mixed_random(rng, count, dims=(2, 1, 3), max_points=7):
        A = inst.config
        inst.extra["T"] = random_invertible(rng, A.m) if A.m else Matrix.identity(0)
        inst.extra["W"] = random_invertible(rng, A.n)
        inst.extra["v"] = [random_rational(rng) for _ in range(A.n)]
        out.append(inst)
    return out


def _moved(A: PointConfiguration, W: Matrix, v) -> PointConfiguration:
    hat = W @ A.hat
    rows = [A.matrix.row(0)] + [[x + v[i] for x in hat.row(i)] for i in range(A.n)]
    return PointConfiguration(Matrix.from_rows(rows, A.N))


def check_equivariance(inst: Instance):
    A = inst.config
    B = gale_dual(A)
    T, W, v = inst.extra["T"], inst.extra["W"], inst.extra["v"]
    P = cuspidal_polynomial(A, B)
    failures = []
    PT = cuspidal_polynomial(A, B.transformed(T))
    if PT != P.substitute_linear(T):
        failures.append(_failure(P.substitute_linear(T), PT, check="gale change"))
    zero = [Fraction(0)] * A.n
    shifted = _moved(A, Matrix.identity(A.n), v)
    if cuspidal_polynomial(shifted, B) != P:
        failures.append(_failure(P, cuspidal_polynomial(shifted, B), check="translation"))
    mixed = _moved(A, W, zero)
    dW = det(W)
    if cuspidal_polynomial(mixed, B) != P * (dW * dW):
        failures.append(_failure(P * (dW * dW), cuspidal_polynomial(mixed, B), check="row mixing"))
    if A.n == 2 and A.m:
        s = signature_2d(A)
        both = _moved(A, W, v)
        candidates = {
            "form": signature_symmetric(P.quadratic_matrix()) if P else None,
            "gale change": signature_symmetric(PT.quadratic_matrix()) if PT else None,
            "moved form": (signature_symmetric(cuspidal_polynomial(both, B).quadratic_matrix())
                           if P else None),
            "moved normal form": signature_2d(both),
        }
        for name, got in candidates.items():
            if got is None:
                got = (0, 0, A.m)
            if tuple(got) != tuple(s):
                failures.append(_failure(list(s), list(got), check=f"signature under {name}"))
    return failures, {}


# -- registry and runner ----------------------------------------------------

@dataclass(frozen=True)
class Suite:
    generate: Callable
    check: Callable


SUITES = {
    "lemma-schur": Suite(gen_lemma_schur, check_lemma_schur),
    "hessian": Suite(gen_hessian, check_hessian),
    "jacobian": Suite(gen_jacobian, check_jacobian),
    "restriction": Suite(gen_restriction, check_restriction),
    "diagonal-product": Suite(gen_diagonal_product, check_diagonal_product),
    "leading-monomial": Suite(gen_leading_monomial, check_leading_monomial),
    "divisibility": Suite(gen_divisibility, check_divisibility),
    "parallel-rows": Suite(gen_parallel_rows, check_parallel_rows),
    "esterov": Suite(gen_esterov, check_esterov),
    "bivariate-table": Suite(gen_bivariate_table, check_bivariate_table),
    "g4-vanish": Suite(gen_g4_vanish, check_g4_vanish),
    "g3-factor": Suite(gen_g3_factor, check_g3_factor),
    "equivariance": Suite(gen_equivariance, check_equivariance),
}


def _run_one(args):
    name, inst = args
    try:
        return SUITES[name].check(inst)
    except InternalCheckError as exc:
        return [_failure("no internal error", f"{type(exc).__name__}: {exc}")], {}


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("CUSPIDAL_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(name: str, seed: int, count: int, workers: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    instances = SUITES[name].generate(SplitMix64(seed), count)
    workers = workers or _workers()
    jobs = [(name, inst) for inst in instances]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_run_one(j) for j in jobs]
    failures, stats = [], {}
    for idx, (inst, (fails, counters)) in enumerate(zip(instances, results)):
        for f in fails:
            failures.append({"index": idx, "instance": inst.to_dict(), **f})
        for k, v in counters.items():
            stats[k] = stats.get(k, 0) + v
    return SuiteReport(name, count, seed, failures, time.perf_counter() - start,
                       dict(sorted(stats.items())), len(instances))
