"""Sparse multivariate polynomials with rational coefficients.

A polynomial lives in a fixed number of variables ``t1, ..., tm`` and maps
exponent tuples to nonzero Fractions.  Terms are ordered by descending total
degree and, within a degree, by ascending exponent tuple; that order is used
for printing and for the JSON serialization, so equal polynomials always
serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError, ParseError, ShapeError
from .linalg import Matrix, to_fraction

Monomial = tuple


def _term_key(item):
    exps = item[0]
    return (-sum(exps), exps)


class Polynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ShapeError(f"bad exponent vector {exps} for {nvars} variables")
            c = to_fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.nvars, self._terms))

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # caller guarantees canonical input: tuple keys, nonzero Fractions
        p = object.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coefficients: Sequence) -> "Polynomial":
        """The linear form sum_i c_i t_i."""
        m = len(coefficients)
        terms = {}
        for i, c in enumerate(coefficients):
            e = [0] * m
            e[i] = 1
            terms[tuple(e)] = c
        return cls(m, terms)

    # -- basic accessors --------------------------------------------------

    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=_term_key)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self._terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ShapeError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = to_fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw(self.nvars, {e: c * v for e, v in self._terms.items()})
        self._check(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.nvars, frozenset(self._terms.items()))))
        return self._hash

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ShapeError(f"point has {len(point)} coordinates, expected {self.nvars}")
        x = [to_fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for xi, ei in zip(x, e):
                if ei:
                    term *= xi ** ei
            total += term
        return total

    __call__ = evaluate

    def restrict_zero(self, i: int) -> "Polynomial":
        """Set variable ``i`` to zero and drop it from the variable list."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        return Polynomial._raw(self.nvars - 1, {
            e[:i] + e[i + 1:]: c for e, c in self._terms.items() if e[i] == 0})

    def embed(self, offset: int, nvars: int) -> "Polynomial":
        """The same polynomial with its variables placed at ``offset`` among ``nvars``."""
        if offset < 0 or offset + self.nvars > nvars:
            raise ShapeError("embedding does not fit")
        pad = (0,) * (nvars - offset - self.nvars)
        return Polynomial._raw(nvars, {(0,) * offset + e + pad: c for e, c in self._terms.items()})

    def substitute_linear(self, T: Matrix) -> "Polynomial":
        """Return p(T t): variable i becomes sum_j T[i, j] t_j."""
        if T.rows != self.nvars:
            raise ShapeError("substitution matrix has the wrong number of rows")
        m = T.cols
        images = [Polynomial.linear(T.row(i)) if m else Polynomial.zero(0) for i in range(self.nvars)]
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = images[i] ** k
            return powers[(i, k)]

        out = Polynomial.zero(m)
        for e, c in self._terms.items():
            term = Polynomial.constant(c, m)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    # -- division ---------------------------------------------------------

    def _leading(self):
        e = max(self._terms)
        return e, self._terms[e]

    def exact_divide(self, d: "Polynomial") -> "Polynomial | None":
        """Quotient ``q`` with ``self == q * d``, or None when ``d`` does not divide.

        Division by lex-leading terms: if ``d`` divides the running remainder
        then the remainder's leading monomial is divisible by that of ``d``;
        a failed monomial division therefore proves indivisibility.
        """
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ld, lc = d._leading()
        rem = dict(self._terms)
        quot: dict[tuple, Fraction] = {}
        while rem:
            le = max(rem)
            if any(a < b for a, b in zip(le, ld)):
                return None
            qe = tuple(a - b for a, b in zip(le, ld))
            qc = rem[le] / lc
            quot[qe] = qc
            for e, c in d._terms.items():
                k = tuple(a + b for a, b in zip(qe, e))
                v = rem.get(k, 0) - qc * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Polynomial._raw(self.nvars, quot)

    def divides(self, p: "Polynomial") -> bool:
        return p.exact_divide(self) is not None

    def linear_multiplicity(self, form) -> int:
        """Largest e such that form**e divides self."""
        if not isinstance(form, Polynomial):
            form = Polynomial.linear(form)
        self._check(form)
        if self.is_zero():
            raise ValueError("multiplicity in the zero polynomial is unbounded")
        if form.is_zero() or not form.is_homogeneous(1):
            raise ValueError("expected a nonzero linear form")
        e, p = 0, self
        while True:
            q = p.exact_divide(form)
            if q is None:
                return e
            e, p = e + 1, q

    # -- symmetric matrix of a quadratic form -----------------------------

    def quadratic_matrix(self) -> Matrix:
        """Symmetric Q with t^T Q t == self; self must be a quadratic form."""
        if not self.is_homogeneous(2):
            raise ValueError("not a quadratic form")
        m = self.nvars
        q = [[Fraction(0)] * m for _ in range(m)]
        for e, c in self._terms.items():
            idx = [i for i, k in enumerate(e) for _ in range(k)]
            i, j = idx
            if i == j:
                q[i][i] = c
            else:
                q[i][j] = q[j][i] = c / 2
        return Matrix.from_rows(q, m)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {"vars": self.nvars,
                "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, doc: dict) -> "Polynomial":
        try:
            nvars = int(doc["vars"])
            terms: dict[tuple, Fraction] = {}
            for k, t in enumerate(doc["terms"]):
                e = tuple(t["exp"])
                if e in terms:
                    raise ParseError("repeated monomial", f"terms[{k}]")
                terms[e] = to_fraction(t["coeff"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InputError):
                raise
            raise ParseError(f"malformed polynomial: {exc}") from exc
        return cls(nvars, terms)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
        return cls.from_dict(doc)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(f"t{i + 1}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self})"


def product(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    out = Polynomial.constant(1, nvars)
    for p in polys:
        out = out * p
    return out
