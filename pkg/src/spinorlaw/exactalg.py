"""Exact arithmetic: factorials, rational torus points, determinants and
sparse multivariate Laurent polynomials with big-integer coefficients.

Rationals are :class:`fractions.Fraction`; integers are Python ints, so
nothing here ever wraps around or rounds.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidWeightError

Exponent = tuple[int, ...]


def factorial(k: int) -> int:
    """Exact ``k!`` for ``k >= 0``."""
    if k < 0:
        raise ValueError(f"factorial of negative number {k}")
    return math.factorial(k)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidWeightError(f"not a rational number: {text!r}") from exc


def torus_point(values: Iterable) -> tuple[Fraction, ...]:
    """Validate and convert coordinates ``y_i = e^{t_i}`` to a tuple of positive fractions."""
    pt = tuple(v if isinstance(v, Fraction) else
               parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values)
    if not pt:
        raise InvalidWeightError("torus point must have at least one coordinate")
    if any(v <= 0 for v in pt):
        raise InvalidWeightError(f"torus point coordinates must be > 0: {pt}")
    return pt


def det(matrix: Sequence[Sequence]):
    """Determinant by fraction-free (Bareiss) elimination.

    Works over any exact or floating field type supporting ``+ - * /``
    (ints, Fractions, mpmath numbers).  With integer entries every division
    is exact.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[k][k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = pivot
    return sign * a[n - 1][n - 1]


class LaurentPoly:
    """Sparse Laurent polynomial in ``y_1, ..., y_n`` with integer coefficients.

    Stored as a mapping from exponent vectors to nonzero coefficients;
    instances are treated as immutable.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> "LaurentPoly":
        return cls(len(exp), {tuple(exp): c})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items(), reverse=True))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        parts = []
        for exp, c in self:
            mono = "*".join(f"y{i + 1}^{e}" for i, e in enumerate(exp) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return "LaurentPoly(" + " + ".join(parts) + ")"

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    def __pow__(self, N: int) -> "LaurentPoly":
        if N < 0:
            raise ValueError("negative powers of Laurent polynomials are not supported")
        result = LaurentPoly.constant(self.nvars)
        base = self
        while N:
            if N & 1:
                result = result * base
            N >>= 1
            if N:
                base = base * base
        return result

    def evaluate(self, pt: Sequence):
        """Value at ``y = pt``; exact when ``pt`` holds Fractions."""
        if len(pt) != self.nvars:
            raise ValueError(f"point has {len(pt)} coordinates, polynomial has {self.nvars} variables")
        if any(v == 0 for v in pt):
            raise InvalidWeightError("Laurent polynomial evaluated at a zero coordinate")
        total = Fraction(0) if all(isinstance(v, (int, Fraction)) for v in pt) else 0
        for exp, c in self._terms.items():
            term = c
            for v, e in zip(pt, exp):
                if e:
                    term = term * (v ** e if not isinstance(v, int) else Fraction(v) ** e)
            total += term
        return total


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_pow(p: LaurentPoly, N: int) -> LaurentPoly:
    return p ** N


def poly_eval(p: LaurentPoly, pt: Sequence):
    return p.evaluate(pt)
