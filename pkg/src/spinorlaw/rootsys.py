"""Bookkeeping for the B_n root system and its A_{n-1} subsystem.

All weights live in doubled orthogonal coordinates: a weight
``sum(x_i e_i)`` is stored as the integer tuple ``(2 x_1, ..., 2 x_n)``.
In this scale the spinor weights are the vertices ``(+-1, ..., +-1)`` of a
cube and every character is a Laurent polynomial with integer exponents.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidWeightError

Weight = tuple[int, ...]


def rho(n: int) -> Weight:
    """Weyl vector of B_n in doubled coordinates, ``(2n-1, 2n-3, ..., 1)``."""
    if n < 1:
        raise InvalidWeightError(f"rank must be >= 1, got {n}")
    return tuple(2 * (n - i) + 1 for i in range(1, n + 1))


def is_dominant(w: Sequence[int]) -> bool:
    """True iff ``w_1 >= w_2 >= ... >= w_n >= 0``."""
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1)) and (len(w) == 0 or w[-1] >= 0)


def validate_s(N: int, s: Sequence[int]) -> tuple[int, ...]:
    """Check a boundary offset vector against the power ``N`` and return it as a tuple.

    Raises
    ------
    InvalidWeightError
        If ``s`` is empty, negative, not weakly increasing, or has ``2 s_n > N``.
    """
    s = tuple(int(x) for x in s)
    if not s:
        raise InvalidWeightError("s must have at least one entry")
    if N < 0:
        raise InvalidWeightError(f"power N must be >= 0, got {N}")
    if s[0] < 0:
        raise InvalidWeightError(f"s entries must be non-negative: {s}")
    if any(s[i] > s[i + 1] for i in range(len(s) - 1)):
        raise InvalidWeightError(f"s must be weakly increasing: {s}")
    if 2 * s[-1] > N:
        raise InvalidWeightError(f"s_n = {s[-1]} exceeds N/2 = {N / 2} (lambda_n < 0)")
    return s


def lambda_from_s(N: int, s: Sequence[int]) -> Weight:
    """Highest weight ``lambda_i = N - 2 s_i`` of a component of the N-th spinor power."""
    s = validate_s(N, s)
    return tuple(N - 2 * x for x in s)


def s_from_lambda(N: int, lam: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`lambda_from_s`; rejects weights off the tensor-power lattice."""
    lam = tuple(int(x) for x in lam)
    if not is_dominant(lam):
        raise InvalidWeightError(f"weight {lam} is not dominant")
    if any((N - x) % 2 for x in lam):
        raise InvalidWeightError(f"weight {lam} has coordinates of parity different from N={N}")
    if lam[0] > N:
        raise InvalidWeightError(f"weight {lam} exceeds the top weight of the power N={N}")
    return tuple((N - x) // 2 for x in lam)


def dominant_conjugate(w: Sequence[int]) -> Weight:
    """The unique dominant weight in the W(B_n)-orbit of ``w``."""
    return tuple(sorted((abs(x) for x in w), reverse=True))


def positive_roots(n: int) -> list[Weight]:
    """Positive roots of B_n in doubled coordinates: ``2(e_i -+ e_j)`` and ``2 e_i``."""
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            minus = [0] * n
            minus[i], minus[j] = 2, -2
            plus = [0] * n
            plus[i], plus[j] = 2, 2
            roots.append(tuple(minus))
            roots.append(tuple(plus))
        short = [0] * n
        short[i] = 2
        roots.append(tuple(short))
    return roots


@dataclass(frozen=True)
class WeylElement:
    """A signed permutation acting by ``w(x)_{perm[i]} = signs[i] * x_i``.

    Type A elements carry all signs equal to +1.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def sign(self) -> int:
        """``(-1)^length``, i.e. the determinant of the signed permutation matrix."""
        det = 1
        for x in self.signs:
            det *= x
        p = self.perm
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    det = -det
        return det

    def act(self, w: Sequence[int]) -> Weight:
        out = [0] * len(w)
        for i, x in enumerate(w):
            out[self.perm[i]] = self.signs[i] * x
        return tuple(out)


def weyl_elements(kind: str, n: int) -> Iterator[WeylElement]:
    """Enumerate W(B_n) (``kind='B'``) or W(A_{n-1}) (``kind='A'``).

    Elements come in lexicographic order of (permutation, sign vector), with
    sign vectors ordered ``+1`` before ``-1``.
    """
    if n < 1:
        raise InvalidWeightError(f"rank must be >= 1, got {n}")
    kind = kind.upper()
    if kind not in ("A", "B"):
        raise ValueError(f"unknown Weyl group type {kind!r}")
    sign_vectors = list(itertools.product((1, -1), repeat=n)) if kind == "B" else [(1,) * n]
    for perm in itertools.permutations(range(n)):
        for signs in sign_vectors:
            yield WeylElement(perm, signs)
