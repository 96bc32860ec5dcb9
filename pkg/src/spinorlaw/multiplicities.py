"""Multiplicities of irreducible components in the N-th tensor power of the
spinor representation of so(2n+1).

The closed formula is evaluated in exact rationals and must land on an
integer; :func:`tensor_decompose_oracle` recomputes the same numbers by
repeatedly tensoring with the spinor module.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .characters import dim_weyl
from .errors import ScaleGuardError
from .exactalg import factorial
from .rootsys import lambda_from_s, rho, validate_s

ORACLE_MAX_RANK = 4
ORACLE_MAX_POWER = 64


def _reduced_product(n: int, N: int, s: Sequence[int]) -> int:
    """The polynomial factor ``prod_l a_l * prod_{i<j} (a_i - a_j)(a_i + a_j)`` written in ``s``."""
    value = 1
    for l in range(1, n + 1):
        value *= N - 2 * s[l - 1] + 2 * n - 2 * l + 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            si, sj = s[i - 1], s[j - 1]
            value *= (-2 * si - 2 * i + 2 * sj + 2 * j) * (2 * N - 2 * si - 2 * i - 2 * sj - 2 * j + 4 * n + 2)
    return value


def multiplicity_exact(n: int, N: int, s: Sequence[int]) -> int:
    """Exact multiplicity of ``L^{N - 2s}`` in ``(L^{omega_n})^{(x) N}``."""
    s = validate_s(N, s)
    if len(s) != n:
        raise ValueError(f"s has {len(s)} entries, expected rank {n}")
    value = Fraction(_reduced_product(n, N, s), 2 ** (n * (n - 1)))
    for k in range(1, n + 1):
        sk = s[k - 1]
        value *= Fraction(factorial(N + 2 * (k - 1)),
                          factorial(N - sk + 2 * n - k) * factorial(sk + k - 1))
    assert value.denominator == 1, f"non-integral multiplicity {value} for n={n}, N={N}, s={s}"
    return int(value)


def multiplicity_shifted(n: int, N: int, s: Sequence[int]) -> int:
    """The same multiplicity written in the rho-shifted coordinates ``a_i = lambda_i + rho_i``.

    Kept as a literal second transcription so the rewrite into ``s`` is checked.
    """
    lam = lambda_from_s(N, s)
    a = [l + r for l, r in zip(lam, rho(n))]
    value = Fraction(1)
    for k in range(n):
        value *= Fraction(factorial(N + 2 * k),
                          2 ** (2 * k)
                          * factorial((N + a[k] + 2 * n - 1) // 2)
                          * factorial((N - a[k] + 2 * n - 1) // 2))
    value *= math.prod(a)
    for i in range(n):
        for j in range(i + 1, n):
            value *= a[i] ** 2 - a[j] ** 2
    assert value.denominator == 1
    return int(value)


def log_multiplicity(n: int, N: int, s: Sequence[int]):
    """``log M`` via log-gamma at the current mpmath precision; for very large ``N``."""
    s = validate_s(N, s)
    total = -n * (n - 1) * mpmath.log(2) + mpmath.log(_reduced_product(n, N, s))
    for k in range(1, n + 1):
        sk = s[k - 1]
        total += (mpmath.loggamma(N + 2 * (k - 1) + 1)
                  - mpmath.loggamma(N - sk + 2 * n - k + 1)
                  - mpmath.loggamma(sk + k))
    return total


def multiplicity_asymptotic(n: int, N: int, s: Sequence[int]) -> float:
    """Leading large-N term ``prod_k N^{s_k}/(s_k+k-1)! * prod_{i<j} (s_j + j - s_i - i)``."""
    s = validate_s(N, s)
    if len(s) != n:
        raise ValueError(f"s has {len(s)} entries, expected rank {n}")
    vandermonde = 1
    for i in range(n):
        for j in range(i + 1, n):
            vandermonde *= s[j] + j - s[i] - i
    log_n = math.log(N) if N > 0 else 0.0  # N = 0 admits only s = 0
    return vandermonde * math.exp(sum(sk * log_n - math.lgamma(sk + k + 1) for k, sk in enumerate(s)))


@dataclass
class DecompositionTable:
    """Multiplicities ``{s: M}`` of the N-th spinor tensor power of so(2n+1)."""

    n: int
    N: int
    multiplicities: dict[tuple[int, ...], int] = field(default_factory=dict)

    def total_dimension(self) -> int:
        return sum(m * dim_weyl(lambda_from_s(self.N, s)) for s, m in self.multiplicities.items())


def _tensor_with_spinor(table: dict[tuple[int, ...], int], n: int) -> dict[tuple[int, ...], int]:
    """One Brauer-Klimyk step: ``L^mu (x) L^{omega_n}`` summed over the 2^n spinor weights.

    A rho-shifted weight with a zero coordinate or a tie after taking absolute
    values is fixed by a reflection and contributes nothing; otherwise its sign
    is that of the signed permutation sorting it into strictly decreasing
    positive form.
    """
    r = rho(n)
    out: dict[tuple[int, ...], int] = {}
    for mu, m in table.items():
        for nu in itertools.product((1, -1), repeat=n):
            shifted = [mu[i] + r[i] + nu[i] for i in range(n)]
            absolute = [abs(x) for x in shifted]
            if 0 in absolute or len(set(absolute)) < n:
                continue
            sign = -1 if sum(x < 0 for x in shifted) % 2 else 1
            inversions = sum(absolute[i] < absolute[j] for i in range(n) for j in range(i + 1, n))
            if inversions % 2:
                sign = -sign
            ordered = sorted(absolute, reverse=True)
            target = tuple(ordered[i] - r[i] for i in range(n))
            out[target] = out.get(target, 0) + sign * m
    return {k: v for k, v in out.items() if v}


def tensor_decompose_oracle(n: int, N: int, *, force: bool = False) -> DecompositionTable:
    """Decompose ``(L^{omega_n})^{(x) N}`` by iterated tensoring with the spinor module.

    Raises
    ------
    ScaleGuardError
        If ``n > 4`` or ``N > 64`` and ``force`` is not set.
    """
    if n < 1 or N < 0:
        raise ValueError(f"need n >= 1 and N >= 0, got n={n}, N={N}")
    if not force and (n > ORACLE_MAX_RANK or N > ORACLE_MAX_POWER):
        raise ScaleGuardError(
            f"oracle limited to n <= {ORACLE_MAX_RANK}, N <= {ORACLE_MAX_POWER}; got n={n}, N={N}")
    table = {(0,) * n: 1}
    for _ in range(N):
        table = _tensor_with_spinor(table, n)
    mults = {tuple((N - x) // 2 for x in lam): m for lam, m in table.items()}
    return DecompositionTable(n, N, dict(sorted(mults.items())))
