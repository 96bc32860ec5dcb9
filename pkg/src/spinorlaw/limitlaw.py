"""Boundary limit of the character measure.

With ``Theta_i = N exp(-2 t_i)`` held fixed while ``N -> infinity``, the
probability of the component ``lambda = N - 2s`` tends to a Poisson-type
density in ``s``.  This module computes that density and compares it with
the finite-N measure.
"""
from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .characters import character_An_weightsum, character_Bn
from .errors import InvalidWeightError
from .measure import DEFAULT_DPS, character_measure_float
from .rootsys import lambda_from_s


def _check_theta(theta: Sequence[float]) -> tuple[float, ...]:
    theta = tuple(float(x) for x in theta)
    if not theta or any(not (x > 0) or math.isinf(x) for x in theta):
        raise InvalidWeightError(f"Theta entries must be positive and finite: {theta}")
    return theta


def _check_s(s: Sequence[int]) -> tuple[int, ...]:
    s = tuple(int(x) for x in s)
    if not s or s[0] < 0 or any(s[i] > s[i + 1] for i in range(len(s) - 1)):
        raise InvalidWeightError(f"s must be non-negative and weakly increasing: {s}")
    return s


def t_from_theta(N: float, theta: Sequence[float]) -> list[float]:
    """``t_i = ln(N / Theta_i) / 2``."""
    theta = _check_theta(theta)
    if N < 1:
        raise InvalidWeightError(f"N must be >= 1, got {N}")
    return [0.5 * math.log(N / th) for th in theta]


def theta_from_t(N: float, t: Sequence[float]) -> list[float]:
    return [N * math.exp(-2 * ti) for ti in t]


def critical_point(N: int, theta: Sequence[float], dps: int = DEFAULT_DPS) -> list:
    """Torus point ``y_i = e^{t_i} = sqrt(N / Theta_i)`` as mpmath numbers."""
    theta = _check_theta(theta)
    with mpmath.workdps(dps):
        return [mpmath.sqrt(mpmath.mpf(N) / mpmath.mpf(th)) for th in theta]


def gamma_from_s(s: Sequence[int]) -> tuple[Fraction, ...]:
    """sl_n highest weight of the boundary slice: ``gamma_i = 2 mean(s) - 2 s_i``."""
    s = _check_s(s)
    mean2 = Fraction(2 * sum(s), len(s))
    return tuple(mean2 - 2 * x for x in s)


def tau_from_theta(theta: Sequence[float]) -> list[float]:
    """``tau_i = t_{i+1} - t_i = ln(Theta_i / Theta_{i+1}) / 2``; independent of ``N``."""
    theta = _check_theta(theta)
    return [0.5 * math.log(theta[i] / theta[i + 1]) for i in range(len(theta) - 1)]


def point_from_tau(tau: Sequence[float]) -> list[float]:
    """A torus point with the given differences ``t_{i+1} - t_i`` (taking ``t_1 = 0``)."""
    t = [0.0]
    for x in tau:
        t.append(t[-1] + x)
    return [math.exp(x) for x in t]


def slice_character(s: Sequence[int], theta: Sequence[float]) -> float:
    """``chi^{sl_n}_gamma(e^tau)`` for the slice weight of ``s``, evaluated at ``y_i = Theta_i^{-1/2}``."""
    theta = _check_theta(theta)
    return float(character_An_weightsum(gamma_from_s(s), [th ** -0.5 for th in theta]))


def _vandermonde(s: Sequence[int]) -> int:
    value = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            value *= s[j] + j - s[i] - i
    return value


def limit_density(n: int, s: Sequence[int], theta: Sequence[float]) -> float:
    """Limit probability of ``s`` for fixed ``Theta``.

    ``prod_{i<j}(s_j + j - s_i - i) * prod_k Theta_k^{|s|/n} e^{-Theta_k} / (s_k + k - 1)!
    * chi_gamma(e^tau)``; products are accumulated in log space.
    """
    s = _check_s(s)
    theta = _check_theta(theta)
    if len(s) != n or len(theta) != n:
        raise ValueError(f"rank mismatch: n={n}, s={s}, theta={theta}")
    prefactor = _vandermonde(s)
    if prefactor == 0:
        return 0.0
    mean = sum(s) / n
    log_value = math.log(prefactor)
    for k, (sk, th) in enumerate(zip(s, theta)):
        log_value += mean * math.log(th) - th - math.lgamma(sk + k + 1)
    return math.exp(log_value) * slice_character(s, theta)


def valid_s(n: int, s_cap: int):
    """Every weakly increasing ``s`` with ``0 <= s_1`` and ``s_n <= s_cap``."""
    return itertools.combinations_with_replacement(range(s_cap + 1), n)


def limit_normalization(n: int, theta: Sequence[float], s_cap: int) -> float:
    """Truncated total mass ``sum_{s_n <= s_cap} limit_density``; a diagnostic, expected near 1."""
    return math.fsum(limit_density(n, s, theta) for s in valid_s(n, s_cap))


def boundary_factorization_ratio(s: Sequence[int], N: int, theta: Sequence[float],
                                 dps: int = DEFAULT_DPS) -> float:
    """``chi_lambda(y) / [chi_gamma(y) (y_1...y_n)^{N - 2|s|/n}]`` at ``y_i = sqrt(N/Theta_i)``.

    Tends to 1 as ``N`` grows: only the slice of weights with maximal
    coordinate sum survives.
    """
    s = _check_s(s)
    n = len(s)
    lam = lambda_from_s(N, s)
    with mpmath.workdps(dps):
        y = critical_point(N, theta, dps)
        chi = character_Bn(lam, y)
        slice_value = character_An_weightsum(gamma_from_s(s), y)
        shift = N - mpmath.mpf(2 * sum(s)) / n
        return float(chi / (slice_value * mpmath.fprod(y) ** shift))


@dataclass
class ConvergenceRecord:
    N: int
    s: tuple[int, ...]
    theta: tuple[float, ...]
    p_exact: float
    p_limit: float
    rel_err: float

    def row(self) -> dict:
        row = {"N": self.N}
        row.update({f"s_{i + 1}": v for i, v in enumerate(self.s)})
        row.update({f"theta_{i + 1}": repr(v) for i, v in enumerate(self.theta)})
        row.update(p_exact=repr(self.p_exact), p_limit=repr(self.p_limit), rel_err=repr(self.rel_err))
        return row


def convergence_table(n: int, theta: Sequence[float], s_list: Iterable[Sequence[int]],
                      N_list: Iterable[int], dps: int = DEFAULT_DPS) -> list[ConvergenceRecord]:
    """Finite-N probability at the critical point versus the limit density.

    Records are ordered by ascending ``N`` then by ``s`` as given; ``s`` with
    zero limit density or invalid for a given ``N`` are skipped.
    """
    theta = _check_theta(theta)
    s_list = [_check_s(s) for s in s_list]
    records = []
    for N in sorted(N_list):
        y = critical_point(N, theta, dps)
        for s in s_list:
            if 2 * s[-1] > N:
                continue
            p_limit = limit_density(n, s, theta)
            if p_limit == 0.0:
                continue
            p_exact = float(character_measure_float(n, N, s, y, dps))
            records.append(ConvergenceRecord(N, s, theta, p_exact, p_limit, abs(p_exact / p_limit - 1)))
    return records


def convergence_fieldnames(n: int) -> list[str]:
    return (["N"] + [f"s_{i + 1}" for i in range(n)] + [f"theta_{i + 1}" for i in range(n)]
            + ["p_exact", "p_limit", "rel_err"])


def write_convergence_csv(records: Sequence[ConvergenceRecord], n: int, stream,
                          comment: str | None = None) -> None:
    writer = csv.DictWriter(stream, fieldnames=convergence_fieldnames(n), lineterminator="\n")
    writer.writeheader()
    writer.writerows(r.row() for r in records)
    if comment is not None:
        stream.write(f"# {comment}\n")
