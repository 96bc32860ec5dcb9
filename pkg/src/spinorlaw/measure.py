"""Character measure and Plancherel-type measure on the components of the
N-th spinor tensor power.

Exact mode works with rational torus points and returns Fractions whose sum
over the support is literally 1.  Float mode evaluates the same expression
in mpmath arithmetic, which has no exponent overflow and so copes with the
huge powers ``y^N`` that appear at large ``N``.
"""
from __future__ import annotations

import csv
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .characters import character_Bn, dim_weyl
from .errors import InvalidWeightError, ScaleGuardError
from .exactalg import torus_point
from .multiplicities import log_multiplicity, multiplicity_exact
from .rootsys import lambda_from_s, validate_s

MAX_RANK = 4
EXACT_MAX_POWER = 64
FLOAT_MAX_POWER = 10 ** 6
DEFAULT_DPS = 50


def support(n: int, N: int) -> list[tuple[int, ...]]:
    """All ``s`` with positive multiplicity, in lexicographic order."""
    if n < 1 or N < 0:
        raise InvalidWeightError(f"need n >= 1 and N >= 0, got n={n}, N={N}")
    return [s for s in itertools.combinations_with_replacement(range(N // 2 + 1), n)
            if multiplicity_exact(n, N, s) > 0]


def _is_identity(pt: Sequence) -> bool:
    return all(v == 1 for v in pt)


def spinor_value(pt: Sequence):
    """``prod_i (y_i + 1/y_i)``, the spinor character at a point."""
    value = 1
    for y in pt:
        value = value * (y + 1 / y)
    return value


def plancherel_measure(n: int, N: int, s: Sequence[int]) -> Fraction:
    """``M_lambda * dim L^lambda / 2^{nN}``."""
    s = validate_s(N, s)
    lam = lambda_from_s(N, s)
    return Fraction(multiplicity_exact(n, N, s) * dim_weyl(lam), 2 ** (n * N))


def character_measure(n: int, N: int, s: Sequence[int], pt: Sequence) -> Fraction:
    """Exact ``M_lambda * chi_lambda(y) / chi_spinor(y)^N`` at a rational point."""
    s = validate_s(N, s)
    pt = torus_point(pt)
    if len(pt) != n or len(s) != n:
        raise ValueError(f"rank mismatch: n={n}, s={s}, pt={pt}")
    if _is_identity(pt):
        return plancherel_measure(n, N, s)
    lam = lambda_from_s(N, s)
    return multiplicity_exact(n, N, s) * character_Bn(lam, pt) / spinor_value(pt) ** N


def character_measure_float(n: int, N: int, s: Sequence[int], pt: Sequence, dps: int = DEFAULT_DPS):
    """Float-mode character measure, returned as an mpmath number.

    ``pt`` may hold floats, Fractions or mpmath numbers.  The multiplicity
    enters through log-gamma, the characters through mpmath alternants, so
    ``N`` can be large.
    """
    s = validate_s(N, s)
    lam = lambda_from_s(N, s)
    with mpmath.workdps(dps):
        y = [mpmath.mpf(v.numerator) / v.denominator if isinstance(v, Fraction) else mpmath.mpf(v)
             for v in pt]
        log_mult = log_multiplicity(n, N, s)
        if _is_identity(y):
            chi = mpmath.mpf(dim_weyl(lam))
            base = mpmath.mpf(2) ** n
        else:
            chi = character_Bn(lam, y)
            base = spinor_value(y)
        return +(mpmath.exp(log_mult - N * mpmath.log(base)) * chi)


@dataclass
class MeasurePoint:
    s: tuple[int, ...]
    lam: tuple[int, ...]
    multiplicity: int
    probability: Fraction | float


@dataclass
class MeasureTable:
    """The full measure on the support; ``pt is None`` means the dimension point."""

    n: int
    N: int
    pt: tuple | None
    mode: str
    points: list[MeasurePoint] = field(default_factory=list)

    def total(self):
        if self.mode == "exact":
            return sum((p.probability for p in self.points), Fraction(0))
        return math.fsum(p.probability for p in self.points)

    def probabilities(self) -> np.ndarray:
        return np.array([float(p.probability) for p in self.points])

    def rows(self) -> list[dict]:
        out = []
        for p in self.points:
            row = {f"s_{i + 1}": v for i, v in enumerate(p.s)}
            row.update({f"lambda_{i + 1}": v for i, v in enumerate(p.lam)})
            row["multiplicity"] = p.multiplicity
            if isinstance(p.probability, Fraction):
                row["probability_num"] = p.probability.numerator
                row["probability_den"] = p.probability.denominator
            else:
                row["probability_num"] = ""
                row["probability_den"] = ""
            row["probability_float"] = repr(float(p.probability))
            out.append(row)
        return out

    def fieldnames(self) -> list[str]:
        return ([f"s_{i + 1}" for i in range(self.n)] + [f"lambda_{i + 1}" for i in range(self.n)]
                + ["multiplicity", "probability_num", "probability_den", "probability_float"])

    def write_csv(self, stream, comment: str | None = None) -> None:
        writer = csv.DictWriter(stream, fieldnames=self.fieldnames(), lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows())
        if comment is not None:
            stream.write(f"# {comment}\n")


def check_scale(n: int, N: int, mode: str, force: bool = False) -> None:
    """Raise :class:`ScaleGuardError` when ``(n, N)`` exceeds the caps for ``mode``."""
    cap = EXACT_MAX_POWER if mode == "exact" else FLOAT_MAX_POWER
    if not force and (n > MAX_RANK or N > cap):
        raise ScaleGuardError(f"{mode} mode limited to n <= {MAX_RANK}, N <= {cap}; got n={n}, N={N}")


def measure_table(n: int, N: int, pt: Sequence | None = None, mode: str = "exact",
                  *, force: bool = False, dps: int = DEFAULT_DPS) -> MeasureTable:
    """Character measure over the full support (Plancherel measure when ``pt`` is None)."""
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    check_scale(n, N, mode, force)
    if pt is not None:
        pt = torus_point(pt) if mode == "exact" else tuple(pt)
        if len(pt) != n:
            raise ValueError(f"point has {len(pt)} coordinates, rank is {n}")
    table = MeasureTable(n, N, pt, mode)
    for s in support(n, N):
        lam = lambda_from_s(N, s)
        if mode == "exact":
            prob = plancherel_measure(n, N, s) if pt is None else character_measure(n, N, s, pt)
        else:
            prob = float(character_measure_float(n, N, s, pt if pt is not None else (1,) * n, dps))
        table.points.append(MeasurePoint(s, lam, multiplicity_exact(n, N, s), prob))
    return table


def normalization_check(n: int, N: int, pt: Sequence | None = None) -> Fraction:
    """Exact total mass of the measure; equals 1 when everything is consistent."""
    return measure_table(n, N, pt, "exact").total()


def sample(n: int, N: int, pt: Sequence | None, seed: int, count: int,
           table: MeasureTable | None = None) -> list[tuple[int, ...]]:
    """``count`` i.i.d. draws of ``s`` by inverse CDF over the exact table."""
    if table is None:
        table = measure_table(n, N, pt, "exact")
    cumulative = []
    running = Fraction(0)
    for p in table.points:
        running += p.probability
        cumulative.append(float(running))
    cumulative[-1] = 1.0
    rng = np.random.default_rng(seed)
    idx = np.searchsorted(np.array(cumulative), rng.random(count), side="right")
    return [table.points[i].s for i in idx]


def empirical_frequencies(draws: Sequence[tuple[int, ...]]) -> dict[tuple[int, ...], float]:
    counts = Counter(draws)
    return {s: c / len(draws) for s, c in sorted(counts.items())}


def total_variation(table: MeasureTable, draws: Sequence[tuple[int, ...]]) -> float:
    """TV distance between the empirical law of ``draws`` and the table."""
    freq = empirical_frequencies(draws)
    exact = {p.s: float(p.probability) for p in table.points}
    keys = set(freq) | set(exact)
    return 0.5 * sum(abs(freq.get(k, 0.0) - exact.get(k, 0.0)) for k in keys)
