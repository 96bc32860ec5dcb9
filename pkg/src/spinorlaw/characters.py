"""Characters of so(2n+1) and of its sl_n subalgebra.

Characters are evaluated at torus points ``y_i = e^{t_i}`` through the Weyl
alternant ratio; the Freudenthal weight diagram and the Jacobi-Trudi
expansion serve as independent, division-free cross-checks.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import InvalidWeightError, SingularPointError
from .exactalg import LaurentPoly, det
from .rootsys import Weight, dominant_conjugate, is_dominant, positive_roots, rho


def _as_field(pt: Sequence) -> list:
    return [Fraction(v) if isinstance(v, int) else v for v in pt]


def spinor_character(n: int) -> LaurentPoly:
    """``prod_i (y_i + 1/y_i)``: the character of the spinor representation."""
    result = LaurentPoly.constant(n)
    for i in range(n):
        up = [0] * n
        up[i] = 1
        down = [0] * n
        down[i] = -1
        result = result * LaurentPoly(n, {tuple(up): 1, tuple(down): 1})
    return result


def weyl_alternant(a: Sequence[int], pt: Sequence):
    """``sum_{w in W(B_n)} sign(w) y^{w a}`` as ``det[y_j^{a_i} - y_j^{-a_i}]``."""
    pt = _as_field(pt)
    return det([[y ** ai - y ** (-ai) for y in pt] for ai in a])


def character_Bn(lam: Sequence[int], pt: Sequence):
    """Value of the so(2n+1) character with highest weight ``lam`` at ``y = pt``.

    Exact (a Fraction) for rational ``pt``; mpmath points give mpmath results.

    Raises
    ------
    SingularPointError
        If the Weyl denominator vanishes (some ``y_i == 1``, ``y_i == y_j`` or
        ``y_i * y_j == 1``).  Use :func:`dim_weyl` at the identity.
    """
    lam = tuple(lam)
    if len(lam) != len(pt):
        raise ValueError("weight and point have different lengths")
    if not is_dominant(lam):
        raise InvalidWeightError(f"weight {lam} is not dominant")
    r = rho(len(lam))
    denom = weyl_alternant(r, pt)
    if denom == 0:
        raise SingularPointError(f"Weyl denominator vanishes at {tuple(pt)}")
    numer = weyl_alternant([l + p for l, p in zip(lam, r)], pt)
    return numer / denom


def dim_weyl(lam: Sequence[int]) -> int:
    """Weyl dimension formula ``prod_{alpha>0} (lam+rho, alpha) / (rho, alpha)``."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise InvalidWeightError(f"weight {lam} is not dominant")
    r = rho(len(lam))
    shifted = [l + p for l, p in zip(lam, r)]
    value = Fraction(1)
    for alpha in positive_roots(len(lam)):
        num = sum(x * a for x, a in zip(shifted, alpha))
        den = sum(x * a for x, a in zip(r, alpha))
        value *= Fraction(num, den)
    assert value.denominator == 1, value
    return int(value)


def _dominant_weights(lam: Weight) -> list[Weight]:
    """Dominant weights of the diagram of ``lam``, ordered by increasing depth below ``lam``.

    In doubled coordinates the root lattice is ``2 Z^n`` and ``lam - mu`` is a
    non-negative root combination iff every partial sum of it is ``>= 0``.
    """
    n = len(lam)
    found = []

    def rec(prefix: list[int], partial: int, cap: int):
        i = len(prefix)
        if i == n:
            found.append((partial, tuple(prefix)))
            return
        lo = lam[i] % 2
        for x in range(lo, cap + 1, 2):
            p = partial + lam[i] - x
            if p >= 0:
                rec(prefix + [x], p, x)

    rec([], 0, lam[0] if n else 0)
    depth = lambda mu: sum(sum(lam[:k + 1]) - sum(mu[:k + 1]) for k in range(n))
    return sorted((mu for _, mu in found), key=lambda mu: (depth(mu), tuple(-x for x in mu)))


def _orbit(mu: Weight) -> set[Weight]:
    orbit = {mu}
    for i in range(len(mu)):
        orbit |= {w[:i] + (-w[i],) + w[i + 1:] for w in orbit}
    return {p for w in orbit for p in itertools.permutations(w)}


def freudenthal_weights(lam: Sequence[int]) -> dict[Weight, int]:
    """Full weight diagram ``{mu: m_mu}`` of the irreducible module with highest weight ``lam``.

    Multiplicities come from the Freudenthal recursion on dominant weights,
    then spread over Weyl orbits.  Intended for small ``lam``.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise InvalidWeightError(f"weight {lam} is not dominant")
    n = len(lam)
    r = rho(n)
    roots = positive_roots(n)
    dot = lambda u, v: sum(a * b for a, b in zip(u, v))
    top = dot([l + p for l, p in zip(lam, r)], [l + p for l, p in zip(lam, r)])

    dominant = _dominant_weights(lam)
    mult: dict[Weight, int] = {}
    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        total = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                m_nu = mult.get(dominant_conjugate(nu))
                if m_nu is None:
                    break
                total += m_nu * dot(nu, alpha)
                k += 1
        shifted = [m + p for m, p in zip(mu, r)]
        gap = top - dot(shifted, shifted)
        value, rem = divmod(2 * total, gap)
        assert rem == 0, (lam, mu, total, gap)
        mult[mu] = value

    diagram = {}
    for mu, m in mult.items():
        if m:
            for w in _orbit(mu):
                diagram[w] = m
    return diagram


def weights_to_poly(diagram: dict[Weight, int]) -> LaurentPoly:
    """Character polynomial ``sum m_mu y^mu`` of a weight diagram."""
    n = len(next(iter(diagram)))
    return LaurentPoly(n, diagram)


# --- sl_n characters ---------------------------------------------------------

def _partition_and_shift(gamma: Sequence) -> tuple[list[int], Fraction]:
    """Split an sl_n highest weight (doubled coordinates) into ``kappa`` and ``gamma_n``.

    ``gamma_i = gamma_n + 2 kappa_i`` with ``kappa`` a partition, so that
    ``chi_gamma(y) = (prod y)^{gamma_n} * schur_kappa(y_1^2, ..., y_n^2)``.
    """
    gamma = [Fraction(g) for g in gamma]
    if sum(gamma) != 0:
        raise InvalidWeightError(f"sl_n weight must have zero coordinate sum: {gamma}")
    if any(gamma[i] < gamma[i + 1] for i in range(len(gamma) - 1)):
        raise InvalidWeightError(f"sl_n weight must be weakly decreasing: {gamma}")
    kappa = []
    for g in gamma:
        d = (g - gamma[-1]) / 2
        if d.denominator != 1:
            raise InvalidWeightError(f"sl_n weight differences must be even integers: {gamma}")
        kappa.append(int(d))
    return kappa, gamma[-1]


def _prefactor(pt: Sequence, shift: Fraction):
    prod = 1
    for y in pt:
        prod = prod * y
    if shift.denominator == 1:
        return prod ** int(shift)
    if isinstance(prod, Fraction):
        return float(prod) ** float(shift)
    if isinstance(prod, float):
        return prod ** float(shift)
    return prod ** (mpmath.mpf(shift.numerator) / shift.denominator)


def character_An(gamma: Sequence, pt: Sequence):
    """sl_n character with highest weight ``gamma`` at ``y = pt`` via the bialternant.

    ``det[y_j^{gamma_i + 2(n-i)}] / det[y_j^{2(n-i)}]``.  Exact when
    ``gamma`` is integral and ``pt`` rational; when ``gamma`` has fractional
    coordinates the common factor ``(prod y)^{gamma_n}`` is irrational in
    general and the result is a float.

    Raises
    ------
    SingularPointError
        If two coordinates of ``pt`` coincide.
    """
    kappa, shift = _partition_and_shift(gamma)
    n = len(kappa)
    if len(pt) != n:
        raise ValueError("weight and point have different lengths")
    z = [y * y for y in _as_field(pt)]
    denom = det([[zj ** (n - i) for zj in z] for i in range(1, n + 1)])
    if denom == 0:
        raise SingularPointError(f"sl_n Vandermonde vanishes at {tuple(pt)}")
    numer = det([[zj ** (kappa[i - 1] + n - i) for zj in z] for i in range(1, n + 1)])
    return (numer / denom) * _prefactor(_as_field(pt), shift)


def complete_homogeneous(z: Sequence, kmax: int) -> list:
    """``[h_0(z), ..., h_kmax(z)]`` by the recurrence ``h_k(z_1..z_m) = h_k(z_1..z_{m-1}) + z_m h_{k-1}(z_1..z_m)``."""
    h = [1] + [0] * kmax
    for zm in z:
        for k in range(1, kmax + 1):
            h[k] = h[k] + zm * h[k - 1]
    return h


def schur_jacobi_trudi(kappa: Sequence[int], z: Sequence):
    """Schur polynomial ``det[h_{kappa_i - i + j}(z)]``; division-free but with cancellation."""
    n = len(kappa)
    kmax = max(kappa) + n if kappa else 0
    h = complete_homogeneous(z, kmax)
    hk = lambda k: h[k] if 0 <= k <= kmax else 0
    return det([[hk(kappa[i] - i + j) for j in range(n)] for i in range(n)])


def schur_branching(kappa: Sequence[int], z: Sequence):
    """Schur polynomial as a sum over Gelfand-Tsetlin patterns (branching ``gl_m -> gl_{m-1}``).

    Every term is a monomial with coefficient +1, so there is no cancellation
    and floating evaluation stays accurate to a few ulps.
    """
    memo: dict = {}

    def rec(part: tuple[int, ...]):
        m = len(part)
        if m == 1:
            return z[0] ** part[0]
        if part in memo:
            return memo[part]
        total = 0
        ranges = [range(part[i + 1], part[i] + 1) for i in range(m - 1)]
        for sub in itertools.product(*ranges):
            total = total + rec(sub) * z[m - 1] ** (sum(part) - sum(sub))
        memo[part] = total
        return total

    return rec(tuple(kappa)) if kappa else 1


def character_An_weightsum(gamma: Sequence, pt: Sequence):
    """sl_n character as an explicit sum over its weight diagram.

    Division-free, so it is valid at points with repeated coordinates
    (including ``y = (1, ..., 1)``, where it returns the dimension).
    """
    kappa, shift = _partition_and_shift(gamma)
    if len(pt) != len(kappa):
        raise ValueError("weight and point have different lengths")
    field = _as_field(pt)
    return schur_branching(kappa, [y * y for y in field]) * _prefactor(field, shift)


def dim_An(gamma: Sequence) -> int:
    """Dimension of the sl_n module with highest weight ``gamma`` (Weyl formula for A_{n-1})."""
    kappa, _ = _partition_and_shift(gamma)
    n = len(kappa)
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(kappa[i] - kappa[j] + j - i, j - i)
    return int(value)
