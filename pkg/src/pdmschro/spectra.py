"""Closed-form discrete spectra and the exponential profile's
transcendental quantization condition.

Trigonometric families (soliton-like and reciprocal biquadratic) and the
reciprocal-quadratic bound sector have polynomial-in-n energy formulas;
the exponential profile quantizes through the positive roots of
2k J_{a-1}(k) + (1-2a) J_a(k) = 0 with energies k^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from scipy.optimize import brentq

from .errors import DomainError, NotDiscrete
from .params import (OrderingParams, ProfileId, ProfileKind, SpectrumKind,
                     arrangement_constants, classify,
                     recip_quadratic_bound_count)
from .specfun import bessel

_SCAN_STEP = 0.01       # root spacing is ~pi, a 0.01 scan cannot skip a pair
_DEDUPE = 1e-8


@dataclass(frozen=True)
class Level:
    n: int
    parity: Optional[str]   # 'even' | 'odd' | None
    e_tilde: float


@dataclass(frozen=True)
class LevelSet:
    levels: Tuple[Level, ...]
    exhaustive: bool = False

    def energies(self) -> List[float]:
        return [lv.e_tilde for lv in self.levels]

    def __len__(self) -> int:
        return len(self.levels)


def _parity_of(n: int) -> str:
    return "even" if n % 2 == 0 else "odd"


def trigonometric_energy(profile: ProfileId, ordering: OrderingParams,
                         n: int) -> float:
    """E_n = n^2 + 2(1-2nu)n + 1 - 2nu + V0 for the trigonometric families."""
    c = arrangement_constants(profile, ordering)
    nu = c.nu
    if isinstance(nu, complex):
        if nu.imag != 0.0:
            raise NotDiscrete("omega < -1/4: no discrete trigonometric spectrum")
        nu = nu.real
    return n * n + 2.0 * (1.0 - 2.0 * nu) * n + 1.0 - 2.0 * nu + float(c.v0)


def levels_trigonometric(profile: ProfileId, ordering: OrderingParams,
                         n_max: int) -> LevelSet:
    """Levels 0..n_max of a discrete soliton-like/biquadratic arrangement."""
    if profile.kind not in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        raise DomainError(f"{profile} is not a trigonometric-family profile")
    cls = classify(profile, ordering)
    if cls.kind is not SpectrumKind.DISCRETE_WITH_MINIMUM:
        raise NotDiscrete(f"{profile} with {ordering} has no discrete spectrum "
                          f"({cls.kind.value})")
    levels = tuple(Level(n, _parity_of(n), trigonometric_energy(profile, ordering, n))
                   for n in range(n_max + 1))
    return LevelSet(levels, exhaustive=False)


def bound_levels_recip_quadratic(ordering: OrderingParams) -> LevelSet:
    """All bound levels of the reciprocal quadratic profile (may be empty).

    E_n = -n^2 + (4 sqrt(ab) - 1) n + 2 sqrt(ab) - 1/2 + V0 for integers
    0 <= n < 2 sqrt(ab) - 1/2; every level lies below V_inf.
    """
    c = arrangement_constants(ProfileId(ProfileKind.RECIP_QUADRATIC), ordering)
    count = recip_quadratic_bound_count(ordering)
    if count == 0:
        return LevelSet((), exhaustive=True)
    s = c.sqrt_ab.real
    v0 = float(c.v0)
    levels = tuple(
        Level(n, _parity_of(n),
              -n * n + (4.0 * s - 1.0) * n + 2.0 * s - 0.5 + v0)
        for n in range(count))
    return LevelSet(levels, exhaustive=True)


def scattering_threshold(ordering: OrderingParams) -> float:
    """Continuum onset of the reciprocal quadratic profile: V_inf."""
    c = arrangement_constants(ProfileId(ProfileKind.RECIP_QUADRATIC), ordering)
    return float(c.v_inf)


def exponential_alpha(ordering: OrderingParams) -> float:
    """Bessel order of the exponential profile; NotDiscrete if imaginary."""
    c = arrangement_constants(ProfileId(ProfileKind.EXPONENTIAL), ordering)
    a = c.alpha
    if isinstance(a, complex):
        if a.imag != 0.0:
            raise NotDiscrete("omega < -1/4: exponential arrangement has no "
                              "valid solutions")
        a = a.real
    return float(a)


def exponential_quantization(ordering: OrderingParams, k: float) -> float:
    """Residual of 2k J_{a-1}(k) + (1-2a) J_a(k); zero at eigenvalues."""
    a = exponential_alpha(ordering)
    if k == 0.0:
        return 0.0
    if a >= 1.0:
        jm = bessel("J", a - 1.0, k).value
    else:
        # order a-1 in (-1, 0): evaluate via the derivative recurrence
        # J_{a-1}(k) = J_a'(k) + (a/k) J_a(k) to stay on orders >= 0
        from .specfun import bessel_derivative
        jm = bessel_derivative("J", a, k).value + (a / k) * bessel("J", a, k).value
    return 2.0 * k * jm + (1.0 - 2.0 * a) * bessel("J", a, k).value


def exponential_roots(ordering: OrderingParams, count: int) -> List[float]:
    """First `count` positive roots of the quantization condition, each
    refined to ~1e-12; k=0 excluded, near-duplicates collapsed."""
    if count <= 0:
        return []
    exponential_alpha(ordering)   # raises NotDiscrete when invalid
    roots: List[float] = []
    k_hi = max(10.0, count * math.pi + 5.0)
    k_lo = _SCAN_STEP
    while True:
        f_prev = exponential_quantization(ordering, k_lo)
        k = k_lo
        while k < k_hi and len(roots) < count:
            k_next = min(k + _SCAN_STEP, k_hi)
            f_next = exponential_quantization(ordering, k_next)
            if f_prev == 0.0:
                root = k
            elif f_prev * f_next < 0.0:
                root = brentq(lambda kk: exponential_quantization(ordering, kk),
                              k, k_next, xtol=1e-13, rtol=8.9e-16)
            else:
                root = None
            if root is not None and root > _DEDUPE:
                if not roots or abs(root - roots[-1]) > _DEDUPE:
                    roots.append(float(root))
            k, f_prev = k_next, f_next
        if len(roots) >= count:
            return roots[:count]
        k_lo, k_hi = k_hi, k_hi * 1.6


def exponential_levels(ordering: OrderingParams, count: int) -> LevelSet:
    """First `count` exponential-profile levels, E_n = k_n^2 (n from 1)."""
    ks = exponential_roots(ordering, count)
    levels = tuple(Level(n + 1, None, k * k) for n, k in enumerate(ks))
    return LevelSet(levels, exhaustive=False)
