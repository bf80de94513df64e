"""Mass profiles, the point canonical transformation z(x) and its
inverse, effective potentials in z space, and the x-space ambiguity
potential of kinetic origin.

The change of variable is fixed so z(0) = 0 and z is odd for every
profile; dz/dx = sqrt(m(x)).  The wave-function dictionary is
psi(x) = m(x)^{1/4} * zeta(z(x)), which preserves probability measure:
|psi|^2 dx = |zeta|^2 dz.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .errors import DomainError, SingularPoint
from .params import (ArrangementConstants, OrderingParams, ProfileId,
                     ProfileKind, arrangement_constants)

_POLE_GUARD = 1e-9   # closed-form potentials refuse evaluation this close


@dataclass(frozen=True)
class ZDomain:
    """z-space interval of a profile; endpoints may be infinite."""

    lo: float
    hi: float
    open_lo: bool = True
    open_hi: bool = True


def z_domain(profile: ProfileId) -> ZDomain:
    k = profile.kind
    if k in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        return ZDomain(-math.pi / 2, math.pi / 2)
    if k is ProfileKind.RECIP_QUADRATIC:
        return ZDomain(-math.inf, math.inf)
    if k is ProfileKind.EXPONENTIAL:
        return ZDomain(-1.0, 1.0)
    ell = profile.ell
    return ZDomain(-ell * ell, ell * ell)


def mass(profile: ProfileId, x: float) -> float:
    """Dimensionless mass m(x) > 0 (= 0 only at the parabolic origin)."""
    k = profile.kind
    if k is ProfileKind.SOLITON:
        return 1.0 / math.cosh(x) ** 2
    if k is ProfileKind.BIQUADRATIC:
        return (1.0 + x * x) ** -2
    if k is ProfileKind.RECIP_QUADRATIC:
        return 1.0 / (1.0 + x * x)
    if k is ProfileKind.EXPONENTIAL:
        return math.exp(-2.0 * abs(x))
    if abs(x) > profile.ell:
        raise DomainError(f"parabolic profile restricted to |x| <= {profile.ell}")
    return 4.0 * x * x


def mass_derivatives(profile: ProfileId, x: float) -> Tuple[float, float, float]:
    """(m, m', m'') analytically; the exponential profile returns the
    one-sided classical values (the x=0 cusp carries a distributional
    part handled by the oracle, not here)."""
    k = profile.kind
    if k is ProfileKind.SOLITON:
        s = 1.0 / math.cosh(x)
        t = math.tanh(x)
        m = s * s
        return m, -2.0 * m * t, 4.0 * m * t * t - 2.0 * m * m
    if k is ProfileKind.BIQUADRATIC:
        u = 1.0 + x * x
        return u ** -2, -4.0 * x * u ** -3, -4.0 * u ** -3 + 24.0 * x * x * u ** -4
    if k is ProfileKind.RECIP_QUADRATIC:
        u = 1.0 + x * x
        return 1.0 / u, -2.0 * x * u ** -2, -2.0 * u ** -2 + 8.0 * x * x * u ** -3
    if k is ProfileKind.EXPONENTIAL:
        m = math.exp(-2.0 * abs(x))
        sgn = math.copysign(1.0, x) if x != 0.0 else 1.0
        return m, -2.0 * sgn * m, 4.0 * m
    if abs(x) > profile.ell:
        raise DomainError(f"parabolic profile restricted to |x| <= {profile.ell}")
    return 4.0 * x * x, 8.0 * x, 8.0


def z_of_x(profile: ProfileId, x: float) -> float:
    """The point canonical coordinate z(x) = int sqrt(m); odd, z(0)=0."""
    k = profile.kind
    if k is ProfileKind.SOLITON:
        # Gudermannian; written via atan(exp) so it is stable for any x
        return math.copysign(math.pi / 2 - 2.0 * math.atan(math.exp(-abs(x))), x)
    if k is ProfileKind.BIQUADRATIC:
        return math.atan(x)
    if k is ProfileKind.RECIP_QUADRATIC:
        return math.asinh(x)
    if k is ProfileKind.EXPONENTIAL:
        return math.copysign(-math.expm1(-abs(x)), x)
    if abs(x) > profile.ell:
        raise DomainError(f"parabolic profile restricted to |x| <= {profile.ell}")
    return x * abs(x)


def x_of_z(profile: ProfileId, z: float) -> float:
    """Inverse of z_of_x on the profile's z domain."""
    dom = z_domain(profile)
    if not (dom.lo <= z <= dom.hi):
        raise DomainError(f"z = {z} outside {profile} domain "
                          f"({dom.lo}, {dom.hi})")
    k = profile.kind
    if k is ProfileKind.SOLITON:
        if abs(abs(z) - math.pi / 2) < 1e-300:
            raise DomainError("z at the open endpoint +-pi/2")
        return math.asinh(math.tan(z))
    if k is ProfileKind.BIQUADRATIC:
        if abs(abs(z) - math.pi / 2) < 1e-300:
            raise DomainError("z at the open endpoint +-pi/2")
        return math.tan(z)
    if k is ProfileKind.RECIP_QUADRATIC:
        return math.sinh(z)
    if k is ProfileKind.EXPONENTIAL:
        if abs(z) >= 1.0:
            raise DomainError("z at the open endpoint +-1")
        return math.copysign(-math.log1p(-abs(z)), z)
    return math.copysign(math.sqrt(abs(z)), z)


def effective_potential(profile: ProfileId, ordering: OrderingParams,
                        z: float) -> float:
    """Closed-form dimensionless effective potential V(z) of the
    arrangement.  Raises SingularPoint within 1e-9 of a pole."""
    consts = arrangement_constants(profile, ordering)
    w = float(consts.omega)
    dom = z_domain(profile)
    k = profile.kind
    if k in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        if not (dom.lo < z < dom.hi):
            raise DomainError(f"z = {z} outside ({dom.lo}, {dom.hi})")
        if math.pi / 2 - abs(z) < _POLE_GUARD and w != 0.0:
            raise SingularPoint("within guard band of z = +-pi/2")
        return w * math.tan(z) ** 2 + float(consts.v0)
    if k is ProfileKind.RECIP_QUADRATIC:
        return w / math.cosh(z) ** 2 + float(consts.v_inf)
    if k is ProfileKind.EXPONENTIAL:
        if not (-1.0 < z < 1.0):
            raise DomainError(f"z = {z} outside (-1, 1)")
        t = 1.0 - abs(z)
        if t < _POLE_GUARD and w != 0.0:
            raise SingularPoint("within guard band of z = +-1")
        return w / (t * t)
    # parabolic
    if not (dom.lo < z < dom.hi):
        raise DomainError(f"z = {z} outside ({dom.lo}, {dom.hi})")
    if abs(z) < _POLE_GUARD:
        if w == 0.0:
            return 0.0
        raise SingularPoint("within guard band of z = 0")
    return w / (z * z)


def effective_potential_generic(profile: ProfileId, ordering: OrderingParams,
                                z: float) -> float:
    """Direct numerical evaluation of the defining expression for V(z):
    finite-difference m', m'' composed through x(z).  Cross-check for the
    closed forms.  Central differences; step 1e-5 (1 + |x|) for m' and the
    second-difference optimum ~eps^(1/4) for m'' (a 1e-5 step is roundoff
    dominated there)."""
    a, b = float(ordering.a), float(ordering.b)
    x = x_of_z(profile, z)
    h1 = 1e-5 * (1.0 + abs(x))
    h2 = 4e-4 * (1.0 + abs(x))
    m0 = mass(profile, x)
    mp = (mass(profile, x + h1) - mass(profile, x - h1)) / (2.0 * h1)

    def second(h):
        return (mass(profile, x + h) - 2.0 * m0 + mass(profile, x - h)) / (h * h)

    # Richardson: cancels the h^2 truncation of the 3-point stencil, which
    # otherwise fights roundoff where m decays to ~1e-3
    mpp = (4.0 * second(0.5 * h2) - second(h2)) / 3.0
    r = mp / m0
    rp = mpp / m0 - r * r          # (m'/m)' = m''/m - (m'/m)^2
    c1 = -0.5 * (a + b + 0.5)
    c2 = a * b + 0.5 * (a + b) + 3.0 / 16.0
    return (c1 * rp + c2 * r * r) / m0


def ambiguity_potential(profile: ProfileId, ordering: OrderingParams,
                        x: float) -> float:
    """x-space ambiguity potential of kinetic origin (zero for BDD)."""
    a, b = float(ordering.a), float(ordering.b)
    m, mp, mpp = mass_derivatives(profile, x)
    if m == 0.0:
        raise DomainError("ambiguity potential undefined where m(x) = 0")
    r = mp / m
    rp = mpp / m - r * r
    return -(0.5 * (a + b) * rp - (a * b + 0.5 * (a + b)) * r * r) / m


def reconstruct_psi(profile: ProfileId, zeta: Callable[[float], complex],
                    x: float):
    """psi(x) = m(x)^{1/4} zeta(z(x)); propagates domain errors."""
    return mass(profile, x) ** 0.25 * zeta(z_of_x(profile, x))
