"""Orderings, mass-profile identifiers, per-arrangement constants and
spectrum classification.

The kinetic-ordering pair (a, b) and every derived table constant
(omega, the potential offsets) are kept as exact Fractions; floats enter
only at evaluation boundaries.  The classification below reproduces the
summary table of spectra for the five named orderings across the five
profiles, and extends to arbitrary rational (a, b) via the same
sign/threshold rules on omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .errors import DomainError

RationalLike = Union[int, str, Fraction]

# CODATA/SI: h is exact since the 2019 SI; m_e is CODATA 2018.
PLANCK_H = 6.62607015e-34          # J s (exact)
HBAR = PLANCK_H / (2.0 * math.pi)  # J s
ELECTRON_MASS = 9.1093837015e-31   # kg


def _frac(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise DomainError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class OrderingParams:
    """A von Roos ordering pair (a, b), optionally carrying a preset label."""

    a: Fraction
    b: Fraction
    label: Optional[str] = None

    def __str__(self) -> str:
        if self.label:
            return self.label.upper()
        return f"(a={self.a}, b={self.b})"


# Named literature orderings; a closed enumeration.
_PRESETS = {
    "bdd": (Fraction(0), Fraction(0)),
    "gw": (Fraction(-1), Fraction(0)),
    "zk": (Fraction(-1, 2), Fraction(-1, 2)),
    "lk": (Fraction(0), Fraction(-1, 2)),
    "mm": (Fraction(-1, 4), Fraction(-1, 4)),
}

PRESET_NAMES = tuple(_PRESETS)


def ordering(name: str) -> OrderingParams:
    """Look up a preset ordering by name (case-insensitive)."""
    key = name.strip().lower()
    if key not in _PRESETS:
        raise DomainError(f"unknown ordering preset {name!r}; "
                          f"choose from {', '.join(PRESET_NAMES)}")
    a, b = _PRESETS[key]
    return OrderingParams(a, b, label=key)


def custom_ordering(a: RationalLike, b: RationalLike) -> OrderingParams:
    """Build an arbitrary rational ordering pair; preset labels attach
    automatically when (a, b) coincides with one."""
    fa, fb = _frac(a), _frac(b)
    for key, (pa, pb) in _PRESETS.items():
        if (fa, fb) == (pa, pb):
            return OrderingParams(fa, fb, label=key)
    return OrderingParams(fa, fb)


def is_preset(o: OrderingParams) -> bool:
    return (o.a, o.b) in _PRESETS.values()


class ProfileKind(Enum):
    SOLITON = "soliton"
    BIQUADRATIC = "biquadratic"
    RECIP_QUADRATIC = "recip-quadratic"
    EXPONENTIAL = "exponential"
    PARABOLIC = "parabolic"


@dataclass(frozen=True)
class ProfileId:
    """A mass profile; only the parabolic one carries the half-width ell."""

    kind: ProfileKind
    ell: Optional[float] = None

    def __post_init__(self):
        if self.kind is ProfileKind.PARABOLIC:
            if self.ell is None or not (self.ell > 0):
                raise DomainError("parabolic profile requires ell > 0")
        elif self.ell is not None:
            raise DomainError(f"{self.kind.value} profile carries no parameter")

    def __str__(self) -> str:
        if self.kind is ProfileKind.PARABOLIC:
            return f"parabolic(ell={self.ell})"
        return self.kind.value


def soliton() -> ProfileId:
    return ProfileId(ProfileKind.SOLITON)


def biquadratic() -> ProfileId:
    return ProfileId(ProfileKind.BIQUADRATIC)


def recip_quadratic() -> ProfileId:
    return ProfileId(ProfileKind.RECIP_QUADRATIC)


def exponential() -> ProfileId:
    return ProfileId(ProfileKind.EXPONENTIAL)


def parabolic(ell: float) -> ProfileId:
    return ProfileId(ProfileKind.PARABOLIC, ell=float(ell))


def profile_from_name(name: str, ell: Optional[float] = None) -> ProfileId:
    key = name.strip().lower().replace("_", "-")
    aliases = {
        "soliton": ProfileKind.SOLITON,
        "soliton-like": ProfileKind.SOLITON,
        "biquadratic": ProfileKind.BIQUADRATIC,
        "recip-biquadratic": ProfileKind.BIQUADRATIC,
        "recip-quadratic": ProfileKind.RECIP_QUADRATIC,
        "exponential": ProfileKind.EXPONENTIAL,
        "parabolic": ProfileKind.PARABOLIC,
    }
    if key not in aliases:
        raise DomainError(f"unknown profile {name!r}")
    kind = aliases[key]
    if kind is ProfileKind.PARABOLIC:
        if ell is None:
            raise DomainError("parabolic profile needs --ell")
        return parabolic(ell)
    if ell is not None:
        raise DomainError(f"profile {name!r} takes no ell parameter")
    return ProfileId(kind)


MU_PLUS = Fraction(1, 2)   # (1+1)/4, odd branch
MU_MINUS = Fraction(0)     # (1-1)/4, even branch


@dataclass(frozen=True)
class ArrangementConstants:
    """Derived constants of one (profile x ordering) arrangement.

    omega, v0, v_inf are exact rationals; alpha/nu/sqrt_ab are floats
    (purely imaginary values are returned as complex).  Fields are None
    where the profile does not define them.
    """

    omega: Fraction
    v0: Optional[Fraction] = None
    v_inf: Optional[Fraction] = None
    alpha: Optional[complex] = None     # exponential & parabolic
    nu: Optional[complex] = None        # soliton & biquadratic
    sqrt_ab: Optional[complex] = None   # reciprocal quadratic
    mu_plus: Fraction = MU_PLUS
    mu_minus: Fraction = MU_MINUS


def _real_or_imag_sqrt(q: Fraction) -> complex:
    """sqrt of a rational, returned as float if q >= 0 else pure imaginary."""
    if q >= 0:
        return math.sqrt(q)
    return 1j * math.sqrt(-q)


def omega_of(profile: ProfileId, o: OrderingParams) -> Fraction:
    """The single shape parameter of the effective potential."""
    a, b = o.a, o.b
    k = profile.kind
    if k in (ProfileKind.SOLITON, ProfileKind.EXPONENTIAL):
        return 4 * a * b + 2 * (a + b) + Fraction(3, 4)
    if k is ProfileKind.BIQUADRATIC:
        return 16 * a * b + 6 * (a + b) + 2
    if k is ProfileKind.RECIP_QUADRATIC:
        return Fraction(1, 4) - 4 * a * b
    # parabolic
    return a * b + Fraction(3, 4) * (a + b) + Fraction(5, 16)


def arrangement_constants(profile: ProfileId, o: OrderingParams) -> ArrangementConstants:
    """All constants the closed forms need for this arrangement."""
    a, b = o.a, o.b
    w = omega_of(profile, o)
    k = profile.kind
    if k in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        v0 = a + b + Fraction(1, 2) if k is ProfileKind.SOLITON else 2 * (a + b) + 1
        disc = 1 + 4 * w
        nu = (1 - _real_or_imag_sqrt(disc)) / 4
        return ArrangementConstants(omega=w, v0=v0, nu=nu)
    if k is ProfileKind.RECIP_QUADRATIC:
        v0 = a + b + Fraction(1, 2)
        v_inf = 4 * a * b + a + b + Fraction(1, 4)
        return ArrangementConstants(omega=w, v0=v0, v_inf=v_inf,
                                    sqrt_ab=_real_or_imag_sqrt(a * b))
    # exponential & parabolic: no offset, Bessel order alpha
    alpha = _real_or_imag_sqrt(1 + 4 * w) / 2
    return ArrangementConstants(omega=w, alpha=alpha)


class SpectrumKind(Enum):
    DISCRETE_WITH_MINIMUM = "discrete-with-minimum"
    CONTINUOUS_WITH_MINIMUM = "continuous-with-minimum"
    CONTINUOUS_PLUS_BOUND = "continuous-plus-bound"
    NO_SPECTRUM = "no-spectrum"
    ZERO_ENERGY_ONLY = "zero-energy-only"
    # Parabolic omega>0: spectrum set by the exterior mass/potential, which
    # this library leaves to the caller.
    EXTERIOR_DEPENDENT = "exterior-dependent"


class PotentialShape(Enum):
    INFINITE_WELL = "IW"
    INFINITE_BARRIER = "IB"
    FINITE_WELL = "FW"
    FINITE_BARRIER = "FB"
    BOTTOMLESS_BARRIER = "BB"
    BOTTOMLESS_WELL = "BW"
    CONSTANT = "cons"


@dataclass(frozen=True)
class SpectrumClass:
    kind: SpectrumKind
    shape: PotentialShape
    # -1/4 < omega < 0 soliton/biquadratic branch: no preset lands there
    # and the discrete spectrum is not validated numerically.
    experimental: bool = False
    # reciprocal quadratic with ab < 0: sqrt(ab) imaginary, never evaluated
    # in the source analysis; classified as bound-free.
    outside_presets: bool = False


def exact_sqrt(q: Fraction) -> Optional[Fraction]:
    """sqrt(q) as an exact Fraction when q >= 0 is a perfect rational square."""
    if q < 0:
        return None
    pn, pd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if pn * pn == q.numerator and pd * pd == q.denominator:
        return Fraction(pn, pd)
    return None


def recip_quadratic_bound_count(o: OrderingParams) -> int:
    """Number of bound levels: integers n with 0 <= n < 2 sqrt(ab) - 1/2."""
    ab = o.a * o.b
    if ab < 0:
        return 0
    root = exact_sqrt(ab)
    if root is not None:
        limit = 2 * root - Fraction(1, 2)
        if limit <= 0:
            return 0
        # strict upper bound: an integer endpoint is excluded exactly
        return int(limit) + (0 if limit.denominator == 1 else 1)
    limit = 2.0 * math.sqrt(ab) - 0.5
    if limit <= 0:
        return 0
    return int(math.ceil(limit))


def classify(profile: ProfileId, o: OrderingParams) -> SpectrumClass:
    """Spectrum class and effective-potential shape of an arrangement."""
    w = omega_of(profile, o)
    k = profile.kind

    if k in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        if w > 0:
            return SpectrumClass(SpectrumKind.DISCRETE_WITH_MINIMUM,
                                 PotentialShape.INFINITE_WELL)
        if w == 0:
            return SpectrumClass(SpectrumKind.DISCRETE_WITH_MINIMUM,
                                 PotentialShape.CONSTANT)
        if w > Fraction(-1, 4):
            return SpectrumClass(SpectrumKind.DISCRETE_WITH_MINIMUM,
                                 PotentialShape.BOTTOMLESS_BARRIER,
                                 experimental=True)
        return SpectrumClass(SpectrumKind.NO_SPECTRUM,
                             PotentialShape.BOTTOMLESS_BARRIER)

    if k is ProfileKind.RECIP_QUADRATIC:
        if w < 0:
            shape = PotentialShape.FINITE_WELL
        elif w > 0:
            shape = PotentialShape.FINITE_BARRIER
        else:
            shape = PotentialShape.CONSTANT
        if o.a * o.b < 0:
            return SpectrumClass(SpectrumKind.CONTINUOUS_WITH_MINIMUM, shape,
                                 outside_presets=True)
        if recip_quadratic_bound_count(o) > 0:
            return SpectrumClass(SpectrumKind.CONTINUOUS_PLUS_BOUND, shape)
        return SpectrumClass(SpectrumKind.CONTINUOUS_WITH_MINIMUM, shape)

    if k is ProfileKind.EXPONENTIAL:
        if w > 0:
            shape = PotentialShape.INFINITE_WELL
        elif w == 0:
            shape = PotentialShape.CONSTANT
        else:
            shape = PotentialShape.BOTTOMLESS_BARRIER
        if w >= Fraction(-1, 4):
            return SpectrumClass(SpectrumKind.DISCRETE_WITH_MINIMUM, shape)
        return SpectrumClass(SpectrumKind.NO_SPECTRUM, shape)

    # parabolic
    if w > 0:
        return SpectrumClass(SpectrumKind.EXTERIOR_DEPENDENT,
                             PotentialShape.INFINITE_BARRIER)
    if w == 0:
        return SpectrumClass(SpectrumKind.ZERO_ENERGY_ONLY,
                             PotentialShape.CONSTANT)
    return SpectrumClass(SpectrumKind.NO_SPECTRUM, PotentialShape.BOTTOMLESS_WELL)


@dataclass(frozen=True)
class ScaleParams:
    """Physical length (meters) and mass (kilograms) scales."""

    epsilon: float
    m0: float

    def __post_init__(self):
        if not (self.epsilon > 0 and self.m0 > 0):
            raise DomainError("scale parameters must be strictly positive")


def to_physical_energy(e_tilde: float, scale: ScaleParams) -> float:
    """Dimensionless energy -> joules: E = e_tilde * hbar^2 / (2 eps^2 m0)."""
    return e_tilde * HBAR * HBAR / (2.0 * scale.epsilon ** 2 * scale.m0)


def from_physical_energy(energy_joule: float, scale: ScaleParams) -> float:
    """Joules -> dimensionless energy; inverse of to_physical_energy."""
    return energy_joule * 2.0 * scale.epsilon ** 2 * scale.m0 / (HBAR * HBAR)
