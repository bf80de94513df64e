"""Analytic eigenfunctions and scattering states in x space, their z-space
counterparts, probability densities, and normalization.

States are produced unnormalized (constants free, matching the source
figures); normalize() is explicit and returns a rescaled copy.  Parity is
literal: even states are even in x at machine precision, odd states odd.
The exponential-profile states are even with a derivative jump at the
origin coming from the mass cusp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from scipy.integrate import quad

from .errors import (DomainError, InvalidEnergy, InvalidOrdering, NotDiscrete,
                     NotNormalizable)
from .params import (OrderingParams, ProfileId, ProfileKind,
                     arrangement_constants)
from .spectra import (bound_levels_recip_quadratic, exponential_alpha,
                      exponential_roots, scattering_threshold,
                      trigonometric_energy, levels_trigonometric)
from .specfun import bessel, gauss_2f1

_KIND_DISCRETE = "discrete"       # trigonometric / exponential eigenstates
_KIND_BOUND = "bound"             # reciprocal quadratic bound sector
_KIND_SCATTERING = "scattering"   # reciprocal quadratic continuum


@dataclass(frozen=True)
class EigenState:
    profile: ProfileId
    ordering: OrderingParams
    e_tilde: float
    kind: str
    n: Optional[int] = None
    parity: Optional[str] = None       # 'even' | 'odd' | None
    normalized: bool = False
    norm_constant: float = 1.0


def trigonometric_state(profile: ProfileId, ordering: OrderingParams,
                        n: int) -> EigenState:
    """Discrete level n of a soliton-like/biquadratic arrangement."""
    levels_trigonometric(profile, ordering, 0)   # validates discreteness
    if n < 0:
        raise DomainError("quantum number must be non-negative")
    return EigenState(profile, ordering, trigonometric_energy(profile, ordering, n),
                      _KIND_DISCRETE, n=n, parity="even" if n % 2 == 0 else "odd")


def recip_quadratic_bound_state(ordering: OrderingParams, n: int) -> EigenState:
    levels = bound_levels_recip_quadratic(ordering)
    for lv in levels.levels:
        if lv.n == n:
            return EigenState(ProfileId(ProfileKind.RECIP_QUADRATIC), ordering,
                              lv.e_tilde, _KIND_BOUND, n=n, parity=lv.parity)
    raise InvalidEnergy(f"no bound level n={n} for {ordering} "
                        f"({len(levels)} bound states exist)")


def recip_quadratic_scattering_state(ordering: OrderingParams, e_tilde: float,
                                     parity: str = "even") -> EigenState:
    """Continuum state at e_tilde > V_inf (even or odd particular branch)."""
    v_inf = scattering_threshold(ordering)
    if e_tilde <= v_inf:
        raise InvalidEnergy(
            f"scattering requires e_tilde > V_inf = {v_inf} "
            "(at equality the solution degenerates to the trivial one)")
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    return EigenState(ProfileId(ProfileKind.RECIP_QUADRATIC), ordering,
                      float(e_tilde), _KIND_SCATTERING, parity=parity)


def exponential_state(ordering: OrderingParams, n: int) -> EigenState:
    """n-th exponential-profile eigenstate (n >= 1)."""
    if n < 1:
        raise DomainError("exponential levels are indexed from 1")
    k = exponential_roots(ordering, n)[n - 1]
    return EigenState(ProfileId(ProfileKind.EXPONENTIAL), ordering, k * k,
                      _KIND_DISCRETE, n=n, parity=None)


def _mu_gamma(parity: str):
    if parity == "even":
        return 0.0, 0.5     # mu_minus, gamma_minus
    return 0.5, 1.5         # mu_plus, gamma_plus


def eval_trigonometric(state: EigenState, x: float) -> float:
    """Closed-form discrete eigenfunction of the trigonometric families."""
    if state.kind != _KIND_DISCRETE or state.profile.kind not in (
            ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        raise NotDiscrete("state is not a trigonometric discrete eigenstate")
    c = arrangement_constants(state.profile, state.ordering)
    nu = c.nu.real if isinstance(c.nu, complex) else float(c.nu)
    mu, gam = _mu_gamma(state.parity)
    k = state.n // 2
    a1 = 2.0 * mu + 0.5 + k
    b1 = 2.0 * nu - 0.5 - k
    if state.profile.kind is ProfileKind.SOLITON:
        t = math.tanh(x)
        y = t * t
        pref = (t ** int(2 * mu)) * (1.0 / math.cosh(x)) ** (2.0 * nu + 0.5)
    else:
        y = x * x / (1.0 + x * x)
        pref = (x ** int(2 * mu)) * (1.0 + x * x) ** (-(mu + nu + 0.5))
    f = gauss_2f1(a1, b1, gam, y).value
    return state.norm_constant * pref * (f.real if isinstance(f, complex) else f)


def eval_recip_quadratic(state: EigenState, x: float):
    """Reciprocal-quadratic bound (real) or scattering (complex) state."""
    if state.profile.kind is not ProfileKind.RECIP_QUADRATIC:
        raise DomainError("state does not belong to the reciprocal quadratic profile")
    c = arrangement_constants(state.profile, state.ordering)
    mu, gam = _mu_gamma(state.parity)
    y = x * x / (1.0 + x * x)
    if state.kind == _KIND_BOUND:
        s = c.sqrt_ab.real
        k = state.n // 2
        expo = k + 2.0 * mu + 0.5 - s
        f = gauss_2f1(k + 2.0 * mu + 0.5, k + 2.0 * mu + 0.5 - 2.0 * s, gam, y).value
        val = (x ** int(2 * mu)) * (1.0 + x * x) ** (-expo) * f
        return state.norm_constant * (val.real if isinstance(val, complex) else val)
    if state.kind == _KIND_SCATTERING:
        calig_e = state.e_tilde - float(c.v_inf)
        nu = -0.5j * math.sqrt(calig_e)
        sab = c.sqrt_ab
        f = gauss_2f1(mu + nu + 0.25 + sab, mu + nu + 0.25 - sab, gam, y).value
        pref = (x ** int(2 * mu)) * complex(1.0 + x * x) ** (-(mu + nu + 0.25))
        return state.norm_constant * pref * f
    raise InvalidEnergy("state energy matches neither bound nor scattering sector")


def eval_exponential(state: EigenState, x: float) -> float:
    """psi_n(x) = e^{-|x|} J_alpha(k_n e^{-|x|}); even in x."""
    if state.profile.kind is not ProfileKind.EXPONENTIAL:
        raise NotDiscrete("state does not belong to the exponential profile")
    a = exponential_alpha(state.ordering)
    k = math.sqrt(state.e_tilde)
    u = math.exp(-abs(x))
    return state.norm_constant * u * bessel("J", a, k * u).value


def derivative_jump_exponential(state: EigenState) -> float:
    """One-sided slope of the exponential eigenstate at the origin,
    psi'(0+) = -J_alpha(k_n)/2 (and psi'(0-) = +J_alpha(k_n)/2).

    The slope comes entirely from the mass cusp: psi = m^{1/4} zeta(z)
    with zeta'(0) = 0 by quantization and (m^{1/4})'(0+) = -1/2.  It
    vanishes exactly when k_n is a zero of J_alpha.  (The source text
    prints a (1/k)(1/2-k) prefactor for this limit, which contradicts its
    own eigenfunction and quantization equations; one-sided finite
    differences confirm the -1/2 factor.)
    """
    a = exponential_alpha(state.ordering)
    k = math.sqrt(state.e_tilde)
    return -0.5 * state.norm_constant * bessel("J", a, k).value


def parabolic_alpha(ordering: OrderingParams) -> float:
    c = arrangement_constants(ProfileId(ProfileKind.PARABOLIC, ell=1.0), ordering)
    a = c.alpha
    if isinstance(a, complex) and a.imag != 0.0:
        raise InvalidOrdering("parabolic omega < -1/4: imaginary Bessel order")
    return float(a.real if isinstance(a, complex) else a)


def eval_parabolic(ordering: OrderingParams, e_tilde: float, x: float,
                   ell: float) -> float:
    """Parabolic-profile state on |x| <= ell; requires omega > 0 (or
    omega = 0 with e_tilde = 0, where psi = sqrt(2|x|)).

    e_tilde may take any sign: positive energies use J, negative ones the
    modified I branch, zero the power law.  Includes the m^{1/4} factor,
    so values carry a sqrt(2) relative to the bare |x|^{3/2} forms.
    """
    profile = ProfileId(ProfileKind.PARABOLIC, ell=float(ell))
    if abs(x) > ell:
        raise DomainError(f"|x| <= {ell} required")
    c = arrangement_constants(profile, ordering)
    w = c.omega
    if w < 0:
        raise InvalidOrdering("parabolic arrangements with omega < 0 carry no states")
    if w == 0:
        if e_tilde != 0.0:
            raise InvalidEnergy("omega = 0 admits only the zero-energy state")
        return math.sqrt(2.0 * abs(x))
    a = parabolic_alpha(ordering)
    r32 = math.sqrt(2.0) * abs(x) ** 1.5
    if e_tilde == 0.0:
        return r32 * abs(x) ** (2.0 * a)
    if e_tilde > 0:
        return r32 * bessel("J", a, math.sqrt(e_tilde) * x * x).value
    return r32 * bessel("I", a, math.sqrt(-e_tilde) * x * x).value


def evaluate(state: EigenState, x: float):
    """Dispatch to the closed form of the state's family."""
    k = state.profile.kind
    if k in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        return eval_trigonometric(state, x)
    if k is ProfileKind.RECIP_QUADRATIC:
        return eval_recip_quadratic(state, x)
    if k is ProfileKind.EXPONENTIAL:
        return eval_exponential(state, x)
    raise DomainError("parabolic states are evaluated via eval_parabolic")


def density(state: EigenState, x: float) -> float:
    """rho(x) = |psi(x)|^2."""
    return abs(evaluate(state, x)) ** 2


def zeta_trigonometric(state: EigenState, z: float) -> float:
    """z-space eigenfunction of the trigonometric families."""
    c = arrangement_constants(state.profile, state.ordering)
    nu = c.nu.real if isinstance(c.nu, complex) else float(c.nu)
    mu, gam = _mu_gamma(state.parity)
    k = state.n // 2
    s, co = math.sin(z), math.cos(z)
    f = gauss_2f1(2.0 * mu + 0.5 + k, 2.0 * nu - 0.5 - k, gam, s * s).value
    return (s ** int(2 * mu)) * co ** (2.0 * nu) * f


def zeta_recip_quadratic_bound(state: EigenState, z: float) -> float:
    c = arrangement_constants(state.profile, state.ordering)
    sab = c.sqrt_ab.real
    mu, gam = _mu_gamma(state.parity)
    k = state.n // 2
    t, se = math.tanh(z), 1.0 / math.cosh(z)
    calig_e = state.e_tilde - float(c.v_inf)
    nu = -0.5 * math.sqrt(-calig_e)
    f = gauss_2f1(mu + nu + 0.25 + sab, mu + nu + 0.25 - sab, gam, t * t).value
    return (t ** int(2 * mu)) * se ** (2.0 * nu) * f


def zeta_exponential(state: EigenState, z: float) -> float:
    a = exponential_alpha(state.ordering)
    k = math.sqrt(state.e_tilde)
    t = 1.0 - abs(z)
    return math.sqrt(t) * bessel("J", a, k * t).value


def normalize(state: EigenState) -> EigenState:
    """Rescale so the density integrates to 1 (discrete/bound states only)."""
    if state.kind == _KIND_SCATTERING:
        raise NotNormalizable("continuum states have no finite norm")
    if state.profile.kind is ProfileKind.PARABOLIC:
        raise NotNormalizable("standalone parabolic states carry no "
                              "normalizable boundary problem")
    # densities are even in x for every family
    half, _ = quad(lambda x: density(state, x), 0.0, math.inf,
                   epsabs=1e-12, epsrel=1e-10, limit=200)
    total = 2.0 * half
    if not (total > 0.0 and math.isfinite(total)):
        raise NotNormalizable(f"norm integral came out as {total}")
    return replace(state, normalized=True,
                   norm_constant=state.norm_constant / math.sqrt(total))
