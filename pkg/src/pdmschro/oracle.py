"""Independent finite-difference eigensolver used to validate the closed
forms, in z space (constant-mass form) and in x space (variable-mass
Sturm-Liouville form).

The z-space operator -d2/dz2 + V(z) is discretized on a uniform grid as
a symmetric tridiagonal matrix and solved with LAPACK's bisection +
inverse-iteration path (scipy.linalg.eigh_tridiagonal).  Singular
endpoints (1/t^2 poles) get either a plain Dirichlet wall just inside
the pole or, by default, a Frobenius-matched wall: the boundary node is
tied to its neighbour by the ratio (t0/t1)^s where the local exponent
s = 1/2 + sqrt(1 + 4 w)/2 is extracted numerically from t^2 V(t) near
the wall.  A plain wall converges only logarithmically in the
limit-circle window (s < 1), far too slowly for the validation
tolerances; the matched wall restores O(h^2)-level accuracy.

The exponential profile is solved on the half-domain z in [0, 1) with a
Neumann condition at z = 0, which selects the even sector the closed
forms enumerate (a full-interval solve also contains an odd family at
zeros of J_alpha that the analytic level list does not cover).

The x-space form -( (1/m) psi' )' + U_amb psi = E psi is discretized
conservatively (flux form), which is already symmetric.  For the
exponential profile the ambiguity potential carries a distributional
part 2(a+b) delta(x) from the mass cusp, discretized as 2(a+b)/h on the
origin node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, LengthMismatch, SingularInterior
from .params import OrderingParams, ProfileId, ProfileKind, omega_of
from .spectra import LevelSet
from .transform import (ambiguity_potential, effective_potential, mass,
                        z_domain)


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid with Dirichlet-type endpoint handling.

    wall = "matched" ties pole-side boundary nodes to the local Frobenius
    power; "dirichlet" forces plain zero walls.  wall_offset overrides the
    automatic pole clearance.
    """

    n_points: int = 4000
    domain: Optional[Tuple[float, float]] = None
    truncation_tol: float = 1e-8
    wall_offset: Optional[float] = None
    wall: str = "matched"

    def __post_init__(self):
        if self.n_points < 64:
            raise DomainError("n_points must be >= 64")
        if self.wall not in ("matched", "dirichlet"):
            raise DomainError("wall must be 'matched' or 'dirichlet'")


@dataclass(frozen=True)
class OracleReport:
    compared: Tuple[Tuple[float, float, float, float], ...]
    # rows: (analytic, numeric, abs_err, rel_err)
    rel_tol: float
    abs_tol: float
    passed: bool


def _solve_tridiag(diag: np.ndarray, off: np.ndarray, count: int) -> np.ndarray:
    count = min(count, len(diag))
    vals = eigh_tridiagonal(diag, off, select="i",
                            select_range=(0, count - 1),
                            eigvals_only=True)
    return np.sort(vals)


def _frobenius_exponent(v_of_t, t_ref: float) -> Optional[float]:
    """Local exponent s with zeta ~ t^s at a 1/t^2 pole; the strength is
    fitted from two samples of t^2 V(t) (eliminates constant offsets)."""
    t1, t2 = t_ref, 2.0 * t_ref
    w_loc = (v_of_t(t1) - v_of_t(t2)) / (1.0 / t1 ** 2 - 1.0 / t2 ** 2)
    disc = 1.0 + 4.0 * w_loc
    if disc < 0.0:
        return None
    return 0.5 + 0.5 * math.sqrt(disc)


def _default_offset(s: Optional[float], h: float) -> float:
    # uniform-grid truncation near a t^s endpoint pollutes eigenvalues
    # like (h/delta)^2 when s < 3/2, so the wall scales with sqrt(h) there
    if s is not None and s >= 1.5:
        return max(4.0 * h, 1e-3)
    return max(2.0 * h, 0.3 * math.sqrt(h))


def _wall_ratio(v_of_t, t0: float, t1: float, grid: GridSpec) -> float:
    """ratio zeta(t0)/zeta(t1) imposed at a pole-side wall."""
    if grid.wall == "dirichlet":
        return 0.0
    s = _frobenius_exponent(v_of_t, max(t0, 1e-6))
    if s is None:          # omega < -1/4: no real exponent, plain wall
        return 0.0
    return (t0 / t1) ** s


def fd_spectrum_z(profile: ProfileId, ordering: OrderingParams,
                  grid: Optional[GridSpec] = None, count: int = 3) -> List[float]:
    """Lowest `count` eigenvalues of -zeta'' + V(z) zeta = E zeta."""
    k = profile.kind
    if grid is None:
        grid = GridSpec(n_points=16000 if k is ProfileKind.EXPONENTIAL else 4000)
    n = grid.n_points
    w = float(omega_of(profile, ordering))

    def v(z: float) -> float:
        return effective_potential(profile, ordering, z)

    if k in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC):
        half_span = math.pi / 2
        if w == 0.0:
            # constant potential: the box walls are the exact physics
            a_wall, b_wall = -half_span, half_span
            h = (b_wall - a_wall) / (n + 1)
            z = a_wall + h * np.arange(1, n + 1)
            diag = 2.0 / h ** 2 + np.array([v(zz) for zz in z])
            off = np.full(n - 1, -1.0 / h ** 2)
            return list(_solve_tridiag(diag, off, count))
        h_est = 2.0 * half_span / (n + 1)
        s = _frobenius_exponent(lambda t: v(half_span - t), 1e-3)
        delta = grid.wall_offset if grid.wall_offset is not None else \
            _default_offset(s, h_est)
        a_wall, b_wall = -half_span + delta, half_span - delta
        h = (b_wall - a_wall) / (n + 1)
        z = a_wall + h * np.arange(1, n + 1)
        diag = 2.0 / h ** 2 + np.array([v(zz) for zz in z])
        off = np.full(n - 1, -1.0 / h ** 2)
        r = _wall_ratio(lambda t: v(half_span - t), delta, delta + h, grid)
        diag[0] -= r / h ** 2
        diag[-1] -= r / h ** 2
        return list(_solve_tridiag(diag, off, count))

    if k is ProfileKind.RECIP_QUADRATIC:
        if grid.domain is not None:
            a_wall, b_wall = grid.domain
        else:
            z_cut = 10.0 if w == 0.0 else \
                math.acosh(math.sqrt(abs(w) / grid.truncation_tol)) + 2.0
            a_wall, b_wall = -z_cut, z_cut
        h = (b_wall - a_wall) / (n + 1)
        z = a_wall + h * np.arange(1, n + 1)
        diag = 2.0 / h ** 2 + np.array([v(zz) for zz in z])
        off = np.full(n - 1, -1.0 / h ** 2)
        return list(_solve_tridiag(diag, off, count))

    if k is ProfileKind.EXPONENTIAL:
        # even sector: half-domain [0, 1), Neumann at z=0 via a staggered
        # grid (nodes at (j+1/2)h), pole wall at z = 1 - delta
        if w == 0.0:
            h = 1.0 / n
            z = (np.arange(n) + 0.5) * h
            diag = 2.0 / h ** 2 + np.zeros(n)
            diag[0] = 1.0 / h ** 2
            diag[-1] = 3.0 / h ** 2   # interpolated Dirichlet at z=1
            off = np.full(n - 1, -1.0 / h ** 2)
            return list(_solve_tridiag(diag, off, count))
        h_est = 1.0 / n
        delta = grid.wall_offset if grid.wall_offset is not None else \
            _default_offset(0.5 + 0.5 * math.sqrt(max(1 + 4 * w, 0.0)) if 1 + 4 * w >= 0 else None,
                            h_est)
        span = 1.0 - delta
        h = span / n
        z = (np.arange(n) + 0.5) * h
        diag = 2.0 / h ** 2 + np.array([v(zz) for zz in z])
        diag[0] -= 1.0 / h ** 2       # Neumann reflection at z=0
        off = np.full(n - 1, -1.0 / h ** 2)
        # wall at z = span, i.e. pole distance delta; last node at delta + h/2
        r = _wall_ratio(lambda t: v(1.0 - t), delta, delta + 0.5 * h, grid)
        diag[-1] -= r / h ** 2
        return list(_solve_tridiag(diag, off, count))

    # parabolic: interior pole at z=0 (omega != 0); each parity reduces to
    # the half-domain (0, ell^2) with a Dirichlet box wall at ell^2.  The
    # returned levels are those of the boxed variant, each representing a
    # degenerate even/odd pair of the full interval.
    if w == 0.0:
        raise SingularInterior("parabolic omega = 0 has no pole but also no "
                               "discrete box problem worth solving (V = 0)")
    top = profile.ell ** 2
    h_est = top / (n + 1)
    s = _frobenius_exponent(lambda t: v(t), 1e-3) if w > 0 else None
    delta = grid.wall_offset if grid.wall_offset is not None else \
        _default_offset(s, h_est)
    a_wall, b_wall = delta, top
    h = (b_wall - a_wall) / (n + 1)
    z = a_wall + h * np.arange(1, n + 1)
    diag = 2.0 / h ** 2 + np.array([v(zz) for zz in z])
    off = np.full(n - 1, -1.0 / h ** 2)
    r = _wall_ratio(lambda t: v(t), delta, delta + h, grid)
    diag[0] -= r / h ** 2
    return list(_solve_tridiag(diag, off, count))


def fd_eigensystem_z(profile: ProfileId, ordering: OrderingParams,
                     grid: Optional[GridSpec] = None, count: int = 3):
    """(eigenvalues, eigenvectors, z nodes) for parity inspection; full
    interval, trigonometric and reciprocal-quadratic profiles only."""
    k = profile.kind
    if k not in (ProfileKind.SOLITON, ProfileKind.BIQUADRATIC,
                 ProfileKind.RECIP_QUADRATIC):
        raise DomainError("eigensystem helper covers full-interval profiles")
    if grid is None:
        grid = GridSpec()
    n = grid.n_points
    w = float(omega_of(profile, ordering))

    def v(z: float) -> float:
        return effective_potential(profile, ordering, z)

    if k is ProfileKind.RECIP_QUADRATIC:
        z_cut = 10.0 if w == 0.0 else \
            math.acosh(math.sqrt(abs(w) / grid.truncation_tol)) + 2.0
        a_wall, b_wall = (grid.domain if grid.domain is not None
                          else (-z_cut, z_cut))
        delta = 0.0
    else:
        half = math.pi / 2
        if w == 0.0:
            a_wall, b_wall, delta = -half, half, 0.0
        else:
            h_est = math.pi / (n + 1)
            s = _frobenius_exponent(lambda t: v(half - t), 1e-3)
            delta = grid.wall_offset if grid.wall_offset is not None else \
                _default_offset(s, h_est)
            a_wall, b_wall = -half + delta, half - delta
    h = (b_wall - a_wall) / (n + 1)
    z = a_wall + h * np.arange(1, n + 1)
    diag = 2.0 / h ** 2 + np.array([v(zz) for zz in z])
    off = np.full(n - 1, -1.0 / h ** 2)
    if delta > 0.0 and k is not ProfileKind.RECIP_QUADRATIC:
        half = math.pi / 2
        r = _wall_ratio(lambda t: v(half - t), delta, delta + h, grid)
        diag[0] -= r / h ** 2
        diag[-1] -= r / h ** 2
    vals, vecs = eigh_tridiagonal(diag, off, select="i",
                                  select_range=(0, min(count, n) - 1))
    return vals, vecs, z


def fd_spectrum_x(profile: ProfileId, ordering: OrderingParams,
                  grid: Optional[GridSpec] = None, count: int = 3,
                  include_ambiguity: bool = True,
                  symmetrized: bool = True) -> List[float]:
    """Lowest eigenvalues of the x-space operator
    -((1/m) psi')' + U_amb psi = E psi.

    Truncation converges exponentially for the soliton-like and
    exponential profiles; the power-law mass tails (biquadratic,
    reciprocal quadratic) need very large domains for tight tolerances,
    so pass an explicit GridSpec.domain for those.  Parabolic is
    rejected (m(0) = 0).  With symmetrized=False the non-conservative
    form -(1/m) psi'' + (m'/m^2) psi' + U psi is discretized directly as
    a dense non-symmetric matrix (cross-check path, keep n modest).
    """
    k = profile.kind
    if k is ProfileKind.PARABOLIC:
        raise DomainError("x-space oracle requires m > 0 on the interior")
    if grid is None:
        grid = GridSpec()
    n = grid.n_points
    if grid.domain is not None:
        a_wall, b_wall = grid.domain
    else:
        span = {ProfileKind.SOLITON: 25.0, ProfileKind.EXPONENTIAL: 14.0,
                ProfileKind.BIQUADRATIC: 60.0,
                ProfileKind.RECIP_QUADRATIC: 60.0}[k]
        a_wall, b_wall = -span, span

    # keep a node exactly at x=0 so the cusp/delta term lands on it
    if n % 2 == 0:
        n += 1
    h = (b_wall - a_wall) / (n + 1)
    x = a_wall + h * np.arange(1, n + 1)
    i0 = int(np.argmin(np.abs(x)))
    x[i0] = 0.0

    def u_amb(xx: float) -> float:
        if not include_ambiguity:
            return 0.0
        if k is ProfileKind.EXPONENTIAL and xx == 0.0:
            # classical part is continuous across the cusp
            return ambiguity_potential(profile, ordering, 1e-12)
        return ambiguity_potential(profile, ordering, xx)

    pot = np.array([u_amb(xx) for xx in x])
    if (k is ProfileKind.EXPONENTIAL and include_ambiguity):
        a, b = float(ordering.a), float(ordering.b)
        pot[i0] += 2.0 * (a + b) / h     # delta part of the cusp

    if symmetrized:
        p_half = np.array([1.0 / mass(profile, float(xx))
                           for xx in (x[:-1] + x[1:]) / 2.0])
        p_lo = 1.0 / mass(profile, float(x[0] - 0.5 * h))
        p_hi = 1.0 / mass(profile, float(x[-1] + 0.5 * h))
        diag = pot.copy()
        diag[0] += (p_lo + p_half[0]) / h ** 2
        diag[-1] += (p_half[-1] + p_hi) / h ** 2
        diag[1:-1] += (p_half[:-1] + p_half[1:]) / h ** 2
        off = -p_half / h ** 2
        return list(_solve_tridiag(diag, off, count))

    if n > 3200:
        raise DomainError("unsymmetrized cross-check path: keep n <= 3200")
    m_vals = np.array([mass(profile, float(xx)) for xx in x])
    # m'(x) analytically via central differences of m itself
    mp = np.array([(mass(profile, float(xx + 1e-6)) -
                    mass(profile, float(xx - 1e-6))) / 2e-6 for xx in x])
    A = np.zeros((n, n))
    for i in range(n):
        inv_m = 1.0 / m_vals[i]
        A[i, i] = 2.0 * inv_m / h ** 2 + pot[i]
        drift = mp[i] / m_vals[i] ** 2
        if i > 0:
            A[i, i - 1] = -inv_m / h ** 2 - drift / (2.0 * h)
        if i < n - 1:
            A[i, i + 1] = -inv_m / h ** 2 + drift / (2.0 * h)
    vals = np.linalg.eigvals(A)
    vals = np.sort(vals[np.abs(vals.imag) < 1e-6].real)
    return list(vals[:count])


def compare(analytic, numeric: Sequence[float], rel_tol: float,
            abs_tol: float = 0.0) -> OracleReport:
    """Pairwise comparison by index after sorting; a pair passes when its
    relative error is within rel_tol or its absolute error within abs_tol."""
    if isinstance(analytic, LevelSet):
        analytic = analytic.energies()
    analytic = sorted(float(a) for a in analytic)
    numeric = sorted(float(b) for b in numeric)
    if not analytic or not numeric:
        raise LengthMismatch("empty level list")
    if len(analytic) != len(numeric):
        raise LengthMismatch(f"{len(analytic)} analytic vs {len(numeric)} "
                             "numeric levels")
    rows = []
    ok = True
    for a, b in zip(analytic, numeric):
        abs_err = abs(a - b)
        rel_err = abs_err / abs(a) if a != 0.0 else math.inf
        good = rel_err <= rel_tol or abs_err <= abs_tol
        ok = ok and good
        rows.append((a, b, abs_err, rel_err))
    return OracleReport(tuple(rows), rel_tol, abs_tol, ok)
