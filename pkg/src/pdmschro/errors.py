"""Exception hierarchy shared across the package.

Everything derives from PdmError so callers can catch library failures
with one clause; DomainError doubles as a ValueError for idiomatic use.
"""


class PdmError(Exception):
    """Base class for all pdmschro errors."""


class DomainError(PdmError, ValueError):
    """Input lies outside the mathematical domain of the operation."""


class SingularPoint(PdmError):
    """Evaluation requested at (or within the guard band of) a pole."""


class SingularAtZero(PdmError):
    """K or H(1) Bessel evaluation at zero argument."""


class DivergentAtOne(PdmError):
    """Gauss 2F1 at y=1 with Re(gamma - alpha - beta) <= 0."""


class NotDiscrete(PdmError):
    """The arrangement carries no discrete spectrum."""


class InvalidEnergy(PdmError):
    """Energy incompatible with the requested state family."""


class InvalidOrdering(PdmError):
    """Ordering not admissible for the requested construction."""


class NotNormalizable(PdmError):
    """Scattering/continuum states have no finite L2 norm."""


class SingularInterior(PdmError):
    """Effective potential has an unsupported interior pole."""


class LengthMismatch(PdmError):
    """Analytic and numeric level lists differ in length."""


class DegenerateJunction(PdmError):
    """Heterostructure with m1 = m2 (junction constants diverge)."""


class ResonanceDenominator(PdmError):
    """Scattering denominator below the trust threshold; not divided."""


class ZeroEnergy(PdmError):
    """E = 0 requested where the Bessel pair degenerates."""
