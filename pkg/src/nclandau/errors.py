"""Exception hierarchy for the nclandau package."""


class NCLandauError(Exception):
    """Base class for all domain errors raised by this package."""


class DegenerateRepresentation(NCLandauError):
    """The planar phase-space representation collapses (hbar - B*theta ~ 0)."""


class InadmissibleGauge(NCLandauError):
    """Gauge parameter r sits on the pole r = hbar/(B*theta)."""


class OutOfDomain(NCLandauError):
    """Requested parameters lie outside the validity domain of a prescription."""


class NonCanonicalForm(NCLandauError):
    """Assembled Hamiltonian contains cross terms the quadratic form cannot hold."""


class SingularMass(NCLandauError):
    """Assembled Hamiltonian has a non-positive effective mass."""


class ZeroModeUnsupported(NCLandauError):
    """Operation requires a discrete level ladder but a mode frequency vanishes."""


class DynamicallyUnstable(NCLandauError):
    """Mode invariants admit no real eigenfrequencies."""

    def __init__(self, S: float, P: float, message: str | None = None):
        self.S = S
        self.P = P
        super().__init__(message or f"unstable invariants: S={S!r}, P={P!r}")


class NonBiquadratic(NCLandauError):
    """Dynamical matrix has odd characteristic coefficients above tolerance."""


class ConvergenceFailure(NCLandauError):
    """Numerical oracle failed to converge within its iteration/truncation cap."""
