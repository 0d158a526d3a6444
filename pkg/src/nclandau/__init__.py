"""Gauge-invariant spectra for the noncommutative Landau problem.

Core pipeline: a phase-space representation (representations) is substituted
into the trapped-particle Hamiltonian (hamiltonian), whose normal-mode
frequencies and levels follow from two characteristic invariants (spectra),
all cross-validated against independent numerical oracles (oracle).  The
workflows module drives scenario-level runs; service exposes them over HTTP
and cli from the command line.
"""

from .errors import (
    ConvergenceFailure,
    DegenerateRepresentation,
    DynamicallyUnstable,
    InadmissibleGauge,
    NCLandauError,
    NonBiquadratic,
    NonCanonicalForm,
    OutOfDomain,
    SingularMass,
    ZeroModeUnsupported,
)
from .hamiltonian import (
    PhysicalSystem,
    QuadraticForm,
    assemble,
    landau_params,
    nmp_params,
    nmp_representation,
    symmetric_params,
)
from .oracle import (
    DynamicalMatrix,
    FockMatrix,
    OracleReport,
    build_fock_matrix,
    compare,
    dynamical_matrix,
    hermitian_eigenvalues,
    oracle_invariants,
)
from .representations import (
    CommutatorMatrix,
    GaugePair,
    NCParameters,
    RepMatrix,
    commutator_table,
    detect_degenerate,
    landau_gauge,
    make_representation,
    symmetric_gauge,
    target_commutators,
)
from .spectra import (
    EigenFrequencies,
    EnergyLevel,
    LadderCoefficients,
    ModeInvariants,
    eigenfrequencies,
    energy,
    enumerate_levels,
    group_degenerate,
    invariants,
    ladder_coefficients,
    paper_invariants,
)
from .workflows import (
    AuditResult,
    Scenario,
    SpectrumResult,
    SweepRecord,
    audit_run,
    oracle_run,
    spectrum_run,
    sweep_run,
)

__version__ = "0.1.0"

__all__ = [
    "AuditResult",
    "CommutatorMatrix",
    "ConvergenceFailure",
    "DegenerateRepresentation",
    "DynamicalMatrix",
    "DynamicallyUnstable",
    "EigenFrequencies",
    "EnergyLevel",
    "FockMatrix",
    "GaugePair",
    "InadmissibleGauge",
    "LadderCoefficients",
    "ModeInvariants",
    "NCLandauError",
    "NCParameters",
    "NonBiquadratic",
    "NonCanonicalForm",
    "OracleReport",
    "OutOfDomain",
    "PhysicalSystem",
    "QuadraticForm",
    "RepMatrix",
    "Scenario",
    "SingularMass",
    "SpectrumResult",
    "SweepRecord",
    "ZeroModeUnsupported",
    "assemble",
    "audit_run",
    "build_fock_matrix",
    "commutator_table",
    "compare",
    "detect_degenerate",
    "dynamical_matrix",
    "eigenfrequencies",
    "energy",
    "enumerate_levels",
    "group_degenerate",
    "hermitian_eigenvalues",
    "invariants",
    "ladder_coefficients",
    "landau_gauge",
    "landau_params",
    "make_representation",
    "nmp_params",
    "nmp_representation",
    "oracle_invariants",
    "oracle_run",
    "paper_invariants",
    "spectrum_run",
    "sweep_run",
    "symmetric_gauge",
    "symmetric_params",
    "target_commutators",
]
