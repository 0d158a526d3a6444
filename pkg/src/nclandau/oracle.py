"""Independent numerical ground truth for the quadratic-form spectra.

Two oracles with complementary failure modes:

* the classical dynamical matrix A of Hamilton's equations, whose
  characteristic polynomial lambda^4 + S lambda^2 + P delivers the mode
  invariants without any eigensolver and handles zero modes exactly;

* dense diagonalization of the quantum Hamiltonian in a truncated two-mode
  number basis |n1, n2>, which validates actual energy levels including
  zero-point offsets, under a truncation-doubling convergence schedule.

Every closed form in the package is expected to agree with both wherever they
apply; the comparison driver lives in `compare`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, NonBiquadratic, ZeroModeUnsupported
from .hamiltonian import QuadraticForm
from .spectra import (
    EigenFrequencies,
    ModeInvariants,
    eigenfrequencies,
    enumerate_levels,
    invariants,
)

BIQUADRATIC_RTOL = 1e-12

# Truncation sizes for the Fock oracle; stop doubling once the watched levels
# move by less than tol/10.  n_max^2 is the matrix dimension.
DEFAULT_SCHEDULE = (8, 16, 32, 64)


@dataclass(frozen=True)
class DynamicalMatrix:
    """Linearized Hamiltonian flow dz/dt = A z over z = (x, y, p_x, p_y)."""

    A: np.ndarray

    def __post_init__(self):
        A = np.array(self.A, dtype=float)
        A.setflags(write=False)
        object.__setattr__(self, "A", A)


@dataclass(frozen=True)
class FockMatrix:
    """Hermitian matrix over |n1, n2>, 0 <= n_i < n_max, index n1*n_max + n2."""

    matrix: np.ndarray
    n_max: int

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class OracleReport:
    """Outcome of checking analytic results against the numerical oracles."""

    mode: str  # "fock" or "dynamical_only"
    analytic: tuple[float, ...]
    oracle: tuple[float, ...]
    abs_dev: tuple[float, ...]
    rel_dev: tuple[float, ...]
    max_rel_dev: float
    n_max: int
    converged: bool
    within_tol: bool
    tol: float
    invariants_closed: ModeInvariants
    invariants_dynamical: ModeInvariants
    invariant_dev: float

    @property
    def ok(self) -> bool:
        return self.converged and self.within_tol


def dynamical_matrix(qf: QuadraticForm) -> DynamicalMatrix:
    """Hamilton's equations of the quadratic form as a 4x4 matrix."""
    a, b, k1, k2 = qf.a, qf.b, qf.k1, qf.k2
    l1, l2 = qf.l1, qf.l2
    A = np.array(
        [
            [0.0, l2, a, 0.0],
            [-l1, 0.0, 0.0, b],
            [-k1, 0.0, 0.0, l1],
            [0.0, -k2, -l2, 0.0],
        ]
    )
    return DynamicalMatrix(A)


def oracle_invariants(dm: DynamicalMatrix) -> ModeInvariants:
    """(S, P) as characteristic coefficients, S = -tr(A^2)/2 and P = det(A),
    both obtained from Newton's trace identities without any eigensolver.

    Verifies first that the characteristic polynomial is biquadratic (odd
    coefficients vanish); a Hamiltonian flow of the supported family always
    is, so a violation means the matrix was not produced by dynamical_matrix.
    """
    A = dm.A
    A2 = A @ A
    p1 = float(np.trace(A))
    p2 = float(np.trace(A2))
    p3 = float(np.trace(A2 @ A))
    p4 = float(np.trace(A2 @ A2))
    norm = float(np.linalg.norm(A))
    e1 = p1
    e2 = (e1 * p1 - p2) / 2.0
    e3 = (e2 * p1 - e1 * p2 + p3) / 3.0
    e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0
    if abs(e1) > BIQUADRATIC_RTOL * max(1.0, norm) or abs(e3) > BIQUADRATIC_RTOL * max(1.0, norm**3):
        raise NonBiquadratic(f"odd characteristic coefficients {e1!r}, {e3!r}")
    return ModeInvariants(S=e2, P=e4)


def build_fock_matrix(qf: QuadraticForm, hbar: float, n_max: int) -> FockMatrix:
    """Quadratic Hamiltonian in the truncated |n1, n2> number basis.

    The mode ladder requires both Omega_i > 0.  The couplings
    -l1 x p_y + l2 y p_x are expanded directly in ladder operators, producing
    pair terms |n1, n2> <-> |n1+1, n2+1> and exchange terms
    |n1, n2> <-> |n1+1, n2-1>; total occupation parity is conserved.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    if qf.Omega1_sq <= 0 or qf.Omega2_sq <= 0:
        raise ZeroModeUnsupported(
            f"Fock basis needs positive mode frequencies, got squared "
            f"({qf.Omega1_sq!r}, {qf.Omega2_sq!r})"
        )
    O1 = np.sqrt(qf.Omega1_sq)
    O2 = np.sqrt(qf.Omega2_sq)
    # x = s1 (a1 + a1+), p_x = -i t1 (a1 - a1+), and likewise for mode 2:
    # s_i = sqrt(hbar / (2 M_i O_i)), t_i = sqrt(hbar M_i O_i / 2).
    s1t2 = 0.5 * hbar * np.sqrt((qf.M2 * O2) / (qf.M1 * O1))
    s2t1 = 0.5 * hbar * np.sqrt((qf.M1 * O1) / (qf.M2 * O2))
    pair = qf.l1 * s1t2 - qf.l2 * s2t1      # i * pair * (a1 a2 - a1+ a2+)
    exch = qf.l1 * s1t2 + qf.l2 * s2t1      # i * exch * (a1+ a2 - a1 a2+)

    dim = n_max * n_max
    H = np.zeros((dim, dim), dtype=complex)
    for n1 in range(n_max):
        for n2 in range(n_max):
            i = n1 * n_max + n2
            H[i, i] = hbar * (O1 * (n1 + 0.5) + O2 * (n2 + 0.5))
            if n1 + 1 < n_max and n2 + 1 < n_max:
                j = (n1 + 1) * n_max + (n2 + 1)
                amp = -1j * pair * np.sqrt((n1 + 1) * (n2 + 1))
                H[j, i] = amp
                H[i, j] = np.conj(amp)
            if n1 + 1 < n_max and n2 >= 1:
                j = (n1 + 1) * n_max + (n2 - 1)
                amp = 1j * exch * np.sqrt((n1 + 1) * n2)
                H[j, i] = amp
                H[i, j] = np.conj(amp)
    return FockMatrix(H, n_max)


def hermitian_eigenvalues(fm: FockMatrix) -> np.ndarray:
    """All eigenvalues of the Hermitian matrix, ascending."""
    try:
        return np.linalg.eigvalsh(fm.matrix)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise ConvergenceFailure(f"eigensolver failed: {exc}") from exc


def compare(
    analytic: EigenFrequencies,
    qf: QuadraticForm,
    hbar: float,
    tol: float = 1e-6,
    schedule: tuple[int, ...] = DEFAULT_SCHEDULE,
    n_levels: int = 6,
) -> OracleReport:
    """Check analytic frequencies/energies against both oracles.

    When the Fock ladder applies (positive mode frequencies and a nonzero
    lowest eigenfrequency) the lowest `n_levels` analytic energies are
    compared against the truncated spectrum under the doubling schedule;
    convergence means the watched levels moved by less than tol/10 on the
    last doubling.  Otherwise the check falls back to the dynamical-matrix
    invariants alone and compares frequencies instead of levels.

    A failed convergence is reported through the flags, not raised.
    """
    inv_closed = invariants(qf)
    inv_dyn = oracle_invariants(dynamical_matrix(qf))
    scale = max(1.0, abs(inv_closed.S), abs(inv_closed.P))
    invariant_dev = max(abs(inv_closed.S - inv_dyn.S), abs(inv_closed.P - inv_dyn.P)) / scale

    # The ladder needs positive mode frequencies on both sides, and the true
    # dynamics must be free of zero modes regardless of what the requested
    # convention claims for the analytic frequencies.
    oracle_freqs = eigenfrequencies(inv_dyn)
    zero_mode = oracle_freqs.omega_tilde_2 <= 1e-9 * max(1.0, oracle_freqs.omega_tilde_1)
    fock_applies = (
        qf.Omega1_sq > 0
        and qf.Omega2_sq > 0
        and analytic.omega_tilde_2 > 0
        and not zero_mode
    )
    if not fock_applies:
        ana = (analytic.omega_tilde_1, analytic.omega_tilde_2)
        orc = (oracle_freqs.omega_tilde_1, oracle_freqs.omega_tilde_2)
        abs_dev = tuple(abs(x - y) for x, y in zip(ana, orc))
        rel_dev = tuple(d / max(1.0, abs(y)) for d, y in zip(abs_dev, orc))
        max_rel = max(rel_dev)
        return OracleReport(
            mode="dynamical_only",
            analytic=ana,
            oracle=orc,
            abs_dev=abs_dev,
            rel_dev=rel_dev,
            max_rel_dev=max_rel,
            n_max=0,
            converged=True,
            within_tol=max_rel <= tol and invariant_dev <= BIQUADRATIC_RTOL,
            tol=tol,
            invariants_closed=inv_closed,
            invariants_dynamical=inv_dyn,
            invariant_dev=invariant_dev,
        )

    targets = np.array([lv.E for lv in enumerate_levels(analytic, hbar, n_levels)])
    prev = None
    converged = False
    levels = np.empty(0)
    n_used = schedule[0]
    for n_max in schedule:
        n_used = n_max
        levels = hermitian_eigenvalues(build_fock_matrix(qf, hbar, n_max))[:n_levels]
        if prev is not None and float(np.max(np.abs(levels - prev))) < tol / 10.0:
            converged = True
            break
        prev = levels

    abs_dev = tuple(float(abs(x - y)) for x, y in zip(targets, levels))
    rel_dev = tuple(d / max(1e-300, abs(float(y))) for d, y in zip(abs_dev, levels))
    max_rel = max(rel_dev)
    return OracleReport(
        mode="fock",
        analytic=tuple(float(x) for x in targets),
        oracle=tuple(float(x) for x in levels),
        abs_dev=abs_dev,
        rel_dev=rel_dev,
        max_rel_dev=max_rel,
        n_max=n_used,
        converged=converged,
        within_tol=max_rel <= tol and invariant_dev <= BIQUADRATIC_RTOL,
        tol=tol,
        invariants_closed=inv_closed,
        invariants_dynamical=inv_dyn,
        invariant_dev=invariant_dev,
    )
