"""Two-parameter gauge family of phase-space representations.

A point on the noncommutative plane in a constant magnetic field is described
by four operators (X, Y, Pi_x, Pi_y) obeying

    [X, Pi_x] = [Y, Pi_y] = i*hbar,   [X, Y] = i*theta,   [Pi_x, Pi_y] = i*hbar*B.

Every such quadruple used here is a real linear combination of the canonical
quadruple z = (x, y, p_x, p_y), so a representation is stored as the 4x4
coefficient matrix R with one row per operator.  All operator algebra then
reduces to the symplectic bilinear form: the commutator table is R @ J @ R.T.

The family is parameterized by a gauge pair (r, s); the Landau gauge is
(1, 0) and the symmetric gauge is (hbar/(hbar + sqrt(hbar*(hbar - theta*B))), 1/2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRepresentation, InadmissibleGauge, OutOfDomain

# Relative width of the band around the degenerate stratum hbar - B*theta = 0
# and around the gauge pole r = hbar/(B*theta).
DEGENERACY_RTOL = 1e-12

# Commutator-table tolerance for a valid representation.
COMMUTATOR_RTOL = 1e-12

# Symplectic form of the canonical quadruple (x, y, p_x, p_y):
# [z_a, z_b] = i*hbar*J_ab.
SYMPLECTIC_J = np.zeros((4, 4))
SYMPLECTIC_J[0, 2] = SYMPLECTIC_J[1, 3] = 1.0
SYMPLECTIC_J[2, 0] = SYMPLECTIC_J[3, 1] = -1.0
SYMPLECTIC_J.setflags(write=False)


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class NCParameters:
    """Deformation parameters of the phase-space algebra.

    hbar : action scale (> 0)
    theta : spatial noncommutativity [X, Y] = i*theta (>= 0)
    B : magnetic field strength, charge and light speed absorbed
    m : particle mass (> 0)
    """

    hbar: float
    theta: float
    B: float
    m: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not (self.m > 0):
            raise ValueError(f"m must be positive, got {self.m}")
        if self.theta < 0:
            raise ValueError(f"theta must be nonnegative, got {self.theta}")
        if not np.isfinite(self.B / self.m):
            raise ValueError("cyclotron frequency B/m is not finite")

    @property
    def omega_c(self) -> float:
        return self.B / self.m

    @property
    def is_degenerate(self) -> bool:
        return detect_degenerate(self)


@dataclass(frozen=True)
class GaugePair:
    """A point (r, s) selecting one member of the equivalent representation family."""

    r: float
    s: float

    def is_admissible(self, nc: NCParameters) -> bool:
        """r must avoid the pole hbar/(B*theta); s is unconstrained."""
        bt = nc.B * nc.theta
        if bt == 0.0:
            return True
        return abs(nc.hbar - bt * self.r) > DEGENERACY_RTOL * max(nc.hbar, abs(bt * self.r))


@dataclass(frozen=True)
class RepMatrix:
    """4x4 coefficient matrix; row i gives operator i over (x, y, p_x, p_y).

    Row order: X, Y, Pi_x, Pi_y.
    """

    rows: np.ndarray

    def __post_init__(self):
        rows = _readonly(self.rows)
        if rows.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {rows.shape}")
        if not np.all(np.isfinite(rows)):
            raise ValueError("representation matrix has non-finite entries")
        object.__setattr__(self, "rows", rows)


@dataclass(frozen=True)
class CommutatorMatrix:
    """Antisymmetric C with [O_a, O_b] = i*hbar*C_ab over the operator quadruple."""

    entries: np.ndarray

    def __post_init__(self):
        entries = _readonly(self.entries)
        if entries.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {entries.shape}")
        object.__setattr__(self, "entries", entries)

    def matches(self, target: np.ndarray, rtol: float = COMMUTATOR_RTOL) -> bool:
        scale = max(1.0, float(np.max(np.abs(target))))
        return bool(np.max(np.abs(self.entries - target)) <= rtol * scale)


def detect_degenerate(nc: NCParameters, rtol: float = DEGENERACY_RTOL) -> bool:
    """True iff the parameters sit on the stratum hbar - B*theta = 0.

    There the planar representation collapses onto the line and none of the
    planar formulas apply.
    """
    bt = nc.B * nc.theta
    return abs(nc.hbar - bt) <= rtol * max(nc.hbar, abs(bt))


def landau_gauge() -> GaugePair:
    """Gauge pair of the Landau gauge."""
    return GaugePair(r=1.0, s=0.0)


def symmetric_gauge(nc: NCParameters) -> GaugePair:
    """Gauge pair of the symmetric gauge.

    Defined only where hbar*(hbar - theta*B) >= 0; beyond that bound the
    square root turns imaginary and the gauge does not exist.
    """
    radicand = nc.hbar * (nc.hbar - nc.theta * nc.B)
    if radicand < 0:
        raise OutOfDomain(
            "symmetric gauge undefined: hbar - theta*B = "
            f"{nc.hbar - nc.theta * nc.B!r} < 0"
        )
    return GaugePair(r=nc.hbar / (nc.hbar + np.sqrt(radicand)), s=0.5)


def make_representation(nc: NCParameters, g: GaugePair) -> RepMatrix:
    """Build the linear map of the (r, s) representation over (x, y, p_x, p_y).

    Raises DegenerateRepresentation on the collapsed stratum and
    InadmissibleGauge on the pole of the Pi_x coefficient.
    """
    if detect_degenerate(nc):
        raise DegenerateRepresentation(
            f"hbar - B*theta = {nc.hbar - nc.B * nc.theta!r} is within the degeneracy band"
        )
    if not g.is_admissible(nc):
        raise InadmissibleGauge(
            f"r = {g.r!r} sits on the pole hbar/(B*theta) = {nc.hbar / (nc.B * nc.theta)!r}"
        )
    h, t, B = nc.hbar, nc.theta, nc.B
    r, s = g.r, g.s
    rows = np.array(
        [
            [1.0, 0.0, 0.0, -s * t / h],
            [0.0, 1.0, (1.0 - s) * t / h, 0.0],
            [0.0, B * h * (1.0 - r) / (h - B * t * r), (B * t * (r + s - r * s) - h) / (B * t * r - h), 0.0],
            [-r * B, 0.0, 0.0, 1.0 + r * (s - 1.0) * B * t / h],
        ]
    )
    return RepMatrix(rows)


def commutator_table(rep: RepMatrix) -> CommutatorMatrix:
    """Commutators of the represented operators, C = R @ J @ R.T.

    Antisymmetry is exact by construction.
    """
    R = rep.rows
    C = R @ SYMPLECTIC_J @ R.T
    C = (C - C.T) / 2.0
    return CommutatorMatrix(C)


def target_commutators(nc: NCParameters) -> np.ndarray:
    """Commutator table a valid representation must reproduce."""
    C = np.zeros((4, 4))
    C[0, 1] = nc.theta / nc.hbar
    C[0, 2] = 1.0
    C[1, 3] = 1.0
    C[2, 3] = nc.B
    C -= C.T
    C.setflags(write=False)
    return C
