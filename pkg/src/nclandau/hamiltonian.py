"""Assembly of the trapped-particle Hamiltonian into a canonical quadratic form.

The Hamiltonian

    H = (Pi_x^2 + Pi_y^2)/(2m) + (m/2)*(omega1^2 X^2 + omega2^2 Y^2)

becomes, after substituting any representation of the operator quadruple over
(x, y, p_x, p_y), a six-parameter quadratic form

    H = p_x^2/(2 M1) + p_y^2/(2 M2) + M1 Omega1^2 x^2/2 + M2 Omega2^2 y^2/2
        - l1 x p_y + l2 y p_x.

Three routes into that form are provided: generic matrix assembly from a
RepMatrix, closed-form parameter maps for the Landau and symmetric gauges
(redundant encodings of the assembled object, kept for cross-validation), and
the gauge-dependent naive-minimal-prescription tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRepresentation, NonCanonicalForm, OutOfDomain, SingularMass
from .representations import NCParameters, RepMatrix

CROSS_TERM_RTOL = 1e-12


@dataclass(frozen=True)
class PhysicalSystem:
    """Physical inputs: mass, trap frequencies, cyclotron frequency, hbar, theta.

    The magnetic field is derived as B = m*omega_c and never stored separately.
    """

    m: float = 1.0
    omega1: float = 1.0
    omega2: float = 1.0
    omega_c: float = 1.0
    hbar: float = 1.0
    theta: float = 0.0

    def __post_init__(self):
        if not (self.m > 0 and self.hbar > 0):
            raise ValueError("m and hbar must be positive")
        if self.omega1 < 0 or self.omega2 < 0 or self.theta < 0:
            raise ValueError("omega1, omega2 and theta must be nonnegative")

    @property
    def B(self) -> float:
        return self.m * self.omega_c

    def nc_parameters(self) -> NCParameters:
        return NCParameters(hbar=self.hbar, theta=self.theta, B=self.B, m=self.m)


@dataclass(frozen=True)
class QuadraticForm:
    """Six parameters of the canonical quadratic Hamiltonian.

    Frequencies are stored squared so that exact zeros (pure Landau) survive.
    """

    M1: float
    M2: float
    Omega1_sq: float
    Omega2_sq: float
    l1: float
    l2: float

    def __post_init__(self):
        if not (self.M1 > 0 and self.M2 > 0):
            raise SingularMass(f"effective masses must be positive, got {self.M1!r}, {self.M2!r}")
        if self.Omega1_sq < 0 or self.Omega2_sq < 0:
            # Only a broken parameter map can produce this; all in-scope maps
            # build the squared frequencies from products of nonnegatives.
            raise ValueError(
                f"negative squared frequency: {self.Omega1_sq!r}, {self.Omega2_sq!r}"
            )

    @property
    def a(self) -> float:
        return 1.0 / self.M1

    @property
    def b(self) -> float:
        return 1.0 / self.M2

    @property
    def k1(self) -> float:
        return self.M1 * self.Omega1_sq

    @property
    def k2(self) -> float:
        return self.M2 * self.Omega2_sq

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.M1, self.M2, self.Omega1_sq, self.Omega2_sq, self.l1, self.l2)


def assemble(sys: PhysicalSystem, rep: RepMatrix) -> QuadraticForm:
    """Assemble the quadratic form from a representation matrix.

    Builds the symmetric coefficient matrix G of H = z^T G z over
    z = (x, y, p_x, p_y) and extracts the six parameters.  The operator
    families in scope generate no xy, x p_x, y p_y or p_x p_y terms; their
    presence indicates a corrupted representation and raises NonCanonicalForm.
    """
    R = rep.rows
    G = (R[2:4].T @ R[2:4]) / (2.0 * sys.m)
    G += (sys.m / 2.0) * (sys.omega1**2 * np.outer(R[0], R[0]) + sys.omega2**2 * np.outer(R[1], R[1]))
    G = (G + G.T) / 2.0

    scale = float(np.max(np.abs(G)))
    forbidden = max(abs(G[0, 1]), abs(G[0, 2]), abs(G[1, 3]), abs(G[2, 3]))
    if forbidden > CROSS_TERM_RTOL * scale:
        raise NonCanonicalForm(
            f"forbidden cross terms of size {forbidden!r} (scale {scale!r})"
        )
    if G[2, 2] <= 0 or G[3, 3] <= 0:
        raise SingularMass(f"non-positive momentum coefficients {G[2, 2]!r}, {G[3, 3]!r}")

    M1 = 1.0 / (2.0 * G[2, 2])
    M2 = 1.0 / (2.0 * G[3, 3])
    return QuadraticForm(
        M1=M1,
        M2=M2,
        Omega1_sq=2.0 * G[0, 0] / M1,
        Omega2_sq=2.0 * G[1, 1] / M2,
        l1=-2.0 * G[0, 3],
        l2=2.0 * G[1, 2],
    )


def symmetric_params(sys: PhysicalSystem) -> QuadraticForm:
    """Closed-form quadratic-form parameters in the symmetric gauge.

    Valid for theta < hbar/(m*omega_c) when omega_c > 0; the square root
    turns imaginary beyond that bound.
    """
    m, h, t, wc = sys.m, sys.hbar, sys.theta, sys.omega_c
    w1, w2 = sys.omega1, sys.omega2
    radicand = h * (h - m * wc * t)
    if radicand < 0:
        raise OutOfDomain(
            f"symmetric gauge requires theta <= hbar/(m*omega_c); got theta = {t!r}"
        )
    root = np.sqrt(radicand)
    if abs(h - m * wc * t) <= 1e-12 * max(h, abs(m * wc * t)):
        raise DegenerateRepresentation("hbar - m*omega_c*theta = 0: representation collapses")

    d1 = 0.5 + (m * t * w2) ** 2 / (4 * h * h) - m * wc * t / (4 * h) + root / (2 * h)
    d2 = 0.5 + (m * t * w1) ** 2 / (4 * h * h) - m * wc * t / (4 * h) + root / (2 * h)
    trapped = wc * wc * h * h / (h + root) ** 2
    return QuadraticForm(
        M1=m / d1,
        M2=m / d2,
        Omega1_sq=d1 * (w1 * w1 + trapped),
        Omega2_sq=d2 * (w2 * w2 + trapped),
        l1=wc / 2 + m * w1 * w1 * t / (2 * h),
        l2=wc / 2 + m * w2 * w2 * t / (2 * h),
    )


def landau_params(sys: PhysicalSystem) -> QuadraticForm:
    """Closed-form quadratic-form parameters in the Landau gauge.

    Defined for all theta >= 0 except the pole theta = hbar/(m*omega_c),
    where M2 diverges together with the representation itself.
    """
    m, h, t, wc = sys.m, sys.hbar, sys.theta, sys.omega_c
    w1, w2 = sys.omega1, sys.omega2
    if abs(h - m * wc * t) <= 1e-12 * max(h, abs(m * wc * t)):
        raise DegenerateRepresentation("hbar - m*omega_c*theta = 0: M2 pole")

    shrink = (h - m * wc * t) / h
    M1 = m / (1.0 + (m * t * w2 / h) ** 2)
    M2 = m / shrink**2
    return QuadraticForm(
        M1=M1,
        M2=M2,
        Omega1_sq=(m / M1) * (w1 * w1 + wc * wc),
        Omega2_sq=(m / M2) * w2 * w2,
        l1=wc - m * wc * wc * t / h,
        l2=m * w2 * w2 * t / h,
    )


def nmp_params(sys: PhysicalSystem, gauge: str) -> QuadraticForm:
    """Tabulated parameter sets of the naive minimal prescription (NMP).

    NMP substitutes Pi = p - A(X, Y) with a vector potential in the
    noncommutative coordinates and Bopp-shifts back to canonical operators.
    Unlike the consistent gauge family, the result depends on the chosen
    potential: ``gauge`` is "symmetric" (A = (-B Y/2, B X/2)) or "landau"
    (A = (-B Y, 0)).

    These are the parameter tables the sweep curves reproduce.  They are not
    the same object as assembling the Bopp-shifted Hamiltonian matrix (see
    nmp_representation): for the Landau potential the tabulated (M2, Omega2_sq)
    pair mirrors the M1 denominator with the trap frequencies swapped, while
    the assembled Hamiltonian keeps a theta-independent y-sector.  Both forms
    are real for all theta >= 0.
    """
    m, h, t, wc = sys.m, sys.hbar, sys.theta, sys.omega_c
    w1, w2 = sys.omega1, sys.omega2
    if gauge == "symmetric":
        d1 = 1.0 + m * wc * t / (2 * h) + (m * t / (2 * h)) ** 2 * (w2 * w2 + wc * wc / 4)
        d2 = 1.0 + m * wc * t / (2 * h) + (m * t / (2 * h)) ** 2 * (w1 * w1 + wc * wc / 4)
        return QuadraticForm(
            M1=m / d1,
            M2=m / d2,
            Omega1_sq=d1 * (w1 * w1 + wc * wc / 4),
            Omega2_sq=d2 * (w2 * w2 + wc * wc / 4),
            l1=0.5 * (wc * (1.0 + m * wc * t / (4 * h)) + m * w1 * w1 * t / h),
            l2=0.5 * (wc * (1.0 + m * wc * t / (4 * h)) + m * w2 * w2 * t / h),
        )
    if gauge == "landau":
        d1 = 1.0 + m * wc * t / h + (m * t / (2 * h)) ** 2 * (w2 * w2 + wc * wc)
        d2 = 1.0 + m * wc * t / h + (m * t / (2 * h)) ** 2 * (w1 * w1 + wc * wc)
        return QuadraticForm(
            M1=m / d1,
            M2=m / d2,
            Omega1_sq=d1 * w1 * w1,
            Omega2_sq=d2 * (w2 * w2 + wc * wc),
            l1=m * w1 * w1 * t / (2 * h),
            l2=wc + m * wc * wc * t / (2 * h) + m * w2 * w2 * t / (2 * h),
        )
    raise ValueError(f"unknown NMP gauge {gauge!r}; expected 'symmetric' or 'landau'")


def nmp_representation(sys: PhysicalSystem, gauge: str) -> RepMatrix:
    """Matrix-level NMP route: Bopp shift plus minimal coupling, as rows.

    X and Y are the Bopp-shifted coordinates; Pi = p - A(X, Y) with the same
    vector potentials as nmp_params.  Feeding the result through assemble()
    yields the literal operator content of the naive prescription, against
    which the tabulated nmp_params can be cross-checked.
    """
    h, t, B = sys.hbar, sys.theta, sys.B
    bopp_x = [1.0, 0.0, 0.0, -t / (2 * h)]
    bopp_y = [0.0, 1.0, t / (2 * h), 0.0]
    if gauge == "symmetric":
        pi_x = [0.0, B / 2, 1.0 + B * t / (4 * h), 0.0]
        pi_y = [-B / 2, 0.0, 0.0, 1.0 + B * t / (4 * h)]
    elif gauge == "landau":
        pi_x = [0.0, B, 1.0 + B * t / (2 * h), 0.0]
        pi_y = [0.0, 0.0, 0.0, 1.0]
    else:
        raise ValueError(f"unknown NMP gauge {gauge!r}; expected 'symmetric' or 'landau'")
    return RepMatrix(np.array([bopp_x, bopp_y, pi_x, pi_y]))
