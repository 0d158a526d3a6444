"""Normal-mode frequencies and energy levels of the canonical quadratic form.

The characteristic polynomial of the classical flow of a QuadraticForm is
biquadratic, lambda^4 + S lambda^2 + P, so the two squared eigenfrequencies
are the roots of  w^4 - S w^2 + P = 0:

    omega_tilde_{1,2}^2 = S/2 +- sqrt(S^2/4 - P).

`invariants` computes (S, P) directly from the six parameters; this is the
convention every other result in the package is validated against (see the
oracle module).  `paper_invariants` keeps the alternative C1/C2 convention
built from the printed ladder coefficients (c, d); the two disagree whenever
the couplings are nonzero and are reconciled exactly by halving (c, d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DynamicallyUnstable, ZeroModeUnsupported
from .hamiltonian import QuadraticForm

#: (S, P) computed from the dynamics; the validated default.
CONVENTION_DYNAMICAL = "dynamical"
#: (C1, C2) built from the printed ladder coefficients, kept for reproduction.
CONVENTION_PAPER_PRINTED = "paper_printed"

# Relative tolerance for deciding stability of (S, P) and discriminant signs.
STABILITY_RTOL = 1e-12

# Levels closer than this (times hbar*omega_tilde_1) count as degenerate.
DEGENERACY_LEVEL_RTOL = 1e-9


@dataclass(frozen=True)
class ModeInvariants:
    """Sum S and product P of the squared normal-mode frequencies."""

    S: float
    P: float
    convention: str = CONVENTION_DYNAMICAL

    def is_stable(self) -> bool:
        scale = max(1.0, self.S * self.S)
        return (
            self.S >= -STABILITY_RTOL * scale
            and self.P >= -STABILITY_RTOL * scale * scale
            and self.S * self.S / 4.0 - self.P >= -STABILITY_RTOL * scale
        )


@dataclass(frozen=True)
class LadderCoefficients:
    """Off-diagonal amplitudes c (pair) and d (exchange) in the ladder basis."""

    c: float
    d: float


@dataclass(frozen=True)
class EigenFrequencies:
    """Normal-mode frequencies, ordered omega_tilde_1 >= omega_tilde_2 >= 0."""

    omega_tilde_1: float
    omega_tilde_2: float

    def __post_init__(self):
        if self.omega_tilde_2 < 0 or self.omega_tilde_1 < self.omega_tilde_2:
            raise ValueError(
                f"frequencies must satisfy omega_tilde_1 >= omega_tilde_2 >= 0, "
                f"got ({self.omega_tilde_1!r}, {self.omega_tilde_2!r})"
            )


@dataclass(frozen=True)
class EnergyLevel:
    n1: int
    n2: int
    E: float


def invariants(qf: QuadraticForm) -> ModeInvariants:
    """Characteristic invariants (S, P) of the quadratic form's classical flow."""
    a, b, k1, k2 = qf.a, qf.b, qf.k1, qf.k2
    l1, l2 = qf.l1, qf.l2
    S = a * k1 + b * k2 + 2.0 * l1 * l2
    P = a * b * k1 * k2 - b * k1 * l2 * l2 - a * k2 * l1 * l1 + (l1 * l2) ** 2
    return ModeInvariants(S=S, P=P)


def ladder_coefficients(qf: QuadraticForm) -> LadderCoefficients:
    """Printed ladder-basis coupling amplitudes.

    Requires both mode weights M_i * Omega_i to be positive.  For l1 < 0 the
    printed convention interchanges c and d while replacing l1 by |l1|.
    """
    w1 = qf.M1 * math.sqrt(qf.Omega1_sq)
    w2 = qf.M2 * math.sqrt(qf.Omega2_sq)
    if w1 <= 0 or w2 <= 0:
        raise ZeroModeUnsupported(
            f"ladder substitution needs M_i*Omega_i > 0, got {w1!r}, {w2!r}"
        )
    ratio = math.sqrt(w2 / w1)
    l1, l2 = abs(qf.l1), qf.l2
    c = l1 * ratio - l2 / ratio
    d = l1 * ratio + l2 / ratio
    if qf.l1 < 0:
        c, d = d, c
    return LadderCoefficients(c=c, d=d)


def paper_invariants(qf: QuadraticForm) -> ModeInvariants:
    """Invariants in the printed C1/C2 convention (hbar prefactors dropped).

    Kept behind this explicit entry point for reproduction only: with nonzero
    couplings it disagrees with `invariants`.  Halving (c, d) restores exact
    agreement, i.e. C1(c/2, d/2) = S and C2(c/2, d/2) = P.
    """
    lc = ladder_coefficients(qf)
    c2, d2 = lc.c * lc.c, lc.d * lc.d
    O1 = math.sqrt(qf.Omega1_sq)
    O2 = math.sqrt(qf.Omega2_sq)
    C1 = qf.Omega1_sq + qf.Omega2_sq - 2.0 * c2 + 2.0 * d2
    C2 = qf.Omega1_sq * qf.Omega2_sq - 2.0 * O1 * O2 * (c2 + d2) + (c2 - d2) ** 2
    return ModeInvariants(S=C1, P=C2, convention=CONVENTION_PAPER_PRINTED)


def eigenfrequencies(inv: ModeInvariants) -> EigenFrequencies:
    """Real normal-mode frequencies from (S, P), descending.

    Raises DynamicallyUnstable when the invariants admit complex frequencies;
    the offending pair rides on the exception.
    """
    if not inv.is_stable():
        raise DynamicallyUnstable(inv.S, inv.P)
    S = max(inv.S, 0.0)
    P = max(inv.P, 0.0)
    disc = math.sqrt(max(S * S / 4.0 - P, 0.0))
    hi = S / 2.0 + disc
    lo = max(S / 2.0 - disc, 0.0)
    return EigenFrequencies(math.sqrt(hi), math.sqrt(lo))


def energy(freqs: EigenFrequencies, hbar: float, n1: int, n2: int) -> EnergyLevel:
    """Energy of the (n1, n2) level of the diagonalized Hamiltonian."""
    if n1 < 0 or n2 < 0:
        raise ValueError("quantum numbers must be nonnegative")
    E = hbar * freqs.omega_tilde_1 * (n1 + 0.5) + hbar * freqs.omega_tilde_2 * (n2 + 0.5)
    return EnergyLevel(n1=n1, n2=n2, E=E)


def enumerate_levels(freqs: EigenFrequencies, hbar: float, count: int) -> list[EnergyLevel]:
    """The `count` lowest levels, ascending, ties broken by (n1, n2).

    A vanishing omega_tilde_2 makes every ladder rung infinitely degenerate,
    so enumeration refuses zero modes.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if freqs.omega_tilde_2 <= 0.0:
        raise ZeroModeUnsupported(
            "omega_tilde_2 = 0: infinite degeneracy, no discrete level ladder"
        )
    grid = count + 1
    levels = [
        energy(freqs, hbar, n1, n2) for n1 in range(grid) for n2 in range(grid)
    ]
    levels.sort(key=lambda lv: (lv.E, lv.n1, lv.n2))
    return levels[:count]


def group_degenerate(levels: list[EnergyLevel], freqs: EigenFrequencies, hbar: float) -> list[list[EnergyLevel]]:
    """Partition an ascending level list into degenerate groups.

    Two consecutive levels belong to one group when their energies differ by
    at most DEGENERACY_LEVEL_RTOL * hbar * omega_tilde_1.
    """
    tol = DEGENERACY_LEVEL_RTOL * hbar * freqs.omega_tilde_1
    groups: list[list[EnergyLevel]] = []
    for lv in levels:
        if groups and abs(lv.E - groups[-1][-1].E) <= tol:
            groups[-1].append(lv)
        else:
            groups.append([lv])
    return groups
