"""Scenario-level drivers: spectrum, theta sweeps, gauge audits, oracle checks.

This layer turns a Scenario (physical parameters plus a prescription/gauge
selection) into results that the HTTP service and the CLI both consume.  All
functions are pure; sweep rows are emitted in deterministic input order.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from . import hamiltonian, oracle, representations, spectra
from .errors import (
    DegenerateRepresentation,
    DynamicallyUnstable,
    InadmissibleGauge,
    NCLandauError,
    OutOfDomain,
    ZeroModeUnsupported,
)
from .hamiltonian import PhysicalSystem, QuadraticForm
from .representations import GaugePair
from .spectra import EigenFrequencies, EnergyLevel, ModeInvariants

STATUS_OK = "ok"
STATUS_OUT_OF_DOMAIN = "out_of_domain"
STATUS_DEGENERATE = "degenerate"
STATUS_UNSTABLE = "unstable"

GAUGES = ("landau", "symmetric", "rs")
PRESCRIPTIONS = ("group", "nmp")

AUDIT_INVARIANT_TOL = 1e-10
AUDIT_COMMUTATOR_TOL = 1e-12
# Samples with |hbar - B*theta*r| below this fraction of the coefficient
# scale are redrawn: closer to the pole the representation entries grow like
# the reciprocal and round-off in the assembled invariants would exceed the
# audit tolerance even though the algebra is exact.
AUDIT_POLE_BAND = 0.2


@dataclass(frozen=True)
class Scenario:
    """One spectral computation: physical inputs plus prescription selection."""

    hbar: float = 1.0
    m: float = 1.0
    omega1: float = 1.0
    omega2: float = 1.0
    omega_c: float = 1.0
    theta: float = 0.0
    prescription: str = "group"
    gauge: str = "landau"
    r: float | None = None
    s: float | None = None

    def __post_init__(self):
        if self.prescription not in PRESCRIPTIONS:
            raise ValueError(f"unknown prescription {self.prescription!r}")
        if self.gauge not in GAUGES:
            raise ValueError(f"unknown gauge {self.gauge!r}")
        if self.gauge == "rs":
            if self.prescription == "nmp":
                raise ValueError("the naive minimal prescription has no (r, s) family")
            if self.r is None or self.s is None:
                raise ValueError("gauge 'rs' requires explicit r and s")

    def system(self) -> PhysicalSystem:
        return PhysicalSystem(
            m=self.m,
            omega1=self.omega1,
            omega2=self.omega2,
            omega_c=self.omega_c,
            hbar=self.hbar,
            theta=self.theta,
        )


def gauge_label(scenario: Scenario) -> str:
    if scenario.gauge == "rs":
        return f"rs(r={scenario.r:g},s={scenario.s:g})"
    return scenario.gauge


def resolve_form(scenario: Scenario) -> QuadraticForm:
    """Quadratic form for the scenario's prescription and gauge.

    Domain violations propagate as the package's exception types.
    """
    sys = scenario.system()
    if scenario.prescription == "nmp":
        return hamiltonian.nmp_params(sys, scenario.gauge)
    if scenario.gauge == "landau":
        return hamiltonian.landau_params(sys)
    if scenario.gauge == "symmetric":
        return hamiltonian.symmetric_params(sys)
    nc = sys.nc_parameters()
    rep = representations.make_representation(nc, GaugePair(scenario.r, scenario.s))
    return hamiltonian.assemble(sys, rep)


def status_of(exc: NCLandauError) -> str:
    if isinstance(exc, DegenerateRepresentation):
        return STATUS_DEGENERATE
    if isinstance(exc, DynamicallyUnstable):
        return STATUS_UNSTABLE
    if isinstance(exc, (OutOfDomain, InadmissibleGauge, ZeroModeUnsupported)):
        return STATUS_OUT_OF_DOMAIN
    return STATUS_OUT_OF_DOMAIN


@dataclass(frozen=True)
class SpectrumResult:
    status: str
    gauge: str
    prescription: str
    message: str = ""
    convention: str = spectra.CONVENTION_DYNAMICAL
    frequencies: EigenFrequencies | None = None
    invariants: ModeInvariants | None = None
    ground_energy: float | None = None
    zero_mode: bool = False
    levels: tuple[EnergyLevel, ...] = ()
    degeneracies: tuple[int, ...] = ()


def spectrum_run(
    scenario: Scenario, levels: int = 8, paper_convention: bool = False
) -> SpectrumResult:
    """Frequencies, invariants and the lowest `levels` energies for a scenario."""
    label = gauge_label(scenario)
    try:
        qf = resolve_form(scenario)
        inv = spectra.paper_invariants(qf) if paper_convention else spectra.invariants(qf)
        freqs = spectra.eigenfrequencies(inv)
    except NCLandauError as exc:
        return SpectrumResult(
            status=status_of(exc),
            gauge=label,
            prescription=scenario.prescription,
            message=str(exc),
        )
    e00 = scenario.hbar * (freqs.omega_tilde_1 + freqs.omega_tilde_2) / 2.0
    if freqs.omega_tilde_2 <= 0.0:
        return SpectrumResult(
            status=STATUS_OK,
            gauge=label,
            prescription=scenario.prescription,
            convention=inv.convention,
            frequencies=freqs,
            invariants=inv,
            ground_energy=e00,
            zero_mode=True,
            message="zero mode: each ladder rung is infinitely degenerate",
        )
    level_list = spectra.enumerate_levels(freqs, scenario.hbar, levels)
    groups = spectra.group_degenerate(level_list, freqs, scenario.hbar)
    degs = tuple(len(g) for g in groups for _ in g)
    return SpectrumResult(
        status=STATUS_OK,
        gauge=label,
        prescription=scenario.prescription,
        convention=inv.convention,
        frequencies=freqs,
        invariants=inv,
        ground_energy=e00,
        levels=tuple(level_list),
        degeneracies=degs,
    )


@dataclass(frozen=True)
class SweepRecord:
    theta: float
    gauge: str
    prescription: str
    omega_tilde_1: float | None
    omega_tilde_2: float | None
    S: float | None
    P: float | None
    E00: float | None
    status: str


def sweep_run(
    base: Scenario,
    theta_from: float,
    theta_to: float,
    steps: int,
    gauges: tuple[str, ...],
    prescriptions: tuple[str, ...],
) -> list[SweepRecord]:
    """One record per (theta, gauge, prescription) over a uniform theta grid.

    Rows outside a prescription's domain carry a status flag instead of
    truncating the grid, so all curves share the same x axis.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if theta_from >= theta_to:
        raise ValueError("sweep requires theta_from < theta_to")
    records = []
    for theta in np.linspace(theta_from, theta_to, steps):
        for gauge in gauges:
            for prescription in prescriptions:
                scenario = dataclasses.replace(
                    base, theta=float(theta), gauge=gauge, prescription=prescription
                )
                label = gauge_label(scenario)
                try:
                    qf = resolve_form(scenario)
                    inv = spectra.invariants(qf)
                    freqs = spectra.eigenfrequencies(inv)
                except NCLandauError as exc:
                    records.append(
                        SweepRecord(
                            theta=float(theta),
                            gauge=label,
                            prescription=prescription,
                            omega_tilde_1=None,
                            omega_tilde_2=None,
                            S=None,
                            P=None,
                            E00=None,
                            status=status_of(exc),
                        )
                    )
                    continue
                records.append(
                    SweepRecord(
                        theta=float(theta),
                        gauge=label,
                        prescription=prescription,
                        omega_tilde_1=freqs.omega_tilde_1,
                        omega_tilde_2=freqs.omega_tilde_2,
                        S=inv.S,
                        P=inv.P,
                        E00=base.hbar * (freqs.omega_tilde_1 + freqs.omega_tilde_2) / 2.0,
                        status=STATUS_OK,
                    )
                )
    return records


CSV_HEADER = "theta,gauge,prescription,omega_tilde_1,omega_tilde_2,S,P,E00,status"


def format_number(x: float) -> str:
    """Fixed 17-significant-digit rendering; byte-stable for equal floats."""
    return format(float(x), ".17g")


def sweep_csv(records: list[SweepRecord]) -> str:
    lines = [CSV_HEADER]
    for rec in records:
        numeric = [rec.omega_tilde_1, rec.omega_tilde_2, rec.S, rec.P, rec.E00]
        cells = [format_number(rec.theta), rec.gauge, rec.prescription]
        cells += [format_number(x) if x is not None else "" for x in numeric]
        cells.append(rec.status)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AuditResult:
    passed: bool
    samples: int
    seed: int
    max_delta_S: float
    max_delta_P: float
    max_commutator_dev: float
    worst_r: float
    worst_s: float
    reference_S: float
    reference_P: float
    invariant_tol: float = AUDIT_INVARIANT_TOL
    commutator_tol: float = AUDIT_COMMUTATOR_TOL


def audit_run(scenario: Scenario, samples: int, seed: int) -> AuditResult:
    """Check gauge independence of (S, P) over seeded random gauge pairs.

    Draws `samples` admissible pairs (r, s uniform in [-2, 2], r redrawn
    inside the pole band), always including the Landau and, when defined,
    the symmetric gauge.  Every representation must reproduce the target
    commutator table and the Landau-gauge invariants.

    The naive minimal prescription has no gauge family to audit; scenarios
    selecting it are rejected with ValueError.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if scenario.prescription != "group":
        raise ValueError(
            "audit applies to the group-theoretic prescription only: "
            "the naive minimal prescription has no (r, s) gauge family"
        )
    sys = scenario.system()
    nc = sys.nc_parameters()
    reference = spectra.invariants(hamiltonian.landau_params(sys))
    target = representations.target_commutators(nc)
    comm_scale = max(1.0, float(np.max(np.abs(target))))

    pairs = [representations.landau_gauge()]
    try:
        pairs.append(representations.symmetric_gauge(nc))
    except OutOfDomain:
        pass
    rng = np.random.default_rng(seed)
    bt = nc.B * nc.theta
    while len(pairs) < samples:
        r = rng.uniform(-2.0, 2.0)
        s = rng.uniform(-2.0, 2.0)
        if bt != 0.0 and abs(nc.hbar - bt * r) < AUDIT_POLE_BAND * max(nc.hbar, abs(bt * r)):
            continue
        pairs.append(GaugePair(r, s))
    pairs = pairs[:samples]

    max_dS = max_dP = max_comm = 0.0
    worst = pairs[0]
    for pair in pairs:
        rep = representations.make_representation(nc, pair)
        comm = representations.commutator_table(rep)
        comm_dev = float(np.max(np.abs(comm.entries - target)))
        inv = spectra.invariants(hamiltonian.assemble(sys, rep))
        dS = abs(inv.S - reference.S)
        dP = abs(inv.P - reference.P)
        if max(dS, dP) >= max(max_dS, max_dP):
            worst = pair
        max_dS = max(max_dS, dS)
        max_dP = max(max_dP, dP)
        max_comm = max(max_comm, comm_dev)

    passed = (
        max_dS <= AUDIT_INVARIANT_TOL
        and max_dP <= AUDIT_INVARIANT_TOL
        and max_comm <= AUDIT_COMMUTATOR_TOL * comm_scale
    )
    return AuditResult(
        passed=passed,
        samples=samples,
        seed=seed,
        max_delta_S=max_dS,
        max_delta_P=max_dP,
        max_commutator_dev=max_comm,
        worst_r=worst.r,
        worst_s=worst.s,
        reference_S=reference.S,
        reference_P=reference.P,
    )


@dataclass(frozen=True)
class OracleRunResult:
    status: str
    gauge: str
    prescription: str
    convention: str
    message: str = ""
    report: oracle.OracleReport | None = None

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK and self.report is not None and self.report.ok


def _schedule(n_cap: int) -> tuple[int, ...]:
    ns = [min(8, n_cap)]
    while ns[-1] * 2 <= n_cap:
        ns.append(ns[-1] * 2)
    return tuple(ns)


def oracle_run(
    scenario: Scenario,
    nmax: int = 32,
    tol: float = 1e-6,
    paper_convention: bool = False,
    n_levels: int = 6,
) -> OracleRunResult:
    """Cross-check the scenario's analytic spectrum against both oracles.

    With paper_convention the analytic side uses the printed C1/C2 route,
    which deliberately exposes its disagreement with the dynamics whenever
    the couplings are nonzero.
    """
    label = gauge_label(scenario)
    convention = (
        spectra.CONVENTION_PAPER_PRINTED if paper_convention else spectra.CONVENTION_DYNAMICAL
    )
    try:
        qf = resolve_form(scenario)
        inv = spectra.paper_invariants(qf) if paper_convention else spectra.invariants(qf)
        freqs = spectra.eigenfrequencies(inv)
        report = oracle.compare(
            freqs, qf, scenario.hbar, tol=tol, schedule=_schedule(nmax), n_levels=n_levels
        )
    except NCLandauError as exc:
        return OracleRunResult(
            status=status_of(exc),
            gauge=label,
            prescription=scenario.prescription,
            convention=convention,
            message=str(exc),
        )
    return OracleRunResult(
        status=STATUS_OK,
        gauge=label,
        prescription=scenario.prescription,
        convention=convention,
        report=report,
    )
