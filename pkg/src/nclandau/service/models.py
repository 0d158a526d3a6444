"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Gauge = Literal["landau", "symmetric", "rs"]
PrescriptionName = Literal["group", "nmp"]
Status = Literal["ok", "out_of_domain", "degenerate", "unstable"]


class ScenarioModel(BaseModel):
    """Physical parameters plus prescription selection; unknown keys rejected."""

    model_config = ConfigDict(extra="forbid")

    hbar: float = 1.0
    m: float = 1.0
    omega1: float = 1.0
    omega2: float = 1.0
    omega_c: float = 1.0
    theta: float = 0.0
    prescription: PrescriptionName = "group"
    gauge: Gauge = "landau"
    r: Optional[float] = None
    s: Optional[float] = None


class LevelModel(BaseModel):
    n1: int
    n2: int
    E: float
    degeneracy: int = 1


class SpectrumRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioModel = ScenarioModel()
    levels: int = Field(default=8, ge=1)
    paper_convention: bool = False


class SpectrumResponse(BaseModel):
    status: Status
    message: str = ""
    gauge: str
    prescription: str
    convention: str = "dynamical"
    omega_tilde_1: Optional[float] = None
    omega_tilde_2: Optional[float] = None
    S: Optional[float] = None
    P: Optional[float] = None
    E00: Optional[float] = None
    zero_mode: bool = False
    levels: list[LevelModel] = []


class SweepRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioModel = ScenarioModel()
    theta_from: float = 0.0
    theta_to: float = 1.0
    steps: int = Field(default=64, ge=2)
    gauges: list[Gauge] = ["landau"]
    prescriptions: list[PrescriptionName] = ["group"]


class SweepRecordModel(BaseModel):
    theta: float
    gauge: str
    prescription: str
    omega_tilde_1: Optional[float] = None
    omega_tilde_2: Optional[float] = None
    S: Optional[float] = None
    P: Optional[float] = None
    E00: Optional[float] = None
    status: Status


class SweepResponse(BaseModel):
    records: list[SweepRecordModel]
    ok_rows: int
    total_rows: int


class AuditRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioModel = ScenarioModel()
    samples: int = Field(default=100, ge=1)
    seed: int = 0


class AuditResponse(BaseModel):
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
    invariant_tol: float
    commutator_tol: float


class OracleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioModel = ScenarioModel()
    nmax: int = Field(default=32, ge=2)
    tol: float = Field(default=1e-6, gt=0)
    paper_convention: bool = False


class OracleResponse(BaseModel):
    status: Status
    ok: bool
    message: str = ""
    gauge: str = ""
    prescription: str = ""
    convention: str = "dynamical"
    mode: str = ""
    n_max: int = 0
    converged: bool = False
    within_tol: bool = False
    tol: float = 0.0
    max_rel_deviation: float = 0.0
    invariant_deviation: float = 0.0
    analytic: list[float] = []
    oracle: list[float] = []
    S_closed: Optional[float] = None
    P_closed: Optional[float] = None
    S_dynamical: Optional[float] = None
    P_dynamical: Optional[float] = None
