"""FastAPI wrapper around the scenario drivers.

Every endpoint is a pure computation; domain violations come back as typed
statuses in the response body rather than transport-level failures, so a
client can always distinguish "your parameters are outside the validity
domain" from "the request was malformed" (HTTP 422).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import workflows
from ..errors import NCLandauError
from . import models

app = FastAPI(
    title="nclandau",
    description=(
        "Gauge-invariant spectra for a charged particle on a noncommutative "
        "plane in a magnetic field with an anisotropic harmonic trap"
    ),
)


def _scenario(model: models.ScenarioModel) -> workflows.Scenario:
    try:
        return workflows.Scenario(**model.model_dump())
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/spectrum", response_model=models.SpectrumResponse)
def spectrum(req: models.SpectrumRequest) -> models.SpectrumResponse:
    scenario = _scenario(req.scenario)
    result = workflows.spectrum_run(
        scenario, levels=req.levels, paper_convention=req.paper_convention
    )
    if result.status != workflows.STATUS_OK:
        return models.SpectrumResponse(
            status=result.status,
            message=result.message,
            gauge=result.gauge,
            prescription=result.prescription,
        )
    levels = [
        models.LevelModel(n1=lv.n1, n2=lv.n2, E=lv.E, degeneracy=deg)
        for lv, deg in zip(result.levels, result.degeneracies)
    ]
    return models.SpectrumResponse(
        status="ok",
        message=result.message,
        gauge=result.gauge,
        prescription=result.prescription,
        convention=result.convention,
        omega_tilde_1=result.frequencies.omega_tilde_1,
        omega_tilde_2=result.frequencies.omega_tilde_2,
        S=result.invariants.S,
        P=result.invariants.P,
        E00=result.ground_energy,
        zero_mode=result.zero_mode,
        levels=levels,
    )


@app.post("/sweep", response_model=models.SweepResponse)
def sweep(req: models.SweepRequest) -> models.SweepResponse:
    scenario = _scenario(req.scenario)
    try:
        records = workflows.sweep_run(
            scenario,
            theta_from=req.theta_from,
            theta_to=req.theta_to,
            steps=req.steps,
            gauges=tuple(req.gauges),
            prescriptions=tuple(req.prescriptions),
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    rows = [models.SweepRecordModel(**rec.__dict__) for rec in records]
    ok_rows = sum(1 for r in rows if r.status == "ok")
    return models.SweepResponse(records=rows, ok_rows=ok_rows, total_rows=len(rows))


@app.post("/audit", response_model=models.AuditResponse)
def audit(req: models.AuditRequest) -> models.AuditResponse:
    scenario = _scenario(req.scenario)
    try:
        result = workflows.audit_run(scenario, samples=req.samples, seed=req.seed)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except NCLandauError as exc:
        raise HTTPException(status_code=422, detail=f"audit scenario invalid: {exc}") from exc
    return models.AuditResponse(**result.__dict__)


@app.post("/oracle", response_model=models.OracleResponse)
def oracle_check(req: models.OracleRequest) -> models.OracleResponse:
    scenario = _scenario(req.scenario)
    result = workflows.oracle_run(
        scenario, nmax=req.nmax, tol=req.tol, paper_convention=req.paper_convention
    )
    if result.status != workflows.STATUS_OK:
        return models.OracleResponse(
            status=result.status,
            ok=False,
            message=result.message,
            gauge=result.gauge,
            prescription=result.prescription,
            convention=result.convention,
        )
    rep = result.report
    return models.OracleResponse(
        status="ok",
        ok=result.ok,
        gauge=result.gauge,
        prescription=result.prescription,
        convention=result.convention,
        mode=rep.mode,
        n_max=rep.n_max,
        converged=rep.converged,
        within_tol=rep.within_tol,
        tol=rep.tol,
        max_rel_deviation=rep.max_rel_dev,
        invariant_deviation=rep.invariant_dev,
        analytic=list(rep.analytic),
        oracle=list(rep.oracle),
        S_closed=rep.invariants_closed.S,
        P_closed=rep.invariants_closed.P,
        S_dynamical=rep.invariants_dynamical.S,
        P_dynamical=rep.invariants_dynamical.P,
    )
