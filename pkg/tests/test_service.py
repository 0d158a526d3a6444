"""Tests for the HTTP service endpoints (exercised over the ASGI stack)."""

import asyncio
import math

import httpx
import pytest

from nclandau.service.app import app


def post(path: str, payload: dict) -> httpx.Response:
    async def _run():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://test") as client:
            return await client.post(path, json=payload)

    return asyncio.run(_run())


def get(path: str) -> httpx.Response:
    async def _run():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://test") as client:
            return await client.get(path)

    return asyncio.run(_run())


def test_health():
    resp = get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


class TestSpectrumEndpoint:
    def test_default_scenario(self):
        resp = post("/spectrum", {})
        assert resp.status_code == 200
        data = resp.json()
        assert data["status"] == "ok"
        assert data["omega_tilde_1"] == pytest.approx((1 + math.sqrt(5)) / 2, rel=1e-12)
        assert data["levels"][0]["n1"] == 0 and data["levels"][0]["n2"] == 0

    def test_unknown_scenario_key_rejected(self):
        resp = post("/spectrum", {"scenario": {"thetaa": 0.1}})
        assert resp.status_code == 422

    def test_domain_error_as_status(self):
        resp = post("/spectrum", {"scenario": {"gauge": "symmetric", "theta": 1.2}})
        assert resp.status_code == 200
        assert resp.json()["status"] == "out_of_domain"

    def test_zero_mode(self):
        resp = post("/spectrum", {"scenario": {"omega1": 0.0, "omega2": 0.0, "theta": 0.3}})
        data = resp.json()
        assert data["zero_mode"] is True
        assert data["levels"] == []
        assert data["omega_tilde_1"] == pytest.approx(1.0, abs=1e-12)

    def test_paper_convention_flag(self):
        resp = post(
            "/spectrum",
            {
                "scenario": {"gauge": "symmetric", "omega1": 0.0, "omega2": 0.0},
                "paper_convention": True,
            },
        )
        data = resp.json()
        assert data["convention"] == "paper_printed"
        assert data["omega_tilde_1"] == pytest.approx(1.5, rel=1e-12)

    def test_rs_requires_pair(self):
        resp = post("/spectrum", {"scenario": {"gauge": "rs"}})
        assert resp.status_code == 422


class TestSweepEndpoint:
    def test_fig2_style_rows(self):
        resp = post(
            "/sweep",
            {
                "scenario": {"omega1": 1.5, "omega2": 1.0},
                "theta_from": 0.0,
                "theta_to": 0.9,
                "steps": 4,
                "gauges": ["landau", "symmetric"],
                "prescriptions": ["group"],
            },
        )
        data = resp.json()
        assert data["total_rows"] == 8
        assert data["ok_rows"] == 8
        first = data["records"][0]
        assert first["theta"] == 0.0 and first["gauge"] == "landau"

    def test_invalid_grid(self):
        resp = post("/sweep", {"theta_from": 1.0, "theta_to": 0.0, "steps": 4})
        assert resp.status_code == 422


class TestAuditEndpoint:
    def test_passes(self):
        resp = post("/audit", {"scenario": {"theta": 0.3}, "samples": 50, "seed": 9})
        data = resp.json()
        assert data["passed"] is True
        assert data["max_delta_S"] <= 1e-10

    def test_nmp_rejected(self):
        resp = post("/audit", {"scenario": {"prescription": "nmp"}})
        assert resp.status_code == 422

    def test_degenerate_scenario_rejected(self):
        resp = post("/audit", {"scenario": {"theta": 1.0}})
        assert resp.status_code == 422


class TestOracleEndpoint:
    def test_agreement(self):
        resp = post("/oracle", {"scenario": {"theta": 0.5}})
        data = resp.json()
        assert data["ok"] is True
        assert data["mode"] == "fock"
        assert data["max_rel_deviation"] <= 1e-6

    def test_paper_convention_mismatch(self):
        resp = post(
            "/oracle",
            {
                "scenario": {"gauge": "symmetric", "omega1": 0.0, "omega2": 0.0, "theta": 0.0},
                "paper_convention": True,
            },
        )
        data = resp.json()
        assert data["status"] == "ok"
        assert data["ok"] is False
        assert data["analytic"] == pytest.approx([1.5, 0.5])
        assert data["oracle"] == pytest.approx([1.0, 0.0])
