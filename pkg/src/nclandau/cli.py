"""Command-line front end; a thin client of the HTTP service.

Subcommands: spectrum, sweep, audit, oracle, serve.  By default requests are
routed through the in-process ASGI app, so no server needs to be running;
--server redirects them to a live instance.

Exit codes: 0 ok, 1 usage/config error, 2 domain error, 3 audit failure,
4 oracle disagreement.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

from .workflows import CSV_HEADER, format_number

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_AUDIT = 3
EXIT_ORACLE = 4

CONFIG_KEYS = {"hbar", "m", "omega1", "omega2", "omega_c", "theta", "prescription", "r", "s"}
SCENARIO_FLAGS = ("hbar", "m", "omega1", "omega2", "omega_c", "theta")


class _Parser(argparse.ArgumentParser):
    """argparse terminates with code 2 on bad usage; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_scenario_flags(p: argparse.ArgumentParser, multi_gauge: bool = False):
    p.add_argument("--config", type=Path, help="JSON scenario file")
    for name in SCENARIO_FLAGS:
        p.add_argument(f"--{name.replace('_', '-')}", type=float, dest=name)
    if multi_gauge:
        p.add_argument(
            "--gauge", action="append", choices=["landau", "symmetric", "rs"], dest="gauges"
        )
        p.add_argument(
            "--prescription", action="append", choices=["group", "nmp"], dest="prescriptions"
        )
    else:
        p.add_argument("--gauge", choices=["landau", "symmetric", "rs"])
        p.add_argument("--prescription", choices=["group", "nmp"])
    p.add_argument("--r", type=float)
    p.add_argument("--s", type=float)
    p.add_argument("--server", help="base URL of a running service (default: in-process)")


def build_parser() -> _Parser:
    parser = _Parser(prog="nclandau", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="eigenfrequencies, invariants and lowest levels")
    _add_scenario_flags(p)
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--paper-convention", action="store_true")

    p = sub.add_parser("sweep", help="theta sweep to CSV, one row per (theta, gauge, prescription)")
    _add_scenario_flags(p, multi_gauge=True)
    p.add_argument("--from", type=float, dest="theta_from", default=0.0)
    p.add_argument("--to", type=float, dest="theta_to", default=1.0)
    p.add_argument("--steps", type=int, default=64)
    p.add_argument("--out", type=Path, default=Path("sweep.csv"))

    p = sub.add_parser("audit", help="gauge-invariance audit over random (r, s) pairs")
    _add_scenario_flags(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("oracle", help="cross-check analytic spectra against numerical oracles")
    _add_scenario_flags(p)
    p.add_argument("--nmax", type=int, default=32)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--paper-convention", action="store_true")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _load_config(path: Path | None) -> dict:
    if path is None:
        return {}
    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if not isinstance(raw, dict):
        print(f"error: config {path} must hold a JSON object", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    unknown = set(raw) - CONFIG_KEYS
    if unknown:
        print(f"error: unknown config keys: {sorted(unknown)}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return raw


def _scenario_payload(args, gauge: str | None = None) -> dict:
    payload = _load_config(args.config)
    for name in SCENARIO_FLAGS:
        value = getattr(args, name)
        if value is not None:
            payload[name] = value
    for name in ("r", "s"):
        value = getattr(args, name)
        if value is not None:
            payload[name] = value
    prescription = getattr(args, "prescription", None)
    if prescription is not None:
        payload["prescription"] = prescription
    if gauge is not None:
        payload["gauge"] = gauge
    return payload


async def _post_in_process(path: str, payload: dict) -> httpx.Response:
    from .service.app import app

    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://nclandau") as client:
        return await client.post(path, json=payload)


def _post(args, path: str, payload: dict) -> dict:
    server = getattr(args, "server", None)
    try:
        if server:
            with httpx.Client(base_url=server, timeout=120.0) as client:
                resp = client.post(path, json=payload)
        else:
            resp = asyncio.run(_post_in_process(path, payload))
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if resp.status_code == 422:
        detail = resp.json().get("detail", resp.text)
        print(f"error: invalid request: {detail}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    resp.raise_for_status()
    return resp.json()


def cmd_spectrum(args) -> int:
    gauge = args.gauge or "landau"
    body = {
        "scenario": _scenario_payload(args, gauge),
        "levels": args.levels,
        "paper_convention": args.paper_convention,
    }
    data = _post(args, "/spectrum", body)
    if data["status"] != "ok":
        print(f"domain error ({data['status']}): {data['message']}", file=sys.stderr)
        return EXIT_DOMAIN
    print(f"gauge={data['gauge']} prescription={data['prescription']} convention={data['convention']}")
    print(f"omega_tilde_1 = {format_number(data['omega_tilde_1'])}")
    print(f"omega_tilde_2 = {format_number(data['omega_tilde_2'])}")
    print(f"S = {format_number(data['S'])}")
    print(f"P = {format_number(data['P'])}")
    print(f"E00 = {format_number(data['E00'])}")
    if data["zero_mode"]:
        print(f"levels: refused ({data['message']})")
    else:
        print("levels:")
        for lv in data["levels"]:
            tag = f"  (n1={lv['n1']}, n2={lv['n2']})  E = {format_number(lv['E'])}"
            if lv["degeneracy"] > 1:
                tag += f"  [degeneracy {lv['degeneracy']}]"
            print(tag)
    return EXIT_OK


def cmd_sweep(args) -> int:
    gauges = args.gauges or ["landau"]
    prescriptions = args.prescriptions or ["group"]
    body = {
        "scenario": _scenario_payload(args, gauges[0]),
        "theta_from": args.theta_from,
        "theta_to": args.theta_to,
        "steps": args.steps,
        "gauges": gauges,
        "prescriptions": prescriptions,
    }
    data = _post(args, "/sweep", body)
    lines = [CSV_HEADER]
    for rec in data["records"]:
        numeric = [rec[k] for k in ("omega_tilde_1", "omega_tilde_2", "S", "P", "E00")]
        cells = [format_number(rec["theta"]), rec["gauge"], rec["prescription"]]
        cells += [format_number(x) if x is not None else "" for x in numeric]
        cells.append(rec["status"])
        lines.append(",".join(cells))
    args.out.write_text("\n".join(lines) + "\n")
    summary = {
        "out": str(args.out),
        "rows": data["total_rows"],
        "ok_rows": data["ok_rows"],
        "theta_from": args.theta_from,
        "theta_to": args.theta_to,
        "steps": args.steps,
        "gauges": gauges,
        "prescriptions": prescriptions,
    }
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK if data["ok_rows"] > 0 else EXIT_DOMAIN


def cmd_audit(args) -> int:
    gauge = args.gauge or "landau"
    body = {
        "scenario": _scenario_payload(args, gauge),
        "samples": args.samples,
        "seed": args.seed,
    }
    data = _post(args, "/audit", body)
    print(
        f"audit: samples={data['samples']} seed={data['seed']} "
        f"max|dS|={format_number(data['max_delta_S'])} "
        f"max|dP|={format_number(data['max_delta_P'])} "
        f"max|dC|={format_number(data['max_commutator_dev'])}"
    )
    if not data["passed"]:
        print(
            f"audit FAILED at (r={format_number(data['worst_r'])}, "
            f"s={format_number(data['worst_s'])})",
            file=sys.stderr,
        )
        return EXIT_AUDIT
    print("audit passed: spectra independent of the gauge parameters")
    return EXIT_OK


def cmd_oracle(args) -> int:
    gauge = args.gauge or "landau"
    body = {
        "scenario": _scenario_payload(args, gauge),
        "nmax": args.nmax,
        "tol": args.tol,
        "paper_convention": args.paper_convention,
    }
    data = _post(args, "/oracle", body)
    if data["status"] != "ok":
        print(f"domain error ({data['status']}): {data['message']}", file=sys.stderr)
        return EXIT_DOMAIN
    print(
        f"oracle[{data['mode']}] gauge={data['gauge']} prescription={data['prescription']} "
        f"convention={data['convention']} n_max={data['n_max']} converged={data['converged']}"
    )
    kind = "level" if data["mode"] == "fock" else "frequency"
    for ana, orc in zip(data["analytic"], data["oracle"]):
        print(f"  analytic {kind} {format_number(ana)}  oracle {format_number(orc)}")
    print(f"max relative deviation = {format_number(data['max_rel_deviation'])} (tol {format_number(data['tol'])})")
    print(f"invariant deviation (closed vs dynamical) = {format_number(data['invariant_deviation'])}")
    if not data["ok"]:
        print(
            f"ORACLE DISAGREEMENT: analytic={data['analytic']} vs oracle={data['oracle']}",
            file=sys.stderr,
        )
        return EXIT_ORACLE
    print("oracle check passed")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "spectrum": cmd_spectrum,
        "sweep": cmd_sweep,
        "audit": cmd_audit,
        "oracle": cmd_oracle,
        "serve": cmd_serve,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
