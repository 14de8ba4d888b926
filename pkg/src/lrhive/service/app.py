"""HTTP front end wrapping the core library.

Every endpoint is a stateless wrapper over pure library calls; malformed
inputs surface as 422 responses with the library's error message.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import usystem as us
from ..crystal import commutor_hk, schutzenberger
from ..hive import hive_from_tableau, hive_violation, tableau_from_hive
from ..hive_commuter import sigma, sigma_bar
from ..lrcalc import coefficient, enumerate_lr, symmetry_check
from ..render import render_ascii, render_svg
from ..serialize import (
    hive_from_json,
    hive_to_json,
    tableau_from_json,
    tableau_to_json,
)
from ..tab_commuter import rho, rho_inverse
from ..verify import run_suite
from . import models

app = FastAPI(title="lrhive", description="Littlewood-Richardson calculator service")


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/coeff", response_model=models.CoeffResponse)
def coeff(req: models.CoeffQuery) -> models.CoeffResponse:
    try:
        n = req.n or max(len(req.lam), len(req.mu), len(req.nu), 1)
        value = coefficient(req.lam, req.mu, req.nu, n, req.mode)
    except ValueError as exc:
        raise _bad_request(exc)
    return models.CoeffResponse(coefficient=value, mode=req.mode, n=n)


@app.post("/enumerate", response_model=models.EnumerateResponse)
def enumerate_(req: models.EnumerateRequest) -> models.EnumerateResponse:
    try:
        tabs = enumerate_lr(req.lam, req.mu, req.nu, req.n)
    except ValueError as exc:
        raise _bad_request(exc)
    return models.EnumerateResponse(count=len(tabs), tableaux=[tableau_to_json(t) for t in tabs])


@app.post("/apply", response_model=models.ApplyResponse)
def apply_map(req: models.ApplyRequest) -> models.ApplyResponse:
    try:
        if req.map in ("rho", "rho-inv", "xi", "commutor"):
            t = tableau_from_json(req.object)
            n = req.n or max(t.n_rows, t.max_letter(), 1)
            if req.map == "rho":
                if req.trace:
                    result, tr = rho(t, n, trace=True)
                    trace = [
                        {
                            "r": step.r,
                            "terminating_rows": list(step.terminating_rows),
                            "inner_after": list(step.inner_after),
                            "paths": [[list(c) for c in p] for p in step.paths],
                        }
                        for step in tr.steps
                    ]
                    return models.ApplyResponse(result=tableau_to_json(result), trace=trace)
                result = rho(t, n)
            elif req.map == "rho-inv":
                result = rho_inverse(t, n)
            elif req.map == "xi":
                result = schutzenberger(t, n)
            else:
                result = commutor_hk(t, n)
            return models.ApplyResponse(result=tableau_to_json(result))
        h = hive_from_json(req.object)
        if req.map == "sigma":
            if req.trace:
                k, tr = sigma(h, trace=True)
                trace = [
                    [
                        {
                            "r": n_diag,
                            "op": p.kind,
                            "path_edges": [[e, d] for e, d in p.edges],
                            "terminating_level": p.terminating_level,
                        }
                        for p in step
                    ]
                    for n_diag, step in zip(range(h.n, 0, -1), tr.paths)
                ]
                return models.ApplyResponse(result=hive_to_json(k), trace=trace)
            return models.ApplyResponse(result=hive_to_json(sigma(h)))
        return models.ApplyResponse(result=hive_to_json(sigma_bar(h)))
    except ValueError as exc:
        raise _bad_request(exc)


@app.post("/convert", response_model=models.ConvertResponse)
def convert(req: models.ConvertRequest) -> models.ConvertResponse:
    try:
        if req.direction == "tableau-to-hive":
            t = tableau_from_json(req.object)
            n = req.n or max(t.n_rows, t.max_letter(), 1)
            return models.ConvertResponse(result=hive_to_json(hive_from_tableau(t, n)))
        h = hive_from_json(req.object)
        return models.ConvertResponse(result=tableau_to_json(tableau_from_hive(h)))
    except ValueError as exc:
        raise _bad_request(exc)


@app.post("/usystem", response_model=models.USystemResponse)
def usystem_op(req: models.USystemRequest) -> models.USystemResponse:
    try:
        s = us.from_literal(req.u, req.n)
        if req.op == "sigma":
            return models.USystemResponse(op="sigma", u=us.to_literal(us.sigma_u(s)))
        if req.op == "dress":
            return models.USystemResponse(
                op="dress", hive=hive_to_json(us.canonical_dressing(s))
            )
        if req.mu is None or req.nu is None:
            raise ValueError("feasible needs both mu and nu")
        ok, lam = us.dressing_feasible(s, req.mu, req.nu)
        return models.USystemResponse(op="feasible", feasible=ok, lam=list(lam))
    except ValueError as exc:
        raise _bad_request(exc)


@app.post("/render", response_model=models.RenderResponse)
def render(req: models.RenderRequest) -> models.RenderResponse:
    try:
        h = hive_from_json(req.hive)
        bad = hive_violation(h)
        if bad:
            raise ValueError(f"invalid hive: {bad}")
        text = render_ascii(h) if req.format == "ascii" else render_svg(h)
    except ValueError as exc:
        raise _bad_request(exc)
    return models.RenderResponse(text=text)


@app.post("/verify")
def verify(req: models.VerifyRequest) -> dict:
    return run_suite(req.suite, req.max_weight, req.max_n, req.workers)


@app.post("/symmetry")
def symmetry(req: models.SymmetryRequest) -> dict:
    try:
        rep = symmetry_check(req.lam, req.mu, req.nu, req.n)
    except ValueError as exc:
        raise _bad_request(exc)
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in rep.items()}
