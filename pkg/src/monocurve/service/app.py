"""HTTP service wrapping the report builders.

Domain input errors map to 400, exceeded search caps to 422; payload shape
errors are handled by pydantic as usual.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import reports
from ..errors import BoxOverflow, InputError, SearchCapExceeded
from .models import (
    AperyRequest,
    AperyResponse,
    DerivationsRequest,
    DerivationsResponse,
    HealthResponse,
    HkRequest,
    HkResponse,
    PfResponse,
    SequenceRequest,
    ValidateRequest,
    ValidateResponse,
)

app = FastAPI(
    title="monocurve",
    description=(
        "Exact invariants of projective monomial curves: pseudo-Frobenius "
        "sets, derivation module generators, Hilbert-Kunz multiplicity."
    ),
    version="0.1.0",
)


def _guarded(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except (SearchCapExceeded, BoxOverflow) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/healthz", response_model=HealthResponse)
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/pf", response_model=PfResponse)
def pf(req: SequenceRequest) -> dict:
    return _guarded(reports.pf_report, req.sequence)


@app.post("/derivations", response_model=DerivationsResponse)
def derivations(req: DerivationsRequest) -> dict:
    return _guarded(
        reports.derivations_report,
        req.sequence,
        method=req.method,
        assume_cm=req.assume_cm,
        cap=req.cap,
    )


@app.post("/hk", response_model=HkResponse)
def hk(req: HkRequest) -> dict:
    return _guarded(
        reports.hk_report,
        req.sequence,
        method=req.method,
        frobenius_power=req.frobenius_power,
        assume_cm=req.assume_cm,
    )


@app.post("/apery", response_model=AperyResponse)
def apery(req: AperyRequest) -> dict:
    return _guarded(reports.apery_report, req.sequence, req.modulus)


@app.post("/validate", response_model=ValidateResponse)
def validate(req: ValidateRequest) -> dict:
    return _guarded(reports.validation_report, req.family, req.max_np)
