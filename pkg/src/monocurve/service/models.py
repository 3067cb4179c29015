"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class SequenceRequest(BaseModel):
    sequence: list[int] = Field(min_length=1, description="n_0 < ... < n_p, gcd 1")


class DerivationsRequest(SequenceRequest):
    method: Literal["brute", "closed", "both"] = "both"
    assume_cm: bool = False
    cap: Optional[int] = Field(default=None, gt=0)


class HkRequest(SequenceRequest):
    method: Literal["closed", "eto", "both"] = "both"
    frobenius_power: Optional[int] = Field(default=None, ge=1)
    assume_cm: bool = False


class AperyRequest(SequenceRequest):
    modulus: int = Field(gt=0)


class ValidateRequest(BaseModel):
    family: Literal["p1", "arithmetic", "all"] = "all"
    max_np: int = Field(default=20, ge=3, le=60)


class Classification(BaseModel):
    p: int
    degree: int
    arithmetic: bool
    a: Optional[int]
    b: Optional[int]
    d: Optional[int]
    cm_assumed: bool


class GeneratorModel(BaseModel):
    target: Literal["d_dt", "d_du"]
    t_exp: int
    u_exp: int
    display: str


class FractionModel(BaseModel):
    num: int
    den: int
    decimal: float


class PfResponse(BaseModel):
    schema_: str = Field(alias="schema")
    input_sequence: list[int]
    classification: Classification
    pf_s1: list[int]
    pf_s2: list[int]

    model_config = {"populate_by_name": True}


class DerivationsValidation(BaseModel):
    closed_form_available: bool
    closed_equals_brute: Optional[bool] = None
    mu_match: Optional[bool] = None


class DerivationsResponse(PfResponse):
    derivation_basis: list[GeneratorModel]
    mu: int
    provenance: str
    hk: FractionModel
    validation: Optional[DerivationsValidation]


class StaircaseModel(BaseModel):
    colength: int
    box_count: int
    block_counts: list[int]


class FrobeniusPowerModel(BaseModel):
    q: int
    colength: int
    normalized: FractionModel


class HkResponse(BaseModel):
    schema_: str = Field(alias="schema")
    input_sequence: list[int]
    hk: FractionModel
    hk_eto: Optional[FractionModel] = None
    staircase: Optional[StaircaseModel] = None
    paths_agree: Optional[bool] = None
    frobenius_power: Optional[FrobeniusPowerModel] = None

    model_config = {"populate_by_name": True}


class AperyResponse(BaseModel):
    schema_: str = Field(alias="schema")
    input_sequence: list[int]
    minimal_generators: list[int]
    modulus: int
    apery_set: list[int]
    frobenius: int

    model_config = {"populate_by_name": True}


class CheckModel(BaseModel):
    name: str
    ok: bool
    instances: int
    detail: str


class ValidateResponse(BaseModel):
    schema_: str = Field(alias="schema")
    family: str
    max_np: int
    checks: list[CheckModel]
    ok: bool

    model_config = {"populate_by_name": True}


class HealthResponse(BaseModel):
    status: str
