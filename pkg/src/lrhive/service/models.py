"""Request and response models for the service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field


class CoeffQuery(BaseModel):
    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    nu: list[int]
    n: int | None = None
    mode: Literal["tableau", "hive", "gz", "bz", "kh", "rational"] = "hive"

    model_config = {"populate_by_name": True}


class CoeffResponse(BaseModel):
    coefficient: int
    mode: str
    n: int


class EnumerateRequest(BaseModel):
    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    nu: list[int]
    n: int | None = None

    model_config = {"populate_by_name": True}


class EnumerateResponse(BaseModel):
    count: int
    tableaux: list[dict]


class ApplyRequest(BaseModel):
    map: Literal["rho", "rho-inv", "sigma", "sigma-inv", "xi", "commutor"]
    object: dict
    n: int | None = None
    trace: bool = False


class ApplyResponse(BaseModel):
    result: dict
    trace: list | None = None


class ConvertRequest(BaseModel):
    direction: Literal["tableau-to-hive", "hive-to-tableau"]
    object: dict
    n: int | None = None


class ConvertResponse(BaseModel):
    result: dict


class USystemRequest(BaseModel):
    op: Literal["sigma", "dress", "feasible"]
    u: str
    n: int | None = None
    mu: list[int] | None = None
    nu: list[int] | None = None


class USystemResponse(BaseModel):
    op: str
    u: str | None = None
    hive: dict | None = None
    feasible: bool | None = None
    lam: list[int] | None = Field(default=None, alias="lambda")

    model_config = {"populate_by_name": True}


class RenderRequest(BaseModel):
    hive: dict
    format: Literal["ascii", "svg"] = "ascii"


class RenderResponse(BaseModel):
    text: str


class VerifyRequest(BaseModel):
    suite: Literal["involution", "symmetry", "crossmodel", "counts", "crystal", "all"] = "all"
    max_weight: int = 8
    max_n: int = 3
    workers: int | None = None


class SymmetryRequest(BaseModel):
    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    nu: list[int]
    n: int | None = None

    model_config = {"populate_by_name": True}


class ErrorResponse(BaseModel):
    detail: str


VerifyResponse = dict[str, Any]
