"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

Method = Literal["naive", "sets", "recurrence", "lemma2", "takagi", "all"]


class ComputeRequest(BaseModel):
    n: int = Field(ge=0)
    method: Method = "recurrence"
    force: bool = False


class ComputeResponse(BaseModel):
    n: int
    method: Method
    value: Optional[int] = None
    values: Optional[dict[str, int]] = None
    match: Optional[bool] = None


class RangeRequest(BaseModel):
    start: int = Field(ge=0)
    end: int = Field(ge=0)
    method: Method = "recurrence"
    force: bool = False

    @model_validator(mode="after")
    def _ordered(self) -> "RangeRequest":
        if self.start > self.end:
            raise ValueError("start must not exceed end")
        if self.method == "all":
            raise ValueError("range computation needs a single method")
        return self


class RangeResponse(BaseModel):
    method: Method
    terms: list[tuple[int, int]]


class TakagiRequest(BaseModel):
    num: int = Field(ge=0)
    den: Optional[int] = Field(default=None, ge=1)
    exp: Optional[int] = Field(default=None, ge=0)
    enclose: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _one_denominator(self) -> "TakagiRequest":
        if (self.den is None) == (self.exp is None):
            raise ValueError("give exactly one of den (rational) or exp (dyadic)")
        return self


class EnclosureModel(BaseModel):
    lo: str
    hi: str
    terms: int


class TakagiResponse(BaseModel):
    input: str
    value: Optional[str] = None
    enclosure: Optional[EnclosureModel] = None


class VerifyRequest(BaseModel):
    ids: Optional[list[str]] = None  # None sweeps the whole catalog
    kmax: Optional[int] = Field(default=None, ge=0, le=24)
    mmax: Optional[int] = Field(default=None, ge=0, le=12)
    profile: Optional[Literal["ci", "full"]] = None
    corrupt: bool = False


class ReportModel(BaseModel):
    id: str
    ranges: dict[str, str]
    cases: int
    passed: bool = Field(alias="pass")
    counterexamples: list[dict]

    model_config = {"populate_by_name": True}


class VerifyResponse(BaseModel):
    all_pass: bool
    reports: list[ReportModel]


class IdentityInfo(BaseModel):
    id: str
    description: str
    relation: str


class SpecialResponse(BaseModel):
    which: str
    values: list
