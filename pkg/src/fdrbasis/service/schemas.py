"""Request and response models for the verification service."""

from __future__ import annotations

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1"


class EnumerateRequest(BaseModel):
    n: int = Field(ge=2, le=10)
    k: int | None = None
    t: int | None = None
    x: int | None = None
    bidegree: tuple[int, int] | None = None
    noncrossing_only: bool = True
    count_only: bool = False


class EnumerateResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    total: int
    partitions: list[str] | None = None


class VectorRequest(BaseModel):
    n: int | None = Field(default=None, ge=2, le=12)
    pi: str
    construction: str = "blockops"


class VectorResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    pi: str
    multivector: str
    bidegree: tuple[int, int]
    term_count: int


class StraightenRequest(BaseModel):
    n: int | None = Field(default=None, ge=2, le=12)
    sigma: str
    pi: str
    max_rewrites: int = Field(default=10**6, ge=1)
    oracle: bool = False


class CombinationTerm(BaseModel):
    coeff: str
    partition: str


class StraightenResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    sigma: str
    pi: str
    terms: list[CombinationTerm]
    oracle_checked: bool
    oracle_agrees: bool | None = None


class VerifyBasisRequest(BaseModel):
    n: int = Field(ge=2, le=9)
    injectivity: bool = False


class BidegreeCell(BaseModel):
    i: int
    j: int
    monomials: int
    ideal_rank: int
    dim: int
    indexed: int
    ok: bool


class NarayanaRow(BaseModel):
    k: int
    dim: int
    narayana: int
    ok: bool


class VerifyBasisResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    indexed_count: int
    dim_total: int
    count_matches_dimension: bool
    columns_independent: bool
    leading_terms_ok: bool
    narayana_ok: bool
    bidegrees: list[BidegreeCell]
    narayana: list[NarayanaRow]
    witnesses: list[str]
    injectivity: dict | None = None
    passed: bool


class HealthResponse(BaseModel):
    status: str
    schema_version: str = SCHEMA_VERSION


class FrobeniusRequest(BaseModel):
    n: int = Field(ge=2, le=9)
    compare_product_form: bool = True


class FrobeniusEntry(BaseModel):
    i: int
    j: int
    schur: str
    dim: int


class FrobeniusResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    entries: list[FrobeniusEntry]
    product_form_matches: bool | None = None


class SieveRequest(BaseModel):
    n: int = Field(ge=2, le=10)


class SieveInstance(BaseModel):
    name: str
    candidate_reduced: str
    orbit_polynomial: str
    fixed_counts: list[int]
    orbit_sizes: list[int]
    passed: bool


class SieveResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    set_size: int
    instances: list[SieveInstance]
    passed: bool


class CongruenceRequest(BaseModel):
    n: int = Field(ge=2, le=16)


class CongruenceResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    n: int
    fd_side: str
    q_catalan: str
    residue_small: str
    residue_large: str
    zero_mod_small: bool
    zero_mod_large: bool


class ReportRequest(BaseModel):
    n_max: int | None = Field(default=None, ge=2, le=10)
    seed: int = 20240817


class CriterionRow(BaseModel):
    id: int
    name: str
    passed: bool
    seconds: float
    detail: str


class ReportResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    criteria: list[CriterionRow]
    all_passed: bool
    seed: int


class ErrorBody(BaseModel):
    error: str
    kind: str
