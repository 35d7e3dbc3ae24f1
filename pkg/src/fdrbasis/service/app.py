"""FastAPI service exposing the calculator.

Running the verification suites repeatedly benefits from the per-bidegree
elimination caches, so the heavy state lives behind a long-running service;
the CLI is a thin client of these endpoints.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import acceptance, basisops, quotient, sieving, symfunc
from ..exterior import Permutation, apply_perm, format_multivector
from ..partitions import LabeledPartition, enumerate_partitions
from . import schemas

app = FastAPI(
    title="fdrbasis",
    description=(
        "Exact computations in the noncrossing-partition basis of the "
        "fermionic diagonal coinvariant ring"
    ),
    version="0.1.0",
)


@app.exception_handler(ValueError)
async def value_error_handler(_, exc: ValueError):
    return JSONResponse(status_code=422, content={"error": str(exc), "kind": "invalid-input"})


@app.exception_handler(basisops.RewriteLimitError)
async def rewrite_limit_handler(_, exc: basisops.RewriteLimitError):
    return JSONResponse(status_code=422, content={"error": str(exc), "kind": "rewrite-limit"})


@app.get("/v1/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok")


@app.post("/v1/enumerate", response_model=schemas.EnumerateResponse)
def enumerate_endpoint(req: schemas.EnumerateRequest) -> schemas.EnumerateResponse:
    pis = enumerate_partitions(
        req.n, k=req.k, t=req.t, x=req.x, noncrossing_only=req.noncrossing_only
    )
    if req.bidegree is not None:
        pis = [pi for pi in pis if pi.bidegree() == tuple(req.bidegree)]
    return schemas.EnumerateResponse(
        n=req.n,
        total=len(pis),
        partitions=None if req.count_only else [pi.serialize() for pi in pis],
    )


def _parse_partition(text: str, n: int | None) -> LabeledPartition:
    return LabeledPartition.parse(text, n)


@app.post("/v1/gpi", response_model=schemas.VectorResponse)
def vector_endpoint(req: schemas.VectorRequest) -> schemas.VectorResponse:
    pi = _parse_partition(req.pi, req.n)
    if req.construction == "blockops":
        vec = basisops.partition_vector(pi)
    elif req.construction == "product":
        vec = basisops.partition_vector_product(pi)
    else:
        raise ValueError(f"unknown construction {req.construction!r}")
    return schemas.VectorResponse(
        n=pi.n,
        pi=pi.serialize(),
        multivector=format_multivector(vec),
        bidegree=pi.bidegree(),
        term_count=len(vec.terms),
    )


@app.post("/v1/straighten", response_model=schemas.StraightenResponse)
def straighten_endpoint(req: schemas.StraightenRequest) -> schemas.StraightenResponse:
    pi = _parse_partition(req.pi, req.n)
    sigma = Permutation.parse(req.sigma, pi.n - 1)
    comb = basisops.straighten(sigma, pi, max_rewrites=req.max_rewrites)
    terms = [
        schemas.CombinationTerm(
            coeff=str(comb[rho].numerator)
            if comb[rho].denominator == 1
            else f"{comb[rho].numerator}/{comb[rho].denominator}",
            partition=rho.serialize(),
        )
        for rho in sorted(comb, key=lambda r: r.serialize())
    ]
    agrees = None
    if req.oracle:
        target = apply_perm(sigma, basisops.partition_vector(pi))
        agrees = (
            basisops.combination_vector(comb, pi.n) == target
            and quotient.reduce_to_basis(target) == comb
        )
    return schemas.StraightenResponse(
        n=pi.n,
        sigma=req.sigma,
        pi=pi.serialize(),
        terms=terms,
        oracle_checked=req.oracle,
        oracle_agrees=agrees,
    )


@app.post("/v1/verify-basis", response_model=schemas.VerifyBasisResponse)
def verify_basis_endpoint(req: schemas.VerifyBasisRequest) -> schemas.VerifyBasisResponse:
    report = quotient.verify_basis(req.n)
    injectivity = quotient.injectivity_check(req.n) if req.injectivity else None
    return schemas.VerifyBasisResponse(injectivity=injectivity, **report)


@app.post("/v1/frobenius", response_model=schemas.FrobeniusResponse)
def frobenius_endpoint(req: schemas.FrobeniusRequest) -> schemas.FrobeniusResponse:
    table = symfunc.frobenius_bigraded(req.n)
    entries = [
        schemas.FrobeniusEntry(i=i, j=j, schur=exp.text(), dim=exp.dimension())
        for (i, j), exp in sorted(table.items())
    ]
    matches = None
    if req.compare_product_form:
        matches = symfunc.frobenius_product_form(req.n) == table
    return schemas.FrobeniusResponse(n=req.n, entries=entries, product_form_matches=matches)


@app.post("/v1/sieve", response_model=schemas.SieveResponse)
def sieve_endpoint(req: schemas.SieveRequest) -> schemas.SieveResponse:
    fd = sieving.csp_check(req.n, sieving.fd_csp_polynomial(req.n), name="fake-degree")
    cat = sieving.csp_check(req.n, sieving.q_catalan(req.n), name="q-catalan")
    instances = [
        schemas.SieveInstance(
            name=rep["name"],
            candidate_reduced=rep["candidate_reduced"],
            orbit_polynomial=rep["orbit_polynomial"],
            fixed_counts=rep["fixed_counts"],
            orbit_sizes=rep["orbit_sizes"],
            passed=rep["passed"],
        )
        for rep in (fd, cat)
    ]
    return schemas.SieveResponse(
        n=req.n,
        set_size=fd["set_size"],
        instances=instances,
        passed=all(inst.passed for inst in instances),
    )


@app.post("/v1/congruence", response_model=schemas.CongruenceResponse)
def congruence_endpoint(req: schemas.CongruenceRequest) -> schemas.CongruenceResponse:
    rep = sieving.congruence_check(req.n)
    return schemas.CongruenceResponse(
        n=req.n,
        fd_side=rep["fd_side"],
        q_catalan=rep["q_catalan"],
        residue_small=rep["residue_mod_q^(n-1)-1"],
        residue_large=rep["residue_mod_q^n-1"],
        zero_mod_small=rep["zero_mod_q^(n-1)-1"],
        zero_mod_large=rep["zero_mod_q^n-1"],
    )


@app.post("/v1/report", response_model=schemas.ReportResponse)
def report_endpoint(req: schemas.ReportRequest) -> schemas.ReportResponse:
    report = acceptance.run_all(n_cap=req.n_max, seed=req.seed)
    return schemas.ReportResponse(**report)
