"""HTTP front end: a thin FastAPI layer over the exact-arithmetic core.

Every endpoint is a stateless wrapper around pure library functions, so the
service can run with any number of workers.  Domain violations (index cap,
cost guard, arguments outside [0, 1]) map to 400; unknown identity or
sequence names map to 404; shape errors are pydantic's 422.
"""

from __future__ import annotations

from fractions import Fraction
from functools import wraps

from fastapi import FastAPI, HTTPException

from . import __version__, identities, sequence
from .schemas import (
    ComputeRequest,
    ComputeResponse,
    EnclosureModel,
    IdentityInfo,
    RangeRequest,
    RangeResponse,
    ReportModel,
    SpecialResponse,
    TakagiRequest,
    TakagiResponse,
    VerifyRequest,
    VerifyResponse,
)
from .takagi import Dyadic, takagi_dyadic, takagi_enclosure, takagi_rational

COST_GUARD = 1 << 26  # naive/sets are O(n); refuse larger n unless forced

app = FastAPI(
    title="deficit-takagi",
    version=__version__,
    description="Exact computation of the cumulated deficient binary digit sum "
                "and of the Takagi function at rational points.",
)


def _domain_errors_to_400(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    return wrapper


def _guard_cost(method: str, n: int, force: bool) -> None:
    if method in ("naive", "sets", "all") and n > COST_GUARD and not force:
        raise ValueError(
            f"method {method!r} is O(n) and n={n} exceeds 2^26; "
            "set force=true or pick an O(log n) method"
        )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/compute", response_model=ComputeResponse, response_model_exclude_none=True)
@_domain_errors_to_400
def compute(req: ComputeRequest) -> ComputeResponse:
    """One term, by one method or by all five with a cross-check verdict."""
    _guard_cost(req.method, req.n, req.force)
    if req.method == "all":
        values = sequence.compute_all(req.n)
        return ComputeResponse(n=req.n, method="all", values=values,
                               match=len(set(values.values())) == 1)
    return ComputeResponse(n=req.n, method=req.method,
                           value=sequence.compute(req.n, req.method))


@app.post("/range", response_model=RangeResponse)
@_domain_errors_to_400
def term_range(req: RangeRequest) -> RangeResponse:
    """Terms start..end as (n, value) pairs."""
    _guard_cost(req.method, req.end, req.force)
    if req.method == "naive":
        terms = list(sequence.naive_range(req.start, req.end))
    else:
        terms = [(n, sequence.compute(n, req.method)) for n in range(req.start, req.end + 1)]
    return RangeResponse(method=req.method, terms=terms)


@app.post("/takagi", response_model=TakagiResponse, response_model_exclude_none=True)
@_domain_errors_to_400
def takagi_value(req: TakagiRequest) -> TakagiResponse:
    """Exact Takagi value at num/den or num/2^exp, optionally an enclosure."""
    if req.exp is not None:
        point = Dyadic(req.num, req.exp).as_fraction()
    else:
        point = Fraction(req.num, req.den)
    if req.enclose is not None:
        interval = takagi_enclosure(point, req.enclose)
        return TakagiResponse(input=str(point),
                              enclosure=EnclosureModel(lo=str(interval.lo),
                                                       hi=str(interval.hi),
                                                       terms=req.enclose))
    if req.exp is not None:
        value = takagi_dyadic(Dyadic(req.num, req.exp)).as_fraction()
    else:
        value = takagi_rational(point)
    return TakagiResponse(input=str(point), value=str(value))


@app.get("/identities", response_model=list[IdentityInfo])
def list_identities() -> list[IdentityInfo]:
    return [IdentityInfo(id=entry.id, description=entry.description,
                         relation=entry.relation)
            for entry in identities.CATALOG.values()]


@app.post("/verify", response_model=VerifyResponse)
@_domain_errors_to_400
def verify(req: VerifyRequest) -> VerifyResponse:
    """Sweep catalog identities and report counterexamples, if any."""
    if req.ids is not None:
        unknown = [name for name in req.ids if name not in identities.CATALOG]
        if unknown:
            raise HTTPException(status_code=404, detail=f"unknown identities: {unknown}")
    reports = identities.verify_all(ids=req.ids, kmax=req.kmax, mmax=req.mmax,
                                    profile=req.profile, corrupt=req.corrupt)
    return VerifyResponse(
        all_pass=all(report.passed for report in reports),
        reports=[ReportModel(**report.to_json_dict()) for report in reports],
    )


@app.get("/special/{which}", response_model=SpecialResponse)
@_domain_errors_to_400
def special(which: str, count: int = 10, mmax: int = 5, kmax: int = 8,
            limit: int | None = None) -> SpecialResponse:
    """Special index sequences: a026644, a000975, power4 or minima."""
    if which == "a026644":
        values = (identities.a026644_recurrence(count) if limit is None
                  else [n for n in identities.a026644_recurrence(64) if n <= limit])
    elif which == "a000975":
        values = (identities.lichtenberg(count) if limit is None
                  else [n for n in identities.lichtenberg(64) if n <= limit])
    elif which == "power4":
        values = [list(pair) for pair in identities.power4_fixed_points(mmax)]
    elif which == "minima":
        values = [[m.k, m.argmin, m.value]
                  for m in (identities.interval_minimum(k) for k in range(1, kmax + 1))]
    else:
        raise HTTPException(status_code=404, detail=f"unknown special sequence {which!r}")
    return SpecialResponse(which=which, values=values)
