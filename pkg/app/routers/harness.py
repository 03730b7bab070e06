# routers/harness.py
import logging
from typing import Optional

from fastapi import APIRouter, Query

from core.config import settings
from core.errors import SimsunError
from models.schemas import (
    EnumerateResponse,
    PermutationClass,
    SequenceResponse,
    VerifyResponse,
)
from routers.maps import http_error
from services import enumeration, registry, verification
from utils.formats import format_pattern, format_permutation, parse_patterns

router = APIRouter()
logger = logging.getLogger("uvicorn.error")


@router.get("/enumerate", response_model=EnumerateResponse)
def enumerate_permutations(
    n: int = Query(..., ge=0, description="Permutation length"),
    cls: PermutationClass = Query(PermutationClass.ALL, description="Class to enumerate"),
    avoid: str = Query("", description="Comma-separated patterns, e.g. 123,231"),
    inverse_avoid: bool = Query(False, description="Inverse must avoid the patterns too"),
    limit: Optional[int] = Query(None, ge=0, description="Maximum items returned"),
    count_only: bool = Query(False, description="Return the count without items"),
):
    """Members of RS_n, DRS_n or S_n with pattern restrictions, lexicographic"""
    try:
        enumeration.check_size(n, cls.value)
        patterns = parse_patterns(avoid)
        stream = enumeration.enumerate_class(n, cls.value, patterns, inverse_avoid)
        cap = min(limit if limit is not None else settings.SIMSUN_MAX_ENUMERATE, settings.SIMSUN_MAX_ENUMERATE)
        items, count = [], 0
        for sigma in stream:
            if not count_only and count < cap:
                items.append(format_permutation(sigma))
            count += 1
    except SimsunError as exc:
        raise http_error(exc)
    return EnumerateResponse(
        n=n,
        cls=cls,
        avoid=[format_pattern(p) for p in patterns],
        inverse_avoid=inverse_avoid,
        count=count,
        items=items,
        truncated=not count_only and count > len(items),
    )


@router.get("/sequence/{name}", response_model=SequenceResponse)
def sequence(
    name: str,
    nmax: int = Query(10, ge=0, le=200, description="Largest index"),
    workers: int = Query(1, ge=1, le=64, description="Worker threads for drs"),
):
    """Exact terms of a reference sequence, of |RS_n| or of |DRS_n|"""
    try:
        offset, values = registry.sequence_values(name, nmax, workers)
    except SimsunError as exc:
        raise http_error(exc)
    return SequenceResponse(name=name, offset=offset, values=values)


@router.post("/verify/{suite}", response_model=VerifyResponse)
def verify(
    suite: str,
    nmax: int = Query(settings.SIMSUN_NMAX, ge=1, description="Largest size"),
    workers: int = Query(settings.SIMSUN_WORKERS, ge=1, le=64, description="Worker threads"),
):
    """Run table1, a single claim, or all claims and return the reports"""
    try:
        reports = verification.run_suite(suite, nmax, workers)
    except SimsunError as exc:
        raise http_error(exc)
    passed = verification.suite_passed(reports)
    logger.info("verify %s nmax=%d: %s", suite, nmax, "pass" if passed else "FAIL")
    return VerifyResponse(suite=suite, n_max=nmax, passed=passed, reports=reports)
