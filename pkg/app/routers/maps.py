# routers/maps.py
import logging
from typing import Dict, List

from fastapi import APIRouter, HTTPException, status

from core.errors import SimsunError, UnknownNameError
from models.schemas import CheckResponse, MapRequest, MapResponse
from services import registry

router = APIRouter()
logger = logging.getLogger("uvicorn.error")


def http_error(exc: SimsunError) -> HTTPException:
    code = status.HTTP_404_NOT_FOUND if isinstance(exc, UnknownNameError) else status.HTTP_400_BAD_REQUEST
    return HTTPException(status_code=code, detail=exc.to_dict())


@router.get("/maps", response_model=Dict[str, List[str]])
def list_maps():
    """Registered map and predicate names"""
    return {"maps": registry.map_names(), "predicates": registry.predicate_names()}


@router.post("/maps/{name}", response_model=MapResponse)
def apply_map(name: str, request: MapRequest):
    """Apply a named bijection to a text-encoded object"""
    try:
        spec = registry.get_map(name)
        output = spec(request.input)
    except SimsunError as exc:
        logger.info("map %s rejected %r: %s", name, request.input, exc.message)
        raise http_error(exc)
    return MapResponse(map=name, input=request.input, output=output, source=spec.source, target=spec.target)


@router.post("/check/{predicate}", response_model=CheckResponse)
def check(predicate: str, request: MapRequest):
    """Evaluate a predicate; the detail carries witnesses when it fails"""
    try:
        value, detail = registry.get_predicate(predicate)(request.input)
    except SimsunError as exc:
        logger.info("check %s rejected %r: %s", predicate, request.input, exc.message)
        raise http_error(exc)
    return CheckResponse(predicate=predicate, input=request.input, value=value, detail=detail)
