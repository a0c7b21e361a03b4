"""
Dependency route handlers for the Hypertrans API.
Functional dependency covers of a CSV relation.
"""

from fastapi import APIRouter, HTTPException

from ..algorithms.fdinfer import (
    concise_cover,
    conditional_cover,
    format_attribute_groups,
    minimal_cover,
    parse_relation,
)
from ..core.errors import HypergraphError
from ..core.logging import get_logger
from ..models.requests import DependencyRequest
from ..models.responses import DependencyResponse

logger = get_logger(__name__)

router = APIRouter(prefix="/dependencies", tags=["Dependency Operations"])


@router.post(
    "/",
    response_model=DependencyResponse,
    summary="Infer functional dependencies",
    description="Minimal cover by default; concise cover with its groups and conditional dependencies on request",
    responses={
        400: {"description": "Malformed relation"},
        500: {"description": "Internal Server Error"}
    }
)
async def dependencies_endpoint(request: DependencyRequest):
    """
    - **csv**: relation with a header row (required)
    - **concise**: return the irredundant cover and its attribute groups
    - **conditional**: add the dependencies holding on sub-relations
    """
    try:
        r = parse_relation(request.csv)
        logger.info(f"📋 Relation with {r.arity} attributes and {len(r.tuples)} tuples")

        if not (request.concise or request.conditional):
            cover = minimal_cover(r, request.backend)
            return DependencyResponse(attributes=list(r.attributes), fds=cover.lines())

        concise = concise_cover(r, request.backend)
        groups = {
            a: format_attribute_groups(r.attributes, gn)
            for a, gn in (concise.per_attribute_gn or {}).items()
            if not gn.is_trivial()
        }
        conditional = []
        if request.conditional:
            conditional = [c for found in conditional_cover(r, concise).values() for c in found]
        return DependencyResponse(
            attributes=list(r.attributes),
            fds=concise.lines() if request.concise else minimal_cover(r, request.backend).lines(),
            groups=groups,
            conditional=conditional,
        )
    except HypergraphError as e:
        logger.warning(f"⚠️ Rejected relation: {e.message}")
        raise HTTPException(status_code=400, detail=e.message)
    except Exception as e:
        logger.exception(f"❌ Error inferring dependencies: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Error inferring dependencies: {str(e)}")
