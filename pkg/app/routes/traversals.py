"""
Traversal route handlers for the Hypertrans API.
Enumeration, transversality, multi-member and irredundant pipelines over .dat instances.
"""

from fastapi import APIRouter, HTTPException

from ..algorithms.enumeration import run_algorithm
from ..algorithms.hypergraph import min_reduce, parse_hypergraph
from ..algorithms.irredundant import expand_mts, imt_extract
from ..algorithms.multimember import extract_tmm
from ..algorithms.transversality import transversality_report
from ..core.errors import HypergraphError
from ..core.logging import get_logger
from ..models.requests import InstanceRequest, IrredundantRequest, TmmRequest, TraversalRequest
from ..models.responses import IrredundantResponse, TmmResponse, TraversalResponse
from ..models.results import TransversalityResult

logger = get_logger(__name__)

router = APIRouter(tags=["Traversal Operations"])


@router.post(
    "/traversals",
    response_model=TraversalResponse,
    summary="Enumerate minimal traverses",
    description="Parse a .dat instance, reduce it if needed and enumerate its minimal traverses",
    responses={
        400: {"description": "Malformed instance"},
        500: {"description": "Internal Server Error"}
    }
)
async def traversals_endpoint(request: TraversalRequest):
    """
    - **instance**: hypergraph in .dat form (required)
    - **algorithm**: berge, mtminer, mmcs or local
    """
    try:
        h = parse_hypergraph(request.instance)
        reduced = min_reduce(h)
        if reduced is not h:
            logger.info(f"✂️ Instance reduced from {h.m} to {reduced.m} edges")
        mts = run_algorithm(reduced, request.algorithm)
        logger.info(f"✅ {request.algorithm.value}: {len(mts)} minimal traverses")
        return TraversalResponse(
            algorithm=request.algorithm.value,
            reduced=reduced is not h,
            count=len(mts),
            traverses=[list(t) for t in mts],
        )
    except HypergraphError as e:
        logger.warning(f"⚠️ Rejected instance: {e.message}")
        raise HTTPException(status_code=400, detail=e.message)
    except Exception as e:
        logger.exception(f"❌ Error enumerating traverses: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Error enumerating traverses: {str(e)}")


@router.post(
    "/transversality",
    response_model=TransversalityResult,
    summary="Transversality number",
    description="Greedy upper bound and exact value of tau"
)
async def transversality_endpoint(request: InstanceRequest):
    try:
        return transversality_report(parse_hypergraph(request.instance))
    except HypergraphError as e:
        raise HTTPException(status_code=400, detail=e.message)
    except Exception as e:
        logger.exception(f"❌ Error computing transversality: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Error computing transversality: {str(e)}")


@router.post(
    "/tmm",
    response_model=TmmResponse,
    summary="Multi-member minimal traverses",
    description="Smallest minimal traverses with maximal coverage; the instance is used as given"
)
async def tmm_endpoint(request: TmmRequest):
    try:
        result = extract_tmm(parse_hypergraph(request.instance), request.mode)
        return TmmResponse(
            mode=request.mode.value,
            tau=result.tau,
            smallest_mts=[list(t) for t in result.smallest_mts],
            tmms=[list(t) for t in result.tmms],
            coverage=result.best_coverage,
        )
    except HypergraphError as e:
        raise HTTPException(status_code=400, detail=e.message)
    except Exception as e:
        logger.exception(f"❌ Error extracting TMMs: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Error extracting TMMs: {str(e)}")


@router.post(
    "/irredundant",
    response_model=IrredundantResponse,
    summary="Irredundant minimal traverses",
    description="Generalized nodes, irredundant hypergraph and its minimal traverses, optionally expanded"
)
async def irredundant_endpoint(request: IrredundantRequest):
    try:
        h = min_reduce(parse_hypergraph(request.instance))
        result = imt_extract(h, request.backend).with_compaction()
        expanded = expand_mts(result.irredundant_mts, result.generalized) if request.expand else None
        return IrredundantResponse(
            groups=list(result.generalized.groups),
            irredundant_edges=[list(e) for e in result.irredundant_h.edges],
            irredundant_mts=[list(t) for t in result.irredundant_mts],
            expanded_count=result.expanded_count(),
            theta=result.compaction,
            expanded_mts=None if expanded is None else [list(t) for t in expanded],
        )
    except HypergraphError as e:
        raise HTTPException(status_code=400, detail=e.message)
    except Exception as e:
        logger.exception(f"❌ Error in irredundant pipeline: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Error in irredundant pipeline: {str(e)}")
