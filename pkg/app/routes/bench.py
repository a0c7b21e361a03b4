"""
Bench route handlers for the Hypertrans API.
Runs benchmarks over inline instances and lists stored rows.
"""

from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from ..algorithms.genbench import RNG_NAME, bench_run, bench_to_csv
from ..algorithms.hypergraph import parse_hypergraph
from ..core.errors import HypergraphError
from ..core.logging import get_logger
from ..models.requests import BenchRequest
from ..models.responses import BenchListResponse, BenchRecordSummary, BenchRunResponse
from ..services.bench_service import bench_service

logger = get_logger(__name__)

router = APIRouter(prefix="/bench", tags=["Benchmark Operations"])


@router.post(
    "/runs",
    response_model=BenchRunResponse,
    summary="Run a benchmark",
    description="Benchmark every algorithm on every instance and store the rows"
)
async def create_run(request: BenchRequest):
    """
    - **instances**: .dat texts
    - **algorithms**: berge, mtminer, mmcs, local
    - **with_irr**: add the irredundant count and compaction rate
    """
    try:
        instances = [parse_hypergraph(text) for text in request.instances]
        logger.info(f"⏱️ Benchmarking {len(instances)} instances x {len(request.algorithms)} algorithms")
        rows = bench_run(instances, request.algorithms, with_irr=request.with_irr)
        run_id = bench_service.store_rows(rows)
        return BenchRunResponse(run_id=run_id, rows=rows, csv=bench_to_csv(rows, {"rng": RNG_NAME}))
    except HypergraphError as e:
        raise HTTPException(status_code=400, detail=e.message)
    except Exception as e:
        logger.exception(f"❌ Error running benchmark: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Error running benchmark: {str(e)}")


@router.get(
    "/runs",
    response_model=BenchListResponse,
    summary="List stored benchmark rows",
    description="Stored rows, most recent first, with pagination"
)
async def list_runs(
    limit: int = Query(50, ge=1, le=500, description="Maximum number of rows to return"),
    offset: int = Query(0, ge=0, description="Number of rows to skip"),
    run_id: Optional[str] = Query(None, description="Restrict to one run")
):
    try:
        records = bench_service.list_rows(limit=limit, offset=offset, run_id=run_id)
        total_count = bench_service.count_rows(run_id=run_id)
        rows = [BenchRecordSummary(**record.to_dict()) for record in records]
        return BenchListResponse(
            rows=rows,
            total_count=total_count,
            limit=limit,
            offset=offset,
            has_more=offset + len(rows) < total_count,
        )
    except Exception as e:
        logger.exception(f"❌ Error listing benchmark rows: {str(e)}")
        raise HTTPException(status_code=500, detail=f"Error listing benchmark rows: {str(e)}")
