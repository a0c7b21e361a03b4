"""
Instance generators and the benchmark harness.
"""

import io
import time
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd
from pydantic import ValidationError

from ..core.config import settings
from ..core.errors import PreconditionError
from ..core.logging import get_logger
from ..models.bench import BenchRow, RandomSpec
from ..models.hypergraph import Hypergraph
from ..utils.helpers import generate_id
from .enumeration import Algorithm, Backend, run_algorithm
from .hypergraph import load_hypergraph, min_reduce, serialize_hypergraph
from .irredundant import compaction_rate, imt_extract

logger = get_logger(__name__)

RNG_NAME = "PCG64"
MAX_REDRAWS = 1000
CSV_HEADER = ("id", "n", "m", "backend", "mt_count", "irr_count", "theta", "tau", "ms")


def random_spec(n: int, m: int, p_l: float, p_u: float, seed: Optional[int] = None) -> RandomSpec:
    """Validated spec; the seed falls back to the configured one."""
    try:
        return RandomSpec(n=n, m=m, p_l=p_l, p_u=p_u, seed=settings.seed if seed is None else seed)
    except ValidationError as e:
        raise PreconditionError(f"invalid random spec: {e.errors()[0]['msg']}") from None


def gen_random(spec: RandomSpec) -> Hypergraph:
    """
    For every edge draw p uniformly in [p_l, p_u], then keep each vertex 1..n with
    probability p. Empty draws are repeated. The result is not reduced.
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    edges = []
    for i in range(spec.m):
        for _ in range(MAX_REDRAWS):
            p = rng.uniform(spec.p_l, spec.p_u)
            members = np.flatnonzero(rng.random(spec.n) < p) + 1
            if members.size:
                edges.append(tuple(int(v) for v in members))
                break
        else:
            raise PreconditionError(f"edge {i} still empty after {MAX_REDRAWS} draws")
    return Hypergraph.from_edges(edges)


def gen_worst_case(m: int, block: int) -> Hypergraph:
    """m pairwise-disjoint edges of `block` vertices each, labeled 1..m*block."""
    if m < 1 or block < 1:
        raise PreconditionError(f"worst case needs m, block >= 1, got ({m}, {block})")
    return Hypergraph.from_edges(
        range(i * block + 1, (i + 1) * block + 1) for i in range(m)
    )


def instance_id(h: Hypergraph) -> str:
    """Content hash of the canonical .dat text."""
    return generate_id(serialize_hypergraph(h), prefix="h")


def load_instances(directory: str) -> list[tuple[str, Hypergraph]]:
    """Every .dat file of a directory, by file name."""
    paths = sorted(Path(directory).glob("*.dat"))
    return [(path.name, load_hypergraph(str(path))) for path in paths]


def _measure(h: Hypergraph, algorithm: Algorithm, warmup: bool) -> tuple[int, int, float]:
    if warmup:
        run_algorithm(h, algorithm)
    start = time.perf_counter()
    mts = run_algorithm(h, algorithm)
    elapsed = (time.perf_counter() - start) * 1000.0
    return len(mts), mts.min_size(), elapsed


def bench_run(
    instances: Iterable[Hypergraph],
    algorithms: Sequence[Algorithm | str],
    with_irr: bool = False,
    warmup: Optional[bool] = None,
) -> list[BenchRow]:
    """One row per (instance, algorithm); a failing run becomes a row with an error and no counts."""
    warmup = settings.BENCH_WARMUP if warmup is None else warmup
    rows = []
    for h in instances:
        reduced = min_reduce(h)
        hid = instance_id(reduced)
        for algorithm in algorithms:
            name = Algorithm(algorithm).value
            try:
                mt_count, tau, ms = _measure(reduced, Algorithm(algorithm), warmup)
                irr_count = theta = None
                if with_irr:
                    irr_backend = settings.default_backend if name == Algorithm.LOCAL.value else name
                    irr_count = len(imt_extract(reduced, Backend(irr_backend)).irredundant_mts)
                    theta = compaction_rate(mt_count, irr_count)
                rows.append(BenchRow(
                    id=hid, n=reduced.n, m=reduced.m, backend=name,
                    mt_count=mt_count, irr_count=irr_count, theta=theta, tau=tau, ms=ms,
                ))
                logger.info(f"📊 {hid} {name}: {mt_count} MTs in {ms:.2f} ms")
            except Exception as e:
                logger.exception(f"❌ {hid} {name} failed")
                rows.append(BenchRow(id=hid, n=reduced.n, m=reduced.m, backend=name, error=str(e)))
    return rows


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def bench_to_csv(rows: Sequence[BenchRow], metadata: Optional[dict[str, object]] = None) -> str:
    """CSV text: "# key: value" metadata lines, the fixed header and rows, then one "# error" line per failed row."""
    out = io.StringIO()
    for key, value in (metadata or {}).items():
        out.write(f"# {key}: {value}\n")
    cells = [
        [_cell(v) for v in (
            row.id, row.n, row.m, row.backend, row.mt_count, row.irr_count, row.theta, row.tau,
            None if row.ms is None else f"{row.ms:.3f}",
        )]
        for row in rows
    ]
    pd.DataFrame(cells, columns=list(CSV_HEADER), dtype=str).to_csv(out, index=False, lineterminator="\n")
    for row in rows:
        if row.failed:
            out.write(f"# error {row.id} {row.backend}: {row.error}\n")
    return out.getvalue()
