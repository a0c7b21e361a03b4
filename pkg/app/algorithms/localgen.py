"""
Divide-and-conquer enumeration.

The edges are split along a smallest minimal traverse into one partial hypergraph per pivot
vertex; the minimal traverses of the parts are enumerated separately and their unions
filtered back into the minimal traverses of the whole hypergraph.
"""

from typing import Iterator, Optional, Sequence

from ..core.config import settings
from ..core.errors import PreconditionError
from ..core.logging import get_logger
from ..models.hypergraph import Hypergraph, MtSet, VertexSet, vertex_set
from ..models.results import CombineStats, Decomposition
from ..utils.bitsets import is_subset, iter_bits
from .enumeration import Backend, enumerate_mts
from .hypergraph import is_traverse, partial_hypergraph, require_simple, serialize_hypergraph, support
from .transversality import exact_tau, minimum_traverse

logger = get_logger(__name__)


def decompose(h: Hypergraph, pivot: VertexSet, tau: Optional[int] = None) -> Decomposition:
    """
    Assign every edge to the first pivot vertex it contains, pivot vertices taken by
    decreasing support (ties by ascending label).
    """
    if not is_traverse(h, pivot):
        raise PreconditionError(f"pivot {tuple(pivot)} is not a traverse")
    size = exact_tau(h) if tau is None else tau
    if len(vertex_set(pivot)) != size:
        raise PreconditionError(f"pivot has size {len(vertex_set(pivot))}, expected tau={size}")

    ordered = tuple(sorted(vertex_set(pivot), key=lambda v: (-support(h, [v]), v)))
    remaining = h.all_edges
    indices: list[tuple[int, ...]] = []
    for v in ordered:
        part = remaining & h.vertex_edges[h.position(v)]
        remaining &= ~part
        indices.append(tuple(iter_bits(part)))

    parts = tuple(partial_hypergraph(h, idx) for idx in indices)
    logger.debug(f"Decomposition along {ordered}: part sizes {[p.m for p in parts]}")
    return Decomposition(pivot_mt=ordered, parts=parts, part_edge_indices=tuple(indices))


def _is_essential(h: Hypergraph, mask: int) -> bool:
    members = list(iter_bits(mask))
    for p in members:
        others = 0
        for q in members:
            if q != p:
                others |= h.vertex_edges[q]
        if h.vertex_edges[p] & ~others == 0:
            return False
    return True


def iter_combine(
    h: Hypergraph,
    local_mts: Sequence[MtSet],
    tau: int,
    stats: Optional[CombineStats] = None,
) -> Iterator[VertexSet]:
    """
    Unions of one local minimal traverse per part, in product order.

    Size-tau unions are emitted untested. Larger unions are emitted when they hit every edge
    and each member keeps a private edge. Partial unions containing an emitted size-tau
    traverse are cut.
    """
    if len(local_mts) != tau:
        raise PreconditionError(f"expected {tau} local MT sets, got {len(local_mts)}")
    stats = stats if stats is not None else CombineStats()
    local_masks = [[h.vertex_mask(t) for t in mts] for mts in local_mts]
    seen: set[int] = set()
    smallest: list[int] = []

    def search(depth: int, union: int) -> Iterator[VertexSet]:
        if depth == tau:
            stats.unions += 1
            if union in seen:
                return
            seen.add(union)
            if union.bit_count() == tau:
                stats.accepted_without_test += 1
                smallest.append(union)
                yield h.labels(union)
                return
            stats.tested += 1
            if h.edges_hit(union) == h.all_edges and _is_essential(h, union):
                stats.accepted_after_test += 1
                yield h.labels(union)
            else:
                stats.rejected += 1
            return
        for mask in local_masks[depth]:
            extended = union | mask
            if any(is_subset(s, extended) for s in smallest):
                stats.pruned += 1
                continue
            yield from search(depth + 1, extended)

    yield from search(0, 0)


def combine_local(
    h: Hypergraph,
    local_mts: Sequence[MtSet],
    tau: int,
    stats: Optional[CombineStats] = None,
) -> MtSet:
    return MtSet.from_sets(iter_combine(h, local_mts, tau, stats))


def iter_local(
    h: Hypergraph,
    backend: Backend | str | None = None,
    stats: Optional[CombineStats] = None,
    pivot: Optional[VertexSet] = None,
) -> Iterator[VertexSet]:
    """Whole pipeline as a stream; the pivot defaults to the lexicographically smallest minimum traverse."""
    require_simple(h)
    backend = Backend(backend or settings.default_backend)
    tau = exact_tau(h)
    decomposition = decompose(h, pivot if pivot is not None else minimum_traverse(h, tau), tau)
    local_mts = [enumerate_mts(part, backend) for part in decomposition.parts]
    logger.info(f"Local pipeline: tau={tau}, local MT counts {[len(mts) for mts in local_mts]}")
    return iter_combine(h, local_mts, tau, stats)


def enumerate_local(
    h: Hypergraph,
    backend: Backend | str | None = None,
    stats: Optional[CombineStats] = None,
    pivot: Optional[VertexSet] = None,
) -> MtSet:
    return MtSet.from_sets(iter_local(h, backend, stats, pivot))


def format_decomposition(d: Decomposition) -> str:
    """Parts in .dat form, each under a "# part i (pivot v)" header."""
    chunks = []
    for i, (vertex, part) in enumerate(zip(d.pivot_mt, d.parts), start=1):
        chunks.append(f"# part {i} (pivot {vertex})\n{serialize_hypergraph(part)}")
    return "".join(chunks)
