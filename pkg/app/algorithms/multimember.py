"""
Multi-member minimal traverses: the smallest minimal traverses that cover the most co-members.

Both extraction modes work on the hypergraph as given, so duplicated or nested edges still
count towards coverage.
"""

from enum import Enum
from typing import Iterable

from ..core.logging import get_logger
from ..models.hypergraph import Hypergraph, MtSet, VertexSet, vertex_set
from ..models.results import TmmResult
from ..utils.bitsets import iter_bits
from .enumeration import apriori_gen
from .transversality import exact_tau

logger = get_logger(__name__)


class TmmMode(str, Enum):
    M2D = "m2d"
    OM2D = "om2d"


def recouvrement(h: Hypergraph, t: Iterable[int]) -> int:
    """Co-members covered by t, counted once per (member, edge) incidence."""
    sizes = [len(edge) for edge in h.edges]
    total = 0
    for x in vertex_set(t):
        total += sum(sizes[e] - 1 for e in iter_bits(h.vertex_edges[h.position(x)]))
    return total


def _is_essential(h: Hypergraph, positions: tuple[int, ...]) -> bool:
    """Every member hits an edge none of the others hit."""
    for y in positions:
        others = 0
        for z in positions:
            if z != y:
                others |= h.vertex_edges[z]
        if h.vertex_edges[y] & ~others == 0:
            return False
    return True


def _smallest_by_levels(h: Hypergraph) -> tuple[int, list[VertexSet]]:
    """Apriori sweep over essential sets, stopping at the first level holding a traverse."""
    full = h.all_edges
    hits: dict[VertexSet, int] = {(v,): h.vertex_edges[p] for p, v in enumerate(h.vertices)}
    level = 1
    while True:
        found = [z for z, hit in hits.items() if hit == full]
        if found:
            return level, found
        next_hits: dict[VertexSet, int] = {}
        for z in apriori_gen(hits):
            hit = hits[z[:-1]] | hits[z[:-2] + z[-1:]]
            if _is_essential(h, tuple(h.position(v) for v in z)):
                next_hits[z] = hit
        level += 1
        logger.debug(f"M2D: {len(next_hits)} essential sets at level {level}")
        # some traverse always exists, so the sweep stops before running dry
        assert next_hits, "essential sets exhausted before reaching a traverse"
        hits = next_hits


def _smallest_by_size(h: Hypergraph, tau: int) -> list[VertexSet]:
    """Depth-first size-tau candidates, pruned as soon as a prefix stops being essential."""
    found: list[VertexSet] = []

    def search(start: int, chosen: tuple[int, ...], hit: int) -> None:
        if len(chosen) == tau:
            if hit == h.all_edges:
                found.append(tuple(h.vertices[p] for p in chosen))
            return
        for p in range(start, h.n - (tau - len(chosen)) + 1):
            extended = chosen + (p,)
            if _is_essential(h, extended):
                search(p + 1, extended, hit | h.vertex_edges[p])

    search(0, (), 0)
    return found


def extract_tmm(h: Hypergraph, mode: TmmMode | str = TmmMode.OM2D) -> TmmResult:
    """Smallest minimal traverses of h and the ones among them with maximal coverage."""
    mode = TmmMode(mode)
    if mode is TmmMode.M2D:
        tau, smallest = _smallest_by_levels(h)
    else:
        tau = exact_tau(h)
        smallest = _smallest_by_size(h, tau)

    coverage = {t: recouvrement(h, t) for t in smallest}
    best = max(coverage.values())
    tmms = [t for t, value in coverage.items() if value == best]
    logger.info(f"{mode.value}: tau={tau}, {len(smallest)} smallest MTs, {len(tmms)} TMMs (coverage {best})")
    return TmmResult(
        tau=tau,
        smallest_mts=MtSet.from_sets(smallest),
        coverage=coverage,
        tmms=MtSet.from_sets(tmms),
    )
