"""
Transversality number: a greedy upper bound and an exact branch-and-bound.
"""

from typing import Optional

from ..core.logging import get_logger
from ..models.hypergraph import Hypergraph, VertexSet
from ..models.results import TransversalityResult
from ..utils.bitsets import iter_bits, mask_of

logger = get_logger(__name__)

_INFINITY = float("inf")


def _support_in(h: Hypergraph, position: int, residual: int) -> int:
    return (h.vertex_edges[position] & residual).bit_count()


def greedy_transversality(h: Hypergraph) -> tuple[int, VertexSet]:
    """
    For every starting vertex, remove its edges and keep removing the edges of a
    maximum-support vertex of what remains, branching over all such vertices.

    Returns the smallest number of removals found together with the chosen vertices.
    """
    memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    def hyp_empty(residual: int) -> tuple[int, tuple[int, ...]]:
        if residual == 0:
            return 0, ()
        if residual in memo:
            return memo[residual]
        supports = [_support_in(h, p, residual) for p in range(h.n)]
        top = max(supports)
        best: tuple[float, tuple[int, ...]] = (_INFINITY, ())
        for p, s in enumerate(supports):
            if s != top:
                continue
            count, chosen = hyp_empty(residual & ~h.vertex_edges[p])
            if count + 1 < best[0]:
                best = (count + 1, (p,) + chosen)
        memo[residual] = best  # type: ignore[assignment]
        return memo[residual]

    best_k: float = _INFINITY
    best_positions: tuple[int, ...] = ()
    for start in range(h.n):
        count, chosen = hyp_empty(h.all_edges & ~h.vertex_edges[start])
        if count + 1 < best_k:
            best_k = count + 1
            best_positions = (start,) + chosen

    traverse = h.labels(mask_of(best_positions))
    logger.debug(f"Greedy transversality: k={int(best_k)} with {traverse}")
    return int(best_k), traverse


def _disjoint_edges(h: Hypergraph, uncov: int) -> int:
    """Number of pairwise-disjoint uncovered edges picked smallest first; a lower bound on what is left."""
    used = 0
    count = 0
    for e in sorted(iter_bits(uncov), key=lambda i: (h.edge_masks[i].bit_count(), i)):
        if h.edge_masks[e] & used == 0:
            used |= h.edge_masks[e]
            count += 1
    return count


def exact_tau(h: Hypergraph) -> int:
    """Size of a smallest hitting set."""
    upper, _ = greedy_transversality(h)
    best = upper

    def search(uncov: int, size: int) -> None:
        nonlocal best
        if uncov == 0:
            best = min(best, size)
            return
        if size + _disjoint_edges(h, uncov) >= best:
            return
        edge = min(iter_bits(uncov), key=lambda i: (h.edge_masks[i].bit_count(), i))
        for p in iter_bits(h.edge_masks[edge]):
            search(uncov & ~h.vertex_edges[p], size + 1)

    search(h.all_edges, 0)
    logger.debug(f"Exact tau={best} (greedy bound {upper})")
    return best


def minimum_traverse(h: Hypergraph, tau: Optional[int] = None) -> VertexSet:
    """Lexicographically smallest hitting set of size tau(h)."""
    size = exact_tau(h) if tau is None else tau
    masks = h.edge_masks

    def search(start: int, chosen: int, uncov: int, remaining: int) -> Optional[int]:
        if uncov == 0:
            return chosen
        if remaining == 0 or _disjoint_edges(h, uncov) > remaining:
            return None
        allowed = ~((1 << start) - 1)
        if any(masks[e] & allowed == 0 for e in iter_bits(uncov)):
            return None
        for p in range(start, h.n):
            if not h.vertex_edges[p] & uncov:
                continue
            found = search(p + 1, chosen | (1 << p), uncov & ~h.vertex_edges[p], remaining - 1)
            if found is not None:
                return found
        return None

    found = search(0, 0, h.all_edges, size)
    # tau always admits a witness
    assert found is not None, f"no hitting set of size {size}"
    return h.labels(found)


def transversality_report(h: Hypergraph) -> TransversalityResult:
    k, traverse = greedy_transversality(h)
    tau = exact_tau(h)
    if k != tau:
        logger.info(f"Greedy bound not tight: greedy={k}, exact={tau}")
    return TransversalityResult(greedy_k=k, greedy_traverse=traverse, exact_tau=tau, tight=k == tau)
