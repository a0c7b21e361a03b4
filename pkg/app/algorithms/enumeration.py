"""
Minimal traverse enumeration backends: Berge, MTMiner and MMCS.

Every backend is a generator over the minimal traverses of a simple hypergraph; the
collecting wrapper `enumerate_mts` canonicalizes them into an MtSet.
"""

from enum import Enum
from typing import Callable, Iterable, Iterator, Optional

from ..core.errors import PreconditionError
from ..core.logging import get_logger
from ..models.hypergraph import Hypergraph, MtSet, VertexSet, vertex_set
from ..utils.bitsets import iter_bits, minimize_masks
from .hypergraph import require_simple

logger = get_logger(__name__)


class Backend(str, Enum):
    """Closed set of complete enumeration backends."""
    BERGE = "berge"
    MTMINER = "mtminer"
    MMCS = "mmcs"


class Algorithm(str, Enum):
    """Backends plus the divide-and-conquer pipeline."""
    BERGE = "berge"
    MTMINER = "mtminer"
    MMCS = "mmcs"
    LOCAL = "local"


# Berge

def iter_berge(h: Hypergraph) -> Iterator[VertexSet]:
    """
    Incremental products: after edge i the level holds exactly the minimal traverses of
    the first i edges. Intermediate levels are fully materialized.
    """
    level = [0]
    for i, edge in enumerate(h.edge_masks):
        extended = []
        for t in level:
            if t & edge:
                extended.append(t)
            else:
                extended.extend(t | (1 << v) for v in iter_bits(edge))
        level = minimize_masks(extended)
        logger.debug(f"Berge: {len(level)} traverses after edge {i}")
    for t in level:
        yield h.labels(t)


def enumerate_berge(h: Hypergraph) -> MtSet:
    require_simple(h)
    return MtSet.from_sets(iter_berge(h))


# MTMiner

def gh(h: Hypergraph, x: Iterable[int]) -> frozenset[int]:
    """Indices of the edges sharing no vertex with x."""
    return frozenset(iter_bits(h.all_edges & ~h.edges_hit(h.vertex_mask(x))))


def apriori_gen(level: Iterable[VertexSet]) -> list[VertexSet]:
    """
    Join k-sets sharing their (k-1)-prefix and keep the (k+1)-candidates whose every
    k-subset is in the level.
    """
    members = sorted({vertex_set(s) for s in level})
    if not members:
        return []
    sizes = {len(s) for s in members}
    if len(sizes) != 1:
        raise PreconditionError(f"apriori_gen needs equal-size sets, got sizes {sorted(sizes)}")
    k = sizes.pop()
    if k < 1:
        raise PreconditionError("apriori_gen needs sets of size at least 1")

    present = set(members)
    by_prefix: dict[VertexSet, list[int]] = {}
    for s in members:
        by_prefix.setdefault(s[:-1], []).append(s[-1])

    candidates = []
    for prefix, tails in by_prefix.items():
        for a_pos, a in enumerate(tails):
            for b in tails[a_pos + 1:]:
                candidate = prefix + (a, b)
                if all(candidate[:i] + candidate[i + 1:] in present for i in range(k - 1)):
                    candidates.append(candidate)
    return candidates


def iter_mtminer(h: Hypergraph) -> Iterator[VertexSet]:
    """
    Level-wise search for minimal generators of zero frequency, where the frequency of Z
    is the number of edges Z misses.
    """
    m = h.m
    generators: dict[VertexSet, int] = {}
    for position, label in enumerate(h.vertices):
        missed = h.all_edges & ~h.vertex_edges[position]
        count = missed.bit_count()
        # a vertex in no edge cannot exist in a Hypergraph
        assert count < m, f"vertex {label} belongs to no edge"
        if count == 0:
            yield (label,)
        else:
            generators[(label,)] = missed

    k = 1
    while generators:
        next_generators: dict[VertexSet, int] = {}
        for z in apriori_gen(generators):
            missed = generators[z[:-1]] & generators[z[:-2] + z[-1:]]
            count = missed.bit_count()
            if all(count < generators[z[:i] + z[i + 1:]].bit_count() for i in range(len(z))):
                if missed == 0:
                    yield z
                else:
                    next_generators[z] = missed
        k += 1
        logger.debug(f"MTMiner: {len(next_generators)} generators at level {k}")
        generators = next_generators


def enumerate_mtminer(h: Hypergraph) -> MtSet:
    require_simple(h)
    return MtSet.from_sets(iter_mtminer(h))


# MMCS

class CritState:
    """
    Search state of MMCS for a partial solution X.

    uncov: edges missed by X; cand: vertices still allowed; crit[x]: edges meeting X only in x.
    All sets are bitsets (edges by index, vertices by dense position).
    """

    def __init__(self, h: Hypergraph):
        self.h = h
        self.solution: list[int] = []
        self.uncov = h.all_edges
        self.cand = (1 << h.n) - 1
        self.crit: dict[int, int] = {}

    @classmethod
    def for_solution(cls, h: Hypergraph, x: Iterable[int]) -> "CritState":
        """State reached by adding the labels of x one by one, in the given order."""
        state = cls(h)
        for label in x:
            state.add(h.position(label))
        return state

    def add(self, v: int) -> list[tuple[int, int]]:
        """Add vertex position v; returns the undo record for `remove`."""
        hit = self.h.vertex_edges[v]
        undo = [(u, self.crit[u]) for u in self.solution]
        undo.append((-1, self.uncov))
        for u in self.solution:
            self.crit[u] &= ~hit
        self.crit[v] = self.uncov & hit
        self.uncov &= ~hit
        self.solution.append(v)
        return undo

    def remove(self, undo: list[tuple[int, int]]) -> None:
        v = self.solution.pop()
        del self.crit[v]
        for u, value in undo:
            if u < 0:
                self.uncov = value
            else:
                self.crit[u] = value

    def is_minimal_so_far(self) -> bool:
        return all(self.crit[u] for u in self.solution)

    def crit_of(self, label: int) -> frozenset[int]:
        return frozenset(iter_bits(self.crit.get(self.h.position(label), 0)))

    def uncovered(self) -> frozenset[int]:
        return frozenset(iter_bits(self.uncov))

    def candidates(self) -> VertexSet:
        return self.h.labels(self.cand)

    def pick_edge(self) -> int:
        """Uncovered edge with the fewest candidate vertices, lowest index on ties."""
        masks = self.h.edge_masks
        return min(iter_bits(self.uncov), key=lambda e: ((masks[e] & self.cand).bit_count(), e))


def iter_mmcs(h: Hypergraph) -> Iterator[VertexSet]:
    """Depth-first search keeping every chosen vertex critical."""
    state = CritState(h)

    def search() -> Iterator[VertexSet]:
        if state.uncov == 0:
            yield vertex_set(h.vertices[p] for p in state.solution)
            return
        edge = state.pick_edge()
        branch = state.cand & h.edge_masks[edge]
        state.cand &= ~branch
        for v in iter_bits(branch):
            undo = state.add(v)
            if state.is_minimal_so_far():
                yield from search()
            state.remove(undo)
            state.cand |= 1 << v

    yield from search()


def enumerate_mmcs(h: Hypergraph) -> MtSet:
    require_simple(h)
    return MtSet.from_sets(iter_mmcs(h))


# Dispatch

_BACKENDS: dict[Backend, Callable[[Hypergraph], Iterator[VertexSet]]] = {
    Backend.BERGE: iter_berge,
    Backend.MTMINER: iter_mtminer,
    Backend.MMCS: iter_mmcs,
}


def iter_minimal_traverses(h: Hypergraph, backend: Backend | str = Backend.MMCS) -> Iterator[VertexSet]:
    """Streaming contract: minimal traverses in discovery order."""
    require_simple(h)
    return _BACKENDS[Backend(backend)](h)


def enumerate_mts(
    h: Hypergraph,
    backend: Backend | str = Backend.MMCS,
    on_traverse: Optional[Callable[[VertexSet], None]] = None,
) -> MtSet:
    """Collect every minimal traverse of a simple hypergraph into a canonical MtSet."""
    found = []
    for t in iter_minimal_traverses(h, backend):
        if on_traverse is not None:
            on_traverse(t)
        found.append(t)
    logger.debug(f"{Backend(backend).value}: {len(found)} minimal traverses (n={h.n}, m={h.m})")
    return MtSet.from_sets(found)


def iter_algorithm(h: Hypergraph, algorithm: Algorithm | str) -> Iterator[VertexSet]:
    """Stream for a backend or the local pipeline."""
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.LOCAL:
        from .localgen import iter_local
        return iter_local(h)
    return iter_minimal_traverses(h, Backend(algorithm.value))


def run_algorithm(h: Hypergraph, algorithm: Algorithm | str) -> MtSet:
    return MtSet.from_sets(iter_algorithm(h, algorithm))
