"""
Core hypergraph operations: text IO, incidence predicates and structural transforms.
"""

import math
from typing import Iterable, TextIO

import numpy as np
from pydantic import ValidationError

from ..core.errors import DomainError, ParseError, PreconditionError
from ..core.logging import get_logger
from ..models.hypergraph import Hypergraph, HypergraphProfile, VertexSet, vertex_set
from ..utils.bitsets import iter_bits

logger = get_logger(__name__)


def _read_text(source: str | TextIO) -> str:
    return source if isinstance(source, str) else source.read()


def parse_hypergraph(source: str | TextIO) -> Hypergraph:
    """
    Parse the .dat format: one edge per line, whitespace-separated non-negative labels.

    Lines starting with '#' and blank lines are skipped; duplicate labels in a line collapse.
    """
    edges: list[VertexSet] = []
    for line_no, raw in enumerate(_read_text(source).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        labels = []
        for token in line.split():
            if not (token.isascii() and token.isdigit()):
                raise ParseError(f"not a non-negative integer: {token!r}", line=line_no)
            labels.append(int(token))
        edges.append(vertex_set(labels))

    if not edges:
        raise ParseError("no edges in input")

    logger.debug(f"Parsed {len(edges)} edges")
    return Hypergraph.from_edges(edges)


def serialize_hypergraph(h: Hypergraph) -> str:
    """Canonical .dat text: stored edge order, ascending labels, single spaces, LF endings."""
    return "".join(" ".join(str(v) for v in edge) + "\n" for edge in h.edges)


def load_hypergraph(path: str) -> Hypergraph:
    with open(path, encoding="utf-8") as handle:
        return parse_hypergraph(handle)


def support(h: Hypergraph, x: Iterable[int]) -> int:
    """Number of edges intersecting x."""
    return h.edges_hit(h.vertex_mask(x)).bit_count()


def extent(h: Hypergraph, x: int) -> frozenset[int]:
    """Indices of the edges containing vertex x."""
    return frozenset(iter_bits(h.vertex_edges[h.position(x)]))


def is_traverse(h: Hypergraph, t: Iterable[int]) -> bool:
    return h.edges_hit(h.vertex_mask(t)) == h.all_edges


def is_minimal_traverse(h: Hypergraph, t: Iterable[int]) -> bool:
    """Support characterization: full support, and every single removal loses support."""
    members = vertex_set(t)
    if support(h, members) != h.m:
        return False
    return all(support(h, [v for v in members if v != x]) < h.m for x in members)


def is_minimal_traverse_crit(h: Hypergraph, t: Iterable[int]) -> bool:
    """Private-edge characterization: traverse, and each member is alone in some edge."""
    members = vertex_set(t)
    mask = h.vertex_mask(members)
    if h.edges_hit(mask) != h.all_edges:
        return False
    for x in members:
        bit = 1 << h.position(x)
        if not any(edge & mask == bit for edge in h.edge_masks):
            return False
    return True


def min_reduce(h: Hypergraph) -> Hypergraph:
    """Drop duplicate edges and every edge containing another one; the result is simple."""
    masks = h.edge_masks
    kept: list[int] = []
    for i, mask in enumerate(masks):
        dominated = False
        for j, other in enumerate(masks):
            if i == j:
                continue
            if other & ~mask == 0 and (other != mask or j < i):
                dominated = True
                break
        if not dominated:
            kept.append(i)

    if len(kept) == h.m:
        return h
    logger.debug(f"min_reduce kept {len(kept)} of {h.m} edges")
    return Hypergraph.from_edges(h.edges[i] for i in kept)


def is_simple(h: Hypergraph) -> bool:
    masks = h.edge_masks
    return not any(
        i != j and a & ~b == 0
        for i, a in enumerate(masks)
        for j, b in enumerate(masks)
    )


def require_simple(h: Hypergraph) -> None:
    if not is_simple(h):
        raise PreconditionError("hypergraph is not simple; apply min_reduce first")


def incidence_matrix(h: Hypergraph) -> np.ndarray:
    """IM_H as an m x n 0/1 matrix, columns in ascending vertex order."""
    matrix = np.zeros((h.m, h.n), dtype=np.uint8)
    for i, edge in enumerate(h.edges):
        matrix[i, [h.position(v) for v in edge]] = 1
    return matrix


def dual(h: Hypergraph) -> Hypergraph:
    """Transpose of the incidence matrix: vertices become edge indices, one edge per vertex."""
    transposed = incidence_matrix(h).T
    edges = [tuple(int(i) for i in np.flatnonzero(row)) for row in transposed]
    return Hypergraph(vertices=tuple(range(h.m)), edges=edges)


def partial_hypergraph(h: Hypergraph, edge_indices: Iterable[int]) -> Hypergraph:
    """Restriction of h to the given edges (ascending index order)."""
    indices = sorted(set(edge_indices))
    if not indices:
        raise PreconditionError("partial hypergraph needs at least one edge index")
    if indices[0] < 0 or indices[-1] >= h.m:
        raise PreconditionError(f"edge index out of range 0..{h.m - 1}")
    if len(indices) == h.m:
        return h
    return Hypergraph.from_edges(h.edges[i] for i in indices)


def profile(h: Hypergraph) -> HypergraphProfile:
    sizes = [len(edge) for edge in h.edges]
    return HypergraphProfile(n=h.n, m=h.m, rank=max(sizes), antirank=min(sizes), simple=is_simple(h))


def sperner_bound_holds(h: Hypergraph) -> bool:
    """For a simple hypergraph of order n, m never exceeds C(n, n // 2)."""
    return h.m <= math.comb(h.n, h.n // 2)


def relabel(h: Hypergraph, mapping: dict[int, int]) -> Hypergraph:
    """Apply a vertex relabeling; every vertex must be mapped."""
    try:
        return Hypergraph.from_edges([mapping[v] for v in edge] for edge in h.edges)
    except KeyError as e:
        raise DomainError(f"vertex {e.args[0]} has no image") from None
    except ValidationError as e:
        raise PreconditionError(f"relabeling produced an invalid hypergraph: {e}") from None
