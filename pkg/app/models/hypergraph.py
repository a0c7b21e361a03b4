"""
Hypergraph domain models.
A hypergraph keeps its edges as sorted label tuples and mirrors them as integer bitsets
over a dense vertex index, which the enumeration code works on.
"""

from typing import Iterable, Iterator

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PrivateAttr, RootModel, field_validator, model_validator

from ..core.errors import DomainError
from ..utils.bitsets import iter_bits, mask_of

VertexSet = tuple[int, ...]


def vertex_set(items: Iterable[int]) -> VertexSet:
    """Canonical vertex set: ascending, deduplicated."""
    return tuple(sorted(set(items)))


class Hypergraph(BaseModel):
    """
    H = (X, E): an ordered vertex universe and a sequence of non-empty edges covering it.

    Edges are stored in input order. Edge indices are 0-based throughout the library.
    """
    model_config = ConfigDict(frozen=True)

    vertices: tuple[NonNegativeInt, ...]
    edges: tuple[tuple[NonNegativeInt, ...], ...]

    _index: dict[int, int] = PrivateAttr(default_factory=dict)
    _edge_masks: tuple[int, ...] = PrivateAttr(default=())
    _vertex_edges: tuple[int, ...] = PrivateAttr(default=())

    @field_validator("vertices")
    @classmethod
    def _sort_vertices(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        return vertex_set(value)

    @field_validator("edges")
    @classmethod
    def _normalize_edges(cls, value: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        if not value:
            raise ValueError("a hypergraph needs at least one edge")
        edges = tuple(vertex_set(edge) for edge in value)
        for position, edge in enumerate(edges):
            if not edge:
                raise ValueError(f"edge {position} is empty")
        return edges

    @model_validator(mode="after")
    def _check_cover(self) -> "Hypergraph":
        covered = set().union(*self.edges)
        isolated = set(self.vertices) - covered
        if isolated:
            raise ValueError(f"vertices in no edge: {sorted(isolated)}")
        unknown = covered - set(self.vertices)
        if unknown:
            raise ValueError(f"edge labels outside the vertex set: {sorted(unknown)}")
        return self

    def model_post_init(self, __context) -> None:
        self._index = {label: position for position, label in enumerate(self.vertices)}
        self._edge_masks = tuple(mask_of(self._index[v] for v in edge) for edge in self.edges)
        vertex_edges = [0] * len(self.vertices)
        for i, edge in enumerate(self.edges):
            for v in edge:
                vertex_edges[self._index[v]] |= 1 << i
        self._vertex_edges = tuple(vertex_edges)

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build a hypergraph whose vertex set is the union of the given edges."""
        edge_list = [tuple(edge) for edge in edges]
        return cls(vertices=vertex_set(v for edge in edge_list for v in edge), edges=edge_list)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_edges(self) -> int:
        """Bitset holding every edge index."""
        return (1 << len(self.edges)) - 1

    @property
    def edge_masks(self) -> tuple[int, ...]:
        """Per edge, the bitset of dense vertex positions."""
        return self._edge_masks

    @property
    def vertex_edges(self) -> tuple[int, ...]:
        """Per dense vertex position, the bitset of edges containing it."""
        return self._vertex_edges

    def position(self, label: int) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown vertex {label}") from None

    def vertex_mask(self, labels: Iterable[int]) -> int:
        """Bitset of dense positions for the given labels; unknown labels raise DomainError."""
        return mask_of(self.position(v) for v in labels)

    def labels(self, mask: int) -> VertexSet:
        """Vertex set (ascending labels) for a bitset of dense positions."""
        return tuple(self.vertices[p] for p in iter_bits(mask))

    def edges_hit(self, mask: int) -> int:
        """Bitset of edges intersecting the vertex bitset."""
        hit = 0
        for p in iter_bits(mask):
            hit |= self._vertex_edges[p]
        return hit


class MtSet(RootModel[tuple[tuple[NonNegativeInt, ...], ...]]):
    """Canonical family of vertex sets: each set ascending, the family in lexicographic order."""
    model_config = ConfigDict(frozen=True)

    root: tuple[tuple[NonNegativeInt, ...], ...] = ()

    @field_validator("root")
    @classmethod
    def _canonical(cls, value: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({vertex_set(member) for member in value}))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "MtSet":
        return cls(tuple(tuple(s) for s in sets))

    def __iter__(self) -> Iterator[VertexSet]:  # type: ignore[override]
        return iter(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def __contains__(self, item: object) -> bool:
        if not isinstance(item, (tuple, list, set, frozenset)):
            return False
        return vertex_set(item) in set(self.root)

    def __getitem__(self, index: int) -> VertexSet:
        return self.root[index]

    def of_size(self, size: int) -> "MtSet":
        return MtSet(tuple(member for member in self.root if len(member) == size))

    def min_size(self) -> int:
        return min((len(member) for member in self.root), default=0)

    def is_antichain(self) -> bool:
        """True when no member is a proper subset of another."""
        members = [frozenset(member) for member in self.root]
        return not any(a < b for a in members for b in members)

    def lines(self) -> list[str]:
        return [" ".join(str(v) for v in member) for member in self.root]


class HypergraphProfile(BaseModel):
    """Order, size, rank, anti-rank and simplicity of a hypergraph."""
    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    rank: int
    antirank: int
    simple: bool

    @model_validator(mode="after")
    def _check_ranks(self) -> "HypergraphProfile":
        if self.antirank > self.rank:
            raise ValueError("antirank exceeds rank")
        return self
