"""
Result models for the transversality, multi-member, irredundant and local pipelines.
"""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator

from .hypergraph import Hypergraph, MtSet, VertexSet


class TransversalityResult(BaseModel):
    """Greedy upper bound on tau next to the exact value."""
    model_config = ConfigDict(frozen=True)

    greedy_k: PositiveInt
    greedy_traverse: VertexSet
    exact_tau: PositiveInt
    tight: bool

    @model_validator(mode="after")
    def _check_bound(self) -> "TransversalityResult":
        if len(self.greedy_traverse) != self.greedy_k:
            raise ValueError("greedy_traverse size differs from greedy_k")
        if self.greedy_k < self.exact_tau:
            raise ValueError("greedy bound below exact tau")
        if self.tight != (self.greedy_k == self.exact_tau):
            raise ValueError("tight flag inconsistent with the two values")
        return self


class TmmResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    tau: PositiveInt
    smallest_mts: MtSet
    coverage: dict[VertexSet, NonNegativeInt]
    tmms: MtSet

    @model_validator(mode="after")
    def _check_tmms(self) -> "TmmResult":
        if any(len(t) != self.tau for t in self.smallest_mts):
            raise ValueError("a smallest MT does not have size tau")
        if any(t not in self.smallest_mts for t in self.tmms):
            raise ValueError("tmms must be a subset of smallest_mts")
        if len({self.coverage[t] for t in self.tmms}) > 1:
            raise ValueError("tmms do not share one coverage value")
        return self

    @property
    def best_coverage(self) -> int:
        return self.coverage[self.tmms[0]] if len(self.tmms) else 0


class VertexGroup(BaseModel):
    """One generalized node: vertices sharing exactly the same edges."""
    model_config = ConfigDict(frozen=True)

    representative: NonNegativeInt
    members: VertexSet
    # None when the group was read back from text
    extent: Optional[tuple[NonNegativeInt, ...]] = None

    @model_validator(mode="after")
    def _check_representative(self) -> "VertexGroup":
        if not self.members or tuple(sorted(set(self.members))) != self.members:
            raise ValueError("members must be a non-empty ascending set")
        if self.representative != self.members[0]:
            raise ValueError(f"representative {self.representative} is not the smallest member")
        return self

    @property
    def size(self) -> int:
        return len(self.members)


class GeneralizedNodes(BaseModel):
    """Partition of the vertex set into generalized nodes, ordered by representative."""
    model_config = ConfigDict(frozen=True)

    groups: tuple[VertexGroup, ...]

    @model_validator(mode="after")
    def _check_partition(self) -> "GeneralizedNodes":
        seen: set[int] = set()
        for group in self.groups:
            if seen & set(group.members):
                raise ValueError(f"group {group.representative} overlaps another group")
            seen.update(group.members)
        extents = [g.extent for g in self.groups if g.extent is not None]
        if len(extents) != len(set(extents)):
            raise ValueError("two groups share one extent")
        return self

    @property
    def representatives(self) -> VertexSet:
        return tuple(sorted(g.representative for g in self.groups))

    def group_of(self, representative: int) -> Optional[VertexGroup]:
        for group in self.groups:
            if group.representative == representative:
                return group
        return None

    def is_trivial(self) -> bool:
        """True when every group is a singleton."""
        return all(g.size == 1 for g in self.groups)


class ImtResult(BaseModel):
    """Output of the irredundant pipeline."""
    model_config = ConfigDict(frozen=True)

    generalized: GeneralizedNodes
    irredundant_h: Hypergraph
    irredundant_mts: MtSet
    compaction: Optional[float] = Field(default=None, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _check_vertices(self) -> "ImtResult":
        if self.irredundant_h.vertices != self.generalized.representatives:
            raise ValueError("irredundant hypergraph vertices must be the representatives")
        return self

    def expanded_count(self) -> int:
        """Size of the full MT family, computed from group sizes without expanding."""
        sizes = {g.representative: g.size for g in self.generalized.groups}
        return sum(math.prod(sizes[v] for v in t) for t in self.irredundant_mts)

    def with_compaction(self) -> "ImtResult":
        from ..algorithms.irredundant import compaction_rate
        theta = compaction_rate(self.expanded_count(), len(self.irredundant_mts))
        return self.model_copy(update={"compaction": theta})


class Decomposition(BaseModel):
    """Edges of H split into one partial hypergraph per pivot vertex."""
    model_config = ConfigDict(frozen=True)

    pivot_mt: VertexSet
    parts: tuple[Hypergraph, ...]
    part_edge_indices: tuple[tuple[NonNegativeInt, ...], ...]

    @model_validator(mode="after")
    def _check_parts(self) -> "Decomposition":
        if not (len(self.pivot_mt) == len(self.parts) == len(self.part_edge_indices)):
            raise ValueError("one part per pivot vertex is required")
        for vertex, part, indices in zip(self.pivot_mt, self.parts, self.part_edge_indices):
            if not indices or part.m != len(indices):
                raise ValueError(f"part of pivot vertex {vertex} is empty or inconsistent")
            if any(vertex not in edge for edge in part.edges):
                raise ValueError(f"part of pivot vertex {vertex} has an edge without it")
        flat = [i for indices in self.part_edge_indices for i in indices]
        if len(flat) != len(set(flat)):
            raise ValueError("parts share an edge")
        return self

    @property
    def size(self) -> int:
        return len(self.parts)


class CombineStats(BaseModel):
    """Counters filled while combining local MTs."""

    unions: int = 0
    accepted_without_test: int = 0
    tested: int = 0
    accepted_after_test: int = 0
    rejected: int = 0
    pruned: int = 0
