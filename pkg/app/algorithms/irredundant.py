"""
Irredundant representation of minimal traverses.

Vertices with identical extents are interchangeable in every minimal traverse, so each
group is replaced by its smallest member, the reduced hypergraph is enumerated, and the
full family is recovered by substitution.
"""

import itertools
from typing import Iterable, Iterator

from pydantic import ValidationError

from ..core.errors import DomainError, ParseError, PreconditionError
from ..core.logging import get_logger
from ..models.hypergraph import Hypergraph, MtSet, VertexSet, vertex_set
from ..models.results import GeneralizedNodes, ImtResult, VertexGroup
from ..utils.bitsets import iter_bits
from .enumeration import Backend, enumerate_mts
from .hypergraph import require_simple

logger = get_logger(__name__)


def search_substitution(h: Hypergraph) -> GeneralizedNodes:
    """Group the vertices of h by extent."""
    by_extent: dict[int, list[int]] = {}
    for position, label in enumerate(h.vertices):
        by_extent.setdefault(h.vertex_edges[position], []).append(label)

    groups = [
        VertexGroup(representative=members[0], members=tuple(members), extent=tuple(iter_bits(mask)))
        for mask, members in by_extent.items()
    ]
    groups.sort(key=lambda g: g.representative)
    logger.debug(f"Search substitution: {len(groups)} groups over {h.n} vertices")
    return GeneralizedNodes(groups=tuple(groups))


def build_irredundant(h: Hypergraph, gn: GeneralizedNodes) -> Hypergraph:
    """Restrict every edge of h to the representatives."""
    members = sorted(v for g in gn.groups for v in g.members)
    if tuple(members) != h.vertices:
        raise PreconditionError("generalized nodes do not partition the vertex set")
    for group in gn.groups:
        extents = {h.vertex_edges[h.position(v)] for v in group.members}
        if len(extents) != 1:
            raise PreconditionError(f"members of group {group.representative} have different extents")

    reps = set(gn.representatives)
    edges = [tuple(v for v in edge if v in reps) for edge in h.edges]
    for i, edge in enumerate(edges):
        if not edge:
            raise PreconditionError(f"edge {i} holds no representative")
    return Hypergraph(vertices=gn.representatives, edges=edges)


def imt_extract(h: Hypergraph, backend: Backend | str = Backend.MMCS) -> ImtResult:
    """Substitution search, irredundant hypergraph, then enumeration of its minimal traverses."""
    require_simple(h)
    gn = search_substitution(h)
    reduced = build_irredundant(h, gn)
    mts = enumerate_mts(reduced, backend)
    logger.info(f"Irredundant pipeline: {h.n} -> {reduced.n} vertices, {len(mts)} irredundant MTs")
    return ImtResult(generalized=gn, irredundant_h=reduced, irredundant_mts=mts)


def _expand_one(t: VertexSet, groups: dict[int, VertexGroup]) -> Iterator[VertexSet]:
    choices = []
    for v in t:
        group = groups.get(v)
        if group is None:
            raise DomainError(f"{v} is not a representative")
        choices.append(group.members)
    for combination in itertools.product(*choices):
        yield vertex_set(combination)


def iter_expand(irredundant_mts: Iterable[VertexSet], gn: GeneralizedNodes) -> Iterator[VertexSet]:
    """Every expansion of every irredundant MT, one at a time; nothing is collected."""
    groups = {g.representative: g for g in gn.groups}
    for t in irredundant_mts:
        yield from _expand_one(t, groups)


def expand_mts(irredundant_mts: MtSet, gn: GeneralizedNodes) -> MtSet:
    """Replace each representative by every member of its group, in all combinations."""
    return MtSet.from_sets(iter_expand(irredundant_mts, gn))


def compaction_rate(full_count: int, irredundant_count: int) -> float:
    """Fraction of minimal traverses recoverable by substitution."""
    if full_count <= 0:
        raise PreconditionError("compaction rate needs a non-zero MT count")
    if irredundant_count <= 0:
        raise PreconditionError("compaction rate needs at least one irredundant MT")
    if irredundant_count > full_count:
        raise PreconditionError(f"irredundant count {irredundant_count} exceeds full count {full_count}")
    return (full_count - irredundant_count) / full_count


def format_generalized_nodes(gn: GeneralizedNodes) -> list[str]:
    return [f"{g.representative}: {' '.join(str(v) for v in g.members)}" for g in gn.groups]


def parse_generalized_nodes(text: str) -> GeneralizedNodes:
    """Read "rep: m1 m2 ..." lines; '#' comments and blank lines are skipped."""
    groups = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        tokens = tail.split()
        if not sep or not all(tok.isascii() and tok.isdigit() for tok in [head.strip(), *tokens]):
            raise ParseError(f"expected 'rep: m1 m2 ...', got {line!r}", line=line_no)
        try:
            groups.append(VertexGroup(representative=int(head), members=vertex_set(int(t) for t in tokens)))
        except ValidationError as e:
            raise ParseError(e.errors()[0]["msg"], line=line_no) from None
    try:
        return GeneralizedNodes(groups=tuple(sorted(groups, key=lambda g: g.representative)))
    except ValidationError as e:
        raise ParseError(e.errors()[0]["msg"]) from None
