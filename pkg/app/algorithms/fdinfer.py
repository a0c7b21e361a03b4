"""
Functional dependency inference through minimal traverses.

For each attribute A the complements of the maximal agree sets without A form a hypergraph
whose minimal traverses are exactly the minimal premises determining A.
"""

import io
import re
from typing import Optional, Sequence, TextIO

import numpy as np
import pandas as pd
from pydantic import ValidationError

from ..core.errors import ParseError, PreconditionError
from ..core.logging import get_logger
from ..models.hypergraph import Hypergraph, MtSet
from ..models.relation import AgreeSetTable, AttributeSet, ConditionalFd, Fd, FdCover, Relation
from ..models.results import GeneralizedNodes
from ..utils.bitsets import is_subset, iter_bits, mask_of
from .enumeration import Backend, enumerate_mts
from .hypergraph import min_reduce
from .irredundant import expand_mts, imt_extract

logger = get_logger(__name__)

_PARSER_LINE = re.compile(r"line (\d+)")


def _read_frame(source: str | TextIO, **options) -> pd.DataFrame:
    """Every cell as an exact string; short rows come back padded with NaN, blank lines as all-NaN rows."""
    try:
        return pd.read_csv(
            source,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            **options,
        )
    except pd.errors.EmptyDataError:
        raise ParseError("missing header row") from None
    except pd.errors.ParserError as e:
        found = _PARSER_LINE.search(str(e))
        raise ParseError(str(e).strip(), line=int(found.group(1)) if found else None) from None


def _frame_to_relation(frame: pd.DataFrame) -> Relation:
    frame = frame[~frame.isna().all(axis=1)]
    if frame.empty:
        raise ParseError("missing header row")
    short = frame.isna().any(axis=1)
    if short.any():
        index = short.idxmax()
        count = int(frame.loc[index].notna().sum())
        raise ParseError(f"{count} values, expected {frame.shape[1]}", line=int(index) + 1)

    header_line = int(frame.index[0]) + 1
    header = tuple(frame.iloc[0])
    rows = tuple(frame.iloc[1:].itertuples(index=False, name=None))
    try:
        return Relation(attributes=header, tuples=rows)
    except ValidationError as e:
        raise ParseError(e.errors()[0]["msg"], line=header_line) from None


def parse_relation(source: str | TextIO) -> Relation:
    """CSV with a header row; values are kept as exact strings, blank lines skipped."""
    if isinstance(source, str):
        source = io.StringIO(source)
    return _frame_to_relation(_read_frame(source))


def load_relation(path: str) -> Relation:
    return _frame_to_relation(_read_frame(path, encoding="utf-8-sig"))


def _encode(r: Relation) -> np.ndarray:
    """Column-wise integer codes; equal codes in a column mean equal strings."""
    frame = pd.DataFrame(list(r.tuples), columns=list(r.attributes), dtype=str)
    codes = [pd.factorize(frame[name])[0] for name in r.attributes]
    return np.column_stack(codes).astype(np.int64).reshape(len(r.tuples), r.arity)


def _require_pairs(r: Relation) -> None:
    if len(r.tuples) < 2:
        raise PreconditionError(f"agree sets need at least 2 tuples, got {len(r.tuples)}")


def agree_sets(r: Relation) -> AgreeSetTable:
    _require_pairs(r)
    codes = _encode(r)
    entries: dict[AttributeSet, list[tuple[int, int]]] = {}
    for i in range(len(r.tuples) - 1):
        equal = codes[i + 1:] == codes[i]
        for offset, row in enumerate(equal):
            key = tuple(int(p) for p in np.flatnonzero(row))
            entries.setdefault(key, []).append((i, i + 1 + offset))
    logger.debug(f"{len(entries)} distinct agree sets over {len(r.tuples)} tuples")
    return AgreeSetTable(attributes=r.attributes, entries={k: tuple(v) for k, v in entries.items()})


def _position(attributes: Sequence[str], a: str) -> int:
    return Relation(attributes=tuple(attributes)).position(a)


def max_sets(ag: AgreeSetTable, a: str) -> list[AttributeSet]:
    """Inclusion-maximal agree sets not containing a."""
    position = _position(ag.attributes, a)
    candidates = [mask_of(s) for s in ag.sets() if position not in s]
    maximal = [c for c in candidates if not any(c != d and is_subset(c, d) for d in candidates)]
    return sorted(tuple(iter_bits(c)) for c in maximal)


def cmax_sets(maxs: Sequence[AttributeSet], a: str, attributes: Sequence[str]) -> list[AttributeSet]:
    """Complements of the max sets, a removed; an empty complement is kept and marks a as undeterminable."""
    position = _position(attributes, a)
    complements = {
        tuple(p for p in range(len(attributes)) if p not in x and p != position)
        for x in maxs
    }
    if () in complements:
        logger.debug(f"cmax({a}) holds the empty set")
    return sorted(complements)


def attribute_hypergraph(cmax: Sequence[AttributeSet]) -> Optional[Hypergraph]:
    """Simple hypergraph over attribute positions, or None when the attribute is skipped."""
    if not cmax or any(len(edge) == 0 for edge in cmax):
        return None
    return min_reduce(Hypergraph.from_edges(cmax))


def holds(r: Relation, fd: Fd) -> bool:
    """Direct pairwise check of fd on r."""
    premise = [r.position(name) for name in fd.premise]
    conclusion = r.position(fd.conclusion)
    seen: dict[tuple[str, ...], str] = {}
    for row in r.tuples:
        key = tuple(row[p] for p in premise)
        if seen.setdefault(key, row[conclusion]) != row[conclusion]:
            return False
    return True


def _constant_fd(r: Relation, a: str) -> Optional[Fd]:
    fd = Fd(premise=(), conclusion=a)
    if holds(r, fd):
        return fd
    logger.warning(f"No agree set lacks {a!r} yet {a!r} is not constant")
    return None


def _attribute_pipeline(r: Relation, ag: AgreeSetTable, a: str) -> tuple[Optional[Hypergraph], Optional[Fd]]:
    """The cmax hypergraph of a, or the constant dependency when a never differs."""
    maxs = max_sets(ag, a)
    if not maxs:
        return None, _constant_fd(r, a)
    hypergraph = attribute_hypergraph(cmax_sets(maxs, a, r.attributes))
    if hypergraph is None:
        logger.debug(f"Attribute {a!r} skipped: some pair agrees everywhere else")
    return hypergraph, None


def minimal_cover(r: Relation, backend: Backend | str = Backend.MMCS) -> FdCover:
    ag = agree_sets(r)
    fds: list[Fd] = []
    for a in r.attributes:
        hypergraph, constant = _attribute_pipeline(r, ag, a)
        if constant is not None:
            fds.append(constant)
        if hypergraph is None:
            continue
        for premise in enumerate_mts(hypergraph, backend):
            fds.append(Fd(premise=r.names(premise), conclusion=a))
    logger.info(f"Minimal cover: {len(fds)} dependencies")
    return FdCover(attributes=r.attributes, fds=tuple(fds))


def concise_cover(r: Relation, backend: Backend | str = Backend.MMCS) -> FdCover:
    """Irredundant premises per attribute, with the groups needed to expand them."""
    ag = agree_sets(r)
    fds: list[Fd] = []
    groups: dict[str, GeneralizedNodes] = {}
    for a in r.attributes:
        hypergraph, constant = _attribute_pipeline(r, ag, a)
        if constant is not None:
            fds.append(constant)
        if hypergraph is None:
            continue
        result = imt_extract(hypergraph, backend)
        groups[a] = result.generalized
        for premise in result.irredundant_mts:
            fds.append(Fd(premise=r.names(premise), conclusion=a))
    logger.info(f"Concise cover: {len(fds)} dependencies")
    return FdCover(attributes=r.attributes, fds=tuple(fds), per_attribute_gn=groups)


def expand_cover(concise: FdCover) -> FdCover:
    if concise.per_attribute_gn is None:
        raise PreconditionError("cover carries no generalized nodes to expand with")
    schema = Relation(attributes=concise.attributes)
    fds: list[Fd] = []
    for fd in concise.fds:
        gn = concise.per_attribute_gn.get(fd.conclusion)
        if not fd.premise or gn is None:
            fds.append(fd)
            continue
        premise = tuple(sorted(schema.position(name) for name in fd.premise))
        for expanded in expand_mts(MtSet.from_sets([premise]), gn):
            fds.append(Fd(premise=schema.names(expanded), conclusion=fd.conclusion))
    return FdCover(attributes=concise.attributes, fds=tuple(fds))


def _holds_on_pairs(r: Relation, premise: int, conclusion: int, pairs: Sequence[tuple[int, int]]) -> bool:
    rows = r.tuples
    return all(
        rows[i][premise] != rows[j][premise] or rows[i][conclusion] == rows[j][conclusion]
        for i, j in pairs
    )


def conditional_fds(r: Relation, a: str, gn: GeneralizedNodes, ag: AgreeSetTable) -> list[ConditionalFd]:
    """
    member -> representative for every non-trivial group of a's hypergraph, valid on the
    tuples whose pairs produced the max sets of a.
    """
    pairs = sorted({pair for x in max_sets(ag, a) for pair in ag.pairs_for(x)})
    tuples = tuple(sorted({i for pair in pairs for i in pair}))
    sub_pairs = [(i, j) for k, i in enumerate(tuples) for j in tuples[k + 1:]]

    found = []
    for group in gn.groups:
        for member in group.members[1:]:
            if not _holds_on_pairs(r, member, group.representative, pairs):
                # members of one group agree on exactly the same generating pairs
                logger.warning(f"{r.attributes[member]} -> {r.attributes[group.representative]} fails on its pairs")
                continue
            found.append(ConditionalFd(
                fd=Fd(premise=(r.attributes[member],), conclusion=r.attributes[group.representative]),
                tuples=tuples,
                pairs=tuple(pairs),
                holds_on_subrelation=_holds_on_pairs(r, member, group.representative, sub_pairs),
            ))
    return found


def conditional_cover(r: Relation, concise: FdCover) -> dict[str, list[ConditionalFd]]:
    """Conditional dependencies for every attribute with a non-trivial grouping."""
    if concise.per_attribute_gn is None:
        raise PreconditionError("cover carries no generalized nodes")
    ag = agree_sets(r)
    return {
        a: conditional_fds(r, a, gn, ag)
        for a, gn in concise.per_attribute_gn.items()
        if not gn.is_trivial()
    }


def format_attribute_groups(attributes: Sequence[str], gn: GeneralizedNodes) -> list[str]:
    """ "rep: members" lines of the non-trivial groups, with attribute names."""
    return [
        f"{attributes[g.representative]}: {' '.join(attributes[p] for p in g.members)}"
        for g in gn.groups
        if g.size > 1
    ]
