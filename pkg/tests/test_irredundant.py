import itertools
import math

import pytest

from app.algorithms.enumeration import Backend, enumerate_mts
from app.algorithms.genbench import gen_worst_case
from app.algorithms.hypergraph import is_minimal_traverse
from app.algorithms.irredundant import (
    build_irredundant,
    compaction_rate,
    expand_mts,
    format_generalized_nodes,
    imt_extract,
    iter_expand,
    parse_generalized_nodes,
    search_substitution,
)
from app.core.errors import DomainError, ParseError, PreconditionError
from app.models.hypergraph import Hypergraph, MtSet
from app.models.results import GeneralizedNodes, VertexGroup

from conftest import HYP2_MTS, random_instances

HYP2_IRREDUNDANT = MtSet.from_sets([(2, 7), (1, 3, 7), (1, 3, 8), (2, 3, 8), (2, 5, 8)])


def test_groups_of_the_worked_example(hyp2):
    gn = search_substitution(hyp2)
    assert gn.representatives == (1, 2, 3, 5, 7, 8)
    assert [g.members for g in gn.groups] == [(1,), (2,), (3, 4), (5, 6), (7,), (8, 9)]
    assert gn.group_of(3).extent == (1, 2)


def test_no_groups_without_shared_extents(clone):
    gn = search_substitution(clone)
    assert gn.is_trivial()
    assert len(gn.groups) == clone.n == 5


def test_identical_edges_give_one_group():
    gn = search_substitution(Hypergraph.from_edges([(1, 2, 3)]))
    assert [g.members for g in gn.groups] == [(1, 2, 3)]


def test_irredundant_hypergraph(hyp2):
    reduced = build_irredundant(hyp2, search_substitution(hyp2))
    assert reduced.edges == ((1, 2), (2, 3), (3, 5, 7), (7, 8))
    assert reduced.m == hyp2.m


def test_irredundant_is_identity_for_singleton_groups(clone):
    assert build_irredundant(clone, search_substitution(clone)).edges == clone.edges


def test_disjoint_blocks_reduce_to_singletons():
    h = gen_worst_case(3, 3)
    reduced = build_irredundant(h, search_substitution(h))
    assert reduced.edges == ((1,), (4,), (7,))


def test_inconsistent_groups_are_rejected(hyp2):
    gn = GeneralizedNodes(groups=(
        VertexGroup(representative=1, members=(1, 2)),
        VertexGroup(representative=3, members=(3, 4, 5, 6, 7, 8, 9)),
    ))
    with pytest.raises(PreconditionError):
        build_irredundant(hyp2, gn)


def test_pipeline_on_the_worked_example(hyp2):
    result = imt_extract(hyp2, Backend.MMCS)
    assert result.irredundant_mts == HYP2_IRREDUNDANT
    assert result.expanded_count() == 15
    assert result.with_compaction().compaction == pytest.approx(2 / 3, abs=1e-12)
    for t in result.irredundant_mts:
        assert is_minimal_traverse(result.irredundant_h, t)
        assert is_minimal_traverse(hyp2, t)


def test_expansion(hyp2):
    gn = search_substitution(hyp2)
    assert expand_mts(MtSet.from_sets([(1, 3, 8)]), gn) == MtSet.from_sets(
        [(1, 3, 8), (1, 4, 8), (1, 3, 9), (1, 4, 9)]
    )
    assert expand_mts(HYP2_IRREDUNDANT, gn) == HYP2_MTS


def test_expansion_rejects_non_representatives(hyp2):
    with pytest.raises(DomainError):
        expand_mts(MtSet.from_sets([(1, 4, 8)]), search_substitution(hyp2))


def test_expansion_is_lazy():
    h = gen_worst_case(20, 3)
    result = imt_extract(h)
    first = list(itertools.islice(iter_expand(result.irredundant_mts, result.generalized), 3))
    assert first[0] == tuple(range(1, 60, 3))
    assert len(set(first)) == 3
    assert result.expanded_count() == 3 ** 20


def test_worst_case_has_a_single_irredundant_mt():
    h = gen_worst_case(6, 3)
    result = imt_extract(h)
    assert len(result.irredundant_mts) == 1
    assert len(result.irredundant_mts[0]) == 6
    assert result.expanded_count() == 729
    assert result.with_compaction().compaction == pytest.approx(728 / 729, abs=1e-12)


def test_round_trip_on_random_instances():
    for h in random_instances(60, max_n=18, first_seed=2000):
        result = imt_extract(h)
        full = enumerate_mts(h)
        assert expand_mts(result.irredundant_mts, result.generalized) == full
        assert result.expanded_count() == len(full)
        sizes = {g.representative: g.size for g in result.generalized.groups}
        for t in result.irredundant_mts:
            block = expand_mts(MtSet.from_sets([t]), result.generalized)
            assert len(block) == math.prod(sizes[v] for v in t)


def test_group_members_never_share_an_mt():
    for h in random_instances(30, max_n=14, first_seed=2100):
        gn = search_substitution(h)
        for t in enumerate_mts(h):
            for g in gn.groups:
                assert len(set(t) & set(g.members)) <= 1


@pytest.mark.parametrize("full, irr, expected", [
    (1961, 1866, 0.0484),
    (832564740, 358392, 0.9995),
])
def test_compaction_rate_table_values(full, irr, expected):
    assert compaction_rate(full, irr) == pytest.approx(expected, abs=1e-4)


def test_compaction_rate_exact_and_errors():
    assert compaction_rate(15, 5) == pytest.approx(2 / 3, abs=1e-12)
    with pytest.raises(PreconditionError):
        compaction_rate(0, 0)
    with pytest.raises(PreconditionError):
        compaction_rate(3, 4)


def test_group_text_round_trip(hyp2):
    gn = search_substitution(hyp2)
    lines = format_generalized_nodes(gn)
    assert lines[2] == "3: 3 4"
    parsed = parse_generalized_nodes("# groups\n" + "\n".join(lines) + "\n")
    assert parsed.representatives == gn.representatives
    assert all(g.extent is None for g in parsed.groups)
    assert expand_mts(HYP2_IRREDUNDANT, parsed) == HYP2_MTS


@pytest.mark.parametrize("text", ["3 4\n", "4: 3 4\n", "x: 1\n", "1:\n", "1: 1\n1: 1 2\n"])
def test_group_text_errors(text):
    with pytest.raises(ParseError):
        parse_generalized_nodes(text)
