import pytest

from app.algorithms.enumeration import Backend, enumerate_mts
from app.algorithms.genbench import gen_worst_case
from app.algorithms.hypergraph import is_minimal_traverse
from app.algorithms.localgen import (
    combine_local,
    decompose,
    enumerate_local,
    format_decomposition,
    iter_combine,
    iter_local,
)
from app.algorithms.transversality import exact_tau, minimum_traverse
from app.core.errors import PreconditionError
from app.models.hypergraph import MtSet
from app.models.results import CombineStats

from conftest import HYP2_MTS, random_instances


def test_decomposition_orders_pivot_by_support(hyp1):
    d = decompose(hyp1, (1, 4, 7))
    assert d.pivot_mt == (7, 4, 1)
    assert d.part_edge_indices == ((1, 4, 5), (2, 3), (0,))
    assert d.parts[0].edges == ((2, 3, 7), (6, 7, 8), (7, 9))
    assert d.size == 3


def test_decomposition_ties_break_by_label(hyp2):
    d = decompose(hyp2, (7, 2))
    assert d.pivot_mt == (2, 7)
    assert d.part_edge_indices == ((0, 1), (2, 3))


def test_decomposition_text(hyp2):
    text = format_decomposition(decompose(hyp2, (2, 7)))
    assert text == "# part 1 (pivot 2)\n1 2\n2 3 4\n# part 2 (pivot 7)\n3 4 5 6 7\n7 8 9\n"


def test_decomposition_rejects_bad_pivots(hyp2):
    with pytest.raises(PreconditionError):
        decompose(hyp2, (1, 7))
    with pytest.raises(PreconditionError):
        decompose(hyp2, (1, 3, 8))


def test_combination_on_the_worked_example(hyp2):
    d = decompose(hyp2, (2, 7))
    local_mts = [enumerate_mts(part) for part in d.parts]
    assert local_mts[0] == MtSet.from_sets([(1, 3), (1, 4), (2,)])
    stats = CombineStats()
    assert combine_local(hyp2, local_mts, 2, stats) == HYP2_MTS
    assert stats.accepted_without_test == 1
    assert stats.accepted_without_test + stats.accepted_after_test == 15
    assert stats.tested == stats.accepted_after_test + stats.rejected


def test_combination_needs_one_family_per_pivot_vertex(hyp2):
    with pytest.raises(PreconditionError):
        combine_local(hyp2, [HYP2_MTS], 2)


def test_worst_case_is_accepted_without_tests():
    stats = CombineStats()
    mts = enumerate_local(gen_worst_case(6, 3), stats=stats)
    assert len(mts) == 729
    assert stats.accepted_without_test == 729
    assert stats.tested == 0
    assert stats.pruned == 0


def test_local_matches_direct_enumeration():
    for h in random_instances(60, max_n=16, first_seed=3000):
        expected = enumerate_mts(h, Backend.MMCS)
        assert enumerate_local(h) == expected
        assert enumerate_local(h, Backend.BERGE) == expected


def test_result_does_not_depend_on_the_pivot():
    for h in random_instances(20, max_n=14, first_seed=3100):
        full = enumerate_mts(h)
        for pivot in full.of_size(full.min_size())[:3]:
            assert enumerate_local(h, pivot=pivot) == full


def test_streamed_local_output_has_no_duplicates(hyp1):
    streamed = list(iter_local(hyp1, "mtminer"))
    assert len(streamed) == len(set(streamed))
    assert MtSet.from_sets(streamed) == enumerate_mts(hyp1)


def test_local_requires_simple_input(hyp11):
    with pytest.raises(PreconditionError):
        enumerate_local(hyp11)


def test_untested_size_tau_unions_are_minimal_traverses():
    for h in random_instances(40, max_n=16, first_seed=3200):
        tau = exact_tau(h)
        d = decompose(h, minimum_traverse(h, tau), tau)
        local_mts = [enumerate_mts(part) for part in d.parts]
        smallest = [t for t in iter_combine(h, local_mts, tau) if len(t) == tau]
        assert tuple(sorted(d.pivot_mt)) in smallest
        for t in smallest:
            assert is_minimal_traverse(h, t)
