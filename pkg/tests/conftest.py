"""Shared fixtures: worked-example instances, the sample relation and seeded random instances."""

from itertools import combinations
from pathlib import Path

import pytest

from app.algorithms.fdinfer import load_relation
from app.algorithms.genbench import gen_random
from app.algorithms.hypergraph import is_traverse, load_hypergraph, min_reduce
from app.models.bench import RandomSpec
from app.models.hypergraph import Hypergraph, MtSet

DATA = Path(__file__).parent / "data"

HYP2_MTS = MtSet.from_sets([
    (2, 7),
    (1, 3, 7), (1, 4, 7),
    (1, 3, 8), (1, 3, 9), (1, 4, 8), (1, 4, 9),
    (2, 3, 8), (2, 3, 9), (2, 4, 8), (2, 4, 9),
    (2, 5, 8), (2, 5, 9), (2, 6, 8), (2, 6, 9),
])

HYP11_MTS = MtSet.from_sets([
    (1, 4, 7), (2, 4, 7), (1, 3, 6, 7), (1, 5, 6, 7), (2, 3, 6, 7), (2, 5, 6, 7),
])


def data_path(name: str) -> str:
    return str(DATA / name)


def random_instances(count: int, max_n: int = 20, first_seed: int = 0) -> list[Hypergraph]:
    """Reduced random instances with n in 8..max_n, m in 3..15, p in [0.1, 0.4]."""
    instances = []
    for i in range(first_seed, first_seed + count):
        n = 8 + i % (max_n - 7)
        m = 3 + (i * 7) % 13
        instances.append(min_reduce(gen_random(RandomSpec(n=n, m=m, p_l=0.1, p_u=0.4, seed=i))))
    return instances


def brute_force_mts(h: Hypergraph) -> MtSet:
    """Minimal traverses by checking every vertex subset, smallest first."""
    found: list[frozenset[int]] = []
    for size in range(1, h.n + 1):
        for subset in combinations(h.vertices, size):
            s = frozenset(subset)
            if any(f <= s for f in found):
                continue
            if is_traverse(h, subset):
                found.append(s)
    return MtSet.from_sets(found)


@pytest.fixture
def hyp2() -> Hypergraph:
    return load_hypergraph(data_path("hyp2.dat"))


@pytest.fixture
def hyp11() -> Hypergraph:
    """Not simple: {7} sits inside two other edges."""
    return load_hypergraph(data_path("hyp11.dat"))


@pytest.fixture
def hyp1() -> Hypergraph:
    return load_hypergraph(data_path("hyp1.dat"))


@pytest.fixture
def clone() -> Hypergraph:
    return load_hypergraph(data_path("clone.dat"))


@pytest.fixture
def rel():
    return load_relation(data_path("rel.csv"))


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch):
    monkeypatch.delenv("HT_SEED", raising=False)
