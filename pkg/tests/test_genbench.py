import pytest

from app.algorithms import genbench
from app.algorithms.genbench import (
    CSV_HEADER,
    bench_run,
    bench_to_csv,
    gen_random,
    gen_worst_case,
    instance_id,
    load_instances,
    random_spec,
)
from app.algorithms.hypergraph import min_reduce, serialize_hypergraph, support
from app.core.errors import PreconditionError
from app.models.bench import BenchRow, RandomSpec

HEADER_LINE = ",".join(CSV_HEADER)


def test_same_seed_same_instance():
    spec = RandomSpec(n=30, m=20, p_l=0.1, p_u=0.5, seed=42)
    assert gen_random(spec) == gen_random(spec)
    assert gen_random(spec) != gen_random(spec.model_copy(update={"seed": 43}))


def test_certain_membership_gives_full_edges():
    h = gen_random(RandomSpec(n=6, m=4, p_l=1.0, p_u=1.0, seed=1))
    assert h.m == 4
    assert all(edge == (1, 2, 3, 4, 5, 6) for edge in h.edges)


def test_edges_are_never_empty():
    h = gen_random(RandomSpec(n=5, m=40, p_l=0.0, p_u=0.05, seed=3))
    assert h.m == 40
    assert all(h.edges)


def test_membership_frequency_follows_p():
    h = gen_random(RandomSpec(n=200, m=50, p_l=0.3, p_u=0.3, seed=11))
    mean = sum(len(edge) for edge in h.edges) / (h.m * 200)
    assert abs(mean - 0.3) < 0.03


def test_spec_validation():
    with pytest.raises(PreconditionError):
        random_spec(10, 5, 0.6, 0.2)
    with pytest.raises(PreconditionError):
        random_spec(0, 5, 0.1, 0.2)
    with pytest.raises(PreconditionError):
        random_spec(10, 5, 0.1, 1.5)


def test_seed_comes_from_the_environment(monkeypatch):
    assert random_spec(10, 5, 0.1, 0.2).seed == 20130101
    monkeypatch.setenv("HT_SEED", "7")
    assert random_spec(10, 5, 0.1, 0.2).seed == 7
    assert random_spec(10, 5, 0.1, 0.2, seed=9).seed == 9


def test_worst_case():
    h = gen_worst_case(3, 2)
    assert h.edges == ((1, 2), (3, 4), (5, 6))
    with pytest.raises(PreconditionError):
        gen_worst_case(0, 2)


@pytest.mark.parametrize("m, block", [(3, 3), (5, 2), (4, 4), (6, 1)])
def test_worst_case_is_simple_with_unit_supports(m, block):
    h = gen_worst_case(m, block)
    assert h.n == m * block
    assert all(support(h, [v]) == 1 for v in h.vertices)
    assert min_reduce(h) is h


def test_instance_id_is_a_content_hash(hyp2):
    assert instance_id(hyp2) == instance_id(hyp2.model_copy())
    assert instance_id(hyp2).startswith("h_")
    assert instance_id(hyp2) != instance_id(gen_worst_case(2, 2))


def test_load_instances(tmp_path, hyp2):
    (tmp_path / "b.dat").write_text(serialize_hypergraph(hyp2))
    (tmp_path / "a.dat").write_text("1 2\n")
    (tmp_path / "notes.txt").write_text("not an instance\n")
    loaded = load_instances(str(tmp_path))
    assert [name for name, _ in loaded] == ["a.dat", "b.dat"]
    assert loaded[1][1] == hyp2


def test_bench_rows(hyp2):
    rows = bench_run([hyp2], ["mmcs", "local"], with_irr=True, warmup=False)
    assert [row.backend for row in rows] == ["mmcs", "local"]
    for row in rows:
        assert (row.n, row.m, row.mt_count, row.irr_count, row.tau) == (9, 4, 15, 5, 2)
        assert row.theta == pytest.approx(2 / 3)
        assert row.ms >= 0
        assert not row.failed


def test_bench_reduces_its_input(hyp11):
    (row,) = bench_run([hyp11], ["berge"], warmup=False)
    assert (row.m, row.mt_count, row.tau) == (4, 6, 3)
    assert row.irr_count is None and row.theta is None


def test_failed_measurement_becomes_an_error_row(monkeypatch, hyp2):
    def broken(h, algorithm):
        raise RuntimeError("boom")

    monkeypatch.setattr(genbench, "run_algorithm", broken)
    (row,) = bench_run([hyp2], ["mmcs"], warmup=False)
    assert row.failed
    assert row.error == "boom"
    assert row.mt_count is None
    lines = bench_to_csv([row]).splitlines()
    assert lines[0] == HEADER_LINE
    assert lines[1].split(",") == [row.id, "9", "4", "mmcs", "", "", "", "", ""]
    assert lines[2] == f"# error {row.id} mmcs: boom"


def test_csv_layout(hyp2):
    rows = bench_run([hyp2], ["mtminer"], with_irr=True, warmup=False)
    lines = bench_to_csv(rows, {"rng": "PCG64", "seed": 5}).splitlines()
    assert lines[:3] == ["# rng: PCG64", "# seed: 5", HEADER_LINE]
    cells = lines[3].split(",")
    assert cells[:6] == [instance_id(hyp2), "9", "4", "mtminer", "15", "5"]
    assert float(cells[6]) == rows[0].theta
    assert cells[7] == "2"


def test_empty_run_has_only_the_header():
    assert bench_to_csv([]) == HEADER_LINE + "\n"


def test_theta_must_match_the_counts():
    with pytest.raises(ValueError):
        BenchRow(id="h_x", n=3, m=2, backend="mmcs", mt_count=4, irr_count=2, theta=0.9)
    row = BenchRow(id="h_x", n=3, m=2, backend="mmcs", mt_count=4, irr_count=1, theta=0.75)
    assert not row.failed
