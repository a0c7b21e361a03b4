import pytest

import cli
from app.algorithms.genbench import gen_worst_case
from app.algorithms.hypergraph import serialize_hypergraph
from app.utils.helpers import format_sets
from cli import run

from conftest import HYP2_MTS, data_path


def test_mt_prints_the_canonical_family(capsys):
    assert run(["mt", data_path("hyp2.dat")]) == 0
    out, err = capsys.readouterr()
    assert out == format_sets(HYP2_MTS)
    assert err == ""


def test_mt_reduces_non_simple_input_with_a_notice(capsys):
    assert run(["mt", data_path("hyp11.dat"), "--algo", "berge"]) == 0
    out, err = capsys.readouterr()
    assert len(out.splitlines()) == 6
    assert "# input is not simple; reduced from 6 to 4 edges" in err


def test_mt_stream_ends_with_a_count(capsys):
    assert run(["mt", data_path("hyp2.dat"), "--algo", "local", "--stream"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "# count: 15"
    assert sorted(lines[:-1]) == sorted(format_sets(HYP2_MTS).splitlines())


def test_mt_show_parts(capsys):
    assert run(["mt", data_path("hyp2.dat"), "--show-parts"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# part 1 (pivot 2)"
    assert "# part 2 (pivot 7)" in lines


def test_tau(capsys):
    assert run(["tau", data_path("hyp2.dat")]) == 0
    assert capsys.readouterr().out == "2 2 true\n"


def test_tmm(capsys):
    assert run(["tmm", data_path("hyp11.dat"), "--mode", "m2d"]) == 0
    assert capsys.readouterr().out == "3\n2 4 7\n# coverage: 10\n"


def test_irr_with_expansion(capsys):
    assert run(["irr", data_path("hyp2.dat"), "--expand"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# groups\n1: 1\n2: 2\n3: 3 4\n")
    assert "# irredundant minimal traverses\n1 3 7\n1 3 8\n2 3 8\n2 5 8\n2 7\n" in out
    assert out.endswith("# theta: 0.6666666666666666\n")


def test_expand(tmp_path, capsys):
    mts = tmp_path / "irr.dat"
    mts.write_text("2 7\n1 3 7\n1 3 8\n2 3 8\n2 5 8\n")
    groups = tmp_path / "groups.txt"
    groups.write_text("# groups\n1: 1\n2: 2\n3: 3 4\n5: 5 6\n7: 7\n8: 8 9\n")
    assert run(["expand", str(mts), str(groups)]) == 0
    assert capsys.readouterr().out == format_sets(HYP2_MTS)


def test_fd_cover(capsys):
    assert run(["fd-cover", data_path("rel.csv")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# attributes: A=0 B=1 C=2 D=3 E=4"
    assert len(lines) == 10


def test_fd_cover_concise_and_conditional(capsys):
    assert run(["fd-cover", data_path("rel.csv"), "--concise", "--conditional"]) == 0
    out = capsys.readouterr().out
    assert "A -> D\nA,B -> E\nB,D -> A\nB,E -> D\n" in out
    assert "# groups A\nD: D E\n" in out
    assert "# conditional\nE -> D on t1 t2 t4 t6\n" in out


def test_gen_random_is_reproducible(capsys):
    args = ["gen", "--random", "12", "6", "0.2", "0.4", "3"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert first.startswith("# rng: PCG64\n# seed: 3\n")
    assert run(args) == 0
    assert capsys.readouterr().out == first


def test_gen_worst_case_to_a_file(tmp_path):
    target = tmp_path / "worst.dat"
    assert run(["gen", "--worst", "2", "2", "-o", str(target)]) == 0
    assert target.read_text() == "1 2\n3 4\n"


def test_bench(tmp_path, capsys):
    (tmp_path / "hyp2.dat").write_text(open(data_path("hyp2.dat")).read())
    assert run(["bench", "--dir", str(tmp_path), "--algos", "mmcs,berge", "--irr"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# rng: PCG64"
    assert lines[3] == "id,n,m,backend,mt_count,irr_count,theta,tau,ms"
    assert len(lines) == 6


def test_stats(capsys):
    assert run(["stats", data_path("hyp11.dat")]) == 0
    out = capsys.readouterr().out
    assert "simple: false\n" in out
    assert "tau: 3\n" in out


@pytest.mark.parametrize("argv", [
    [],
    ["mt"],
    ["mt", "x.dat", "--algo", "nope"],
    ["bench", "--dir", ".", "--algos", "mmcs,nope"],
    ["gen", "--random", "10", "5"],
    ["gen", "--random", "10", "5", "0.1"],
    ["gen", "--random", "10", "5", "0.1", "0.2", "3", "4"],
])
def test_usage_errors_exit_with_one(argv, capsys):
    assert run(argv) == 1


def test_help_exits_with_zero(capsys):
    assert run(["--help"]) == 0
    assert "hypertrans" in capsys.readouterr().out


def test_input_errors_exit_with_two(tmp_path, capsys):
    bad = tmp_path / "bad.dat"
    bad.write_text("1 x\n")
    assert run(["mt", str(bad)]) == 2
    assert capsys.readouterr().err.startswith("error: line 1:")

    assert run(["tau", str(tmp_path / "missing.dat")]) == 2
    assert run(["gen", "--random", "10", "5", "0.5", "0.2"]) == 2


def test_irr_streams_the_expansion(tmp_path, capsys, monkeypatch):
    def collected(*args):
        raise AssertionError("expansion must not be collected")

    monkeypatch.setattr(cli, "expand_mts", collected)
    target = tmp_path / "worst.dat"
    target.write_text(serialize_hypergraph(gen_worst_case(4, 3)))
    assert run(["irr", str(target), "--expand"]) == 0
    lines = capsys.readouterr().out.splitlines()
    start = lines.index("# minimal traverses") + 1
    assert len(lines[start:-1]) == 81
    assert len(set(lines[start:-1])) == 81
    assert lines[-1] == f"# theta: {80 / 81}"


def test_fd_cover_ignores_a_byte_order_mark(tmp_path, capsys):
    target = tmp_path / "bom.csv"
    target.write_text("A,B\n1,x\n2,x\n", encoding="utf-8-sig")
    assert run(["fd-cover", str(target)]) == 0
    assert capsys.readouterr().out == "# attributes: A=0 B=1\n -> B\n"
