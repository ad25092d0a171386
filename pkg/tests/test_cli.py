import json
import os
import subprocess
import sys

import pytest

from discharge_lab import fixtures
from discharge_lab.cli import main
from discharge_lab.corpus import CorpusSpec, generate
from discharge_lab.plane_graph import read_planar_code, write_planar_code
from discharge_lab.solver import format_coloring, solve


@pytest.fixture(scope="module")
def corpus_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("c") / "corpus.pc"
    gs = list(generate(CorpusSpec(n_min=3, n_max=10, count=40, seed=9, maximal=0.3)))
    path.write_bytes(write_planar_code(gs))
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "{f}", "--profile", "110"],
        ["solve", "{f}", "--profile", "both"],
        ["discharge", "{f}", "--rules", "110", "--audit"],
        ["discharge", "{f}", "--rules", "300", "--audit", "--log-transfers"],
        ["scan", "{f}"],
        ["oracle", "{f}", "--profile", "both"],
        ["theorem", "--corpus", "{f}"],
    ],
)
def test_subcommands_succeed(capsys, corpus_file, argv):
    code, recs = run(capsys, *[a.format(f=corpus_file) for a in argv])
    assert code == 0
    *body, summary = recs
    assert len(body) == 40 and summary["violations"] == 0 and summary["graphs"] == 40
    assert all("wall_ms" not in r for r in body)


def test_discharge_records(capsys, corpus_file):
    _, recs = run(capsys, "discharge", corpus_file, "--rules", "110", "--log-transfers")
    r = recs[0]
    assert r["total"] == "-12/1" and r["conserved"] is True
    assert all(len(t.split()) == 4 for t in r["transfers"])


def test_timing_flag(capsys, corpus_file):
    _, recs = run(capsys, "scan", corpus_file, "--timing")
    assert all("wall_ms" in r for r in recs[:-1])


def test_theorem_gen_source(capsys):
    code, recs = run(capsys, "theorem", "--corpus", "gen:n=3..9,count=25,seed=2")
    assert code == 0 and recs[-1]["graphs"] == 25
    assert all(r.get("verified_110") and r.get("verified_300") for r in recs[:-1] if r["in_class"])


def test_verify(capsys, tmp_path):
    g = fixtures.graph("K4")
    pc = tmp_path / "k4.pc"
    pc.write_bytes(g.to_planar_code())
    good = tmp_path / "good.txt"
    good.write_text(format_coloring(solve(g, (1, 1, 0))) + "\n")
    code, recs = run(capsys, "verify", pc, "--coloring", good, "--profile", "110")
    assert code == 0 and recs[0]["valid"]
    bad = tmp_path / "bad.txt"
    bad.write_text("1:1 2:1 3:1 4:1\n")
    code, recs = run(capsys, "verify", pc, "--coloring", bad, "--profile", "110")
    assert code == 1 and not recs[0]["valid"] and len(recs[0]["violations"]) == 4


def test_solve_unsat_exits_1(capsys, tmp_path):
    pc = tmp_path / "k4.pc"
    pc.write_bytes(fixtures.graph("K4").to_planar_code())
    code, recs = run(capsys, "solve", pc, "--profile", "000")
    assert code == 1 and recs[0]["sat_000"] is False


def test_precolor(capsys, tmp_path):
    pc = tmp_path / "c7.pc"
    pc.write_bytes(fixtures.graph("C7").to_planar_code())
    code, recs = run(capsys, "solve", pc, "--profile", "000", "--precolor", "1:3,2:1")
    assert code == 0 and recs[0]["coloring_000"].startswith("1:3 2:1")
    code = main(["solve", str(pc), "--profile", "000", "--precolor", "1:3,2:3"])
    assert code == 2


def test_gen(capsys, tmp_path):
    out = tmp_path / "g.pc"
    code, recs = run(capsys, "gen", "--n-min", 3, "--n-max", 8, "--count", 12, "--seed", 4, "--out", out)
    assert code == 0 and len(recs) == 12
    assert len(read_planar_code(out.read_bytes())) == 12


@pytest.mark.parametrize(
    "argv",
    [
        ["scan", "/nonexistent/file.pc"],
        ["solve", "{bad}"],
        ["solve", "{good}", "--profile", "abc"],
        ["discharge", "{good}", "--rules", "999"],
        ["gen", "--n-min", "5", "--n-max", "2"],
        ["theorem", "--corpus", "gen:n=3..4,count=100,seed=0"],
        ["bogus"],
    ],
)
def test_input_errors_exit_2(capsys, tmp_path, argv):
    bad = tmp_path / "bad.pc"
    bad.write_bytes(bytes([3, 2, 3, 0, 1]))
    good = tmp_path / "good.pc"
    good.write_bytes(fixtures.graph("TRIANGLE").to_planar_code())
    code = main([a.format(bad=bad, good=good) for a in argv])
    assert code == 2
    assert "error" in capsys.readouterr().err or argv == ["bogus"]


def _console(*argv, env=None):
    return subprocess.run(
        [sys.executable, "-m", "discharge_lab", *map(str, argv)],
        capture_output=True, env={**os.environ, **(env or {})}, check=False,
    )


def test_reproducible_bytes(corpus_file):
    a = _console("discharge", corpus_file, "--rules", "110", "--audit")
    b = _console("discharge", corpus_file, "--rules", "110", "--audit")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_workers_env_same_output(corpus_file):
    serial = _console("scan", corpus_file)
    parallel = _console("scan", corpus_file, env={"DISCHARGE_LAB_WORKERS": "2"})
    assert parallel.returncode == 0 and parallel.stdout == serial.stdout


def test_workers_env_invalid(corpus_file):
    r = _console("scan", corpus_file, env={"DISCHARGE_LAB_WORKERS": "many"})
    assert r.returncode == 2


def test_gen_stdout_is_planar_code():
    r = _console("gen", "--n-min", 3, "--n-max", 6, "--count", 5, "--seed", 1)
    assert r.returncode == 0 and len(read_planar_code(r.stdout)) == 5
