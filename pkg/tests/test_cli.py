"""End-to-end command tests through run_command, exit codes included."""

import json
import os

import pytest

from vmkit import (
    Dow,
    multigraph_from_word,
    parse_bundle,
    parse_graph,
    serialize_graph,
    verify_bundle_chain,
)
from vmkit.cli import run_command

from corpus_helpers import complete_graph, worked_graph, path_graph, petersen

X0 = "abcdaebced"


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return put


@pytest.fixture
def worked_file(files):
    return files("worked_graph.graph", serialize_graph(worked_graph()))


@pytest.fixture
def f0_file(files):
    return files("f0.graph", serialize_graph(multigraph_from_word(Dow(X0))))


def test_expand(files, tmp_path):
    g = files("k4.graph", serialize_graph(complete_graph("abcd")))
    out = str(tmp_path / "f.graph")
    assert run_command(["expand", g, "-o", out]) == 0
    F = parse_graph(open(out).read())
    assert len(F.vertices) == 12 and len(F.edges) == 24


def test_euler_and_alternance(files, f0_file, capsys):
    assert run_command(["euler", f0_file]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "tour"
    w = files("x.word", "adcbaebced\n")
    assert run_command(["alternance", w]) == 0
    assert capsys.readouterr().out == "simple 5\nab\nac\nad\nbe\nce\n"


def test_soet_verify_word_yes_and_no(files, f0_file, capsys):
    word = files("x0.word", X0 + "\n")
    assert run_command(["soet-verify", f0_file, word, "abcd"]) == 0
    assert "visit word" in capsys.readouterr().err
    other = files(
        "f1.graph", serialize_graph(multigraph_from_word(Dow("adcbaebced")))
    )
    bad = files("x1.word", "adcbaebced\n")
    assert run_command(["soet-verify", other, bad, "abcd"]) == 1


def test_soet_solve_roundtrip(files, f0_file, tmp_path, capsys):
    cert = str(tmp_path / "cert.txt")
    assert run_command(["soet-solve", f0_file, "4", "-o", cert]) == 0
    text = open(cert).read()
    first = text.splitlines()[0]
    assert first == "subset a,b,c,d"
    assert run_command(["soet-verify", f0_file, cert, "a,b,c,d"]) == 0
    # certificate subset and command line subset must agree
    assert run_command(["soet-verify", f0_file, cert, "abce"]) == 65
    assert run_command(["soet-solve", f0_file, "5"]) == 1
    capsys.readouterr()


def test_vm_solve_star_worked_example(worked_file, tmp_path, capsys):
    assert run_command(["vm-solve-star", worked_file, "5"]) == 1
    capsys.readouterr()
    target = str(tmp_path / "star.graph")
    assert run_command(["vm-solve-star", worked_file, "4", "--target", target]) == 0
    out = capsys.readouterr().out
    assert out == "DEL e\nISO a=h0 b=h1 c=h2 d=h3\n"
    H = parse_graph(open(target).read())
    assert sorted(H.vertices) == ["h0", "h1", "h2", "h3"]


def test_vm_solve_and_verify(files, worked_file, tmp_path, capsys):
    k3 = files("k3.graph", "simple 3\nxy\nxz\nyz\n")
    wit = str(tmp_path / "w.txt")
    assert run_command(["vm-solve", worked_file, k3, "-o", wit]) == 0
    assert run_command(["vm-verify", worked_file, k3, wit]) == 0
    capsys.readouterr()
    # a witness replayed against the wrong target fails, exit 1
    p3 = files("p3.graph", serialize_graph(path_graph("xyz")))
    assert run_command(["vm-verify", worked_file, p3, wit]) == 1
    empty = files("e2.graph", "simple 2\nvertices a b\n")
    k2 = files("k2.graph", "simple 2\nxy\n")
    assert run_command(["vm-solve", empty, k2]) == 1
    # H larger than G is a validation error
    assert run_command(["vm-solve", k3, worked_file]) == 65
    capsys.readouterr()


def test_ham(files, capsys):
    k4 = files("k4.graph", serialize_graph(complete_graph("abcd")))
    assert run_command(["ham", k4]) == 0
    assert capsys.readouterr().out == "a b c d\n"
    pet = files("pet.graph", serialize_graph(petersen()))
    assert run_command(["ham", pet]) == 1


def test_orbit(worked_file, capsys):
    assert run_command(["orbit", worked_file]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "orbit 30"
    assert run_command(["orbit", worked_file, "--limit", "3"]) == 2
    capsys.readouterr()


def test_budget_flag_and_env(worked_file, f0_file, monkeypatch, capsys):
    # fast mode may settle via the tour shortcut without spending budget;
    # deterministic mode always walks, so budget 0 leaves it open
    assert (
        run_command(["soet-solve", f0_file, "4", "--budget", "0", "--deterministic"])
        == 2
    )
    assert run_command(["vm-solve-star", worked_file, "4", "--budget", "0"]) == 2
    monkeypatch.setenv("VMKIT_BUDGET", "0")
    assert run_command(["vm-solve-star", worked_file, "4"]) == 2
    monkeypatch.setenv("VMKIT_BUDGET", "many")
    assert run_command(["vm-solve-star", worked_file, "4"]) == 65
    monkeypatch.delenv("VMKIT_BUDGET")
    assert run_command(["vm-solve-star", worked_file, "4"]) == 0
    capsys.readouterr()


def test_usage_and_validation_errors(files, worked_file, f0_file, capsys):
    assert run_command(["no-such-command"]) == 64
    assert run_command(["soet-solve", f0_file]) == 64
    assert run_command(["euler", worked_file]) == 65
    assert run_command(["expand", f0_file]) == 65
    assert run_command(["ham", os.devnull + ".missing"]) == 65
    err = capsys.readouterr().err
    assert "usage error" in err and "error:" in err


def test_json_format(worked_file, capsys):
    code = run_command(["vm-solve-star", worked_file, "4", "--format", "json"])
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["status"] == "yes"
    assert obj["artifact"] == "DEL e\nISO a=h0 b=h1 c=h2 d=h3\n"
    assert obj["subset"] == "a,b,c,d"


def test_deterministic_stdout_is_stable(f0_file, capsys):
    assert run_command(["soet-solve", f0_file, "4", "--deterministic"]) == 0
    first = capsys.readouterr().out
    assert run_command(["soet-solve", f0_file, "4", "--deterministic"]) == 0
    assert capsys.readouterr().out == first


def test_pipeline_yes(files, tmp_path, capsys):
    k4 = files("k4.graph", serialize_graph(complete_graph("abcd")))
    outdir = str(tmp_path / "chain")
    assert run_command(["pipeline", k4, "-o", outdir]) == 0
    capsys.readouterr()
    names = sorted(os.listdir(outdir))
    assert names == [
        "01_cubham.json",
        "02_isosoet.json",
        "03_starvm.json",
        "04_isovm.json",
        "expected.txt",
        "ham_cycle.txt",
        "soet_cert.txt",
    ]
    chain = [
        parse_bundle(open(os.path.join(outdir, n)).read()) for n in names[:4]
    ]
    verify_bundle_chain(chain)
    assert open(os.path.join(outdir, "expected.txt")).read() == "yes\n"
    f_file = files("exp.graph", chain[1]["payload"]["multigraph"])
    cert = os.path.join(outdir, "soet_cert.txt")
    subset = open(cert).read().splitlines()[0].split(None, 1)[1]
    assert run_command(["soet-verify", f_file, cert, subset]) == 0
    capsys.readouterr()


def test_pipeline_no(files, tmp_path, capsys):
    pet = files("pet.graph", serialize_graph(petersen()))
    outdir = str(tmp_path / "chain")
    assert run_command(["pipeline", pet, "-o", outdir, "--format", "json"]) == 1
    obj = json.loads(capsys.readouterr().out)
    assert obj["status"] == "no"
    assert len(obj["files"]) == 5
    assert not os.path.exists(os.path.join(outdir, "ham_cycle.txt"))
