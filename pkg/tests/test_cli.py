import json
from pathlib import Path

import pytest

from regsem import corpus
from regsem.cli import run

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus"


def cli(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def as_json(capsys, *argv):
    code, out, _ = cli(capsys, *argv, "--json")
    return code, json.loads(out)


def test_reduce_example(capsys):
    code, out, _ = cli(capsys, "reduce", CORPUS / "lz2.sgp", "-w", "b' b")
    assert code == 0 and out.strip() == "a' a"


def test_reduce_trace(capsys):
    code, rep = as_json(capsys, "reduce", CORPUS / "lz2.sgp", "-w", "a b' b", "--trace")
    assert code == 0 and rep["normal-form"] == "a"
    assert rep["trace"][-1]["word"] == "a"
    code, rep = as_json(capsys, "reduce", CORPUS / "lz2.sgp", "-w", "a b' b", "--strategy", "random:4")
    assert rep["normal-form"] == "a"


def test_analyze_ambiguous(capsys):
    code, out, _ = cli(capsys, "analyze", CORPUS / "sl3.sgp")
    assert code == 0
    assert "unambiguous: false, witness: (a, ab, b) [L]" in out.splitlines()


def test_analyze_json(capsys):
    code, rep = as_json(capsys, "analyze", CORPUS / "b2.sgp")
    assert code == 0 and rep["unambiguous"] and rep["zero"] == "z"
    assert rep["R-reps"]["e22"] == "e21" and rep["rep-violations"] == []


def test_enumerate_example(capsys):
    code, out, _ = cli(capsys, "enumerate", CORPUS / "lz2.sgp")
    assert code == 0
    assert "# |S_reg| = 10" in out and "# axioms: pass" in out


def test_enumerate_then_analyze(capsys, tmp_path):
    out_file = tmp_path / "b2reg.sgp"
    code, _, _ = cli(capsys, "enumerate", CORPUS / "b2.sgp", "--out", out_file)
    assert code == 0
    code, rep = as_json(capsys, "analyze", out_file)
    assert code == 0 and len(rep["elements"]) > 5
    # human output of enumerate is itself a loadable table
    code, out, _ = cli(capsys, "enumerate", CORPUS / "lz2.sgp")
    (tmp_path / "lz2reg.sgp").write_text(out)
    code, rep = as_json(capsys, "analyze", tmp_path / "lz2reg.sgp")
    assert code == 0 and len(rep["elements"]) == 10


def test_multiply(capsys):
    code, out, _ = cli(capsys, "multiply", CORPUS / "z2.sgp", "-a", "e e'", "-b", "e e'")
    assert code == 0 and out.strip() == "e e'"


@pytest.mark.parametrize("argv", [
    ("analyze", CORPUS / "missing.sgp"),
    ("reduce", CORPUS / "lz2.sgp", "-w", "q"),
    ("reduce", CORPUS / "lz2.sgp", "-w", ""),
    ("reduce", CORPUS / "lz2.sgp", "-w", "a", "--strategy", "middle"),
    ("reduce", CORPUS / "sl3.sgp", "-w", "a"),
    ("enumerate", CORPUS / "sl3.sgp"),
    ("verify", CORPUS / "lz2.sgp", "--lemmas", "3.99"),
    ("reduce", CORPUS / "lz2.sgp"),
    ("frobnicate", CORPUS / "lz2.sgp"),
])
def test_input_errors(capsys, argv):
    code, _, err = cli(capsys, *argv)
    assert code == 2 and err


def test_bad_table(capsys, tmp_path):
    f = tmp_path / "bad.sgp"
    f.write_text("elements: a b\nb a\na a\n")
    code, _, err = cli(capsys, "analyze", f)
    assert code == 2 and "associativ" in err


def test_force_marks_output(capsys):
    code, rep = as_json(capsys, "reduce", CORPUS / "sl3.sgp", "-w", "a b", "--force")
    assert code == 0 and rep["authoritative"] is False and rep["normal-form"] == "ab"


def test_invalid_reps_need_flag(capsys):
    reps = CORPUS / "rb22one_invalid.reps"
    code, _, err = cli(capsys, "reduce", CORPUS / "rb22one.sgp", "-w", "a11", "--reps", reps)
    assert code == 2 and "--unsafe-reps" in err
    code, rep = as_json(capsys, "reduce", CORPUS / "rb22one.sgp", "-w", "a11", "--reps", reps, "--unsafe-reps")
    assert code == 0 and rep["authoritative"] is False
    code, rep = as_json(capsys, "analyze", CORPUS / "rb22one.sgp", "--reps", reps)
    assert rep["rep-violations"]


def test_cap_exit_code(capsys, monkeypatch):
    code, _, _ = cli(capsys, "reduce", CORPUS / "lz2.sgp", "-w", "b' b b' b", "--cap-steps", "1")
    assert code == 3
    monkeypatch.setenv("REGSEM_CAP_STEPS", "1")
    code, _, err = cli(capsys, "reduce", CORPUS / "lz2.sgp", "-w", "b' b b' b")
    assert code == 3 and "cap" in err
    monkeypatch.delenv("REGSEM_CAP_STEPS")
    code, _, _ = cli(capsys, "enumerate", CORPUS / "b2.sgp", "--max-elements", "3")
    assert code == 3


def test_verify(capsys):
    code, rep = as_json(capsys, "verify", CORPUS / "lz2.sgp", "--maxlen", "4", "--random", "100")
    assert code == 0 and rep["ok"]
    assert rep["critical-pairs"]["joinable"] == rep["critical-pairs"]["total"] > 0
    code, out, _ = cli(capsys, "verify", CORPUS / "n3.sgp", "--maxlen", "3", "--lemmas", "3.6", "--random", "20")
    assert code == 0 and out.splitlines()[-1] == "result: pass"


def test_verify_failure_exit_code(capsys, tmp_path):
    reps = tmp_path / "out_of_class.reps"
    reps.write_text("R a b\n")
    code, rep = as_json(capsys, "verify", CORPUS / "lz2.sgp", "--maxlen", "3", "--random", "20",
                        "--reps", reps, "--unsafe-reps")
    assert code == 1 and not rep["ok"]


def test_deterministic_output(capsys):
    argv = ("verify", CORPUS / "b2.sgp", "--maxlen", "3", "--random", "50", "--json")
    first = cli(capsys, *argv)
    assert first == cli(capsys, *argv)
    argv = ("enumerate", CORPUS / "n3.sgp", "--json")
    assert cli(capsys, *argv) == cli(capsys, *argv)


def test_corpus_files_match_builders():
    for name in corpus.CORPUS:
        text = (CORPUS / f"{name}.sgp").read_text()
        assert text.split("\n", 1)[1] == corpus.load(name).to_text()
