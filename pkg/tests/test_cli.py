from __future__ import annotations

import json

import pytest

from ekrcomplex.cli import main


@pytest.fixture
def files(tmp_path):
    paths = {
        "two-edges.cplx": "n 4\n1 2\n3 4\n",
        "boundary3simplex.cplx": "n 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n",
        "c4.dimacs": "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n",
        "simplex4.cplx": "n 4\n1 2 3 4\n",
    }
    for name, text in paths.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_shift(files, capsys):
    code, out, _ = run(capsys, "shift", "--in", files / "two-edges.cplx")
    assert code == 0
    assert out.splitlines() == ["1 2", "1 3", "4"]


def test_depth_of_four_cycle(files, capsys):
    code, out, _ = run(capsys, "graph", "ic", "--in", files / "c4.dimacs")
    (files / "ic4.cplx").write_text(out)
    code, out, _ = run(capsys, "depth", "--in", files / "ic4.cplx")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "depth", "--method", "shift", "--in", files / "ic4.cplx")
    assert out.strip() == "0"


def test_check_ekr_violation(files, capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "ekr", "--r", "3", "--in", files / "boundary3simplex.cplx")
    assert code == 1
    payload = json.loads(out)
    assert len(payload["witness"]) == 4 and payload["star_bound"] == 3


def test_global_flags_reach_subcommands(files, capsys):
    code, out, _ = run(capsys, "--prime", "3", "--format", "json", "homology", "--in", files / "boundary3simplex.cplx")
    assert code == 0 and json.loads(out)["reduced_betti"]["2"] == 1


def test_other_subcommands(files, capsys):
    simplex = files / "simplex4.cplx"
    assert run(capsys, "fvector", "--in", simplex)[1].strip() == "1 4 6 4 1"
    assert run(capsys, "link", "--in", files / "two-edges.cplx", "1")[1].strip() == "2"
    assert run(capsys, "dual", "--in", files / "two-edges.cplx")[1].splitlines()[1:] == ["1 3", "1 4", "2 3", "2 4"]
    assert run(capsys, "cm", "--in", simplex)[1].strip() == "true"
    assert run(capsys, "cm", "--in", files / "two-edges.cplx")[1].startswith("false")
    assert "co-chordal: true" in run(capsys, "graph", "chordal", "--in", files / "c4.dimacs")[1]
    assert run(capsys, "check", "strict", "--r", "2", "--in", simplex)[0] == 1
    assert run(capsys, "check", "mixed-star", "--in", simplex)[0] == 0
    assert run(capsys, "check", "chvatal", "--in", simplex)[0] == 0


def test_exit_codes(files, capsys):
    assert run(capsys, "shift", "--in", files / "missing.cplx")[0] == 2
    assert run(capsys, "check", "ekr", "--r", "9", "--in", files / "simplex4.cplx")[0] == 2
    assert run(capsys, "check", "ekr", "--r", "2", "--budget", "2", "--in", files / "simplex4.cplx")[0] == 4
    assert run(capsys, "--prime", "2", "shift", "--in", files / "boundary3simplex.cplx")[0] in (0, 3)
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    assert run(capsys, "corpus", "no-such-claim", "--family", "cycles:4-5")[0] == 2


def test_corpus_summary_replay(files, capsys):
    log = files / "out.jsonl"
    code, out, _ = run(capsys, "corpus", "cycle-ekr", "--family", "cycles:4-6", "--out", log)
    assert code == 0 and "fail=0" in out
    first = log.read_text()
    code, out, _ = run(capsys, "corpus", "cycle-ekr", "--family", "cycles:4-6", "--out", log)
    assert "pass=0" in out and log.read_text() == first
    code, out, _ = run(capsys, "summary", log)
    assert code == 0 and "cycle-ekr" in out
    assert run(capsys, "replay", log)[0] == 0


def test_corpus_failure_exit(files, capsys):
    log = files / "bad.jsonl"
    code, _, _ = run(capsys, "corpus", "coned-boundary-counts", "--family", "coned-boundaries:2:3", "--out", log)
    assert code == 1
