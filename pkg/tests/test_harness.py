from __future__ import annotations

import json

import pytest

from ekrcomplex.complex import from_facets
from ekrcomplex.corpus import CorpusSpec, Instance, all_shifted_complexes
from ekrcomplex.complex import is_shifted
from ekrcomplex.errors import InputError
from ekrcomplex.harness import CLAIMS, evaluate, read_reports, replay, run_campaign, summarize
from ekrcomplex.shifting import ShiftConfig


def strip_runtime(line: str) -> dict:
    rec = json.loads(line)
    rec.pop("runtime_ms")
    return rec


def test_corpus_is_deterministic():
    a = [i.digest for i in CorpusSpec.parse("random-complexes:30:6").expand()]
    b = [i.digest for i in CorpusSpec.parse("random-complexes:30:6").expand()]
    assert a == b and len(set(a)) > 20


@pytest.mark.parametrize(
    "spec,count",
    [("all-graphs:3", 1 + 2 + 8), ("graphs-with-isolated:5", 285), ("cycles:4-8", 5), ("disjoint-unions", 120), ("shifted:5", 117)],
)
def test_corpus_sizes(spec, count):
    assert sum(1 for _ in CorpusSpec.parse(spec).expand()) == count


def test_bad_corpus_spec():
    with pytest.raises(InputError):
        CorpusSpec.parse("no-such-family:3")
    with pytest.raises(InputError):
        list(CorpusSpec.parse("cycles:x").expand())


def test_shifted_enumeration_is_exhaustive_for_small_n():
    from itertools import combinations

    from ekrcomplex.complex import from_masks

    n = 3
    subsets = list(range(1, 1 << n))
    found = set()
    for k in range(1, len(subsets) + 1):
        for chosen in combinations(subsets, k):
            cx = from_masks(chosen, n)
            if cx.vertex_mask == (1 << n) - 1 and is_shifted(cx):
                found.add(cx)
    assert set(all_shifted_complexes(n)) == found


def test_reports_are_deterministic(tmp_path):
    lines = []
    for name in ("a", "b"):
        path = tmp_path / f"{name}.jsonl"
        list(run_campaign("depth-ekr", "graphs-with-isolated:4", out=path))
        lines.append([strip_runtime(x) for x in path.read_text().splitlines()])
    assert lines[0] == lines[1]


def test_resume_skips_logged_instances(tmp_path):
    path = tmp_path / "log.jsonl"
    list(run_campaign("near-cone-link-shift", "near-cones:10:5", out=path))
    before = path.read_text()
    with path.open() as fh:
        head = [next(fh) for _ in range(4)]
    partial = tmp_path / "partial.jsonl"
    partial.write_text("".join(head) + '{"claim_id": "near-cone-link-shift", "inst')
    list(run_campaign("near-cone-link-shift", "near-cones:10:5", out=partial))
    records = [strip_runtime(x) for x in partial.read_text().splitlines()]
    assert records == [strip_runtime(x) for x in before.splitlines()]
    list(run_campaign("near-cone-link-shift", "near-cones:10:5", out=path))
    assert path.read_text() == before


def test_workers_preserve_order(tmp_path):
    serial = [r.to_dict() for r in run_campaign("depth-by-shift", "random-complexes:24:6", workers=1)]
    parallel = [r.to_dict() for r in run_campaign("depth-by-shift", "random-complexes:24:6", workers=3)]
    for rec in serial + parallel:
        rec.pop("runtime_ms")
    assert serial == parallel


def test_failures_carry_witnesses_that_replay(tmp_path):
    path = tmp_path / "fail.jsonl"
    boundary = from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
    reps = list(run_campaign("depth-ekr", [Instance("boundary", boundary)], out=path))
    # depth 2 only covers r = 1, so the r = 3 counterexample is out of scope
    assert [(r.params["r"], r.verdict) for r in reps] == [(1, "pass")]
    reps = list(run_campaign("coned-boundary-counts", "coned-boundaries:2:3", out=path))
    assert reps and all(r.verdict == "fail" and r.witness for r in reps)
    assert all(replay(rec) for rec in read_reports(path))
    assert summarize(read_reports(path))["coned-boundary-counts"]["fail"] == len(reps)


def test_forged_ekr_failure_does_not_replay():
    inst = Instance("simplex", from_facets([[1, 2, 3, 4]]))
    (rep,) = [r for r in evaluate("shifted-ekr", inst, ShiftConfig()) if r.params["r"] == 2]
    rec = rep.to_dict() | {"verdict": "fail", "witness": {"family": [[1, 2], [3, 4]], "r": 2}}
    assert not replay(rec)


def test_unknown_claim():
    with pytest.raises(InputError):
        list(run_campaign("no-such-claim", "cycles:4-5"))


def test_every_claim_runs_on_a_tiny_corpus():
    corpora = {
        "join-depth": "complex-pairs:3:3",
        "union-ekr": "disjoint-unions:2:2",
        "union-depth-one-ekr": "disjoint-unions:2:2",
        "simplex-strict-ekr": "simplices:5",
        "coned-boundary-counts": "coned-boundaries:2:3",
        "mixed-star": "shifted:3",
        "shifted-ekr": "shifted:3",
    }
    for claim in CLAIMS:
        reps = list(run_campaign(claim, corpora.get(claim, "all-graphs:3")))
        assert reps, claim
        expected_fail = claim == "coned-boundary-counts"
        assert all((r.verdict == "fail") == expected_fail or r.verdict == "skipped" for r in reps), claim
