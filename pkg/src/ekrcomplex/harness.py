"""Verification campaigns: one claim checked over a corpus, reported as JSONL.

Each claim is a function ``(instance, cfg) -> list[Outcome]``.  A claim
first tests its hypotheses and returns a ``skipped`` outcome when they do
not hold, so hypothesis filtering shows up in the log.  EKR-type claims
emit one outcome per value of ``r``.
"""

from __future__ import annotations

import json
import os
import random
import time
from collections import Counter, defaultdict
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from .complex import (
    SimplicialComplex,
    alexander_dual,
    f_vector,
    from_facets,
    is_flag,
    is_pure,
    is_shifted,
    is_subcomplex,
    link,
    max_facet_card,
    min_facet_card,
    near_cone_apexes,
    relabel,
    skeleton,
)
from .corpus import CorpusSpec, Instance, complex_digest, random_subcomplex
from .ekr import coned_boundary_counts, is_r_ekr, is_strict_r_ekr, mixed_star_check
from .errors import GenericityError, InputError, ResourceError
from .graphs import (
    Graph,
    complement,
    degree_order,
    flag_nearcone_decompose,
    is_chordal,
    is_cochordal,
    is_connected,
    relabel_graph,
    is_threshold,
    rebuild_nearcone,
)
from .homology import (
    depth_by_links,
    depth_by_shift,
    depth_of_join_check,
    euler_characteristic_check,
    is_cohen_macaulay,
    is_sequentially_cm,
)
from .shifting import ShiftConfig, check_apex_link_shift, shift

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Outcome:
    verdict: str
    reason: str | None = None
    witness: Any = None
    params: dict[str, Any] = field(default_factory=dict)


def _ok(cond: bool, reason: str, witness: Any = None, **params: Any) -> Outcome:
    if cond:
        return Outcome(PASS, params=params)
    return Outcome(FAIL, reason, witness, params)


def _skip(reason: str) -> list[Outcome]:
    return [Outcome(SKIPPED, reason)]


def _family(faces: Iterable[tuple[int, ...]]) -> list[list[int]]:
    return [list(f) for f in faces]


def _ekr_outcomes(cx: SimplicialComplex, rs: Iterable[int]) -> list[Outcome]:
    out = []
    for r in rs:
        v = is_r_ekr(cx, r)
        witness = {"family": _family(v.witness), "star_bound": v.star_bound, "r": r}
        out.append(_ok(v.is_ekr, f"intersecting family of size {v.max_family_size} > star {v.star_bound}", witness, r=r, t=1))
    return out


# claims on complexes


def claim_shift_props(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    s = shift(cx, cfg)
    if f_vector(s) != f_vector(cx):
        return [Outcome(FAIL, "f-vector changed", {"before": f_vector(cx), "after": f_vector(s)})]
    if not is_shifted(s):
        return [Outcome(FAIL, "output not shifted", {"shift": s.facet_list()})]
    if shift(s, cfg) != s:
        return [Outcome(FAIL, "not idempotent", {"shift": s.facet_list()})]
    for r in range(-1, cx.dim + 1):
        if shift(skeleton(cx, r), cfg) != skeleton(s, r):
            return [Outcome(FAIL, "skeleton does not commute", {"r": r})]
    other = shift(cx, replace(cfg, seed=cfg.seed + 1000))
    if other != s:
        return [Outcome(FAIL, "seed disagreement", {"seed_a": s.facet_list(), "seed_b": other.facet_list()})]
    rng = random.Random(complex_digest(cx))
    sub = random_subcomplex(cx, rng)
    if not is_subcomplex(shift(sub, cfg), s):
        return [Outcome(FAIL, "containment not preserved", {"sub": sub.facet_list()})]
    return [Outcome(PASS)]


def claim_depth_by_shift(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    by_links = depth_by_links(cx, cfg.prime).depth
    by_shift = depth_by_shift(cx, cfg).depth
    return [_ok(by_links == by_shift, "depth methods disagree", {"links": by_links, "shift": by_shift})]


def claim_homology_invariants(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    p = cfg.prime
    if not euler_characteristic_check(cx, p):
        return [Outcome(FAIL, "Euler characteristic mismatch")]
    d = depth_by_links(cx, p).depth
    min_dim = min_facet_card(cx) - 1
    if d > min_dim:
        return [Outcome(FAIL, "depth exceeds minimum facet dimension", {"depth": d})]
    cm = bool(is_cohen_macaulay(cx, p))
    if cm != (d == cx.dim):
        return [Outcome(FAIL, "CM status disagrees with depth == dim", {"depth": d, "cm": cm})]
    if cm and not is_pure(cx):
        return [Outcome(FAIL, "CM complex is not pure")]
    if is_sequentially_cm(cx, p) and d != min_dim:
        return [Outcome(FAIL, "sequentially CM but depth below minimum facet dimension", {"depth": d})]
    if cm and not all(is_cohen_macaulay(skeleton(cx, r), p) for r in range(-1, cx.dim)):
        return [Outcome(FAIL, "a skeleton of a CM complex is not CM")]
    return [Outcome(PASS)]


def claim_pure_shift(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    pure = is_pure(shift(cx, cfg))
    cm = bool(is_cohen_macaulay(cx, cfg.prime))
    return [_ok(pure == cm, "shift purity disagrees with CM", {"pure_shift": pure, "cm": cm})]


def _apex(inst: Instance) -> int | None:
    apexes = near_cone_apexes(inst.complex)
    if not apexes:
        return None
    hint = inst.meta.get("apex")
    return hint if hint in apexes else min(apexes)


def claim_apex_max_link(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    v = _apex(inst)
    if v is None:
        return _skip("not a near-cone")
    fv = f_vector(link(cx, (v,)))
    for w in cx.vertices:
        fw = f_vector(link(cx, (w,)))
        if len(fw) > len(fv) or any(a > b for a, b in zip(fw, fv)):
            return [Outcome(FAIL, "vertex link larger than apex link", {"apex": v, "vertex": w})]
    return [Outcome(PASS, params={"apex": v})]


def claim_near_cone_link(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    v = _apex(inst)
    if v is None:
        return _skip("not a near-cone")
    check = check_apex_link_shift(cx, v, cfg)
    if not check.holds:
        return [Outcome(FAIL, check.reason, {"apex": v, "face": list(check.witness or ())})]
    before = f_vector(link(cx, (v,)))
    after = f_vector(link(check.shifted, (1,)))
    return [_ok(before == after, "apex link f-vector changed", {"apex": v, "before": before, "after": after}, apex=v)]


def claim_depth_ekr(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    if not near_cone_apexes(cx):
        return _skip("not a near-cone")
    d = depth_by_links(cx, cfg.prime).depth
    top = min((d + 1) // 2, max_facet_card(cx))
    if top < 1:
        return _skip(f"no r with 1 <= r <= (depth+1)/2 (depth {d})")
    return _ekr_outcomes(cx, range(1, top + 1))


def claim_seq_cm_near_cone(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    if not near_cone_apexes(cx):
        return _skip("not a near-cone")
    if not is_sequentially_cm(cx, cfg.prime):
        return _skip("not sequentially Cohen-Macaulay")
    k = min_facet_card(cx)
    if k < 2:
        return _skip("minimum facet cardinality below 2")
    return _ekr_outcomes(cx, range(1, k // 2 + 1))


def claim_shifted_ekr(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    if not is_shifted(cx):
        return _skip("not shifted")
    k = min_facet_card(cx)
    if k < 2:
        return _skip("minimum facet cardinality below 2")
    return _ekr_outcomes(cx, range(1, k // 2 + 1))


def claim_join_depth(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    if len(inst.factors) != 2:
        return _skip("instance is not a pair of complexes")
    a, b = inst.factors
    return [_ok(depth_of_join_check(a, b, cfg.prime), "depth of join is not additive")]


def claim_mixed_star(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    res = mixed_star_check(inst.complex)
    witness = {"family": _family(res.witness), "star": res.star_size}
    return [_ok(res.holds, f"mixed family of size {res.max_family_size} > star {res.star_size}", witness)]


def claim_simplex_strict(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    cx = inst.complex
    n = len(cx.vertices)
    if cx.facets != frozenset({(1 << n) - 1}):
        return _skip("not a simplex")
    rs = [r for r in range(2, n) if 2 * r < n]
    if not rs:
        return _skip("no r with 2 <= r < n/2")
    out = []
    for r in rs:
        res = is_strict_r_ekr(cx, r)
        out.append(_ok(res.strict, "maximum family without a common vertex", {"family": _family(res.witness or ())}, r=r))
    return out


def claim_coned_boundary(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    n, k = inst.meta.get("n"), inst.meta.get("k")
    if n is None or k is None:
        return _skip("not a coned boundary")
    out = []
    for r in range(n, (k + n) // 2 + 1):
        c = coned_boundary_counts(n, k, r)
        witness = {
            "star_formula": c.star_formula,
            "star_direct": c.star_direct,
            "family_formula": c.family_formula,
            "family_direct": c.family_direct,
        }
        if not c.family_matches:
            out.append(Outcome(FAIL, "family formula disagrees with direct count", witness, {"r": r}))
        elif not c.star_matches:
            out.append(Outcome(FAIL, "star formula disagrees with direct count", witness, {"r": r}))
        else:
            out.append(_ok(c.star_formula > c.family_formula, "star not larger than family", witness, r=r))
    return out


# claims on graphs


def _need_graph(inst: Instance) -> Graph | None:
    return inst.graph


def claim_flag_shift(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    g = _need_graph(inst)
    if g is None:
        return _skip("not a graph instance")
    ic = inst.complex
    s = shift(ic, cfg)
    flag = is_flag(s)
    cochordal = is_cochordal(g)
    dual = alexander_dual(ic)
    # the dual of a full simplex is VOID, which is vacuously Cohen-Macaulay
    dual_cm = True if dual.is_void else bool(is_cohen_macaulay(dual, cfg.prime))
    witness = {"shift_flag": flag, "cochordal": cochordal, "dual_cm": dual_cm}
    if not flag == cochordal == dual_cm:
        return [Outcome(FAIL, "flag shift / co-chordal / dual CM disagree", witness)]
    if not dual.is_void:
        # minimal non-faces are edges, so dual facets have n - 2 vertices
        if {len(f) for f in dual.facet_list()} != {g.n - 2}:
            return [Outcome(FAIL, "dual facets of an independence complex do not all have n-2 vertices")]
        if alexander_dual(shift(dual, cfg)) != s:
            return [Outcome(FAIL, "shifting does not commute with Alexander duality")]
    return [Outcome(PASS)]


def claim_threshold_shifted(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    g = _need_graph(inst)
    if g is None:
        return _skip("not a graph instance")
    order = degree_order(g)
    pos = {v: i + 1 for i, v in enumerate(order)}
    shifted = is_shifted(relabel(inst.complex, pos, g.n))
    th = is_threshold(g)
    if th and not (is_chordal(g) and is_cochordal(g)):
        return [Outcome(FAIL, "threshold graph not chordal and co-chordal")]
    return [_ok(bool(th) == shifted, "threshold status disagrees with shiftedness", {"threshold": bool(th), "shifted": shifted})]


def claim_depth_one(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    g = _need_graph(inst)
    if g is None:
        return _skip("not a graph instance")
    d = depth_by_links(inst.complex, cfg.prime).depth
    criterion = g.n > 1 and is_connected(complement(g))
    return [_ok((d >= 1) == criterion, "depth >= 1 disagrees with the complement criterion", {"depth": d})]


def claim_flag_nearcone(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    g = _need_graph(inst)
    if g is None:
        return _skip("not a graph instance")
    dec = flag_nearcone_decompose(g)
    if dec is not None and relabel_graph(g, [*dec.core_labels, dec.apex, *g.neighbors(dec.apex)]) != rebuild_nearcone(dec):
        return [Outcome(FAIL, "S^k D(core) does not rebuild the graph", {"apex": dec.apex, "k": dec.k})]
    if g.n >= 2:
        nontrivial = dec is not None and min_facet_card(inst.complex) >= 2
        has_isolated = 0 in g.adj
        if nontrivial != has_isolated:
            return [Outcome(FAIL, "near-cone with facets >= 2 disagrees with isolated vertex")]
    return [Outcome(PASS)]


def claim_seq_cm_graph(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    g = _need_graph(inst)
    if g is None:
        return _skip("not a graph instance")
    if 0 not in g.adj:
        return _skip("no isolated vertex")
    cx = inst.complex
    if not is_sequentially_cm(cx, cfg.prime):
        return _skip("not sequentially Cohen-Macaulay")
    k = min_facet_card(cx)
    if k < 2:
        return _skip("minimum facet cardinality below 2")
    return _ekr_outcomes(cx, range(1, k // 2 + 1))


def _depth1_parts(parts: tuple[Graph, ...]) -> int:
    return sum(1 for h in parts if h.n > 1 and is_connected(complement(h)))


def claim_union_ekr(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    parts = inst.parts
    if not parts or not any(h.n == 1 for h in parts):
        return _skip("not a disjoint union with an isolated vertex")
    count = len(parts)
    d = depth_by_links(inst.complex, cfg.prime).depth
    if d < count - 1:
        return [Outcome(FAIL, "depth of the union below parts - 1", {"depth": d, "parts": count})]
    top = min(count // 2, max_facet_card(inst.complex))
    if top < 1:
        return _skip("fewer than 2 parts")
    return _ekr_outcomes(inst.complex, range(1, top + 1))


def claim_union_depth_one(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    parts = inst.parts
    if not parts or not any(h.n == 1 for h in parts):
        return _skip("not a disjoint union with an isolated vertex")
    count = len(parts)
    m = _depth1_parts(parts)
    d = depth_by_links(inst.complex, cfg.prime).depth
    if d < count + m - 1:
        return [Outcome(FAIL, "depth of the union below parts + m - 1", {"depth": d, "parts": count, "m": m})]
    top = min((count + m) // 2, max_facet_card(inst.complex))
    if top < 1:
        return _skip("no feasible r")
    return _ekr_outcomes(inst.complex, range(1, top + 1))


def claim_cycles(inst: Instance, cfg: ShiftConfig) -> list[Outcome]:
    g = _need_graph(inst)
    if g is None or g.n < 3 or any(a.bit_count() != 2 for a in g.adj) or not is_connected(g):
        return _skip("not a cycle")
    cx = inst.complex
    n = g.n
    d = depth_by_links(cx, cfg.prime).depth
    if n == 4 and d != 0:
        return [Outcome(FAIL, "depth I(C_4) != 0", {"depth": d})]
    if n >= 5 and d < 1:
        return [Outcome(FAIL, "depth I(C_n) < 1", {"depth": d})]
    if is_sequentially_cm(cx, cfg.prime) != (n in (3, 5)):
        return [Outcome(FAIL, "sequential CM status of the cycle is off")]
    return _ekr_outcomes(cx, range(1, max_facet_card(cx) + 1))


CLAIMS: dict[str, Callable[[Instance, ShiftConfig], list[Outcome]]] = {
    "shift-properties": claim_shift_props,
    "depth-by-shift": claim_depth_by_shift,
    "homology-invariants": claim_homology_invariants,
    "cm-iff-pure-shift": claim_pure_shift,
    "apex-max-link": claim_apex_max_link,
    "near-cone-link-shift": claim_near_cone_link,
    "join-depth": claim_join_depth,
    "shifted-ekr": claim_shifted_ekr,
    "depth-ekr": claim_depth_ekr,
    "seq-cm-near-cone-ekr": claim_seq_cm_near_cone,
    "seq-cm-graph-ekr": claim_seq_cm_graph,
    "flag-shift-cochordal": claim_flag_shift,
    "threshold-shifted": claim_threshold_shifted,
    "flag-near-cone": claim_flag_nearcone,
    "depth-one-criterion": claim_depth_one,
    "union-ekr": claim_union_ekr,
    "union-depth-one-ekr": claim_union_depth_one,
    "simplex-strict-ekr": claim_simplex_strict,
    "coned-boundary-counts": claim_coned_boundary,
    "cycle-ekr": claim_cycles,
    "mixed-star": claim_mixed_star,
}


# reports


def instance_record(inst: Instance) -> dict[str, Any]:
    rec: dict[str, Any] = {
        "digest": inst.digest,
        "source": inst.source,
        "n": inst.complex.n,
        "facets": _family(inst.complex.facet_list()),
    }
    if inst.graph is not None:
        rec["graph"] = {"n": inst.graph.n, "edges": [list(e) for e in inst.graph.edges]}
    if inst.parts:
        rec["parts"] = [{"n": h.n, "edges": [list(e) for e in h.edges]} for h in inst.parts]
    if inst.factors:
        rec["factors"] = [{"n": f.n, "facets": _family(f.facet_list())} for f in inst.factors]
    if inst.meta:
        rec["meta"] = dict(inst.meta)
    return rec


def instance_from_record(rec: dict[str, Any]) -> Instance:
    def cplx(d: dict[str, Any]) -> SimplicialComplex:
        if d["facets"] == [[]]:
            return SimplicialComplex.empty(d["n"])
        return from_facets(d["facets"], d["n"])

    def graph(d: dict[str, Any]) -> Graph:
        return Graph.from_edges(d["n"], (tuple(e) for e in d["edges"]))

    return Instance(
        rec["source"],
        cplx(rec),
        graph=graph(rec["graph"]) if "graph" in rec else None,
        parts=tuple(graph(p) for p in rec.get("parts", ())),
        factors=tuple(cplx(f) for f in rec.get("factors", ())),
        meta=dict(rec.get("meta", {})),
    )


@dataclass
class VerificationReport:
    claim_id: str
    instance: dict[str, Any]
    params: dict[str, Any]
    verdict: str
    reason: str | None
    witness: Any
    runtime_ms: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "instance": self.instance,
            "params": self.params,
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": self.witness,
            "runtime_ms": round(self.runtime_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def evaluate(claim_id: str, inst: Instance, cfg: ShiftConfig) -> list[VerificationReport]:
    """Run one claim on one instance; guard breaches become skipped records."""
    claim = CLAIMS[claim_id]
    started = time.perf_counter()
    try:
        outcomes = claim(inst, cfg)
    except ResourceError as exc:
        outcomes = [Outcome(SKIPPED, f"resource: {exc}")]
    except GenericityError as exc:
        outcomes = [Outcome(SKIPPED, f"genericity: {exc}")]
    elapsed = (time.perf_counter() - started) * 1000 / max(len(outcomes), 1)
    rec = instance_record(inst)
    base = {"prime": cfg.prime, "seed": cfg.seed, "r": None, "t": None}
    return [
        VerificationReport(claim_id, rec, {**base, **o.params}, o.verdict, o.reason, o.witness, elapsed)
        for o in outcomes
    ]


def _evaluate_args(args: tuple[str, Instance, ShiftConfig]) -> list[VerificationReport]:
    return evaluate(*args)


def _drop_torn_tail(path: Path) -> None:
    """Cut a partial last line left by an interrupted write."""
    if not path.exists():
        return
    data = path.read_bytes()
    if data and not data.endswith(b"\n"):
        with path.open("r+b") as fh:
            fh.truncate(data.rfind(b"\n") + 1)


def _done_keys(path: Path) -> set[tuple[str, str, str]]:
    keys: set[tuple[str, str, str]] = set()
    if not path.exists():
        return keys
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                # a torn final line from an interrupted run
                continue
            inst = rec.get("instance", {})
            keys.add((rec.get("claim_id"), inst.get("source"), inst.get("digest")))
    return keys


def default_workers() -> int:
    return max(1, int(os.environ.get("EKR_WORKERS", "1")))


def run_campaign(
    claim_id: str,
    corpus: CorpusSpec | str | Iterable[Instance],
    cfg: ShiftConfig | None = None,
    out: str | Path | None = None,
    workers: int | None = None,
) -> Iterator[VerificationReport]:
    """Check ``claim_id`` on every corpus instance, yielding reports in corpus order.

    With ``out`` set, records are appended to that JSONL file and instances
    already present there are skipped, so an interrupted run can resume.
    """
    if claim_id not in CLAIMS:
        raise InputError(f"unknown claim {claim_id!r}; known: {', '.join(sorted(CLAIMS))}")
    cfg = cfg or ShiftConfig()
    if isinstance(corpus, str):
        corpus = CorpusSpec.parse(corpus)
    instances: Iterable[Instance] = corpus.expand() if isinstance(corpus, CorpusSpec) else corpus
    path = Path(out) if out is not None else None
    if path:
        _drop_torn_tail(path)
    done = _done_keys(path) if path else set()
    pending = (i for i in instances if (claim_id, i.source, i.digest) not in done)
    jobs = ((claim_id, i, cfg) for i in pending)
    workers = workers or default_workers()
    sink = path.open("a") if path else None
    try:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                # map keeps submission order, which is the canonical corpus order
                results: Iterable[list[VerificationReport]] = pool.map(_evaluate_args, jobs, chunksize=8)
                yield from _drain(results, sink)
        else:
            yield from _drain(map(_evaluate_args, jobs), sink)
    finally:
        if sink:
            sink.close()


def _drain(results: Iterable[list[VerificationReport]], sink: Any) -> Iterator[VerificationReport]:
    for batch in results:
        if sink:
            sink.write("".join(r.to_json() + "\n" for r in batch))
            sink.flush()
        yield from batch


def read_reports(path: str | Path) -> list[dict[str, Any]]:
    with Path(path).open() as fh:
        return [json.loads(line) for line in fh if line.strip()]


def summarize(records: Iterable[dict[str, Any]]) -> dict[str, Counter[str]]:
    counts: dict[str, Counter[str]] = defaultdict(Counter)
    for rec in records:
        counts[rec["claim_id"]][rec["verdict"]] += 1
    return dict(counts)


EKR_CLAIMS = {"depth-ekr", "seq-cm-near-cone-ekr", "seq-cm-graph-ekr", "shifted-ekr", "union-ekr", "union-depth-one-ekr", "cycle-ekr"}


def replay(rec: dict[str, Any], cfg: ShiftConfig | None = None) -> bool:
    """Re-validate a record standalone; True when the recorded verdict is reproduced.

    For failed EKR-type records the witness family itself is checked: its
    members must be r-faces of the instance, pairwise intersecting, and
    more numerous than the best star.
    """
    cfg = cfg or ShiftConfig(prime=rec["params"]["prime"], seed=rec["params"]["seed"])
    inst = instance_from_record(rec["instance"])
    if rec["verdict"] == FAIL and rec["claim_id"] in EKR_CLAIMS:
        from .complex import to_mask
        from .ekr import star_bound

        fam = [to_mask(f) for f in rec["witness"]["family"]]
        r = rec["params"]["r"]
        faces = inst.complex.faces
        if any(m not in faces or m.bit_count() != r for m in fam):
            return False
        if any(not a & b for i, a in enumerate(fam) for b in fam[i + 1 :]):
            return False
        return len(fam) > star_bound(inst.complex, r)[0]
    again = evaluate(rec["claim_id"], inst, cfg)
    wanted = {k: v for k, v in rec["params"].items()}
    return any(r.verdict == rec["verdict"] and r.params == wanted for r in again)
