"""Deterministic instance corpora for verification campaigns.

A corpus is named by a compact string, ``family:arg:arg...``, e.g.
``all-graphs:5`` or ``random-complexes:200:7:0.5:0``.  Expanding the same
string always yields the same instances in the same order.
"""

from __future__ import annotations

import hashlib
import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .complex import (
    SimplicialComplex,
    card,
    from_facets,
    from_masks,
    minimal_nonfaces,
    relabel,
    to_face,
)
from .errors import InputError, ResourceError
from .graphs import (
    Graph,
    all_labeled_graphs,
    coned_boundary,
    cycle,
    disjoint_union,
    edgeless,
    independence_complex,
    is_chordal,
    is_threshold,
)


@dataclass(frozen=True)
class Instance:
    source: str
    complex: SimplicialComplex
    graph: Graph | None = None
    # disjoint-union parts, or the two join factors
    parts: tuple[Graph, ...] = ()
    factors: tuple[SimplicialComplex, ...] = ()
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def digest(self) -> str:
        return complex_digest(self.complex)


def complex_digest(cx: SimplicialComplex) -> str:
    text = f"{cx.n}|" + ";".join(",".join(map(str, f)) for f in cx.facet_list())
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class CorpusSpec:
    family: str
    args: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> CorpusSpec:
        family, *args = text.split(":")
        if family not in FAMILIES:
            raise InputError(f"unknown corpus family {family!r}; known: {', '.join(sorted(FAMILIES))}")
        return cls(family, tuple(args))

    def __str__(self) -> str:
        return ":".join((self.family, *self.args))

    def expand(self) -> Iterator[Instance]:
        try:
            yield from FAMILIES[self.family](str(self), *self.args)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad arguments for corpus {self}: {exc}") from None


def random_complex(n: int, density: float, rng: random.Random) -> SimplicialComplex:
    """Random facets over ``1..n``; leftover vertices become isolated points."""
    candidates = []
    for _ in range(rng.randint(1, 2 * n)):
        face = [v for v in range(1, n + 1) if rng.random() < density]
        if face:
            candidates.append(face)
    covered = {v for f in candidates for v in f}
    candidates.extend([v] for v in range(1, n + 1) if v not in covered)
    return from_facets(candidates, n)


def random_subcomplex(cx: SimplicialComplex, rng: random.Random) -> SimplicialComplex:
    """Subcomplex generated by a random subset of the faces (on the same universe)."""
    faces = sorted(cx.faces, key=lambda m: (card(m), to_face(m)))
    keep = [m for m in faces if rng.random() < 0.5]
    if not keep:
        keep = [0]
    return from_masks(keep, cx.n)


def random_near_cone(n: int, rng: random.Random, extra: bool) -> tuple[SimplicialComplex, int]:
    """Cone over a random complex, optionally plus facets whose boundary lies in the base.

    The apex is placed at a random label.  Returns the complex and its apex.
    """
    base = random_complex(n - 1, rng.uniform(0.3, 0.7), rng)
    apex = rng.randint(1, n)
    labels = {v: v if v < apex else v + 1 for v in range(1, n)}
    lk = relabel(base, labels, n)
    bit = 1 << (apex - 1)
    facets = [f | bit for f in lk.facets]
    if extra:
        others = [m for m in minimal_nonfaces(lk) if not m & bit and card(m) >= 2]
        facets.extend(m for m in others if rng.random() < 0.5)
    return from_masks(facets, n), apex


def _graph_instance(source: str, g: Graph) -> Instance:
    return Instance(source, independence_complex(g), graph=g)


def _all_graphs(name: str, n_max: str) -> Iterator[Instance]:
    for n in range(1, int(n_max) + 1):
        for i, g in enumerate(all_labeled_graphs(n)):
            yield _graph_instance(f"{name}#n{n}.{i}", g)


def _graphs_with_isolated(name: str, n_max: str) -> Iterator[Instance]:
    for n in range(1, int(n_max) + 1):
        for i, g in enumerate(all_labeled_graphs(n)):
            if 0 in g.adj:
                yield _graph_instance(f"{name}#n{n}.{i}", g)


def _chordal(name: str, n_max: str) -> Iterator[Instance]:
    for n in range(1, int(n_max) + 1):
        for i, g in enumerate(all_labeled_graphs(n)):
            if is_chordal(g):
                yield _graph_instance(f"{name}#n{n}.{i}", g)


def _threshold(name: str, n_max: str) -> Iterator[Instance]:
    for n in range(1, int(n_max) + 1):
        for i, g in enumerate(all_labeled_graphs(n)):
            if is_threshold(g):
                yield _graph_instance(f"{name}#n{n}.{i}", g)


def _cycles(name: str, span: str) -> Iterator[Instance]:
    lo, _, hi = span.partition("-")
    for n in range(int(lo), int(hi or lo) + 1):
        yield _graph_instance(f"{name}#C{n}", cycle(n))


def _random_complexes(name: str, count: str, n_max: str, density: str = "0.5", seed: str = "0") -> Iterator[Instance]:
    rng = random.Random(f"random-complexes:{n_max}:{density}:{seed}")
    for i in range(int(count)):
        n = rng.randint(2, int(n_max))
        yield Instance(f"{name}#{i}", random_complex(n, float(density), rng))


def _near_cones(name: str, count: str, n_max: str, seed: str = "0") -> Iterator[Instance]:
    rng = random.Random(f"near-cones:{n_max}:{seed}")
    for i in range(int(count)):
        n = rng.randint(2, int(n_max))
        cx, apex = random_near_cone(n, rng, extra=bool(i % 2))
        yield Instance(f"{name}#{i}", cx, meta={"apex": apex})


def _complex_pairs(name: str, count: str, n_max: str, seed: str = "0") -> Iterator[Instance]:
    from .complex import join

    rng = random.Random(f"complex-pairs:{n_max}:{seed}")
    for i in range(int(count)):
        a = random_complex(rng.randint(1, int(n_max)), rng.uniform(0.3, 0.7), rng)
        b = random_complex(rng.randint(1, int(n_max)), rng.uniform(0.3, 0.7), rng)
        yield Instance(f"{name}#{i}", join(a, b), factors=(a, b))


def _coned_boundaries(name: str, n_max: str, k_max: str) -> Iterator[Instance]:
    for n in range(2, int(n_max) + 1):
        for k in range(n + 1, int(k_max) + 1):
            yield Instance(f"{name}#n{n}k{k}", coned_boundary(n, k), meta={"n": n, "k": k})


def small_graph_types(max_size: int = 3) -> list[Graph]:
    """One graph per isomorphism type on 1..max_size vertices (max_size <= 3)."""
    from .graphs import complete, path

    types = [edgeless(1), edgeless(2), complete(2)]
    if max_size >= 3:
        types += [edgeless(3), disjoint_union([complete(2), edgeless(1)]), path(3), complete(3)]
    return [g for g in types if g.n <= max_size]


def _disjoint_unions(name: str, max_parts: str = "4", part_size: str = "3") -> Iterator[Instance]:
    """An isolated vertex plus every multiset of up to ``max_parts - 1`` small graphs."""
    types = small_graph_types(int(part_size))
    isolated = edgeless(1)
    i = 0
    for extra in range(int(max_parts)):
        for combo in combinations_with_replacement(range(len(types)), extra):
            parts = (isolated, *(types[c] for c in combo))
            g = disjoint_union(parts)
            yield Instance(f"{name}#{i}", independence_complex(g), graph=g, parts=parts)
            i += 1


def _simplices(name: str, n_max: str) -> Iterator[Instance]:
    for n in range(1, int(n_max) + 1):
        yield Instance(f"{name}#n{n}", SimplicialComplex.simplex(n))


def all_shifted_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every shifted complex on ``1..n`` covering all ``n`` vertices."""
    if n > 6:
        raise ResourceError("exhaustive shifted enumeration is limited to n <= 6")
    order = sorted(range(1 << n), key=lambda m: (card(m), sum(to_face(m))))
    preds: dict[int, list[int]] = {}
    for m in order:
        ps = []
        for i in range(n):
            if m >> i & 1:
                ps.append(m ^ (1 << i))
                if i and not m >> (i - 1) & 1:
                    ps.append(m ^ (1 << i) | (1 << (i - 1)))
        preds[m] = ps
    top = 1 << (n - 1) if n else 0
    chosen = {0}

    def rec(k: int) -> Iterator[SimplicialComplex]:
        if k == len(order):
            if n == 0 or top in chosen:
                yield from_masks(chosen, n)
            return
        m = order[k]
        yield from rec(k + 1)
        if all(q in chosen for q in preds[m]):
            chosen.add(m)
            yield from rec(k + 1)
            chosen.discard(m)

    yield from rec(1)


def _shifted(name: str, n_max: str) -> Iterator[Instance]:
    i = 0
    for n in range(1, int(n_max) + 1):
        for cx in all_shifted_complexes(n):
            yield Instance(f"{name}#n{n}.{i}", cx)
            i += 1


FAMILIES = {
    "all-graphs": _all_graphs,
    "graphs-with-isolated": _graphs_with_isolated,
    "chordal": _chordal,
    "threshold": _threshold,
    "cycles": _cycles,
    "random-complexes": _random_complexes,
    "near-cones": _near_cones,
    "complex-pairs": _complex_pairs,
    "coned-boundaries": _coned_boundaries,
    "disjoint-unions": _disjoint_unions,
    "simplices": _simplices,
    "shifted": _shifted,
}
