"""Exact maximum intersecting families of faces.

A family of r-faces is pairwise t-intersecting exactly when it is a clique
in the graph on r-faces joining ``A`` and ``B`` whenever ``|A ∩ B| >= t``,
so every extremal question here is a maximum-clique search.  The search is
branch and bound over bit sets with greedy-colouring bounds (vertices of
the compatibility graph are pre-sorted by descending degree) and is seeded
with the best star, so a complex that is r-EKR is certified without
exploring much beyond the root.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .complex import Face, SimplicialComplex, card, to_face
from .errors import DomainError, ResourceError
from .graphs import coned_boundary

DEFAULT_BUDGET = 2000
MIXED_BUDGET = 1000
NODE_LIMIT = 10_000_000
ENUM_NODE_LIMIT = 1_000_000


class _CliqueSearch:
    """Maximum clique on a graph given as neighbour bit masks."""

    def __init__(self, adj: list[int], node_limit: int) -> None:
        self.adj = adj
        self.node_limit = node_limit
        self.nodes = 0

    def _colour(self, p: int) -> list[tuple[int, int]]:
        adj = self.adj
        out: list[tuple[int, int]] = []
        uncoloured = p
        colour = 0
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                b = q & -q
                v = b.bit_length() - 1
                q &= ~adj[v] & ~b
                uncoloured ^= b
                out.append((v, colour))
        return out

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise ResourceError(f"clique search exceeded {self.node_limit} nodes")

    def maximum(self, incumbent: list[int]) -> list[int]:
        best = list(incumbent)
        adj = self.adj

        def expand(r: list[int], p: int) -> None:
            nonlocal best
            self._tick()
            for v, c in reversed(self._colour(p)):
                if len(r) + c <= len(best):
                    return
                b = 1 << v
                r.append(v)
                sub = p & adj[v]
                if sub:
                    expand(r, sub)
                elif len(r) > len(best):
                    best = list(r)
                r.pop()
                p &= ~b

        full = (1 << len(adj)) - 1
        if adj:
            expand([], full)
        return best

    def all_of_size(self, target: int) -> list[list[int]]:
        """Every clique with exactly ``target`` vertices (``target`` must be the optimum)."""
        found: list[list[int]] = []
        adj = self.adj

        def expand(r: list[int], p: int) -> None:
            self._tick()
            for v, c in reversed(self._colour(p)):
                if len(r) + c < target:
                    return
                b = 1 << v
                r.append(v)
                if len(r) == target:
                    found.append(list(r))
                else:
                    sub = p & adj[v]
                    if sub:
                        expand(r, sub)
                r.pop()
                p &= ~b

        if target == 0:
            return [[]]
        expand([], (1 << len(adj)) - 1)
        return found


def _compatibility(items: list[int], t: int) -> tuple[list[int], list[int]]:
    """Relabel ``items`` by descending degree and build the neighbour masks."""
    size = len(items)
    raw = [0] * size
    for i in range(size):
        a = items[i]
        for j in range(i + 1, size):
            if (a & items[j]).bit_count() >= t:
                raw[i] |= 1 << j
                raw[j] |= 1 << i
    order = sorted(range(size), key=lambda i: (-raw[i].bit_count(), i))
    pos = {old: new for new, old in enumerate(order)}
    adj = [0] * size
    for old in range(size):
        m = raw[old]
        nm = 0
        while m:
            b = m & -m
            m ^= b
            nm |= 1 << pos[b.bit_length() - 1]
        adj[pos[old]] = nm
    return [items[i] for i in order], adj


def _sorted_family(masks: list[int]) -> tuple[Face, ...]:
    return tuple(sorted(to_face(m) for m in masks))


def _r_faces(cx: SimplicialComplex, r: int) -> list[int]:
    if r < 1:
        raise DomainError("intersecting families need r >= 1")
    groups = cx.faces_by_card
    if cx.is_void or r >= len(groups):
        raise DomainError(f"r = {r} exceeds the largest facet cardinality")
    return list(groups[r])


def star_bound(cx: SimplicialComplex, r: int) -> tuple[int, int]:
    """Largest number of r-faces through one vertex, and the smallest such vertex."""
    faces = _r_faces(cx, r)
    counts = [0] * (cx.n + 1)
    for f in faces:
        for v in to_face(f):
            counts[v] += 1
    best = max(range(1, cx.n + 1), key=lambda v: (counts[v], -v))
    return counts[best], best


def _best_t_star(faces: list[int], t: int) -> list[int]:
    counts: Counter[int] = Counter()
    for f in faces:
        for sub in combinations(to_face(f), t):
            m = 0
            for v in sub:
                m |= 1 << (v - 1)
            counts[m] += 1
    if not counts:
        return faces[:1]
    core = min(counts, key=lambda m: (-counts[m], to_face(m)))
    return [f for f in faces if f & core == core]


@dataclass(frozen=True)
class IntersectingResult:
    size: int
    witness: tuple[Face, ...]
    nodes: int


def max_intersecting(
    cx: SimplicialComplex,
    r: int,
    t: int = 1,
    budget: int = DEFAULT_BUDGET,
    node_limit: int = NODE_LIMIT,
) -> IntersectingResult:
    """Exact largest pairwise t-intersecting family of r-faces, with a witness."""
    if not 1 <= t <= r:
        raise DomainError(f"need 1 <= t <= r, got t={t}, r={r}")
    faces = _r_faces(cx, r)
    if len(faces) > budget:
        raise ResourceError(f"{len(faces)} r-faces exceed the budget of {budget}")
    items, adj = _compatibility(faces, t)
    pos = {m: i for i, m in enumerate(items)}
    seed = [pos[m] for m in _best_t_star(faces, t)]
    search = _CliqueSearch(adj, node_limit)
    best = search.maximum(seed)
    return IntersectingResult(len(best), _sorted_family([items[i] for i in best]), search.nodes)


@dataclass(frozen=True)
class EkrVerdict:
    r: int
    t: int
    star_bound: int
    best_star_vertex: int
    max_family_size: int
    witness: tuple[Face, ...]
    is_ekr: bool
    is_strict: bool | None = None
    elapsed: float = field(default=0.0, compare=False)


def is_r_ekr(cx: SimplicialComplex, r: int, t: int = 1, budget: int = DEFAULT_BUDGET) -> EkrVerdict:
    started = time.perf_counter()
    bound, vertex = star_bound(cx, r)
    found = max_intersecting(cx, r, t, budget)
    return EkrVerdict(
        r=r,
        t=t,
        star_bound=bound,
        best_star_vertex=vertex,
        max_family_size=found.size,
        witness=found.witness,
        is_ekr=found.size <= bound,
        elapsed=time.perf_counter() - started,
    )


@dataclass(frozen=True)
class StrictResult:
    strict: bool
    max_family_size: int
    families_checked: int
    witness: tuple[Face, ...] | None = None

    def __bool__(self) -> bool:
        return self.strict


def is_strict_r_ekr(
    cx: SimplicialComplex,
    r: int,
    budget: int = DEFAULT_BUDGET,
    node_limit: int = ENUM_NODE_LIMIT,
) -> StrictResult:
    """Every maximum intersecting r-family is the full star of some vertex."""
    opt = max_intersecting(cx, r, 1, budget).size
    items, adj = _compatibility(_r_faces(cx, r), 1)
    cliques = _CliqueSearch(adj, node_limit).all_of_size(opt)
    non_stars = []
    for clique in cliques:
        common = -1
        for i in clique:
            common &= items[i]
        if not common:
            non_stars.append(_sorted_family([items[i] for i in clique]))
    # a maximum family inside one vertex's star is that whole star
    if non_stars:
        return StrictResult(False, opt, len(cliques), min(non_stars))
    return StrictResult(True, opt, len(cliques))


@dataclass(frozen=True)
class MixedStarResult:
    holds: bool
    max_family_size: int
    star_size: int
    star_vertex: int
    witness: tuple[Face, ...]


def mixed_star_check(cx: SimplicialComplex, budget: int = MIXED_BUDGET, node_limit: int = NODE_LIMIT) -> MixedStarResult:
    """Mixed-cardinality version: no intersecting family of faces beats the best full star."""
    faces = sorted((m for m in cx.faces if m), key=lambda m: (card(m), to_face(m)))
    if len(faces) > budget:
        raise ResourceError(f"{len(faces)} faces exceed the budget of {budget}")
    if not faces:
        raise DomainError("complex has no nonempty faces")
    counts = [0] * (cx.n + 1)
    for f in faces:
        for v in to_face(f):
            counts[v] += 1
    vertex = max(range(1, cx.n + 1), key=lambda v: (counts[v], -v))
    items, adj = _compatibility(faces, 1)
    bit = 1 << (vertex - 1)
    seed = [i for i, m in enumerate(items) if m & bit]
    best = _CliqueSearch(adj, node_limit).maximum(seed)
    return MixedStarResult(
        len(best) <= counts[vertex],
        len(best),
        counts[vertex],
        vertex,
        _sorted_family([items[i] for i in best]),
    )


@dataclass(frozen=True)
class ConedBoundaryCounts:
    n: int
    k: int
    r: int
    star_formula: int
    family_formula: int
    star_direct: int | None = None
    family_direct: int | None = None

    @property
    def star_matches(self) -> bool | None:
        return None if self.star_direct is None else self.star_direct == self.star_formula

    @property
    def family_matches(self) -> bool | None:
        return None if self.family_direct is None else self.family_direct == self.family_formula


def coned_boundary_counts(n: int, k: int, r: int, direct: bool = True, max_vertices: int = 30) -> ConedBoundaryCounts:
    """Closed-form star and family sizes for the coned simplex boundary.

    ``star_formula = n * C(n + k, r - 1)`` is the claimed link count at a
    base vertex and ``family_formula = (n + 1) * C(k, r - n)`` counts the
    r-faces containing a facet of the boundary.  With ``direct`` set (and
    the complex small enough) both are also counted on the complex itself,
    at base vertex 1.
    """
    if n < 2:
        raise DomainError("coned boundary counts need n >= 2")
    if k <= n:
        raise DomainError("coned boundary counts need k > n")
    if not n <= r <= (k + n) // 2:
        raise DomainError(f"need {n} <= r <= {(k + n) // 2}")
    star_formula = n * comb(n + k, r - 1)
    family_formula = (n + 1) * comb(k, r - n)
    if not direct or (k + 1) * (n + 1) > max_vertices:
        return ConedBoundaryCounts(n, k, r, star_formula, family_formula)
    cx = coned_boundary(n, k)
    level = cx.faces_by_card[r]
    star_direct = sum(1 for f in level if f & 1)
    base = (1 << (n + 1)) - 1
    boundary_facets = [base & ~(1 << i) for i in range(n + 1)]
    family_direct = sum(1 for f in level if any(f & b == b for b in boundary_facets))
    return ConedBoundaryCounts(n, k, r, star_formula, family_formula, star_direct, family_direct)
