"""Simple graphs on ``1..n`` and their independence complexes.

Adjacency is a tuple of neighbour bit masks (vertex ``v`` is bit ``v - 1``),
matching the face encoding in :mod:`ekrcomplex.complex`.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from .complex import (
    SimplicialComplex,
    cone,
    from_facets,
    from_masks,
    near_cone_apexes,
    to_face,
)
from .errors import DomainError, InputError, ResourceError

MAX_EXHAUSTIVE = 6


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge {u}-{v} outside 1..{n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in to_face(self.adj[u - 1]) if u < v]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return to_face(self.adj[v - 1])

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise DomainError(f"vertex {v} outside 1..{self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    g._check(v)
    return to_face(g.adj[v - 1] | 1 << (v - 1))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~a & ~(1 << i) for i, a in enumerate(g.adj)))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``keep`` relabeled onto ``1..len(keep)``, plus the old labels."""
    kept = sorted(set(keep))
    index = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        m = 0
        for w in to_face(g.adj[v - 1]):
            if w in index:
                m |= 1 << index[w]
        adj.append(m)
    return Graph(len(kept), tuple(adj)), kept


def remove_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, list[int]]:
    gone = set(drop)
    return induced_subgraph(g, (v for v in range(1, g.n + 1) if v not in gone))


def relabel_graph(g: Graph, order: list[int]) -> Graph:
    """Graph whose vertex ``i`` is the old vertex ``order[i - 1]``."""
    pos = {v: i + 1 for i, v in enumerate(order)}
    return Graph.from_edges(g.n, ((pos[u], pos[v]) for u, v in g.edges))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= g.adj[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.vertex_mask


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(a << offset for a in h.adj)
        offset += h.n
    return Graph(offset, tuple(adj))


def _maximal_cliques(adj: tuple[int, ...], universe: int) -> Iterator[int]:
    """Bron-Kerbosch with Tomita pivoting over bit masks."""
    stack = [(0, universe, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield r
            continue
        px = p | x
        best = -1
        pivot_nb = 0
        m = px
        while m:
            b = m & -m
            m ^= b
            nb = adj[b.bit_length() - 1]
            k = (p & nb).bit_count()
            if k > best:
                best, pivot_nb = k, nb
        cand = p & ~pivot_nb
        while cand:
            b = cand & -cand
            cand ^= b
            nb = adj[b.bit_length() - 1]
            stack.append((r | b, p & nb, x & nb))
            p &= ~b
            x |= b


def maximal_independent_sets(g: Graph) -> list[int]:
    co = complement(g)
    return sorted(_maximal_cliques(co.adj, g.vertex_mask), key=to_face)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Complex of independent sets; facets are the maximal independent sets."""
    if g.n == 0:
        return SimplicialComplex.empty(0)
    return from_masks(maximal_independent_sets(g), g.n)


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first order by partition refinement."""
    order: list[int] = []
    parts: list[list[int]] = [list(range(1, g.n + 1))] if g.n else []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        nb = g.adj[v - 1]
        refined: list[list[int]] = []
        for part in parts:
            inside = [w for w in part if nb >> (w - 1) & 1]
            outside = [w for w in part if not nb >> (w - 1) & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        parts = refined
    return order


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    """Each vertex's later neighbours must form a clique (order read backwards from LexBFS)."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in to_face(g.adj[v - 1]) if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = 0
        for w in later:
            if w != parent:
                rest |= 1 << (w - 1)
        if rest & ~g.adj[parent - 1]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    order = lex_bfs(g)
    return is_perfect_elimination_order(g, order[::-1])


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def d_op(g: Graph) -> Graph:
    """Append an isolated vertex."""
    return Graph(g.n + 1, g.adj + (0,))


def s_op(g: Graph) -> Graph:
    """Append a vertex adjacent to every existing vertex."""
    new = 1 << g.n
    return Graph(g.n + 1, tuple(a | new for a in g.adj) + (g.vertex_mask,))


@dataclass(frozen=True)
class ThresholdResult:
    is_threshold: bool
    # D/S operations that rebuild the graph from one vertex, in build order
    word: str = ""

    def __bool__(self) -> bool:
        return self.is_threshold


def is_threshold(g: Graph) -> ThresholdResult:
    """Strip isolated or dominating vertices until one vertex remains."""
    if g.n < 1:
        raise DomainError("threshold test needs at least one vertex")
    alive = g.vertex_mask
    ops: list[str] = []
    while alive.bit_count() > 1:
        for i in range(g.n):
            b = 1 << i
            if not alive & b:
                continue
            nb = g.adj[i] & alive
            if nb == 0:
                ops.append("D")
                break
            if nb == alive & ~b:
                ops.append("S")
                break
        else:
            return ThresholdResult(False)
        alive &= ~b
    return ThresholdResult(True, "".join(reversed(ops)))


def build_threshold(word: str) -> Graph:
    g = Graph(1, (0,))
    for op in word:
        g = d_op(g) if op == "D" else s_op(g)
    return g


def degree_order(g: Graph) -> list[int]:
    """Vertices by increasing degree, ties by label."""
    return sorted(range(1, g.n + 1), key=lambda v: (g.degree(v), v))


@dataclass(frozen=True)
class NearConeDecomposition:
    k: int
    core: Graph
    apex: int
    # core vertex i is the original vertex core_labels[i - 1]
    core_labels: tuple[int, ...]
    # set for the one-vertex graph, whose core has no vertices
    degenerate: bool = False


def flag_nearcone_decompose(g: Graph) -> NearConeDecomposition | None:
    """Write ``g`` as ``S^k D(core)`` when its independence complex is a near-cone."""
    if g.n == 0:
        return None
    apexes = near_cone_apexes(independence_complex(g))
    if not apexes:
        return None
    v = min(apexes, key=lambda a: (g.degree(a), a))
    core, labels = remove_vertices(g, closed_neighborhood(g, v))
    return NearConeDecomposition(g.degree(v), core, v, tuple(labels), degenerate=g.n == 1)


def rebuild_nearcone(dec: NearConeDecomposition) -> Graph:
    g = d_op(dec.core)
    for _ in range(dec.k):
        g = s_op(g)
    return g


# generators


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((1, i) for i in range(2, leaves + 2)))


def complete_multipartite(parts: Iterable[int]) -> Graph:
    labels: list[int] = []
    for idx, size in enumerate(parts):
        labels.extend([idx] * size)
    n = len(labels)
    return Graph.from_edges(
        n, ((u + 1, v + 1) for u, v in combinations(range(n), 2) if labels[u] != labels[v])
    )


def erdos_renyi(n: int, density: float, seed: int) -> Graph:
    rng = random.Random(f"gnp:{n}:{density}:{seed}")
    return Graph.from_edges(n, (e for e in combinations(range(1, n + 1), 2) if rng.random() < density))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^C(n,2)`` graphs on ``1..n``, ordered by edge bit pattern."""
    if n > MAX_EXHAUSTIVE:
        raise ResourceError(f"exhaustive graph enumeration is limited to n <= {MAX_EXHAUSTIVE}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def coned_boundary(n: int, k: int) -> SimplicialComplex:
    """Boundary of the simplex on ``n + 1`` vertices with ``k`` new cone points per facet.

    Base vertices are ``1..n+1``; the facet missing base vertex ``i`` gets
    the points ``n + 2 + (i - 1) k .. n + 1 + i k``, so the complex is pure
    of cardinality ``n + k`` on ``(k + 1)(n + 1)`` vertices.
    """
    if n < 1 or k < 0:
        raise DomainError("coned boundary needs n >= 1 and k >= 0")
    base = list(range(1, n + 2))
    facets = []
    for i in base:
        points = range(n + 2 + (i - 1) * k, n + 2 + i * k)
        facets.append([v for v in base if v != i] + list(points))
    return from_facets(facets, (k + 1) * (n + 1))


def independence_cone_check(g: Graph) -> bool:
    """I(D(G)) is the cone over I(G) with the new vertex as apex."""
    return independence_complex(d_op(g)) == cone(independence_complex(g), g.n + 1)
