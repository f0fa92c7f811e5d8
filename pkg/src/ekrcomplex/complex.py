"""Finite abstract simplicial complexes on the vertex universe ``1..n``.

Faces are stored as integer bit masks (vertex ``v`` is bit ``v - 1``) and
exposed to callers as strictly increasing tuples of 1-based vertex labels.
A complex keeps only its facets; the full face set is enumerated on first
use and cached.

Counting convention: an *r-face* is a face of cardinality ``r`` and
``f_vector(D)[r]`` counts r-faces, so ``f_vector(D)[0] == 1`` counts the
empty face.  Many texts index by dimension instead, which shifts every
index by one; nothing here uses the dimension-indexed form.

Two degenerate complexes are distinct values: the VOID complex has no
faces at all, the EMPTY complex ``{∅}`` has only the empty face.  The link
of a facet is EMPTY.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import DomainError, InputError

Face = tuple[int, ...]

MAX_VERTICES = 64


def to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        if not isinstance(v, int) or v < 1:
            raise InputError(f"vertex labels must be positive integers, got {v!r}")
        mask |= 1 << (v - 1)
    return mask


def to_face(mask: int) -> Face:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def card(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterable[int]:
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def _antichain(masks: Iterable[int]) -> frozenset[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=card, reverse=True):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by ``n`` and an antichain of facet masks.

    Build instances with :func:`from_facets` rather than directly; the
    constructor trusts that ``facets`` is already an antichain.
    """

    n: int
    facets: frozenset[int]

    @classmethod
    def void(cls, n: int = 0) -> SimplicialComplex:
        return cls(n, frozenset())

    @classmethod
    def empty(cls, n: int = 0) -> SimplicialComplex:
        return cls(n, frozenset({0}))

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, frozenset({(1 << n) - 1}))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == frozenset({0})

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def faces_by_card(self) -> tuple[tuple[int, ...], ...]:
        """Faces grouped by cardinality, each group in lexicographic order."""
        if self.is_void:
            return ()
        top = max(card(f) for f in self.facets)
        groups: list[list[int]] = [[] for _ in range(top + 1)]
        for m in self.faces:
            groups[card(m)].append(m)
        return tuple(tuple(sorted(g, key=to_face)) for g in groups)

    @cached_property
    def vertex_mask(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @property
    def vertices(self) -> Face:
        """Vertices lying in some face (the universe may be larger)."""
        return to_face(self.vertex_mask)

    @property
    def dim(self) -> int:
        if self.is_void:
            raise DomainError("the void complex has no dimension")
        return max(card(f) for f in self.facets) - 1

    def facet_list(self) -> list[Face]:
        return sorted((to_face(f) for f in self.facets), key=lambda t: (len(t), t))

    def faces_of_card(self, r: int) -> list[Face]:
        groups = self.faces_by_card
        if r < 0 or r >= len(groups):
            return []
        return [to_face(m) for m in groups[r]]

    def has_face(self, face: Iterable[int]) -> bool:
        return to_mask(face) in self.faces

    def __contains__(self, face: object) -> bool:
        if isinstance(face, int):
            return face in self.faces
        return self.has_face(face)  # type: ignore[arg-type]

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, VOID)"
        return f"SimplicialComplex(n={self.n}, facets={self.facet_list()})"


def from_facets(candidates: Iterable[Iterable[int]], n: int | None = None) -> SimplicialComplex:
    """Complex generated by ``candidates``; dominated candidates are dropped."""
    masks = [to_mask(c) for c in candidates]
    top = max((m.bit_length() for m in masks), default=0)
    if n is None:
        n = top
    elif n < top:
        raise InputError(f"vertex count {n} is smaller than the largest label {top}")
    if n > MAX_VERTICES:
        raise InputError(f"at most {MAX_VERTICES} vertices are supported")
    return SimplicialComplex(n, _antichain(masks))


def from_masks(masks: Iterable[int], n: int) -> SimplicialComplex:
    return SimplicialComplex(n, _antichain(masks))


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(g) for g in cx.faces_by_card)


def _require_face(cx: SimplicialComplex, mask: int) -> None:
    if mask not in cx.faces:
        raise DomainError(f"{to_face(mask)} is not a face of the complex")


def link(cx: SimplicialComplex, face: Iterable[int] | int) -> SimplicialComplex:
    """Link of a face, on the same vertex universe (uncovered vertices allowed)."""
    sigma = face if isinstance(face, int) else to_mask(face)
    _require_face(cx, sigma)
    return SimplicialComplex(cx.n, _antichain(f & ~sigma for f in cx.facets if f & sigma == sigma))


def deletion(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces avoiding vertex ``v`` (the complex D minus v)."""
    bit = 1 << (v - 1)
    return SimplicialComplex(cx.n, _antichain(f & ~bit for f in cx.facets))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join, with ``b`` relabeled onto ``a.n + 1 .. a.n + b.n``."""
    if a.n + b.n > MAX_VERTICES:
        raise InputError(f"at most {MAX_VERTICES} vertices are supported")
    facets = frozenset(fa | (fb << a.n) for fa in a.facets for fb in b.facets)
    return SimplicialComplex(a.n + b.n, facets)


def cone(cx: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Cone over ``cx``; the apex defaults to a new vertex ``n + 1``."""
    if apex is None:
        return join(cx, SimplicialComplex.simplex(1))
    bit = 1 << (apex - 1)
    if cx.vertex_mask & bit:
        raise DomainError(f"apex {apex} already lies in the complex")
    return SimplicialComplex(max(cx.n, apex), frozenset(f | bit for f in cx.facets))


def skeleton(cx: SimplicialComplex, r: int) -> SimplicialComplex:
    """All faces of dimension at most ``r``."""
    if r < -1:
        raise DomainError("skeleton dimension must be >= -1")
    if cx.is_void:
        return cx
    top = r + 1
    kept = [f for f in cx.facets if card(f) <= top]
    groups = cx.faces_by_card
    if top < len(groups):
        kept.extend(groups[top])
    return SimplicialComplex(cx.n, _antichain(kept))


def pure_skeleton(cx: SimplicialComplex, r: int) -> SimplicialComplex:
    """Subcomplex generated by the faces of dimension exactly ``r``."""
    if cx.is_void:
        raise DomainError("the void complex has no pure skeleta")
    if r < -1 or r > cx.dim:
        raise DomainError(f"pure skeleton dimension {r} outside [-1, {cx.dim}]")
    return SimplicialComplex(cx.n, frozenset(cx.faces_by_card[r + 1]))


def min_facet_card(cx: SimplicialComplex) -> int:
    if cx.is_void:
        raise DomainError("the void complex has no facets")
    return min(card(f) for f in cx.facets)


def max_facet_card(cx: SimplicialComplex) -> int:
    if cx.is_void:
        raise DomainError("the void complex has no facets")
    return max(card(f) for f in cx.facets)


def is_pure(cx: SimplicialComplex) -> bool:
    return min_facet_card(cx) == max_facet_card(cx)


def is_shifted(cx: SimplicialComplex) -> bool:
    """True iff swapping any vertex of a face for a smaller one stays a face.

    Checking facets suffices: a face inside a facet inherits the property.
    """
    faces = cx.faces
    for f in cx.facets:
        for i in range(cx.n):
            bi = 1 << i
            if not f & bi:
                continue
            rest = f & ~bi
            for j in range(i):
                bj = 1 << j
                if not f & bj and (rest | bj) not in faces:
                    return False
    return True


def is_near_cone_apex(cx: SimplicialComplex, v: int) -> bool:
    bv = 1 << (v - 1)
    if not cx.vertex_mask & bv:
        return False
    faces = cx.faces
    for f in cx.facets:
        if f & bv:
            continue
        m = f
        while m:
            bw = m & -m
            m ^= bw
            if (f & ~bw) | bv not in faces:
                return False
    return True


def near_cone_apexes(cx: SimplicialComplex) -> frozenset[int]:
    """Every vertex with respect to which ``cx`` is a near-cone."""
    if cx.is_void:
        raise DomainError("the void complex has no vertices")
    return frozenset(v for v in cx.vertices if is_near_cone_apex(cx, v))


def minimal_nonfaces(cx: SimplicialComplex) -> list[int]:
    """Minimal non-faces within the universe ``1..n``, as masks."""
    if cx.is_void:
        return [0]
    faces = cx.faces
    full = (1 << cx.n) - 1
    seen: set[int] = set()
    for f in faces:
        free = full & ~f
        while free:
            b = free & -free
            free ^= b
            cand = f | b
            if cand in faces or cand in seen:
                continue
            m = cand
            minimal = True
            while m:
                bw = m & -m
                m ^= bw
                if cand & ~bw not in faces:
                    minimal = False
                    break
            if minimal:
                seen.add(cand)
    return sorted(seen, key=lambda m: (card(m), to_face(m)))


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Facets are complements of minimal non-faces; the full simplex maps to VOID."""
    full = (1 << cx.n) - 1
    return SimplicialComplex(cx.n, frozenset(full & ~m for m in minimal_nonfaces(cx)))


def is_flag(cx: SimplicialComplex) -> bool:
    """True iff every minimal non-face on the covered vertices is an edge."""
    norm, _ = normalize(cx)
    return all(card(m) == 2 for m in minimal_nonfaces(norm))


def relabel(cx: SimplicialComplex, labels: dict[int, int] | list[int], n: int) -> SimplicialComplex:
    """Map vertex ``v`` to ``labels[v]`` (a dict, or a list indexed by ``v - 1``)."""
    if isinstance(labels, list):
        labels = {i + 1: w for i, w in enumerate(labels)}
    facets = []
    for f in cx.facets:
        facets.append(to_mask(labels[v] for v in to_face(f)))
    return SimplicialComplex(n, _antichain(facets))


def normalize(cx: SimplicialComplex) -> tuple[SimplicialComplex, list[int]]:
    """Drop uncovered vertices, relabeling the rest to ``1..m`` in order.

    Returns the new complex and the list mapping new label ``i`` (at index
    ``i - 1``) back to the original label.
    """
    kept = list(cx.vertices)
    if len(kept) == cx.n:
        return cx, kept
    back = {v: i + 1 for i, v in enumerate(kept)}
    return relabel(cx, back, len(kept)), kept


def induced(cx: SimplicialComplex, keep: Iterable[int]) -> tuple[SimplicialComplex, list[int]]:
    """Induced subcomplex on ``keep``, relabeled onto ``1..len(keep)`` in order."""
    kept = sorted(set(keep))
    mask = to_mask(kept)
    back = {v: i + 1 for i, v in enumerate(kept)}
    facets = [to_mask(back[v] for v in to_face(f & mask)) for f in cx.facets]
    return SimplicialComplex(len(kept), _antichain(facets)), kept


def is_subcomplex(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    bf = b.faces
    return all(f in bf for f in a.facets)


@lru_cache(maxsize=None)
def all_subsets(n: int, r: int) -> tuple[int, ...]:
    """All r-subsets of ``1..n`` as masks, in lexicographic order."""
    return tuple(to_mask(c) for c in combinations(range(1, n + 1), r))
