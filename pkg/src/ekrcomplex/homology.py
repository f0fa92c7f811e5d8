"""Reduced simplicial homology over GF(p) and the depth / Cohen-Macaulay tests.

Homology uses the augmented chain complex: the boundary of a vertex is the
empty face, so the EMPTY complex has one-dimensional homology in degree -1
and every acyclic complex has all-zero reduced Betti numbers.

Depth is a dimension: ``depth(D)`` is the largest ``d`` such that the
d-skeleton of ``D`` is Cohen-Macaulay.  It is computed either from links
(every face ``s`` needs vanishing homology of its link below degree
``d - |s|``) or as the smallest facet dimension of the algebraic shift.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import (
    Face,
    SimplicialComplex,
    card,
    join,
    pure_skeleton,
    to_face,
)
from .errors import DomainError
from .gf import DEFAULT_PRIME, PrimeMatrix, eliminate_rows
from .shifting import ShiftConfig, exterior_shift


def _boundary_rows(groups: tuple[tuple[int, ...], ...], c: int, p: int) -> list[list[int]]:
    """Dense ``∂_c`` with one row per (c-1)-face and one column per c-face."""
    lower = {m: i for i, m in enumerate(groups[c - 1])}
    rows = [[0] * len(groups[c]) for _ in groups[c - 1]]
    minus_one = p - 1
    for j, face in enumerate(groups[c]):
        rest = face
        pos = 0
        while rest:
            b = rest & -rest
            rest ^= b
            rows[lower[face ^ b]][j] = minus_one if pos & 1 else 1
            pos += 1
    return rows


def boundary_matrix(cx: SimplicialComplex, c: int, p: int = DEFAULT_PRIME) -> PrimeMatrix:
    """Matrix of ``∂_c`` from cardinality-c chains to cardinality-(c-1) chains.

    Rows and columns follow the lexicographic face order.  The sign of a
    face with vertex at position ``k`` (0-based) deleted is ``(-1)^k``.
    """
    groups = cx.faces_by_card
    if c < 0 or c > len(groups):
        raise DomainError(f"cardinality {c} outside 0..{len(groups)}")
    if c == 0:
        return PrimeMatrix.zeros(0, len(groups[0]) if groups else 0, p)
    ncols = len(groups[c]) if c < len(groups) else 0
    if c == len(groups):
        return PrimeMatrix.zeros(len(groups[c - 1]), 0, p)
    return PrimeMatrix.from_rows(_boundary_rows(groups, c, p), p, ncols=ncols)


def _boundary_rank(groups: tuple[tuple[int, ...], ...], c: int, p: int) -> int:
    if c <= 0 or c >= len(groups):
        return 0
    rows = _boundary_rows(groups, c, p)
    if len(rows) > len(groups[c]):
        rows = [list(col) for col in zip(*rows)]
    return len(eliminate_rows(rows, p))


@dataclass(frozen=True)
class BettiVector:
    """``dims[i]`` is the dimension of reduced homology in degree ``i - 1``."""

    dims: tuple[int, ...]
    prime: int

    def degree(self, i: int) -> int:
        """Reduced Betti number in degree ``i`` (zero outside the stored range)."""
        k = i + 1
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def first_nonzero(self) -> int | None:
        """Lowest degree with nonzero homology, or None if acyclic."""
        for k, d in enumerate(self.dims):
            if d:
                return k - 1
        return None


def _betti_groups(groups: tuple[tuple[int, ...], ...], p: int) -> tuple[int, ...]:
    ranks = [_boundary_rank(groups, c, p) for c in range(len(groups) + 1)]
    return tuple(len(groups[c]) - ranks[c] - ranks[c + 1] for c in range(len(groups)))


def reduced_betti(cx: SimplicialComplex, p: int = DEFAULT_PRIME) -> BettiVector:
    return BettiVector(_betti_groups(cx.faces_by_card, p), p)


def _link_groups(cx: SimplicialComplex, sigma: int) -> tuple[tuple[int, ...], ...]:
    """Faces of the link of ``sigma`` grouped by cardinality (lex order kept)."""
    groups = cx.faces_by_card
    s = card(sigma)
    out = []
    for c in range(s, len(groups)):
        level = tuple(f ^ sigma for f in groups[c] if f & sigma == sigma)
        if not level:
            break
        out.append(level)
    # removing a common subset keeps equal-size sets in lexicographic order
    return tuple(out)


def _first_nonzero(groups: tuple[tuple[int, ...], ...], p: int, below: int | None = None) -> int | None:
    """Lowest degree with nonzero reduced homology, scanning degrees < ``below``."""
    ranks: dict[int, int] = {}

    def rk(c: int) -> int:
        if c not in ranks:
            ranks[c] = _boundary_rank(groups, c, p)
        return ranks[c]

    for c in range(len(groups)):
        degree = c - 1
        if below is not None and degree >= below:
            return None
        if len(groups[c]) - rk(c) - rk(c + 1):
            return degree
    return None


@dataclass(frozen=True)
class CMResult:
    holds: bool
    witness: tuple[Face, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _canonical_faces(cx: SimplicialComplex) -> list[int]:
    return [m for group in cx.faces_by_card for m in group]


def is_cohen_macaulay(cx: SimplicialComplex, p: int = DEFAULT_PRIME) -> CMResult:
    """Every link has vanishing reduced homology below its own dimension.

    The witness is the first offending ``(face, degree)`` in the order
    (cardinality, lexicographic).
    """
    if cx.is_void:
        raise DomainError("the void complex has no Cohen-Macaulay status")
    for sigma in _canonical_faces(cx):
        groups = _link_groups(cx, sigma)
        link_dim = len(groups) - 2
        bad = _first_nonzero(groups, p, below=link_dim)
        if bad is not None:
            return CMResult(False, (to_face(sigma), bad))
    return CMResult(True)


def is_sequentially_cm(cx: SimplicialComplex, p: int = DEFAULT_PRIME) -> bool:
    """Every nonempty pure skeleton is Cohen-Macaulay."""
    if cx.is_void:
        raise DomainError("the void complex has no Cohen-Macaulay status")
    return all(is_cohen_macaulay(pure_skeleton(cx, r), p) for r in range(-1, cx.dim + 1))


@dataclass(frozen=True)
class DepthReport:
    depth: int
    method: str
    # faces whose link bounds the depth, with the lowest nonvanishing degree
    details: tuple[tuple[Face, int], ...] = field(default=())


def depth_by_links(cx: SimplicialComplex, p: int = DEFAULT_PRIME) -> DepthReport:
    if cx.is_void:
        raise DomainError("depth of the void complex is undefined")
    bound = cx.dim
    limits: list[tuple[Face, int, int]] = []
    for sigma in _canonical_faces(cx):
        s = card(sigma)
        # only degrees below bound - |sigma| can lower the current bound
        first = _first_nonzero(_link_groups(cx, sigma), p, below=bound - s)
        if first is None:
            continue
        value = first + s
        if value < bound:
            bound = value
        limits.append((to_face(sigma), first, value))
    details = tuple((face, deg) for face, deg, value in limits if value == bound)
    return DepthReport(bound, "links", details)


def depth_by_shift(cx: SimplicialComplex, cfg: ShiftConfig | None = None) -> DepthReport:
    if cx.is_void:
        raise DomainError("depth of the void complex is undefined")
    shifted = exterior_shift(cx, cfg).shifted
    return DepthReport(min(card(f) for f in shifted.facets) - 1, "shift")


def depth(
    cx: SimplicialComplex,
    p: int = DEFAULT_PRIME,
    method: str = "links",
    cfg: ShiftConfig | None = None,
) -> DepthReport:
    if method == "links":
        return depth_by_links(cx, p)
    if method == "shift":
        if cfg is None:
            cfg = ShiftConfig(prime=p)
        return depth_by_shift(cx, cfg)
    raise DomainError(f"unknown depth method {method!r}")


def depth_of_join_check(a: SimplicialComplex, b: SimplicialComplex, p: int = DEFAULT_PRIME) -> bool:
    """Depth adds (plus one) under joins."""
    da = depth_by_links(a, p).depth
    db = depth_by_links(b, p).depth
    return depth_by_links(join(a, b), p).depth == da + db + 1


def euler_characteristic_check(cx: SimplicialComplex, p: int = DEFAULT_PRIME) -> bool:
    """Alternating sums of face counts and of reduced Betti numbers agree."""
    groups = cx.faces_by_card
    betti = _betti_groups(groups, p)
    faces = sum((-1) ** c * len(g) for c, g in enumerate(groups))
    homology = sum((-1) ** c * b for c, b in enumerate(betti))
    return faces == homology
