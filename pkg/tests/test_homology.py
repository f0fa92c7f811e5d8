from __future__ import annotations

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from ekrcomplex.complex import SimplicialComplex, from_facets, is_pure, join, to_face
from ekrcomplex.errors import DomainError
from ekrcomplex.graphs import cycle, independence_complex
from ekrcomplex.homology import (
    boundary_matrix,
    depth,
    depth_by_links,
    depth_by_shift,
    depth_of_join_check,
    euler_characteristic_check,
    is_cohen_macaulay,
    is_sequentially_cm,
    reduced_betti,
)

complexes = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.sets(st.integers(1, n), min_size=1), min_size=1, max_size=6).map(
        lambda fs: from_facets(fs, n)
    )
)


def rational_betti(cx):
    """Reduced Betti numbers over Q from independently built boundary maps."""
    levels = [sorted(to_face(m) for m in cx.faces if bin(m).count("1") == c) for c in range(cx.dim + 2)]

    def rank(c):
        if c == 0 or c >= len(levels):
            return 0
        index = {f: i for i, f in enumerate(levels[c - 1])}
        m = sympy.zeros(len(levels[c - 1]), len(levels[c]))
        for j, f in enumerate(levels[c]):
            for pos in range(len(f)):
                m[index[f[:pos] + f[pos + 1 :]], j] = (-1) ** pos
        return m.rank()

    return tuple(len(levels[c]) - rank(c) - rank(c + 1) for c in range(len(levels)))


def test_augmentation_row():
    m = boundary_matrix(from_facets([[1], [2], [3]]), 1)
    assert m.rows() == [[1, 1, 1]]


def test_known_betti():
    assert set(reduced_betti(SimplicialComplex.simplex(4)).dims) == {0}
    hollow = from_facets([[1, 2], [2, 3], [1, 3]])
    assert reduced_betti(hollow).dims == (0, 0, 1)
    ic7 = reduced_betti(independence_complex(cycle(7)))
    assert ic7.degree(1) == 1
    assert sum(ic7.dims) == 1
    assert reduced_betti(SimplicialComplex.empty(2)).dims == (1,)


@settings(max_examples=60, deadline=None)
@given(complexes)
def test_betti_matches_rationals(cx):
    assert reduced_betti(cx).dims == rational_betti(cx)
    assert euler_characteristic_check(cx)


def test_cohen_macaulay_examples():
    assert is_cohen_macaulay(SimplicialComplex.simplex(3))
    res = is_cohen_macaulay(from_facets([[1, 2], [3, 4]]))
    assert not res and res.witness == ((), 0)
    assert not is_sequentially_cm(independence_complex(cycle(4)))
    with pytest.raises(DomainError):
        is_cohen_macaulay(SimplicialComplex.void(2))


@settings(max_examples=80, deadline=None)
@given(complexes)
def test_depth_methods_agree(cx):
    assert depth_by_links(cx).depth == depth_by_shift(cx).depth


@settings(max_examples=80, deadline=None)
@given(complexes)
def test_pure_sequential_is_cm(cx):
    if is_pure(cx) and is_sequentially_cm(cx):
        assert is_cohen_macaulay(cx)


def test_cycle_depths():
    assert depth(independence_complex(cycle(4))).depth == 0
    for n in range(5, 10):
        assert depth(independence_complex(cycle(n))).depth >= 1
    assert depth(independence_complex(cycle(5)), method="shift").depth >= 1


def test_join_depth():
    a = from_facets([[1, 2], [3]])
    b = from_facets([[1, 2, 3], [2, 4]])
    assert depth_of_join_check(a, b)
    assert depth(join(a, b)).depth == 0 + 1 + 1
