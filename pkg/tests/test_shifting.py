from __future__ import annotations

import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ekrcomplex.complex import (
    SimplicialComplex,
    cone,
    f_vector,
    from_facets,
    is_shifted,
    link,
    skeleton,
    to_face,
)
from ekrcomplex.errors import DomainError, GenericityError, InputError, ResourceError
from ekrcomplex.shifting import ShiftConfig, check_apex_link_shift, exterior_shift, shift, shift_family

complexes = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.sets(st.integers(1, n), min_size=1), min_size=1, max_size=5).map(
        lambda fs: from_facets(fs, n)
    )
)


def rational_shift(cx: SimplicialComplex, seed: int = 7) -> set[tuple[int, ...]]:
    """Shift over Q: rows are r x r minors of a random integer matrix, columns in lex order."""
    n = cx.n
    rng = random.Random(seed)
    g = sympy.Matrix(n, n, lambda i, j: rng.randint(-10**9, 10**9))
    out: set[tuple[int, ...]] = {()}
    for r in range(1, cx.dim + 2):
        faces = cx.faces_of_card(r)
        cols = list(combinations(range(1, n + 1), r))
        rows = [
            [g.extract([v - 1 for v in s], [v - 1 for v in f]).det() for s in cols]
            for f in faces
        ]
        m = sympy.Matrix(rows)
        _, pivots = m.rref()
        out.update(cols[j] for j in pivots)
    return out


def test_two_edges():
    cx = from_facets([[1, 2], [3, 4]])
    assert sorted(shift(cx).facet_list()) == [(1, 2), (1, 3), (4,)]


def test_shifted_input_fixed():
    cx = from_facets([[1, 2], [1, 3], [4]])
    assert shift(cx) == cx
    assert shift(SimplicialComplex.simplex(4)) == SimplicialComplex.simplex(4)


def test_shift_family():
    assert shift_family([[3, 4]], 4) == [(1, 2)]
    assert shift_family([[1, 2], [3, 4]], 4) == [(1, 2), (1, 3)]
    with pytest.raises(DomainError):
        shift_family([[1], [2, 3]], 3)


@settings(max_examples=40, deadline=None)
@given(complexes)
def test_matches_rational_construction(cx):
    assert {to_face(m) for m in shift(cx).faces} == rational_shift(cx)


@settings(max_examples=80, deadline=None)
@given(complexes)
def test_core_properties(cx):
    s = shift(cx)
    assert f_vector(s) == f_vector(cx)
    assert is_shifted(s)
    assert shift(s) == s
    for r in range(-1, cx.dim + 1):
        assert shift(skeleton(cx, r)) == skeleton(s, r)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_small_characteristic_still_shifted(p):
    # tiny fields need many draws before a matrix passes the structural checks
    cx = from_facets([[1, 2, 3], [3, 4], [4, 5]])
    s = shift(cx, ShiftConfig(prime=p, max_retries=200))
    assert is_shifted(s) and f_vector(s) == f_vector(cx)


def test_genericity_failure_is_reported():
    cx = from_facets([[1, 2, 3], [3, 4], [4, 5]])
    with pytest.raises(GenericityError):
        shift(cx, ShiftConfig(prime=2, max_retries=3))


def test_seed_independence():
    cx = from_facets([[1, 2, 4], [2, 3], [3, 5], [1, 5]])
    assert shift(cx, ShiftConfig(seed=0)) == shift(cx, ShiftConfig(seed=99))
    assert exterior_shift(cx, ShiftConfig(cross_check=True)).shifted == shift(cx)


def test_guards():
    with pytest.raises(DomainError):
        shift(SimplicialComplex.void(3))
    with pytest.raises(ResourceError):
        shift(from_facets([[21]]))
    with pytest.raises(InputError):
        ShiftConfig(prime=10)


def test_apex_link_on_cone_has_no_extra_facets():
    base = from_facets([[1, 2], [3]], n=4)
    res = check_apex_link_shift(cone(base, 4), 4)
    assert res.holds and res.extra == ()


def test_apex_link_on_near_cone():
    # cone over {12, 3} from apex 4, plus {1,3}: boundary lies in the link
    cx = from_facets([[1, 2, 4], [3, 4], [1, 3]])
    res = check_apex_link_shift(cx, 4)
    assert res.holds
    assert link(res.shifted, (1,)) == res.shifted_link


def test_apex_link_needs_apex():
    with pytest.raises(DomainError):
        check_apex_link_shift(from_facets([[1, 2], [3, 4]]), 1)
