from __future__ import annotations

import pytest

from ekrcomplex.complex import SimplicialComplex, from_facets
from ekrcomplex.errors import InputError
from ekrcomplex.graphs import cycle
from ekrcomplex.io import format_cplx, format_dimacs, parse_cplx, parse_dimacs


def test_cplx_round_trip():
    cx = from_facets([[1, 2, 3], [3, 5]], n=6)
    assert parse_cplx(format_cplx(cx)) == cx


def test_cplx_void_and_empty():
    assert parse_cplx("n 3\n").is_void
    assert parse_cplx("n 3\n0\n") == SimplicialComplex.empty(3)
    assert parse_cplx("# comment\n1 2 # trailing\n") == from_facets([[1, 2]])


@pytest.mark.parametrize("text", ["n 2\n1 x\n", "1 0\n", "n 2\n1 3\n", "1 2\nn 3\n", "0\n1 2\n"])
def test_cplx_errors(text):
    with pytest.raises(InputError):
        parse_cplx(text)


def test_dimacs_round_trip():
    g = cycle(5)
    assert parse_dimacs(format_dimacs(g)) == g


@pytest.mark.parametrize(
    "text",
    ["e 1 2\n", "p edge 3 2\ne 1 2\n", "p edge 3 1\ne 1 1\n", "p edge 2 1\ne 1 5\n", "p edge 2 1\nx 1 2\n"],
)
def test_dimacs_errors(text):
    with pytest.raises(InputError):
        parse_dimacs(text)
