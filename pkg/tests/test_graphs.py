from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from ekrcomplex.complex import cone, from_facets, is_shifted, relabel, to_face
from ekrcomplex.errors import DomainError, InputError, ResourceError
from ekrcomplex.graphs import (
    Graph,
    all_labeled_graphs,
    build_threshold,
    closed_neighborhood,
    complement,
    complete,
    coned_boundary,
    cycle,
    d_op,
    degree_order,
    disjoint_union,
    edgeless,
    erdos_renyi,
    flag_nearcone_decompose,
    independence_complex,
    independence_cone_check,
    is_chordal,
    is_cochordal,
    is_connected,
    is_threshold,
    path,
    rebuild_nearcone,
    relabel_graph,
    s_op,
    star,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


def brute_has_long_induced_cycle(g: Graph) -> bool:
    """Some induced subgraph on >= 4 vertices is a single cycle."""
    for k in range(4, g.n + 1):
        for sub in combinations(range(1, g.n + 1), k):
            h = to_nx(g).subgraph(sub)
            if all(d == 2 for _, d in h.degree()) and nx.is_connected(h):
                return True
    return False


def test_from_edges_validation():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 4)])
    with pytest.raises(DomainError):
        cycle(2)


def test_closed_neighborhood():
    assert closed_neighborhood(edgeless(3), 2) == (2,)
    assert closed_neighborhood(star(3), 1) == (1, 2, 3, 4)
    with pytest.raises(DomainError):
        closed_neighborhood(star(3), 9)


@pytest.mark.parametrize("n", range(1, 6))
def test_independence_complex_matches_networkx(n):
    for g in all_labeled_graphs(n):
        expected = {tuple(sorted(c)) for c in nx.find_cliques(nx.complement(to_nx(g)))}
        assert set(independence_complex(g).facet_list()) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_chordality_matches_oracles(n):
    graphs = all_labeled_graphs(n) if n <= 5 else (erdos_renyi(6, 0.5, s) for s in range(60))
    for g in graphs:
        chordal = is_chordal(g)
        assert chordal == nx.is_chordal(to_nx(g))
        assert chordal == (not brute_has_long_induced_cycle(g))


def test_chordal_examples():
    assert is_chordal(complete(5)) and is_chordal(path(6)) and is_chordal(star(4))
    assert not is_chordal(cycle(4)) and is_cochordal(cycle(4))
    assert not is_chordal(cycle(6)) and not is_cochordal(cycle(6))


def test_threshold():
    assert is_threshold(Graph(1, (0,))).word == ""
    assert not is_threshold(path(4))
    g = build_threshold("DSDS")
    res = is_threshold(g)
    assert res and build_threshold(res.word) == g


@pytest.mark.parametrize("n", range(1, 6))
def test_threshold_iff_shifted_independence_complex(n):
    for g in all_labeled_graphs(n):
        pos = {v: i + 1 for i, v in enumerate(degree_order(g))}
        shifted = is_shifted(relabel(independence_complex(g), pos, n))
        assert bool(is_threshold(g)) == shifted


def test_d_and_s_on_independence_complexes():
    g = cycle(5)
    assert independence_cone_check(g)
    ic = independence_complex(s_op(g))
    assert (6,) in ic.facet_list()


def test_nearcone_decomposition():
    g = d_op(path(3))
    dec = flag_nearcone_decompose(g)
    assert (dec.k, dec.apex, dec.core) == (0, 4, path(3))
    h = erdos_renyi(4, 0.5, 3)
    built = s_op(d_op(h))
    dec = flag_nearcone_decompose(built)
    assert dec.k == 1 and dec.core == h
    assert rebuild_nearcone(dec) == built
    assert flag_nearcone_decompose(cycle(5)) is None


def test_single_vertex_decomposes_to_empty_core():
    dec = flag_nearcone_decompose(edgeless(1))
    assert dec.degenerate and dec.core.n == 0 and dec.k == 0
    assert rebuild_nearcone(dec) == edgeless(1)


def test_complement_and_connectivity():
    c4 = complement(cycle(4))
    assert c4 == Graph.from_edges(4, [(1, 3), (2, 4)])
    assert not is_connected(c4)
    for n in range(5, 10):
        assert is_connected(complement(cycle(n)))
    assert disjoint_union([edgeless(1), complete(2)]).edges == [(2, 3)]
    assert relabel_graph(path(3), [2, 1, 3]) == Graph.from_edges(3, [(1, 2), (1, 3)])


def test_enumeration_sizes():
    assert sum(1 for _ in all_labeled_graphs(3)) == 8
    with pytest.raises(ResourceError):
        next(all_labeled_graphs(7))


def test_coned_boundary_shape():
    cx = coned_boundary(2, 3)
    assert cx.n == 12
    assert {len(f) for f in cx.facet_list()} == {5}
    assert len(cx.facets) == 3
    assert cone(from_facets([[1]], 2), 2).facet_list() == [(1, 2)]
