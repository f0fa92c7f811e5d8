"""Text formats for complexes (``.cplx``) and graphs (DIMACS-like).

``.cplx``::

    # comment
    n 4
    1 2
    3 4

One facet per line, 1-based labels.  A header with no facet lines is the
VOID complex; a single facet line ``0`` is the EMPTY complex ``{∅}``.

Graphs use ``p edge <n> <m>`` followed by ``e <u> <v>`` lines; ``c``
lines are comments.
"""

from __future__ import annotations

from pathlib import Path

from .complex import SimplicialComplex, from_facets
from .errors import InputError
from .graphs import Graph


def parse_cplx(text: str) -> SimplicialComplex:
    n: int | None = None
    facets: list[list[int]] = []
    empty = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or n is not None or facets or empty:
                raise InputError(f"line {lineno}: malformed or misplaced header")
            n = _int(tokens[1], lineno)
            if n < 0:
                raise InputError(f"line {lineno}: negative vertex count")
            continue
        if tokens == ["0"]:
            empty = True
            continue
        facet = [_int(t, lineno) for t in tokens]
        if any(v < 1 for v in facet):
            raise InputError(f"line {lineno}: vertex labels must be >= 1")
        facets.append(facet)
    if empty:
        if facets:
            raise InputError("the EMPTY marker '0' cannot be mixed with facets")
        return SimplicialComplex.empty(n or 0)
    return from_facets(facets, n)


def format_cplx(cx: SimplicialComplex) -> str:
    lines = [f"n {cx.n}"]
    if cx.is_empty:
        lines.append("0")
    else:
        lines.extend(" ".join(map(str, f)) for f in cx.facet_list())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n: int | None = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "edge" or n is not None:
                raise InputError(f"line {lineno}: expected 'p edge <n> <m>'")
            n, m_declared = _int(tokens[2], lineno), _int(tokens[3], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before the 'p' line")
            if len(tokens) != 3:
                raise InputError(f"line {lineno}: expected 'e <u> <v>'")
            edges.append((_int(tokens[1], lineno), _int(tokens[2], lineno)))
        else:
            raise InputError(f"line {lineno}: unknown record {tokens[0]!r}")
    if n is None:
        raise InputError("missing 'p edge' header")
    g = Graph.from_edges(n, edges)
    if len(g.edges) != m_declared:
        raise InputError(f"header declares {m_declared} edges, found {len(g.edges)} distinct")
    return g


def format_dimacs(g: Graph) -> str:
    edges = g.edges
    lines = [f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_complex(path: str | Path) -> SimplicialComplex:
    return parse_cplx(Path(path).read_text())


def read_graph(path: str | Path) -> Graph:
    return parse_dimacs(Path(path).read_text())


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer, got {token!r}") from None
