"""Simplicial complexes, exterior algebraic shifting and intersecting-family checks."""

from __future__ import annotations

from .complex import (
    SimplicialComplex,
    alexander_dual,
    f_vector,
    from_facets,
    is_near_cone_apex,
    is_shifted,
    join,
    link,
    near_cone_apexes,
    skeleton,
)
from .ekr import mixed_star_check, coned_boundary_counts, is_r_ekr, is_strict_r_ekr, max_intersecting, star_bound
from .errors import DomainError, EkrError, GenericityError, InputError, ResourceError
from .graphs import Graph, independence_complex, is_chordal, is_cochordal, is_threshold
from .homology import depth, is_cohen_macaulay, is_sequentially_cm, reduced_betti
from .shifting import ShiftConfig, exterior_shift, shift, shift_family

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EkrError",
    "GenericityError",
    "Graph",
    "InputError",
    "ResourceError",
    "ShiftConfig",
    "SimplicialComplex",
    "alexander_dual",
    "mixed_star_check",
    "coned_boundary_counts",
    "depth",
    "exterior_shift",
    "f_vector",
    "from_facets",
    "independence_complex",
    "is_chordal",
    "is_cochordal",
    "is_cohen_macaulay",
    "is_near_cone_apex",
    "is_r_ekr",
    "is_sequentially_cm",
    "is_shifted",
    "is_strict_r_ekr",
    "is_threshold",
    "join",
    "link",
    "max_intersecting",
    "near_cone_apexes",
    "reduced_betti",
    "shift",
    "shift_family",
    "skeleton",
    "star_bound",
]
