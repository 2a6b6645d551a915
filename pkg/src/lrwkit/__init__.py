"""Exact linear rank-width toolkit for sigma-symmetric matrices over finite fields."""

from .errors import LrwError
from .field import GF2, GF3, Field, SesquiMorphism, default_sigma, gf, make_field, make_sesqui
from .graph import (
    BoundariedSGraph,
    SGraph,
    canonical_form,
    cutrank,
    cycle_graph,
    graph_from_edges,
    local_complement,
    make_graph,
    merge,
    path_graph,
    pivot,
)
from .matroid import RepMatroid, fundamental_graph, make_matroid, pathwidth
from .minors import is_pivot_minor, is_vertex_minor, obstructions, tutte_link
from .width import LinearLayout, encode, find_linked_layout, lrw, lrw_exact

__version__ = "0.1.0"
