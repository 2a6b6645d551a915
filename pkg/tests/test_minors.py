import pytest

from lrwkit.field import GF2, GF3, make_sesqui
from lrwkit.graph import canonical_form, complete_graph, cycle_graph, cutrank, empty_graph, path_graph, star_graph
from lrwkit.minors import (
    apply_pivots,
    is_pivot_minor,
    is_vertex_minor,
    local_orbit,
    normalize_linked,
    obstructions,
    pivot_orbit,
    tutte_link,
    verify_tutte_link,
)
from lrwkit.width import is_linked, lrw, make_layout


def test_orbits():
    assert len(pivot_orbit(empty_graph(3)).members) == 1
    k2 = pivot_orbit(path_graph(2))
    assert list(k2.members) == [canonical_form(path_graph(2))]
    p4 = pivot_orbit(path_graph(4))
    assert all(lrw(g) == 1 for g in p4.graphs())
    # local complementation reaches the star and the complete graph from each other
    forms = set(local_orbit(star_graph(3)).members)
    assert canonical_form(complete_graph(4)) in forms


def test_minor_relations():
    c5, p5 = cycle_graph(5), path_graph(5)
    assert is_pivot_minor(c5, c5)
    assert not is_pivot_minor(c5, p5)
    assert is_pivot_minor(path_graph(3), c5)
    assert is_vertex_minor(complete_graph(3), path_graph(3))
    assert not is_pivot_minor(complete_graph(3), path_graph(3))


def test_obstructions_small():
    obs = obstructions(GF2, None, "pivot", 0, 3)
    assert [canonical_form(g) for g in obs] == [canonical_form(path_graph(2))]
    neg = make_sesqui(GF3, "negation")
    assert len(obstructions(GF3, neg, "pivot", 0, 3)) == 1


def test_obstructions_for_width_one():
    obs = obstructions(GF2, None, "pivot", 1, 5)
    assert obs and all(lrw(g) == 2 for g in obs)
    c5_class = set(pivot_orbit(cycle_graph(5)).members)
    assert any(canonical_form(g) in c5_class for g in obs)


def test_tutte_link_trivial_and_path():
    p3 = path_graph(3)
    assert tutte_link(p3, {0}, {1, 2}) == []
    p5 = path_graph(5)
    seq = tutte_link(p5, {0}, {4})
    assert seq is not None
    assert verify_tutte_link(p5, {0}, {4}, seq, 1)
    assert not verify_tutte_link(p5, {0}, {4}, [(3, 4)], 1)


def test_tutte_link_errors():
    with pytest.raises(ValueError):
        tutte_link(path_graph(3), {0}, {0, 1})
    with pytest.raises(ValueError):
        tutte_link(path_graph(4), {0}, {2, 3}, k=2)


def test_normalize_linked():
    g = path_graph(6)
    pi = make_layout(g, range(6))
    h = normalize_linked(g, pi, (1, 3, 5))
    pi_h = make_layout(h, range(6))
    assert is_linked(h, pi_h, 1, 3) and is_linked(h, pi_h, 3, 5)
    assert all(cutrank(h, range(i)) == cutrank(g, range(i)) for i in range(7))
    with pytest.raises(ValueError):
        normalize_linked(g, pi, (3, 1))


def test_apply_pivots_empty():
    g = cycle_graph(4)
    assert apply_pivots(g, []) == g
