import random
from itertools import combinations

import pytest

from lrwkit.errors import NotABasis, OverlappingSets, UnknownElement
from lrwkit.field import GF2, GF3
from lrwkit.graph import cutrank
from lrwkit.matroid import (
    bases,
    bases_pivot_equivalent,
    connectivity,
    dual,
    fundamental_graph,
    fundamental_obstruction_criterion,
    is_pathwidth_obstruction,
    make_matroid,
    matroid_isomorphism,
    matroid_minor,
    pathwidth,
    rank_of,
    same_matroid,
    uniform_matroid,
    verify_pivot_sequence,
)
from lrwkit.width import lrw

from _corpus import binary_matroid_classes, random_binary_matroid


def test_basic_ranks():
    u24 = uniform_matroid(GF3, 2, 4)
    assert u24.rank == 2 and u24.size == 4
    assert all(rank_of(u24, s) == min(len(s), 2) for k in range(5) for s in combinations(range(4), k))
    assert len(bases(u24)) == 6
    with pytest.raises(UnknownElement):
        rank_of(u24, [9])


def test_pathwidth_values():
    assert pathwidth(make_matroid(GF2, [], ground=[0, 1, 2])) == 1
    assert pathwidth(uniform_matroid(GF2, 1, 2)) == 2
    assert pathwidth(uniform_matroid(GF3, 2, 4)) == 3


def test_fundamental_graph():
    g, (b, rest) = fundamental_graph(uniform_matroid(GF2, 1, 2), [0])
    assert g.n == 2 and list(g.edges()) == [(0, 1)]
    free = make_matroid(GF2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    g, _ = fundamental_graph(free, [0, 1, 2])
    assert not list(g.edges())
    with pytest.raises(NotABasis):
        fundamental_graph(uniform_matroid(GF2, 1, 2), [0, 1])


def test_connectivity_matches_cutrank():
    rng = random.Random(7)
    for _ in range(40):
        m = random_binary_matroid(rng, 6)
        b = bases(m)[0]
        g, _ = fundamental_graph(m, b)
        for k in range(7):
            for xs in list(combinations(m.ground, k))[:6]:
                assert connectivity(m, xs) == cutrank(g, xs) + 1


def test_minors_and_dual():
    rng = random.Random(9)
    for _ in range(40):
        m = random_binary_matroid(rng, 6)
        assert same_matroid(dual(dual(m)), m)
        assert dual(m).rank == m.size - m.rank
        d = matroid_minor(m, delete=[0], contract=[1])
        assert d.size == 4
        assert same_matroid(dual(matroid_minor(m, delete=[0])), matroid_minor(dual(m), contract=[0]))
    with pytest.raises(OverlappingSets):
        matroid_minor(uniform_matroid(GF2, 1, 3), delete=[0], contract=[0])


def test_basis_pivots_on_u12():
    u12 = uniform_matroid(GF2, 1, 2)
    seq = bases_pivot_equivalent(u12, [0], [1])
    assert seq == [(0, 1)]
    assert verify_pivot_sequence(u12, [0], [1], seq)


def test_obstructions():
    u12 = uniform_matroid(GF2, 1, 2)
    assert is_pathwidth_obstruction(u12, 1)
    assert fundamental_obstruction_criterion(u12, 1)
    assert not is_pathwidth_obstruction(make_matroid(GF2, [[1, 1]]), 0)


def test_isomorphism():
    m = uniform_matroid(GF2, 2, 3)
    shuffled = make_matroid(GF2, [[r[2], r[0], r[1]] for r in m.rows])
    assert matroid_isomorphism(m, shuffled) is not None
    assert matroid_isomorphism(m, uniform_matroid(GF2, 1, 3)) is None


def test_bridge_on_small_classes():
    for n in range(1, 5):
        for m in binary_matroid_classes(n):
            if m.rank in (0, m.size):
                continue
            g, _ = fundamental_graph(m, bases(m)[0])
            assert pathwidth(m) == lrw(g) + 1
