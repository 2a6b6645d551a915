import random

import pytest

from lrwkit.errors import ZeroT
from lrwkit.field import GF2, GF3, gf, make_sesqui
from lrwkit.matrix import FMatrix, is_sigma_symmetric, rank, rank_rows, rref, solve_row, star


def test_rank_examples():
    assert rank(FMatrix.from_rows(GF3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(FMatrix.from_rows(GF2, [[1, 1], [1, 1]])) == 1
    assert rank(FMatrix.from_rows(GF2, [])) == 0
    assert rank(FMatrix.from_rows(GF2, [[], []], col_labels=[])) == 0


def test_rank_matches_between_packed_and_generic():
    rng = random.Random(0)
    f4 = gf(4)
    for _ in range(200):
        rows = [[rng.randint(0, 1) for _ in range(6)] for _ in range(5)]
        red, piv = rref(GF2, rows, 6)
        assert rank_rows(GF2, rows) == len(piv)
        rows4 = [[rng.randrange(4) for _ in range(4)] for _ in range(4)]
        assert rank_rows(f4, rows4) == len(rref(f4, rows4, 4)[1])


def test_solve_row():
    basis = FMatrix.from_rows(GF2, [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    assert solve_row([0, 0, 0, 0], basis) == [0, 0, 0]
    assert solve_row([0, 1, 0, 1], basis) == [0, 1, 0]
    assert solve_row([1, 0, 1, 0], basis) == [1, 0, 1]
    assert solve_row([1, 1, 1, 1], basis) == [1, 1, 1]
    assert solve_row([0, 0, 0, 1], basis) is None


def test_sigma_symmetry():
    ident = make_sesqui(GF2)
    assert is_sigma_symmetric(FMatrix.from_rows(GF2, [[0, 1], [1, 0]]), ident)
    neg = make_sesqui(GF3, "negation")
    assert is_sigma_symmetric(FMatrix.from_rows(GF3, [[0, 1], [2, 0]]), neg)
    assert not is_sigma_symmetric(FMatrix.from_rows(GF3, [[0, 1], [1, 0]]), neg)


def test_star_examples():
    ident = make_sesqui(GF2)
    m = FMatrix.from_rows(GF2, [[0]])
    assert star(m, ident, {0: 0}, {0: 0}, 1) == m
    assert star(m, ident, {0: 1}, {0: 1}, 1).entries == ((0,),)
    assert star(m, ident, {0: 1}, {0: 0}, 1).entries == ((0,),)
    with pytest.raises(ZeroT):
        star(m, ident, {0: 1}, {0: 1}, 0)


def test_star_has_order_char():
    rng = random.Random(1)
    neg = make_sesqui(GF3, "negation")
    for _ in range(50):
        labels = list(range(3))
        m = FMatrix.from_rows(GF3, [[rng.randrange(3) for _ in labels] for _ in labels])
        cx = {v: rng.randrange(3) for v in labels}
        cy = {v: rng.randrange(3) for v in labels}
        t = rng.choice([1, 2])
        out = m
        for _ in range(3):
            out = star(out, neg, cx, cy, t)
        assert out == m


def test_star_updates_commute():
    rng = random.Random(3)
    f = gf(4)
    sigma = make_sesqui(f, "frobenius", 1)
    labels = list(range(3))
    for _ in range(50):
        m = FMatrix.from_rows(f, [[rng.randrange(4) for _ in labels] for _ in labels])
        maps = [({v: rng.randrange(4) for v in labels}, {v: rng.randrange(4) for v in labels}, rng.randrange(1, 4)) for _ in range(2)]
        a, b = maps
        one = star(star(m, sigma, *a), sigma, *b)
        two = star(star(m, sigma, *b), sigma, *a)
        assert one == two


def test_star_keeps_sigma_symmetry():
    rng = random.Random(5)
    neg = make_sesqui(GF3, "negation")
    for _ in range(50):
        rows = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i + 1, 3):
                rows[i][j] = rng.randrange(3)
                rows[j][i] = neg(rows[i][j])
        m = FMatrix.from_rows(GF3, rows)
        out = star(m, neg, {v: rng.randrange(3) for v in range(3)}, {v: rng.randrange(3) for v in range(3)}, rng.randrange(1, 3))
        assert is_sigma_symmetric(out, neg)
