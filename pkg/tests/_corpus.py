"""Exhaustive small corpora shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations, product

from lrwkit.field import GF2, default_sigma
from lrwkit.graph import SGraph, canonical_form
from lrwkit.matroid import RepMatroid, make_matroid, matroid_isomorphism, rank_of


def graph_classes(n_max: int, field=GF2, sigma=None) -> dict[int, list[SGraph]]:
    """All graphs up to simple isomorphism (connected or not), keyed by vertex count."""
    sigma = sigma or default_sigma(field)
    q = field.order
    levels = {0: [SGraph(field, sigma, (), ())]}
    for n in range(1, n_max + 1):
        seen: dict[bytes, SGraph] = {}
        for g in levels[n - 1]:
            for pattern in product(range(q), repeat=n - 1):
                rows = [list(r) + [sigma(pattern[i])] for i, r in enumerate(g.rows)]
                rows.append(list(pattern) + [0])
                h = SGraph(field, sigma, tuple(range(n)), tuple(map(tuple, rows)))
                seen.setdefault(canonical_form(h), h)
        levels[n] = list(seen.values())
    return levels


def labelled_graphs(n: int, field=GF2):
    sigma = default_sigma(field)
    pairs = list(combinations(range(n), 2))
    for bits in product(range(field.order), repeat=len(pairs)):
        rows = [[0] * n for _ in range(n)]
        for (i, j), a in zip(pairs, bits):
            rows[i][j] = a
            rows[j][i] = sigma(a)
        yield SGraph(field, sigma, tuple(range(n)), tuple(map(tuple, rows)))


def rref_matrices(r: int, n: int, q: int = 2):
    """Every ``r x n`` matrix in reduced row echelon form with ``r`` nonzero rows."""
    for pivots in combinations(range(n), r):
        free = [(i, j) for i in range(r) for j in range(n) if j > pivots[i] and j not in pivots]
        for vals in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(r)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), a in zip(free, vals):
                rows[i][j] = a
            yield rows


def all_binary_matroids(n: int) -> list[RepMatroid]:
    """Every GF(2) representation on ``n`` labelled elements, one per row space."""
    out = []
    for r in range(n + 1):
        for rows in rref_matrices(r, n):
            out.append(make_matroid(GF2, rows) if r else make_matroid(GF2, [[0] * n]))
    return out


def _invariant(m: RepMatroid) -> tuple:
    ranks = []
    for k in range(m.size + 1):
        ranks.append(tuple(sorted(rank_of(m, c) for c in combinations(m.ground, k))))
    return tuple(ranks)


def binary_matroid_classes(n: int) -> list[RepMatroid]:
    """Binary matroids on ``n`` elements up to isomorphism."""
    buckets: dict[tuple, list[RepMatroid]] = {}
    for m in all_binary_matroids(n):
        reps = buckets.setdefault(_invariant(m), [])
        if not any(matroid_isomorphism(m, r) is not None for r in reps):
            reps.append(m)
    return [m for reps in buckets.values() for m in reps]


def random_binary_matroid(rng: random.Random, n: int) -> RepMatroid:
    r = rng.randint(1, n - 1)
    rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(r)]
    if not any(any(row) for row in rows):
        rows[0][0] = 1
    return make_matroid(GF2, rows)
