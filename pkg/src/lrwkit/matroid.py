"""Matroids represented over a finite field and their fundamental graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import NotABasis, OverlappingSets, SizeLimitExceeded, UnknownElement
from .field import Field, make_sesqui
from .graph import SGraph, pivot, simply_isomorphic
from .matrix import FMatrix, rank_rows, rref
from .width import GENERAL_LIMIT, GF2_LIMIT, CutOracle, LinearLayout, layout_cuts, linear_width

Element = Hashable
PivotSequence = list[tuple[Element, Element]]


@dataclass(frozen=True)
class RepMatroid:
    """Column matroid of a full-row-rank matrix; columns are labelled by ``ground``."""

    field: Field
    ground: tuple[Element, ...]
    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def index(self) -> dict[Element, int]:
        return {e: i for i, e in enumerate(self.ground)}

    @property
    def rep(self) -> FMatrix:
        return FMatrix(self.field, tuple(range(len(self.rows))), self.ground, self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return len(self.ground)

    def pos(self, e: Element) -> int:
        try:
            return self.index[e]
        except KeyError:
            raise UnknownElement(f"unknown element {e!r}") from None

    def mask(self, xs: Iterable[Element]) -> int:
        m = 0
        for e in xs:
            m |= 1 << self.pos(e)
        return m

    def rank_mask(self, mask: int) -> int:
        cols = [j for j in range(self.size) if mask >> j & 1]
        if not cols or not self.rows:
            return 0
        return rank_rows(self.field, [[self.rows[j][i] for j in range(self.rank)] for i in cols])

    def pivots(self) -> list[Element]:
        """Columns of the leading ones; the rows are kept in reduced echelon form."""
        return [self.ground[c] for c in rref(self.field, self.rows, self.size)[1]]


def make_matroid(field: Field, rows: Sequence[Sequence[int]], ground: Sequence[Element] | None = None) -> RepMatroid:
    """Matroid of ``rows``; the matrix is row-reduced and zero rows are dropped."""
    ncols = len(rows[0]) if rows else (len(ground) if ground is not None else 0)
    gr = tuple(range(ncols)) if ground is None else tuple(ground)
    if len(gr) != ncols or len(set(gr)) != ncols:
        raise UnknownElement("ground set must label every column exactly once")
    red, _ = rref(field, [list(r) for r in rows], ncols) if rows else ([], [])
    return RepMatroid(field, gr, tuple(tuple(r) for r in red))


def uniform_matroid(field: Field, r: int, n: int) -> RepMatroid:
    """``U_{r,n}`` via a Vandermonde-style matrix; requires enough field elements."""
    if r == 0:
        return make_matroid(field, [], list(range(n)))
    if n > field.order + 1 and r > 1:
        raise ValueError("field too small for this uniform matroid")
    cols = []
    for a in range(min(n, field.order)):
        cols.append([field.pow(a, i) if (a or i == 0) else int(i == 0) for i in range(r)])
    if n > field.order:
        cols.append([0] * (r - 1) + [1])
    return make_matroid(field, [list(c) for c in zip(*cols)])


def rank_of(m: RepMatroid, x_set: Iterable[Element]) -> int:
    return m.rank_mask(m.mask(x_set))


def connectivity(m: RepMatroid, x_set: Iterable[Element]) -> int:
    """``r(X) + r(E - X) - r(E) + 1``."""
    return connectivity_mask(m, m.mask(x_set))


def connectivity_mask(m: RepMatroid, mask: int) -> int:
    full = (1 << m.size) - 1
    return m.rank_mask(mask) + m.rank_mask(full & ~mask) - m.rank + 1


def _limit(m: RepMatroid) -> None:
    limit = GF2_LIMIT if m.field.order == 2 else GENERAL_LIMIT
    if m.size > limit:
        raise SizeLimitExceeded(f"exact path-width limited to {limit} elements")


def pathwidth_exact(m: RepMatroid) -> tuple[int, LinearLayout]:
    """Linear width of the connectivity function, with a witness order.

    With at most one element there is no proper cut and the width is the value
    on the empty set, which is 1.
    """
    _limit(m)
    oracle = CutOracle(m.size, lambda mask: connectivity_mask(m, mask))
    k, idx = linear_width(oracle)
    cuts, w = layout_cuts(oracle, idx)
    assert w == k
    return k, LinearLayout(tuple(m.ground[i] for i in idx), cuts, k)


def pathwidth(m: RepMatroid) -> int:
    return pathwidth_exact(m)[0]


def _standard_form(m: RepMatroid, base: Sequence[Element]) -> list[list[int]]:
    """Rows of ``(I_A | D)`` in original column order, row ``i`` belonging to ``base[i]``."""
    b_idx = [m.pos(e) for e in base]
    if len(set(b_idx)) != len(b_idx) or len(b_idx) != m.rank or m.rank_mask(m.mask(base)) != m.rank:
        raise NotABasis(f"{list(base)!r} is not a basis")
    others = [j for j in range(m.size) if j not in b_idx]
    perm = b_idx + others
    rows = [[r[j] for j in perm] for r in m.rows]
    red, piv = rref(m.field, rows, m.size)
    assert piv == list(range(m.rank))
    out = []
    for r in red:
        full = [0] * m.size
        for k, j in enumerate(perm):
            full[j] = r[k]
        out.append(full)
    return out


def fundamental_graph(m: RepMatroid, base: Iterable[Element]) -> tuple[SGraph, tuple[tuple, tuple]]:
    """Skew-symmetric bipartite graph with ``M[a,b] = D[a,b]`` and ``M[b,a] = -D[a,b]``."""
    base_set = set(base)
    for e in base_set:
        m.pos(e)
    base = [e for e in m.ground if e in base_set]
    std = _standard_form(m, base)
    f = m.field
    A = tuple(base)
    B = tuple(e for e in m.ground if e not in set(base))
    n = m.size
    rows = [[0] * n for _ in range(n)]
    for i, a in enumerate(A):
        ai = m.pos(a)
        for b in B:
            bi = m.pos(b)
            d = std[i][bi]
            rows[ai][bi] = d
            rows[bi][ai] = f.neg(d)
    sigma = make_sesqui(f, "negation")
    return SGraph(f, sigma, m.ground, tuple(map(tuple, rows))), (A, B)


def matroid_of_graph(g: SGraph, A: Sequence[Element]) -> RepMatroid:
    """``M(G, A, B)`` represented by ``(I_A | M_G[A, B])``."""
    a_set = set(A)
    A = [v for v in g.vertices if v in a_set]
    rows = []
    for a in A:
        ai = g.pos(a)
        rows.append([int(v == a) if v in a_set else g.rows[ai][g.pos(v)] for v in g.vertices])
    return make_matroid(g.field, rows, g.vertices)


def matroid_minor(m: RepMatroid, delete: Iterable[Element] = (), contract: Iterable[Element] = ()) -> RepMatroid:
    """``M - del / con``.

    A dependent contraction set is handled by contracting a maximal
    independent subset (chosen greedily in ground order) and deleting the rest,
    which are loops afterwards.
    """
    dl, cn = set(delete), set(contract)
    for e in dl | cn:
        m.pos(e)
    if dl & cn:
        raise OverlappingSets("deletion and contraction sets overlap")
    indep: list[int] = []
    for e in m.ground:
        if e in cn:
            cand = indep + [m.pos(e)]
            if m.rank_mask(sum(1 << j for j in cand)) == len(cand):
                indep = cand
    rows = [list(r) for r in m.rows]
    if indep:
        perm = indep + [j for j in range(m.size) if j not in indep]
        red, piv = rref(m.field, [[r[j] for j in perm] for r in rows], m.size)
        assert piv[: len(indep)] == list(range(len(indep)))
        keep_rows = red[len(indep) :]
        rows = []
        for r in keep_rows:
            full = [0] * m.size
            for k, j in enumerate(perm):
                full[j] = r[k]
            rows.append(full)
    keep = [j for j, e in enumerate(m.ground) if e not in dl and e not in cn]
    return make_matroid(m.field, [[r[j] for j in keep] for r in rows], [m.ground[j] for j in keep])


def dual(m: RepMatroid) -> RepMatroid:
    """Dual via the standard form: ``(I_A | D)`` becomes ``(-D^t | I_B)``."""
    f = m.field
    base = m.pivots()
    std = _standard_form(m, base) if base else []
    B = [e for e in m.ground if e not in set(base)]
    rows = []
    for b in B:
        bi = m.pos(b)
        row = [0] * m.size
        for i, a in enumerate(base):
            row[m.pos(a)] = f.neg(std[i][bi])
        row[bi] = 1
        rows.append(row)
    return make_matroid(f, rows, m.ground)


def same_matroid(m1: RepMatroid, m2: RepMatroid) -> bool:
    """Equal ground sets (as labelled) and equal rank functions."""
    if set(m1.ground) != set(m2.ground) or m1.rank != m2.rank:
        return False
    perm = [m2.pos(e) for e in m1.ground]
    for mask in range(1 << m1.size):
        m2mask = 0
        for j in range(m1.size):
            if mask >> j & 1:
                m2mask |= 1 << perm[j]
        if m1.rank_mask(mask) != m2.rank_mask(m2mask):
            return False
    return True


def matroid_isomorphism(m1: RepMatroid, m2: RepMatroid, limit: int = 9) -> dict | None:
    """Rank-preserving bijection ``E1 -> E2`` found by backtracking, or ``None``."""
    n = m1.size
    if n != m2.size or m1.rank != m2.rank:
        return None
    if n > limit:
        raise SizeLimitExceeded(f"matroid isomorphism limited to {limit} elements")
    r1 = [m1.rank_mask(s) for s in range(1 << n)]
    r2 = [m2.rank_mask(s) for s in range(1 << n)]
    image: list[int] = []

    def ok(k: int) -> bool:
        # every subset containing the newest element k must keep its rank
        for s in range(1 << k):
            a = s | 1 << k
            b = 1 << image[k]
            for j in range(k):
                if s >> j & 1:
                    b |= 1 << image[j]
            if r1[a] != r2[b]:
                return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        for c in range(n):
            if c in image:
                continue
            image.append(c)
            if ok(k) and extend(k + 1):
                return True
            image.pop()
        return False

    if not extend(0):
        return None
    return {m1.ground[i]: m2.ground[image[i]] for i in range(n)}


def bases(m: RepMatroid) -> list[tuple[Element, ...]]:
    return [
        tuple(m.ground[j] for j in c)
        for c in combinations(range(m.size), m.rank)
        if m.rank_mask(sum(1 << j for j in c)) == m.rank
    ]


def bases_pivot_equivalent(m: RepMatroid, b1: Iterable[Element], b2: Iterable[Element]) -> PivotSequence:
    """Pivot sequence from the fundamental graph at ``b1`` towards the one at ``b2``.

    Each step exchanges ``x``, the first element of ``A - b2`` in ground order,
    with the first ``y`` in ``b2 - A`` adjacent to ``x`` in the current graph.
    Adjacency of ``x`` and ``y`` is exactly the condition that ``A - x + y``
    is a basis.
    """
    b1s, b2s = set(b1), set(b2)
    g, (A, _) = fundamental_graph(m, [e for e in m.ground if e in b1s])
    fundamental_graph(m, [e for e in m.ground if e in b2s])
    A_set = set(A)
    seq: PivotSequence = []
    while A_set != b2s:
        x = next(e for e in m.ground if e in A_set and e not in b2s)
        y = next((e for e in m.ground if e in b2s and e not in A_set and g.entry(x, e)), None)
        if y is None:
            raise AssertionError("basis exchange failed")
        g = pivot(g, x, y)
        seq.append((x, y))
        A_set = (A_set - {x}) | {y}
    return seq


def verify_pivot_sequence(m: RepMatroid, b1: Iterable[Element], b2: Iterable[Element], seq: PivotSequence) -> bool:
    """Apply ``seq`` and compare with the fundamental graph at ``b2``.

    Succeeds on exact equality, or on a simple isomorphism, or, failing both,
    when the pivoted graph with the swapped bipartition represents the same
    matroid.  The last case covers column rescalings over fields of odd
    characteristic.
    """
    g, (A, _) = fundamental_graph(m, b1)
    A_set = set(A)
    for x, y in seq:
        if not g.entry(x, y) or x not in A_set or y in A_set:
            return False
        g = pivot(g, x, y)
        A_set = (A_set - {x}) | {y}
    if A_set != set(b2):
        return False
    target, _ = fundamental_graph(m, b2)
    if g == target or simply_isomorphic(g, target) is not None:
        return True
    return same_matroid(matroid_of_graph(g, [e for e in m.ground if e in A_set]), m)


def is_pathwidth_obstruction(m: RepMatroid, p: int) -> bool:
    """Path-width above ``p`` while every single-element deletion and contraction is at most ``p``."""
    if pathwidth(m) <= p:
        return False
    for e in m.ground:
        if pathwidth(matroid_minor(m, delete=[e])) > p:
            return False
        if pathwidth(matroid_minor(m, contract=[e])) > p:
            return False
    return True


def fundamental_obstruction_criterion(m: RepMatroid, p: int) -> bool:
    """Graph-side criterion: a fundamental graph is a pivot-minor obstruction for ``lrw <= p - 1``.

    Path-width exceeds linear rank-width of any fundamental graph by exactly
    one, which fixes the offset.
    """
    from .graph import delete as gdelete
    from .minors import pivot_orbit
    from .width import lrw_at_most

    base = bases(m)[0] if m.size else ()
    g, _ = fundamental_graph(m, base)
    k = p - 1
    if lrw_at_most(g, k):
        return False
    for member in pivot_orbit(g).graphs():
        for v in member.vertices:
            if not lrw_at_most(gdelete(member, v), k):
                return False
    return True
