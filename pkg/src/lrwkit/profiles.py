"""Linear s-profiles, (s,p)-matrix tuples and the dominance machinery at micro scale.

A profile stores, for each index ``i`` in ``1..t``, the matrices ``Y(i) =
(Y1 | Y2)``, ``Z(i) = (Z1 | Z2)`` and ``M(i)`` together with a boundary
multiset ``mu``.  Products use the zero-padding convention, so the inner
dimensions of ``Y1 . M . Z1^t`` need not agree.

Exhaustive quantification over matrix tuples is only offered for GF(2) with
``s <= 1`` and ``p <= 1``.  There the tuple space is enumerated with ``P`` and
``Q`` taken as sets of distinct rows, since ranks ignore row order and
duplicated rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import combinations, product
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    DimensionMismatch,
    EncodingMismatch,
    IndexOutOfRange,
    IntractableExhaustive,
    ProfileInvariantError,
)
from .field import Field, SesquiMorphism
from .graph import Boundary, BoundariedSGraph, mu_expand
from .matrix import gf2_rank, rank_rows, star_rows
from .width import LinearEncoding, bound_lk

Mat = tuple[tuple[int, ...], ...]


def rest(rows: Sequence[Sequence[int]]) -> Mat:
    """Distinct rows in order of first occurrence."""
    seen: dict[tuple[int, ...], None] = {}
    for r in rows:
        seen.setdefault(tuple(r), None)
    return tuple(seen)


def _mat(rows: Iterable[Iterable[int]]) -> Mat:
    return tuple(tuple(int(a) for a in r) for r in rows)


def _abct(f: Field, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], C: Sequence[Sequence[int]]) -> list[list[int]]:
    """``A . B . C^t`` with zero padding on mismatched inner dimensions."""
    width = max((len(r) for r in B), default=0)
    out = []
    for a in A:
        w = [0] * width
        for k in range(min(len(a), len(B))):
            c = a[k]
            if c:
                row = B[k]
                mul = f.mul_table[c]
                w = [f.add_table[x][mul[y]] for x, y in zip(w, list(row) + [0] * (width - len(row)))]
        out.append([f.dot(w, r) for r in C])
    return out


# ---------------------------------------------------------------- profiles


@dataclass(frozen=True)
class LinearSProfile:
    """``(Y, Z, mu, M, t)`` with index-wise blocks stored 0-based."""

    field: Field
    sigma: SesquiMorphism
    s: int
    Y1: tuple[Mat, ...]
    Y2: tuple[Mat, ...]
    Z1: tuple[Mat, ...]
    Z2: tuple[Mat, ...]
    M: tuple[Mat, ...]
    mu: Boundary = ()

    def __post_init__(self) -> None:
        t = len(self.M)
        if not (len(self.Y1) == len(self.Y2) == len(self.Z1) == len(self.Z2) == t):
            raise DimensionMismatch("every block sequence needs t entries")
        for i in range(t):
            if len(self.Y1[i]) != len(self.Y2[i]) or len(self.Z1[i]) != len(self.Z2[i]):
                raise DimensionMismatch(f"Y or Z halves disagree in row count at index {i + 1}")
            if any(len(r) != self.s for r in self.Y2[i] + self.Z2[i]):
                raise DimensionMismatch(f"label rows must have length {self.s}")
        for i in range(t - 1):
            if not set(rest(self.Y2[i])) <= set(rest(self.Y2[i + 1])):
                raise ProfileInvariantError(f"Rest(Y2) shrinks between indices {i + 1} and {i + 2}")
            if not set(rest(self.Z2[i + 1])) <= set(rest(self.Z2[i])):
                raise ProfileInvariantError(f"Rest(Z2) grows between indices {i + 1} and {i + 2}")
        # an M without columns multiplies to zero whatever its row count; store it as ()
        object.__setattr__(self, "M", tuple(m if m and m[0] else () for m in self.M))

    @property
    def t(self) -> int:
        return len(self.M)

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.t:
            raise IndexOutOfRange(f"index {i} outside 1..{self.t}")

    def block(self, i: int) -> tuple[Mat, Mat, Mat, Mat, Mat]:
        self.check_index(i)
        k = i - 1
        return self.Y1[k], self.Y2[k], self.Z1[k], self.Z2[k], self.M[k]

    def with_blocks(self, idx: Sequence[int]) -> "LinearSProfile":
        """Profile whose ``j``-th index copies index ``idx[j]`` (1-based) of this one."""
        ks = [i - 1 for i in idx]
        return replace(
            self,
            Y1=tuple(self.Y1[k] for k in ks),
            Y2=tuple(self.Y2[k] for k in ks),
            Z1=tuple(self.Z1[k] for k in ks),
            Z2=tuple(self.Z2[k] for k in ks),
            M=tuple(self.M[k] for k in ks),
        )


def make_profile(
    field: Field,
    sigma: SesquiMorphism,
    s: int,
    blocks: Sequence[tuple],
    mu: Boundary = (),
) -> LinearSProfile:
    """Build a profile from ``(Y1, Y2, Z1, Z2, M)`` tuples, one per index."""
    cols = list(zip(*blocks)) if blocks else [(), (), (), (), ()]
    Y1, Y2, Z1, Z2, M = (tuple(_mat(m) for m in c) for c in cols)
    return LinearSProfile(field, sigma, s, Y1, Y2, Z1, Z2, M, tuple(mu))


def profile_of(g: BoundariedSGraph, e: LinearEncoding) -> LinearSProfile:
    """The ``(G, gamma, mu)``-profile of a linear encoding of ``G``.

    For ``i < t`` the rows of ``Y(i)`` are the distinct pairs ``(u, gamma(x))``
    with ``u`` the row of ``N(i)`` used by ``x`` in ``X_i``, ordered by first
    occurrence along the position order; ``Z(i)`` is built the same way from
    ``P(i)``.  The last index carries ``Y(t) = (0 gamma)`` and empty ``Z(t)``
    and ``M(t)``.
    """
    G = g.base
    if set(e.L) != set(G.vertices):
        raise EncodingMismatch("encoding vertex set differs from the graph")
    order = sorted(G.vertices, key=lambda v: e.L[v])
    Y1, Y2, Z1, Z2, M = [], [], [], [], []
    for i in range(1, e.t):
        ro, co = e.row_of[i], e.col_of[i]
        if set(ro) != {v for v in G.vertices if e.L[v] <= i}:
            raise EncodingMismatch(f"row map at position {i} does not match the prefix")
        yrows = rest((e.N[i][ro[x]] + g.label(x)) for x in order if x in ro)
        zrows = rest((e.P[i][co[y]] + g.label(y)) for y in order if y in co)
        a = len(e.M[i])
        b = len(e.M[i][0]) if e.M[i] else 0
        Y1.append(tuple(r[:a] for r in yrows))
        Y2.append(tuple(r[a:] for r in yrows))
        Z1.append(tuple(r[:b] for r in zrows))
        Z2.append(tuple(r[b:] for r in zrows))
        M.append(tuple(e.M[i]))
    if e.t >= 1:
        labels = rest(g.label(x) for x in order)
        Y1.append(tuple(() for _ in labels))
        Y2.append(labels)
        Z1.append(())
        Z2.append(())
        M.append(())
    return LinearSProfile(G.field, G.sigma, g.s, tuple(Y1), tuple(Y2), tuple(Z1), tuple(Z2), tuple(M), g.mu)


def zero_profile(field: Field, sigma: SesquiMorphism, s: int, t: int) -> LinearSProfile:
    empty = tuple(() for _ in range(t))
    return LinearSProfile(field, sigma, s, empty, empty, empty, empty, empty, ())


def subdivide(e: LinearSProfile, i: int) -> LinearSProfile:
    """Duplicate index ``i``; the result has ``t + 1`` indices."""
    e.check_index(i)
    idx = list(range(1, i + 1)) + list(range(i, e.t + 1))
    return e.with_blocks(idx)


def subdivide_times(e: LinearSProfile, i: int, times: int) -> LinearSProfile:
    for _ in range(times):
        e = subdivide(e, i)
    return e


def dual_profile(e: LinearSProfile) -> LinearSProfile:
    """``Y'(i) = Z(t-i+1)``, ``Z'(i) = Y(t-i+1)``, ``M'(i) = M(t-i+1)^t``."""
    rev = list(range(e.t - 1, -1, -1))

    def tr(m: Mat) -> Mat:
        if not m:
            return ()
        return tuple(zip(*m))

    return LinearSProfile(
        e.field,
        e.sigma,
        e.s,
        tuple(e.Z1[k] for k in rev),
        tuple(e.Z2[k] for k in rev),
        tuple(e.Y1[k] for k in rev),
        tuple(e.Y2[k] for k in rev),
        tuple(tr(e.M[k]) for k in rev),
        e.mu,
    )


def shortcut(e: LinearSProfile, pair: tuple[int, int]) -> LinearSProfile:
    """Remove the indices strictly between the two members of ``pair``."""
    i, j = sorted(pair)
    e.check_index(i)
    e.check_index(j)
    keep = list(range(1, i + 1)) + list(range(j, e.t + 1))
    return e.with_blocks(keep)


# ---------------------------------------------------------------- matrix tuples


@dataclass(frozen=True)
class MatrixTuple:
    """``(Gamma, N, P = (P1 | P2), Q = (Q1 | Q2))``."""

    gamma: Mat
    N: Mat
    P1: Mat
    P2: Mat
    Q1: Mat
    Q2: Mat

    def dual(self) -> "MatrixTuple":
        nt = tuple(zip(*self.N)) if self.N else ()
        return MatrixTuple(self.gamma, nt, self.Q1, self.Q2, self.P1, self.P2)


def make_tuple(gamma, N, P, Q, p: int) -> MatrixTuple:
    """Split full rows of ``P`` and ``Q`` after the first ``p`` entries."""
    P, Q = _mat(P), _mat(Q)
    return MatrixTuple(
        _mat(gamma), _mat(N), tuple(r[:p] for r in P), tuple(r[p:] for r in P), tuple(r[:p] for r in Q), tuple(r[p:] for r in Q)
    )


def _all_matrices(q: int, r: int, c: int) -> Iterator[Mat]:
    for flat in product(range(q), repeat=r * c):
        yield tuple(tuple(flat[k * c : (k + 1) * c]) for k in range(r))


def exhaustive_supported(field: Field, s: int, p: int) -> bool:
    return field.order == 2 and s <= 1 and p <= 1


def exhaustive_tuples(field: Field, s: int, p: int) -> list[MatrixTuple]:
    """All tuples up to row order and repetition in ``P`` and ``Q``.

    ``N`` ranges over full ``p x p`` matrices; smaller ones give the same
    products as a zero-padded full one.
    """
    if not exhaustive_supported(field, s, p):
        raise IntractableExhaustive(f"exhaustive tuples only for GF(2), s <= 1, p <= 1 (got q={field.order}, s={s}, p={p})")
    q = field.order
    vecs = list(product(range(q), repeat=p + s))
    subsets = [tuple(c) for r in range(len(vecs) + 1) for c in combinations(vecs, r)]
    out = []
    for gamma in _all_matrices(q, s, s):
        for N in _all_matrices(q, p, p):
            for P in subsets:
                for Q in subsets:
                    out.append(make_tuple(gamma, N, P, Q, p))
    return out


def sampled_tuples(field: Field, s: int, p: int, budget: int, seed: int) -> list[MatrixTuple]:
    """Seeded random tuples with row counts drawn from ``0 .. q^(p+s)``."""
    rng = random.Random(seed)
    q = field.order
    cap = q ** (p + s)

    def rand(r: int, c: int) -> list[list[int]]:
        return [[rng.randrange(q) for _ in range(c)] for _ in range(r)]

    out = []
    for _ in range(budget):
        out.append(
            make_tuple(rand(s, s), rand(p, p), rand(rng.randint(0, cap), p + s), rand(rng.randint(0, cap), p + s), p)
        )
    return out


def tuples_for(field: Field, s: int, p: int, mode: str = "exhaustive", budget: int = 1000, seed: int | None = None) -> list[MatrixTuple]:
    if mode == "exhaustive":
        return exhaustive_tuples(field, s, p)
    if mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode needs an explicit seed")
        return sampled_tuples(field, s, p, budget, seed)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------- A_{E,D}(i)


def _starred(
    f: Field,
    sigma: SesquiMorphism,
    base: list[list[int]],
    mu: Boundary,
    gamma: Mat,
    row_labels: Sequence[Sequence[int]],
    col_labels: Sequence[Sequence[int]],
) -> list[list[int]]:
    """Apply the star chain of ``mu``; ``C_v`` maps a label row ``w`` to ``v . Gamma . w^t``."""
    for v1, v2, t in mu_expand(mu):
        c1r = _abct(f, [v1], gamma, row_labels)[0] if row_labels else []
        c2r = _abct(f, [v2], gamma, row_labels)[0] if row_labels else []
        c1c = _abct(f, [v1], gamma, col_labels)[0] if col_labels else []
        c2c = _abct(f, [v2], gamma, col_labels)[0] if col_labels else []
        base = star_rows(f, sigma, base, c1r, c2r, c1c, c2c, t)
    return base


def _assemble(tl, tr, bl, br, nrows_top: int, ncols_left: int, ncols_right: int) -> list[list[int]]:
    rows = []
    for k in range(nrows_top):
        rows.append(list(tl[k]) + list(tr[k]))
    for k in range(len(br) if br else len(bl)):
        left = list(bl[k]) if bl else [0] * ncols_left
        right = list(br[k]) if br else [0] * ncols_right
        rows.append(left + right)
    return rows


def assemble_A(e: LinearSProfile, d: MatrixTuple, i: int) -> list[list[int]]:
    """Block matrix ``[[Y1 M Z1^t, Y2 Gamma Q2^t], [sigma(Z2 Gamma P2^t)^t, P']]`` at index ``i``.

    ``P'`` is ``P1 N Q1^t`` after the star chain of ``mu``.
    """
    f = e.field
    Y1, Y2, Z1, Z2, M = e.block(i)
    tl = _abct(f, Y1, M, Z1)
    tr = _abct(f, Y2, d.gamma, d.Q2)
    bl_t = _abct(f, Z2, d.gamma, d.P2)
    bl = [[e.sigma(a) for a in col] for col in zip(*bl_t)] if bl_t else [[] for _ in d.P2]
    br = _abct(f, d.P1, d.N, d.Q1)
    br = _starred(f, e.sigma, br, e.mu, d.gamma, d.P2, d.Q2)
    return _assemble(tl, tr, bl, br, len(Y1), len(Z1), len(d.Q1))


def rank_A(e: LinearSProfile, d: MatrixTuple, i: int) -> int:
    rows = assemble_A(e, d, i)
    if not rows or not rows[0]:
        return 0
    return rank_rows(e.field, rows)


def _pack(rows: Sequence[Sequence[int]]) -> list[int]:
    return [sum(1 << j for j, a in enumerate(r) if a) for r in rows]


def _abct2(A: Sequence[int], nb: int, B: Sequence[int], C: Sequence[int]) -> list[int]:
    """GF(2) ``A . B . C^t`` on packed rows; result rows are masks over the rows of ``C``."""
    lim = (1 << nb) - 1
    out = []
    for a in A:
        a &= lim
        w = 0
        while a:
            k = (a & -a).bit_length() - 1
            a &= a - 1
            w ^= B[k]
        r = 0
        for c_idx, c in enumerate(C):
            if (w & c).bit_count() & 1:
                r |= 1 << c_idx
        out.append(r)
    return out


def _transpose_packed(rows: Sequence[Sequence[int]]) -> list[int]:
    width = max((len(r) for r in rows), default=0)
    return _pack([[r[j] if j < len(r) else 0 for r in rows] for j in range(width)])


def _rank_table_gf2(e: LinearSProfile, tuples: Sequence[MatrixTuple]) -> list[tuple[int, ...]]:
    Y1 = [_pack(m) for m in e.Y1]
    Y2 = [_pack(m) for m in e.Y2]
    Z1 = [_pack(m) for m in e.Z1]
    Z2 = [_pack(m) for m in e.Z2]
    Ms = [_pack(m) for m in e.M]
    mu = [(_pack([v1])[0], _pack([v2])[0]) for v1, v2, _ in mu_expand(e.mu)]
    nz = [len(z) for z in e.Z1]
    tls = [_abct2(Y1[k], len(Ms[k]), Ms[k], Z1[k]) for k in range(e.t)]
    out = []
    for d in tuples:
        G = _pack(d.gamma)
        Gt = _transpose_packed(d.gamma)
        P2, Q2 = _pack(d.P2), _pack(d.Q2)
        ns = len(G)
        br = _abct2(_pack(d.P1), len(d.N), _pack(d.N), _pack(d.Q1))
        for v1, v2 in mu:
            c1r = _abct2([v1], ns, G, P2)[0]
            c2r = _abct2([v2], ns, G, P2)[0]
            c1c = _abct2([v1], ns, G, Q2)[0]
            c2c = _abct2([v2], ns, G, Q2)[0]
            br = [
                r ^ (c2c if c1r >> k & 1 else 0) ^ (c1c if c2r >> k & 1 else 0)
                for k, r in enumerate(br)
            ]
        row = []
        for k in range(e.t):
            shift = nz[k]
            tr = _abct2(Y2[k], ns, G, Q2)
            bl = _abct2(P2, ns, Gt, Z2[k])
            rows = [a | (b << shift) for a, b in zip(tls[k], tr)]
            rows += [a | (b << shift) for a, b in zip(bl, br)]
            row.append(gf2_rank(rows))
        out.append(tuple(row))
    return out


def rank_table(e: LinearSProfile, tuples: Sequence[MatrixTuple]) -> list[tuple[int, ...]]:
    """``rank(A_{E,D}(i))`` for every tuple ``D`` (rows) and index ``i`` (columns).

    Same values as :func:`rank_A`, with the ``D``-free and ``i``-free blocks
    computed once.  Over GF(2) rows are packed into integers.
    """
    if e.field.order == 2:
        return _rank_table_gf2(e, tuples)
    f, sg = e.field, e.sigma
    tls = [_abct(f, e.Y1[k], e.M[k], e.Z1[k]) for k in range(e.t)]
    out = []
    for d in tuples:
        br = _starred(f, sg, _abct(f, d.P1, d.N, d.Q1), e.mu, d.gamma, d.P2, d.Q2)
        row = []
        for k in range(e.t):
            Y2, Z2 = e.Y2[k], e.Z2[k]
            tr = _abct(f, Y2, d.gamma, d.Q2)
            bl_t = _abct(f, Z2, d.gamma, d.P2)
            bl = [[sg(a) for a in col] for col in zip(*bl_t)] if bl_t else [[] for _ in d.P2]
            rows = _assemble(tls[k], tr, bl, br, len(Y2), len(Z2), len(d.Q1))
            row.append(rank_rows(f, rows) if rows and rows[0] else 0)
        out.append(tuple(row))
    return out


class PWidth(NamedTuple):
    value: int
    exact: bool


def p_width(e: LinearSProfile, p: int, mode: str = "exhaustive", budget: int = 1000, seed: int | None = None) -> PWidth:
    """Maximum rank of ``A_{E,D}(i)``; sampled mode gives a lower bound."""
    table = rank_table(e, tuples_for(e.field, e.s, p, mode, budget, seed))
    return PWidth(max((max(r, default=0) for r in table), default=0), mode == "exhaustive")


def directly_dominates(
    e1: LinearSProfile, e2: LinearSProfile, p: int, mode: str = "exhaustive", budget: int = 1000, seed: int | None = None
) -> bool:
    """``e1 <=_DD e2``: every rank of ``e1`` is at most the matching rank of ``e2``."""
    if e1.t != e2.t or e1.s != e2.s or e1.field != e2.field:
        raise DimensionMismatch("profiles must share t, s and the field")
    tuples = tuples_for(e1.field, e1.s, p, mode, budget, seed)
    for r1, r2 in zip(rank_table(e1, tuples), rank_table(e2, tuples)):
        if any(a > b for a, b in zip(r1, r2)):
            return False
    return True


def dominated_via_subdivision(e1: LinearSProfile, e2: LinearSProfile, p: int, **kw) -> bool:
    """Equal-length case of ``<=_D``: subdivide nothing, compare directly."""
    return e1.t == e2.t and directly_dominates(e1, e2, p, **kw)


# ---------------------------------------------------------------- redundancy


def _rest_pair(e: LinearSProfile, i: int) -> tuple[frozenset, frozenset]:
    return frozenset(rest(e.Y2[i - 1])), frozenset(rest(e.Z2[i - 1]))


def _is_redundant(e: LinearSProfile, i: int, j: int, table: Sequence[Sequence[int]]) -> bool:
    lo, hi = min(i, j), max(i, j)
    ref = _rest_pair(e, i)
    if any(_rest_pair(e, ell) != ref for ell in range(lo, hi + 1)):
        return False
    for ranks in table:
        ri, rj = ranks[i - 1], ranks[j - 1]
        if any(not ri <= ranks[ell - 1] <= rj for ell in range(lo, hi + 1)):
            return False
    return True


def redundant_pairs(
    e: LinearSProfile, p: int, mode: str = "exhaustive", budget: int = 1000, seed: int | None = None,
    table: Sequence[Sequence[int]] | None = None,
) -> list[tuple[int, int]]:
    """All ``p``-redundant pairs ``(i, j)`` with ``|i - j| >= 2``, in lexicographic order."""
    if table is None:
        table = rank_table(e, tuples_for(e.field, e.s, p, mode, budget, seed))
    out = []
    for i in range(1, e.t + 1):
        for j in range(1, e.t + 1):
            if abs(i - j) >= 2 and _is_redundant(e, i, j, table):
                out.append((i, j))
    return out


def find_redundant_pair(e: LinearSProfile, p: int, mode: str = "exhaustive", **kw) -> tuple[int, int] | None:
    pairs = redundant_pairs(e, p, mode, **kw)
    return pairs[0] if pairs else None


def is_homogeneous(e: LinearSProfile, p: int, mode: str = "exhaustive", table=None, **kw) -> bool:
    """Non-redundant with the same ``(Rest(Y2), Rest(Z2))`` at every index."""
    ref = _rest_pair(e, 1) if e.t else None
    if any(_rest_pair(e, i) != ref for i in range(1, e.t + 1)):
        return False
    return not redundant_pairs(e, p, mode, table=table, **kw)


def extreme_indices(ranks: Sequence[int]) -> list[int]:
    """Indices (1-based) whose rank is a strict unique maximum or minimum."""
    t = len(ranks)
    if t == 1:
        return [1]
    out = []
    for i, r in enumerate(ranks):
        others = ranks[:i] + ranks[i + 1 :]
        if all(r > o for o in others) or all(r < o for o in others):
            out.append(i + 1)
    return out


def extreme_index(e: LinearSProfile, d: MatrixTuple) -> int | None:
    ranks = [rank_A(e, d, i) for i in range(1, e.t + 1)]
    ex = extreme_indices(ranks)
    return ex[0] if ex else None


# ---------------------------------------------------------------- mergeability


def merge_block(e: LinearSProfile, f_: LinearSProfile, gamma: Mat, i: int) -> list[list[int]]:
    """The block matrix whose rank decides mergeability at index ``i``."""
    fld = e.field
    Y1, Y2, Z1, Z2, M = e.block(i)
    Y1f, Y2f, Z1f, Z2f, Mf = f_.block(i)
    tl = _abct(fld, Y1, M, Z1)
    tr = _abct(fld, Y2, gamma, Z2f)
    bl_t = _abct(fld, Z2, gamma, Y2f)
    bl = [[e.sigma(a) for a in col] for col in zip(*bl_t)] if bl_t else [[] for _ in Y2f]
    br = _abct(fld, Y1f, Mf, Z1f)
    br = _starred(fld, e.sigma, br, e.mu, gamma, Y2f, Z2f)
    return _assemble(tl, tr, bl, br, len(Y1), len(Z1), len(Z1f))


def mergeable(e: LinearSProfile, f_: LinearSProfile, gamma, p: int) -> bool:
    """Whether ``e`` is ``p``-mergeable with ``f_`` by ``gamma``."""
    if e.t != f_.t or e.s != f_.s:
        raise DimensionMismatch("profiles must share t and s")
    if f_.mu:
        raise DimensionMismatch("the second profile must have an empty boundary")
    gamma = _mat(gamma.entries if hasattr(gamma, "entries") else gamma)
    if len(gamma) != e.s or any(len(r) != e.s for r in gamma):
        raise DimensionMismatch(f"gamma must be {e.s} x {e.s}")
    for i in range(1, e.t + 1):
        rows = merge_block(e, f_, gamma, i)
        if rows and rows[0] and rank_rows(e.field, rows) > p:
            return False
    return True


# ---------------------------------------------------------------- bounds


def bound_plength(p: int, s: int, q: int) -> int:
    """``(2p+1) q^(p^2 + s^2 + 2s + q^(p+s) (4p+2s) + q^(2s+1))``."""
    exponent = p * p + s * s + 2 * s + q ** (p + s) * (4 * p + 2 * s) + q ** (2 * s + 1)
    return (2 * p + 1) * q**exponent


class MainBound(NamedTuple):
    p: int
    q: int
    s: int
    k: int
    c: int
    value: int


def bound_main_detail(p: int, q: int) -> MainBound:
    """Obstructions for ``lrw <= p`` have width at most ``k = p + 1`` and labels of size ``s <= p + 1``.

    The chain length ``c`` is the p-length bound at ``s = p + 1`` (it is
    increasing in ``s``) and the vertex bound is ``l_k(c)``.
    """
    s = k = p + 1
    c = bound_plength(p, s, q)
    return MainBound(p, q, s, k, c, bound_lk(k, c))


def bound_main(p: int, q: int) -> int:
    return bound_main_detail(p, q).value


__all__ = [
    "LinearSProfile",
    "MatrixTuple",
    "PWidth",
    "MainBound",
    "assemble_A",
    "bound_lk",
    "bound_main",
    "bound_main_detail",
    "bound_plength",
    "directly_dominates",
    "dual_profile",
    "exhaustive_tuples",
    "extreme_index",
    "extreme_indices",
    "find_redundant_pair",
    "is_homogeneous",
    "make_profile",
    "make_tuple",
    "mergeable",
    "p_width",
    "profile_of",
    "rank_A",
    "rank_table",
    "redundant_pairs",
    "rest",
    "shortcut",
    "subdivide",
    "subdivide_times",
    "zero_profile",
]
