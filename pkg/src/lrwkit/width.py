"""Linear layouts, exact linear width, linkedness and linear encodings."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Callable, Hashable, Iterator, Mapping, Sequence

from .errors import BadPermutation, SizeLimitExceeded
from .graph import SGraph, cutrank_mask, induced
from .matrix import rank_rows, solve_row_raw

Vertex = Hashable

GF2_LIMIT = 20
GENERAL_LIMIT = 14
LINKED_WINDOW_LIMIT = 22


@dataclass(frozen=True)
class LinearLayout:
    """A vertex order with its prefix cut values ``f(X_1) .. f(X_{n-1})``.

    ``width`` is the maximum cut value.  Layouts of at most one element have no
    proper prefix; their width is taken to be ``f`` of the empty set.
    """

    order: tuple[Vertex, ...]
    cut_ranks: tuple[int, ...]
    width: int

    @property
    def n(self) -> int:
        return len(self.order)

    def position(self) -> dict[Vertex, int]:
        return {v: i + 1 for i, v in enumerate(self.order)}

    def prefix(self, i: int) -> tuple[Vertex, ...]:
        return self.order[:i]


# ---------------------------------------------------------------- generic solver


class CutOracle:
    """Memoised connectivity function on bitmasks over ``n`` elements."""

    def __init__(self, n: int, f: Callable[[int], int]) -> None:
        self.n = n
        self.full = (1 << n) - 1
        self._f = f
        self._memo: dict[int, int] = {}

    def __call__(self, mask: int) -> int:
        v = self._memo.get(mask)
        if v is None:
            v = self._f(mask)
            self._memo[mask] = v
        return v


def layout_cuts(oracle: CutOracle, order: Sequence[int]) -> tuple[tuple[int, ...], int]:
    n = oracle.n
    cuts = []
    mask = 0
    for v in order[: n - 1]:
        mask |= 1 << v
        cuts.append(oracle(mask))
    width = max(cuts) if cuts else oracle(0)
    return tuple(cuts), width


def _completable(oracle: CutOracle, k: int) -> Callable[[int], bool]:
    """Predicate: can the prefix set be extended to a full order with all cuts <= k?"""
    n, full = oracle.n, oracle.full
    memo: dict[int, bool] = {full: True}

    def ok(S: int) -> bool:
        r = memo.get(S)
        if r is not None:
            return r
        r = False
        for v in range(n):
            if S >> v & 1:
                continue
            T = S | 1 << v
            if T != full and oracle(T) > k:
                continue
            if ok(T):
                r = True
                break
        memo[S] = r
        return r

    return ok


def _first_order(oracle: CutOracle, k: int) -> list[int] | None:
    ok = _completable(oracle, k)
    if not ok(0):
        return None
    order: list[int] = []
    S = 0
    n, full = oracle.n, oracle.full
    while S != full:
        for v in range(n):
            if S >> v & 1:
                continue
            T = S | 1 << v
            if (T == full or oracle(T) <= k) and ok(T):
                order.append(v)
                S = T
                break
    return order


def linear_width(oracle: CutOracle) -> tuple[int, list[int]]:
    """Exact linear width and the lexicographically first optimal order."""
    n = oracle.n
    if n <= 1:
        return oracle(0), list(range(n))
    k = min(oracle(1 << v) for v in range(n))
    while True:
        order = _first_order(oracle, k)
        if order is not None:
            return k, order
        k += 1


def optimal_orders(oracle: CutOracle, k: int) -> Iterator[list[int]]:
    """All orders of width at most ``k``, in lexicographic order."""
    n, full = oracle.n, oracle.full
    ok = _completable(oracle, k)
    if not ok(0):
        return
    path: list[int] = []

    def walk(S: int) -> Iterator[list[int]]:
        if S == full:
            yield list(path)
            return
        for v in range(n):
            if S >> v & 1:
                continue
            T = S | 1 << v
            if (T == full or oracle(T) <= k) and ok(T):
                path.append(v)
                yield from walk(T)
                path.pop()

    yield from walk(0)


# ---------------------------------------------------------------- graphs


def graph_oracle(g: SGraph) -> CutOracle:
    return CutOracle(g.n, lambda m: cutrank_mask(g, m))


def _check_perm(g: SGraph, order: Sequence[Vertex]) -> list[int]:
    try:
        idx = [g.index[v] for v in order]
    except KeyError as e:
        raise BadPermutation(f"unknown vertex {e.args[0]!r}") from None
    if sorted(idx) != list(range(g.n)):
        raise BadPermutation("order must list every vertex exactly once")
    return idx


def make_layout(g: SGraph, order: Sequence[Vertex], oracle: CutOracle | None = None) -> LinearLayout:
    idx = _check_perm(g, order)
    cuts, width = layout_cuts(oracle or graph_oracle(g), idx)
    return LinearLayout(tuple(order), cuts, width)


def layout_width(g: SGraph, pi: LinearLayout | Sequence[Vertex]) -> int:
    order = pi.order if isinstance(pi, LinearLayout) else pi
    return make_layout(g, order).width


def _size_limit(g: SGraph, n: int) -> None:
    limit = GF2_LIMIT if g.field.order == 2 else GENERAL_LIMIT
    if n > limit:
        raise SizeLimitExceeded(f"exact solver limited to {limit} vertices per component (got {n})")


def lrw_exact(g: SGraph) -> tuple[int, LinearLayout]:
    """Linear rank-width and an optimal layout.

    Components are solved separately and their layouts concatenated in order
    of their smallest vertex.
    """
    order: list[Vertex] = []
    width = 0
    for comp in g.components():
        _size_limit(g, len(comp))
        if len(comp) == 1:
            order.extend(comp)
            continue
        sub = induced(g, comp)
        k, idx = linear_width(graph_oracle(sub))
        width = max(width, k)
        order.extend(sub.vertices[i] for i in idx)
    lay = make_layout(g, order)
    assert lay.width == width
    return width, lay


def lrw(g: SGraph) -> int:
    return lrw_exact(g)[0]


def lrw_at_most(g: SGraph, k: int) -> bool:
    """Decide ``lrw(g) <= k`` without computing the exact value."""
    if k < 0:
        return False
    for comp in g.components():
        if len(comp) <= 1:
            continue
        _size_limit(g, len(comp))
        if _first_order(graph_oracle(induced(g, comp)), k) is None:
            return False
    return True


# ---------------------------------------------------------------- linkedness


def sandwiched_min(oracle: CutOracle, lo: int, hi: int) -> int:
    """Minimum of ``f(Z)`` over ``lo <= Z <= hi`` (bitmasks, ``lo`` a subset of ``hi``)."""
    free = hi & ~lo
    bits = [1 << b for b in range(oracle.n) if free >> b & 1]
    if len(bits) > LINKED_WINDOW_LIMIT:
        raise SizeLimitExceeded(f"window of {len(bits)} free elements is too large")
    best = None
    sub = free
    while True:
        v = oracle(lo | sub)
        if best is None or v < best:
            best = v
            if best == 0:
                break
        if sub == 0:
            break
        sub = (sub - 1) & free
    return best


def _prefix_masks(g: SGraph, order: Sequence[Vertex]) -> list[int]:
    masks = [0]
    for v in order:
        masks.append(masks[-1] | 1 << g.pos(v))
    return masks


def is_linked(g: SGraph, pi: LinearLayout, i: int, j: int, oracle: CutOracle | None = None) -> bool:
    """Whether the prefix indices ``i < j`` are linked in ``pi``."""
    n = pi.n
    if not 1 <= i < j <= n - 1:
        raise ValueError(f"need 1 <= i < j <= {n - 1}")
    oracle = oracle or graph_oracle(g)
    masks = _prefix_masks(g, pi.order)
    along = min(pi.cut_ranks[ell - 1] for ell in range(i, j + 1))
    return along == sandwiched_min(oracle, masks[i], masks[j])


def is_linked_layout(g: SGraph, pi: LinearLayout, oracle: CutOracle | None = None) -> bool:
    oracle = oracle or graph_oracle(g)
    for i, j in combinations(range(1, pi.n), 2):
        if not is_linked(g, pi, i, j, oracle):
            return False
    return True


def find_linked_layout(g: SGraph, limit: int = 12) -> LinearLayout:
    """An optimal layout in which every pair of prefix indices is linked."""
    if g.n > limit:
        raise SizeLimitExceeded(f"linked-layout search limited to {limit} vertices")
    oracle = graph_oracle(g)
    k, _ = linear_width(oracle)
    for idx in optimal_orders(oracle, k):
        lay = make_layout(g, [g.vertices[v] for v in idx], oracle)
        if is_linked_layout(g, lay, oracle):
            return lay
    raise AssertionError("no linked optimal layout found")  # would contradict the linked-layout theorem


# ---------------------------------------------------------------- lambda-linked sequences


def bound_lk(k: int, c: int) -> int:
    """``l_k(c) = 1 + sum_{i=0..k} c (c+1)^i``."""
    return 1 + sum(c * (c + 1) ** i for i in range(k + 1))


def _lambda(pi: LinearLayout) -> list[int]:
    # lambda on [n]; the full prefix has cut value 0
    return list(pi.cut_ranks) + [0] if pi.n else []


def _runs(lam: Sequence[int], level: int) -> list[list[int]]:
    runs, cur = [], []
    for i, v in enumerate(lam, start=1):
        if v >= level:
            cur.append(i)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def lambda_linked_sequence(g: SGraph | None, pi: LinearLayout, c: int) -> tuple[int, list[int]] | None:
    """``(s, [i_1 .. i_{c+1}])`` with equal lambda value ``s`` and consecutive indices linked.

    First follows the interval argument: take the largest level ``l`` admitting
    an interval of ``[n]`` of length at least ``1 + sum_{i=l..k} c (c+1)^(i-l)``
    on which lambda stays at least ``l``.  If that does not produce a sequence
    (possible only when ``n < l_k(c)``) every level is searched.
    """
    lam = _lambda(pi)
    k = pi.width
    need = c + 1
    for level in range(k, -1, -1):
        length = 1 + sum(c * (c + 1) ** (i - level) for i in range(level, k + 1))
        for run in _runs(lam, level):
            if len(run) < length:
                continue
            hits = [i for i in run if lam[i - 1] == level]
            if len(hits) >= need:
                return level, hits[:need]
        if any(len(r) >= length for r in _runs(lam, level)):
            break
    for level in range(0, k + 1):
        for run in _runs(lam, level):
            hits = [i for i in run if lam[i - 1] == level]
            if len(hits) >= need:
                return level, hits[:need]
    return None


def is_lambda_linked(lam: Sequence[int], i: int, j: int) -> bool:
    return lam[i - 1] == lam[j - 1] and all(lam[ell - 1] >= lam[i - 1] for ell in range(i, j + 1))


# ---------------------------------------------------------------- encodings


@dataclass(frozen=True)
class LinearEncoding:
    """``(N, P, M, L, t)`` together with the maps that realise each factorisation.

    ``row_of[i][x]`` is the row of ``N(i)`` used for vertex ``x`` in ``X_i`` and
    ``col_of[i][y]`` the row of ``P(i)`` used for ``y`` outside ``X_i``.  Lists
    are indexed by position ``i`` starting from 1 (index 0 is unused).
    """

    t: int
    L: Mapping[Vertex, int]
    N: tuple
    P: tuple
    M: tuple
    row_of: tuple
    col_of: tuple
    basis_rows: tuple = dc_field(default=())
    basis_cols: tuple = dc_field(default=())

    @property
    def width(self) -> int:
        w = 0
        for i in range(1, self.t + 1):
            m = self.M[i]
            w = max(w, len(m), len(m[0]) if m else 0)
        return w

    def X(self, i: int) -> set[Vertex]:
        return {v for v, pos in self.L.items() if pos <= i}


def _greedy_basis(f, vectors: Sequence[Sequence[int]]) -> list[int]:
    chosen: list[int] = []
    rows: list[Sequence[int]] = []
    for idx, vec in enumerate(vectors):
        if rank_rows(f, rows + [vec]) > len(rows):
            chosen.append(idx)
            rows.append(vec)
    return chosen


def encode(
    g: SGraph,
    pi: LinearLayout | Sequence[Vertex],
    positions: Mapping[Vertex, int] | None = None,
    t: int | None = None,
) -> LinearEncoding:
    """Linear encoding from a layout, or from an injective position map into ``[t]``.

    Bases are chosen greedily in layout order, giving the smallest indices.
    """
    order = tuple(pi.order if isinstance(pi, LinearLayout) else pi)
    _check_perm(g, order)
    if positions is None:
        positions = {v: i + 1 for i, v in enumerate(order)}
        t = len(order)
    else:
        if t is None:
            t = max(positions.values(), default=0)
        if len(set(positions.values())) != len(positions) or set(positions) != set(g.vertices):
            raise BadPermutation("position map must be injective on all vertices")
        if any(not 1 <= p <= t for p in positions.values()):
            raise BadPermutation(f"positions must lie in [1, {t}]")
        order = tuple(sorted(g.vertices, key=lambda v: positions[v]))
    f = g.field
    N, P, M, RO, CO, BR, BC = [None], [None], [None], [None], [None], [None], [None]
    for i in range(1, t + 1):
        X = [v for v in order if positions[v] <= i]
        Y = [v for v in order if positions[v] > i]
        xi = [g.pos(v) for v in X]
        yi = [g.pos(v) for v in Y]
        rows = [[g.rows[a][b] for b in yi] for a in xi]
        cols = [[g.rows[a][b] for a in xi] for b in yi]
        br = _greedy_basis(f, rows) if yi else []
        bc = _greedy_basis(f, cols) if xi else []
        m_i = tuple(tuple(rows[a][b] for b in bc) for a in br)
        basis_r = [rows[a] for a in br]
        basis_c = [cols[b] for b in bc]
        n_rows: list[tuple[int, ...]] = []
        row_of: dict[Vertex, int] = {}
        for v, r in zip(X, rows):
            u = tuple(solve_row_raw(f, r, basis_r)) if basis_r else ()
            if u not in n_rows:
                n_rows.append(u)
            row_of[v] = n_rows.index(u)
        p_rows: list[tuple[int, ...]] = []
        col_of: dict[Vertex, int] = {}
        for v, c in zip(Y, cols):
            w = tuple(solve_row_raw(f, c, basis_c)) if basis_c else ()
            if w not in p_rows:
                p_rows.append(w)
            col_of[v] = p_rows.index(w)
        N.append(tuple(n_rows))
        P.append(tuple(p_rows))
        M.append(m_i)
        RO.append(row_of)
        CO.append(col_of)
        BR.append(tuple(X[a] for a in br))
        BC.append(tuple(Y[b] for b in bc))
    return LinearEncoding(t, dict(positions), tuple(N), tuple(P), tuple(M), tuple(RO), tuple(CO), tuple(BR), tuple(BC))


def _bil(f, u: Sequence[int], m: Sequence[Sequence[int]], w: Sequence[int]) -> int:
    acc = 0
    for a, row in zip(u, m):
        if a:
            acc = f.add(acc, f.mul(a, f.dot(row, w)))
    return acc


def decode_check(g: SGraph, e: LinearEncoding) -> bool:
    """Re-derive every cut matrix from the encoding and check the width bound."""
    f = g.field
    if set(e.L) != set(g.vertices) or len(set(e.L.values())) != len(e.L):
        return False
    for i in range(1, e.t + 1):
        X = [v for v in g.vertices if e.L[v] <= i]
        Y = [v for v in g.vertices if e.L[v] > i]
        N, P, M = e.N[i], e.P[i], e.M[i]
        ro, co = e.row_of[i], e.col_of[i]
        if set(ro) != set(X) or set(co) != set(Y):
            return False
        if set(ro.values()) != set(range(len(N))) or set(co.values()) != set(range(len(P))):
            return False
        if len(set(N)) != len(N) or len(set(P)) != len(P):
            return False
        ncols = len(M[0]) if M else 0
        if any(len(r) != len(M) for r in N) or any(len(r) != ncols for r in P):
            return False
        for x in X:
            u = N[ro[x]]
            for y in Y:
                if g.entry(x, y) != _bil(f, u, M, P[co[y]]):
                    return False
    order = sorted(g.vertices, key=lambda v: e.L[v])
    return layout_width(g, order) <= e.width if g.n else True
