"""Sigma-symmetric F*-graphs and boundaried s-labelled graphs.

A graph is stored as its adjacency matrix over the field, one tuple per vertex
in the order of ``vertices``.  That order also serves as the id order whenever
an algorithm needs "the smallest vertex".
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    FieldNotBinary,
    NonEdgePivot,
    NotSigmaSymmetric,
    SizeLimitExceeded,
    UnknownVertex,
    VertexClash,
)
from .field import GF2, Field, SesquiMorphism, default_sigma
from .matrix import FMatrix, gf2_rank, rank_rows, star_rows

Vertex = Hashable
Vector = tuple[int, ...]
Triple = tuple[Vector, Vector, int]
Boundary = tuple[tuple[Triple, int], ...]

CANON_LIMIT = 12


@dataclass(frozen=True, eq=False)
class SGraph:
    """A sigma-symmetric F*-graph given by its adjacency matrix."""

    field: Field
    sigma: SesquiMorphism
    vertices: tuple[Vertex, ...]
    rows: tuple[tuple[int, ...], ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        if not validate:
            return
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise VertexClash("duplicate vertex ids")
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise DimensionMismatch("adjacency matrix must be n x n")
        if self.sigma.field != self.field:
            raise DimensionMismatch("sigma belongs to a different field")
        q = self.field.order
        for i, r in enumerate(self.rows):
            if r[i] != 0:
                raise NotSigmaSymmetric(f"nonzero diagonal at {self.vertices[i]!r}")
            for j, a in enumerate(r):
                if not 0 <= a < q:
                    raise ValueError("entry outside the field")
                if a != self.sigma(self.rows[j][i]):
                    raise NotSigmaSymmetric(
                        f"M[{self.vertices[i]!r},{self.vertices[j]!r}] != sigma(M[{self.vertices[j]!r},{self.vertices[i]!r}])"
                    )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SGraph):
            return NotImplemented
        return (
            self.field == other.field
            and self.sigma == other.sigma
            and self.vertices == other.vertices
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.rows))

    def __repr__(self) -> str:
        return f"SGraph({self.field}, n={self.n}, edges={len(self.edges())})"

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def bits(self) -> tuple[int, ...]:
        """Row supports as bitmasks over vertex positions."""
        return tuple(sum(1 << j for j, a in enumerate(r) if a) for r in self.rows)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def adj(self) -> FMatrix:
        return FMatrix(self.field, self.vertices, self.vertices, self.rows)

    def pos(self, v: Vertex) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def entry(self, u: Vertex, v: Vertex) -> int:
        return self.rows[self.pos(u)][self.pos(v)]

    def neighbors(self, v: Vertex) -> list[Vertex]:
        r = self.rows[self.pos(v)]
        return [w for w, a in zip(self.vertices, r) if a]

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        vs = self.vertices
        return [(vs[i], vs[j]) for i in range(self.n) for j in range(i + 1, self.n) if self.rows[i][j]]

    def mask(self, xs: Iterable[Vertex]) -> int:
        m = 0
        for v in xs:
            m |= 1 << self.pos(v)
        return m

    def components(self) -> list[list[Vertex]]:
        seen: set[int] = set()
        out = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = []
            stack = [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                b = self.bits[i]
                while b:
                    j = (b & -b).bit_length() - 1
                    b &= b - 1
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
            out.append([self.vertices[i] for i in sorted(comp)])
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_text(self) -> str:
        from .io import format_graph

        return format_graph(self)


def make_graph(
    rows: Sequence[Sequence[int]],
    field: Field = GF2,
    sigma: SesquiMorphism | None = None,
    vertices: Sequence[Vertex] | None = None,
) -> SGraph:
    if sigma is None:
        sigma = default_sigma(field)
    vs = tuple(range(len(rows))) if vertices is None else tuple(vertices)
    return SGraph(field, sigma, vs, tuple(tuple(int(a) for a in r) for r in rows))


def graph_from_edges(
    vertices: int | Sequence[Vertex],
    edges: Iterable[tuple[Vertex, Vertex]],
    field: Field = GF2,
    sigma: SesquiMorphism | None = None,
) -> SGraph:
    """Graph with ``M[x,y] = 1`` and ``M[y,x] = sigma(1)`` for every listed pair."""
    if sigma is None:
        sigma = default_sigma(field)
    vs = tuple(range(vertices)) if isinstance(vertices, int) else tuple(vertices)
    idx = {v: i for i, v in enumerate(vs)}
    rows = [[0] * len(vs) for _ in vs]
    for x, y in edges:
        i, j = idx[x], idx[y]
        rows[i][j] = 1
        rows[j][i] = sigma(1)
    return SGraph(field, sigma, vs, tuple(map(tuple, rows)))


def path_graph(n: int) -> SGraph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SGraph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SGraph:
    return graph_from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> SGraph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int, field: Field = GF2, sigma: SesquiMorphism | None = None) -> SGraph:
    return graph_from_edges(n, [], field, sigma)


# ---------------------------------------------------------------- cut-rank


def cutrank_mask(g: SGraph, mask: int) -> int:
    """Cut-rank of the vertex set given as a bitmask over positions."""
    n = g.n
    full = (1 << n) - 1
    mask &= full
    if mask == 0 or mask == full:
        return 0
    if g.field.order == 2:
        inv = ~mask
        return gf2_rank(b & inv for i, b in enumerate(g.bits) if mask >> i & 1)
    cols = [j for j in range(n) if not mask >> j & 1]
    rows = [[g.rows[i][j] for j in cols] for i in range(n) if mask >> i & 1]
    return rank_rows(g.field, rows)


def cutrank(g: SGraph, x_set: Iterable[Vertex]) -> int:
    """Rank of ``M_G[X, V - X]``."""
    return cutrank_mask(g, g.mask(x_set))


# ---------------------------------------------------------------- operations


def pivot(g: SGraph, x: Vertex, y: Vertex) -> SGraph:
    """Pivot complementation ``G ^ xy``; requires ``M[x,y] != 0``."""
    f, sg = g.field, g.sigma
    i, j = g.pos(x), g.pos(y)
    M = g.rows
    a = M[i][j]
    if a == 0 or i == j:
        raise NonEdgePivot(f"{x!r}{y!r} is not an edge")
    b = M[j][i]
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    inv_a, inv_b = f.inv(a), f.inv(b)
    s1 = sg.one
    s1_over_a = mul[s1][inv_a]
    n = g.n
    new = [list(r) for r in M]
    col_x = [M[s][i] for s in range(n)]
    col_y = [M[s][j] for s in range(n)]
    row_x, row_y = M[i], M[j]
    # M'[s,t] = M[s,t] - M[s,x] M[y,t] / b - M[s,y] M[x,t] / a
    for s in range(n):
        if s == i or s == j:
            continue
        c1 = mul[col_x[s]][inv_b]
        c2 = mul[col_y[s]][inv_a]
        r = new[s]
        if c1 or c2:
            m1, m2 = mul[c1], mul[c2]
            for t in range(n):
                if t == i or t == j or t == s:
                    continue
                r[t] = add[add[r[t]][neg[m1[row_y[t]]]]][neg[m2[row_x[t]]]]
        r[i] = mul[s1_over_a][col_y[s]]
        r[j] = mul[col_x[s]][inv_b]
    rx, ry = new[i], new[j]
    for t in range(n):
        if t == i or t == j:
            continue
        rx[t] = mul[row_y[t]][inv_b]
        ry[t] = mul[s1_over_a][row_x[t]]
    rx[i] = ry[j] = 0
    rx[j] = neg[inv_b]
    ry[i] = neg[mul[mul[s1][s1]][inv_a]]
    return SGraph(f, sg, g.vertices, tuple(map(tuple, new)), validate=False)


def local_complement(g: SGraph, x: Vertex) -> SGraph:
    """``G * x``: complement the subgraph induced on the neighbours of ``x`` (GF(2) only)."""
    if g.field.order != 2:
        raise FieldNotBinary("local complementation is defined here for GF(2) graphs only")
    i = g.pos(x)
    nb = [j for j, a in enumerate(g.rows[i]) if a]
    new = [list(r) for r in g.rows]
    for a, b in combinations(nb, 2):
        new[a][b] ^= 1
        new[b][a] ^= 1
    return SGraph(g.field, g.sigma, g.vertices, tuple(map(tuple, new)), validate=False)


def induced(g: SGraph, s_set: Iterable[Vertex]) -> SGraph:
    """Subgraph induced by ``s_set``; vertex order follows ``g``."""
    keep = set(s_set)
    for v in keep:
        g.pos(v)
    idx = [i for i, v in enumerate(g.vertices) if v in keep]
    rows = tuple(tuple(g.rows[i][j] for j in idx) for i in idx)
    return SGraph(g.field, g.sigma, tuple(g.vertices[i] for i in idx), rows, validate=False)


def delete(g: SGraph, x: Vertex) -> SGraph:
    g.pos(x)
    return induced(g, (v for v in g.vertices if v != x))


def relabel(g: SGraph, mapping: Mapping[Vertex, Vertex] | Sequence[Vertex]) -> SGraph:
    """Rename vertices (keeping matrix order) or, given a sequence, reorder them."""
    if isinstance(mapping, Mapping):
        return SGraph(g.field, g.sigma, tuple(mapping[v] for v in g.vertices), g.rows)
    order = [g.pos(v) for v in mapping]
    if sorted(order) != list(range(g.n)):
        raise UnknownVertex("reordering must list every vertex once")
    rows = tuple(tuple(g.rows[i][j] for j in order) for i in order)
    return SGraph(g.field, g.sigma, tuple(g.vertices[i] for i in order), rows, validate=False)


# ---------------------------------------------------------------- canonical form


def _refine(rows: Sequence[Sequence[int]], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cells are split and ordered by label-free signatures."""
    while True:
        new: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {
                v: tuple(
                    (tuple(sorted(rows[v][w] for w in c)), tuple(sorted(rows[w][v] for w in c))) for c in cells
                )
                for v in cell
            }
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new.append(groups[key])
        cells = new
        if not changed:
            return cells


def _twins(rows: Sequence[Sequence[int]], u: int, v: int) -> bool:
    if rows[u][v] != rows[v][u]:
        return False
    for w in range(len(rows)):
        if w == u or w == v:
            continue
        if rows[u][w] != rows[v][w] or rows[w][u] != rows[w][v]:
            return False
    return True


def _serialize(f: Field, rows: Sequence[Sequence[int]], order: Sequence[int]) -> bytes:
    head = [f.char, f.degree, len(order)]
    return bytes(head + [rows[i][j] for i in order for j in order])


def canonical_order(g: SGraph, limit: int = CANON_LIMIT) -> tuple[bytes, list[Vertex]]:
    """Canonical form together with the vertex order that realises it.

    The form is the lexicographically smallest serialised adjacency matrix
    over the orderings explored by individualisation and refinement.  The
    refinement is label-free and swapping twin vertices is an automorphism,
    so the minimum equals the minimum over all orderings compatible with the
    refined partition, which makes the form an isomorphism invariant.
    """
    n = g.n
    if n > limit:
        raise SizeLimitExceeded(f"canonical form limited to {limit} vertices (got {n})")
    rows = g.rows
    f = g.field
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        k = next((ci for ci, c in enumerate(cells) if len(c) > 1), None)
        if k is None:
            order = [c[0] for c in cells]
            form = _serialize(f, rows, order)
            if best[0] is None or form < best[0]:
                best[0], best[1] = form, order
            return
        cell = cells[k]
        tried: list[int] = []
        for v in cell:
            if any(_twins(rows, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:k] + [[v], rest] + cells[k + 1 :])

    if n == 0:
        return _serialize(f, rows, []), []
    search([list(range(n))])
    return best[0], [g.vertices[i] for i in best[1]]


def canonical_form(g: SGraph, limit: int = CANON_LIMIT) -> bytes:
    return canonical_order(g, limit)[0]


def simply_isomorphic(g: SGraph, h: SGraph, limit: int = CANON_LIMIT) -> dict[Vertex, Vertex] | None:
    """Entry-preserving bijection ``V_G -> V_H`` or ``None``."""
    if g.n != h.n or g.field != h.field:
        return None
    fg, og = canonical_order(g, limit)
    fh, oh = canonical_order(h, limit)
    if fg != fh:
        return None
    return dict(zip(og, oh))


# ---------------------------------------------------------------- boundaried graphs


def mu_add(mu: Boundary, triple: Triple, char: int) -> Boundary:
    """``mu Delta_F {triple}``: add a copy, or drop all copies once there are ``char - 1``."""
    counts = dict(mu)
    c = counts.get(triple, 0)
    if c >= char - 1:
        counts.pop(triple, None)
    else:
        counts[triple] = c + 1
    return tuple(sorted(counts.items()))


def mu_expand(mu: Boundary) -> list[Triple]:
    out: list[Triple] = []
    for triple, mult in mu:
        out.extend([triple] * mult)
    return out


def make_boundary(triples: Iterable[tuple[Sequence[int], Sequence[int], int]], char: int) -> Boundary:
    mu: Boundary = ()
    for v1, v2, t in triples:
        mu = mu_add(mu, (tuple(v1), tuple(v2), int(t)), char)
    return mu


@dataclass(frozen=True)
class BoundariedSGraph:
    """``(G, gamma, mu)``: labels in F^s for each vertex plus a boundary multiset."""

    base: SGraph
    s: int
    gamma: tuple[Vector, ...]
    mu: Boundary = ()

    def __post_init__(self) -> None:
        if len(self.gamma) != self.base.n:
            raise DimensionMismatch("one label per vertex required")
        if any(len(v) != self.s for v in self.gamma):
            raise DimensionMismatch(f"labels must have length {self.s}")
        p = self.base.field.char
        for (v1, v2, t), mult in self.mu:
            if len(v1) != self.s or len(v2) != self.s:
                raise DimensionMismatch("boundary vectors must have length s")
            if t == 0:
                raise ValueError("boundary triples need nonzero t")
            if not 0 < mult < p:
                raise ValueError(f"multiplicity {mult} outside 1..{p - 1}")

    @classmethod
    def unlabelled(cls, g: SGraph) -> "BoundariedSGraph":
        return cls(g, 0, tuple(() for _ in g.vertices), ())

    @classmethod
    def of(
        cls,
        g: SGraph,
        gamma: Mapping[Vertex, Sequence[int]] | Sequence[Sequence[int]],
        mu: Iterable[tuple[Sequence[int], Sequence[int], int]] = (),
        s: int | None = None,
    ) -> "BoundariedSGraph":
        if isinstance(gamma, Mapping):
            labels = tuple(tuple(int(a) for a in gamma[v]) for v in g.vertices)
        else:
            labels = tuple(tuple(int(a) for a in r) for r in gamma)
        if s is None:
            s = len(labels[0]) if labels else 0
        return cls(g, s, labels, make_boundary(mu, g.field.char))

    def label(self, v: Vertex) -> Vector:
        return self.gamma[self.base.pos(v)]

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self.base.vertices

    def full_rank_labels(self) -> bool:
        """Whether the labels span F^s."""
        return rank_rows(self.field, list(self.gamma)) == self.s if self.s else True


def boundaried_induced(bg: BoundariedSGraph, s_set: Iterable[Vertex]) -> BoundariedSGraph:
    sub = induced(bg.base, s_set)
    return BoundariedSGraph(sub, bg.s, tuple(bg.label(v) for v in sub.vertices), bg.mu)


def boundaried_delete(bg: BoundariedSGraph, x: Vertex) -> BoundariedSGraph:
    bg.base.pos(x)
    return boundaried_induced(bg, (v for v in bg.vertices if v != x))


def boundaried_pivot(bg: BoundariedSGraph, x: Vertex, y: Vertex) -> BoundariedSGraph:
    """Pivot at ``xy`` updating labels and recording ``(gamma(x), gamma(y), t)`` in the boundary."""
    g = bg.base
    f, sg = g.field, g.sigma
    i, j = g.pos(x), g.pos(y)
    t = g.rows[i][j]
    if t == 0 or i == j:
        raise NonEdgePivot(f"{x!r}{y!r} is not an edge")
    new_base = pivot(g, x, y)
    gx, gy = bg.gamma[i], bg.gamma[j]
    inv_st = f.inv(sg(t))
    inv_t = f.inv(t)
    labels = []
    for k in range(g.n):
        if k == i:
            labels.append(f.scale(inv_st, gy))
        elif k == j:
            labels.append(f.scale(f.mul(sg.one, inv_t), gx))
        else:
            c1 = f.mul(g.rows[k][i], inv_st)
            c2 = f.mul(g.rows[k][j], inv_t)
            labels.append(f.vsub(f.vsub(bg.gamma[k], f.scale(c1, gy)), f.scale(c2, gx)))
    mu = mu_add(bg.mu, (gx, gy, t), f.char)
    return BoundariedSGraph(new_base, bg.s, tuple(labels), mu)


def _bilinear(f: Field, u: Sequence[int], m: Sequence[Sequence[int]], v: Sequence[int]) -> int:
    """``u . M . v^t``."""
    acc = 0
    for a, row in zip(u, m):
        if a:
            acc = f.add(acc, f.mul(a, f.dot(row, v)))
    return acc


def merge(g: BoundariedSGraph, h: BoundariedSGraph, m: FMatrix | Sequence[Sequence[int]]) -> BoundariedSGraph:
    """``(G, gamma_G, mu_G) (x)_M (H, gamma_H)``.

    The cross entry between ``v`` in G and ``w`` in H is
    ``gamma_G(v) . M . gamma_H(w)^t`` and the H block receives the star chain
    recorded in ``mu_G``.  The result carries the union of the labels and an
    empty boundary.
    """
    G, H = g.base, h.base
    if G.field != H.field or G.sigma != H.sigma:
        raise DimensionMismatch("graphs over different fields or sigmas")
    if g.s != h.s:
        raise DimensionMismatch("label dimensions differ")
    if h.mu:
        raise DimensionMismatch("the right operand must have an empty boundary")
    if set(G.vertices) & set(H.vertices):
        raise VertexClash("vertex sets overlap")
    mrows = m.entries if isinstance(m, FMatrix) else tuple(tuple(r) for r in m)
    if len(mrows) != g.s or any(len(r) != g.s for r in mrows):
        raise DimensionMismatch(f"merge matrix must be {g.s} x {g.s}")
    f, sg = G.field, G.sigma
    nG, nH = G.n, H.n

    def C(vec: Sequence[int]) -> list[int]:
        return [_bilinear(f, vec, mrows, h.gamma[k]) for k in range(nH)]

    hblock: list[list[int]] = [list(r) for r in H.rows]
    for v1, v2, t in mu_expand(g.mu):
        c1, c2 = C(v1), C(v2)
        hblock = star_rows(f, sg, hblock, c1, c2, c1, c2, t)
    rows = [list(r) + [0] * nH for r in G.rows] + [[0] * nG + r for r in hblock]
    for a in range(nG):
        for b in range(nH):
            e = _bilinear(f, g.gamma[a], mrows, h.gamma[b])
            rows[a][nG + b] = e
            rows[nG + b][a] = sg(e)
    K = SGraph(f, sg, G.vertices + H.vertices, tuple(map(tuple, rows)))
    return BoundariedSGraph(K, g.s, g.gamma + h.gamma, ())
