"""Pivot and local-equivalence orbits, minor tests, obstruction search and Tutte linking."""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Callable, Hashable, Iterator, Sequence

from .errors import FieldNotBinary, LrwError, SizeLimitExceeded, Truncated
from .field import Field, SesquiMorphism, default_sigma
from .graph import (
    SGraph,
    canonical_form,
    cutrank,
    delete,
    induced,
    local_complement,
    pivot,
)
from .width import CutOracle, LinearLayout, lrw_at_most, sandwiched_min

Vertex = Hashable
PivotSequence = list[tuple[Vertex, Vertex]]

ORBIT_LIMIT = 200_000
TUTTE_LIMIT = 20


@dataclass
class Orbit:
    """Equivalence class explored by breadth-first search, keyed by canonical form."""

    seed: SGraph
    members: dict[bytes, SGraph] = dc_field(default_factory=dict)
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def graphs(self) -> list[SGraph]:
        return list(self.members.values())


def pivot_moves(g: SGraph) -> Iterator[SGraph]:
    both = g.field.order > 2
    for x, y in g.edges():
        yield pivot(g, x, y)
        if both:
            yield pivot(g, y, x)


def lc_moves(g: SGraph) -> Iterator[SGraph]:
    for v in g.vertices:
        yield local_complement(g, v)


def _bfs(seed: SGraph, moves: Callable[[SGraph], Iterator[SGraph]], limit: int, orbit: Orbit) -> Iterator[SGraph]:
    """Yield newly discovered orbit members; sets ``orbit.truncated`` on overflow."""
    key = canonical_form(seed)
    orbit.members[key] = seed
    yield seed
    queue = deque([seed])
    while queue:
        g = queue.popleft()
        for h in moves(g):
            k = canonical_form(h)
            if k in orbit.members:
                continue
            if len(orbit.members) >= limit:
                orbit.truncated = True
                return
            orbit.members[k] = h
            yield h
            queue.append(h)


def _moves_for(relation: str, g: SGraph) -> Callable[[SGraph], Iterator[SGraph]]:
    if relation == "pivot":
        return pivot_moves
    if relation == "vertex":
        if g.field.order != 2:
            raise FieldNotBinary("vertex-minors are supported over GF(2) only")
        return lc_moves
    raise ValueError(f"unknown relation {relation!r}")


def pivot_orbit(g: SGraph, limit: int = ORBIT_LIMIT) -> Orbit:
    orbit = Orbit(g)
    for _ in _bfs(g, pivot_moves, limit, orbit):
        pass
    return orbit


def local_orbit(g: SGraph, limit: int = ORBIT_LIMIT) -> Orbit:
    orbit = Orbit(g)
    for _ in _bfs(g, _moves_for("vertex", g), limit, orbit):
        pass
    return orbit


def _minor_test(h: SGraph, g: SGraph, relation: str, limit: int) -> bool:
    if h.field != g.field or h.sigma != g.sigma or h.n > g.n:
        return False
    target = canonical_form(h)
    orbit = Orbit(g)
    for member in _bfs(g, _moves_for(relation, g), limit, orbit):
        for sub in combinations(member.vertices, h.n):
            if canonical_form(induced(member, sub)) == target:
                return True
    if orbit.truncated:
        raise Truncated(f"orbit truncated at {limit} members without finding the minor", partial=True)
    return False


def is_pivot_minor(h: SGraph, g: SGraph, limit: int = ORBIT_LIMIT) -> bool:
    """Whether ``h`` is isomorphic to an induced subgraph of a graph pivot equivalent to ``g``.

    A positive answer is always certain.  When the orbit is truncated before a
    witness appears, :class:`Truncated` is raised instead of answering ``False``.
    """
    return _minor_test(h, g, "pivot", limit)


def is_vertex_minor(h: SGraph, g: SGraph, limit: int = ORBIT_LIMIT) -> bool:
    if g.field.order != 2:
        raise FieldNotBinary("vertex-minors are supported over GF(2) only")
    return _minor_test(h, g, "vertex", limit)


# ---------------------------------------------------------------- obstruction search


def connected_classes(
    field: Field, sigma: SesquiMorphism | None, n_max: int
) -> Iterator[list[SGraph]]:
    """Connected graphs up to simple isomorphism, one list per vertex count ``1..n_max``.

    Each graph on ``n`` vertices arises from one on ``n - 1`` vertices plus a
    vertex joined by a nonzero pattern, since every connected graph has a
    vertex whose removal leaves it connected.
    """
    sigma = sigma or default_sigma(field)
    level = [SGraph(field, sigma, (0,), ((0,),))]
    yield level
    q = field.order
    for n in range(2, n_max + 1):
        seen: dict[bytes, SGraph] = {}
        for g in level:
            for pattern in product(range(q), repeat=n - 1):
                if not any(pattern):
                    continue
                rows = [list(r) + [sigma(pattern[i])] for i, r in enumerate(g.rows)]
                rows.append(list(pattern) + [0])
                h = SGraph(field, sigma, tuple(range(n)), tuple(map(tuple, rows)), validate=False)
                k = canonical_form(h)
                if k not in seen:
                    seen[k] = h
        level = list(seen.values())
        yield level


def _check_candidate(args: tuple[SGraph, str, int, int]) -> tuple[bool, list[bytes], SGraph | None]:
    """Obstruction test; returns the verdict, orbit forms and preferred representative."""
    g, relation, p, limit = args
    if lrw_at_most(g, p):
        return False, [], None
    if not all(lrw_at_most(delete(g, v), p) for v in g.vertices):
        return False, [], None
    orbit = Orbit(g)
    checked: dict[bytes, bool] = {}
    for member in _bfs(g, _moves_for(relation, g), limit, orbit):
        for v in member.vertices:
            sub = delete(member, v)
            k = canonical_form(sub)
            ok = checked.get(k)
            if ok is None:
                ok = lrw_at_most(sub, p)
                checked[k] = ok
            if not ok:
                return False, [], None
    if orbit.truncated:
        raise Truncated(f"orbit of a candidate exceeded {limit} members")
    rep = min(orbit.graphs(), key=lambda m: (len(m.edges()), canonical_form(m)))
    return True, sorted(orbit.members), rep


def obstructions(
    field: Field,
    sigma: SesquiMorphism | None,
    relation: str,
    p: int,
    n_max: int,
    threads: int = 1,
    limit: int = ORBIT_LIMIT,
    n_limit: int = 8,
) -> list[SGraph]:
    """Connected obstructions for ``lrw <= p`` with at most ``n_max`` vertices.

    Obstructions are closed under the chosen equivalence (pivot or local), so
    one representative per class is returned: the member with fewest edges,
    ties broken by canonical form.  Output is sorted by vertex count and then
    canonical form.
    """
    if n_max > n_limit:
        raise SizeLimitExceeded(f"obstruction search limited to n_max <= {n_limit}")
    sigma = sigma or default_sigma(field)
    _moves_for(relation, SGraph(field, sigma, (), ()))
    found: list[SGraph] = []
    covered: set[bytes] = set()
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for level in connected_classes(field, sigma, n_max):
            todo = [g for g in level if canonical_form(g) not in covered]
            jobs = [(g, relation, p, limit) for g in todo]
            results = list(pool.map(_check_candidate, jobs)) if pool else [_check_candidate(j) for j in jobs]
            for ok, forms, rep in results:
                if not ok or forms[0] in covered:
                    continue
                covered.update(forms)
                found.append(rep)
    finally:
        if pool:
            pool.shutdown()
    found.sort(key=lambda g: (g.n, canonical_form(g)))
    return found


# ---------------------------------------------------------------- Tutte linking


def _sandwich_ok(g: SGraph, x_set: set, y_set: set, k: int) -> bool:
    """Condition (1): every ``Z`` between ``X`` and ``V - Y`` has cut-rank at least ``k``."""
    from .graph import cutrank_mask

    oracle = CutOracle(g.n, lambda m: cutrank_mask(g, m))
    lo = g.mask(x_set)
    hi = g.mask(v for v in g.vertices if v not in y_set)
    return sandwiched_min(oracle, lo, hi) >= k


def apply_pivots(g: SGraph, seq: Sequence[tuple[Vertex, Vertex]]) -> SGraph:
    for a, b in seq:
        g = pivot(g, a, b)
    return g


def tutte_link(g: SGraph, x_set, y_set, k: int | None = None) -> PivotSequence | None:
    """Pivot sequence inside ``V - Y`` making ``X`` and ``Y`` linked with cut-rank ``k``.

    Follows the inductive proof of the linking theorem.  At each step the free
    vertex ``v`` is the smallest vertex outside ``X`` and ``Y`` with a
    neighbour in ``V - Y``, and ``w`` is its smallest such neighbour.  The
    recursion drops ``v`` if the sandwich condition survives, and otherwise
    pivots on ``vw`` first.  Returns ``None`` exactly when the sandwich
    condition fails for ``g``.
    """
    X, Y = set(x_set), set(y_set)
    for v in X | Y:
        g.pos(v)
    if X & Y:
        raise ValueError("X and Y must be disjoint")
    kx, ky = cutrank(g, X), cutrank(g, Y)
    if k is None:
        k = kx
    if kx != k or ky != k:
        raise ValueError(f"cut-ranks of X and Y must both equal {k} (got {kx}, {ky})")
    free = [v for v in g.vertices if v not in X and v not in Y]
    if len(free) > TUTTE_LIMIT:
        raise SizeLimitExceeded(f"at most {TUTTE_LIMIT} free vertices supported")
    if not _sandwich_ok(g, X, Y, k):
        return None
    return _link(g, X, Y, k)


def verify_tutte_link(g: SGraph, x_set, y_set, seq: Sequence[tuple[Vertex, Vertex]], k: int) -> bool:
    """Pairs avoid ``Y`` and ``(g pivoted along seq)[X u Y]`` has cut-rank ``k`` at ``X``."""
    X, Y = set(x_set), set(y_set)
    if any(a in Y or b in Y for a, b in seq):
        return False
    try:
        h = apply_pivots(g, seq)
    except LrwError:
        return False
    return cutrank(induced(h, [v for v in h.vertices if v in X or v in Y]), X) == k


def _link(g: SGraph, X: set, Y: set, k: int) -> PivotSequence:
    outside_y = [v for v in g.vertices if v not in Y]
    for v in g.vertices:
        if v in X or v in Y:
            continue
        nb = [w for w in outside_y if w != v and g.entry(v, w)]
        if not nb:
            continue
        w = nb[0]
        h = delete(g, v)
        if _sandwich_ok(h, X, Y, k):
            return _link(h, X, Y, k)
        h = delete(pivot(g, v, w), v)
        if not _sandwich_ok(h, X, Y, k):
            raise AssertionError("sandwich condition lost in both branches")
        return [(v, w)] + _link(h, X, Y, k)
    return []


def normalize_linked(g: SGraph, pi: LinearLayout, indices: Sequence[int]) -> SGraph:
    """Pivot-equivalent graph in which consecutive prefixes ``X_{i_j}``, ``V - X_{i_{j+1}}`` are linked.

    Pairs are handled right to left, each by one :func:`tutte_link` call on
    the current graph.  Pivots for a pair only touch ``X_{i_{j+1}}``, which
    leaves the pairs further right intact.
    """
    order = list(pi.order)
    idx = list(indices)
    if len(idx) < 2 or idx != sorted(set(idx)):
        raise ValueError("need at least two increasing indices")
    s = cutrank(g, order[: idx[0]])
    for j in range(len(idx) - 2, -1, -1):
        X = set(order[: idx[j]])
        Y = set(order[idx[j + 1] :])
        seq = tutte_link(g, X, Y, s)
        if seq is None:
            raise ValueError(f"indices {idx[j]} and {idx[j + 1]} are not linked")
        g = apply_pivots(g, seq)
    return g
