"""Line-oriented text formats for fields, graphs, matroids, layouts, encodings and profiles.

Blank lines and anything after ``#`` are ignored.  A graph file looks like::

    field 2 1 0 1
    sigma identity
    n 3
    names a b c
    0 1 0
    1 0 1
    0 1 0
    s 1
    gamma
    1
    0
    1
    mu 1
    1 1 1 1

The ``field`` line may be omitted (GF(2)) and so may ``sigma`` (identity).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .errors import FormatError
from .field import Field, SesquiMorphism, default_sigma, gf, make_field, make_sesqui
from .graph import BoundariedSGraph, SGraph, make_boundary, mu_expand
from .matroid import RepMatroid, make_matroid
from .width import LinearEncoding, LinearLayout

FORMAT_VERSION = "lrwkit/1"


class _Lines:
    def __init__(self, text: str) -> None:
        self.items: list[tuple[int, list[str]]] = []
        for no, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                self.items.append((no, line.split()))
        self.k = 0

    def peek(self) -> list[str] | None:
        return self.items[self.k][1] if self.k < len(self.items) else None

    def next(self, what: str) -> tuple[int, list[str]]:
        if self.k >= len(self.items):
            raise FormatError(f"unexpected end of input, expected {what}")
        item = self.items[self.k]
        self.k += 1
        return item

    def keyword(self, word: str) -> list[str]:
        no, toks = self.next(f"'{word}' line")
        if toks[0] != word:
            raise FormatError(f"line {no}: expected '{word}', found '{toks[0]}'")
        return toks[1:]

    def ints(self, what: str, count: int | None = None) -> list[int]:
        no, toks = self.next(what)
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise FormatError(f"line {no}: expected integers for {what}") from None
        if count is not None and len(vals) != count:
            raise FormatError(f"line {no}: expected {count} integers for {what}, got {len(vals)}")
        return vals

    def done(self) -> bool:
        return self.k >= len(self.items)


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer for {what}, got {tok!r}") from None


def _vertex_id(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


# ---------------------------------------------------------------- field / sigma


def parse_field_line(args: Sequence[str]) -> Field:
    if len(args) < 2:
        raise FormatError("field line needs: field <p> <k> [poly coefficients]")
    p, k = _int(args[0], "characteristic"), _int(args[1], "degree")
    poly = [_int(a, "polynomial coefficient") for a in args[2:]] or None
    return make_field(p, k, poly if k > 1 else None)


def parse_sigma_line(f: Field, args: Sequence[str]) -> SesquiMorphism:
    if not args:
        raise FormatError("sigma line needs a kind")
    kind = args[0]
    if kind in ("identity", "negation"):
        return make_sesqui(f, kind)
    if kind == "frobenius":
        j = _int(args[1], "frobenius power") if len(args) > 1 else 1
        return make_sesqui(f, "frobenius", j)
    if kind == "table":
        return make_sesqui(f, [_int(a, "sigma table entry") for a in args[1:]])
    raise FormatError(f"unknown sigma kind {kind!r}")


def _header(lines: _Lines) -> tuple[Field, SesquiMorphism]:
    f = gf(2)
    nxt = lines.peek()
    if nxt and nxt[0] == "field":
        f = parse_field_line(lines.keyword("field"))
        nxt = lines.peek()
    sigma = default_sigma(f)
    if nxt and nxt[0] == "sigma":
        sigma = parse_sigma_line(f, lines.keyword("sigma"))
    return f, sigma


def format_header(f: Field, sigma: SesquiMorphism | None = None) -> list[str]:
    out = [f.header()]
    if sigma is not None:
        out.append(sigma.line())
    return out


# ---------------------------------------------------------------- graphs


def _matrix_lines(rows: Iterable[Sequence[int]]) -> list[str]:
    return [" ".join(map(str, r)) for r in rows]


def _parse_graph(lines: _Lines) -> BoundariedSGraph | SGraph:
    f, sigma = _header(lines)
    n = _int((lines.keyword("n") or ["?"])[0], "vertex count")
    names: list = list(range(n))
    if lines.peek() and lines.peek()[0] == "names":
        toks = lines.keyword("names")
        if len(toks) != n:
            raise FormatError(f"names line lists {len(toks)} ids for {n} vertices")
        names = [_vertex_id(t) for t in toks]
    rows = [tuple(lines.ints(f"adjacency row {i + 1}", n)) for i in range(n)]
    g = SGraph(f, sigma, tuple(names), tuple(rows))
    if lines.peek() is None or lines.peek()[0] != "s":
        return g
    s = _int(lines.keyword("s")[0], "label dimension")
    lines.keyword("gamma")
    gamma = [tuple(lines.ints(f"label row {i + 1}", s)) if s else () for i in range(n)]
    triples = []
    if lines.peek() and lines.peek()[0] == "mu":
        k = _int(lines.keyword("mu")[0], "boundary size")
        for _ in range(k):
            vals = lines.ints("boundary triple", 2 * s + 2)
            v1, v2, t, mult = tuple(vals[:s]), tuple(vals[s : 2 * s]), vals[2 * s], vals[2 * s + 1]
            triples.extend([(v1, v2, t)] * mult)
    return BoundariedSGraph(g, s, tuple(gamma), make_boundary(triples, f.char))


def parse_graph(text: str, boundaried: bool = False) -> SGraph | BoundariedSGraph:
    """Parse a graph file; with ``boundaried`` a plain graph gets ``s = 0`` labels."""
    lines = _Lines(text)
    g = _parse_graph(lines)
    if not lines.done():
        raise FormatError(f"trailing content at line {lines.items[lines.k][0]}")
    if boundaried and isinstance(g, SGraph):
        return BoundariedSGraph.unlabelled(g)
    return g


def parse_graphs(text: str) -> list[SGraph | BoundariedSGraph]:
    """Several graph blocks in one file, as written for obstruction lists."""
    lines = _Lines(text)
    out = []
    while not lines.done():
        if lines.peek()[0] in ("obstructions", "verify"):
            lines.next("manifest")
            continue
        out.append(_parse_graph(lines))
    return out


def read_graph(path: str | Path, boundaried: bool = False):
    return parse_graph(Path(path).read_text(), boundaried)


def format_graph(g: SGraph | BoundariedSGraph) -> str:
    bg = g if isinstance(g, BoundariedSGraph) else None
    base = bg.base if bg else g
    out = format_header(base.field, base.sigma)
    out.append(f"n {base.n}")
    if tuple(base.vertices) != tuple(range(base.n)):
        out.append("names " + " ".join(map(str, base.vertices)))
    out += _matrix_lines(base.rows)
    if bg is not None:
        out.append(f"s {bg.s}")
        out.append("gamma")
        if bg.s:
            out += _matrix_lines(bg.gamma)
        out.append(f"mu {len(bg.mu)}")
        for (v1, v2, t), mult in bg.mu:
            out.append(" ".join(map(str, (*v1, *v2, t, mult))))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- matroids


def parse_matroid(text: str) -> RepMatroid:
    lines = _Lines(text)
    f = gf(2)
    if lines.peek() and lines.peek()[0] == "field":
        f = parse_field_line(lines.keyword("field"))
    names = [_vertex_id(t) for t in lines.keyword("elements")]
    rows = []
    while not lines.done():
        rows.append(lines.ints("representation row", len(names)))
    return make_matroid(f, rows, names)


def read_matroid(path: str | Path) -> RepMatroid:
    return parse_matroid(Path(path).read_text())


def format_matroid(m: RepMatroid) -> str:
    out = [m.field.header(), "elements " + " ".join(map(str, m.ground))]
    out += _matrix_lines(m.rows)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- layouts


def format_layout(pi: LinearLayout) -> str:
    return "\n".join(
        [f"width {pi.width}", "order " + " ".join(map(str, pi.order)), "cuts " + " ".join(map(str, pi.cut_ranks))]
    ) + "\n"


def parse_order(text: str) -> list:
    """Vertex order from a layout file (``order`` line) or a bare id list."""
    lines = _Lines(text)
    while not lines.done():
        no, toks = lines.next("order")
        if toks[0] == "order":
            return [_vertex_id(t) for t in toks[1:]]
        if toks[0] in ("width", "cuts"):
            continue
        return [_vertex_id(t) for t in toks]
    raise FormatError("no order line found")


def format_encoding(e: LinearEncoding) -> str:
    out = [f"encoding t={e.t} width={e.width}"]
    out.append("positions " + " ".join(f"{v}:{p}" for v, p in sorted(e.L.items(), key=lambda kv: kv[1])))
    for i in range(1, e.t + 1):
        out.append(f"position {i}")
        for name, m in (("N", e.N[i]), ("P", e.P[i]), ("M", e.M[i])):
            width = len(m[0]) if m else 0
            out.append(f"{name} {len(m)} {width}")
            if width:
                out += _matrix_lines(m)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- profiles


def format_profile(e) -> str:
    out = format_header(e.field, e.sigma)
    out.append(f"profile t={e.t} s={e.s}")
    for i in range(1, e.t + 1):
        out.append(f"index {i}")
        for name, m in zip(("Y1", "Y2", "Z1", "Z2", "M"), e.block(i)):
            width = len(m[0]) if m else 0
            out.append(f"{name} {len(m)} {width}")
            if width:
                out += _matrix_lines(m)
    out.append(f"mu {len(e.mu)}")
    for (v1, v2, t), mult in e.mu:
        out.append(" ".join(map(str, (*v1, *v2, t, mult))))
    return "\n".join(out) + "\n"


def _kv(tok: str, key: str) -> int:
    if not tok.startswith(key + "="):
        raise FormatError(f"expected {key}=<int>, found {tok!r}")
    return _int(tok[len(key) + 1 :], key)


def parse_profile(text: str):
    from .profiles import make_profile

    lines = _Lines(text)
    if lines.peek() and lines.peek()[0] == "p-width":  # summary line written by the CLI
        lines.next("summary")
    f, sigma = _header(lines)
    toks = lines.keyword("profile")
    if len(toks) != 2:
        raise FormatError("profile line needs t=<t> s=<s>")
    t, s = _kv(toks[0], "t"), _kv(toks[1], "s")
    blocks = []
    for i in range(1, t + 1):
        got = _int(lines.keyword("index")[0], "index")
        if got != i:
            raise FormatError(f"expected index {i}, found {got}")
        mats = []
        for name in ("Y1", "Y2", "Z1", "Z2", "M"):
            dims = lines.keyword(name)
            if len(dims) != 2:
                raise FormatError(f"{name} header needs row and column counts")
            r, c = _int(dims[0], "rows"), _int(dims[1], "columns")
            mats.append([lines.ints(f"{name} row", c) for _ in range(r)] if c else [() for _ in range(r)])
        blocks.append(tuple(mats))
    triples = []
    if lines.peek() and lines.peek()[0] == "mu":
        k = _int(lines.keyword("mu")[0], "boundary size")
        for _ in range(k):
            vals = lines.ints("boundary triple", 2 * s + 2)
            triples.extend([(tuple(vals[:s]), tuple(vals[s : 2 * s]), vals[2 * s])] * vals[2 * s + 1])
    if not lines.done():
        raise FormatError(f"trailing content at line {lines.items[lines.k][0]}")
    return make_profile(f, sigma, s, blocks, make_boundary(triples, f.char))


def format_boundary(mu) -> list[str]:
    return [" ".join(map(str, (*v1, *v2, t))) for v1, v2, t in mu_expand(mu)]
