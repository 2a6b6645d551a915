"""Command line front end: ``lrwkit <subcommand> [options]``.

Exit status is 0 on success, 1 on a domain error (the error class name is
printed) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from . import graph as G
from . import io
from . import matroid as MT
from . import minors as MN
from . import profiles as PR
from . import width as W
from .errors import FormatError, LrwError
from .field import default_sigma, gf, make_sesqui

Emit = Callable[..., None]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit; we want a return code
        raise UsageError(message)


def _ids(text: str | None) -> list:
    if not text:
        return []
    return [io._vertex_id(t) for t in text.replace(",", " ").split()]


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> G.SGraph:
    g = io.parse_graph(_read(path))
    return g.base if isinstance(g, G.BoundariedSGraph) else g


def _bgraph(path: str) -> G.BoundariedSGraph:
    return io.parse_graph(_read(path), boundaried=True)


def _order(g: G.SGraph, args) -> list:
    if args.order_file:
        return io.parse_order(_read(args.order_file))
    if args.order:
        return _ids(args.order)
    raise UsageError("one of --order or --order-file is required")


# ---------------------------------------------------------------- commands


def cmd_lrw(args, out: Emit) -> int:
    g = _graph(args.graph)
    k, lay = W.lrw_exact(g)
    out(f"lrw {k}", lrw=k)
    out(io.format_layout(lay).rstrip("\n"), order=list(lay.order), cuts=list(lay.cut_ranks))
    if args.verify:
        ok = W.layout_width(g, lay.order) == k and (k == 0 or not W.lrw_at_most(g, k - 1))
        out(f"verify {'ok' if ok else 'FAILED'}", verified=ok)
        return 0 if ok else 1
    return 0


def cmd_layout_check(args, out: Emit) -> int:
    g = _graph(args.graph)
    lay = W.make_layout(g, _order(g, args))
    out(io.format_layout(lay).rstrip("\n"), width=lay.width, order=list(lay.order), cuts=list(lay.cut_ranks))
    if args.linked:
        linked = W.is_linked_layout(g, lay)
        out(f"linked {str(linked).lower()}", linked=linked)
    if args.encode:
        e = W.encode(g, lay)
        out(io.format_encoding(e).rstrip("\n"), encoding_width=e.width)
        if args.verify:
            ok = W.decode_check(g, e)
            out(f"verify {'ok' if ok else 'FAILED'}", verified=ok)
            return 0 if ok else 1
    return 0


def cmd_pivot(args, out: Emit) -> int:
    src = io.parse_graph(_read(args.graph))
    x, y = io._vertex_id(args.x), io._vertex_id(args.y)
    if isinstance(src, G.BoundariedSGraph):
        res = G.boundaried_pivot(src, x, y)
        base = res.base
    else:
        res = base = G.pivot(src, x, y)
    out(io.format_graph(res).rstrip("\n"), rows=[list(r) for r in base.rows], vertices=list(base.vertices))
    if args.verify:
        g0 = src.base if isinstance(src, G.BoundariedSGraph) else src
        ok = all(
            G.cutrank_mask(g0, m) == G.cutrank_mask(base, m) for m in range(1 << g0.n)
        ) if g0.n <= 14 else True
        out(f"verify {'ok' if ok else 'FAILED'}", verified=ok)
        return 0 if ok else 1
    return 0


def cmd_orbit(args, out: Emit) -> int:
    g = _graph(args.graph)
    orbit = MN.pivot_orbit(g, args.limit) if args.relation == "pivot" else MN.local_orbit(g, args.limit)
    out(f"orbit relation={args.relation} size={len(orbit)} truncated={str(orbit.truncated).lower()}",
        size=len(orbit), truncated=orbit.truncated)
    if args.emit:
        for key in sorted(orbit.members):
            h = orbit.members[key]
            out(io.format_graph(h).rstrip("\n"))
    return 0


def cmd_minor_test(args, out: Emit) -> int:
    g, h = _graph(args.graph), _graph(args.minor)
    fn = MN.is_pivot_minor if args.relation == "pivot" else MN.is_vertex_minor
    res = fn(h, g, args.limit)
    out(f"minor {str(res).lower()}", minor=res)
    return 0


def cmd_obstructions(args, out: Emit) -> int:
    f = gf(args.field)
    sigma = make_sesqui(f, args.sigma) if args.sigma else default_sigma(f)
    found = MN.obstructions(f, sigma, args.relation, args.p, args.nmax, threads=args.threads, limit=args.limit)
    blocks = []
    for h in found:
        text = io.format_graph(h).rstrip("\n")
        blocks.append({"n": h.n, "rows": [list(r) for r in h.rows]})
        out(text)
    out(f"obstructions {args.relation} p={args.p} n_max={args.nmax} count={len(found)}", count=len(found), graphs=blocks)
    if args.verify:
        ok = all(MN._check_candidate((h, args.relation, args.p, args.limit))[0] for h in found)
        out(f"verify {'ok' if ok else 'FAILED'}", verified=ok)
        return 0 if ok else 1
    return 0


def cmd_tutte_link(args, out: Emit) -> int:
    g = _graph(args.graph)
    X, Y = _ids(args.x), _ids(args.y)
    seq = MN.tutte_link(g, X, Y, args.k)
    if seq is None:
        out("linked none", sequence=None)
        return 0
    out("sequence " + " ".join(f"{a}:{b}" for a, b in seq), sequence=[list(p) for p in seq])
    if args.verify:
        k = G.cutrank(g, X) if args.k is None else args.k
        ok = MN.verify_tutte_link(g, X, Y, seq, k)
        out(f"verify {'ok' if ok else 'FAILED'}", verified=ok)
        return 0 if ok else 1
    return 0


def cmd_matroid_pw(args, out: Emit) -> int:
    m = io.read_matroid(args.matroid)
    k, lay = MT.pathwidth_exact(m)
    out(f"pathwidth {k}", pathwidth=k)
    out(io.format_layout(lay).rstrip("\n"), order=list(lay.order), cuts=list(lay.cut_ranks))
    if args.verify:
        base = MT.bases(m)[0] if m.size else ()
        g, _ = MT.fundamental_graph(m, base)
        ok = W.lrw(g) + 1 == k
        out(f"verify {'ok' if ok else 'FAILED'}", verified=ok)
        return 0 if ok else 1
    return 0


def cmd_fundamental(args, out: Emit) -> int:
    m = io.read_matroid(args.matroid)
    base = _ids(args.base) if args.base else list(MT.bases(m)[0])
    g, (A, B) = MT.fundamental_graph(m, base)
    out("base " + " ".join(map(str, A)), base=list(A), rest=list(B))
    out(io.format_graph(g).rstrip("\n"), rows=[list(r) for r in g.rows], vertices=list(g.vertices))
    if args.verify:
        ok = MT.same_matroid(MT.matroid_of_graph(g, A), m)
        out(f"verify {'ok' if ok else 'FAILED'}", verified=ok)
        return 0 if ok else 1
    return 0


def cmd_matroid_obstruction(args, out: Emit) -> int:
    m = io.read_matroid(args.matroid)
    direct = MT.is_pathwidth_obstruction(m, args.p)
    out(f"obstruction {str(direct).lower()}", obstruction=direct)
    if args.verify:
        via = MT.fundamental_obstruction_criterion(m, args.p)
        out(f"fundamental-graph {str(via).lower()}", fundamental=via)
        return 0 if via == direct else 1
    return 0


def _mode_kw(args) -> dict:
    if args.mode == "sampled" and args.seed is None:
        raise UsageError("--mode sampled requires --seed")
    return {"mode": args.mode, "budget": args.budget, "seed": args.seed}


def cmd_profile(args, out: Emit) -> int:
    bg = _bgraph(args.graph)
    order = _order(bg.base, args)
    e = W.encode(bg.base, order)
    prof = PR.profile_of(bg, e)
    pw = PR.p_width(prof, args.p, **_mode_kw(args))
    out(f"p-width {pw.value} t={prof.t} s={prof.s} exact={str(pw.exact).lower()}",
        t=prof.t, s=prof.s, p_width=pw.value, exact=pw.exact)
    if args.dump:
        out(io.format_profile(prof).rstrip("\n"))
    return 0


def cmd_dominance(args, out: Emit) -> int:
    a = io.parse_profile(_read(args.a))
    b = io.parse_profile(_read(args.b))
    res = PR.directly_dominates(a, b, args.p, **_mode_kw(args))
    out(f"dominated {str(res).lower()}", dominated=res)
    return 0


def cmd_bounds(args, out: Emit) -> int:
    did = False
    if args.lk is not None:
        if args.c is None:
            raise UsageError("--lk needs --c")
        out(str(W.bound_lk(args.lk, args.c)), lk=str(W.bound_lk(args.lk, args.c)))
        did = True
    if args.plength:
        p, s, q = args.plength
        v = PR.bound_plength(p, s, q)
        out(f"plength {v}", plength=str(v))
        did = True
    if args.main:
        p, q = args.main
        d = PR.bound_main_detail(p, q)
        out(f"main k={d.k} s={d.s} c={d.c} value={d.value}", main=str(d.value), k=d.k, s=d.s, c=str(d.c))
        did = True
    if not did:
        raise UsageError("give --lk/--c, --plength P S Q or --main P Q")
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--verify", action="store_true", help="re-check the emitted certificate")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--limit", type=int, default=MN.ORBIT_LIMIT, help="orbit size cap")
    common.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    common.add_argument("--budget", type=int, default=1000, help="tuples drawn in sampled mode")

    p = _Parser(prog="lrwkit", description="Linear rank-width toolkit over finite fields")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn, help_: str):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("lrw", cmd_lrw, "exact linear rank-width with a witness layout")
    sp.add_argument("--graph", required=True)

    sp = add("layout-check", cmd_layout_check, "width and cut-ranks of a given order")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--order")
    sp.add_argument("--order-file")
    sp.add_argument("--linked", action="store_true")
    sp.add_argument("--encode", action="store_true", help="also dump the linear encoding")

    sp = add("pivot", cmd_pivot, "pivot at an edge")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)

    sp = add("orbit", cmd_orbit, "pivot or local equivalence class")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--relation", choices=("pivot", "vertex"), default="pivot")
    sp.add_argument("--emit", action="store_true")

    sp = add("minor-test", cmd_minor_test, "pivot-minor or vertex-minor test")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--minor", required=True)
    sp.add_argument("--relation", choices=("pivot", "vertex"), default="pivot")

    sp = add("obstructions", cmd_obstructions, "obstructions for linear rank-width <= p")
    sp.add_argument("--field", type=int, default=2)
    sp.add_argument("--sigma", choices=("identity", "negation"))
    sp.add_argument("--relation", choices=("pivot", "vertex"), default="vertex")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--nmax", type=int, required=True)

    sp = add("tutte-link", cmd_tutte_link, "pivot sequence linking X and Y")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--k", type=int)

    sp = add("matroid-pw", cmd_matroid_pw, "exact matroid path-width")
    sp.add_argument("--matroid", required=True)

    sp = add("fundamental", cmd_fundamental, "fundamental graph for a base")
    sp.add_argument("--matroid", required=True)
    sp.add_argument("--base")

    sp = add("matroid-obstruction", cmd_matroid_obstruction, "path-width obstruction test")
    sp.add_argument("--matroid", required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("profile", cmd_profile, "profile of a layout and its p-width")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--order")
    sp.add_argument("--order-file")
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--dump", action="store_true")

    sp = add("dominance", cmd_dominance, "direct dominance between two profile files")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--p", type=int, default=1)

    sp = add("bounds", cmd_bounds, "bound formulas as exact integers")
    sp.add_argument("--lk", type=int)
    sp.add_argument("--c", type=int)
    sp.add_argument("--plength", type=int, nargs=3, metavar=("P", "S", "Q"))
    sp.add_argument("--main", type=int, nargs=2, metavar=("P", "Q"))
    return p


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    record: dict = {"format": io.FORMAT_VERSION, "command": args.command}
    lines: list[str] = []

    def out(text: str | None = None, **fields) -> None:
        if text is not None:
            lines.append(text)
        record.update(fields)

    try:
        code = args.fn(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (LrwError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.json:
        stdout.write(json.dumps(record, sort_keys=True) + "\n")
    else:
        for line in lines:
            stdout.write(line + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
