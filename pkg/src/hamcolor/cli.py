"""Command-line interface.

Exit codes: 0 success (and valid colorings), 1 invalid coloring from
``verify``, 2 input or parameter errors, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .coloring import (
    coloring_from_ordering,
    greedy_ordering,
    sym_ordering,
    union_coloring,
    validate_coloring,
)
from .detour import detour_profile
from .errors import BudgetExceededError, HamcolorError, NegativeGapError, NotSymmetricError
from .exact import SearchBudget, exact_hc, greedy_min_coloring_for_ordering
from .families import (
    SymmetricSpec,
    gen_path,
    gen_random_block_graph,
    gen_star,
    gen_symmetric,
    gen_union,
    symmetric_coordinates,
)
from .formulas import (
    lower_bound,
    path_hc,
    star_hc,
    sym_hc,
    sym_order_count,
    sym_total_level,
    union_hc,
)
from .graphs import BlockGraph, from_json, to_dot, to_json


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str) -> BlockGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def _load_colors(path: str) -> list[int]:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "colors" not in doc:
        raise HamcolorError('coloring JSON must be an object with a "colors" list')
    return list(doc["colors"])


def _parse_range(text: str) -> list[int]:
    """Accept "3", "3,4,5" or "3-5"."""
    values: list[int] = []
    for part in text.split(","):
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return sorted(set(values))


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "sym":
        g, _ = gen_symmetric(SymmetricSpec(args.block_size, args.cut_degree, args.diameter))
    elif args.family == "union":
        g = gen_union(args.n, args.k)
    elif args.family == "star":
        g = gen_star(args.n)
    elif args.family == "path":
        g = gen_path(args.n)
    else:
        g = gen_random_block_graph(
            args.seed, args.max_p, args.max_block_size, args.max_blocks_per_cut
        )
    _write(args.output, to_json(g))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    profile = detour_profile(g)
    doc = {
        "p": g.p,
        "omega": profile.omega,
        "xi": profile.xi,
        "center": list(profile.center),
        "levels": list(profile.level),
        "total_level": profile.total_level,
        "lower_bound": lower_bound(g, profile),
    }
    _write(args.output, json.dumps(doc, sort_keys=True) + "\n")
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    if args.family == "sym":
        spec = SymmetricSpec(args.block_size, args.cut_degree, args.diameter)
        value = sym_hc(spec) if args.diameter >= 3 else union_hc(args.block_size, args.cut_degree)
        echo = f"sym block_size={args.block_size} cut_degree={args.cut_degree} diameter={args.diameter}"
    elif args.family == "star":
        value = star_hc(args.n)
        echo = f"star leaves={args.n}"
    elif args.family == "path":
        value = path_hc(args.n)
        echo = f"path order={args.n}"
    else:
        value = union_hc(args.n, args.k)
        echo = f"union n={args.n} k={args.k}"
    print(echo, file=sys.stderr)
    print(value)
    return 0


def _union_colors_for(g: BlockGraph, coords) -> list[int]:
    """Map the canonical union coloring onto an arbitrary union labeling."""
    m = coords.spec.block_size
    kappa = coords.spec.cut_degree
    canonical = union_coloring(m, kappa).colors
    hub = coords.roots[0]
    colors = [0] * g.p
    colors[hub] = canonical[0]
    for bi, block_id in enumerate(sorted(g.vertex_blocks[hub])):
        members = [v for v in g.blocks[block_id] if v != hub]
        for i, v in enumerate(members, start=1):
            colors[v] = canonical[bi * (m - 1) + i]
    return colors


def _cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    profile = detour_profile(g)
    bound = lower_bound(g, profile)
    method = "greedy"
    ordering: list[int] | None = None
    colors: list[int]

    coords = None
    try:
        coords = symmetric_coordinates(g)
    except NotSymmetricError:
        coords = None

    if coords is not None and coords.spec.diameter >= 3:
        ordering = sym_ordering(g, coords)
        colors = list(coloring_from_ordering(g, profile, ordering).colors)
        method = "symmetric"
    elif coords is not None:
        colors = _union_colors_for(g, coords)
        method = "union"
    else:
        ordering = greedy_ordering(g, profile)
        candidate: list[int] | None = None
        try:
            recurrence = list(coloring_from_ordering(g, profile, ordering).colors)
            if not validate_coloring(g, recurrence):
                candidate = recurrence
        except NegativeGapError:
            candidate = None
        if candidate is None:
            candidate = list(greedy_min_coloring_for_ordering(g, ordering).colors)
        colors = candidate

    span = max(colors) - min(colors)
    if span == bound:
        status = "optimal (matches lower bound)"
    elif method == "union":
        status = "optimal (family closed form)"
    else:
        status = "upper bound (uncertified)"
    print(f"method={method} span={span} lower_bound={bound} status={status}")
    _write(args.output, json.dumps({"colors": colors}) + "\n")
    if args.emit_ordering and ordering is not None:
        _write(args.emit_ordering, json.dumps({"ordering": ordering}) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    colors = _load_colors(args.coloring)
    violations = validate_coloring(g, colors)
    span = max(colors) - min(colors)
    if not violations:
        print(f"valid span={span} pairs_checked={g.p * (g.p - 1) // 2}")
        return 0
    print(f"invalid span={span} violations={len(violations)}")
    for u, v, deficit in violations[:20]:
        print(f"  pair ({u}, {v}) short by {deficit}")
    if len(violations) > 20:
        print(f"  ... and {len(violations) - 20} more")
    return 1


def _cmd_exact(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    budget = SearchBudget(max_p=args.max_p, time_limit=args.time_limit)
    value, witness = exact_hc(g, budget)
    profile = detour_profile(g)
    bound = lower_bound(g, profile)
    print(f"exact_hc={value} lower_bound={bound} gap={value - bound}")
    if witness is not None:
        print(json.dumps({"colors": list(witness.colors)}))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    header = "m,kappa,d,p,omega,xi,total_level,lower_bound,closed_form,algorithm_span,valid"
    rows = [header]
    for m in _parse_range(args.block_size):
        for kappa in _parse_range(args.cut_degree):
            for d in _parse_range(args.diameter):
                try:
                    spec = SymmetricSpec(m, kappa, d)
                    if spec.k * spec.n < 2 or d < 3:
                        continue
                    if sym_order_count(spec) > args.max_p:
                        continue
                    g, coords = gen_symmetric(spec)
                except HamcolorError:
                    continue
                profile = detour_profile(g)
                bound = lower_bound(g, profile)
                closed = sym_hc(spec)
                ordering = sym_ordering(g, coords)
                coloring = coloring_from_ordering(g, profile, ordering)
                ok = not validate_coloring(g, list(coloring.colors))
                rows.append(
                    f"{m},{kappa},{d},{g.p},{profile.omega},{profile.xi},"
                    f"{sym_total_level(spec)},{bound},{closed},{coloring.span},{str(ok).lower()}"
                )
    _write(args.output, "\n".join(rows) + "\n")
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    colors = _load_colors(args.coloring) if args.coloring else None
    if args.format == "dot":
        _write(args.output, to_dot(g, colors, clusters=args.clusters))
    elif args.format == "json":
        _write(args.output, to_json(g))
    else:
        lines = ["u,v,block"]
        for bi, b in enumerate(g.blocks):
            for i, u in enumerate(b):
                for v in b[i + 1 :]:
                    lines.append(f"{u},{v},{bi}")
        _write(args.output, "\n".join(lines) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamcolor",
        description="Hamiltonian colorings of block graphs: generate, bound, color, verify, solve.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph and write its JSON")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_sym = gen_sub.add_parser("sym", help="symmetric block graph")
    g_sym.add_argument("--block-size", type=int, required=True)
    g_sym.add_argument("--cut-degree", type=int, required=True)
    g_sym.add_argument("--diameter", type=int, required=True)
    g_union = gen_sub.add_parser("union", help="one-point union of k cliques")
    g_union.add_argument("-n", type=int, required=True, help="clique size")
    g_union.add_argument("-k", type=int, required=True, help="number of cliques")
    g_star = gen_sub.add_parser("star", help="star graph")
    g_star.add_argument("-n", type=int, required=True, help="number of leaves")
    g_path = gen_sub.add_parser("path", help="path graph")
    g_path.add_argument("-n", type=int, required=True, help="number of vertices")
    g_rand = gen_sub.add_parser("random", help="seeded random block graph")
    g_rand.add_argument("--seed", type=int, required=True)
    g_rand.add_argument("--max-p", type=int, required=True)
    g_rand.add_argument("--max-block-size", type=int, default=5)
    g_rand.add_argument("--max-blocks-per-cut", type=int, default=3)
    for sp in (g_sym, g_union, g_star, g_path, g_rand):
        sp.add_argument("-o", "--output", default=None)

    p_bound = sub.add_parser("bound", help="detour profile and lower bound as JSON")
    p_bound.add_argument("graph")
    p_bound.add_argument("-o", "--output", default=None)

    p_formula = sub.add_parser("formula", help="closed-form value for a family")
    f_sub = p_formula.add_subparsers(dest="family", required=True)
    f_sym = f_sub.add_parser("sym")
    f_sym.add_argument("--block-size", type=int, required=True)
    f_sym.add_argument("--cut-degree", type=int, required=True)
    f_sym.add_argument("--diameter", type=int, required=True)
    f_star = f_sub.add_parser("star")
    f_star.add_argument("-n", type=int, required=True, help="number of leaves")
    f_path = f_sub.add_parser("path")
    f_path.add_argument("-n", type=int, required=True, help="number of vertices")
    f_union = f_sub.add_parser("union")
    f_union.add_argument("-n", type=int, required=True)
    f_union.add_argument("-k", type=int, required=True)

    p_color = sub.add_parser("color", help="color a graph (symmetric construction or greedy)")
    p_color.add_argument("graph")
    p_color.add_argument("-o", "--output", default=None)
    p_color.add_argument("--emit-ordering", default=None, metavar="FILE")

    p_verify = sub.add_parser("verify", help="check a coloring; exit 1 with violations if invalid")
    p_verify.add_argument("graph")
    p_verify.add_argument("coloring")

    p_exact = sub.add_parser("exact", help="exact hamiltonian chromatic number (small graphs)")
    p_exact.add_argument("graph")
    p_exact.add_argument("--max-p", type=int, default=10)
    p_exact.add_argument("--time-limit", type=float, default=None)

    p_table = sub.add_parser("table", help="CSV over a symmetric-family parameter grid")
    p_table.add_argument("--family", choices=["sym"], default="sym")
    p_table.add_argument("--block-size", default="3-5")
    p_table.add_argument("--cut-degree", default="2-4")
    p_table.add_argument("--diameter", default="3-7")
    p_table.add_argument("--max-p", type=int, default=5000)
    p_table.add_argument("-o", "--output", default=None)

    p_export = sub.add_parser("export", help="export a graph as dot, json or csv edges")
    p_export.add_argument("graph")
    p_export.add_argument("--format", choices=["dot", "json", "csv"], default="dot")
    p_export.add_argument("--coloring", default=None)
    p_export.add_argument("--clusters", action="store_true")
    p_export.add_argument("-o", "--output", default=None)

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "bound": _cmd_bound,
    "formula": _cmd_formula,
    "color": _cmd_color,
    "verify": _cmd_verify,
    "exact": _cmd_exact,
    "table": _cmd_table,
    "export": _cmd_export,
}


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (HamcolorError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
