"""``mptkit`` command line.

Exit codes: 0 success, 1 valid input with a negative verdict, 2 bad input.
Artifacts and verdicts go to stdout (or ``--out``); diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .certificates import (
    MPT,
    common_neighborhood_certificates,
    is_interval_graph,
    non_mpt_family,
    recognize,
)
from .errors import MptError
from .geometry import (
    contact_lsystem_from_outerplanar,
    cyclic_segments_from_rep,
    random_maximal_outerplanar,
    segment_intersection_graph,
    verify_contact,
)
from .graph import family, parse_family_id
from .optimization import (
    circular_arc_adjacency,
    clique_cover_2approx,
    coloring_hardness_reduction,
    coloring_report,
    max_weight_independent_set,
    random_circular_arcs,
)
from .oracles import brute_force_coloring
from .orders import (
    order_from_rep,
    rep_from_order,
    two_interval_decomposition,
    verify_i_order,
    verify_mpt_order,
)
from .representations import (
    DOWN,
    LEFT,
    Ray,
    RaySystem,
    interval_adjacency,
    interval_to_anchored_lsystem,
    is_canonical,
    lsystem_adjacency,
    lsystem_to_rep,
    mpt_adjacency,
    net_rep,
    normalize,
    q,
    random_interval_rep,
    random_mpt_rep,
    random_ray_system,
    ray_adjacency,
    rays_to_lsystem,
    rep_to_lsystem,
)
from .svg import render_svg

RANDOM_FAMILIES = (
    "random-mpt",
    "random-interval",
    "random-rays",
    "random-circular-arc",
    "random-maximal-outerplanar",
)


class Done(Exception):
    def __init__(self, code: int):
        self.code = code


def emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def write_file(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def load_any(path: str, default: str):
    """Load a file using its ``# kind`` comment, falling back to ``default``."""
    doc = io.read_document(path)
    kind = doc.kind or default
    if kind not in io.LOADERS:
        raise MptError(f"{doc.source}: unsupported kind {kind!r} here")
    return kind, io.LOADERS[kind](doc)


def load_graph(path: str):
    """A graph file, or any representation file turned into its graph."""
    kind, obj = load_any(path, "graph")
    return graph_of(kind, obj)


def canonical(rep):
    return rep if is_canonical(rep) else normalize(rep)


# --- gen ---------------------------------------------------------------------

def _family_rep(name: str, params: tuple):
    """Representation for the named MPT families, or ``None``."""
    if name == "net":
        return net_rep()
    if name in ("cycle", "path", "complete", "edgeless"):
        g = family(name, *params)
        return rep_from_order(g, range(g.n))
    if name == "complete-bipartite":
        a, b = params
        # every down-ray meets every left-ray and parallel rays stay apart
        rays = [Ray(DOWN, i, 0) for i in range(a)] + [Ray(LEFT, a, -1 - j) for j in range(b)]
        return normalize(lsystem_to_rep(rays_to_lsystem(RaySystem(tuple(rays)))))
    return None


def cmd_gen(args) -> int:
    fam = args.family
    if fam in RANDOM_FAMILIES:
        if args.seed is None:
            raise MptError(f"--seed is required for {fam}")
        if args.n is None:
            raise MptError(f"--n is required for {fam}")
        note = (f"{fam} n={args.n} seed={args.seed}",)
        if fam == "random-mpt":
            rep = random_mpt_rep(args.n, args.seed)
            emit(args, io.dump_graph(mpt_adjacency(rep), note) if args.as_ == "graph" else io.dump_rep(rep, note))
        elif fam == "random-interval":
            iv = random_interval_rep(args.n, args.seed)
            emit(args, io.dump_graph(interval_adjacency(iv), note) if args.as_ == "graph" else io.dump_interval(iv, note))
        elif fam == "random-rays":
            rs = random_ray_system(args.n, args.seed)
            emit(args, io.dump_graph(ray_adjacency(rs), note) if args.as_ == "graph" else io.dump_rays(rs, note))
        elif fam == "random-circular-arc":
            ca = random_circular_arcs(args.n, args.seed)
            emit(args, io.dump_graph(circular_arc_adjacency(ca), note) if args.as_ == "graph" else io.dump_arcs(ca, note))
        else:
            emit(args, io.dump_graph(random_maximal_outerplanar(args.n, args.seed), note))
        return 0

    if "-of(" in fam or fam in ("k222",) or fam.startswith("complement-cycle"):
        g = non_mpt_family(fam) if ("-of(" in fam or fam == "k222") else family(fam, *_n(args))
        emit(args, io.dump_graph(g, (f"family {fam}",)))
        return 0

    name, params = parse_family_id(fam)
    params = params + _n(args)
    g = family(name, *params)
    label = f"family {name}" + (f"({','.join(map(str, params))})" if params else "")
    rep = None if args.as_ == "graph" else _family_rep(name, params)
    if rep is None:
        emit(args, io.dump_graph(g, (label,)))
    else:
        emit(args, io.dump_rep(rep, (label,)))
    return 0


def _n(args) -> tuple:
    return () if args.n is None else (args.n,)


# --- conversions -----------------------------------------------------------

def graph_of(kind: str, obj):
    if kind == "graph":
        return obj
    if kind == "rep":
        return mpt_adjacency(obj)
    if kind == "lsystem":
        return lsystem_adjacency(obj)
    if kind == "contact":
        return lsystem_adjacency(obj.lsystem())
    if kind == "interval":
        return interval_adjacency(obj)
    if kind == "rays":
        return ray_adjacency(obj)
    if kind == "arcs":
        return circular_arc_adjacency(obj)
    if kind == "segments":
        return segment_intersection_graph(obj)
    raise MptError(f"cannot build a graph from a {kind!r} file")


def cmd_adjacency(args) -> int:
    kind, obj = load_any(args.rep, "rep")
    emit(args, io.dump_graph(graph_of(kind, obj)))
    return 0


def cmd_convert(args) -> int:
    src, dst = args.from_, args.to
    if src == "order":
        if not args.graph:
            raise MptError("--from order needs --graph FILE (the order file is --input)")
        g = load_graph(args.graph)
        rep = rep_from_order(g, io.load(args.input, "order"))
    else:
        rep = None
        obj = io.load(args.input, src)
        if src == "rep":
            rep = obj
        elif src == "lsystem":
            rep = lsystem_to_rep(obj)
        elif src == "interval":
            rep = lsystem_to_rep(interval_to_anchored_lsystem(obj))
        elif src == "rays":
            rep = lsystem_to_rep(rays_to_lsystem(obj))
        elif src == "contact":
            rep = lsystem_to_rep(obj.lsystem())
    if args.normalize:
        rep = normalize(rep)
    if dst == "rep":
        emit(args, io.dump_rep(rep))
    elif dst == "lsystem":
        emit(args, io.dump_lsystem(rep_to_lsystem(rep)))
    elif dst == "order":
        emit(args, io.dump_order(order_from_rep(rep)))
    elif dst == "graph":
        emit(args, io.dump_graph(mpt_adjacency(rep)))
    return 0


# --- solve -------------------------------------------------------------------

def cmd_solve(args) -> int:
    rep = canonical(io.load(args.rep, "rep"))
    if args.problem == "wis":
        weights = None
        if args.weights:
            weights = io.load_weights(io.read_document(args.weights), len(rep))
        res = max_weight_independent_set(rep, weights)
        emit(args, f"value {io.fmt(res.value)}\nset {' '.join(map(str, res.set))}\n")
    elif args.problem == "clique-cover":
        cover = clique_cover_2approx(rep)
        lines = [f"size {len(cover)}"] + ["clique " + " ".join(map(str, c)) for c in cover.cliques]
        emit(args, "\n".join(lines) + "\n")
    else:
        if args.exact:
            coloring = brute_force_coloring(mpt_adjacency(rep))
            lines = [f"colors {coloring.k}", "exact yes"]
        else:
            report = coloring_report(rep)
            coloring = report.coloring
            lines = [f"colors {coloring.k}"]
            if report.clique_lower_bound is not None:
                lines.append(f"lower-bound {report.clique_lower_bound}")
        lines.append("coloring " + " ".join(map(str, coloring.color)))
        emit(args, "\n".join(lines) + "\n")
    return 0


# --- check -------------------------------------------------------------------

def _violation_text(v) -> str:
    return f"VIOLATION {v.kind} ({','.join(map(str, v.witness))}) positions ({','.join(map(str, v.positions))})"


def cmd_check(args) -> int:
    what = args.what
    if what == "order":
        g = load_graph(args.graph)
        order = io.load(args.order, "order")
        verify = verify_i_order if args.i_order else verify_mpt_order
        v = verify(g, order)
        kind = "i-order" if args.i_order else "mpt-order"
        emit(args, f"OK {kind}\n" if v is None else _violation_text(v) + "\n")
        return 0 if v is None else 1
    if what == "interval":
        verdict = is_interval_graph(load_graph(args.graph))
        if verdict.is_interval:
            emit(args, "INTERVAL\norder " + " ".join(map(str, verdict.i_order)) + "\n")
            return 0
        emit(args, f"NOT-INTERVAL {verdict.witness_kind} witness={','.join(map(str, verdict.witness))}\n")
        return 1
    if what == "mpt-necessary":
        certs = common_neighborhood_certificates(load_graph(args.graph))
        if not certs:
            emit(args, "PASS no common-neighborhood certificate\n")
            return 0
        emit(args, "".join(c.line() + "\n" for c in certs))
        return 1
    check = verify_contact(io.load(args.lsystem, "lsystem"))
    shape = "equilateral" if check.equilateral else "not-equilateral"
    if check.ok:
        emit(args, f"OK contact {shape}\n")
        return 0
    u, v = check.violation
    emit(args, f"VIOLATION crossing {u} {v} {shape}\n")
    return 1


def cmd_recognize(args) -> int:
    g = load_graph(args.graph)
    result = recognize(g, args.max_n)
    lines = [result.verdict] + [c.line() for c in result.certificates]
    emit(args, "\n".join(lines) + "\n")
    return 0 if result.verdict == MPT else 1


def cmd_decompose(args) -> int:
    rep = io.load(args.rep, "rep")
    h1, h2 = two_interval_decomposition(rep)
    write_file(f"{args.out_prefix}.h1.txt", io.dump_interval(h1, ("horizontal legs [p, e]",)))
    write_file(f"{args.out_prefix}.h2.txt", io.dump_interval(h2, ("vertical legs [s, p]",)))
    return 0


def cmd_segments(args) -> int:
    rep = canonical(io.load(args.rep, "rep"))
    emit(args, io.dump_segments(cyclic_segments_from_rep(rep)))
    return 0


def cmd_contact(args) -> int:
    g = load_graph(args.graph)
    tri = io.load(args.triangulation, "graph") if args.triangulation else None
    emit(args, io.dump_contact(contact_lsystem_from_outerplanar(g, tri)))
    return 0


def cmd_reduce(args) -> int:
    ca = io.load(args.arcs, "arcs")
    out = coloring_hardness_reduction(ca, args.k, None if args.cut is None else q(args.cut))
    clique = " ".join(map(str, out.clique_vertices))
    notes = (f"case {out.case}", f"crossing {out.crossing}", f"clique {clique}")
    write_file(f"{args.out_prefix}.graph.txt", io.dump_graph(out.g_prime, notes))
    write_file(f"{args.out_prefix}.rep.txt", io.dump_rep(out.rep, notes))
    write_file(f"{args.out_prefix}.map.txt", io.dump_mapping(out.split_map, notes))
    emit(args, f"case {out.case}\ncrossing {out.crossing}\nvertices {out.g_prime.n}\nclique {clique}\n")
    return 0


def cmd_render(args) -> int:
    kind, obj = load_any(args.input, args.kind or "rep")
    if kind == "segments":
        from .geometry import CyclicSegmentSystem

        obj = CyclicSegmentSystem(tuple(obj), ())
    elif kind == "interval":
        obj = interval_to_anchored_lsystem(obj)
    elif kind == "rays":
        obj = rays_to_lsystem(obj)
    elif kind not in ("rep", "lsystem", "contact"):
        raise MptError(f"cannot render a {kind!r} file")
    svg = render_svg(obj, scale=args.scale, labels=args.labels)
    write_file(args.out, svg)
    return 0


# --- parser -----------------------------------------------------------------

class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise Done(2)


def build_parser() -> argparse.ArgumentParser:
    p = Parser(prog="mptkit", description="Max point-tolerance graph toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    def out(sp):
        sp.add_argument("--out", help="write the artifact here instead of stdout")

    sp = sub.add_parser("gen", help="generate an instance")
    sp.add_argument("--family", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--as", dest="as_", choices=("native", "graph"), default="native")
    out(sp)
    sp.set_defaults(run=cmd_gen)

    sp = sub.add_parser("adjacency", help="graph of a representation")
    sp.add_argument("--rep", required=True, help="representation file, '-' for stdin")
    out(sp)
    sp.set_defaults(run=cmd_adjacency)

    sp = sub.add_parser("convert", help="convert between representations")
    sp.add_argument("--from", dest="from_", required=True,
                    choices=("rep", "lsystem", "interval", "rays", "contact", "order"))
    sp.add_argument("--to", required=True, choices=("rep", "lsystem", "order", "graph"))
    sp.add_argument("--input", required=True)
    sp.add_argument("--graph", help="graph file, needed with --from order")
    sp.add_argument("--normalize", action="store_true", help="emit the canonical representation")
    out(sp)
    sp.set_defaults(run=cmd_convert)

    sp = sub.add_parser("solve", help="optimisation on a representation")
    sp.add_argument("problem", choices=("wis", "clique-cover", "color"))
    sp.add_argument("--rep", required=True)
    sp.add_argument("--weights")
    sp.add_argument("--exact", action="store_true", help="exact coloring (small n only)")
    out(sp)
    sp.set_defaults(run=cmd_solve)

    sp = sub.add_parser("check", help="verify a property")
    sp.add_argument("what", choices=("order", "interval", "mpt-necessary", "contact"))
    sp.add_argument("--graph")
    sp.add_argument("--order")
    sp.add_argument("--i-order", action="store_true", help="check an I-order instead")
    sp.add_argument("--lsystem")
    out(sp)
    sp.set_defaults(run=cmd_check)

    sp = sub.add_parser("recognize", help="MPT / NOT-MPT / UNKNOWN")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--max-n", type=int, default=12)
    out(sp)
    sp.set_defaults(run=cmd_recognize)

    sp = sub.add_parser("decompose", help="two-interval factorisation")
    sp.add_argument("what", choices=("two-interval",))
    sp.add_argument("--rep", required=True)
    sp.add_argument("--out-prefix", required=True)
    sp.set_defaults(run=cmd_decompose)

    sp = sub.add_parser("segments", help="tangent segment system of a representation")
    sp.add_argument("--rep", required=True)
    out(sp)
    sp.set_defaults(run=cmd_segments)

    sp = sub.add_parser("contact", help="contact L-system of an outerplanar graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--triangulation", help="maximal outerplanar supergraph for non-maximal input")
    out(sp)
    sp.set_defaults(run=cmd_contact)

    sp = sub.add_parser("reduce", help="circular-arc coloring to MPT coloring")
    sp.add_argument("what", choices=("coloring",))
    sp.add_argument("--arcs", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--cut")
    sp.add_argument("--out-prefix", required=True)
    out(sp)
    sp.set_defaults(run=cmd_reduce)

    sp = sub.add_parser("render", help="SVG drawing")
    sp.add_argument("--input", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--kind", choices=("rep", "lsystem", "contact", "interval", "rays", "segments"))
    sp.add_argument("--scale", type=int, default=40)
    sp.add_argument("--labels", action="store_true")
    sp.set_defaults(run=cmd_render)
    return p


def _needs(args) -> None:
    required = {"order": ("graph", "order"), "interval": ("graph",), "mpt-necessary": ("graph",), "contact": ("lsystem",)}
    if args.command == "check":
        for name in required[args.what]:
            if not getattr(args, name):
                raise MptError(f"check {args.what} needs --{name} FILE")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _needs(args)
        return args.run(args)
    except Done as done:
        return done.code
    except MptError as exc:
        sys.stderr.write(f"mptkit: error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"mptkit: error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
