"""Run the command line in-process and a fixed pipeline matrix over it."""

import contextlib
import io
import os
import sys

from mptkit.cli import main


def run_cli(argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main([str(a) for a in argv])
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


def write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# (name, argv, expected exit code, stdout file name or None); "{d}" is the work dir
MATRIX = [
    ("gen-net", ["gen", "--family", "net"], 0, "net.rep"),
    ("adjacency-net", ["adjacency", "--rep", "{d}/net.rep"], 0, "net.graph"),
    ("gen-k222", ["gen", "--family", "k222"], 0, "k222.graph"),
    ("gen-path", ["gen", "--family", "path", "--n", "5", "--as", "graph"], 0, "path.graph"),
    ("gen-kb", ["gen", "--family", "complete-bipartite(3,2)"], 0, "kb.rep"),
    ("gen-subdivision", ["gen", "--family", "full-subdivision-of(complete(4))"], 0, "sub.graph"),
    ("gen-mpt", ["gen", "--family", "random-mpt", "--n", "12", "--seed", "4"], 0, "r.rep"),
    ("adjacency-mpt", ["adjacency", "--rep", "{d}/r.rep"], 0, "r.graph"),
    ("rep-to-lsystem", ["convert", "--from", "rep", "--to", "lsystem", "--input", "{d}/r.rep"], 0, "r.ls"),
    ("lsystem-to-rep", ["convert", "--from", "lsystem", "--to", "rep", "--input", "{d}/r.ls"], 0, "r2.rep"),
    ("rep-to-order", ["convert", "--from", "rep", "--to", "order", "--input", "{d}/r.rep"], 0, "r.order"),
    ("order-to-rep", ["convert", "--from", "order", "--to", "rep", "--graph", "{d}/r.graph", "--input", "{d}/r.order"], 0, "r3.rep"),
    ("gen-interval", ["gen", "--family", "random-interval", "--n", "10", "--seed", "2"], 0, "iv.interval"),
    ("interval-to-rep", ["convert", "--from", "interval", "--to", "rep", "--input", "{d}/iv.interval"], 0, "iv.rep"),
    ("adjacency-interval", ["adjacency", "--rep", "{d}/iv.interval"], 0, "iv.graph"),
    ("gen-rays", ["gen", "--family", "random-rays", "--n", "8", "--seed", "5"], 0, "rays.txt"),
    ("rays-to-lsystem", ["convert", "--from", "rays", "--to", "lsystem", "--input", "{d}/rays.txt"], 0, "rays.ls"),
    ("solve-wis", ["solve", "wis", "--rep", "{d}/r.rep", "--weights", "{d}/w.txt"], 0, "wis.txt"),
    ("solve-cover", ["solve", "clique-cover", "--rep", "{d}/r.rep"], 0, "cover.txt"),
    ("solve-color", ["solve", "color", "--rep", "{d}/r.rep"], 0, "color.txt"),
    ("solve-color-exact", ["solve", "color", "--rep", "{d}/r.rep", "--exact"], 0, None),
    ("check-order-ok", ["check", "order", "--graph", "{d}/r.graph", "--order", "{d}/r.order"], 0, None),
    ("check-order-bad", ["check", "order", "--graph", "{d}/x.graph", "--order", "{d}/x.order"], 1, None),
    ("check-interval-path", ["check", "interval", "--graph", "{d}/path.graph"], 0, None),
    ("check-interval-net", ["check", "interval", "--graph", "{d}/net.graph"], 1, None),
    ("necessary-net", ["check", "mpt-necessary", "--graph", "{d}/net.graph"], 0, None),
    ("necessary-k222", ["check", "mpt-necessary", "--graph", "{d}/k222.graph"], 1, None),
    ("recognize-net", ["recognize", "--graph", "{d}/net.graph"], 0, None),
    ("recognize-k222", ["recognize", "--graph", "{d}/k222.graph"], 1, None),
    ("recognize-subdivision", ["recognize", "--graph", "{d}/sub.graph"], 1, None),
    ("decompose", ["decompose", "two-interval", "--rep", "{d}/r.rep", "--out-prefix", "{d}/two"], 0, None),
    ("adjacency-h1", ["adjacency", "--rep", "{d}/two.h1.txt"], 0, "h1.graph"),
    ("segments", ["segments", "--rep", "{d}/r.rep"], 0, "r.seg"),
    ("adjacency-segments", ["adjacency", "--rep", "{d}/r.seg"], 0, "seg.graph"),
    ("gen-outerplanar", ["gen", "--family", "random-maximal-outerplanar", "--n", "15", "--seed", "3"], 0, "op.graph"),
    ("contact", ["contact", "--graph", "{d}/op.graph"], 0, "op.contact"),
    ("check-contact", ["check", "contact", "--lsystem", "{d}/op.contact"], 0, None),
    ("adjacency-contact", ["adjacency", "--rep", "{d}/op.contact"], 0, "contact.graph"),
    ("net-lsystem", ["convert", "--from", "rep", "--to", "lsystem", "--input", "{d}/net.rep"], 0, "net.ls"),
    ("check-contact-net", ["check", "contact", "--lsystem", "{d}/net_drawn.ls"], 1, None),
    ("gen-arcs", ["gen", "--family", "random-circular-arc", "--n", "6", "--seed", "11"], 0, "arcs.txt"),
    ("reduce", ["reduce", "coloring", "--arcs", "{d}/arcs.txt", "--k", "4", "--out-prefix", "{d}/red"], 0, None),
    ("adjacency-reduced", ["adjacency", "--rep", "{d}/red.rep.txt"], 0, "red.graph"),
    ("recognize-reduced", ["recognize", "--graph", "{d}/red.rep.txt", "--max-n", "16"], 0, None),
    ("render-rep", ["render", "--input", "{d}/r.rep", "--out", "{d}/r.svg", "--labels"], 0, None),
    ("render-segments", ["render", "--input", "{d}/r.seg", "--out", "{d}/seg.svg"], 0, None),
    ("render-contact", ["render", "--input", "{d}/op.contact", "--out", "{d}/op.svg"], 0, None),
    ("missing-seed", ["gen", "--family", "random-mpt", "--n", "5"], 2, None),
    ("unknown-flag", ["adjacency", "--rep", "{d}/r.rep", "--bogus"], 2, None),
    ("malformed", ["adjacency", "--rep", "{d}/bad.rep"], 2, None),
    ("missing-file", ["adjacency", "--rep", "{d}/nope.rep"], 2, None),
    ("noncanonical-wis", ["solve", "wis", "--rep", "{d}/loose.rep"], 0, None),
    ("bad-cut", ["reduce", "coloring", "--arcs", "{d}/arcs.txt", "--k", "2", "--out-prefix", "{d}/red2"], 2, None),
]

FIXTURES = {
    "w.txt": "0 3\n1 1/2\n5 4\n7 2\n",
    "x.graph": "4 2\n0 2\n1 3\n",
    "x.order": "0 1 2 3\n",
    "net_drawn.ls": "6\n-1/5 1 14/5\n0 9/5 53/10\n2 13/5 19/5\n3/2 17/5 28/5\n18/5 21/5 27/5\n6/5 5 29/5\n",
    "bad.rep": "mptkit-format 1\n3\n1 1 2\n1 2 x\n0 3 3\n",
    "loose.rep": "2\n1/2 7/10 21/10\n3/5 19/10 2\n",
}


def run_matrix(workdir):
    """Run every row; returns ``[(name, code, expected, stdout, stderr)]``."""
    for name, text in FIXTURES.items():
        write(os.path.join(workdir, name), text)
    results = []
    for name, argv, expected, save in MATRIX:
        code, out, err = run_cli([a.replace("{d}", str(workdir)) for a in argv])
        if save:
            write(os.path.join(workdir, save), out)
        results.append((name, code, expected, out, err))
    return results


def produced_files(workdir):
    out = {}
    for name in sorted(os.listdir(workdir)):
        with open(os.path.join(workdir, name), "rb") as fh:
            out[name] = fh.read()
    return out
