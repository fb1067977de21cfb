"""Line-oriented text formats for every artifact.

Each emitted file starts with ``mptkit-format 1`` and a ``# kind: <kind>``
comment.  Readers accept files without those two lines, skip blank lines
and ``#`` comments, and report problems as ``source:line: message``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional

from .errors import FormatError, InputError
from .geometry import Contact, ContactLSystem, CyclicSegmentSystem, RationalPoint, Segment
from .graph import Graph, graph_from_edge_list
from .optimization import CircularArcRepresentation
from .representations import (
    IntervalRepresentation,
    LinearLSystem,
    LShape,
    MptRepresentation,
    PointedInterval,
    Ray,
    RaySystem,
    fmt,
    q,
)

MAGIC = "mptkit-format 1"
KINDS = ("graph", "rep", "interval", "lsystem", "rays", "order", "weights", "arcs", "segments", "contact", "mapping")


@dataclass
class Document:
    source: str
    kind: Optional[str]
    lines: list  # (line number, tokens)

    def error(self, lineno, message: str) -> FormatError:
        return FormatError(self.source, lineno, message)

    def end_line(self) -> int:
        return self.lines[-1][0] if self.lines else 1


def parse_document(text: str, source: str = "<input>") -> Document:
    kind = None
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("kind:") and kind is None:
                kind = body[5:].strip()
            continue
        stripped = stripped.split("#", 1)[0].strip()
        if not stripped:
            continue
        if not lines and stripped.startswith("mptkit-format"):
            if stripped != MAGIC:
                raise FormatError(source, lineno, f"unsupported version line {stripped!r}; expected {MAGIC!r}")
            continue
        lines.append((lineno, stripped.split()))
    return Document(source, kind, lines)


def read_document(path: str) -> Document:
    """Read a file (``-`` is stdin)."""
    if path == "-":
        return parse_document(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from None
    return parse_document(text, path)


def _int(doc: Document, lineno: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise doc.error(lineno, f"{what} must be an integer, got {token!r}") from None


def _rational(doc: Document, lineno: int, token: str):
    try:
        return q(token)
    except InputError:
        raise doc.error(lineno, f"not a rational number: {token!r}") from None


def _header(doc: Document, count_fields: int = 1) -> tuple:
    if not doc.lines:
        raise doc.error(1, "file is empty")
    lineno, tokens = doc.lines[0]
    if len(tokens) != count_fields:
        raise doc.error(lineno, f"header needs {count_fields} field(s), got {len(tokens)}")
    values = tuple(_int(doc, lineno, t, "count") for t in tokens)
    if any(v < 0 for v in values):
        raise doc.error(lineno, "counts must be nonnegative")
    return values


def _rows(doc: Document, start: int, count: int, width: int, what: str) -> list:
    rows = doc.lines[start:start + count]
    if len(rows) < count:
        raise doc.error(doc.end_line(), f"expected {count} {what} line(s), found {len(rows)}")
    for lineno, tokens in rows:
        if len(tokens) != width:
            raise doc.error(lineno, f"{what} line needs {width} fields, got {len(tokens)}")
    return rows


def _no_trailing(doc: Document, used: int) -> None:
    if len(doc.lines) > used:
        raise doc.error(doc.lines[used][0], "unexpected extra line")


def _wrap(doc: Document, lineno: int, build):
    try:
        return build()
    except InputError as exc:
        raise doc.error(lineno, str(exc)) from None


# --- readers ---------------------------------------------------------------

def load_graph(doc: Document) -> Graph:
    n, m = _header(doc, 2)
    rows = _rows(doc, 1, m, 2, "edge")
    pairs = []
    for lineno, (a, b) in rows:
        u, v = _int(doc, lineno, a, "vertex"), _int(doc, lineno, b, "vertex")
        _wrap(doc, lineno, lambda: graph_from_edge_list(n, [(u, v)]))
        pairs.append((u, v))
    _no_trailing(doc, 1 + m)
    return graph_from_edge_list(n, pairs)


def _triples(doc: Document, width: int, what: str) -> list:
    (n,) = _header(doc)
    rows = _rows(doc, 1, n, width, what)
    _no_trailing(doc, 1 + n)
    return [(lineno, [_rational(doc, lineno, t) for t in tokens]) for lineno, tokens in rows]


def load_rep(doc: Document) -> MptRepresentation:
    items = [
        _wrap(doc, lineno, lambda v=v: PointedInterval(*v))
        for lineno, v in _triples(doc, 3, "pointed interval")
    ]
    return MptRepresentation(tuple(items))


def load_interval(doc: Document) -> IntervalRepresentation:
    rows = _triples(doc, 2, "interval")
    for lineno, (s, e) in rows:
        if s > e:
            raise doc.error(lineno, f"interval needs s <= e, got [{s}, {e}]")
    return IntervalRepresentation(tuple(tuple(v) for _, v in rows))


def _load_shapes(doc: Document, rows) -> tuple:
    return tuple(_wrap(doc, lineno, lambda v=v: LShape(*v)) for lineno, v in rows)


def load_lsystem(doc: Document) -> LinearLSystem:
    return LinearLSystem(_load_shapes(doc, _triples(doc, 3, "L-shape")))


def load_rays(doc: Document) -> RaySystem:
    (n,) = _header(doc)
    rows = _rows(doc, 1, n, 3, "ray")
    _no_trailing(doc, 1 + n)
    rays = []
    for lineno, (d, x, y) in rows:
        rays.append(_wrap(doc, lineno, lambda: Ray(d, _rational(doc, lineno, x), _rational(doc, lineno, y))))
    return _wrap(doc, rows[-1][0] if rows else 1, lambda: RaySystem(tuple(rays)))


def load_order(doc: Document) -> tuple:
    if len(doc.lines) > 1:
        raise doc.error(doc.lines[1][0], "an order file has a single line")
    if not doc.lines:
        return ()
    lineno, tokens = doc.lines[0]
    return tuple(_int(doc, lineno, t, "vertex") for t in tokens)


def load_weights(doc: Document, n: int) -> list:
    """``vertex weight`` lines; unlisted vertices weigh 0."""
    weights = [0] * n
    seen = set()
    for lineno, tokens in doc.lines:
        if len(tokens) != 2:
            raise doc.error(lineno, f"weight line needs 2 fields, got {len(tokens)}")
        v = _int(doc, lineno, tokens[0], "vertex")
        if not 0 <= v < n:
            raise doc.error(lineno, f"vertex {v} outside 0..{n - 1}")
        if v in seen:
            raise doc.error(lineno, f"vertex {v} listed twice")
        w = _rational(doc, lineno, tokens[1])
        if w < 0:
            raise doc.error(lineno, f"weight of vertex {v} is negative ({w})")
        seen.add(v)
        weights[v] = w
    return weights


def load_arcs(doc: Document) -> CircularArcRepresentation:
    rows = _triples(doc, 2, "arc")
    arcs = []
    for lineno, (s, e) in rows:
        _wrap(doc, lineno, lambda: CircularArcRepresentation(((s, e),)))
        arcs.append((s, e))
    return CircularArcRepresentation(tuple(arcs))


def load_segments(doc: Document) -> list:
    out = []
    for lineno, (ax, ay, bx, by) in _triples(doc, 4, "segment"):
        a, b = RationalPoint(ax, ay), RationalPoint(bx, by)
        out.append(Segment(a, b, degenerate=a == b))
    return out


def load_contact(doc: Document) -> ContactLSystem:
    (n,) = _header(doc)
    shapes = _load_shapes(
        doc,
        [(ln, [_rational(doc, ln, t) for t in tok]) for ln, tok in _rows(doc, 1, n, 3, "L-shape")],
    )
    rest = doc.lines[1 + n:]
    contacts = []
    if rest:
        lineno, tokens = rest[0]
        if len(tokens) != 2 or tokens[0] != "contacts":
            raise doc.error(lineno, "expected 'contacts <count>'")
        m = _int(doc, lineno, tokens[1], "count")
        rows = _rows(doc, 2 + n, m, 4, "contact")
        for ln, (u, v, x, y) in rows:
            u, v = _int(doc, ln, u, "vertex"), _int(doc, ln, v, "vertex")
            if not (0 <= u < n and 0 <= v < n):
                raise doc.error(ln, f"contact ({u}, {v}) outside 0..{n - 1}")
            contacts.append(Contact(u, v, RationalPoint(_rational(doc, ln, x), _rational(doc, ln, y))))
        _no_trailing(doc, 2 + n + m)
    return ContactLSystem(shapes, tuple(contacts))


LOADERS = {
    "graph": load_graph,
    "rep": load_rep,
    "interval": load_interval,
    "lsystem": load_lsystem,
    "rays": load_rays,
    "order": load_order,
    "arcs": load_arcs,
    "segments": load_segments,
    "contact": load_contact,
}


def load(path: str, kind: str):
    doc = read_document(path)
    if doc.kind is not None and doc.kind != kind and not (kind == "lsystem" and doc.kind == "contact"):
        raise FormatError(doc.source, 1, f"file holds a {doc.kind!r}, expected {kind!r}")
    if kind == "lsystem" and doc.kind == "contact":
        return load_contact(doc).lsystem()
    return LOADERS[kind](doc)


# --- writers ---------------------------------------------------------------

def _doc(kind: str, body: list, notes: tuple = ()) -> str:
    head = [MAGIC, f"# kind: {kind}"] + [f"# {n}" for n in notes]
    return "\n".join(head + body) + "\n"


def dump_graph(g: Graph, notes: tuple = ()) -> str:
    return _doc("graph", [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()], notes)


def dump_rep(rep: MptRepresentation, notes: tuple = ()) -> str:
    body = [str(len(rep))] + [f"{fmt(it.s)} {fmt(it.p)} {fmt(it.e)}" for it in rep.items]
    return _doc("rep", body, notes)


def dump_interval(iv: IntervalRepresentation, notes: tuple = ()) -> str:
    return _doc("interval", [str(len(iv))] + [f"{fmt(s)} {fmt(e)}" for s, e in iv.items], notes)


def _shape_lines(shapes) -> list:
    return [f"{fmt(s.t)} {fmt(s.c)} {fmt(s.r)}" for s in shapes]


def dump_lsystem(sys: LinearLSystem, notes: tuple = ()) -> str:
    return _doc("lsystem", [str(len(sys))] + _shape_lines(sys.shapes), notes)


def dump_rays(rs: RaySystem, notes: tuple = ()) -> str:
    body = [str(len(rs))] + [f"{r.direction} {fmt(r.x)} {fmt(r.y)}" for r in rs.rays]
    return _doc("rays", body, notes)


def dump_order(order, notes: tuple = ()) -> str:
    return _doc("order", [" ".join(map(str, order))], notes)


def dump_weights(weights, notes: tuple = ()) -> str:
    return _doc("weights", [f"{v} {fmt(w)}" for v, w in enumerate(weights)], notes)


def dump_arcs(ca: CircularArcRepresentation, notes: tuple = ()) -> str:
    return _doc("arcs", [str(len(ca))] + [f"{fmt(s)} {fmt(e)}" for s, e in ca.arcs], notes)


def dump_segments(cs: CyclicSegmentSystem, notes: tuple = ()) -> str:
    body = [str(len(cs))] + [
        f"{fmt(s.a.x)} {fmt(s.a.y)} {fmt(s.b.x)} {fmt(s.b.y)}" for s in cs.segments
    ]
    return _doc("segments", body, notes)


def dump_contact(cs: ContactLSystem, notes: tuple = ()) -> str:
    body = [str(len(cs))] + _shape_lines(cs.shapes) + [f"contacts {len(cs.contacts)}"]
    body += [f"{c.u} {c.v} {fmt(c.point.x)} {fmt(c.point.y)}" for c in cs.contacts]
    return _doc("contact", body, notes)


def dump_mapping(split_map: dict, notes: tuple = ()) -> str:
    return _doc("mapping", [f"{v} {a} {b}" for v, (a, b) in sorted(split_map.items())], notes)
