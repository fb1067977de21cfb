"""Exact geometric constructions: tangent segments on the parabola y = x^2
and equilateral L contact systems for maximal outerplanar graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError, PreconditionError
from .graph import Graph, graph_from_edge_list, is_connected
from .orders import rep_from_order
from .representations import LinearLSystem, LShape, MptRepresentation, lsystem_adjacency, q


@dataclass(frozen=True)
class RationalPoint:
    x: object
    y: object

    def __post_init__(self):
        object.__setattr__(self, "x", q(self.x))
        object.__setattr__(self, "y", q(self.y))

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Segment:
    """Closed segment; a single point needs ``degenerate=True``."""

    a: RationalPoint
    b: RationalPoint
    degenerate: bool = False

    def __post_init__(self):
        a = self.a if isinstance(self.a, RationalPoint) else RationalPoint(*self.a)
        b = self.b if isinstance(self.b, RationalPoint) else RationalPoint(*self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if (a == b) != self.degenerate:
            if a == b:
                raise InputError(f"segment endpoints coincide at ({a.x}, {a.y}) but it is not flagged degenerate")
            raise InputError("a degenerate segment must have equal endpoints")


def point_segment(p) -> Segment:
    return Segment(p, p, degenerate=True)


def _orient(p, r, s) -> int:
    v = (r.x - p.x) * (s.y - p.y) - (r.y - p.y) * (s.x - p.x)
    return (v > 0) - (v < 0)


def _on_segment(p, seg: Segment) -> bool:
    """``p`` collinear with ``seg`` assumed; test the bounding box."""
    a, b = seg.a, seg.b
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segments_intersect(s: Segment, t: Segment) -> bool:
    if (
        max(s.a.x, s.b.x) < min(t.a.x, t.b.x)
        or max(t.a.x, t.b.x) < min(s.a.x, s.b.x)
        or max(s.a.y, s.b.y) < min(t.a.y, t.b.y)
        or max(t.a.y, t.b.y) < min(s.a.y, s.b.y)
    ):
        return False
    o1, o2 = _orient(s.a, s.b, t.a), _orient(s.a, s.b, t.b)
    o3, o4 = _orient(t.a, t.b, s.a), _orient(t.a, t.b, s.b)
    if s.degenerate and t.degenerate:
        return s.a == t.a
    if s.degenerate:
        return o3 == 0 and _on_segment(s.a, t)
    if t.degenerate:
        return o1 == 0 and _on_segment(t.a, s)
    if o1 != o2 and o3 != o4:
        return True
    return (
        (o1 == 0 and _on_segment(t.a, s))
        or (o2 == 0 and _on_segment(t.b, s))
        or (o3 == 0 and _on_segment(s.a, t))
        or (o4 == 0 and _on_segment(s.b, t))
    )


def segment_intersection_graph(segs: Sequence[Segment]) -> Graph:
    segs = list(segs)
    pairs = [
        (i, j)
        for i in range(len(segs))
        for j in range(i + 1, len(segs))
        if segments_intersect(segs[i], segs[j])
    ]
    return graph_from_edge_list(len(segs), pairs)


# --- cyclic segments -------------------------------------------------------

def tangent_crossing(a, b) -> RationalPoint:
    """Where the tangents of y = x^2 at ``x = a`` and ``x = b`` meet."""
    if a == b:
        return RationalPoint(a, q(a) * q(a))
    return RationalPoint(Fraction(q(a) + q(b), 2), q(a) * q(b))


@dataclass(frozen=True)
class CyclicSegmentSystem:
    segments: tuple
    tangency_points: tuple

    def __len__(self) -> int:
        return len(self.segments)


def cyclic_segments_from_rep(rep: MptRepresentation) -> CyclicSegmentSystem:
    """Segment ``v`` lies on the tangent at ``x = p_v`` and runs between its
    crossings with the tangents at ``s_v`` and ``e_v``."""
    segments, touch = [], []
    for it in rep.items:
        touch.append(RationalPoint(it.p, it.p * it.p))
        a, b = tangent_crossing(it.s, it.p), tangent_crossing(it.p, it.e)
        segments.append(Segment(a, b, degenerate=a == b))
    return CyclicSegmentSystem(tuple(segments), tuple(touch))


def cyclic_segments_from_order(g: Graph, order: Sequence[int]) -> CyclicSegmentSystem:
    """Tangents at the order positions ``1..n``; raises on an order violation."""
    return cyclic_segments_from_rep(rep_from_order(g, order))


# --- outerplanar contact systems -------------------------------------------

def _not_maximal(reason: str) -> PreconditionError:
    return PreconditionError(f"not maximal outerplanar: {reason}")


def outerplanar_order(g: Graph) -> tuple:
    """Construction order of a maximal outerplanar graph.

    Peels degree-2 vertices with adjacent neighbours (smallest id first),
    keeping the lexicographically first edge that lies in a single triangle
    as the base.  Returns ``(order, attachment)`` where ``attachment[i]`` is
    the edge ``(u, v)`` the vertex at position ``i >= 2`` is attached to.
    Replaying the order also checks every edge hosts at most one vertex per
    free side, which rules out graphs such as K_{1,1,3}.
    """
    n = g.n
    if n <= 2:
        if g.m != max(0, n - 1):
            raise _not_maximal(f"{n} vertices need {max(0, n - 1)} edge(s)")
        return tuple(range(n)), {}
    if not is_connected(g):
        raise _not_maximal("graph is disconnected")
    if g.m != 2 * n - 3:
        raise _not_maximal(f"{g.m} edges, expected 2n-3 = {2 * n - 3}")
    base = next(
        (
            (u, v)
            for u, v in g.sorted_edges()
            if len(g.adj[u] & g.adj[v]) == 1
        ),
        None,
    )
    if base is None:
        raise _not_maximal("no edge lies in exactly one triangle")

    nbrs = [set(s) for s in g.adj]
    alive = set(range(n))
    peeled = []
    while len(alive) > 2:
        pick = None
        for v in sorted(alive):
            if v in base or len(nbrs[v]) != 2:
                continue
            u, w = sorted(nbrs[v])
            if w in nbrs[u]:
                pick = (v, u, w)
                break
        if pick is None:
            raise _not_maximal(f"peeling stuck with {len(alive)} vertices left")
        v, u, w = pick
        peeled.append(pick)
        alive.discard(v)
        nbrs[u].discard(v)
        nbrs[w].discard(v)
    if set(base) != alive:
        raise _not_maximal("peeling did not end on the base edge")

    order = list(base)
    attachment = {}
    free = {frozenset(base): 1}
    for v, u, w in reversed(peeled):
        key = frozenset((u, w))
        if not free.get(key):
            raise _not_maximal(f"edge ({u}, {w}) has no free side for vertex {v}")
        free[key] -= 1
        free[frozenset((u, v))] = free.get(frozenset((u, v)), 0) + 1
        free[frozenset((v, w))] = free.get(frozenset((v, w)), 0) + 1
        attachment[len(order)] = (u, w)
        order.append(v)
    return tuple(order), attachment


@dataclass(frozen=True)
class Contact:
    u: int
    v: int
    point: RationalPoint


@dataclass(frozen=True)
class ContactLSystem:
    shapes: tuple
    contacts: tuple

    def lsystem(self) -> LinearLSystem:
        return LinearLSystem(self.shapes)

    def __len__(self) -> int:
        return len(self.shapes)


def _contact_build(g: Graph) -> tuple:
    """Shapes, contacts and, per contact, ``(shape, end, d)`` of the touching end."""
    order, attachment = outerplanar_order(g)
    n = g.n
    shapes = [None] * n
    contacts, owners = [], []
    if n == 0:
        return shapes, contacts, owners
    shapes[order[0]] = LShape(-1, 0, 1)
    if n == 1:
        return shapes, contacts, owners
    a, b = order[0], order[1]
    shapes[b] = LShape(0, 1, 2)
    contacts.append(Contact(min(a, b), max(a, b), RationalPoint(1, 0)))
    owners.append((a, "r", Fraction(1)))
    # Each free outer edge owns an empty semi-square: (left shape, right shape, x, d).
    square = {frozenset((a, b)): (a, b, Fraction(0), Fraction(1))}
    for i in range(2, n):
        v = order[i]
        left, right, x, d = square.pop(frozenset(attachment[i]))
        half = d / 2
        shapes[v] = LShape(x, x + half, x + d)
        contacts.append(Contact(min(left, v), max(left, v), RationalPoint(x + half, -x)))
        owners.append((v, "t", d))
        contacts.append(Contact(min(v, right), max(v, right), RationalPoint(x + d, -x - half)))
        owners.append((v, "r", d))
        square[frozenset((left, v))] = (left, v, x, half)
        square[frozenset((v, right))] = (v, right, x + half, half)
    return shapes, contacts, owners


def contact_lsystem_from_outerplanar(g: Graph, triangulation: Optional[Graph] = None) -> ContactLSystem:
    """Equilateral linear L contact system whose touching graph is ``g``.

    ``g`` must be maximal outerplanar, unless ``triangulation`` (a maximal
    outerplanar supergraph on the same vertices) is given; then the system is
    built for the triangulation and every contact that is not an edge of
    ``g`` is undone by pulling the touching end back by a quarter of its
    semi-square.  Those shapes are no longer equilateral.
    """
    if triangulation is None:
        shapes, contacts, _ = _contact_build(g)
        return ContactLSystem(tuple(shapes), tuple(contacts))
    if triangulation.n != g.n or not g.edges <= triangulation.edges:
        raise InputError("triangulation must contain every edge of g on the same vertex set")
    shapes, contacts, owners = _contact_build(triangulation)
    kept = []
    for contact, (v, end, d) in zip(contacts, owners):
        if (contact.u, contact.v) in g.edges:
            kept.append(contact)
            continue
        s = shapes[v]
        if end == "t":
            shapes[v] = LShape(s.t + d / 4, s.c, s.r)
        else:
            shapes[v] = LShape(s.t, s.c, s.r - d / 4)
    return ContactLSystem(tuple(shapes), tuple(kept))


@dataclass(frozen=True)
class ContactCheck:
    ok: bool
    violation: Optional[tuple]  # first crossing pair (u, v), u < v
    equilateral: bool


def verify_contact(sys) -> ContactCheck:
    """Every intersecting pair must touch: ``c_u = t_v`` or ``r_u = c_v`` for ``c_u < c_v``."""
    if isinstance(sys, ContactLSystem):
        sys = sys.lsystem()
    shapes = sys.shapes
    violation = None
    for u, v in lsystem_adjacency(sys).sorted_edges():
        a, b = (u, v) if shapes[u].c < shapes[v].c else (v, u)
        if not (shapes[a].c == shapes[b].t or shapes[a].r == shapes[b].c):
            violation = (u, v)
            break
    equilateral = all(s.c - s.t == s.r - s.c for s in shapes)
    return ContactCheck(violation is None, violation, equilateral)


def random_maximal_outerplanar(n: int, seed: int) -> Graph:
    """Random triangulated polygon, vertex ids shuffled; deterministic in the seed."""
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    rng = random.Random(seed)
    label = list(range(n))
    rng.shuffle(label)
    if n < 3:
        return graph_from_edge_list(n, [(label[0], label[1])] if n == 2 else [])
    pairs = [(0, 1), (1, 2), (0, 2)]
    outer = [(0, 1), (1, 2), (0, 2)]
    for v in range(3, n):
        u, w = outer.pop(rng.randrange(len(outer)))
        pairs += [(u, v), (v, w)]
        outer += [(u, v), (v, w)]
    return graph_from_edge_list(n, [(label[u], label[v]) for u, v in pairs])
