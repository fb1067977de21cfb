"""Pointed-interval (MPT) representations and their geometric twins.

Coordinates are exact: integral values are kept as ``int`` and everything
else as ``fractions.Fraction``.  Intervals and segments are closed, so
touching counts as intersecting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, PreconditionError
from .graph import Graph, graph_from_edge_list


def q(x):
    """Exact rational from int, Fraction, or text such as ``"3/4"`` or ``"0.7"``."""
    if isinstance(x, bool):
        raise InputError(f"not a rational number: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise InputError(f"floats are not accepted as coordinates ({x!r}); use Fraction or text")
    try:
        value = Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError):
        raise InputError(f"not a rational number: {x!r}") from None
    return value.numerator if value.denominator == 1 else value


def fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class PointedInterval:
    s: object
    p: object
    e: object

    def __post_init__(self):
        for name in ("s", "p", "e"):
            object.__setattr__(self, name, q(getattr(self, name)))
        if not self.s <= self.p <= self.e:
            raise InputError(f"pointed interval needs s <= p <= e, got ({self.s}, {self.p}, {self.e})")


@dataclass(frozen=True)
class MptRepresentation:
    items: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "items",
            tuple(it if isinstance(it, PointedInterval) else PointedInterval(*it) for it in self.items),
        )

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def points(self) -> list:
        return [it.p for it in self.items]

    def triples(self) -> list:
        return [(it.s, it.p, it.e) for it in self.items]


@dataclass(frozen=True)
class LShape:
    """Top at ``(c, -t)``, corner at ``(c, -c)``, right end at ``(r, -c)``."""

    t: object
    c: object
    r: object

    def __post_init__(self):
        for name in ("t", "c", "r"):
            object.__setattr__(self, name, q(getattr(self, name)))
        if not self.t <= self.c <= self.r:
            raise InputError(f"L-shape needs t <= c <= r, got ({self.t}, {self.c}, {self.r})")

    @property
    def top(self) -> tuple:
        return (self.c, -self.t)

    @property
    def corner(self) -> tuple:
        return (self.c, -self.c)

    @property
    def right(self) -> tuple:
        return (self.r, -self.c)


@dataclass(frozen=True)
class LinearLSystem:
    shapes: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "shapes",
            tuple(s if isinstance(s, LShape) else LShape(*s) for s in self.shapes),
        )

    def __len__(self) -> int:
        return len(self.shapes)

    def __iter__(self):
        return iter(self.shapes)

    def triples(self) -> list:
        return [(s.t, s.c, s.r) for s in self.shapes]


@dataclass(frozen=True)
class IntervalRepresentation:
    items: tuple

    def __post_init__(self):
        items = []
        for s, e in self.items:
            s, e = q(s), q(e)
            if s > e:
                raise InputError(f"interval needs s <= e, got [{s}, {e}]")
            items.append((s, e))
        object.__setattr__(self, "items", tuple(items))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


DOWN, LEFT = "down", "left"


@dataclass(frozen=True)
class Ray:
    direction: str
    x: object
    y: object

    def __post_init__(self):
        if self.direction not in (DOWN, LEFT):
            raise InputError(f"ray direction must be 'down' or 'left', got {self.direction!r}")
        object.__setattr__(self, "x", q(self.x))
        object.__setattr__(self, "y", q(self.y))


@dataclass(frozen=True)
class RaySystem:
    rays: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "rays", tuple(r if isinstance(r, Ray) else Ray(*r) for r in self.rays)
        )
        for direction, attr in ((DOWN, "x"), (LEFT, "y")):
            seen = {}
            for i, ray in enumerate(self.rays):
                if ray.direction != direction:
                    continue
                key = getattr(ray, attr)
                if key in seen:
                    raise InputError(
                        f"parallel {direction} rays {seen[key]} and {i} share {attr}={key} and would intersect"
                    )
                seen[key] = i

    def __len__(self) -> int:
        return len(self.rays)


# --- adjacency ------------------------------------------------------------

def mpt_adjacency(rep: MptRepresentation) -> Graph:
    """uv is an edge iff p_u and p_v both lie in I_u and in I_v."""
    items = rep.items
    order = sorted(range(len(items)), key=lambda v: (items[v].p, v))
    pairs = []
    for a, u in enumerate(order):
        pu, eu = items[u].p, items[u].e
        for v in order[a + 1:]:
            # p_v >= p_u here, so only s_v <= p_u and p_v <= e_u remain.
            if items[v].p > eu:
                break
            if items[v].s <= pu:
                pairs.append((u, v))
    return graph_from_edge_list(len(items), pairs)


def mpt_adjacent(a: PointedInterval, b: PointedInterval) -> bool:
    """Direct form of the definition, used as an oracle in tests."""
    return a.s <= b.p <= a.e and b.s <= a.p <= b.e


def _require_distinct(values: Sequence, what: str) -> None:
    seen = {}
    for i, x in enumerate(values):
        if x in seen:
            raise PreconditionError(
                f"{what} of {seen[x]} and {i} coincide ({x}); normalize the representation first"
            )
        seen[x] = i


def lsystem_adjacency(sys: LinearLSystem) -> Graph:
    """Geometric intersection graph of the L-shapes (closed segments).

    For corners ``c_u < c_v`` only the horizontal leg of ``u`` can meet the
    vertical leg of ``v``; that happens iff ``r_u >= c_v`` and ``t_v <= c_u``.
    """
    shapes = sys.shapes
    _require_distinct([s.c for s in shapes], "corners")
    order = sorted(range(len(shapes)), key=lambda v: shapes[v].c)
    pairs = []
    for a, u in enumerate(order):
        cu, ru = shapes[u].c, shapes[u].r
        for v in order[a + 1:]:
            if shapes[v].c > ru:
                break
            if shapes[v].t <= cu:
                pairs.append((u, v))
    return graph_from_edge_list(len(shapes), pairs)


def interval_adjacency(iv: IntervalRepresentation) -> Graph:
    items = iv.items
    order = sorted(range(len(items)), key=lambda v: (items[v][0], v))
    pairs = []
    for a, u in enumerate(order):
        eu = items[u][1]
        for v in order[a + 1:]:
            if items[v][0] > eu:
                break
            pairs.append((u, v))
    return graph_from_edge_list(len(items), pairs)


def ray_adjacency(rs: RaySystem) -> Graph:
    downs = [(i, r) for i, r in enumerate(rs.rays) if r.direction == DOWN]
    lefts = [(i, r) for i, r in enumerate(rs.rays) if r.direction == LEFT]
    pairs = [
        (i, j)
        for i, d in downs
        for j, l in lefts
        if l.y <= d.y and d.x <= l.x
    ]
    return graph_from_edge_list(len(rs), pairs)


# --- conversions ----------------------------------------------------------

def rep_to_lsystem(rep: MptRepresentation) -> LinearLSystem:
    """(s, p, e) -> L-shape with top (p, -s), corner (p, -p), right end (e, -p)."""
    _require_distinct(rep.points, "points")
    return LinearLSystem(tuple(LShape(it.s, it.p, it.e) for it in rep.items))


def lsystem_to_rep(sys: LinearLSystem) -> MptRepresentation:
    return MptRepresentation(tuple(PointedInterval(s.t, s.c, s.r) for s in sys.shapes))


def anchor_of(sys: LinearLSystem):
    """Largest top parameter if it does not exceed the smallest corner, else ``None``."""
    if not len(sys):
        return 0
    a = max(s.t for s in sys.shapes)
    return a if a <= min(s.c for s in sys.shapes) else None


def anchored_intervals(sys: LinearLSystem) -> IntervalRepresentation:
    """The interval model ``[c, r]`` of an anchored system."""
    return IntervalRepresentation(tuple((s.c, s.r) for s in sys.shapes))


def rerank_intervals(iv: IntervalRepresentation) -> IntervalRepresentation:
    """Same intersection graph, all 2n endpoints distinct integers ``0..2n-1``.

    At equal coordinates starts precede ends, which keeps touching intervals
    intersecting; ties among starts (or ends) are broken by index.
    """
    events = []
    for i, (s, e) in enumerate(iv.items):
        events.append((s, 0, i))
        events.append((e, 1, i))
    events.sort()
    new = [[0, 0] for _ in iv.items]
    for rank, (_, kind, i) in enumerate(events):
        new[i][kind] = rank
    return IntervalRepresentation(tuple((s, e) for s, e in new))


def interval_to_anchored_lsystem(iv: IntervalRepresentation) -> LinearLSystem:
    """Interval ``[s, e]`` becomes the L-shape ``(0, s, e)``, anchored at 0.

    Inputs with a negative or repeated start are first re-ranked.
    """
    starts = [s for s, _ in iv.items]
    if any(s < 0 for s in starts) or len(set(starts)) != len(starts):
        iv = rerank_intervals(iv)
    return LinearLSystem(tuple(LShape(0, s, e) for s, e in iv.items))


def rays_to_lsystem(rs: RaySystem) -> LinearLSystem:
    """Stop every ray on the line ``y = -x - C`` and shift that line onto ``y = -x``.

    ``C = 1 + 2M`` with ``M`` the largest absolute origin coordinate puts all
    origins and crossings strictly above the line.  Down-rays become shapes
    with ``r = c``; left-rays become shapes with ``t = c``.
    """
    coords = [abs(v) for r in rs.rays for v in (r.x, r.y)]
    big = 1 + 2 * max(coords, default=0)
    shapes = []
    for ray in rs.rays:
        if ray.direction == DOWN:
            shapes.append(LShape(-(ray.y + big), ray.x, ray.x))
        else:
            c = -ray.y - big
            shapes.append(LShape(c, c, ray.x))
    return LinearLSystem(tuple(shapes))


def is_canonical(rep: MptRepresentation) -> bool:
    """Points are a permutation of ``1..n`` and every endpoint is an integer in ``1..n``."""
    n = len(rep)
    if sorted(rep.points) != list(range(1, n + 1)):
        return False
    return all(
        isinstance(x, int) and 1 <= x <= n for it in rep.items for x in (it.s, it.e)
    )


def normalize(rep: MptRepresentation) -> MptRepresentation:
    """Canonical, tight representation with the same adjacency.

    Vertices are ordered by ``(p, index)`` and rebuilt with the min/max
    neighbour rule, so the result is a fixed point of this function.
    """
    from .orders import order_from_rep, rep_from_order

    return rep_from_order(mpt_adjacency(rep), order_from_rep(rep))


def random_mpt_rep(n: int, seed: int) -> MptRepresentation:
    """Random canonical representation, deterministic in ``(n, seed)``.

    Vertex ``i`` (1-based) draws ``s`` uniformly from ``[1, i]`` and ``e``
    from ``[i, n]`` with point ``i``; the draw is then tightened by
    :func:`normalize`, which keeps every point and the adjacency.
    """
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    rng = random.Random(seed)
    raw = MptRepresentation(
        tuple(PointedInterval(rng.randint(1, i), i, rng.randint(i, n)) for i in range(1, n + 1))
    )
    return normalize(raw)


def random_interval_rep(n: int, seed: int) -> IntervalRepresentation:
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    rng = random.Random(seed)
    return IntervalRepresentation(
        tuple((rng.randint(1, i), rng.randint(i, n)) for i in range(1, n + 1))
    )


def random_ray_system(n: int, seed: int, span: int = 20) -> RaySystem:
    """Random 2D ray system with distinct x for down-rays and distinct y for left-rays."""
    rng = random.Random(seed)
    xs = rng.sample(range(-span, span + 1), n)
    ys = rng.sample(range(-span, span + 1), n)
    rays = []
    for i in range(n):
        if rng.random() < 0.5:
            rays.append(Ray(DOWN, xs[i], rng.randint(-span, span)))
        else:
            rays.append(Ray(LEFT, rng.randint(-span, span), ys[i]))
    return RaySystem(tuple(rays))


# A hand-drawn linear L-system of the net (vertices v1..v6 -> 0..5).
NET_LSYSTEM = LinearLSystem(
    tuple(
        LShape(Fraction(t), Fraction(c), Fraction(r))
        for t, c, r in (
            ("-0.2", "1", "2.8"),
            ("0", "1.8", "5.3"),
            ("2", "2.6", "3.8"),
            ("1.5", "3.4", "5.6"),
            ("3.6", "4.2", "5.4"),
            ("1.2", "5", "5.8"),
        )
    )
)


def net_rep() -> MptRepresentation:
    """Canonical representation of the net, derived from :data:`NET_LSYSTEM`."""
    return normalize(lsystem_to_rep(NET_LSYSTEM))

