"""Optimisation on MPT graphs given a representation.

* maximum weight independent set by dynamic programming over dominant shapes
* clique cover within twice the independence number
* first-fit coloring
* the circular-arc to MPT coloring reduction, as an instance generator
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .errors import InputError, PreconditionError
from .graph import CliqueCover, Coloring, Graph, complete, graph_from_edge_list, is_clique
from .oracles import ALPHA_LIMIT, brute_force_omega
from .orders import rep_from_order
from .representations import (
    IntervalRepresentation,
    LinearLSystem,
    LShape,
    MptRepresentation,
    anchor_of,
    interval_adjacency,
    interval_to_anchored_lsystem,
    is_canonical,
    lsystem_to_rep,
    mpt_adjacency,
    q,
    rerank_intervals,
)


def _weights(n: int, weights) -> list:
    if weights is None:
        return [1] * n
    if isinstance(weights, Mapping):
        values = [weights.get(v, 0) for v in range(n)]
    else:
        values = list(weights)
        if len(values) != n:
            raise InputError(f"expected {n} weights, got {len(values)}")
    out = []
    for v, x in enumerate(values):
        x = q(x)
        if x < 0:
            raise InputError(f"weight of vertex {v} is negative ({x})")
        out.append(x)
    return out


def _require_canonical(rep: MptRepresentation, what: str) -> list:
    """Return the vertex at each 1-based position (index 0 unused)."""
    if not is_canonical(rep):
        raise PreconditionError(
            f"{what} needs a canonical representation (points 1..n, integer ends); normalize first"
        )
    at = [None] * (len(rep) + 1)
    for v, it in enumerate(rep.items):
        at[it.p] = v
    return at


@dataclass(frozen=True)
class WisResult:
    value: Fraction
    set: tuple


@dataclass
class DpTable:
    """``opt[a][b]`` over positions with sentinels ``0`` and ``n + 1``."""

    n: int
    opt: dict = field(default_factory=dict)
    choice: dict = field(default_factory=dict)


def wis_table(rep: MptRepresentation, weights=None) -> tuple:
    """Fill the dominant-shape table; returns ``(table, vertex_at_position)``."""
    at = _require_canonical(rep, "max_weight_independent_set")
    n = len(rep)
    w = _weights(n, weights)
    top = [0] * (n + 2)
    right = [0] * (n + 2)
    for i in range(1, n + 1):
        it = rep.items[at[i]]
        top[i], right[i] = it.s, it.e
    inf = float("inf")
    # Right ends compared as (r, position) so they are pairwise distinct.
    rkey = [(inf, 0)] + [(right[i], i) for i in range(1, n + 1)] + [(inf, n + 1)]

    def disjoint(i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return not (right[i] >= j and top[j] <= i)

    full = sum(1 << i for i in range(1, n + 1))
    # below[b]: shapes left of b, ending before b, disjoint from b  (L_{0,b})
    # above[a]: shapes right of a, ending before a, disjoint from a (L_{a,n+1})
    below = [0] * (n + 2)
    above = [0] * (n + 2)
    below[n + 1] = full
    above[0] = full
    for b in range(1, n + 1):
        below[b] = sum(
            1 << i for i in range(1, b) if rkey[i] < rkey[b] and disjoint(i, b)
        )
    for a in range(1, n + 1):
        above[a] = sum(
            1 << i for i in range(a + 1, n + 1) if rkey[i] < rkey[a] and disjoint(i, a)
        )

    table = DpTable(n)
    opt, choice = table.opt, table.choice
    weight_at = [0] + [w[at[i]] for i in range(1, n + 1)] + [0]
    for span in range(1, n + 2):
        for a in range(0, n + 2 - span):
            b = a + span
            best, arg = 0, None
            members = below[b] & above[a]
            while members:
                low = members & -members
                i = low.bit_length() - 1
                members ^= low
                val = opt[a, i] + weight_at[i] + opt[i, b]
                if val > best or arg is None and val == best and weight_at[i] > 0:
                    best, arg = val, i
            opt[a, b] = best
            choice[a, b] = arg
    return table, at


def max_weight_independent_set(rep: MptRepresentation, weights=None) -> WisResult:
    """Maximum weight independent set of ``mpt_adjacency(rep)`` in O(n^3).

    ``rep`` must be canonical.  ``weights`` maps vertex -> nonnegative
    rational (mapping or sequence); the default is unit weights.
    """
    table, at = wis_table(rep, weights)
    n = table.n
    chosen = []
    stack = [(0, n + 1)]
    while stack:
        a, b = stack.pop()
        i = table.choice[a, b]
        if i is None:
            continue
        chosen.append(at[i])
        stack.append((a, i))
        stack.append((i, b))
    return WisResult(Fraction(table.opt[0, n + 1]), tuple(sorted(chosen)))


def interval_clique_cover(iv: IntervalRepresentation) -> CliqueCover:
    """Optimal clique cover of an interval graph.

    Repeatedly take the uncovered interval with the leftmost right end and
    group every uncovered interval containing that end into one clique.
    """
    left = sorted(range(len(iv)), key=lambda v: (iv.items[v][1], v))
    covered = set()
    cliques = []
    for v in left:
        if v in covered:
            continue
        point = iv.items[v][1]
        clique = tuple(
            sorted(u for u in range(len(iv)) if u not in covered and iv.items[u][0] <= point)
        )
        covered.update(clique)
        cliques.append(clique)
    return CliqueCover(tuple(cliques))


@dataclass(frozen=True)
class CliqueCoverReport:
    greedy: tuple  # greedy independent set, as vertex ids in corner order
    bridge_cliques: tuple  # the nonempty C_j
    blocks: tuple  # vertex tuples of the residual interval blocks
    block_anchors: tuple
    cover: CliqueCover


def clique_cover_report(rep: MptRepresentation) -> CliqueCoverReport:
    at = _require_canonical(rep, "clique_cover_2approx")
    n = len(rep)
    top = [0] * (n + 1)
    right = [0] * (n + 1)
    for i in range(1, n + 1):
        top[i], right[i] = rep.items[at[i]].s, rep.items[at[i]].e

    greedy = []
    for j in range(1, n + 1):
        if all(not (right[i] >= j and top[j] <= i) for i in greedy):
            greedy.append(j)

    bridges = []
    in_bridge = set()
    for a, b in zip(greedy, greedy[1:]):
        c = [l for l in range(a, b) if right[l] >= b]
        in_bridge.update(c)
        if c:
            bridges.append(c)

    g = mpt_adjacency(rep)
    for c in bridges:
        if not is_clique(g, [at[l] for l in c]):
            raise AssertionError(f"bridge set {c} is not a clique")

    cliques = [tuple(sorted(at[l] for l in c)) for c in bridges]
    blocks, anchors = [], []
    bounds = greedy + [n + 1]
    for a, b in zip(bounds, bounds[1:]):
        block = [l for l in range(a, b) if l not in in_bridge]
        if not block:
            continue
        shapes = LinearLSystem(tuple(LShape(top[l], l, right[l]) for l in block))
        anchor = anchor_of(shapes)
        if anchor is None:
            raise AssertionError(f"residual block {block} is not anchored")
        anchors.append(anchor)
        blocks.append(tuple(at[l] for l in block))
        sub = interval_clique_cover(IntervalRepresentation(tuple((l, right[l]) for l in block)))
        cliques.extend(tuple(sorted(at[block[x]] for x in c)) for c in sub.cliques)

    cover = CliqueCover(tuple(cliques))
    cover.validate(g)
    return CliqueCoverReport(
        tuple(at[i] for i in greedy),
        tuple(cliques[: len(bridges)]),
        tuple(blocks),
        tuple(anchors),
        cover,
    )


def clique_cover_2approx(rep: MptRepresentation) -> CliqueCover:
    """Clique cover of size at most ``2 * alpha``; ``rep`` must be canonical."""
    return clique_cover_report(rep).cover


@dataclass(frozen=True)
class ColoringReport:
    coloring: Coloring
    clique_lower_bound: Optional[int]


def greedy_coloring(rep: MptRepresentation) -> Coloring:
    """First-fit coloring in corner order."""
    at = _require_canonical(rep, "greedy_coloring")
    g = mpt_adjacency(rep)
    color = [-1] * len(rep)
    for i in range(1, len(rep) + 1):
        v = at[i]
        taken = {color[u] for u in g.adj[v] if color[u] >= 0}
        color[v] = next(c for c in range(len(rep) + 1) if c not in taken)
    return Coloring(tuple(color))


def coloring_report(rep: MptRepresentation, limit: int = ALPHA_LIMIT) -> ColoringReport:
    coloring = greedy_coloring(rep)
    bound = None
    if len(rep) <= limit:
        bound = brute_force_omega(mpt_adjacency(rep), limit)[0]
    return ColoringReport(coloring, bound)


# --- circular arcs and the coloring reduction ------------------------------

@dataclass(frozen=True)
class CircularArcRepresentation:
    """Arcs on the circle ``[0, 1)``; an arc with ``start > end`` wraps through 0."""

    arcs: tuple

    def __post_init__(self):
        arcs = []
        for i, (s, e) in enumerate(self.arcs):
            s, e = q(s), q(e)
            if not (0 <= s < 1 and 0 <= e < 1):
                raise InputError(f"arc {i} endpoints must lie in [0, 1), got ({s}, {e})")
            if s == e:
                raise InputError(f"arc {i} has equal start and end ({s})")
            arcs.append((s, e))
        object.__setattr__(self, "arcs", tuple(arcs))

    def __len__(self) -> int:
        return len(self.arcs)


def arc_contains(arc: tuple, x) -> bool:
    s, e = arc
    if s < e:
        return s <= x <= e
    return x >= s or x <= e


def circular_arc_adjacency(ca: CircularArcRepresentation) -> Graph:
    """Closed arcs meet iff one of them contains the other's start."""
    arcs = ca.arcs
    pairs = [
        (i, j)
        for i in range(len(arcs))
        for j in range(i + 1, len(arcs))
        if arc_contains(arcs[i], arcs[j][0]) or arc_contains(arcs[j], arcs[i][0])
    ]
    return graph_from_edge_list(len(arcs), pairs)


def default_cut(ca: CircularArcRepresentation):
    """0 unless it is an endpoint; otherwise the midpoint of the first gap after 0."""
    ends = sorted({x for arc in ca.arcs for x in arc})
    if 0 not in ends:
        return 0
    nxt = ends[1] if len(ends) > 1 else 1
    return q(Fraction(nxt) / 2)


NO_CUT, CLIQUE, SPLIT = "no-cut", "clique", "split"


@dataclass(frozen=True)
class ReductionOutput:
    g_prime: Graph
    rep: MptRepresentation
    split_map: dict  # original vertex -> (v1, v2) ids in g_prime
    clique_vertices: tuple  # ids of u_1..u_k in g_prime
    case: str  # NO_CUT, CLIQUE or SPLIT
    crossing: int  # number of arcs through the cut


def coloring_hardness_reduction(ca: CircularArcRepresentation, k: int, cut=None) -> ReductionOutput:
    """MPT graph ``G'`` with ``chi(G) <= k  <=>  chi(G') <= k``.

    Arcs through the cut are split in two (``v1`` keeps the start, ``v2`` the
    end); ``k`` clique vertices ``u_1..u_k`` are added with ``u_t`` adjacent
    to both halves of the ``i``-th split arc whenever ``t > i``.

    Ids in ``g_prime``: ``u_t`` is ``t - 1``; original vertex ``v`` (its
    first half, if split) is ``k + v``; the second half of the ``i``-th split
    arc is ``k + n + i - 1``.  With no arc through the cut ``G' = G`` with
    ids unchanged; with more than ``k`` arcs through it ``G'`` is a
    ``(k+1)``-clique.
    """
    if k <= 2:
        raise InputError(f"k must exceed 2, got {k}")
    cut = default_cut(ca) if cut is None else q(cut)
    if not 0 <= cut < 1:
        raise InputError(f"cut must lie in [0, 1), got {cut}")
    n = len(ca)
    ends = {x for arc in ca.arcs for x in arc}
    if cut in ends:
        raise InputError(f"cut {cut} coincides with an arc endpoint; choose a different cut")
    crossing = [v for v in range(n) if arc_contains(ca.arcs[v], cut)]
    ell = len(crossing)

    def unroll(x):
        return (x - cut) % 1

    if ell == 0:
        iv = IntervalRepresentation(tuple((unroll(s), unroll(e)) for s, e in ca.arcs))
        g = circular_arc_adjacency(ca)
        rep = lsystem_to_rep(interval_to_anchored_lsystem(rerank_intervals(iv)))
        _check(rep, g)
        return ReductionOutput(g, rep, {}, (), NO_CUT, 0)

    if ell > k:
        g = complete(k + 1)
        rep = rep_from_order(g, range(k + 1))
        return ReductionOutput(g, rep, {}, tuple(range(k + 1)), CLIQUE, ell)

    gap = min(min(unroll(x), 1 - unroll(x)) for x in ends)
    eps = Fraction(gap) / 2
    # H: vertex k+v is the (first half of) original v, then second halves.
    intervals = []
    split_index = {}  # H vertex id -> 1-based i of its split arc
    for v, (s, e) in enumerate(ca.arcs):
        if v in crossing:
            intervals.append((unroll(s), 1 - eps))
        else:
            intervals.append((unroll(s), unroll(e)))
    for i, v in enumerate(crossing, start=1):
        intervals.append((eps, unroll(ca.arcs[v][1])))
        split_index[k + v] = i
        split_index[k + n + i - 1] = i
    iv = rerank_intervals(IntervalRepresentation(tuple(intervals)))
    h = interval_adjacency(iv)

    pairs = [(k + a, k + b) for a, b in h.edges]
    pairs += [(a, b) for a in range(k) for b in range(a + 1, k)]
    pairs += [(t - 1, x) for x, i in split_index.items() for t in range(i + 1, k + 1)]
    g_prime = graph_from_edge_list(k + len(intervals), pairs)

    # Clique shapes sit above the anchor k + 1; H shapes start at k + 2.
    offset = k + 2
    far = offset + 2 * len(intervals)
    shapes = [LShape(1, t, far) for t in range(1, k + 1)]
    for x, (a, b) in enumerate(iv.items):
        top = split_index.get(k + x, k) + 1
        shapes.append(LShape(top, a + offset, b + offset))
    rep = lsystem_to_rep(LinearLSystem(tuple(shapes)))
    _check(rep, g_prime)
    split_map = {v: (k + v, k + n + i - 1) for i, v in enumerate(crossing, start=1)}
    return ReductionOutput(g_prime, rep, split_map, tuple(range(k)), SPLIT, ell)


def _check(rep: MptRepresentation, g: Graph) -> None:
    if mpt_adjacency(rep) != g:
        raise AssertionError("reduction representation does not realise G'")


def random_circular_arcs(n: int, seed: int, resolution: int = 60) -> CircularArcRepresentation:
    """Arcs with pairwise distinct endpoints on the grid ``i / resolution``."""
    if 2 * n > resolution:
        raise InputError(f"resolution {resolution} too small for {n} arcs")
    rng = random.Random(seed)
    ticks = rng.sample(range(resolution), 2 * n)
    return CircularArcRepresentation(
        tuple(
            (Fraction(ticks[2 * i], resolution), Fraction(ticks[2 * i + 1], resolution))
            for i in range(n)
        )
    )
