"""Vertex-order characterisations: I-orders, MPT-orders and what they build.

A vertex order is a tuple listing the vertices from first to last.
Violations report their witness as vertex ids in order position, together
with the positions themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError, OracleLimitError, OrderViolationError
from .graph import Graph
from .representations import (
    IntervalRepresentation,
    MptRepresentation,
    PointedInterval,
)

ORDER_LIMIT = 12

I_ORDER = "i-order"
MPT_ORDER = "mpt-order"


@dataclass(frozen=True)
class OrderViolation:
    kind: str
    witness: tuple  # vertex ids, listed in order
    positions: tuple  # their 0-based positions, strictly increasing


def check_order(g: Graph, order: Sequence[int]) -> tuple:
    order = tuple(int(v) for v in order)
    if sorted(order) != list(range(g.n)):
        raise InputError(f"vertex order {list(order)} is not a permutation of 0..{g.n - 1}")
    return order


def _positions(order: Sequence[int]) -> list:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def _position_graph(g: Graph, order: Sequence[int]) -> list:
    """Neighbour positions of the vertex at each position, sorted."""
    pos = _positions(order)
    return [sorted(pos[w] for w in g.adj[v]) for v in order]


def verify_mpt_order(g: Graph, order: Sequence[int]) -> Optional[OrderViolation]:
    """Lexicographically first quadruple ``a<b<c<d`` with ac, bd in E and bc not in E.

    Runs in O(n^2 * max degree): for a non-adjacent pair ``b < c`` the best
    completion takes the smallest neighbour of ``c`` and the smallest
    neighbour of ``b`` beyond ``c``.
    """
    order = check_order(g, order)
    nbr = _position_graph(g, order)
    nbr_sets = [set(x) for x in nbr]
    best = None
    for b in range(g.n):
        for c in range(b + 1, g.n):
            if c in nbr_sets[b] or not nbr[c] or nbr[c][0] >= b:
                continue
            d = next((x for x in nbr[b] if x > c), None)
            if d is None:
                continue
            cand = (nbr[c][0], b, c, d)
            if best is None or cand < best:
                best = cand
    if best is None:
        return None
    return OrderViolation(MPT_ORDER, tuple(order[i] for i in best), best)


def verify_i_order(g: Graph, order: Sequence[int]) -> Optional[OrderViolation]:
    """Lexicographically first triple ``a<b<c`` with ac in E and ab not in E."""
    order = check_order(g, order)
    nbr = _position_graph(g, order)
    nbr_sets = [set(x) for x in nbr]
    for a in range(g.n):
        if not nbr[a] or nbr[a][-1] <= a + 1:
            continue
        for b in range(a + 1, nbr[a][-1]):
            if b not in nbr_sets[a]:
                c = next(x for x in nbr[a] if x > b)
                best = (a, b, c)
                return OrderViolation(I_ORDER, tuple(order[i] for i in best), best)
    return None


def rep_from_order(g: Graph, order: Sequence[int]) -> MptRepresentation:
    """Canonical representation from an MPT-order.

    The vertex at 1-based position ``i`` gets point ``i``; its interval runs
    from its leftmost to its rightmost neighbour position (or ``i`` itself).
    """
    violation = verify_mpt_order(g, order)
    if violation is not None:
        raise OrderViolationError(violation)
    pos = _positions(order)
    items = []
    for v in range(g.n):
        i = pos[v] + 1
        around = [pos[w] + 1 for w in g.adj[v]] + [i]
        items.append(PointedInterval(min(around), i, max(around)))
    return MptRepresentation(tuple(items))


def order_from_rep(rep: MptRepresentation) -> tuple:
    """Vertices sorted by ``(p, index)``."""
    return tuple(sorted(range(len(rep)), key=lambda v: (rep.items[v].p, v)))


def brute_force_mpt_order(g: Graph, limit: int = ORDER_LIMIT) -> Optional[tuple]:
    """Search every vertex order for an MPT-order.

    Candidates at each position are tried by ascending ``(degree, id)``, so
    the result is the least valid order in that ranking.  A prefix is cut as
    soon as it forces a violation: once ``u < v < w`` are placed with uw in
    E and vw not in E, the vertex ``v`` must not have any unplaced neighbour.
    """
    if g.n > limit:
        raise OracleLimitError("brute_force_mpt_order", g.n, limit)
    n = g.n
    masks = g.masks
    ranking = sorted(range(n), key=lambda v: (g.degree(v), v))
    prefix: list = []

    def rec(unplaced: int, blocked_nbrs: int, blocked: int) -> bool:
        if not unplaced:
            return True
        for w in ranking:
            bit = 1 << w
            if not unplaced & bit or blocked_nbrs & bit:
                continue
            rest = unplaced ^ bit
            new_blocked = blocked
            new_nbrs = blocked_nbrs
            first = next((i for i, u in enumerate(prefix) if masks[w] >> u & 1), None)
            if first is not None:
                for v in prefix[first + 1:]:
                    if not masks[w] >> v & 1 and not new_blocked >> v & 1:
                        new_blocked |= 1 << v
                        new_nbrs |= masks[v]
            if new_nbrs & rest:
                continue
            prefix.append(w)
            if rec(rest, new_nbrs, new_blocked):
                return True
            prefix.pop()
        return False

    if rec((1 << n) - 1, 0, 0):
        return tuple(prefix)
    return None


def two_interval_decomposition(rep: MptRepresentation) -> tuple:
    """Split the edge set as the intersection of two interval graphs.

    ``H1`` uses ``[p, e]`` (the horizontal legs pushed right without bound)
    and ``H2`` uses ``[s, p]`` (the vertical legs pushed up without bound).
    Sorting by point is an I-order of ``H1``; its reverse is one of ``H2``.
    """
    h1 = IntervalRepresentation(tuple((it.p, it.e) for it in rep.items))
    h2 = IntervalRepresentation(tuple((it.s, it.p) for it in rep.items))
    return h1, h2
