"""Interval recognition and certificates that refute MPT membership."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import networkx as nx

from .errors import InputError, OracleLimitError
from .graph import (
    Graph,
    complement_cycle,
    family,
    full_subdivision,
    graph_from_edge_list,
    induced_subgraph,
    k222,
    universal_extension,
)
from .orders import ORDER_LIMIT, brute_force_mpt_order, verify_i_order
from .representations import MptRepresentation, mpt_adjacency

OUTERPLANAR_LIMIT = 64

CYCLE, ASTEROIDAL = "chordless-cycle", "asteroidal-triple"


@dataclass(frozen=True)
class IntervalVerdict:
    is_interval: bool
    witness: tuple = ()  # chordless cycle in cyclic order, or an asteroidal triple
    witness_kind: Optional[str] = None
    i_order: Optional[tuple] = None


# --- chordality --------------------------------------------------------------

def _mcs_order(g: Graph) -> list:
    """Maximum cardinality search; returns the visit order."""
    weight = [0] * g.n
    seen = [False] * g.n
    visit = []
    for _ in range(g.n):
        v = max((x for x in range(g.n) if not seen[x]), key=lambda x: (weight[x], -x))
        seen[v] = True
        visit.append(v)
        for w in g.adj[v]:
            if not seen[w]:
                weight[w] += 1
    return visit


def _path_avoiding(g: Graph, a: int, b: int, banned: set) -> Optional[list]:
    """Shortest a-b path whose inner vertices avoid ``banned``."""
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in sorted(g.adj[x]):
            if y not in prev and (y == b or y not in banned):
                prev[y] = x
                queue.append(y)
    return None


def _hole_through(g: Graph, v: int, a: int, b: int) -> Optional[tuple]:
    banned = (set(g.adj[v]) | {v}) - {a, b}
    p = _path_avoiding(g, a, b, banned)
    return None if p is None else (v,) + tuple(p)


def chordless_cycle(g: Graph) -> Optional[tuple]:
    """A chordless cycle of length >= 4, or ``None`` when ``g`` is chordal."""
    elim = _mcs_order(g)[::-1]
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = sorted((w for w in g.adj[v] if pos[w] > pos[v]), key=pos.get)
        if not later:
            continue
        u = later[0]
        for w in later[1:]:
            if not g.has_edge(u, w):
                hole = _hole_through(g, v, u, w)
                if hole is not None:
                    return hole
                return _any_hole(g)
    return None


def _any_hole(g: Graph) -> Optional[tuple]:
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if not g.has_edge(a, b):
                    hole = _hole_through(g, v, a, b)
                    if hole is not None:
                        return hole
    return None


# --- asteroidal triples ------------------------------------------------------

def _components_outside(g: Graph, x: int) -> list:
    """Component label of every vertex in G - N[x]; -1 inside N[x]."""
    label = [-1] * g.n
    closed = set(g.adj[x]) | {x}
    count = 0
    for s in range(g.n):
        if s in closed or label[s] >= 0:
            continue
        label[s] = count
        stack = [s]
        while stack:
            y = stack.pop()
            for z in g.adj[y]:
                if z not in closed and label[z] < 0:
                    label[z] = count
                    stack.append(z)
        count += 1
    return label


def asteroidal_triple(g: Graph) -> Optional[tuple]:
    """Lexicographically first asteroidal triple, or ``None``."""
    comp = [_components_outside(g, x) for x in range(g.n)]

    def joined(x, a, b):
        return comp[x][a] >= 0 and comp[x][a] == comp[x][b]

    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                continue
            for c in range(b + 1, g.n):
                if joined(c, a, b) and joined(a, b, c) and joined(b, a, c):
                    return (a, b, c)
    return None


# --- I-orders ---------------------------------------------------------------

def _lexbfs(g: Graph, prev: Optional[list] = None) -> list:
    """LexBFS; ties go to the vertex latest in ``prev`` (LexBFS+), else smallest id."""
    rank = {v: i for i, v in enumerate(prev)} if prev else {v: -v for v in range(g.n)}
    label = [[] for _ in range(g.n)]
    done = [False] * g.n
    out = []
    for step in range(g.n):
        v = max((x for x in range(g.n) if not done[x]), key=lambda x: (label[x], rank[x]))
        done[v] = True
        out.append(v)
        for w in g.adj[v]:
            if not done[w]:
                label[w].append(g.n - step)
    return out


def _search_i_order(g: Graph) -> Optional[tuple]:
    """Exact search: whether a vertex may come next depends only on the placed set."""
    masks = g.masks
    full = (1 << g.n) - 1

    @lru_cache(maxsize=None)
    def rec(placed: int) -> Optional[tuple]:
        if placed == full:
            return ()
        rest = full ^ placed
        # placed vertices that still have unplaced neighbours
        open_ = [a for a in range(g.n) if placed >> a & 1 and masks[a] & rest]
        for b in range(g.n):
            if not rest >> b & 1:
                continue
            remaining = rest ^ (1 << b)
            if any(masks[a] & remaining and not masks[a] >> b & 1 for a in open_):
                continue
            tail = rec(placed | 1 << b)
            if tail is not None:
                return (b,) + tail
        return None

    return rec(0)


def find_i_order(g: Graph) -> Optional[tuple]:
    order = None
    for _ in range(max(1, g.n)):
        order = _lexbfs(g, order)
        if verify_i_order(g, order) is None:
            return tuple(order)
    for cand in (order[::-1],):
        if verify_i_order(g, cand) is None:
            return tuple(cand)
    return _search_i_order(g)


def is_interval_graph(g: Graph) -> IntervalVerdict:
    """Interval iff chordal and free of asteroidal triples."""
    hole = chordless_cycle(g)
    if hole is not None:
        return IntervalVerdict(False, hole, CYCLE)
    triple = asteroidal_triple(g)
    if triple is not None:
        return IntervalVerdict(False, triple, ASTEROIDAL)
    order = find_i_order(g)
    if order is None or verify_i_order(g, order) is not None:
        raise AssertionError("chordal AT-free graph without an I-order")
    return IntervalVerdict(True, i_order=order)


# --- MPT certificates --------------------------------------------------------

COMMON_NEIGHBORHOOD, ORDER_FOUND, ORDER_EXHAUSTED = (
    "common-neighborhood",
    "order-found",
    "order-exhausted",
)


@dataclass(frozen=True)
class MptCertificate:
    kind: str
    pair: Optional[tuple] = None
    verdict: Optional[IntervalVerdict] = None  # witness given in ids of the host graph
    order: Optional[tuple] = None

    def line(self) -> str:
        if self.kind == COMMON_NEIGHBORHOOD:
            u, v = self.pair
            w = ",".join(map(str, self.verdict.witness))
            return f"PAIR {u} {v} : NOT-INTERVAL witness={w}"
        if self.kind == ORDER_FOUND:
            return "ORDER " + " ".join(map(str, self.order))
        return "ORDER-SEARCH exhausted"


def common_neighborhood_certificates(g: Graph) -> list:
    """Non-adjacent pairs whose common neighbourhood induces a non-interval graph."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = sorted(g.adj[u] & g.adj[v])
            if len(common) < 4:
                continue
            verdict = is_interval_graph(induced_subgraph(g, common))
            if not verdict.is_interval:
                witness = tuple(common[x] for x in verdict.witness)
                out.append(
                    MptCertificate(
                        COMMON_NEIGHBORHOOD,
                        (u, v),
                        IntervalVerdict(False, witness, verdict.witness_kind),
                    )
                )
    return out


def check_certificate(g: Graph, cert: MptCertificate) -> bool:
    """Re-check a common-neighbourhood certificate from scratch."""
    u, v = cert.pair
    if g.has_edge(u, v):
        return False
    common = g.adj[u] & g.adj[v]
    w = cert.verdict.witness
    if not set(w) <= common:
        return False
    if cert.verdict.witness_kind == CYCLE:
        k = len(w)
        return k >= 4 and all(
            g.has_edge(w[i], w[j]) == ((j - i) % k in (1, k - 1))
            for i in range(k)
            for j in range(i + 1, k)
        )
    sub = induced_subgraph(g, sorted(common))
    index = {x: i for i, x in enumerate(sorted(common))}
    return asteroidal_triple_holds(sub, *(index[x] for x in w))


def asteroidal_triple_holds(g: Graph, a: int, b: int, c: int) -> bool:
    def joined(x, p, r):
        comp = _components_outside(g, x)
        return comp[p] >= 0 and comp[p] == comp[r]

    return (
        not g.has_edge(a, b)
        and not g.has_edge(b, c)
        and not g.has_edge(a, c)
        and joined(c, a, b)
        and joined(a, b, c)
        and joined(b, a, c)
    )


@dataclass(frozen=True)
class NeighborhoodPartition:
    left: tuple
    right: tuple
    left_verdict: IntervalVerdict
    right_verdict: IntervalVerdict
    cross_edges: tuple


def neighborhood_partition(rep: MptRepresentation, v: int) -> NeighborhoodPartition:
    """Split N(v) by whether the neighbour's point precedes ``p_v``."""
    if not 0 <= v < len(rep):
        raise InputError(f"vertex {v} out of range 0..{len(rep) - 1}")
    g = mpt_adjacency(rep)
    pv = rep.items[v].p
    left = tuple(sorted(w for w in g.adj[v] if rep.items[w].p < pv))
    right = tuple(sorted(w for w in g.adj[v] if rep.items[w].p >= pv))
    cross = tuple((a, b) for a in left for b in right if g.has_edge(a, b))
    return NeighborhoodPartition(
        left,
        right,
        is_interval_graph(induced_subgraph(g, left)),
        is_interval_graph(induced_subgraph(g, right)),
        cross,
    )


# --- outerplanarity ---------------------------------------------------------

def is_outerplanar(g: Graph, limit: int = OUTERPLANAR_LIMIT) -> bool:
    """Outerplanar iff adding one vertex adjacent to everything keeps it planar."""
    if g.n > limit:
        raise OracleLimitError("is_outerplanar", g.n, limit)
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.n + 1))
    h.add_edges_from(g.edges)
    h.add_edges_from((g.n, v) for v in range(g.n))
    planar, _ = nx.check_planarity(h)
    return planar


# --- non-MPT families -------------------------------------------------------

def long_claw() -> Graph:
    return graph_from_edge_list(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def tent() -> Graph:
    """Triangle 0-1-2 with 3 on edge 01, 4 on 12, 5 on 20."""
    return graph_from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]
    )


_EXTRA_BASES = {"long-claw": long_claw, "tent": tent}


def base_graph(ident: str) -> Graph:
    ident = ident.strip()
    if ident in _EXTRA_BASES:
        return _EXTRA_BASES[ident]()
    return family(ident)


_WRAPPED = re.compile(r"^\s*([a-z-]+)\s*\((.*)\)\s*$")


def non_mpt_family(name: str) -> Graph:
    """Graphs that are not MPT: ``k222``, ``complement-cycle(7)``,
    ``universal-extension-of(G)`` for a non-interval ``G`` and
    ``full-subdivision-of(G)`` for a non-outerplanar ``G``."""
    name = name.strip()
    if name == "k222":
        return k222()
    if name.replace(" ", "") == "complement-cycle(7)":
        return complement_cycle(7)
    match = _WRAPPED.match(name)
    if match and match.group(1) == "universal-extension-of":
        base = base_graph(match.group(2))
        if is_interval_graph(base).is_interval:
            raise InputError(f"{match.group(2)} is an interval graph; need a non-interval base")
        return universal_extension(base)
    if match and match.group(1) == "full-subdivision-of":
        base = base_graph(match.group(2))
        if is_outerplanar(base):
            raise InputError(f"{match.group(2)} is outerplanar; need a non-outerplanar base")
        return full_subdivision(base)
    raise InputError(
        f"unknown non-MPT family {name!r}; use k222, complement-cycle(7), "
        "universal-extension-of(G) or full-subdivision-of(G)"
    )


# --- recognition pipeline ---------------------------------------------------

MPT, NOT_MPT, UNKNOWN = "MPT", "NOT-MPT", "UNKNOWN"


@dataclass(frozen=True)
class Recognition:
    verdict: str
    certificates: tuple


def recognize(g: Graph, max_n: int = ORDER_LIMIT) -> Recognition:
    """Cheap certificates first, then the order search when ``n <= max_n``.

    Interval graphs are accepted directly: an I-order is an MPT-order.
    """
    certs = common_neighborhood_certificates(g)
    if certs:
        return Recognition(NOT_MPT, tuple(certs))
    verdict = is_interval_graph(g)
    if verdict.is_interval:
        return Recognition(MPT, (MptCertificate(ORDER_FOUND, order=verdict.i_order),))
    if g.n > max_n:
        return Recognition(UNKNOWN, ())
    order = brute_force_mpt_order(g, limit=max_n)
    if order is None:
        return Recognition(NOT_MPT, (MptCertificate(ORDER_EXHAUSTED),))
    return Recognition(MPT, (MptCertificate(ORDER_FOUND, order=order),))
