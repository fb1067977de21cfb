"""Undirected simple graphs on vertices ``0..n-1`` and the named families."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError

VertexSet = tuple  # sorted tuple of distinct vertex ids


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``.  Neighbourhoods are kept
    both as frozensets and as integer bitmasks; the oracles use the masks.
    """

    n: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)
    masks: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(
            self, "masks", tuple(sum(1 << w for w in s) for s in nbrs)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph_from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; duplicates collapse, pair order is irrelevant."""
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    edges = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise InputError(f"self-loop ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def check_vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    members = tuple(sorted(set(int(v) for v in s)))
    for v in members:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} is not a vertex of a graph with n={g.n}")
    return members


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """G[S]; vertex ``i`` of the result is the ``i``-th smallest member of ``s``."""
    members = check_vertex_set(g, s)
    index = {v: i for i, v in enumerate(members)}
    pairs = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return graph_from_edge_list(len(members), pairs)


def complement(g: Graph) -> Graph:
    return graph_from_edge_list(
        g.n, [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    )


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``."""
    return graph_from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_independent(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple  # tuple of VertexSet

    def __len__(self) -> int:
        return len(self.cliques)

    def validate(self, g: Graph) -> None:
        """Raise ``AssertionError`` unless this is a partition of V into cliques."""
        seen = set()
        for c in self.cliques:
            assert c, "empty clique in cover"
            assert not seen.intersection(c), f"clique {c} overlaps another clique"
            seen.update(c)
            assert is_clique(g, c), f"{c} is not a clique"
        assert seen == set(range(g.n)), "cover does not cover every vertex"


@dataclass(frozen=True)
class Coloring:
    color: tuple  # color[v] in 0..k-1

    @property
    def k(self) -> int:
        return max(self.color) + 1 if self.color else 0

    def classes(self) -> list:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.color):
            out[c].append(v)
        return [tuple(c) for c in out]

    def validate(self, g: Graph) -> None:
        assert len(self.color) == g.n
        for u, v in g.edges:
            assert self.color[u] != self.color[v], f"edge ({u}, {v}) is monochromatic"
        assert all(self.classes()), "a color class in 0..k-1 is empty"


# --- named families -------------------------------------------------------

# The net: triangle 1-3-5 with pendant vertices 0, 2, 4 (v1..v6 -> 0..5).
NET_EDGES = ((0, 1), (1, 3), (1, 5), (3, 5), (2, 3), (4, 5))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return graph_from_edge_list(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    return graph_from_edge_list(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complement_cycle(n: int) -> Graph:
    return complement(cycle(n))


def net() -> Graph:
    return graph_from_edge_list(6, NET_EDGES)


def k222() -> Graph:
    return universal_extension(cycle(4))


_FAMILIES = {
    "net": (0, net),
    "k222": (0, k222),
    "cycle": (1, cycle),
    "path": (1, path),
    "complete": (1, complete),
    "edgeless": (1, edgeless),
    "complement-cycle": (1, complement_cycle),
    "complete-bipartite": (2, complete_bipartite),
}

_FAMILY_ID = re.compile(r"^\s*([a-z0-9-]+)\s*(?:\(\s*([0-9,\s]*)\))?\s*$")


def family_names() -> list:
    return sorted(_FAMILIES)


def parse_family_id(text: str) -> tuple:
    """Split ``"complete-bipartite(2,3)"`` into ``("complete-bipartite", (2, 3))``."""
    match = _FAMILY_ID.match(text)
    if not match:
        raise InputError(f"malformed family id {text!r}")
    name, args = match.group(1), match.group(2)
    params = tuple(int(a) for a in args.split(",") if a.strip()) if args else ()
    return name, params


def family(name: str, *params: int) -> Graph:
    """Deterministic labelled member of a named family.

    ``name`` may carry its parameters inline, e.g. ``family("cycle(5)")``.
    """
    if "(" in name:
        name, inline = parse_family_id(name)
        params = inline + tuple(params)
    if name not in _FAMILIES:
        raise InputError(f"unknown graph family {name!r}; known: {', '.join(family_names())}")
    arity, build = _FAMILIES[name]
    if len(params) != arity:
        raise InputError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return build(*params)


def full_subdivision(g: Graph) -> Graph:
    """Replace every edge ``{u, v}`` by a path ``u - x_uv - v``.

    Subdivision vertices get ids ``n, n+1, ...`` in sorted-edge order.
    """
    pairs = []
    for i, (u, v) in enumerate(g.sorted_edges()):
        x = g.n + i
        pairs.append((u, x))
        pairs.append((x, v))
    return graph_from_edge_list(g.n + g.m, pairs)


def universal_extension(h: Graph) -> Graph:
    """Add two non-adjacent vertices ``n`` and ``n+1`` adjacent to all of ``h``."""
    x, y = h.n, h.n + 1
    pairs = list(h.edges)
    pairs += [(z, v) for z in (x, y) for v in range(h.n)]
    return graph_from_edge_list(h.n + 2, pairs)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic in ``seed``."""
    rng = random.Random(seed)
    return graph_from_edge_list(
        n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    )


def all_graphs(n: int):
    """Yield every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_edge_list(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
