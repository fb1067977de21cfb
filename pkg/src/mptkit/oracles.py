"""Exhaustive ground-truth oracles for alpha, chi, gamma and omega.

Every oracle refuses instances above its size limit and breaks ties toward
the lexicographically smallest witness, so results are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import InputError, OracleLimitError
from .graph import CliqueCover, Coloring, Graph, complement

ALPHA_LIMIT = 20
CHI_LIMIT = 12
GAMMA_LIMIT = 12


def as_weights(g: Graph, weights) -> list:
    """Normalise a weight map/sequence to a list of nonnegative exact numbers.

    Integral weights stay ``int`` (much faster than ``Fraction`` in the
    searches); anything else becomes ``Fraction``.
    """
    if weights is None:
        return [1] * g.n
    if isinstance(weights, Mapping):
        values = [weights.get(v, 0) for v in range(g.n)]
    else:
        values = list(weights)
        if len(values) != g.n:
            raise InputError(f"expected {g.n} weights, got {len(values)}")
    out = []
    for v, x in enumerate(values):
        q = Fraction(x)
        if q < 0:
            raise InputError(f"weight of vertex {v} is negative ({q})")
        out.append(int(q) if q.denominator == 1 else q)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_force_alpha(
    g: Graph, weights=None, limit: int = ALPHA_LIMIT
) -> tuple:
    """Maximum (weight) independent set by branch and bound.

    Returns ``(value, vertex_tuple)``; among optimal sets the lexicographically
    smallest sorted tuple is returned.
    """
    if g.n > limit:
        raise OracleLimitError("brute_force_alpha", g.n, limit)
    w = as_weights(g, weights)
    masks = g.masks
    best_val = -1
    best_set: tuple = ()

    def rec(chosen: tuple, cur, cand: int) -> None:
        nonlocal best_val, best_set
        if cur > best_val or (cur == best_val and chosen < best_set):
            best_val, best_set = cur, chosen
        if not cand:
            return
        bound = cur + sum(w[v] for v in _bits(cand))
        # Everything below this node extends `chosen`, hence is lex-larger
        # than `chosen`; a tie only helps if `chosen` precedes the incumbent.
        if bound < best_val or (bound == best_val and best_set <= chosen):
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        rec(chosen + (v,), cur + w[v], rest & ~masks[v])
        rec(chosen, cur, rest)

    rec((), 0, (1 << g.n) - 1)
    return Fraction(best_val), best_set


def brute_force_omega(g: Graph, limit: int = ALPHA_LIMIT) -> tuple:
    """Maximum clique as ``(size, vertex_tuple)``."""
    value, witness = brute_force_alpha(complement(g), None, limit)
    return int(value), witness


def k_coloring(g: Graph, k: int) -> Optional[Coloring]:
    """Lexicographically first k-coloring in canonical form, or ``None``.

    Canonical form: vertex ``v`` may only open color ``max(color[:v]) + 1``,
    which fixes vertex 0 to color 0 and removes color-permutation symmetry.
    No size limit is applied here; callers enforce their own.
    """
    n = g.n
    if n == 0:
        return Coloring(())
    if k <= 0:
        return None
    earlier = [[u for u in g.adj[v] if u < v] for v in range(n)]
    color = [-1] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        taken = {color[u] for u in earlier[v]}
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            color[v] = c
            if rec(v + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    if rec(0, 0):
        return Coloring(tuple(color))
    return None


def brute_force_chi(g: Graph, k: int, limit: int = CHI_LIMIT) -> bool:
    """Decide k-colorability exhaustively."""
    if g.n > limit:
        raise OracleLimitError("brute_force_chi", g.n, limit)
    return k_coloring(g, k) is not None


def brute_force_chi_exact(g: Graph, limit: int = CHI_LIMIT) -> int:
    return brute_force_coloring(g, limit).k


def brute_force_coloring(g: Graph, limit: int = CHI_LIMIT) -> Coloring:
    """An optimal coloring (smallest k, then lexicographically first)."""
    if g.n > limit:
        raise OracleLimitError("brute_force_chi_exact", g.n, limit)
    k = 0
    while True:
        found = k_coloring(g, k)
        if found is not None:
            return found
        k += 1


def brute_force_gamma(g: Graph, limit: int = GAMMA_LIMIT) -> tuple:
    """Minimum clique cover as ``(count, CliqueCover)`` via coloring the complement."""
    if g.n > limit:
        raise OracleLimitError("brute_force_gamma", g.n, limit)
    coloring = brute_force_coloring(complement(g), limit)
    cover = CliqueCover(tuple(coloring.classes()))
    return len(cover), cover


def weight_of(weights: Sequence, vs) -> Fraction:
    return Fraction(sum(weights[v] for v in vs))
