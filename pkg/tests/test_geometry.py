from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mptkit.errors import InputError, OrderViolationError, PreconditionError
from mptkit.geometry import (
    RationalPoint,
    Segment,
    contact_lsystem_from_outerplanar,
    cyclic_segments_from_order,
    cyclic_segments_from_rep,
    outerplanar_order,
    point_segment,
    random_maximal_outerplanar,
    segment_intersection_graph,
    segments_intersect,
    tangent_crossing,
    verify_contact,
)
from mptkit.graph import complete, edgeless, graph_from_edge_list, net, path
from mptkit.orders import brute_force_mpt_order, order_from_rep
from mptkit.representations import NET_LSYSTEM, LinearLSystem, lsystem_adjacency, mpt_adjacency

from strategies import canonical_reps, raw_reps


def test_tangent_crossing_formula():
    assert tangent_crossing(1, 2) == RationalPoint(Fraction(3, 2), 2)
    for a in range(1, 101):
        for b in range(a + 1, 101):
            p = tangent_crossing(a, b)
            # the point lies on both tangent lines y = 2tx - t^2
            assert p.y == 2 * a * p.x - a * a == 2 * b * p.x - b * b
            assert (p.x, p.y) == (Fraction(a + b, 2), a * b)


def test_segment_predicates():
    s = Segment((0, 0), (2, 0))
    assert segments_intersect(s, Segment((2, 0), (3, 5)))  # shared endpoint
    assert not segments_intersect(s, Segment((0, 1), (2, 1)))  # parallel
    assert segments_intersect(s, Segment((1, -1), (1, 1)))  # proper crossing
    assert segments_intersect(s, Segment((1, 0), (5, 0)))  # collinear overlap
    assert not segments_intersect(s, Segment((3, 0), (5, 0)))  # collinear apart
    assert segments_intersect(s, point_segment((1, 0)))
    assert not segments_intersect(s, point_segment((1, 1)))
    with pytest.raises(InputError):
        Segment((1, 1), (1, 1))


def test_isolated_vertex_is_a_point():
    cs = cyclic_segments_from_order(edgeless(3), (0, 1, 2))
    seg = cs.segments[1]
    assert seg.degenerate and seg.a == RationalPoint(2, 4)
    assert segment_intersection_graph(cs.segments).m == 0


def test_net_segments():
    g = net()
    cs = cyclic_segments_from_order(g, brute_force_mpt_order(g))
    assert len(cs) == 6
    assert segment_intersection_graph(cs.segments) == g


def test_segments_need_a_valid_order():
    g = graph_from_edge_list(4, [(0, 2), (1, 3)])
    with pytest.raises(OrderViolationError):
        cyclic_segments_from_order(g, (0, 1, 2, 3))


@given(canonical_reps(max_n=25))
def test_segments_contain_their_tangency_point(rep):
    cs = cyclic_segments_from_rep(rep)
    for seg, touch in zip(cs.segments, cs.tangency_points):
        i = touch.x
        for p in (seg.a, seg.b):
            assert p.y == 2 * i * p.x - i * i
        assert min(seg.a.x, seg.b.x) <= i <= max(seg.a.x, seg.b.x)
    assert segment_intersection_graph(cs.segments) == mpt_adjacency(rep)


@given(raw_reps())
def test_segments_from_any_order(rep):
    g = mpt_adjacency(rep)
    cs = cyclic_segments_from_order(g, order_from_rep(rep))
    assert segment_intersection_graph(cs.segments) == g


def test_outerplanar_order_examples():
    order, attach = outerplanar_order(complete(3))
    assert order == (0, 1, 2) and attach == {2: (0, 1)}
    fan = graph_from_edge_list(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
    order, attach = outerplanar_order(fan)
    assert sorted(order) == list(range(5)) and len(attach) == 3
    with pytest.raises(PreconditionError):
        outerplanar_order(complete(4))
    k113 = graph_from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)])
    with pytest.raises(PreconditionError):
        outerplanar_order(k113)
    with pytest.raises(PreconditionError):
        outerplanar_order(path(4))


def test_contact_examples():
    k2 = contact_lsystem_from_outerplanar(complete(2))
    assert [s for s in k2.lsystem().triples()] == [(-1, 0, 1), (0, 1, 2)]
    assert [(c.u, c.v, tuple(c.point)) for c in k2.contacts] == [(0, 1, (1, 0))]
    tri = contact_lsystem_from_outerplanar(complete(3))
    assert tri.shapes[2].r == 1 and tri.shapes[2].c == Fraction(1, 2) and tri.shapes[2].t == 0
    points = {tuple(c.point) for c in tri.contacts}
    assert (Fraction(1, 2), 0) in points and (1, Fraction(-1, 2)) in points


def _on_shape(shape, p):
    x, y = p
    vertical = x == shape.c and -shape.c <= y <= -shape.t
    horizontal = y == -shape.c and shape.c <= x <= shape.r
    return vertical or horizontal


def _endpoints(shape):
    return {shape.top, shape.right}


@given(st.integers(2, 60), st.integers(0, 10**6))
def test_contact_construction(n, seed):
    g = random_maximal_outerplanar(n, seed)
    cs = contact_lsystem_from_outerplanar(g)
    sys = cs.lsystem()
    assert lsystem_adjacency(sys) == g
    check = verify_contact(cs)
    assert check.ok and check.equilateral
    for s in cs.shapes:
        assert s.c - s.t == s.r - s.c
        assert s.corner == (s.c, -s.c)
        assert Fraction(s.c).denominator & (Fraction(s.c).denominator - 1) == 0  # dyadic
    assert len(cs.contacts) == g.m
    for c in cs.contacts:
        a, b = cs.shapes[c.u], cs.shapes[c.v]
        p = tuple(c.point)
        assert _on_shape(a, p) and _on_shape(b, p)
        assert p in _endpoints(a) | _endpoints(b)


@given(st.integers(3, 30), st.integers(0, 10**6), st.floats(0.2, 0.9))
def test_contact_for_outerplanar_subgraphs(n, seed, keep):
    import random

    tri = random_maximal_outerplanar(n, seed)
    rng = random.Random(seed)
    g = graph_from_edge_list(n, [e for e in tri.sorted_edges() if rng.random() < keep])
    cs = contact_lsystem_from_outerplanar(g, tri)
    assert lsystem_adjacency(cs.lsystem()) == g
    assert verify_contact(cs).ok


def test_verify_contact_examples():
    check = verify_contact(NET_LSYSTEM)
    assert not check.ok and check.violation is not None
    assert verify_contact(LinearLSystem(((0, 1, 2),))).ok


def circle_outerplanar(g):
    """Some cyclic order of V draws every edge as a chord without crossings."""
    if g.n <= 3:
        return True
    edges = g.sorted_edges()
    for rest in permutations(range(1, g.n)):
        pos = {v: i for i, v in enumerate((0,) + rest)}
        chords = [tuple(sorted((pos[u], pos[v]))) for u, v in edges]
        if not any(
            a < c < b < d or c < a < d < b
            for i, (a, b) in enumerate(chords)
            for c, d in chords[i + 1:]
        ):
            return True
    return False


def test_is_outerplanar_against_circle_oracle():
    from mptkit.certificates import is_outerplanar
    from mptkit.graph import complete_bipartite, random_graph

    assert not is_outerplanar(complete(4))
    assert not is_outerplanar(complete_bipartite(2, 3))
    for seed in range(120):
        g = random_graph(3 + seed % 5, 0.45, seed)
        assert is_outerplanar(g) == circle_outerplanar(g), seed
    for seed in range(30):
        assert is_outerplanar(random_maximal_outerplanar(5 + seed, seed))
