from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given

from mptkit.errors import InputError, OracleLimitError
from mptkit.graph import complete, cycle, is_clique, is_independent, net, random_graph
from mptkit.oracles import (
    brute_force_alpha,
    brute_force_chi,
    brute_force_chi_exact,
    brute_force_coloring,
    brute_force_gamma,
    brute_force_omega,
)

from strategies import graphs


def test_alpha_examples():
    assert brute_force_alpha(net()) == (3, (0, 2, 4))
    assert brute_force_alpha(complete(5))[0] == 1
    assert brute_force_alpha(cycle(4), (1, 5, 1, 5)) == (10, (1, 3))


def test_alpha_rational_weights_and_rejections():
    value, _ = brute_force_alpha(cycle(4), [Fraction(1, 3), 0, Fraction(1, 3), 0])
    assert value == Fraction(2, 3)
    with pytest.raises(InputError):
        brute_force_alpha(cycle(4), [1, -1, 1, 1])
    with pytest.raises(OracleLimitError):
        brute_force_alpha(complete(21))


def test_chi_examples():
    assert not brute_force_chi(cycle(5), 2)
    assert brute_force_chi(cycle(5), 3)
    assert brute_force_chi_exact(complete(5)) == 5
    assert brute_force_chi_exact(net()) == 3
    for k in range(1, 9):
        assert brute_force_chi_exact(complete(k)) == k


def test_gamma_examples():
    count, cover = brute_force_gamma(net())
    assert count == 3
    cover.validate(net())
    assert brute_force_gamma(complete(4))[0] == 1
    assert brute_force_gamma(cycle(4))[0] == 2


def _subsets(n):
    for k in range(n + 1):
        yield from combinations(range(n), k)


@given(graphs(max_n=7))
def test_alpha_matches_enumeration(g):
    weights = [(3 * v + 1) % 5 for v in range(g.n)]
    best = max(
        (sum(weights[v] for v in s), tuple(-x for x in s))
        for s in _subsets(g.n)
        if is_independent(g, s)
    )
    value, witness = brute_force_alpha(g, weights)
    assert value == best[0]
    # lexicographically smallest among the optimal sets
    optimal = sorted(
        s for s in _subsets(g.n) if is_independent(g, s) and sum(weights[v] for v in s) == value
    )
    assert witness == optimal[0]


@given(graphs(max_n=7))
def test_chi_and_gamma_are_consistent(g):
    coloring = brute_force_coloring(g)
    coloring.validate(g)
    k = coloring.k
    assert k == 0 or not brute_force_chi(g, k - 1)
    omega, clique = brute_force_omega(g)
    assert is_clique(g, clique) and omega <= max(k, 0 if g.n == 0 else 1)
    gamma, cover = brute_force_gamma(g)
    cover.validate(g)
    assert gamma >= brute_force_alpha(g)[0]


def test_gamma_at_least_alpha_on_random_graphs():
    for seed in range(40):
        g = random_graph(4 + seed % 9, 0.5, seed)
        assert brute_force_gamma(g)[0] >= brute_force_alpha(g)[0]
