"""Brute-force oracles: Ryser permanent and matching enumeration."""

import pytest

from matchperm.errors import ResourceError
from matchperm.oracle import (biadjacency, count_perfect_matchings_oracle,
                              enumerate_generating_function,
                              enumerate_perfect_matchings, ryser_permanent)
from matchperm.poly import Poly

from conftest import complete_graph, cube_graph, cycle_graph


def test_ryser_known_values():
    assert ryser_permanent([[1] * 3] * 3) == 6
    assert ryser_permanent([[1, 0], [0, 1]]) == 1
    assert ryser_permanent(biadjacency(cycle_graph(6))) == 2
    assert ryser_permanent([[1] * 5] * 5) == 120


def test_ryser_bound():
    with pytest.raises(ResourceError):
        ryser_permanent([[1] * 30] * 30)


def test_enumeration_counts():
    assert count_perfect_matchings_oracle(cycle_graph(6)) == 2
    assert count_perfect_matchings_oracle(complete_graph(4, 4)) == 24
    assert count_perfect_matchings_oracle(cube_graph()) == 9
    g = complete_graph(2, 1)
    assert count_perfect_matchings_oracle(g) == 0


def test_enumeration_yields_valid_matchings():
    for m in enumerate_perfect_matchings(complete_graph(3, 3)):
        used = [u for e in m for u in e]
        assert sorted(used) == list(range(6))
        assert m == sorted(m)


def test_generating_function_unit_labels():
    c4 = cycle_graph(4)
    gf = enumerate_generating_function(c4)
    assert gf == Poly([0, 0, 2])  # 2x^2


def test_generating_function_heawood_consistency():
    from matchperm.generators import make

    hw = make("heawood", []).graph
    gf = enumerate_generating_function(hw)
    count = ryser_permanent(biadjacency(hw))
    assert gf == Poly([0] * 7 + [count])


def test_generating_function_no_pm_is_zero():
    g = complete_graph(2, 1)
    assert enumerate_generating_function(g).is_zero()


def test_generating_function_custom_labels():
    c4 = cycle_graph(4)
    labels = {}
    for i, e in enumerate(c4.edges):
        labels[e] = Poly.x_power(i + 1)
    gf = enumerate_generating_function(c4, labels)
    # the two matchings pick complementary edge pairs of the cycle
    assert gf(1) == 2
    assert sum(gf.coeffs) == 2
