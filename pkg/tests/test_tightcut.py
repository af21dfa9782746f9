"""Tight cuts, contractions, the brace decomposition and splicing."""

import random

import pytest

from matchperm.errors import InputError
from matchperm.graph import is_isomorphic
from matchperm.oracle import count_perfect_matchings_oracle
from matchperm.tightcut import (contract_shore, contract_with_map,
                                find_nontrivial_tight_cut, four_cycle_sum,
                                is_tight_cut, splice_with_maps,
                                tight_cut_decomposition)

from conftest import (complete_graph, cycle_graph, random_matching_covered)


def test_is_tight_cut_on_c6(c6):
    # a shore of three consecutive cycle vertices gives a tight cut
    found = find_nontrivial_tight_cut(c6)
    assert found is not None
    assert is_tight_cut(c6, found)


def test_no_tight_cut_in_braces(c4, k33):
    assert find_nontrivial_tight_cut(c4) is None
    assert find_nontrivial_tight_cut(k33) is None


def test_is_tight_cut_rejects_even_shore(c6):
    assert not is_tight_cut(c6, [0, 3])


def test_contract_majority_colour(c6):
    shore = find_nontrivial_tight_cut(c6)
    h, old = contract_with_map(c6, shore)
    assert h.n == c6.n - len(shore) + 1
    assert old.count(None) == 1


def test_contract_shore_validates(c4):
    with pytest.raises(InputError):
        contract_shore(c4, [0])  # trivial shore


def test_decomposition_c6(c6):
    tree = tight_cut_decomposition(c6)
    braces = tree.braces()
    assert len(braces) == 2
    for b in braces:
        assert is_isomorphic(b, cycle_graph(4))


def test_decomposition_c8():
    tree = tight_cut_decomposition(cycle_graph(8))
    braces = tree.braces()
    assert len(braces) == 3
    for b in braces:
        assert is_isomorphic(b, cycle_graph(4))


def test_decomposition_brace_is_leaf(k33):
    tree = tight_cut_decomposition(k33)
    assert tree.is_leaf()
    assert tree.braces() == [tree.graph]


def test_decomposition_order_invariant_multiset():
    rng_a = random.Random(1)
    rng_b = random.Random(99)
    src = random.Random(5)
    for _ in range(10):
        g = random_matching_covered(src, 6)
        ba = tight_cut_decomposition(g, rng_a).braces()
        bb = tight_cut_decomposition(g, rng_b).braces()
        assert len(ba) == len(bb)
        unmatched = list(bb)
        for x in ba:
            hit = next(i for i, y in enumerate(unmatched)
                       if is_isomorphic(x, y))
            unmatched.pop(hit)
        assert not unmatched


def test_splice_count_is_product_like():
    # splicing two C4s at opposite-colour vertices gives C6
    a = cycle_graph(4)
    b = cycle_graph(4)
    v1, v2 = 0, 2  # black in a, white in b
    cross = [(u, w) for u in sorted(a.adj[v1]) for w in sorted(b.adj[v2])]
    g, m1, m2 = splice_with_maps(a, v1, b, v2, cross)
    assert g.n == 6
    assert count_perfect_matchings_oracle(g) >= 1


def test_splice_validation():
    a = cycle_graph(4)
    b = cycle_graph(4)
    with pytest.raises(InputError):
        splice_with_maps(a, 0, b, 0, [])  # same colour


def test_four_cycle_sum_identifies_cycles():
    a = complete_graph(3, 3)
    b = cycle_graph(4)
    ca = (0, 3, 1, 4)
    cb = (0, 2, 1, 3)
    assert a.is_conformal(())
    g = four_cycle_sum(a, ca, b, cb)
    assert g.n == a.n
    assert g.m >= a.m


def test_four_cycle_sum_rejects_non_cycle():
    a = complete_graph(3, 3)
    b = cycle_graph(4)
    with pytest.raises(InputError):
        four_cycle_sum(a, (0, 3, 1, 5), b, (0, 2, 3, 1))
