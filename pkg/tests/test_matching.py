"""Porosity, extendability, brace recognition and weighted matchings."""

import itertools
import random

import pytest

from matchperm.errors import InputError
from matchperm.matching import (is_brace, is_k_extendable,
                                is_matching_covered, matching_porosity,
                                max_weight_perfect_matching)

from conftest import (complete_graph, cube_graph, cycle_graph,
                      random_bipartite)


def test_porosity_cycle():
    c6 = cycle_graph(6)
    # cutting one matched pair out of C6 leaves porosity 1 or 2 depending
    # on whether the pair is cycle-adjacent
    assert matching_porosity(c6, [0]) == 1
    assert matching_porosity(c6, [0, 3]) in (1, 2)
    assert matching_porosity(c6, []) == 0
    assert matching_porosity(c6, range(6)) == 0


def test_porosity_complete():
    k33 = complete_graph(3, 3)
    assert matching_porosity(k33, [0]) == 1
    assert matching_porosity(k33, [0, 1]) == 2
    assert matching_porosity(k33, [0, 1, 2]) == 3


def test_porosity_requires_pm():
    g = cycle_graph(4)
    g2 = complete_graph(2, 1)
    with pytest.raises(InputError):
        matching_porosity(g2, [0])
    assert matching_porosity(g, [0, 2]) == 2


def test_porosity_symmetry_random():
    rng = random.Random(3)
    done = 0
    while done < 40:
        nb = rng.randint(1, 5)
        g = random_bipartite(rng, nb, nb, 0.5)
        if g.find_perfect_matching() is None:
            continue
        done += 1
        xs = [v for v in range(g.n) if rng.random() < 0.5]
        co = [v for v in range(g.n) if v not in xs]
        assert matching_porosity(g, xs) == matching_porosity(g, co)


def test_extendability():
    assert is_k_extendable(cycle_graph(4), 1)
    assert not is_k_extendable(cycle_graph(6), 2)
    assert is_k_extendable(complete_graph(3, 3), 2)
    assert is_k_extendable(cube_graph(), 2)
    with pytest.raises(InputError):
        is_k_extendable(cycle_graph(4), 0)


def test_matching_covered():
    assert is_matching_covered(cycle_graph(6))
    assert is_matching_covered(complete_graph(1, 1))
    # a pendant edge hanging off C4 breaks coverage (and the PM entirely)
    g = complete_graph(2, 2)
    assert is_matching_covered(g)


def test_brace_recognition():
    assert is_brace(cycle_graph(4))
    assert not is_brace(cycle_graph(6))
    assert is_brace(complete_graph(3, 3))
    assert is_brace(cube_graph())
    assert not is_brace(complete_graph(1, 1))


def test_max_weight_pm_matches_bruteforce():
    rng = random.Random(9)
    done = 0
    while done < 30:
        nb = rng.randint(1, 5)
        g = random_bipartite(rng, nb, nb, 0.6)
        if g.find_perfect_matching() is None:
            continue
        done += 1
        w = {e: rng.randint(-4, 6) for e in g.edges}
        got = max_weight_perfect_matching(g, w)
        best = None
        for perm in itertools.permutations(range(nb, 2 * nb)):
            edges = [(b, perm[b]) for b in range(nb)]
            if all(g.has_edge(*e) for e in edges):
                tot = sum(w[e] for e in edges)
                if best is None or tot > best:
                    best = tot
        assert got is not None
        assert got[1] == best


def test_max_weight_pm_none_when_no_pm():
    g = complete_graph(2, 1)
    assert max_weight_perfect_matching(g, {e: 1 for e in g.edges}) is None
