"""Bipartite graph container, matchings, conformality and components."""

import pytest

from matchperm.errors import InputError
from matchperm.graph import (BipartiteGraph, elementary_components,
                             internally_conformal_paths, is_isomorphic)

from conftest import complete_graph, cycle_graph


def test_construction_and_edge_validation():
    g = BipartiteGraph(2, 2, [(0, 2), (1, 3)])
    assert g.n == 4 and g.m == 2
    assert g.has_edge(0, 2) and not g.has_edge(0, 3)
    with pytest.raises(InputError):
        g.add_edge(0, 1)  # both black
    with pytest.raises(InputError):
        g.add_edge(2, 3)  # both white
    g.add_edge(0, 3)
    g.add_edge(0, 3)  # duplicate is ignored
    assert g.m == 3


def test_colour_helpers():
    g = BipartiteGraph(2, 3)
    assert list(g.blacks()) == [0, 1]
    assert list(g.whites()) == [2, 3, 4]
    assert g.is_black(0) and not g.is_black(4)


def test_maximum_matching_and_pm():
    g = complete_graph(3, 3)
    m = g.maximum_matching()
    assert len(m) == 6  # both directions stored
    assert g.has_perfect_matching()
    pm = g.find_perfect_matching()
    assert len(pm) == 3
    assert {u for e in pm for u in e} == set(range(6))


def test_no_pm_when_unbalanced():
    g = BipartiteGraph(2, 1, [(0, 2), (1, 2)])
    assert g.find_perfect_matching() is None
    assert not g.has_perfect_matching()


def test_conformal_and_admissible(c6):
    # removing an adjacent black-white pair keeps a perfect matching
    assert c6.is_conformal([0, 3])
    assert c6.is_admissible(0, 3)
    # C6 minus two opposite same-colour vertices has none
    assert not c6.is_conformal([0, 1])


def test_components_and_induced():
    g = BipartiteGraph(2, 2, [(0, 2), (1, 3)])
    comps = g.components()
    assert sorted(map(sorted, comps)) == [[0, 2], [1, 3]]
    sub, old = g.induced([1, 3])
    assert sub.n == 2 and sub.m == 1
    assert old == [1, 3]
    assert not g.is_connected()


def test_elementary_components_restrict_to_admissible():
    # path P4: middle edge is in no perfect matching
    g = BipartiteGraph(2, 2, [(0, 2), (2, 1), (1, 3)])
    comps, dag = elementary_components(g)
    sizes = sorted(c[0].n for c in comps)
    assert sizes == [2, 2]
    # inadmissible middle edge induces one dependency between the parts
    assert len(dag) == 1


def test_elementary_components_connected_brace(k33):
    comps, dag = elementary_components(k33)
    assert len(comps) == 1 and comps[0][0].n == 6
    assert dag == []


def test_internally_conformal_paths(c6):
    matching = c6.find_perfect_matching()
    partner = {u: v for u, v in matching}
    b = matching[0][0]
    assert internally_conformal_paths(c6, matching, b, partner[b], 1)


def test_is_isomorphic(c4):
    assert is_isomorphic(c4, complete_graph(2, 2))
    assert not is_isomorphic(c4, BipartiteGraph(2, 2, [(0, 2), (1, 3)]))


def test_copy_independent():
    g = BipartiteGraph(2, 2, [(0, 2), (1, 3)])
    h = g.copy()
    h.add_edge(0, 3)
    assert h.m == 3 and g.m == 2
