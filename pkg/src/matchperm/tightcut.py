"""Tight cuts, the decomposition into braces, and splice/4-cycle-sum glue."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Optional

from .errors import InputError
from .graph import BipartiteGraph
from .matching import (is_matching_covered, max_weight_perfect_matching)


def is_tight_cut(g: BipartiteGraph, x: Iterable[int],
                 check_covered: bool = True) -> bool:
    """True iff every perfect matching crosses the cut around x exactly once.

    Decided by two assignment runs: the maximum and the minimum number of
    cut edges used by a perfect matching must both equal 1.
    """
    xs = set(x)
    if check_covered and not is_matching_covered(g):
        raise InputError("graph is not matching covered")
    if not xs or len(xs) >= g.n:
        return False
    if len(xs) % 2 == 0:
        return False
    weights = {}
    for u, v in g.edges:
        if (u in xs) != (v in xs):
            weights[(u, v)] = 1
    hi = max_weight_perfect_matching(g, weights)
    if hi is None or hi[1] != 1:
        return False
    lo = max_weight_perfect_matching(g, {e: -w for e, w in weights.items()})
    return lo is not None and lo[1] == -1


def is_trivial_shore(g: BipartiteGraph, x: Iterable[int]) -> bool:
    xs = set(x)
    return len(xs) <= 1 or len(xs) >= g.n - 1


def _alternating_reachable(g: BipartiteGraph, pair: dict,
                           removed: set, start: int) -> set:
    """Black vertices reachable from an unmatched black by alternating paths
    in g minus `removed` (forward on any edge, back on matching edges)."""
    blacks = {start}
    queue = [start]
    seen_white = set()
    while queue:
        b = queue.pop()
        for w in g.adj[b]:
            if w in removed or w in seen_white:
                continue
            seen_white.add(w)
            b2 = pair.get(w)
            if b2 is not None and b2 not in blacks:
                blacks.add(b2)
                queue.append(b2)
    return blacks


def find_nontrivial_tight_cut(g: BipartiteGraph,
                              rng: Optional[random.Random] = None
                              ) -> Optional[frozenset]:
    """A shore of a non-trivial tight cut, or None iff g is a brace.

    Locates a pair (S1, S2) whose removal leaves no perfect matching, takes
    the Hall violator reachable from an unmatched vertex, and closes it
    under neighbourhoods; the candidate is verified before being returned.
    """
    if not is_matching_covered(g):
        raise InputError("graph is not matching covered")
    if g.n < 6:
        return None
    blacks = list(g.blacks())
    whites = list(g.whites())
    pairs = [(s1, s2) for s1 in combinations(blacks, 2)
             for s2 in combinations(whites, 2)]
    if rng is not None:
        rng.shuffle(pairs)
    for s1, s2 in pairs:
        removed = set(s1) | set(s2)
        if g.has_perfect_matching(removed):
            continue
        pair = g.maximum_matching(removed)
        for side_black in (True, False):
            if side_black:
                unmatched = [b for b in blacks
                             if b not in removed and b not in pair]
                adj_removed = set(s2)
            else:
                unmatched = [w for w in whites
                             if w not in removed and w not in pair]
                adj_removed = set(s1)
            for u0 in unmatched:
                a = _alternating_reachable(g, pair, removed | adj_removed, u0)
                nbhd = set()
                for b in a:
                    nbhd |= g.adj[b]
                if len(nbhd) != len(a) + 1:
                    continue
                shore = frozenset(a | nbhd)
                if is_trivial_shore(g, shore):
                    continue
                if is_tight_cut(g, shore, check_covered=False):
                    return shore
    return None


def _majority_colour_black(g: BipartiteGraph, xs: set) -> bool:
    nb = sum(1 for v in xs if g.is_black(v))
    return nb > len(xs) - nb


def contract_with_map(g: BipartiteGraph, x: Iterable[int]):
    """Contract the vertex set x to a single vertex of its majority colour.

    Returns (graph, old_ids) where old_ids[new_id] is the original vertex
    or None for the contraction vertex.
    """
    xs = set(x)
    rest_black = sorted(v for v in range(g.n_black) if v not in xs)
    rest_white = sorted(v for v in g.whites() if v not in xs)
    star_black = _majority_colour_black(g, xs)
    if star_black:
        old_ids = rest_black + [None] + rest_white
        nb = len(rest_black) + 1
        star = len(rest_black)
    else:
        old_ids = rest_black + rest_white + [None]
        nb = len(rest_black)
        star = len(old_ids) - 1
    new_of = {old: i for i, old in enumerate(old_ids) if old is not None}
    out = BipartiteGraph(nb, len(old_ids) - nb)
    for u, v in g.edges:
        iu = new_of.get(u, star)
        iv = new_of.get(v, star)
        if iu != iv:
            out.add_edge(min(iu, iv), max(iu, iv))
    return out, old_ids


def contract_shore(g: BipartiteGraph, x: Iterable[int]) -> BipartiteGraph:
    """Tight-cut contraction of a non-trivial shore."""
    xs = set(x)
    if is_trivial_shore(g, xs):
        raise InputError("shore is trivial")
    if not is_tight_cut(g, xs):
        raise InputError("not a tight cut")
    return contract_with_map(g, xs)[0]


class TightCutTree:
    """Recursive record of a tight cut decomposition.

    A leaf holds a brace.  An internal node holds the graph, a chosen
    non-trivial shore, and the two cut contractions as children, each with
    the map from child ids back to this node's ids (None marks the
    contraction vertex).
    """

    def __init__(self, graph: BipartiteGraph, shore=None, children=None,
                 child_maps=None):
        self.graph = graph
        self.shore = shore
        self.children = children or []
        self.child_maps = child_maps or []

    def is_leaf(self) -> bool:
        return not self.children

    def braces(self) -> list[BipartiteGraph]:
        if self.is_leaf():
            return [self.graph]
        out = []
        for c in self.children:
            out.extend(c.braces())
        return out


def tight_cut_decomposition(g: BipartiteGraph,
                            rng: Optional[random.Random] = None
                            ) -> TightCutTree:
    """Decompose a matching covered bipartite graph into braces."""
    if not is_matching_covered(g):
        raise InputError("graph is not matching covered")
    return _decompose(g, rng)


def _decompose(g: BipartiteGraph, rng) -> TightCutTree:
    shore = find_nontrivial_tight_cut(g, rng)
    if shore is None:
        return TightCutTree(g)
    complement = frozenset(set(range(g.n)) - shore)
    g1, map1 = contract_with_map(g, complement)  # shore side kept
    g2, map2 = contract_with_map(g, shore)
    c1 = _decompose(g1, rng)
    c2 = _decompose(g2, rng)
    return TightCutTree(g, shore, [c1, c2], [map1, map2])


def splice_with_maps(g1: BipartiteGraph, v1: int, g2: BipartiteGraph,
                     v2: int, cross: Iterable[tuple[int, int]]):
    """Splice g1 - v1 with g2 - v2 along `cross`.

    `cross` lists pairs (a, b) with a a neighbour of v1 and b a neighbour
    of v2; every neighbour of v1 and of v2 must occur in some pair.
    Returns (graph, map1, map2) with maps from original to new ids.
    """
    if g1.is_black(v1) == g2.is_black(v2):
        raise InputError("splice vertices must have opposite colours")
    cross = list(cross)
    n1, n2 = set(g1.adj[v1]), set(g2.adj[v2])
    for a, b in cross:
        if a not in n1 or b not in n2:
            raise InputError("cross pair %r not between the neighbourhoods"
                             % ((a, b),))
    if {a for a, _ in cross} != n1 or {b for _, b in cross} != n2:
        raise InputError("cross edges must cover both neighbourhoods")
    keep1 = [x for x in range(g1.n) if x != v1]
    keep2 = [x for x in range(g2.n) if x != v2]
    blacks = ([(1, x) for x in keep1 if g1.is_black(x)]
              + [(2, x) for x in keep2 if g2.is_black(x)])
    whites = ([(1, x) for x in keep1 if not g1.is_black(x)]
              + [(2, x) for x in keep2 if not g2.is_black(x)])
    ids = {key: i for i, key in enumerate(blacks + whites)}
    out = BipartiteGraph(len(blacks), len(whites))
    for u, v in g1.edges:
        if v1 not in (u, v):
            out.add_edge(*sorted((ids[(1, u)], ids[(1, v)])))
    for u, v in g2.edges:
        if v2 not in (u, v):
            out.add_edge(*sorted((ids[(2, u)], ids[(2, v)])))
    for a, b in cross:
        out.add_edge(*sorted((ids[(1, a)], ids[(2, b)])))
    map1 = {x: ids[(1, x)] for x in keep1}
    map2 = {x: ids[(2, x)] for x in keep2}
    return out, map1, map2


def splice(g1: BipartiteGraph, v1: int, g2: BipartiteGraph, v2: int,
           cross: Iterable[tuple[int, int]]) -> BipartiteGraph:
    return splice_with_maps(g1, v1, g2, v2, cross)[0]


def four_cycle_sum(g1: BipartiteGraph, c1: tuple, g2: BipartiteGraph,
                   c2: tuple, forget: Iterable[tuple[int, int]] = ()
                   ) -> BipartiteGraph:
    """Glue g1 and g2 by identifying the conformal 4-cycles c1 and c2.

    c1 and c2 are 4-tuples in cyclic order; c1[i] is identified with c2[i].
    `forget` lists edges of the identified cycle (as position pairs (i, i+1)
    mod 4 or as vertex pairs of g1) to delete afterwards.
    """
    for g, c in ((g1, c1), (g2, c2)):
        if len(set(c)) != 4:
            raise InputError("cycle must have 4 distinct vertices")
        for i in range(4):
            if not g.has_edge(*sorted((c[i], c[(i + 1) % 4]))):
                raise InputError("%r is not a cycle" % (c,))
        if not g.is_conformal(c):
            raise InputError("cycle is not conformal")
    for i in range(4):
        if g1.is_black(c1[i]) != g2.is_black(c2[i]):
            raise InputError("cycle colour patterns do not match")
    ident = {c2[i]: c1[i] for i in range(4)}
    keep2 = [x for x in range(g2.n) if x not in ident]
    blacks = ([(1, x) for x in g1.blacks()]
              + [(2, x) for x in keep2 if g2.is_black(x)])
    whites = ([(1, x) for x in g1.whites()]
              + [(2, x) for x in keep2 if not g2.is_black(x)])
    ids = {key: i for i, key in enumerate(blacks + whites)}
    out = BipartiteGraph(len(blacks), len(whites))
    for u, v in g1.edges:
        out.add_edge(ids[(1, u)], ids[(1, v)])
    for u, v in g2.edges:
        iu = ids[(1, ident[u])] if u in ident else ids[(2, u)]
        iv = ids[(1, ident[v])] if v in ident else ids[(2, v)]
        out.add_edge(*sorted((iu, iv)))
    cycle_new = [ids[(1, c1[i])] for i in range(4)]
    cycle_edges = {tuple(sorted((cycle_new[i], cycle_new[(i + 1) % 4])))
                   for i in range(4)}
    drop = set()
    for a, b in forget:
        if {a, b} <= {0, 1, 2, 3}:
            e = tuple(sorted((cycle_new[a], cycle_new[b])))
        else:
            e = tuple(sorted((ids[(1, a)], ids[(1, b)])))
        if e not in cycle_edges:
            raise InputError("forget edge %r is not on the identified cycle"
                             % ((a, b),))
        drop.add(e)
    if drop:
        trimmed = BipartiteGraph(out.n_black, out.n_white)
        for u, v in out.edges:
            if (u, v) not in drop:
                trimmed.add_edge(u, v)
        return trimmed
    return out
