"""Quantitative matching structure: porosity, extendability, braces."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import InputError
from .graph import BipartiteGraph

_BIG = None  # computed per call


def max_weight_perfect_matching(g: BipartiteGraph, weights: dict
                                ) -> Optional[tuple[list[tuple[int, int]], int]]:
    """A maximum-weight perfect matching, or None when no PM exists.

    `weights` maps (black, white) pairs to integers; missing edges weigh 0.
    Hungarian algorithm on the biadjacency with forbidden entries for
    non-edges; deterministic.
    """
    n = g.n_black
    if n != g.n_white:
        return None
    if n == 0:
        return [], 0
    if g.find_perfect_matching() is None:
        return None
    wmax = max((abs(int(w)) for w in weights.values()), default=0)
    big = (wmax + 1) * (n + 1)
    # minimise cost = big - weight for real edges, 2*big*n for non-edges
    forbidden = 2 * big * (n + 1)
    cost = [[forbidden] * n for _ in range(n)]
    for u in range(n):
        for v in g.adj[u]:
            cost[u][v - n] = big - int(weights.get((u, v), 0))
    col_of_row = _hungarian(cost, n)
    matching = [(u, col_of_row[u] + n) for u in range(n)]
    total = 0
    for u, v in matching:
        if not g.has_edge(u, v):
            # cannot happen when a PM exists, guarded above
            raise AssertionError("assignment used a non-edge")
        total += int(weights.get((u, v), 0))
    return sorted(matching), total


def _hungarian(cost: list[list[int]], n: int) -> list[int]:
    """Minimum-cost assignment; returns column index per row."""
    INF = float("inf")
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)  # p[j] = row assigned to column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = -1
            for j in range(1, n + 1):
                if not used[j]:
                    cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    out = [0] * n
    for j in range(1, n + 1):
        out[p[j] - 1] = j - 1
    return out


def matching_porosity(g: BipartiteGraph, x: Iterable[int]) -> int:
    """Maximum number of edges crossing the cut around `x` over all PMs."""
    xs = set(x)
    weights = {}
    for u, v in g.edges:
        if (u in xs) != (v in xs):
            weights[(u, v)] = 1
    res = max_weight_perfect_matching(g, weights)
    if res is None:
        raise InputError("graph has no perfect matching")
    return res[1]


def extendability_failures(g: BipartiteGraph, k: int
                           ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield pairs (S1, S2) of equal size <= k whose removal kills all PMs."""
    whites = list(g.whites())
    blacks = list(g.blacks())
    for s in range(0, k + 1):
        for s1 in combinations(blacks, s):
            for s2 in combinations(whites, s):
                if not g.has_perfect_matching(s1 + s2):
                    yield s1, s2


def is_k_extendable(g: BipartiteGraph, k: int) -> bool:
    """True iff removing any equal-size pair of colour classes of size <= k
    leaves a graph with a perfect matching."""
    if k < 1:
        raise InputError("k must be >= 1")
    if g.n_black != g.n_white:
        return False
    for _ in extendability_failures(g, k):
        return False
    return True


def is_matching_covered(g: BipartiteGraph) -> bool:
    """Connected and every edge lies in some perfect matching."""
    if g.n == 0 or g.m == 0:
        return False
    if not g.is_connected():
        return False
    if g.n_black != g.n_white:
        return False
    if g.find_perfect_matching() is None:
        return False
    return all(g.is_admissible(u, v) for u, v in g.edges)


def _is_c4(g: BipartiteGraph) -> bool:
    return (g.n_black == 2 and g.n_white == 2 and g.m == 4
            and all(len(a) == 2 for a in g.adj))


def is_brace(g: BipartiteGraph) -> bool:
    """C4, or a matching covered graph on >= 6 vertices that is 2-extendable."""
    if _is_c4(g):
        return True
    if g.n < 6:
        return False
    if not is_matching_covered(g):
        return False
    return is_k_extendable(g, 2)
