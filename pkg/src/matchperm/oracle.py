"""Brute-force reference implementations.

Everything here is exponential and bounded; the rest of the package is
validated against these functions.
"""

from __future__ import annotations

from typing import Iterator, Optional

from . import _kernels
from .errors import ResourceError
from .graph import BipartiteGraph
from .poly import ONE, ZERO, Poly

RYSER_BOUND = 24
ENUMERATION_BOUND = 28


def ryser_permanent(rows: list[list[int]], bound: int = RYSER_BOUND):
    """Exact permanent of a square integer matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n > bound:
        raise ResourceError("matrix size %d exceeds Ryser bound %d" % (n, bound))
    flat = [x for r in rows for x in r]
    return _kernels.ryser(flat, n)


def biadjacency(g: BipartiteGraph) -> list[list[int]]:
    """0/1 biadjacency matrix, rows = black vertices, columns = white."""
    rows = [[0] * g.n_white for _ in range(g.n_black)]
    for u, v in g.edges:
        rows[u][v - g.n_black] = 1
    return rows


def enumerate_perfect_matchings(g: BipartiteGraph,
                                bound: int = ENUMERATION_BOUND
                                ) -> Iterator[list[tuple[int, int]]]:
    """Yield every perfect matching as a sorted list of (black, white) edges.

    Deterministic order: backtracking over black vertices in index order,
    whites tried in sorted order.
    """
    if g.n > bound:
        raise ResourceError("|V|=%d exceeds enumeration bound %d" % (g.n, bound))
    if g.n_black != g.n_white:
        return
    nb = g.n_black
    order = sorted(range(nb), key=lambda u: len(g.adj[u]))
    used = [False] * g.n_white
    chosen: list[tuple[int, int]] = []

    def rec(idx: int):
        if idx == nb:
            yield sorted(chosen)
            return
        u = order[idx]
        for v in sorted(g.adj[u]):
            j = v - nb
            if not used[j]:
                used[j] = True
                chosen.append((u, v))
                yield from rec(idx + 1)
                chosen.pop()
                used[j] = False

    yield from rec(0)


def count_perfect_matchings_oracle(g: BipartiteGraph,
                                   bound: int = RYSER_BOUND):
    """Number of perfect matchings via the Ryser kernel."""
    if g.n_black != g.n_white:
        return 0
    return ryser_permanent(biadjacency(g), bound)


def enumerate_generating_function(g: BipartiteGraph,
                                  labels: Optional[dict] = None,
                                  bound: int = ENUMERATION_BOUND) -> Poly:
    """Sum over perfect matchings of the product of edge labels.

    `labels` maps (black, white) edges to Poly; missing/None means the
    label x for every edge.
    """
    x = Poly.x_power(1)
    total = ZERO
    for m in enumerate_perfect_matchings(g, bound):
        term = ONE
        for e in m:
            term = term * (x if labels is None else labels[e])
            if term.is_zero():
                break
        total = total + term
    return total
