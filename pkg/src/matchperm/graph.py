"""Bipartite graphs with the vertex convention used across the package.

Black vertices are 0..n_black-1, white vertices are n_black..n_black+n_white-1.
Edges are stored as (black, white) pairs.
"""

from __future__ import annotations

from typing import Iterable, Optional

from . import _kernels
from .errors import InputError


class BipartiteGraph:
    """A simple bipartite graph over two colour classes.

    The vertex set is range(n_black + n_white); a vertex v is black when
    v < n_black.  Parallel edges are collapsed.
    """

    def __init__(self, n_black: int, n_white: int,
                 edges: Iterable[tuple[int, int]] = ()):
        self.n_black = n_black
        self.n_white = n_white
        self.adj: list[set[int]] = [set() for _ in range(n_black + n_white)]
        self._edges: list[tuple[int, int]] = []
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n(self) -> int:
        return self.n_black + self.n_white

    def is_black(self, v: int) -> bool:
        return v < self.n_black

    def whites(self):
        return range(self.n_black, self.n)

    def blacks(self):
        return range(self.n_black)

    def add_edge(self, u: int, v: int) -> None:
        if u > v:
            u, v = v, u
        if not (0 <= u < self.n_black and self.n_black <= v < self.n):
            raise InputError("edge %r is not black-white" % ((u, v),))
        if v not in self.adj[u]:
            self.adj[u].add(v)
            self.adj[v].add(u)
            self._edges.append((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(self._edges)

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def copy(self) -> "BipartiteGraph":
        return BipartiteGraph(self.n_black, self.n_white, self._edges)

    def __repr__(self):
        return "BipartiteGraph(%d, %d, m=%d)" % (
            self.n_black, self.n_white, self.m)

    # -- matchings ---------------------------------------------------------

    def maximum_matching(self, avoid: Iterable[int] = ()) -> dict[int, int]:
        """Maximum matching of the graph minus `avoid`, as a vertex map.

        Returns a dict containing both directions (u -> v and v -> u).
        """
        removed = set(avoid)
        kadj = []
        for u in range(self.n_black):
            if u in removed:
                kadj.append([])
            else:
                kadj.append(sorted(v - self.n_black for v in self.adj[u]
                                   if v not in removed))
        _, pair_l, _ = _kernels.max_matching(kadj, self.n_black, self.n_white)
        out: dict[int, int] = {}
        for u, j in enumerate(pair_l):
            if j >= 0:
                v = j + self.n_black
                out[u] = v
                out[v] = u
        return out

    def has_perfect_matching(self, avoid: Iterable[int] = ()) -> bool:
        removed = set(avoid)
        live = self.n - len(removed)
        if live % 2:
            return False
        return len(self.maximum_matching(removed)) == live

    def find_perfect_matching(self) -> Optional[list[tuple[int, int]]]:
        """One perfect matching as a list of (black, white) edges, or None."""
        pair = self.maximum_matching()
        if len(pair) != self.n:
            return None
        return [(u, pair[u]) for u in range(self.n_black)]

    def is_conformal(self, removed: Iterable[int]) -> bool:
        """True when the graph minus the given vertex set still has a PM."""
        return self.has_perfect_matching(removed)

    def is_admissible(self, u: int, v: int) -> bool:
        """True when some perfect matching contains the edge uv."""
        if not self.has_edge(u, v):
            raise InputError("no edge %r" % ((u, v),))
        return self.has_perfect_matching((u, v))

    # -- structure ---------------------------------------------------------

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, keep: Iterable[int]) -> tuple["BipartiteGraph", list[int]]:
        """Induced subgraph on `keep`, renumbered to the package convention.

        Returns (subgraph, old_ids) where old_ids[new] is the original id.
        """
        keep = set(keep)
        blacks = sorted(v for v in keep if self.is_black(v))
        whites = sorted(v for v in keep if not self.is_black(v))
        old_ids = blacks + whites
        new_of = {old: i for i, old in enumerate(old_ids)}
        sub = BipartiteGraph(len(blacks), len(whites))
        for u, v in self._edges:
            if u in keep and v in keep:
                sub.add_edge(new_of[u], new_of[v])
        return sub, old_ids

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self._edges)
        return g


def elementary_components(g: BipartiteGraph):
    """Split into maximal matching covered conformal subgraphs.

    Restricts to admissible edges and takes connected components.  Returns
    (components, order_edges) where components is a list of
    (subgraph, old_ids) and order_edges is a DAG on component indices:
    (i, j) present when an inadmissible edge joins a black vertex of
    component i to a white vertex of component j.
    """
    from .errors import InputError

    if g.find_perfect_matching() is None:
        raise InputError("graph has no perfect matching")
    admissible = BipartiteGraph(g.n_black, g.n_white)
    inadmissible = []
    for u, v in g.edges:
        if g.is_admissible(u, v):
            admissible.add_edge(u, v)
        else:
            inadmissible.append((u, v))
    comp_of = {}
    comps = admissible.components()
    for i, comp in enumerate(comps):
        for x in comp:
            comp_of[x] = i
    parts = [g.induced(comp) for comp in comps]
    order = sorted({(comp_of[u], comp_of[v]) for u, v in inadmissible})
    return parts, order


def internally_conformal_paths(g: BipartiteGraph, m, u: int, v: int,
                               k: int) -> bool:
    """True iff k internally disjoint, internally matching-conformal u-v
    paths exist.

    `m` is a perfect matching as (black, white) pairs.  A path is
    internally conformal when the matching pairs up its interior vertices
    along the path.  Realised as unit-node-capacity max flow on the
    digraph whose nodes are matching edges avoiding u and v.
    """
    from .errors import InputError

    if not g.is_black(u) or g.is_black(v):
        raise InputError("endpoints must be (black, white)")
    medges = [e for e in m if u not in e and v not in e]
    mset = set(m)
    nodes = len(medges)
    white_node = {w: i for i, (_, w) in enumerate(medges)}
    # flow network with split nodes: node i -> in=2i, out=2i+1
    src, snk = 2 * nodes, 2 * nodes + 1
    arcs: dict[int, set[int]] = {x: set() for x in range(2 * nodes + 2)}
    for i in range(nodes):
        arcs[2 * i].add(2 * i + 1)
    for i, (b, _) in enumerate(medges):
        for w in g.adj[b]:
            if (b, w) in mset:
                continue
            if w == v:
                arcs[2 * i + 1].add(snk)
            elif w in white_node:
                arcs[2 * i + 1].add(2 * white_node[w])
    for w in g.adj[u]:
        if w == v:
            arcs[src].add(snk)
        elif w in white_node and (u, w) not in mset:
            arcs[src].add(2 * white_node[w])
    # unit capacities throughout except the direct src->snk arc, which
    # represents the single edge uv and can carry at most one path anyway
    flow = 0
    residual = {x: set(ys) for x, ys in arcs.items()}
    back: dict[int, set[int]] = {x: set() for x in residual}
    while flow < k:
        # BFS for an augmenting path in the residual digraph
        prev = {src: None}
        queue = [src]
        while queue and snk not in prev:
            nxt = []
            for x in queue:
                for y in sorted(residual[x] | back[x]):
                    if y not in prev:
                        prev[y] = x
                        nxt.append(y)
            queue = nxt
        if snk not in prev:
            break
        y = snk
        while prev[y] is not None:
            x = prev[y]
            if y in residual[x]:
                residual[x].discard(y)
                back[y].add(x)
            else:
                back[x].discard(y)
                residual[y].add(x)
            y = x
        flow += 1
    return flow >= k


def is_isomorphic(a: BipartiteGraph, b: BipartiteGraph) -> bool:
    import networkx as nx

    if (a.n_black, a.n_white, a.m) != (b.n_black, b.n_white, b.m):
        if (a.n_black, a.n_white) != (b.n_white, b.n_black) or a.m != b.m:
            return False
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())
