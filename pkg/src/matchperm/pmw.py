"""Perfect matching decompositions, width search, and the table DP for
generating functions."""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import InputError, ResourceError
from .graph import BipartiteGraph
from .matching import matching_porosity
from .poly import ONE, ZERO, Poly

EXACT_PMW_BOUND = 10
WIDTH_CAP = 8


class DecompNode:
    """A node of a binary split tree; leaves carry graph vertices."""

    __slots__ = ("vertex", "children")

    def __init__(self, vertex: Optional[int] = None, children=None):
        self.vertex = vertex
        self.children = children or []

    def is_leaf(self) -> bool:
        return self.vertex is not None

    def leaves(self) -> list[int]:
        if self.is_leaf():
            return [self.vertex]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out


class PerfectMatchingDecomposition:
    """Cubic leaf-tree over the vertex set, stored as a binary split tree.

    Every non-root subtree corresponds to a tree edge and induces the cut
    (leaves below, rest).
    """

    def __init__(self, root: DecompNode):
        self.root = root

    def leaves(self) -> list[int]:
        return self.root.leaves()

    def cuts(self) -> list[frozenset]:
        """Leaf sets of all non-root subtrees (one per tree edge)."""
        out = []

        def rec(node, is_root):
            if not is_root:
                out.append(frozenset(node.leaves()))
            for c in node.children:
                rec(c, False)

        rec(self.root, True)
        return out

    def validate(self, g: BipartiteGraph) -> None:
        lv = self.root.leaves()
        if sorted(lv) != list(range(g.n)):
            raise InputError("decomposition leaves do not match the vertex set")
        def arity(node):
            if node.is_leaf():
                if node.children:
                    raise InputError("leaf with children")
                return
            if len(node.children) != 2:
                raise InputError("internal nodes must have two children")
            for c in node.children:
                arity(c)
        arity(self.root)


def balanced_tree(vertices: list[int]) -> DecompNode:
    if len(vertices) == 1:
        return DecompNode(vertex=vertices[0])
    half = len(vertices) // 2
    return DecompNode(children=[balanced_tree(vertices[:half]),
                                balanced_tree(vertices[half:])])


def decomposition_width(g: BipartiteGraph,
                        d: PerfectMatchingDecomposition) -> int:
    d.validate(g)
    width = 0
    for cut in d.cuts():
        width = max(width, matching_porosity(g, cut))
    return width


def exact_pmw(g: BipartiteGraph, bound: int = EXACT_PMW_BOUND
              ) -> tuple[int, PerfectMatchingDecomposition]:
    """Minimum width and a witness, by dynamic programming over subsets.

    f(S) is the best achievable max-porosity over the subtree on leaf set S
    including the cut around S itself; the optimum for the whole vertex set
    ranges over all top-level splits.
    """
    n = g.n
    if n > bound:
        raise ResourceError("|V|=%d exceeds exact width bound %d" % (n, bound))
    if g.find_perfect_matching() is None:
        raise InputError("graph has no perfect matching")
    if n == 0:
        raise InputError("empty graph")
    full = (1 << n) - 1
    mp = [0] * (full + 1)
    for s in range(1, full + 1):
        mp[s] = matching_porosity(g, [v for v in range(n) if s >> v & 1])
    f = [0] * (full + 1)
    choice = [0] * (full + 1)
    for s in range(1, full + 1):
        if s & (s - 1) == 0:
            f[s] = mp[s]
            continue
        low = s & (-s)
        best = None
        best_sub = 0
        sub = (s - 1) & s
        while sub:
            if sub & low:
                other = s ^ sub
                cand = max(f[sub], f[other])
                if best is None or cand < best:
                    best = cand
                    best_sub = sub
            sub = (sub - 1) & s
        inner = mp[s] if s != full else 0
        f[s] = max(inner, best)
        choice[s] = best_sub

    def build(s: int) -> DecompNode:
        if s & (s - 1) == 0:
            return DecompNode(vertex=s.bit_length() - 1)
        a = choice[s]
        return DecompNode(children=[build(a), build(s ^ a)])

    return f[full], PerfectMatchingDecomposition(build(full))


def heuristic_decomposition(g: BipartiteGraph) -> PerfectMatchingDecomposition:
    """A deterministic decomposition with no width guarantee.

    Vertices are laid out by a BFS that keeps matched pairs adjacent, then
    split into a balanced binary tree over that order.
    """
    pm = g.find_perfect_matching()
    if pm is None:
        raise InputError("graph has no perfect matching")
    partner = {}
    for u, v in pm:
        partner[u] = v
        partner[v] = u
    order = []
    seen = set()
    for start in range(g.n):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            x = queue.pop(0)
            order.append(x)
            p = partner[x]
            if p not in seen:
                seen.add(p)
                order.append(p)
            for y in sorted(g.adj[x] | g.adj[p]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return PerfectMatchingDecomposition(balanced_tree(order))


def _boundary(g: BipartiteGraph, leafset: set) -> list[tuple[int, int]]:
    return [e for e in g.edges if (e[0] in leafset) != (e[1] in leafset)]


def _matchings(edges: list, cap: int):
    """All matchings (as frozensets) of size <= cap within the edge list."""
    out = [frozenset()]

    def rec(idx: int, used: set, acc: list):
        if len(acc) >= cap:
            return
        for i in range(idx, len(edges)):
            a, b = edges[i]
            if a in used or b in used:
                continue
            acc.append(edges[i])
            used |= {a, b}
            out.append(frozenset(acc))
            rec(i + 1, used, acc)
            used -= {a, b}
            acc.pop()

    rec(0, set(), [])
    return out


def _table(g: BipartiteGraph, labels: dict, node: DecompNode, cap: int):
    """Returns (leafset, table) with table mapping boundary matchings F to
    the generating function of the subgraph minus the endpoints of F."""
    if node.is_leaf():
        x = node.vertex
        table = {}
        for y in g.adj[x]:
            e = tuple(sorted((x, y)))
            table[frozenset({e})] = ONE
        return {x}, table
    (s1, t1) = _table(g, labels, node.children[0], cap)
    (s2, t2) = _table(g, labels, node.children[1], cap)
    leafset = s1 | s2
    # cross edges lie in both children's boundaries and get resolved here
    cross = {e for e in g.edges
             if (e[0] in s1 and e[1] in s2) or (e[0] in s2 and e[1] in s1)}
    table: dict = {}
    for f1, p1 in t1.items():
        if p1.is_zero():
            continue
        c1 = frozenset(e for e in f1 if e in cross)
        for f2, p2 in t2.items():
            if p2.is_zero():
                continue
            c2 = frozenset(e for e in f2 if e in cross)
            if c1 != c2:
                continue
            union = f1 | f2
            covered: set = set()
            ok = True
            for a, b in union:
                if a in covered or b in covered:
                    ok = False
                    break
                covered.add(a)
                covered.add(b)
            if not ok:
                continue
            f = union - c1
            if len(f) > cap:
                continue
            term = p1 * p2
            for e in c1:
                term = term * labels[e]
            if f in table:
                table[f] = table[f] + term
            else:
                table[f] = term
    return leafset, table


def generating_function_dp(g: BipartiteGraph, labels: dict,
                           d: PerfectMatchingDecomposition,
                           cap: int = WIDTH_CAP) -> Poly:
    """GenerateMatchings(g, labels) via the decomposition table DP."""
    if g.n == 0:
        return ONE
    d.validate(g)
    if g.find_perfect_matching() is None:
        return ZERO
    width = decomposition_width(g, d)
    if width > cap:
        raise ResourceError("decomposition width %d exceeds cap %d"
                            % (width, cap))
    _, table = _table(g, labels, d.root, max(width, 1))
    return table.get(frozenset(), ZERO)


def _prune(node: DecompNode, removed: set) -> Optional[DecompNode]:
    if node.is_leaf():
        return None if node.vertex in removed else DecompNode(node.vertex)
    kids = [k for k in (_prune(c, removed) for c in node.children)
            if k is not None]
    if not kids:
        return None
    if len(kids) == 1:
        return kids[0]
    return DecompNode(children=kids)


def vertex_gen_dp(g: BipartiteGraph, labels: dict,
                  d: PerfectMatchingDecomposition, v: int,
                  cap: int = WIDTH_CAP) -> dict:
    """For each edge e = uv at v: GenerateMatchings(g - v - u) * p(e)."""
    d.validate(g)
    out = {}
    for w in sorted(g.adj[v]):
        e = tuple(sorted((v, w)))
        keep = [x for x in range(g.n) if x not in e]
        sub, old = g.induced(keep)
        new_of = {o: i for i, o in enumerate(old)}
        sub_labels = {}
        for a, b in sub.edges:
            oa, ob = old[a], old[b]
            sub_labels[(a, b)] = labels[tuple(sorted((oa, ob)))]
        pruned = _prune(d.root, set(e))
        if pruned is None:
            gf = ONE
        else:
            relabeled = _relabel(pruned, new_of)
            gf = generating_function_dp(
                sub, sub_labels, PerfectMatchingDecomposition(relabeled), cap)
        out[e] = gf * labels[e]
    return out


def _relabel(node: DecompNode, new_of: dict) -> DecompNode:
    if node.is_leaf():
        return DecompNode(vertex=new_of[node.vertex])
    return DecompNode(children=[_relabel(c, new_of) for c in node.children])
