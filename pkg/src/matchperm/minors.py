"""Bicontraction, matching minor models, and bounded exhaustive searches."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Optional

from .errors import InputError, ResourceError
from .graph import BipartiteGraph, is_isomorphic

BISUBDIVISION_BOUND = 40
GENERAL_MINOR_BOUND = 20


def bicontract_with_map(g: BipartiteGraph, v: int):
    """Contract both edges at a degree-2 vertex, removing loops/parallels.

    Returns (graph, old_of_new) where the merged vertex maps to None.
    """
    if g.degree(v) != 2:
        raise InputError("vertex %d does not have degree 2" % v)
    u0, u1 = sorted(g.adj[v])
    merged = {v, u0, u1}
    black = g.is_black(u0)
    rest_black = [x for x in g.blacks() if x not in merged]
    rest_white = [x for x in g.whites() if x not in merged]
    if black:
        old_ids = rest_black + [None] + rest_white
        nb = len(rest_black) + 1
        star = len(rest_black)
    else:
        old_ids = rest_black + rest_white + [None]
        nb = len(rest_black)
        star = len(old_ids) - 1
    new_of = {old: i for i, old in enumerate(old_ids) if old is not None}
    out = BipartiteGraph(nb, len(old_ids) - nb)
    for a, b in g.edges:
        ia = new_of.get(a, star)
        ib = new_of.get(b, star)
        if ia != ib:
            out.add_edge(min(ia, ib), max(ia, ib))
    return out, old_ids


def bicontract(g: BipartiteGraph, v: int) -> BipartiteGraph:
    return bicontract_with_map(g, v)[0]


class MatchingMinorModel:
    """An embedding of a pattern graph H into a host G.

    trees: map H-vertex -> list of host vertices (inducing a tree).
    paths: map H-edge (u, v) -> host vertex sequence from mu(u) to mu(v).
    residual_matching: optional explicit perfect matching of the rest.
    """

    def __init__(self, trees: dict, paths: dict, residual_matching=None):
        self.trees = {v: list(t) for v, t in trees.items()}
        self.paths = {tuple(e): list(p) for e, p in paths.items()}
        self.residual_matching = residual_matching

    def used_vertices(self) -> set:
        used = set()
        for t in self.trees.values():
            used.update(t)
        for p in self.paths.values():
            used.update(p[1:-1])
        return used


def _tree_structure(g: BipartiteGraph, verts: list):
    """Induced edges of a vertex set, or None if not a tree."""
    vs = set(verts)
    if len(vs) != len(verts) or not verts:
        return None
    edges = [(a, b) for a, b in g.edges if a in vs and b in vs]
    if len(edges) != len(vs) - 1:
        return None
    # connectivity
    adj = {v: [] for v in vs}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(vs):
        return None
    return adj


def _old_vertices(adj: dict) -> Optional[set]:
    """Old vertices of a barycentric tree; None if not barycentric.

    Leaves and vertices of degree >= 3 must lie pairwise at even distance;
    the old vertices are everything at even distance from them.
    """
    verts = list(adj)
    if len(verts) == 1:
        return set(verts)
    root = verts[0]
    dist = {root: 0}
    queue = [root]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    special = [v for v in verts if len(adj[v]) != 2]
    parities = {dist[v] % 2 for v in special}
    if len(parities) != 1:
        return None
    par = parities.pop()
    return {v for v in verts if dist[v] % 2 == par}


def verify_matching_minor_model(g: BipartiteGraph, h: BipartiteGraph,
                                model: MatchingMinorModel,
                                diagnostics: Optional[list] = None) -> bool:
    """Check every model condition; failures are appended to diagnostics."""
    diag = diagnostics if diagnostics is not None else []

    def fail(cond, msg):
        diag.append("condition %s: %s" % (cond, msg))

    trees = {}
    olds = {}
    for v in range(h.n):
        verts = model.trees.get(v)
        if not verts:
            fail("i", "missing tree for pattern vertex %d" % v)
            continue
        adj = _tree_structure(g, verts)
        if adj is None:
            fail("i", "vertex set for %d does not induce a tree" % v)
            continue
        trees[v] = set(verts)
        old = _old_vertices(adj)
        if old is None:
            fail("i", "tree for %d is not barycentric" % v)
            continue
        olds[v] = old
        if len({g.is_black(x) for x in old}) > 1:
            fail("i", "old vertices of %d are not colour-consistent" % v)
    seen = {}
    for v, vs in trees.items():
        for x in vs:
            if x in seen:
                fail("ii", "trees %d and %d share vertex %d" % (seen[x], v, x))
            seen[x] = v

    hedges = {tuple(sorted(e)) for e in h.edges}
    pedges = {tuple(sorted(e)) for e in model.paths}
    if hedges != pedges:
        fail("iii", "path set does not match the pattern edge set")
    interior_seen = set()
    for (u, v), path in model.paths.items():
        if len(path) < 2 or (len(path) - 1) % 2 == 0:
            fail("iii", "path for (%d,%d) must have odd length" % (u, v))
            continue
        ok_adj = all(path[i + 1] in g.adj[path[i]]
                     for i in range(len(path) - 1))
        if not ok_adj or len(set(path)) != len(path):
            fail("iii", "path for (%d,%d) is not a simple host path" % (u, v))
            continue
        for x in path[1:-1]:
            if x in seen:
                fail("iii", "path (%d,%d) meets a tree at %d" % (u, v, x))
            if x in interior_seen:
                fail("iii", "paths overlap internally at %d" % x)
            interior_seen.add(x)
        for end, hv in ((path[0], u), (path[-1], v)):
            if hv not in trees:
                continue
            if end not in trees[hv]:
                fail("iv", "path (%d,%d) does not end in the tree of %d"
                     % (u, v, hv))
            elif hv in olds and end not in olds[hv]:
                fail("iv", "path (%d,%d) endpoint %d is not an old vertex"
                     % (u, v, end))
    for v in range(h.n):
        if h.degree(v) == 1 and v in trees and len(trees[v]) != 1:
            fail("v", "degree-1 pattern vertex %d has a non-singleton tree" % v)

    used = set(seen) | interior_seen
    rest = [x for x in range(g.n) if x not in used]
    if model.residual_matching is not None:
        m = [tuple(sorted(e)) for e in model.residual_matching]
        covered = [x for e in m for x in e]
        valid = (len(set(covered)) == len(covered)
                 and sorted(covered) == sorted(rest)
                 and all(g.has_edge(*e) for e in m))
        if not valid:
            fail("vi", "residual matching is not a perfect matching of the rest")
    elif not g.induced(rest)[0].find_perfect_matching() and rest:
        fail("vi", "host minus the model has no perfect matching")
    return not diag


def collapse_model(g: BipartiteGraph, h: BipartiteGraph,
                   model: MatchingMinorModel) -> BipartiteGraph:
    """The minor obtained by contracting trees and bicontracting paths."""
    colour_black = {}
    for v, verts in model.trees.items():
        adj = _tree_structure(g, verts)
        old = _old_vertices(adj) if adj else set(verts)
        rep = sorted(old)[0] if old else verts[0]
        colour_black[v] = g.is_black(rep)
    blacks = sorted(v for v in model.trees if colour_black[v])
    whites = sorted(v for v in model.trees if not colour_black[v])
    ids = {v: i for i, v in enumerate(blacks + whites)}
    out = BipartiteGraph(len(blacks), len(whites))
    for (u, v) in model.paths:
        out.add_edge(*sorted((ids[u], ids[v])))
    return out


def _odd_paths(g: BipartiteGraph, start: int, goal: int, blocked: set,
               max_len: int):
    """Yield simple odd-length paths start..goal with free interior."""
    path = [start]
    on_path = {start}

    def rec():
        cur = path[-1]
        if cur == goal and len(path) % 2 == 0:
            yield list(path)
            # longer paths through goal are impossible (goal is an endpoint)
            return
        if len(path) > max_len:
            return
        for nxt in sorted(g.adj[cur]):
            if nxt == goal and len(path) % 2 == 1:
                path.append(nxt)
                yield list(path)
                path.pop()
                continue
            if nxt in blocked or nxt in on_path or nxt == goal:
                continue
            path.append(nxt)
            on_path.add(nxt)
            yield from rec()
            on_path.discard(nxt)
            path.pop()

    yield from rec()


def find_conformal_bisubdivision(g: BipartiteGraph, h: BipartiteGraph,
                                 bound: int = BISUBDIVISION_BOUND,
                                 require_edges: Optional[set] = None
                                 ) -> Optional[MatchingMinorModel]:
    """A verified model arising from a conformal bisubdivision of h, if any.

    Exhaustive over branch-vertex placements and odd internally disjoint
    path systems; only valid for patterns with maximum degree <= 3.
    When require_edges is given, the bisubdivision subgraph must use all of
    those host edges.
    """
    if h.max_degree() > 3:
        raise InputError("pattern maximum degree exceeds 3")
    if g.n > bound:
        raise ResourceError("|V(g)|=%d exceeds search bound %d" % (g.n, bound))
    if g.n < h.n or (g.n - h.n) % 2:
        return None
    req = {tuple(sorted(e)) for e in require_edges} if require_edges else set()
    hedges = sorted(tuple(sorted(e)) for e in h.edges)

    gb = [v for v in g.blacks()]
    gw = [v for v in g.whites()]
    hb = [v for v in h.blacks()]
    hw = [v for v in h.whites()]

    for swap in (False, True):
        pool_b, pool_w = (gw, gb) if swap else (gb, gw)
        if len(pool_b) < len(hb) or len(pool_w) < len(hw):
            continue
        for img_b in permutations(pool_b, len(hb)):
            if any(g.degree(x) < h.degree(v) for v, x in zip(hb, img_b)):
                continue
            for img_w in permutations(pool_w, len(hw)):
                if any(g.degree(x) < h.degree(v) for v, x in zip(hw, img_w)):
                    continue
                branch = dict(zip(hb, img_b))
                branch.update(zip(hw, img_w))
                model = _assign_paths(g, h, hedges, branch, req)
                if model is not None:
                    return model
    return None


def _assign_paths(g: BipartiteGraph, h, hedges, branch: dict, req: set
                  ) -> Optional[MatchingMinorModel]:
    branch_set = set(branch.values())
    if len(branch_set) != len(branch):
        return None
    used = set(branch_set)
    paths: dict = {}
    max_len = g.n

    def rec(idx: int):
        if idx == len(hedges):
            if req:
                got = set()
                for p in paths.values():
                    got.update(tuple(sorted((p[i], p[i + 1])))
                               for i in range(len(p) - 1))
                if not req <= got:
                    return None
            rest = [x for x in range(g.n) if x not in used]
            if rest and g.induced(rest)[0].find_perfect_matching() is None:
                return None
            model = MatchingMinorModel(
                {v: [x] for v, x in branch.items()},
                dict(paths))
            return model
        u, v = hedges[idx]
        blocked = used - {branch[u], branch[v]}
        for p in _odd_paths(g, branch[u], branch[v], blocked, max_len):
            interior = p[1:-1]
            used.update(interior)
            paths[(u, v)] = p
            res = rec(idx + 1)
            if res is not None:
                return res
            del paths[(u, v)]
            used.difference_update(interior)
        return None

    return rec(0)


def contains_matching_minor(g: BipartiteGraph, h: BipartiteGraph,
                            bound: Optional[int] = None) -> bool:
    """Whether h is a matching minor of g (bounded exhaustive search)."""
    if h.max_degree() <= 3:
        return find_conformal_bisubdivision(
            g, h, bound if bound is not None else BISUBDIVISION_BOUND
        ) is not None
    limit = bound if bound is not None else GENERAL_MINOR_BOUND
    if g.n > limit:
        raise ResourceError("|V(g)|=%d exceeds search bound %d" % (g.n, limit))
    return _general_minor_search(g, h)


def _general_minor_search(g: BipartiteGraph, h: BipartiteGraph) -> bool:
    from itertools import combinations

    candidates = []
    for drop in range(0, g.n - h.n + 1, 2):
        for xs in combinations(range(g.n), drop):
            if g.is_conformal(xs):
                keep = [v for v in range(g.n) if v not in xs]
                candidates.append(g.induced(keep)[0])
    seen: dict = {}
    stack = candidates

    def key(gr):
        return (gr.n_black, gr.n_white, tuple(sorted(gr.edges)))

    while stack:
        cur = stack.pop()
        k = key(cur)
        if k in seen:
            continue
        seen[k] = True
        if cur.n == h.n and is_isomorphic(cur, h):
            return True
        if len(seen) > 200_000:
            raise ResourceError("minor search state limit exceeded")
        # edge deletions
        if cur.n >= h.n:
            for i, (a, b) in enumerate(cur.edges):
                nxt = BipartiteGraph(cur.n_black, cur.n_white,
                                     [e for j, e in enumerate(cur.edges)
                                      if j != i])
                stack.append(nxt)
        # bicontractions
        if cur.n - 2 >= h.n:
            for v in range(cur.n):
                if cur.degree(v) == 2:
                    stack.append(bicontract(cur, v))
    return False


def find_conformal_cross(g: BipartiteGraph, c: tuple,
                         bound: int = BISUBDIVISION_BOUND):
    """Two disjoint paths over the conformal 4-cycle c with interleaved
    endpoints, such that the cycle plus the paths is conformal."""
    if g.n > bound:
        raise ResourceError("|V(g)|=%d exceeds search bound %d" % (g.n, bound))
    if len(set(c)) != 4:
        raise InputError("c must be a 4-cycle")
    for i in range(4):
        if not g.has_edge(*sorted((c[i], c[(i + 1) % 4]))):
            raise InputError("c is not a cycle of g")
    if not g.is_conformal(c):
        raise InputError("c is not conformal")
    cset = set(c)
    s1, s2, t1, t2 = c[0], c[1], c[2], c[3]
    for p1 in _any_paths(g, s1, t1, cset - {s1, t1}):
        block = (cset | set(p1)) - {s2, t2}
        for p2 in _any_paths(g, s2, t2, block):
            used = cset | set(p1) | set(p2)
            rest = [x for x in range(g.n) if x not in used]
            if not rest or g.induced(rest)[0].find_perfect_matching():
                return list(p1), list(p2)
    return None


def _any_paths(g: BipartiteGraph, start: int, goal: int, blocked: set):
    """Yield simple start..goal paths with interior outside `blocked`."""
    path = [start]
    on_path = {start}

    def rec():
        cur = path[-1]
        for nxt in sorted(g.adj[cur]):
            if nxt == goal:
                yield path + [goal]
                continue
            if nxt in blocked or nxt in on_path:
                continue
            path.append(nxt)
            on_path.add(nxt)
            yield from rec()
            on_path.discard(nxt)
            path.pop()

    yield from rec()
