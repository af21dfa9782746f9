"""Constructors for the graph families used throughout, with canonical
matchings and the shipped minor-model fixture."""

from __future__ import annotations

import hashlib
import json
import os
from typing import Optional

from .errors import InputError
from .graph import BipartiteGraph
from .minors import MatchingMinorModel

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


class GeneratedGraph:
    """A constructed family member.

    names maps the family's natural vertex names (tuples or strings) to
    graph ids; canonical_matching, when set, is a perfect matching.
    """

    def __init__(self, graph: BipartiteGraph, family: str, param,
                 names: dict, canonical_matching=None):
        self.graph = graph
        self.family = family
        self.param = param
        self.names = names
        self.canonical_matching = canonical_matching

    def rotation(self):
        from .pfaffian import planar_embed

        return planar_embed(self.graph)


def _build(named: list, edges: list, family: str, param,
           matching=None) -> GeneratedGraph:
    """named = [(name, is_black)]; edges and matching use names."""
    blacks = [n for n, b in named if b]
    whites = [n for n, b in named if not b]
    ids = {}
    for i, n in enumerate(blacks):
        ids[n] = i
    for i, n in enumerate(whites):
        ids[n] = len(blacks) + i
    g = BipartiteGraph(len(blacks), len(whites))
    for a, b in edges:
        g.add_edge(*sorted((ids[a], ids[b])))
    m = None
    if matching is not None:
        m = sorted(tuple(sorted((ids[a], ids[b]))) for a, b in matching)
    return GeneratedGraph(g, family, param, ids, m)


def _cyclic(j: int, length: int) -> int:
    """1-based successor position on a cycle."""
    return j % length + 1


def _cg_parts(k: int, cycles: int, length: int):
    """Vertices and edges of the cylindrical pattern shared by cg and svmg."""
    named = [((i, j), j % 2 == 1)
             for i in range(1, cycles + 1) for j in range(1, length + 1)]
    edges = []
    for i in range(1, cycles + 1):
        for j in range(1, length + 1):
            edges.append(((i, j), (i, _cyclic(j, length))))
    for i in range(1, cycles):
        for j in range(1, length - 1, 4):
            edges.append(((i, j), (i + 1, j + 1)))
    for i in range(2, cycles + 1):
        for j in range(3, length + 1, 4):
            edges.append(((i, j), (i - 1, j + 1)))
    matching = [((i, j), (i, j + 1))
                for i in range(1, cycles + 1) for j in range(1, length, 2)]
    return named, edges, matching


def cylindrical_matching_grid(k: int) -> GeneratedGraph:
    """k concentric cycles of length 4k with alternating radial links."""
    if k < 1:
        raise InputError("k must be >= 1")
    named, edges, matching = _cg_parts(k, k, 4 * k)
    return _build(named, edges, "cg", k, matching)


def alternating_matching(cg: GeneratedGraph) -> list:
    """The canonical matching with the complement taken on odd cycles."""
    if cg.family != "cg":
        raise InputError("alternating matching is defined on cg graphs")
    k = cg.param
    if k % 2:
        raise InputError("alternating matching needs even k")
    length = 4 * k
    pairs = []
    for i in range(1, k + 1):
        if i % 2 == 1:
            js = range(2, length + 1, 2)
        else:
            js = range(1, length, 2)
        for j in js:
            pairs.append(((i, j), (i, _cyclic(j, length))))
    ids = cg.names
    return sorted(tuple(sorted((ids[a], ids[b]))) for a, b in pairs)


def shallow_vortex_matching_grid(k: int) -> GeneratedGraph:
    """2k cycles of length 8k plus a ring of crossing edges on the rim."""
    if k < 1:
        raise InputError("k must be >= 1")
    length = 8 * k
    named, edges, matching = _cg_parts(k, 2 * k, length)
    for j in range(2, length - 1, 4):
        edges.append(((1, j), (1, (j + 4) % length + 1)))
    return _build(named, edges, "svmg", k, matching)


def refined_vortex(k: int) -> GeneratedGraph:
    """2k cycles of length 4k with full radial links and rim crossings."""
    if k < 1:
        raise InputError("k must be >= 1")
    length = 4 * k
    named = [((i, j), (i + j) % 2 == 0)
             for i in range(1, 2 * k + 1) for j in range(1, length + 1)]
    edges = []
    for i in range(1, 2 * k + 1):
        for j in range(1, length + 1):
            edges.append(((i, j), (i, _cyclic(j, length))))
    for i in range(1, 2 * k):
        for j in range(1, length + 1):
            edges.append(((i, j), (i + 1, j)))
    for j in range(2, length + 1, 2):
        edges.append(((1, j), (1, (j + 2) % length + 1)))
    matching = [((i, j), (i, j + 1))
                for i in range(1, 2 * k + 1) for j in range(1, length, 2)]
    return _build(named, edges, "rv", k, matching)


def grid(n: int, m: int) -> GeneratedGraph:
    if n < 1 or m < 1:
        raise InputError("grid dimensions must be >= 1")
    named = [((i, j), (i + j) % 2 == 0)
             for i in range(1, n + 1) for j in range(1, m + 1)]
    edges = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if i < n:
                edges.append(((i, j), (i + 1, j)))
            if j < m:
                edges.append(((i, j), (i, j + 1)))
    matching = None
    if (n * m) % 2 == 0:
        if m % 2 == 0:
            matching = [((i, j), (i, j + 1))
                        for i in range(1, n + 1) for j in range(1, m + 1, 2)]
        else:
            matching = [((i, j), (i + 1, j))
                        for i in range(1, n + 1, 2) for j in range(1, m + 1)]
    return _build(named, edges, "grid", (n, m), matching)


def _with_k33_corner(base: GeneratedGraph, a1, a2, b1, b2, family, k):
    named = [(n, base.graph.is_black(i)) for n, i in base.names.items()]
    named.append(("a3", True))
    named.append(("b3", False))
    inv = {i: n for n, i in base.names.items()}
    edges = [(inv[u], inv[v]) for u, v in base.graph.edges]
    edges += [("a3", b1), ("a3", b2), ("a3", "b3"), (a1, "b3"), (a2, "b3")]
    matching = None
    if base.canonical_matching is not None:
        matching = [(inv[u], inv[v]) for u, v in base.canonical_matching]
        matching.append(("a3", "b3"))
    return _build(named, edges, family, k, matching)


def single_crossing_matching_grid(k: int) -> GeneratedGraph:
    """(2k x 2k)-grid with a K33 completed on the central 4-cycle."""
    if k < 1:
        raise InputError("k must be >= 1")
    base = grid(2 * k, 2 * k)
    return _with_k33_corner(base, (k, k), (k + 1, k + 1),
                            (k, k + 1), (k + 1, k), "scmg", k)


def inside_out_scmg(k: int) -> GeneratedGraph:
    """(2k x 2k)-grid with the K33 attached at the four corners."""
    if k < 1:
        raise InputError("k must be >= 1")
    base = grid(2 * k, 2 * k)
    return _with_k33_corner(base, (1, 1), (2 * k, 2 * k),
                            (1, 2 * k), (2 * k, 1), "ioscmg", k)


def cylindrical_single_crossing(k: int) -> GeneratedGraph:
    if k < 1:
        raise InputError("k must be >= 1")
    base = cylindrical_matching_grid(4 * k)
    g = base.graph.copy()
    ids = base.names
    for a, b in (((1, 1), (1, 8 * k + 4)), ((1, 4 * k + 1), (1, 12 * k + 4))):
        g.add_edge(*sorted((ids[a], ids[b])))
    return GeneratedGraph(g, "cylsc", k, ids, base.canonical_matching)


def cylindrical_single_jump(k: int) -> GeneratedGraph:
    if k < 1:
        raise InputError("k must be >= 1")
    base = cylindrical_matching_grid(k)
    g = base.graph.copy()
    g.add_edge(*sorted((base.names[(k, 1)], base.names[(1, 2)])))
    return GeneratedGraph(g, "cyljump", k, base.names,
                          base.canonical_matching)


def wall(n: int) -> GeneratedGraph:
    """Elementary wall: a (2n x n)-grid with alternating column edges
    removed and degree-1 vertices stripped."""
    if n < 3:
        raise InputError("wall needs n >= 3")
    rows, cols = 2 * n, n
    drop = set()
    for c in range(1, cols + 1):
        for r in range(1, rows):
            if (c % 2 == 1) == (r % 2 == 1):
                drop.add(((r, c), (r + 1, c)))
    base = grid(rows, cols)
    inv = {i: nm for nm, i in base.names.items()}
    edges = []
    for u, v in base.graph.edges:
        a, b = inv[u], inv[v]
        if (a, b) in drop or (b, a) in drop:
            continue
        edges.append((a, b))
    # strip degree-1 vertices until none remain
    while True:
        deg: dict = {}
        for a, b in edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        low = {v for v, d in deg.items() if d <= 1}
        if not low:
            break
        edges = [e for e in edges if not (set(e) & low)]
    verts = sorted({v for e in edges for v in e})
    named = [(v, (v[0] + v[1]) % 2 == 0) for v in verts]
    return _build(named, edges, "wall", n)


def heawood() -> GeneratedGraph:
    """Point-line incidence graph of the Fano plane."""
    named = [(("p", i), True) for i in range(7)]
    named += [(("l", i), False) for i in range(7)]
    edges = []
    for line in range(7):
        for p in (line, (line + 1) % 7, (line + 3) % 7):
            edges.append((("p", p), ("l", line)))
    matching = [(("p", line), ("l", line)) for line in range(7)]
    return _build(named, edges, "heawood", None, matching)


def complete_bipartite(s: int, t: int) -> GeneratedGraph:
    if s < 1 or t < 1:
        raise InputError("sides must be >= 1")
    named = [(("a", i), True) for i in range(s)]
    named += [(("b", j), False) for j in range(t)]
    edges = [(("a", i), ("b", j)) for i in range(s) for j in range(t)]
    matching = None
    if s == t:
        matching = [(("a", i), ("b", i)) for i in range(s)]
    return _build(named, edges, "ktt", (s, t), matching)


def _fixture_checksum(payload: dict) -> str:
    body = {k: v for k, v in payload.items() if k != "sha256"}
    blob = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def k44_model_in_rv4() -> tuple[GeneratedGraph, BipartiteGraph,
                                 MatchingMinorModel]:
    """The shipped model of K44 inside the refined vortex RV4.

    Returns (host, pattern, model); the fixture file is checksummed and
    never regenerated by code.
    """
    path = os.path.join(DATA_DIR, "k44_in_rv4.json")
    with open(path) as fh:
        payload = json.load(fh)
    if payload.get("sha256") != _fixture_checksum(payload):
        raise InputError("fixture checksum mismatch")
    host = refined_vortex(4)
    ids = host.names

    def vid(coord) -> int:
        return ids[(coord[0], coord[1])]

    pattern = complete_bipartite(4, 4).graph
    trees = {int(v): [vid(c) for c in tree]
             for v, tree in payload["trees"].items()}
    paths = {}
    for key, seq in payload["paths"].items():
        u, v = (int(x) for x in key.split("-"))
        paths[(u, v)] = [vid(c) for c in seq]
    residual = [tuple(sorted((vid(a), vid(b))))
                for a, b in payload["residual_matching"]]
    return host, pattern, MatchingMinorModel(trees, paths, residual)


FAMILIES = {
    "cg": (cylindrical_matching_grid, 1),
    "scmg": (single_crossing_matching_grid, 1),
    "ioscmg": (inside_out_scmg, 1),
    "cylsc": (cylindrical_single_crossing, 1),
    "cyljump": (cylindrical_single_jump, 1),
    "svmg": (shallow_vortex_matching_grid, 1),
    "rv": (refined_vortex, 1),
    "heawood": (heawood, 0),
    "ktt": (complete_bipartite, 2),
    "grid": (grid, 2),
    "wall": (wall, 1),
}


def make(family: str, params: list) -> GeneratedGraph:
    if family not in FAMILIES:
        raise InputError("unknown family %r" % family)
    fn, arity = FAMILIES[family]
    if len(params) != arity:
        raise InputError("family %r takes %d parameter(s)" % (family, arity))
    return fn(*[int(p) for p in params])
