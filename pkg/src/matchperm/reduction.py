"""Sign-crossing gadget replacement and the chi-weighted counting identity.

Replacing a declared crossing pair (e, f) by the planar gadget turns the
chi-weighted matching sum of the host into the signed matching count of
the replaced graph.  The gadget carries one -1 edge (its central chord);
an entirely unweighted gadget cannot reproduce the identity, since the
chi sum can be negative while unsigned counts cannot.
"""

from __future__ import annotations

from typing import Iterable

from .errors import InputError, ResourceError
from .graph import BipartiteGraph
from .oracle import enumerate_perfect_matchings

ORACLE_BOUND = 28


class CrossingSpec:
    """Ordered list of vertex-disjoint edge pairs declared as crossings."""

    def __init__(self, pairs: Iterable[tuple]):
        self.pairs = [((tuple(sorted(e))), tuple(sorted(f)))
                      for e, f in pairs]

    def validate(self, g: BipartiteGraph) -> None:
        seen = set()
        for e, f in self.pairs:
            for edge in (e, f):
                if not g.has_edge(*edge):
                    raise InputError("edge %r not in graph" % (edge,))
                if edge in seen:
                    raise InputError("edge %r listed twice" % (edge,))
                seen.add(edge)
            if set(e) & set(f):
                raise InputError("crossing pair shares a vertex")


def sign_crossing_replace(g: BipartiteGraph, spec: CrossingSpec,
                          mirror: bool = False
                          ) -> tuple[BipartiteGraph, dict]:
    """Replace each crossing pair by the 6-vertex planar gadget.

    Returns (graph, signs) where signs maps every edge of the new graph to
    +1 or -1; exactly one gadget edge (the chord) per crossing is -1.
    With mirror=True the roles of the two edges in each pair are swapped
    (the gadget itself is symmetric under this exchange).
    """
    spec.validate(g)
    drop = set()
    for e, f in spec.pairs:
        drop.add(e)
        drop.add(f)
    blacks = [("v", x) for x in g.blacks()]
    whites = [("v", x) for x in g.whites()]
    gadget_edges = []
    neg_edges = []
    for idx, (e, f) in enumerate(spec.pairs):
        if mirror:
            e, f = f, e
        xb, xw = e
        yb, yw = f
        a, b, c, d, p, q = (("g", idx, t) for t in "abcdpq")
        # a, c, q are white; b, d, p are black
        whites += [a, c, q]
        blacks += [b, d, p]
        hexagon = [(b, c), (c, p), (p, a), (a, d), (d, q), (q, b)]
        ports = [(("v", xb), a), (("v", xw), b), (("v", yb), c),
                 (("v", yw), d)]
        gadget_edges += hexagon + ports
        gadget_edges.append((p, q))
        neg_edges.append((p, q))
    ids = {}
    for i, nm in enumerate(blacks):
        ids[nm] = i
    for i, nm in enumerate(whites):
        ids[nm] = len(blacks) + i
    out = BipartiteGraph(len(blacks), len(whites))
    signs = {}
    for u, v in g.edges:
        if (u, v) in drop:
            continue
        edge = tuple(sorted((ids[("v", u)], ids[("v", v)])))
        out.add_edge(*edge)
        signs[edge] = 1
    negs = {tuple(sorted((ids[x], ids[y]))) for x, y in
            ((a, b) for a, b in neg_edges)}
    for x, y in gadget_edges:
        edge = tuple(sorted((ids[x], ids[y])))
        out.add_edge(*edge)
        signs[edge] = -1 if edge in negs else 1
    return out, signs


def signed_matching_count(g: BipartiteGraph, signs: dict,
                          bound: int = ORACLE_BOUND):
    """Sum over perfect matchings of the product of edge signs."""
    total = 0
    for m in enumerate_perfect_matchings(g, bound):
        term = 1
        for e in m:
            term *= signs[e]
        total += term
    return total


def chi_weight_sum(g: BipartiteGraph, spec: CrossingSpec,
                   bound: int = ORACLE_BOUND):
    """Sum over perfect matchings of prod chi(e_i, f_i), where chi is -1
    when both edges of the pair are used and +1 otherwise."""
    spec.validate(g)
    if g.n > bound:
        raise ResourceError("|V|=%d exceeds oracle bound %d" % (g.n, bound))
    total = 0
    for m in enumerate_perfect_matchings(g, bound):
        ms = set(m)
        term = 1
        for e, f in spec.pairs:
            if e in ms and f in ms:
                term = -term
        total += term
    return total
