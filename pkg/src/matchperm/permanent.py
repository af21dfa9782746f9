"""Structural counting router: elementary components, tight-cut folding,
and per-brace routing between the Pfaffian, width-DP and oracle backends."""

from __future__ import annotations

from typing import Optional

from .errors import InputError, ResourceError, RoutingError
from .graph import BipartiteGraph, elementary_components
from .matching import is_brace
from .oracle import (ENUMERATION_BOUND, RYSER_BOUND, biadjacency,
                     enumerate_generating_function, ryser_permanent)
from .pfaffian import (is_pfaffian, kasteleyn_orientation,
                       pfaffian_generating_function, planar_embed)
from .pmw import (EXACT_PMW_BOUND, WIDTH_CAP, decomposition_width, exact_pmw,
                  generating_function_dp, heuristic_decomposition)
from .poly import ONE, ZERO, Poly
from .tightcut import contract_with_map, find_nontrivial_tight_cut


class BiadjacencyMatrix:
    """Square 0/1 (or polynomial) matrix with rows as blacks, columns as
    whites of the associated bipartite graph."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise InputError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def to_graph(self) -> tuple[BipartiteGraph, dict]:
        """The bipartite graph of the nonzero pattern plus edge labels."""
        n = self.n
        g = BipartiteGraph(n, n)
        labels = {}
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                p = a if isinstance(a, Poly) else Poly([a])
                if p.is_zero():
                    continue
                g.add_edge(i, n + j)
                labels[(i, n + j)] = p
        return g, labels

    @classmethod
    def from_graph(cls, g: BipartiteGraph) -> "BiadjacencyMatrix":
        if g.n_black != g.n_white:
            raise InputError("graph is not balanced")
        return cls(biadjacency(g))


def permanent(a: BiadjacencyMatrix, bound: int = RYSER_BOUND):
    """Exact permanent of a 0/1 matrix by the Ryser oracle."""
    flat = []
    for row in a.rows:
        for x in row:
            if x not in (0, 1):
                raise InputError("scalar permanent expects 0/1 entries")
            flat.append(x)
    return ryser_permanent(a.rows, bound)


class RoutingReport:
    """What the router did: per-brace route, widths, verdicts, warnings."""

    def __init__(self):
        self.components = 0
        self.braces = []
        self.warnings = []

    def add_brace(self, size: int, route: str, verdict: Optional[str] = None,
                  width: Optional[int] = None) -> None:
        entry = {"size": size, "route": route}
        if verdict is not None:
            entry["verdict"] = verdict
        if width is not None:
            entry["width"] = width
        self.braces.append(entry)

    def to_dict(self) -> dict:
        return {"components": self.components, "braces": self.braces,
                "warnings": self.warnings}


def _brace_gf(g: BipartiteGraph, labels: dict, route: str,
              report: RoutingReport, width_cap: int,
              oracle_bound: int) -> Poly:
    """Generating function of a single brace along the requested route."""
    if route == "pfaffian" or route == "auto":
        rot = planar_embed(g)
        if rot is not None:
            signs = kasteleyn_orientation(g, rot)
            report.add_brace(g.n, "pfaffian", verdict="pfaffian")
            return pfaffian_generating_function(g, signs, labels)
        if route == "pfaffian":
            raise RoutingError("forced pfaffian route on a non-planar brace")
    if route == "dp" or route == "auto":
        if g.n <= EXACT_PMW_BOUND:
            width, d = exact_pmw(g)
        else:
            d = heuristic_decomposition(g)
            width = decomposition_width(g, d)
        if width <= width_cap:
            report.add_brace(g.n, "dp", width=width)
            return generating_function_dp(g, labels, d, cap=width_cap)
        if route == "dp":
            raise RoutingError("forced dp route but width %d exceeds cap %d"
                               % (width, width_cap))
        report.warnings.append(
            "brace of size %d has width %d above cap %d; using oracle"
            % (g.n, width, width_cap))
    if g.n > oracle_bound:
        raise ResourceError("oracle fallback needs |V|=%d <= %d"
                            % (g.n, oracle_bound))
    report.add_brace(g.n, "oracle")
    return enumerate_generating_function(g, labels, oracle_bound)


def _covered_gf(g: BipartiteGraph, labels: dict, route: str,
                report: RoutingReport, width_cap: int,
                oracle_bound: int) -> Poly:
    """Generating function of a matching covered graph by tight-cut
    folding down to braces."""
    if g.n == 0:
        return ONE
    if g.n == 2:
        return labels[tuple(sorted((0, 1)))]
    if is_brace(g):
        return _brace_gf(g, labels, route, report, width_cap, oracle_bound)
    shore = find_nontrivial_tight_cut(g)
    if shore is None:
        # matching covered but neither brace nor decomposable: small
        # degenerate cases, answered directly
        report.warnings.append(
            "no nontrivial tight cut in a non-brace of size %d; using oracle"
            % g.n)
        return enumerate_generating_function(g, labels, oracle_bound)
    folded, old_ids = contract_with_map(g, shore)
    star = old_ids.index(None)
    # label rule for the contraction: each star edge absorbs the shore-side
    # matchings that free the matched endpoint of one crossing edge
    new_labels = {}
    shore_list = sorted(shore)
    local = {o: i for i, o in enumerate(shore_list)}
    sub, _ = g.induced(shore_list)
    for a, b in folded.edges:
        if star not in (a, b):
            oa, ob = old_ids[a], old_ids[b]
            new_labels[(a, b)] = labels[tuple(sorted((oa, ob)))]
            continue
        y = old_ids[b] if a == star else old_ids[a]
        total = ZERO
        for x in sorted(g.adj[y] & shore):
            keep = [i for i in range(sub.n) if i != local[x]]
            inner, inner_old = sub.induced(keep)
            inner_labels = {}
            for u, v in inner.edges:
                ou = shore_list[inner_old[u]]
                ov = shore_list[inner_old[v]]
                inner_labels[(u, v)] = labels[tuple(sorted((ou, ov)))]
            part = _component_gf(inner, inner_labels, route, report,
                                 width_cap, oracle_bound)
            total = total + part * labels[tuple(sorted((x, y)))]
        new_labels[(a, b)] = total
    return _covered_gf(folded, new_labels, route, report, width_cap,
                       oracle_bound)


def _component_gf(g: BipartiteGraph, labels: dict, route: str,
                  report: RoutingReport, width_cap: int,
                  oracle_bound: int) -> Poly:
    """Generating function of an arbitrary balanced graph: restrict to
    admissible edges, then multiply over matching covered components."""
    if g.n == 0:
        return ONE
    if g.n_black != g.n_white or g.find_perfect_matching() is None:
        return ZERO
    comps, _ = elementary_components(g)
    result = ONE
    for sub, old in comps:
        sub_labels = {}
        for u, v in sub.edges:
            sub_labels[(u, v)] = labels[tuple(sorted((old[u], old[v])))]
        result = result * _covered_gf(sub, sub_labels, route, report,
                                      width_cap, oracle_bound)
    return result


def generating_function(g: BipartiteGraph, labels: Optional[dict] = None,
                        route: str = "auto", width_cap: int = WIDTH_CAP,
                        oracle_bound: int = ENUMERATION_BOUND
                        ) -> tuple[Poly, RoutingReport]:
    """Matching generating function with a routing report.

    labels maps each edge (b, w) to an integer polynomial; missing edges
    default to the monomial x.  route is one of auto, pfaffian, dp, oracle.
    """
    if route not in ("auto", "pfaffian", "dp", "oracle"):
        raise InputError("unknown route %r" % route)
    if labels is None:
        labels = {}
    full = {}
    for u, v in g.edges:
        full[(u, v)] = labels.get((u, v), Poly([0, 1]))
    report = RoutingReport()
    report.components = len(g.components())
    if route == "oracle":
        if g.n > oracle_bound:
            raise ResourceError("oracle route needs |V|=%d <= %d"
                                % (g.n, oracle_bound))
        report.add_brace(g.n, "oracle")
        return enumerate_generating_function(g, full, oracle_bound), report
    gf = _component_gf(g, full, route, report, width_cap, oracle_bound)
    return gf, report


def count_perfect_matchings(g: BipartiteGraph, route: str = "auto",
                            width_cap: int = WIDTH_CAP,
                            oracle_bound: int = ENUMERATION_BOUND
                            ) -> tuple[int, RoutingReport]:
    """Number of perfect matchings via the structural pipeline."""
    ones = {e: ONE for e in g.edges}
    gf, report = generating_function(g, ones, route, width_cap, oracle_bound)
    return gf.coeff(0), report


def weighted_generating_function(g: BipartiteGraph, weights: dict,
                                 route: str = "auto",
                                 width_cap: int = WIDTH_CAP,
                                 oracle_bound: int = ENUMERATION_BOUND
                                 ) -> tuple[Poly, RoutingReport]:
    """Generating function with labels x^{w(e)} from integer edge weights."""
    labels = {}
    for u, v in g.edges:
        w = weights.get((u, v), weights.get((v, u), 1))
        if w < 0:
            raise InputError("edge weights must be nonnegative")
        labels[(u, v)] = Poly.x_power(w)
    return generating_function(g, labels, route, width_cap, oracle_bound)
