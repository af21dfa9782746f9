"""Shared serialisation: the JSON graph format, the plain edge-list text
format, and JSON views of decompositions, models and orientations.

Graph JSON: {"black": [ids], "white": [ids], "edges": [[u, v], ...],
"labels": {"u-v": [c0, c1, ...]}} with polynomial coefficient arrays,
constant term first.  Blacks are numbered 0..n_black-1 and whites
n_black..n_black+n_white-1.
"""

from __future__ import annotations

import json
from typing import Optional, TextIO

from .errors import InputError
from .graph import BipartiteGraph
from .minors import MatchingMinorModel
from .pmw import DecompNode, PerfectMatchingDecomposition
from .poly import Poly
from .tightcut import TightCutTree


def graph_to_dict(g: BipartiteGraph, labels: Optional[dict] = None) -> dict:
    out = {
        "black": list(g.blacks()),
        "white": list(g.whites()),
        "edges": [[u, v] for u, v in g.edges],
    }
    if labels:
        out["labels"] = {"%d-%d" % e: list(p.coeffs)
                         for e, p in sorted(labels.items())}
    return out


def graph_from_dict(data: dict) -> tuple[BipartiteGraph, Optional[dict]]:
    try:
        black = list(data["black"])
        white = list(data["white"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise InputError("malformed graph JSON: %s" % exc)
    if black != list(range(len(black))):
        raise InputError("black ids must be 0..n_black-1")
    if white != list(range(len(black), len(black) + len(white))):
        raise InputError("white ids must follow the blacks contiguously")
    g = BipartiteGraph(len(black), len(white))
    for u, v in edges:
        g.add_edge(*sorted((u, v)))
    labels = None
    if "labels" in data:
        labels = {}
        for key, coeffs in data["labels"].items():
            u, v = (int(t) for t in key.split("-"))
            e = tuple(sorted((u, v)))
            if not g.has_edge(*e):
                raise InputError("label on missing edge %s" % key)
            labels[e] = Poly(list(coeffs))
    return g, labels


def load_graph(fh: TextIO) -> tuple[BipartiteGraph, Optional[dict]]:
    """Reads either the JSON format or the edge-list text format."""
    text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("invalid JSON: %s" % exc)
        return graph_from_dict(data)
    return parse_edge_list(text), None


def parse_edge_list(text: str) -> BipartiteGraph:
    """First line "n_black n_white m", then one "u v" line per edge."""
    lines = [ln for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise InputError("empty edge-list input")
    try:
        nb, nw, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise InputError("edge-list header must be 'n_black n_white m'")
    if len(lines) - 1 != m:
        raise InputError("expected %d edge lines, found %d"
                         % (m, len(lines) - 1))
    g = BipartiteGraph(nb, nw)
    for ln in lines[1:]:
        try:
            u, v = (int(t) for t in ln.split())
        except ValueError:
            raise InputError("bad edge line %r" % ln)
        g.add_edge(*sorted((u, v)))
    return g


def dump_edge_list(g: BipartiteGraph) -> str:
    lines = ["%d %d %d" % (g.n_black, g.n_white, g.m)]
    lines += ["%d %d" % e for e in g.edges]
    return "\n".join(lines) + "\n"


def decomposition_to_dict(d: PerfectMatchingDecomposition) -> dict:
    """Tree as a parent array plus leaf -> vertex map."""
    parents = []
    leaf_of = {}

    def rec(node: DecompNode, parent: int) -> None:
        idx = len(parents)
        parents.append(parent)
        if node.is_leaf():
            leaf_of[idx] = node.vertex
        for c in node.children:
            rec(c, idx)

    rec(d.root, -1)
    return {"parents": parents,
            "leaves": {str(k): v for k, v in leaf_of.items()}}


def decomposition_from_dict(data: dict) -> PerfectMatchingDecomposition:
    try:
        parents = list(data["parents"])
        leaf_of = {int(k): v for k, v in data["leaves"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed decomposition JSON: %s" % exc)
    nodes = []
    for i, p in enumerate(parents):
        nodes.append(DecompNode(vertex=leaf_of.get(i)))
    root = None
    for i, p in enumerate(parents):
        if p == -1:
            root = nodes[i]
        else:
            nodes[p].children.append(nodes[i])
    if root is None:
        raise InputError("decomposition has no root")
    return PerfectMatchingDecomposition(root)


def tree_to_dict(tree: TightCutTree) -> dict:
    """Tight-cut tree as a node list with parent links and expansion maps."""
    nodes = []

    def rec(node: TightCutTree, parent: int) -> int:
        idx = len(nodes)
        entry = {
            "parent": parent,
            "graph": graph_to_dict(node.graph),
            "shore": sorted(node.shore) if node.shore is not None else None,
        }
        nodes.append(entry)
        for child, cmap in zip(node.children, node.child_maps):
            cidx = rec(child, idx)
            nodes[cidx]["expansion"] = [
                (-1 if o is None else o) for o in cmap]
        return idx

    rec(tree, -1)
    return {"nodes": nodes}


def model_to_dict(model: MatchingMinorModel) -> dict:
    out = {
        "trees": {str(k): sorted(vs) for k, vs in model.trees.items()},
        "paths": {"%d-%d" % k: list(p) for k, p in model.paths.items()},
    }
    if model.residual_matching is not None:
        out["residual_matching"] = [list(e)
                                    for e in sorted(model.residual_matching)]
    return out


def model_from_dict(data: dict) -> MatchingMinorModel:
    try:
        trees = {int(k): list(vs) for k, vs in data["trees"].items()}
        paths = {}
        for key, p in data["paths"].items():
            a, b = (int(t) for t in key.split("-"))
            paths[(a, b)] = list(p)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed model JSON: %s" % exc)
    residual = None
    if "residual_matching" in data:
        residual = [tuple(e) for e in data["residual_matching"]]
    return MatchingMinorModel(trees, paths, residual)


def signs_to_dict(signs: dict) -> dict:
    return {"%d-%d" % e: s for e, s in sorted(signs.items())}


def poly_to_list(p: Poly) -> list:
    return list(p.coeffs)
