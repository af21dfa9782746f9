"""Command-line front end: generation, analysis, counting, and the
structural toolbox, with reproducible JSON output."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from . import __version__
from .errors import InputError, ResourceError, RoutingError
from .generators import FAMILIES, make
from .graph import BipartiteGraph
from .jsonio import (decomposition_to_dict, dump_edge_list, graph_to_dict,
                     load_graph, model_to_dict, signs_to_dict, tree_to_dict)
from .matching import is_brace, is_matching_covered
from .minors import (BISUBDIVISION_BOUND, contains_matching_minor,
                     find_conformal_bisubdivision)
from .oracle import ENUMERATION_BOUND
from .pfaffian import is_pfaffian, kasteleyn_orientation, planar_embed
from .pmw import (EXACT_PMW_BOUND, WIDTH_CAP, decomposition_width, exact_pmw,
                  heuristic_decomposition)
from .poly import Poly
from .permanent import (count_perfect_matchings, generating_function,
                        weighted_generating_function)
from .reduction import (CrossingSpec, chi_weight_sum, sign_crossing_replace,
                        signed_matching_count)
from .tightcut import tight_cut_decomposition

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ROUTING = 3
EXIT_RESOURCE = 4


def _meta(args, **bounds) -> dict:
    return {"version": __version__, "seed": args.seed, "bounds": bounds}


def _emit(args, data: dict, text_lines: Optional[list] = None) -> None:
    if args.format == "json":
        out = json.dumps(data, sort_keys=True, indent=2,
                         separators=(",", ": "))
        print(out)
    else:
        for line in text_lines or [json.dumps(data, sort_keys=True)]:
            print(line)


def _read_graph(path: str):
    if path == "-":
        return load_graph(sys.stdin)
    with open(path) as fh:
        return load_graph(fh)


def _read_json(path: str):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError("invalid JSON in %s: %s" % (path, exc))


def _edge_key_map(data: dict) -> dict:
    out = {}
    for key, val in data.items():
        u, v = (int(t) for t in key.split("-"))
        out[tuple(sorted((u, v)))] = val
    return out


def cmd_gen(args) -> int:
    if args.family not in FAMILIES:
        raise InputError("unknown family %r (choose from %s)"
                         % (args.family, ", ".join(sorted(FAMILIES))))
    gen = make(args.family, args.params)
    data = graph_to_dict(gen.graph)
    data["family"] = gen.family
    data["params"] = list(args.params)
    data["names"] = {str(k): v for k, v in
                     sorted((str(name), vid)
                            for name, vid in gen.names.items())}
    if gen.canonical_matching is not None:
        data["canonical_matching"] = [list(e)
                                      for e in gen.canonical_matching]
    rot = gen.rotation()
    if rot is not None:
        data["rotation"] = {str(v): ns for v, ns in
                            sorted(rot.rotation.items())}
    data.update(_meta(args))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, sort_keys=True, indent=2)
            fh.write("\n")
        print("wrote %s (%d vertices, %d edges)"
              % (args.out, gen.graph.n, gen.graph.m))
    else:
        _emit(args, data, [dump_edge_list(gen.graph).rstrip("\n")])
    return EXIT_OK


def cmd_count(args) -> int:
    g, labels = _read_graph(args.input)
    data = _meta(args, width_cap=args.width_cap,
                 oracle_bound=args.oracle_bound)
    if args.weights:
        weights = _edge_key_map(_read_json(args.weights))
        gf, report = weighted_generating_function(
            g, weights, route=args.route, width_cap=args.width_cap,
            oracle_bound=args.oracle_bound)
        data["polynomial"] = list(gf.coeffs)
        data["count"] = str(gf(1))
        text = ["generating function coefficients: %s" % (list(gf.coeffs),),
                "total matchings: %d" % gf(1)]
    elif labels:
        gf, report = generating_function(
            g, labels, route=args.route, width_cap=args.width_cap,
            oracle_bound=args.oracle_bound)
        data["polynomial"] = list(gf.coeffs)
        data["count"] = str(gf(1))
        text = ["generating function coefficients: %s" % (list(gf.coeffs),),
                "total matchings: %d" % gf(1)]
    else:
        count, report = count_perfect_matchings(
            g, route=args.route, width_cap=args.width_cap,
            oracle_bound=args.oracle_bound)
        data["count"] = str(count)
        text = ["perfect matchings: %d" % count]
    data["routing_report"] = report.to_dict()
    for b in report.braces:
        text.append("  brace size %d via %s%s" % (
            b["size"], b["route"],
            " (width %d)" % b["width"] if "width" in b else ""))
    for w in report.warnings:
        text.append("  warning: %s" % w)
    _emit(args, data, text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g, _ = _read_graph(args.input)
    data = _meta(args, search_bound=args.bound)
    covered = is_matching_covered(g)
    data["matching_covered"] = covered
    data["brace"] = is_brace(g)
    text = ["matching covered: %s" % covered, "brace: %s" % data["brace"]]
    if data["brace"]:
        verdict = is_pfaffian(g, args.bound)
        data["pfaffian"] = verdict
        text.append("pfaffian: %s" % verdict)
    if covered and not data["brace"] and g.n >= 6:
        tree = tight_cut_decomposition(g)
        braces = tree.braces()
        data["braces"] = [{"n": b.n, "m": b.m} for b in braces]
        text.append("brace decomposition: %s"
                    % ", ".join("%d vertices" % b.n for b in braces))
    if g.has_perfect_matching():
        if g.n <= EXACT_PMW_BOUND:
            width, _ = exact_pmw(g)
            data["pmw"] = {"width": width, "method": "exact"}
        else:
            d = heuristic_decomposition(g)
            width = decomposition_width(g, d)
            data["pmw"] = {"width": width, "method": "heuristic"}
        text.append("perfect matching width: %d (%s)"
                    % (width, data["pmw"]["method"]))
    _emit(args, data, text)
    return EXIT_OK


def cmd_pmw(args) -> int:
    g, _ = _read_graph(args.input)
    data = _meta(args, exact_bound=args.exact_bound)
    if g.n <= args.exact_bound:
        width, d = exact_pmw(g, args.exact_bound)
        data["method"] = "exact"
    else:
        d = heuristic_decomposition(g)
        width = decomposition_width(g, d)
        data["method"] = "heuristic"
    data["width"] = width
    data["decomposition"] = decomposition_to_dict(d)
    _emit(args, data, ["width: %d (%s)" % (width, data["method"])])
    return EXIT_OK


def cmd_pfaffian(args) -> int:
    g, _ = _read_graph(args.input)
    data = _meta(args, search_bound=args.bound)
    verdict = is_pfaffian(g, args.bound)
    data["verdict"] = verdict
    text = ["verdict: %s" % verdict]
    rot = planar_embed(g)
    if rot is not None:
        signs = kasteleyn_orientation(g, rot)
        data["signs"] = signs_to_dict(signs)
        text.append("planar; Kasteleyn signing attached")
    _emit(args, data, text)
    return EXIT_OK


def cmd_minor(args) -> int:
    g, _ = _read_graph(args.host)
    h, _ = _read_graph(args.pattern)
    data = _meta(args, search_bound=args.bound)
    if h.max_degree() <= 3:
        found = find_conformal_bisubdivision(g, h, args.bound)
        data["contains"] = found is not None
        if found is not None:
            data["model"] = model_to_dict(found)
    else:
        data["contains"] = contains_matching_minor(g, h, args.bound)
    _emit(args, data, ["contains matching minor: %s" % data["contains"]])
    return EXIT_OK


def cmd_decompose(args) -> int:
    g, _ = _read_graph(args.input)
    data = _meta(args)
    rng = random.Random(args.seed)
    tree = tight_cut_decomposition(g, rng if args.shuffle else None)
    data["tree"] = tree_to_dict(tree)
    braces = tree.braces()
    data["braces"] = [{"n": b.n, "m": b.m} for b in braces]
    _emit(args, data, ["%d braces: %s" % (
        len(braces), ", ".join("%d vertices" % b.n for b in braces))])
    return EXIT_OK


def cmd_gadget(args) -> int:
    g, _ = _read_graph(args.input)
    pairs = [(tuple(p[0]), tuple(p[1])) for p in _read_json(args.crossings)]
    spec = CrossingSpec(pairs)
    out, signs = sign_crossing_replace(g, spec, mirror=args.mirror)
    data = _meta(args, oracle_bound=args.oracle_bound)
    data["graph"] = graph_to_dict(out)
    data["signs"] = signs_to_dict(signs)
    text = ["replaced graph: %d vertices, %d edges" % (out.n, out.m)]
    if out.n <= args.oracle_bound:
        lhs = chi_weight_sum(g, spec, args.oracle_bound)
        rhs = signed_matching_count(out, signs, args.oracle_bound)
        data["chi_weight_sum"] = str(lhs)
        data["signed_count"] = str(rhs)
        text.append("chi-weighted sum %d, signed count %d" % (lhs, rhs))
    _emit(args, data, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="matchperm",
        description="Permanents and perfect matchings via brace "
                    "decompositions, Pfaffian counting and width DP.")
    ap.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for all randomised steps (default 0)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common],
                       help="generate a named graph family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--out", help="write JSON to a file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", parents=[common],
                       help="count perfect matchings / generating function")
    p.add_argument("input")
    p.add_argument("--route", choices=("auto", "pfaffian", "dp", "oracle"),
                   default="auto")
    p.add_argument("--weights", help="JSON file of edge weights u-v -> int")
    p.add_argument("--width-cap", type=int, default=WIDTH_CAP)
    p.add_argument("--oracle-bound", type=int, default=ENUMERATION_BOUND)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("analyze", parents=[common],
                       help="structural summary of a graph")
    p.add_argument("input")
    p.add_argument("--bound", type=int, default=BISUBDIVISION_BOUND)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pmw", parents=[common],
                       help="perfect matching width and a decomposition")
    p.add_argument("input")
    p.add_argument("--exact-bound", type=int, default=EXACT_PMW_BOUND)
    p.set_defaults(func=cmd_pmw)

    p = sub.add_parser("pfaffian", parents=[common],
                       help="Pfaffian verdict for a brace")
    p.add_argument("input")
    p.add_argument("--bound", type=int, default=BISUBDIVISION_BOUND)
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("minor", parents=[common],
                       help="matching minor containment check")
    p.add_argument("host")
    p.add_argument("pattern")
    p.add_argument("--bound", type=int, default=BISUBDIVISION_BOUND)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("decompose", parents=[common],
                       help="tight cut decomposition into braces")
    p.add_argument("input")
    p.add_argument("--shuffle", action="store_true",
                   help="randomise the decomposition order (uses --seed)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gadget", parents=[common],
                       help="sign-crossing gadget replacement")
    p.add_argument("input")
    p.add_argument("--crossings", required=True,
                   help="JSON file: list of [[u,v],[x,y]] edge pairs")
    p.add_argument("--mirror", action="store_true")
    p.add_argument("--oracle-bound", type=int, default=ENUMERATION_BOUND)
    p.set_defaults(func=cmd_gadget)
    return ap


def main(argv: Optional[list] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except RoutingError as exc:
        print("routing error: %s" % exc, file=sys.stderr)
        return EXIT_ROUTING
    except ResourceError as exc:
        print("resource error: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
