"""Round trips through the shared JSON and edge-list formats."""

import io
import json

import pytest

from matchperm.errors import InputError
from matchperm.jsonio import (decomposition_from_dict, decomposition_to_dict,
                              dump_edge_list, graph_from_dict, graph_to_dict,
                              load_graph, model_from_dict, model_to_dict,
                              parse_edge_list, signs_to_dict, tree_to_dict)
from matchperm.pmw import decomposition_width, exact_pmw
from matchperm.poly import Poly
from matchperm.tightcut import tight_cut_decomposition

from conftest import cycle_graph


def test_graph_roundtrip(c6):
    data = graph_to_dict(c6)
    g, labels = graph_from_dict(data)
    assert labels is None
    assert g.n == c6.n and sorted(g.edges) == sorted(c6.edges)


def test_graph_roundtrip_with_labels(c4):
    labels = {e: Poly([0, i + 1]) for i, e in enumerate(sorted(c4.edges))}
    data = graph_to_dict(c4, labels)
    g, back = graph_from_dict(data)
    assert back == labels


def test_graph_json_validation():
    with pytest.raises(InputError):
        graph_from_dict({"black": [1], "white": [2], "edges": []})
    with pytest.raises(InputError):
        graph_from_dict({"black": [0], "white": [2], "edges": []})
    with pytest.raises(InputError):
        graph_from_dict({"black": [0], "white": [1], "edges": [],
                         "labels": {"0-1": [1]}})


def test_edge_list_roundtrip(c6):
    text = dump_edge_list(c6)
    g = parse_edge_list(text)
    assert sorted(g.edges) == sorted(c6.edges)
    assert text.splitlines()[0] == "3 3 6"


def test_edge_list_errors():
    with pytest.raises(InputError):
        parse_edge_list("")
    with pytest.raises(InputError):
        parse_edge_list("1 1 2\n0 1\n")  # count mismatch


def test_load_graph_detects_format(c4):
    as_json = json.dumps(graph_to_dict(c4))
    g1, _ = load_graph(io.StringIO(as_json))
    g2, _ = load_graph(io.StringIO(dump_edge_list(c4)))
    assert sorted(g1.edges) == sorted(g2.edges) == sorted(c4.edges)


def test_decomposition_roundtrip(c6):
    width, d = exact_pmw(c6)
    data = decomposition_to_dict(d)
    back = decomposition_from_dict(data)
    assert decomposition_width(c6, back) == width
    assert sorted(back.leaves()) == sorted(d.leaves())


def test_tree_serialisation(c6):
    tree = tight_cut_decomposition(c6)
    data = tree_to_dict(tree)
    assert data["nodes"][0]["parent"] == -1
    assert len(data["nodes"]) >= 3
    for node in data["nodes"][1:]:
        assert "expansion" in node


def test_model_roundtrip():
    from matchperm.generators import k44_model_in_rv4

    _, _, model = k44_model_in_rv4()
    back = model_from_dict(model_to_dict(model))
    assert back.trees.keys() == model.trees.keys()
    assert back.paths == model.paths
    assert sorted(back.residual_matching) == \
        sorted(tuple(e) for e in model.residual_matching)


def test_signs_to_dict():
    assert signs_to_dict({(0, 2): 1, (1, 3): -1}) == {"0-2": 1, "1-3": -1}
