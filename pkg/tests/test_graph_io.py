import pytest

from netmend.core.exceptions import GraphParseError
from netmend.services.graph_core import build_graph
from netmend.services.graph_io import load_edge_list, save_edge_list


def write(tmp_path, text: str):
    path = tmp_path / "graph.txt"
    path.write_text(text)
    return path


def test_load_assigns_ids_in_order_of_appearance(tmp_path):
    g = load_edge_list(write(tmp_path, "a b\nb c\n"))

    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    assert g.graph["labels"] == ["a", "b", "c"]


def test_load_drops_duplicates_and_self_loops(tmp_path):
    g = load_edge_list(write(tmp_path, "a b\nb a\nc c\nb c 0.5\n"))

    assert g.number_of_edges() == 2
    assert g.graph["duplicates"] == 1
    assert g.graph["self_loops"] == 1
    assert g.number_of_nodes() == 3


def test_load_skips_comments_and_blank_lines(tmp_path):
    g = load_edge_list(write(tmp_path, "# SNAP header\n\n1 2\n# 9 9\n2 3\n"))
    assert g.number_of_edges() == 2


def test_load_reports_malformed_line(tmp_path):
    with pytest.raises(GraphParseError) as e:
        load_edge_list(write(tmp_path, "1 2\n3\n"))
    assert e.value.line_number == 2


def test_load_reports_invalid_utf8(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_bytes(b"a b\n\xff\xfe c\n")

    with pytest.raises(GraphParseError) as e:
        load_edge_list(path)
    assert e.value.line_number == 2


def test_load_accepts_utf8_labels(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_bytes("ä ö\r\nö ü\n".encode())

    g = load_edge_list(path)
    assert g.graph["labels"] == ["ä", "ö", "ü"]


def test_node_pragma_declares_isolated_node(tmp_path):
    g = load_edge_list(write(tmp_path, "# node z\nx y\n"))
    assert g.number_of_nodes() == 3
    assert g.degree(0) == 0
    assert g.graph["labels"][0] == "z"


def test_missing_file():
    with pytest.raises(OSError):
        load_edge_list("/nonexistent/graph.txt")


def test_save_then_load_keeps_isolated_nodes(tmp_path):
    g = build_graph(6, [(0, 1), (1, 2), (4, 5)])
    path = tmp_path / "out.txt"
    save_edge_list(g, path)

    loaded = load_edge_list(path)
    labels = [int(label) for label in loaded.graph["labels"]]
    edges = sorted(tuple(sorted((labels[u], labels[v]))) for u, v in loaded.edges())

    assert loaded.number_of_nodes() == 6
    assert edges == [(0, 1), (1, 2), (4, 5)]


def test_save_is_sorted_with_lf_endings(tmp_path):
    path = tmp_path / "out.txt"
    save_edge_list(build_graph(4, [(2, 1), (0, 3)]), path)

    assert path.read_bytes() == b"# netmend edge list n=4 m=2\n0 3\n1 2\n"
