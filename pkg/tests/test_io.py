from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from conftest import FIXTURES, graphs
from subcomp import graph as gr
from subcomp.io import (
    ParseError,
    format_weight,
    parse_edge_list,
    parse_graph6,
    parse_weights,
    scale_weights,
    write_edge_list,
    write_graph6,
)

EDGE_LISTS = sorted(FIXTURES.glob("*.el"))


def test_parse_p3():
    assert parse_edge_list("3 2\n0 1\n1 2") == gr.path(3)


def test_parse_c4():
    assert parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == gr.cycle(4)


def test_comments_and_blank_lines_are_ignored():
    assert parse_edge_list("# a path\n3 2\n\n0 1\n# middle\n1 2\n") == gr.path(3)


@pytest.mark.parametrize("text, message", [
    ("2 1\n0 2", "vertex id out of range at line 2"),
    ("3 1\n1 1", "self-loop at line 2"),
    ("3 1\n0 x", "non-integer token 'x' at line 2"),
    ("3\n0 1", "malformed header at line 1"),
    ("3 2\n0 1", "header announces 2 edges but 1"),
    ("", "missing 'n m' header"),
    ("# only a comment", "missing 'n m' header"),
    ("3 1\n0 1 2", "expected 'u v' at line 2"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_edge_list(text)


def test_write_canonical_form():
    assert write_edge_list(gr.path(3)) == "3 2\n0 1\n1 2"
    assert write_edge_list(gr.edgeless(3)) == "3 0"
    assert write_edge_list(parse_edge_list("3 2\n2 1\n1 0")) == "3 2\n0 1\n1 2"


@given(graphs(max_n=12))
def test_edge_list_round_trip(g):
    assert parse_edge_list(write_edge_list(g)) == g


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


@pytest.mark.parametrize("path", EDGE_LISTS, ids=lambda p: p.stem)
def test_fixture_files_are_canonical(path):
    text = path.read_text(encoding="utf-8")
    g = parse_edge_list(text)
    assert write_edge_list(g) + "\n" == text
    assert parse_graph6(write_graph6(g)) == g


def test_graph6_examples():
    assert parse_graph6("Bw") == gr.complete(3)
    assert parse_graph6("B?") == gr.edgeless(3)
    assert write_graph6(gr.complete(3)) == "Bw"
    assert parse_graph6((FIXTURES / "k3.g6").read_text()) == gr.complete(3)


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(_to_nx(g), header=False).decode().strip()
    assert write_graph6(g) == expected
    back = nx.from_graph6_bytes(expected.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def _to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("text", ["", "B", "Bw?", "B\x7f", "~??"])
def test_graph6_errors(text):
    with pytest.raises(ParseError):
        parse_graph6(text)


def test_weights_default_to_one():
    assert parse_weights("", 3) == (1, 1, 1)
    assert parse_weights("1 10", 3) == (1, 10, 1)


def test_decimal_weights_are_exact():
    w = parse_weights("# comment\n0 0.1\n2 0.2", 3)
    assert w == (Fraction(1, 10), 1, Fraction(1, 5))
    assert w[0] + w[2] == Fraction(3, 10)


@pytest.mark.parametrize("text, message", [
    ("0 0", "weight must be positive"),
    ("0 -2", "weight must be positive"),
    ("0 1\n0 2", "duplicate weight for vertex 0"),
    ("3 1", "vertex id out of range"),
    ("0 1/2", "malformed weight"),
    ("0 nan", "malformed weight"),
    ("0", "expected 'v w'"),
])
def test_weight_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_weights(text, 3)


def test_scale_weights():
    ints, d = scale_weights([Fraction(1, 2), Fraction(1, 3), 2])
    assert d == 6 and ints == (3, 2, 12)
    assert scale_weights([]) == ((), 1)


@pytest.mark.parametrize("value, text", [
    (Fraction(3), 3), (Fraction(5, 2), "2.5"), (Fraction(1, 8), "0.125"),
    (Fraction(21, 20), "1.05"), (Fraction(-7, 4), "-1.75"),
])
def test_format_weight(value, text):
    assert format_weight(value) == text


def test_format_weight_rejects_repeating_decimals():
    with pytest.raises(ValueError):
        format_weight(Fraction(1, 3))
