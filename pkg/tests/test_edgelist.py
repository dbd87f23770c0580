import random

import pytest
from hypothesis import given, settings, strategies as st

from iterlin import (
    ParseError,
    are_isomorphic,
    make_graph,
    parse_edge_list,
    write_edge_list,
)
from conftest import random_connected_graph


def test_parse_labels_in_order_of_appearance():
    g = parse_edge_list("a b\nb c")
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2))
    assert g.labels == ("a", "b", "c")


def test_parse_comments_and_blank_lines():
    text = "# a triangle\n\nx y\ny z\n# middle comment\nz x\n"
    g = parse_edge_list(text)
    assert (g.n, g.m) == (3, 3)


def test_parse_isolated_vertex_lines():
    g = parse_edge_list("a b\nv lonely")
    assert g.n == 3
    assert g.m == 1
    assert "lonely" in g.labels


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("a b\nc c")
    assert exc.value.line_no == 2


def test_parse_rejects_malformed_line():
    with pytest.raises(ParseError):
        parse_edge_list("a b c")


def test_write_plain():
    g = make_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert write_edge_list(g) == "0 1\n0 2\n1 2"
    assert write_edge_list(make_graph(0, [])) == ""


def test_write_isolated_vertices():
    g = make_graph(3, [(0, 1)])
    assert "v 2" in write_edge_list(g)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_round_trip(seed):
    g = random_connected_graph(random.Random(seed), n_min=1, n_max=11)
    back = parse_edge_list(write_edge_list(g, relabel=True))
    assert (back.n, back.m) == (g.n, g.m)
    assert are_isomorphic(back, g)
