import pytest

from iterlin import (
    BadVertexId,
    DuplicateEdge,
    SelfLoop,
    ShapeClass,
    degree_profile,
    is_connected,
    is_prolific,
    make_graph,
    shape_class,
    validate_graph,
)


def test_validate_canonicalizes_edge_order():
    g = validate_graph([(2, 1), (1, 0)], 3)
    assert g.edges == ((0, 1), (1, 2))
    assert g.n == 3
    assert g.m == 2


def test_validate_rejects_self_loop():
    with pytest.raises(SelfLoop):
        validate_graph([(0, 0)], 1)


def test_validate_rejects_duplicate_in_either_orientation():
    with pytest.raises(DuplicateEdge):
        validate_graph([(0, 1), (1, 0)], 2)


def test_validate_rejects_out_of_range():
    with pytest.raises(BadVertexId):
        validate_graph([(0, 5)], 3)


def test_degrees_and_profile():
    g = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert g.degrees() == [3, 1, 1, 1]
    prof = degree_profile(g)
    assert prof.max_degree == 3
    assert prof.odd_vertices == {0, 1, 2, 3}
    assert prof.even_vertices == set()


def test_connectivity():
    assert is_connected(make_graph(1, []))
    assert is_connected(make_graph(3, [(0, 1), (1, 2)]))
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))
    assert not is_connected(make_graph(2, []))


def test_shape_class_variants():
    assert shape_class(make_graph(4, [(0, 1), (1, 2), (2, 3)])).kind == ShapeClass.PATH
    assert shape_class(make_graph(1, [])).kind == ShapeClass.PATH
    assert shape_class(make_graph(3, [(0, 1), (1, 2), (0, 2)])).kind == ShapeClass.CYCLE
    assert shape_class(make_graph(4, [(0, 1), (0, 2), (0, 3)])).kind == ShapeClass.CLAW
    star = shape_class(make_graph(5, [(0, i) for i in range(1, 5)]))
    assert star.kind == ShapeClass.STAR
    assert star.star_leaves == 4
    k4 = make_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert shape_class(k4).kind == ShapeClass.PROLIFIC
    assert shape_class(make_graph(4, [(0, 1), (2, 3)])).kind == ShapeClass.OTHER


def test_prolific_predicate():
    # connected, max degree >= 3, at least 4 edges
    assert is_prolific(make_graph(5, [(0, i) for i in range(1, 5)]))  # big star
    assert not is_prolific(make_graph(4, [(0, 1), (0, 2), (0, 3)]))  # only 3 edges
    assert not is_prolific(make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))  # path
    assert not is_prolific(make_graph(6, [(0, 1), (0, 2), (0, 3), (4, 5)]))  # disconnected
