from random import Random

import pytest

from steinberg import BoundaryPoint, Graph, GroupoidPoint, cuntz_graph, parse_graph
from steinberg.errors import GraphStructureError, PathError, SemanticError
from steinberg.sampling import random_boundary_point

from util import bp, p


def test_cuntz_graph_shape():
    for n in (2, 3):
        g = cuntz_graph(n)
        assert g.n_vertices == 1
        assert list(g.edge_ids) == [str(i) for i in range(1, n + 1)]
    with pytest.raises(ValueError):
        cuntz_graph(1)


def test_no_sink_validation():
    with pytest.raises(GraphStructureError):
        Graph(["u", "w"], [("a", "u", "w")])  # w emits nothing
    with pytest.raises(GraphStructureError):
        Graph(["u"], [("a", "u", "u"), ("a", "u", "u")])  # duplicate edge id
    with pytest.raises(GraphStructureError):
        Graph(["u"], [("a", "u", "x")])  # unknown endpoint


def test_graph_file_format():
    text = """
    # a two-vertex graph
    vertex u
    vertex w
    edge a u w   # forward
    edge b w u
    edge c w w
    """
    g = parse_graph(text)
    assert g.n_vertices == 2 and g.n_edges == 3
    with pytest.raises(GraphStructureError):
        parse_graph("vertex u\nedge broken-line")


def test_path_ops(o2):
    one = p(o2, "1")
    onetwo = p(o2, "12")
    assert one.concat(p(o2, "2")) == onetwo
    assert one.is_prefix_of(onetwo)
    assert not p(o2, "2").is_prefix_of(onetwo)
    assert onetwo.strip_prefix(one) == p(o2, "2")
    with pytest.raises(PathError):
        onetwo.strip_prefix(p(o2, "2"))
    exts = p(o2, "").extensions_of_length(2)
    assert [str(q) for q in exts] == ["1.1", "1.2", "2.1", "2.2"]


def test_path_composability(gv2):
    with pytest.raises(PathError):
        gv2.path(["a", "a"])  # a ends at w, a starts at u
    gv2.path(["a", "b", "a"])


def test_unknown_ids_semantic(o2):
    with pytest.raises(SemanticError):
        o2.path(["3"])
    with pytest.raises(SemanticError):
        o2.empty_path("nope")


def test_boundary_point_normalization(o2):
    # 1 . (2)^inf equals 1.2 . (2)^inf equals 1.2.2 . (2)^inf
    assert bp(o2, "1", "2") == bp(o2, "12", "2") == bp(o2, "122", "2")
    # cycle is reduced to its primitive root
    assert bp(o2, "", "1212") == bp(o2, "", "12")
    # rolling back rotates the cycle
    assert bp(o2, "2", "12") == bp(o2, "", "21")
    assert bp(o2, "1", "12") != bp(o2, "", "12")


def test_shift_examples(o2):
    assert bp(o2, "1", "2").shift(1) == bp(o2, "", "2")
    assert bp(o2, "", "12").shift(1) == bp(o2, "", "21")
    assert bp(o2, "", "1").shift(5) == bp(o2, "", "1")


def test_shift_is_additive(o2, gv2):
    rng = Random(3)
    for g in (o2, gv2):
        for _ in range(100):
            x = random_boundary_point(g, rng)
            a, b = rng.randint(0, 5), rng.randint(0, 5)
            assert x.shift(a).shift(b) == x.shift(a + b)


def test_edge_at_and_vertex_at(gv2):
    x = bp(gv2, "a", "bd")  # a: u->w, then cycle b: w->u, d: u->w
    ids = [gv2.edge_ids[x.edge_at(i)] for i in range(5)]
    assert ids == ["a", "b", "d", "b", "d"]
    assert gv2.vertex_ids[x.source_idx] == "u"


def test_groupoid_point_validation(o2):
    x = bp(o2, "1", "2")
    y = bp(o2, "", "2")
    GroupoidPoint(x, 1, y)
    GroupoidPoint(x, 0, y)  # tails agree after unequal shifts too
    with pytest.raises(PathError):
        GroupoidPoint(bp(o2, "", "1"), 0, bp(o2, "", "2"))


def test_groupoid_point_inverse(o2):
    g = GroupoidPoint(bp(o2, "1", "2"), 1, bp(o2, "", "2"))
    inv = g.inverse()
    assert inv.k == -1 and inv.x == g.y and inv.y == g.x


def test_cycle_must_close(gv2):
    with pytest.raises(PathError):
        BoundaryPoint(gv2.empty_path("u"), gv2.path(["a"]))  # a is not closed
