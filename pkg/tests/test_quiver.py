from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qct.errors import (
    DisconnectedQuiverError,
    QuiverSyntaxError,
    QuiverValidationError,
    UnknownVertexError,
)
from qct.quiver import (
    OTHER,
    CycleATilde,
    Degree,
    LinearA,
    classify_shape,
    components,
    cycle_quiver,
    degree,
    from_edges,
    is_connected,
    linear_quiver,
    parse_quiver,
    serialize,
)

from conftest import data_path, load


def test_parse_auto_ids_and_comments():
    q = parse_quiver("# a comment\n1 -> 2\n\n2 -> 3  \n")
    assert q.vertices == ("1", "2", "3")
    assert [a.id for a in q.arrows] == ["a0", "a1"]


def test_parse_explicit_ids_and_loops():
    q = parse_quiver("x: 1 -> 1\n1 -> 2\n")
    assert q.arrow_by_id["x"].source == q.arrow_by_id["x"].target == "1"
    assert q.arrow_by_id["a1"].target == "2"
    assert degree(q, "1") == Degree(1, 2)


def test_loops_count_on_both_sides():
    q = load("loop_tail")
    assert degree(q, "1") == Degree(1, 2)
    assert degree(q, "2") == Degree(1, 0)


def test_syntax_error_position():
    with pytest.raises(QuiverSyntaxError) as exc:
        parse_quiver("1 -> 2\n3 => 4\n")
    assert exc.value.line == 2
    assert exc.value.column == 3


def test_empty_file_is_an_error():
    with pytest.raises(QuiverSyntaxError):
        parse_quiver("# only a comment\n")


def test_duplicate_arrow_id():
    with pytest.raises(QuiverValidationError):
        parse_quiver("a: 1 -> 2\na: 2 -> 3\n")


def test_auto_id_collision():
    with pytest.raises(QuiverValidationError):
        parse_quiver("a1: 1 -> 2\n2 -> 3\n")


def test_undeclared_vertex_when_declarations_present():
    with pytest.raises(QuiverValidationError):
        parse_quiver("vertex 1\nvertex 2\n1 -> 3\n")


def test_duplicate_vertex_declaration():
    with pytest.raises(QuiverSyntaxError):
        parse_quiver("vertex 1\nvertex 1\n")


def test_unknown_vertex_lookup():
    q = linear_quiver(3)
    with pytest.raises(UnknownVertexError):
        degree(q, "9")
    with pytest.raises(KeyError):
        degree(q, "9")


def test_multiple_arrows_are_representable():
    q = parse_quiver("1 -> 2\n1 -> 2\n")
    assert len(q.arrows) == 2
    assert degree(q, "2") == Degree(2, 0)


def test_twelve_round_trip_is_byte_identical():
    with open(data_path("twelve"), encoding="utf-8") as fh:
        text = fh.read()
    assert serialize(parse_quiver(text)) == text


@pytest.mark.parametrize("name", ["sumrule", "vertex22", "twelve", "lattice23", "loop_tail"])
def test_shipped_quivers_round_trip(name):
    q = load(name)
    assert parse_quiver(serialize(q)) == q


def test_isolated_vertex_survives_serialization():
    q = from_edges([("1", "2")], vertices=["1", "2", "3"])
    back = parse_quiver(serialize(q))
    assert back == q
    assert back.vertices == ("1", "2", "3")


def test_shapes():
    assert classify_shape(linear_quiver(1)) == LinearA(1)
    assert classify_shape(linear_quiver(5)) == LinearA(5)
    assert classify_shape(cycle_quiver(1)) == CycleATilde(1)
    assert classify_shape(cycle_quiver(4)) == CycleATilde(4)
    assert classify_shape(load("twelve")) == OTHER
    # a linear quiver needs consistent orientation
    assert classify_shape(from_edges([("1", "2"), ("3", "2")])) == OTHER


def test_components_and_connectivity():
    q = from_edges([("1", "2"), ("3", "4")], vertices=["1", "2", "3", "4", "5"])
    assert not is_connected(q)
    parts = components(q)
    assert [p.vertices for p in parts] == [("1", "2"), ("3", "4"), ("5",)]
    with pytest.raises(DisconnectedQuiverError):
        classify_shape(q)


def test_opposite_reverses_arrows():
    q = load("vertex22")
    op = q.opposite
    for a, b in zip(q.arrows, op.arrows):
        assert (a.id, a.source, a.target) == (b.id, b.target, b.source)
    assert op.opposite == q


@st.composite
def quivers(draw, max_vertices=7, max_arrows=10):
    nv = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(nv)]
    edges = draw(st.lists(st.tuples(st.sampled_from(names), st.sampled_from(names)), max_size=max_arrows))
    return from_edges(edges, vertices=names)


@given(quivers())
@settings(max_examples=200, deadline=None)
def test_round_trip_property(q):
    back = parse_quiver(serialize(q))
    assert set(back.vertices) == set(q.vertices)
    assert Counter((a.source, a.target) for a in back.arrows) == Counter((a.source, a.target) for a in q.arrows)
    assert back == q


@given(quivers())
@settings(max_examples=200, deadline=None)
def test_degree_sums(q):
    ins = sum(degree(q, v).incoming for v in q.vertices)
    outs = sum(degree(q, v).outgoing for v in q.vertices)
    assert ins == outs == len(q.arrows)


@given(st.integers(1, 40))
def test_linear_degrees(m):
    q = linear_quiver(m)
    assert classify_shape(q) == LinearA(m)
    degs = Counter(degree(q, v) for v in q.vertices)
    if m == 1:
        assert degs == Counter({Degree(0, 0): 1})
    else:
        assert degs[Degree(0, 1)] == 1 and degs[Degree(1, 0)] == 1
        assert degs[Degree(1, 1)] == m - 2


@given(quivers())
@settings(max_examples=100, deadline=None)
def test_components_partition_vertices(q):
    parts = components(q)
    assert sorted(v for p in parts for v in p.vertices) == sorted(q.vertices)
    assert sum(len(p.arrows) for p in parts) == len(q.arrows)
    assert all(is_connected(p) for p in parts)
