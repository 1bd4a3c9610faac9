import json

import pytest
from hypothesis import given

from conftest import hypergraphs
from hypercolor.constructions import construct_F
from hypercolor.hypercore import (
    Coloring,
    Hypergraph,
    HypergraphError,
    complete_hypergraph,
    cone,
    degree,
    deserialize,
    induced,
    link,
    serialize,
    shadow,
)


@pytest.mark.parametrize("n,k,verts,edges", [(4, 3, 4, 4), (3, 3, 3, 1), (5, 2, 5, 10)])
def test_complete_counts(n, k, verts, edges):
    h = complete_hypergraph(n, k)
    assert (h.n, len(h.edges)) == (verts, edges)


def test_shadow_examples():
    assert len(shadow(complete_hypergraph(4, 3)).edges) == 6
    tri = shadow(Hypergraph.from_edges(3, "abc", ["abc"]))
    assert tri.edges == frozenset({("a", "b"), ("a", "c"), ("b", "c")})
    empty = shadow(Hypergraph.from_edges(3, "abcd", []))
    assert not empty.edges and empty.n == 4


def test_link_examples():
    k5 = complete_hypergraph(5, 3)
    assert link(k5, "1") == Hypergraph.from_edges(2, "2345", [(a, b) for a in "2345" for b in "2345" if a < b])
    h = Hypergraph.from_edges(3, "vabz", ["vab"])
    assert link(h, "v").edges == frozenset({("a", "b")})
    assert not link(h, "z").edges


def test_degree_examples():
    assert all(degree(complete_hypergraph(4, 3), v) == 3 for v in "1234")
    assert degree(Hypergraph.from_edges(3, "abcd", ["abc"]), "d") == 0
    f2 = construct_F(2).hypergraph
    # v2 lies in {v0,v2,w2}, {v1,v2,w2}, {w1,v2,w2}
    assert degree(f2, "v2") == 3
    assert degree(f2, "v1") == 2


def test_degree_unknown_vertex():
    with pytest.raises(HypergraphError):
        degree(complete_hypergraph(3, 2), "9")


def test_cone_examples():
    c = cone(complete_hypergraph(3, 2))
    assert (c.k, c.n, len(c.edges)) == (3, 4, 3)
    e = cone(Hypergraph.from_edges(2, "ab", []))
    assert e.n == 3 and not e.edges
    assert cone(Hypergraph.from_edges(1, ["apex"], [])).vertices[-1] != "apex"


def test_roundtrip_and_errors():
    h = complete_hypergraph(4, 3)
    assert deserialize(serialize(h)) == h
    bad = {"k": 3, "vertices": ["a", "b", "c"], "edges": [["a", "b"]]}
    with pytest.raises(HypergraphError, match=r"edges\[0\]"):
        deserialize(json.dumps(bad))
    dup = {"k": 2, "vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}
    with pytest.raises(HypergraphError, match="duplicate"):
        deserialize(json.dumps(dup))
    with pytest.raises(HypergraphError, match="line 1"):
        deserialize("{oops")
    with pytest.raises(HypergraphError, match="unknown"):
        deserialize(json.dumps({"k": 2, "vertices": ["a"], "edges": [["a", "z"]]}))


def test_serialize_is_canonical():
    a = Hypergraph.from_edges(2, ["b", "a", "c"], [("c", "a"), ("a", "b")])
    b = Hypergraph.from_edges(2, ["a", "c", "b"], [("b", "a"), ("a", "c")])
    assert serialize(a) == serialize(b)


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring({"a": 3}, 2)
    with pytest.raises(ValueError):
        Coloring({"a": 1}, 2, "fancy")
    col = Coloring({"a": 1, "b": 2}, 2, "strong")
    assert Coloring.from_document(col.to_document()) == col


@given(hypergraphs())
def test_handshake(h):
    assert sum(degree(h, v) for v in h.vertices) == h.k * len(h.edges)


@given(hypergraphs())
def test_link_size_is_degree(h):
    for v in h.vertices:
        assert len(link(h, v).edges) == degree(h, v)


@given(hypergraphs())
def test_roundtrip(h):
    assert deserialize(serialize(h)) == h
    assert serialize(deserialize(serialize(h))) == serialize(h)


@given(hypergraphs())
def test_cone_shadow(h):
    c = cone(h)
    apex = c.vertices[-1]
    full = shadow(c)
    assert {e for e in full.edges if apex not in e} == set(shadow(h).edges)
    covered = {v for e in h.edges for v in e}
    assert {v for e in full.edges if apex in e for v in e if v != apex} == covered
    assert not induced(c, h.vertices).edges
