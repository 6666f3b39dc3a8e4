from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from altknot import condense as cd
from altknot import diagram as dg
from altknot import graphs, interlace
from altknot.code import parse_gauss_code
from altknot.graphs import Graph

from conftest import W77


def plain(n, edges):
    return Graph.build(range(1, n + 1), edges, {v: 0 for v in range(1, n + 1)})


@st.composite
def simple_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    return plain(n, [p for p in pairs if draw(st.booleans())])


def all_merge_results(g: Graph) -> set:
    """Canonical forms of the end results of every maximal merge sequence."""
    out = set()
    stack = [g]
    seen = set()
    while stack:
        h = stack.pop()
        key = graphs.canonical_form(h)
        if key in seen:
            continue
        seen.add(key)
        cands = cd.merge_candidates(h.vertices, h.adj, {v: h.weight(v) for v in h.vertices})
        if not cands:
            out.add(key)
        for c in cands:
            stack.append(_merge_once(h, c))
    return out


def _merge_once(h, cand):
    a, b, w = cand
    keep, drop = min(a, b), max(a, b)
    verts = [v for v in h.vertices if v != drop]
    edges = set()
    for e in h.edges:
        e = frozenset(keep if v == drop else v for v in e)
        if len(e) == 2:
            edges.add(e)
    weights = {v: h.weight(v) for v in verts}
    weights[keep] = w
    return Graph.build(verts, edges, weights)


def test_clique_and_anticlique():
    k4 = plain(4, combinations(range(1, 5), 2))
    n = cd.neighborhood_graph(k4)
    assert n.weight_multiset() == [3] and n.provenance[1] == frozenset(range(1, 5))
    e4 = plain(4, [])
    assert cd.neighborhood_graph(e4).weight_multiset() == [-3]


def test_w77_condensation():
    g = interlace.interlacement_of(parse_gauss_code(W77))
    n = cd.neighborhood_graph(g)
    assert n.weight_multiset() == [-1, -1, 0, 0, 0]
    merged = sorted(sorted(p) for p in n.provenance.values() if len(p) > 1)
    assert merged == [[1, 2], [5, 6]]
    named = {v: "".join(map(str, sorted(n.provenance[v]))) for v in n.vertices}
    edges = {frozenset((named[a], named[b])) for a, b in (tuple(e) for e in n.graph.edges)}
    assert edges == {frozenset(p) for p in [("12", "3"), ("12", "7"), ("12", "56"), ("3", "56"), ("4", "56")]}


def test_chord_diagram_condensation():
    torus = dg.build_chord_diagram(parse_gauss_code("1 2 3 4 5 1 2 3 4 5"))
    c = cd.condense_chord_diagram(torus)
    assert list(c.weights.values()) == [4]
    assert c.torsads[1].kind == "secant"
    single = cd.condense_chord_diagram(dg.build_chord_diagram(parse_gauss_code("1 1")))
    assert list(single.weights.values()) == [0]
    w77 = cd.condense_chord_diagram(dg.build_chord_diagram(parse_gauss_code(W77)))
    assert [w77.weights[a] for a in sorted(w77.weights)] == [-1, 0, 0, -1, 0]
    assert sorted(w77.members[1]) == [1, 2] and sorted(w77.members[5]) == [5, 6]


def test_condensed_chords_match_condensed_graph():
    g = interlace.interlacement_of(parse_gauss_code(W77))
    graph_w = cd.neighborhood_graph(g).weight_multiset()
    chord_w = sorted(cd.condense_chord_diagram(dg.build_chord_diagram(parse_gauss_code(W77))).weights.values())
    assert graph_w == chord_w


def test_two_tangles_of_w77():
    g = interlace.interlacement_of(parse_gauss_code(W77))
    ts = cd.find_2tangles(g)
    assert frozenset({4, 5, 6}) in ts
    assert all(frozenset([v]) in ts for v in g.vertices)
    assert cd.tangle_correspondence_check(g)


def test_two_tangles_of_triangle():
    k3 = plain(3, [(1, 2), (2, 3), (1, 3)])
    assert len(cd.find_2tangles(k3)) == 6


def test_single_crossing_connector_is_x():
    emb = dg.build_embedding(parse_gauss_code("1 2 3 1 2 3"))
    assert cd.classify_connector(emb, cd.TangleCut(frozenset({1}))) == "X"


def test_not_a_tangle():
    emb = dg.build_embedding(parse_gauss_code(W77))
    with pytest.raises(cd.NotATangle):
        cd.classify_connector(emb, cd.TangleCut(frozenset({1, 4})))


# --------------------------------------------------------------------------
# properties

@settings(max_examples=150, deadline=None)
@given(simple_graphs(max_n=6))
def test_merge_order_does_not_matter(g):
    assert len(all_merge_results(g)) == 1


@settings(max_examples=300, deadline=None)
@given(simple_graphs(max_n=8))
def test_complement_duality(g):
    lhs = graphs.canonical_form(cd.neighborhood_graph(graphs.complement(g)).graph)
    rhs = graphs.canonical_form(graphs.complement(cd.neighborhood_graph(g).graph))
    assert lhs == rhs


@settings(max_examples=300, deadline=None)
@given(simple_graphs(max_n=7))
def test_tangles_map_to_tangles(g):
    assert cd.tangle_correspondence_check(g)


@settings(max_examples=300, deadline=None)
@given(simple_graphs(max_n=7))
def test_condensed_graph_is_irreducible_and_weights_count_members(g):
    n = cd.neighborhood_graph(g)
    h = n.graph
    assert not cd.merge_candidates(h.vertices, h.adj, {v: h.weight(v) for v in h.vertices})
    for v in h.vertices:
        assert len(n.provenance[v]) == abs(h.weight(v)) + 1
        members = n.provenance[v]
        inside = [frozenset(p) for p in combinations(members, 2) if g.has_edge(*p)]
        if h.weight(v) > 0:
            assert len(inside) == len(members) * (len(members) - 1) // 2
        elif h.weight(v) < 0:
            assert not inside


def _brute_clique(g):
    return max(len(s) for k in range(len(g.vertices) + 1) for s in combinations(g.vertices, k)
               if all(g.has_edge(a, b) for a, b in combinations(s, 2)))


def _brute_stable(g):
    return _brute_clique(graphs.complement(g))


@settings(max_examples=300, deadline=None)
@given(simple_graphs(max_n=7))
def test_single_vertex_weight_gives_clique_or_stability_number(g):
    n = cd.neighborhood_graph(g)
    if len(n.vertices) != 1:
        return
    w = n.weight(n.vertices[0])
    if w > 0:
        assert _brute_clique(g) == w + 1
    elif w < 0:
        assert _brute_stable(g) == -w + 1
