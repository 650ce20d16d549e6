"""Graph container, generators, colorings, canonical forms, and graph6."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brutes
from turanext.graphs import (
    Graph,
    VertexPartition,
    anchored_turan_graph,
    blowup,
    canonical_form,
    canonical_graph,
    chromatic_number,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    is_isomorphic,
    path_graph,
    proper_partitions,
    read_edge_list,
    relabel,
    strip_isolated,
    subgraph,
    turan_graph,
)


@st.composite
def small_graphs(draw, max_n: int = 7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    bits = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << bits) - 1)) if bits else 0
    slots = [(u, v) for v in range(n) for u in range(v)]
    return graph_from_edges(n, [slots[i] for i in range(bits) if (mask >> i) & 1])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return graph_from_edges(10, outer + inner + spokes)


# ---------------------------------------------------------------------------
# construction and validation


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # loop
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0b000])  # stray bit beyond n
    with pytest.raises(ValueError):
        Graph(2, [0])  # wrong row count
    with pytest.raises(ValueError):
        Graph(65, [0] * 65)


def test_graph_from_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        graph_from_edges(3, [(1, 1)])


def test_basic_accessors():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count() == 3
    assert g.degrees() == (1, 2, 2, 1)
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


@pytest.mark.parametrize(
    "g,n,e",
    [
        (empty_graph(5), 5, 0),
        (complete_graph(5), 5, 10),
        (cycle_graph(5), 5, 5),
        (path_graph(5), 5, 4),
        (complete_multipartite((2, 2, 2)), 6, 12),
        (complete_multipartite((1, 1, 1)), 3, 3),
        (turan_graph(7, 3), 7, 16),
        (blowup(cycle_graph(5), 2), 10, 20),
    ],
)
def test_generator_sizes(g, n, e):
    assert (g.n, g.edge_count()) == (n, e)


def test_cycle_needs_three_vertices():
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_turan_graph_structure():
    g = turan_graph(10, 3)
    assert is_isomorphic(g, complete_multipartite((4, 3, 3)))
    # more parts than vertices degenerates to a complete graph
    assert is_isomorphic(turan_graph(3, 5), complete_graph(3))


def test_blowup_of_edge_is_complete_bipartite():
    assert is_isomorphic(blowup(complete_graph(2), 3), complete_multipartite((3, 3)))


def test_anchored_turan_graph_shape():
    # one part of size n-a holding vertex 0, balanced (r-1)-partite rest on a
    for r, a, n in [(2, 3, 7), (3, 4, 9), (3, 0, 5), (4, 6, 8)]:
        g = anchored_turan_graph(r, a, n)
        assert g.n == n
        assert g.degree(0) == a
        from turanext.closedform import turan_edge_count

        assert g.edge_count() == turan_edge_count(a, r - 1) + (n - a) * a
    with pytest.raises(ValueError):
        anchored_turan_graph(1, 0, 3)
    with pytest.raises(ValueError):
        anchored_turan_graph(2, 5, 5)


def test_subgraph_and_relabel():
    g = cycle_graph(5)
    h = subgraph(g, [1, 2, 3])
    assert h.edges() == [(0, 1), (1, 2)]
    perm = [4, 3, 2, 1, 0]
    assert is_isomorphic(relabel(g, perm), g)
    assert sorted(relabel(g, perm).degrees()) == sorted(g.degrees())
    with pytest.raises(ValueError):
        relabel(g, [0, 0, 1, 2, 3])


def test_strip_isolated():
    g = graph_from_edges(6, [(1, 4)])
    s = strip_isolated(g)
    assert s.n == 2 and s.edge_count() == 1
    assert strip_isolated(empty_graph(4)).n == 0


# ---------------------------------------------------------------------------
# partitions and coloring


def test_vertex_partition_validation():
    with pytest.raises(ValueError):
        VertexPartition(3, (frozenset({0, 1}),))  # does not cover
    with pytest.raises(ValueError):
        VertexPartition(3, (frozenset({0, 1}), frozenset({1, 2})))  # overlap
    with pytest.raises(ValueError):
        VertexPartition(3, (frozenset({0, 1, 2}), frozenset()))  # empty class
    p = VertexPartition(4, (frozenset({0, 2}), frozenset({1, 3})))
    assert sorted(p.sizes()) == [2, 2]
    assert p.is_proper_for(cycle_graph(4))
    assert not p.is_proper_for(complete_graph(4))


@pytest.mark.parametrize("n", range(1, 6))
def test_chromatic_number_exhaustive_vs_brute(n):
    for g in brutes.all_graphs(n):
        assert chromatic_number(g) == brutes.chromatic_brute(g)


def test_chromatic_number_spot_values():
    assert chromatic_number(empty_graph(0)) == 0
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(cycle_graph(6)) == 2
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(complete_multipartite((3, 3, 3))) == 3
    assert chromatic_number(blowup(cycle_graph(5), 2)) == 3


def test_proper_partitions_of_five_cycle():
    parts = list(proper_partitions(cycle_graph(5), 3))
    # 30 surjective proper 3-colorings / 3! orderings
    assert len(parts) == 5
    for p in parts:
        assert p.is_proper_for(cycle_graph(5))
        assert len(p.classes) == 3


def test_proper_partitions_complete_graph():
    parts = list(proper_partitions(complete_graph(4), 4))
    assert len(parts) == 1
    assert list(proper_partitions(complete_graph(4), 3)) == []


# ---------------------------------------------------------------------------
# canonical forms and isomorphism


@settings(max_examples=150)
@given(small_graphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@settings(max_examples=60)
@given(small_graphs())
def test_canonical_graph_idempotent(g):
    c = canonical_graph(g)
    assert canonical_form(c) == canonical_form(g)
    assert canonical_graph(c) == c


def test_isomorphism_spot_pairs():
    assert is_isomorphic(complete_multipartite((2, 2)), cycle_graph(4))
    assert is_isomorphic(turan_graph(4, 2), cycle_graph(4))
    # same degree sequence, different graphs
    two_triangles = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle_graph(6), two_triangles)
    assert not is_isomorphic(path_graph(4), cycle_graph(4))


def test_canonical_form_distinguishes_regular_pairs():
    # 3-regular on 6 vertices: K_{3,3} vs the prism
    prism = graph_from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )
    assert canonical_form(prism) != canonical_form(complete_multipartite((3, 3)))


# ---------------------------------------------------------------------------
# graph6 and edge lists


def test_graph6_known_strings():
    assert graph6_encode(complete_graph(4)) == "C~"
    assert graph6_encode(path_graph(4)) == "Ch"
    assert graph6_encode(cycle_graph(5)) == "Dhc"
    assert graph6_decode("C~") == complete_graph(4)
    assert graph6_decode("Dhc") == cycle_graph(5)


@settings(max_examples=150)
@given(small_graphs())
def test_graph6_roundtrip(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_long_form_roundtrip():
    g = turan_graph(64, 3)
    text = graph6_encode(g)
    assert text.startswith("~")
    assert graph6_decode(text) == g


def test_graph6_rejects_garbage():
    for bad in ["", "C~extra", "C", "\x19", "~~??", "C\x7f"]:
        with pytest.raises(ValueError):
            graph6_decode(bad)


def test_read_edge_list():
    g = read_edge_list("4\n0 1\n2 3\n")
    assert g.edges() == [(0, 1), (2, 3)]
    with pytest.raises(ValueError):
        read_edge_list("2\n0 5\n")
    with pytest.raises(ValueError):
        read_edge_list("")


def test_graph_equality_and_hash():
    a = cycle_graph(4)
    b = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert a == b and hash(a) == hash(b)
    assert a != path_graph(4)
    assert len({a, b, path_graph(4)}) == 2


def test_random_relabel_keeps_isomorphism():
    rng = random.Random(11)
    for _ in range(25):
        g = brutes.random_graph(rng, 7, 0.4)
        h = relabel(g, brutes.random_permutation(rng, 7))
        assert is_isomorphic(g, h)
