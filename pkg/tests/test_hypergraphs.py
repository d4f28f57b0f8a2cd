import pytest

from erdos_rogers import (
    FormatError,
    Hypergraph,
    InputError,
    find_loose_cycles,
    hypergraph_girth_at_least,
    hypergraph_is_linear,
    hypergraph_is_triangle_free,
    line_intersection_graph,
)
from erdos_rogers.hypergraphs import hypergraph_from_text, hypergraph_to_text
from oracles import naive_loose_cycles

# three 3-edges pairwise meeting in distinct single vertices: a loose triangle
LOOSE_TRIANGLE = Hypergraph(9, [(0, 1, 2), (2, 3, 4), (0, 4, 5)], 3)

# shares two vertices between the first two edges
NOT_LINEAR = Hypergraph(6, [(0, 1, 2), (1, 2, 3), (3, 4, 5)], 3)


def test_linearity():
    assert hypergraph_is_linear(LOOSE_TRIANGLE).passed
    audit = hypergraph_is_linear(NOT_LINEAR)
    assert not audit.passed
    assert audit.witness is not None


def test_triangle_detection():
    audit = hypergraph_is_triangle_free(LOOSE_TRIANGLE)
    assert not audit.passed
    chain = Hypergraph(9, [(0, 1, 2), (2, 3, 4), (4, 5, 6)], 3)
    assert hypergraph_is_triangle_free(chain).passed


def test_triangle_free_rejects_nonlinear_input():
    with pytest.raises(InputError):
        hypergraph_is_triangle_free(NOT_LINEAR)


@pytest.mark.parametrize("length", [2, 3, 4])
def test_loose_cycles_match_naive(length):
    h = Hypergraph(
        10,
        [(0, 1, 2), (2, 3, 4), (0, 4, 5), (4, 6, 7), (0, 7, 8), (1, 3, 9)],
        3,
    )
    cycles = find_loose_cycles(h, length)
    assert len(cycles) == naive_loose_cycles(h, length)
    for cyc in cycles:
        assert len(cyc.edge_indices) == length


def test_girth_audit():
    assert hypergraph_girth_at_least(LOOSE_TRIANGLE, 3).passed
    audit = hypergraph_girth_at_least(LOOSE_TRIANGLE, 4)
    assert not audit.passed


def test_line_intersection_graph_petersen_style():
    g, cover = line_intersection_graph(LOOSE_TRIANGLE)
    assert g.n == 3 and g.m == 3  # three edges, pairwise intersecting
    assert cover.validate(require_total=True).passed


def test_line_graph_cover_maps_every_edge():
    h = Hypergraph(10, [(0, 1, 2), (2, 3, 4), (4, 5, 6), (0, 6, 7), (1, 8, 9)], 3)
    g, cover = line_intersection_graph(h)
    seen = set()
    for cl in cover.cliques:
        members = sorted(cl.members())
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                seen.add((a, b))
    assert seen == set(g.edges())


def test_uniformity_enforced():
    with pytest.raises(InputError):
        Hypergraph(5, [(0, 1, 2), (3, 4)], 3)


def test_text_round_trip():
    text = hypergraph_to_text(LOOSE_TRIANGLE)
    back = hypergraph_from_text(text)
    assert back.n == LOOSE_TRIANGLE.n
    assert back.edges == LOOSE_TRIANGLE.edges


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("3 1 3\n0 1\n", "line 2"),
        ("3 2 3\n0 1 2\n", "edge lines"),
    ],
)
def test_text_errors(text, fragment):
    with pytest.raises(FormatError) as exc:
        hypergraph_from_text(text)
    assert fragment in str(exc.value)
