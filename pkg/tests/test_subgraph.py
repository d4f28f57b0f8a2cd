import pytest

from erdos_rogers import (
    SeededRng,
    complete_graph,
    contains_subgraph,
    cycle_graph,
    exhaustive_contains,
    gnp_graph,
    named_graph,
    petersen_graph,
)
from oracles import perm_contains

SEEDS = list(range(12))


@pytest.mark.parametrize(
    "host,pattern,expect",
    [
        ("petersen", "c5", True),
        ("petersen", "k3", False),
        ("petersen", "c6", True),
        ("k4", "c4", True),
        ("c5", "p4", True),
        ("c5", "c4", False),
        ("k33", "c6", True),
        ("k33", "k3", False),
        ("wagner", "c4", True),
    ],
)
def test_known_pairs(host, pattern, expect):
    res = contains_subgraph(named_graph(host), named_graph(pattern))
    assert res.found is expect
    if expect:
        check_embedding(named_graph(host), named_graph(pattern), res.embedding)


def check_embedding(host, pattern, embedding):
    assert len(set(embedding)) == pattern.n
    for a, b in pattern.edges():
        assert host.has_edge(embedding[a], embedding[b])


@pytest.mark.parametrize("seed", SEEDS)
def test_matches_permutation_oracle(seed):
    rng = SeededRng(seed, "pairs")
    host = gnp_graph(9, 0.4, rng.substream("host"))
    pattern = gnp_graph(4, 0.5, rng.substream("pattern"))
    res = contains_subgraph(host, pattern)
    assert res.status in ("found", "absent")
    assert res.found == perm_contains(host, pattern)
    if res.found:
        check_embedding(host, pattern, res.embedding)


@pytest.mark.parametrize("seed", SEEDS[:6])
def test_exhaustive_route_agrees(seed):
    rng = SeededRng(seed, "exh")
    host = gnp_graph(8, 0.35, rng.substream("host"))
    pattern = gnp_graph(4, 0.5, rng.substream("pattern"))
    assert exhaustive_contains(host, pattern) == contains_subgraph(host, pattern).found


def test_forced_vertex_restricts_embeddings():
    # C6 has one 6-cycle; forcing any vertex must still find it
    g = cycle_graph(6)
    for v in range(6):
        res = contains_subgraph(g, cycle_graph(6), forced_vertex=v)
        assert res.found and v in res.embedding


def test_forced_vertex_miss():
    from erdos_rogers import Graph

    host = Graph(4, [(0, 1), (1, 2), (0, 2)])  # triangle plus isolated vertex 3
    assert contains_subgraph(host, complete_graph(3), forced_vertex=3).found is False
    assert contains_subgraph(host, complete_graph(3), forced_vertex=0).found is True


def test_tiny_budget_reports_unknown():
    host = gnp_graph(40, 0.5, SeededRng(3, "big"))
    res = contains_subgraph(host, petersen_graph(), budget=5)
    assert res.status == "unknown"
    assert not res.found


def test_empty_pattern_always_found():
    res = contains_subgraph(cycle_graph(4), named_graph("k2"))
    assert res.found
