import math

import pytest

from erdos_rogers import (
    InputError,
    SeededRng,
    brute_force_f,
    ckfree_subset,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    gfree_graph_reps,
    gnp_graph,
    gplus_family,
    ksfree_recursion,
    list_k_cycles,
    named_graph,
    path_graph,
    petersen_graph,
    ramsey_witness_check,
    random_girth_hypergraph,
    theorem1_build,
    theorem4_part1_build,
    theorem4_part2_build,
)
from erdos_rogers.graphs import (
    Graph,
    blowup_graph,
    complete_multipartite,
    induced_subgraph,
    triangle_witness,
)
from erdos_rogers.hypergraphs import find_loose_cycles, hypergraph_girth_at_least
from erdos_rogers.pipelines import (
    canonical_form,
    count_edges_one_outside,
    lex_least_nonadjacent_pair,
    sprop_statistics,
    sunflower_budget,
)
from erdos_rogers.subgraph import contains_subgraph
from oracles import perm_contains

SEEDS = [0, 1, 2, 3, 4]


def bipartite_circulant(half, deg):
    # 2*half vertices, left i meets right half + ((i + j) % half); K4-free
    edges = [(i, half + (i + j) % half) for i in range(half) for j in range(deg)]
    return Graph(2 * half, edges)


# ---------------------------------------------------------------------------
# theorem1_build
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("seed", SEEDS)
def test_theorem1_triangle_free(seed):
    g, cert = theorem1_build(2, 5, 3, named_graph("c5"), SeededRng(seed, "t1"))
    assert triangle_witness(g) is None
    assert cert.passed("triangle_free")
    assert cert.measurements["declared_n"] == 350


def test_theorem1_rejects_triangle_pattern():
    with pytest.raises(InputError):
        theorem1_build(2, 5, 3, complete_graph(3), SeededRng(0, "t1"))


def test_theorem1_rejects_edgeless_pattern():
    with pytest.raises(InputError):
        theorem1_build(2, 5, 3, Graph(3, []), SeededRng(0, "t1"))


def test_theorem1_deterministic():
    a, ca = theorem1_build(2, 5, 3, named_graph("k2"), SeededRng(3, "t1"))
    b, cb = theorem1_build(2, 5, 3, named_graph("k2"), SeededRng(3, "t1"))
    assert list(a.edges()) == list(b.edges())
    assert ca.to_json_bytes() == cb.to_json_bytes()


def test_theorem1_k2_blowup_measurement():
    g, cert = theorem1_build(2, 5, 3, named_graph("k2"), SeededRng(0, "t1"), ffree_budget=10**6)
    measured = cert.measurements["max_pattern_free"]
    assert measured["status"] == "optimal"
    assert measured["size"] >= g.n // 2


# ---------------------------------------------------------------------------
# ckfree branches
# ---------------------------------------------------------------------------

def check_no_k_cycle(g, members, k):
    sub = induced_subgraph(g, sorted(members))
    cycles, _ = list_k_cycles(sub, k, cap=1)
    assert not cycles


@pytest.mark.parametrize("k", [3, 4, 5])
@pytest.mark.parametrize("seed", SEEDS[:3])
def test_ckfree_low_degree_inputs(k, seed):
    g = petersen_graph() if seed == 0 else gnp_graph(24, 0.12, SeededRng(seed, "in"))
    vs, cert = ckfree_subset(g, k, SeededRng(seed, "ck"))
    check_no_k_cycle(g, vs.members(), k)
    assert len(vs) >= cert.measurements["turan_floor"] if "turan_floor" in cert.measurements else len(vs) >= 1


def test_ckfree_rejects_k4():
    with pytest.raises(InputError) as exc:
        ckfree_subset(complete_graph(5), 4, SeededRng(0, "ck"))
    assert exc.value.witness is not None


def test_ckfree_neighborhood_branch():
    g = complete_bipartite(20, 20)
    vs, cert = ckfree_subset(g, 4, SeededRng(1, "ck"))
    assert cert.measurements["degree_case"] == "neighborhood"
    assert cert.measurements["branch"] == "neighborhood_star"
    assert len(vs) == 21
    check_no_k_cycle(g, vs.members(), 4)


def test_ckfree_middle_branch_spencer_route():
    g = bipartite_circulant(32, 16)
    vs, cert = ckfree_subset(g, 4, SeededRng(0, "ck"))
    assert cert.measurements["degree_case"] == "middle"
    assert "cycle_spencer" in cert.measurements["candidate_sizes"]
    check_no_k_cycle(g, vs.members(), 4)
    # verbatim density cutoff keeps the dense-pair route dormant here
    assert cert.measurements["cycle_density"]["delta"] < cert.measurements["cycle_density"]["cutoff"]


def test_ckfree_forced_drc_route():
    g = bipartite_circulant(32, 16)
    vs, cert = ckfree_subset(g, 4, SeededRng(0, "ck"), delta_cutoff=0.0)
    assert "drc_independent" in cert.measurements["candidate_sizes"]
    check_no_k_cycle(g, vs.members(), 4)


def test_ckfree_no_cycles_shortcut():
    g = path_graph(8)
    vs, cert = ckfree_subset(g, 4, SeededRng(0, "ck"))
    assert len(vs) == 8
    assert cert.measurements["branch"] == "whole_set"


def test_ckfree_turan_floor_respected():
    g = gnp_graph(30, 0.15, SeededRng(2, "in"))  # seed chosen K4-free
    vs, cert = ckfree_subset(g, 5, SeededRng(5, "ck"))
    davg = 2 * g.m / g.n
    assert len(vs) >= math.ceil(g.n / (davg + 1))


# ---------------------------------------------------------------------------
# ksfree recursion
# ---------------------------------------------------------------------------

def test_ksfree_delegates_when_already_sparse():
    g = complete_bipartite(6, 6)  # K3-free, so K4-free too
    vs, cert = ksfree_recursion(g, 5, 3, SeededRng(0, "ks"))
    assert cert.measurements["trace"][0]["action"] == "delegate"
    check_no_k_cycle(g, vs.members(), 3)


def test_ksfree_descends_on_multipartite():
    g = complete_multipartite([5, 5, 5, 5])
    vs, cert = ksfree_recursion(g, 5, 3, SeededRng(0, "ks"))
    assert len(vs) == 6
    check_no_k_cycle(g, vs.members(), 3)
    actions = [step["action"] for step in cert.measurements["trace"]]
    assert "descend" in actions


def test_ksfree_rejects_ks():
    with pytest.raises(InputError):
        ksfree_recursion(complete_graph(6), 5, 3, SeededRng(0, "ks"))


def test_ksfree_requires_s_at_least_4():
    with pytest.raises(InputError):
        ksfree_recursion(cycle_graph(5), 3, 3, SeededRng(0, "ks"))


# ---------------------------------------------------------------------------
# G-plus families
# ---------------------------------------------------------------------------

def test_gplus_on_c5_frozen():
    fam = gplus_family(cycle_graph(5))
    assert (fam.v, fam.w) == (0, 2)
    added = set(fam.gplus.edges()) - set(cycle_graph(5).edges())
    assert added == {(0, 3), (2, 4)}
    assert fam.gstar.m == 4
    assert fam.gstarstar.m == 1


def test_gplus_on_p4():
    fam = gplus_family(path_graph(4))
    assert (fam.v, fam.w) == (0, 2)
    assert fam.gplus.m > path_graph(4).m


def test_gplus_rejects_clique():
    with pytest.raises(InputError):
        gplus_family(complete_graph(4))


def test_lex_least_pair():
    assert lex_least_nonadjacent_pair(cycle_graph(5)) == (0, 2)
    assert lex_least_nonadjacent_pair(path_graph(3)) == (0, 2)


# ---------------------------------------------------------------------------
# girth hypergraphs and s-property statistics
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("seed", SEEDS)
def test_random_girth_hypergraph_properties(seed):
    h, params = random_girth_hypergraph(40, 3, SeededRng(seed, "gh"))
    assert h.r == 3
    assert hypergraph_girth_at_least(h, 5).passed
    for length in (2, 3, 4):
        assert not find_loose_cycles(h, length, limit=1)
    assert params.p == pytest.approx(40 ** (1 - 3 + 1 / 6))


def test_girth_hypergraph_deterministic():
    a, _ = random_girth_hypergraph(30, 3, SeededRng(7, "gh"))
    b, _ = random_girth_hypergraph(30, 3, SeededRng(7, "gh"))
    assert a.edges == b.edges


def test_count_edges_one_outside():
    from erdos_rogers import Hypergraph

    h = Hypergraph(6, [(0, 1, 2), (0, 1, 5), (3, 4, 5)], 3)
    assert count_edges_one_outside(h, {0, 1, 2}) == 1  # only (0,1,5)
    assert count_edges_one_outside(h, {0, 1, 2, 3, 4}) == 2


def test_sprop_statistics_modes():
    h, _ = random_girth_hypergraph(18, 3, SeededRng(1, "gh"))
    report = sprop_statistics(h, 3, 10, SeededRng(1, "sp"))
    assert report["mode"] == "exhaustive"
    assert report["checked"] > 0
    big, _ = random_girth_hypergraph(64, 3, SeededRng(1, "gh"))
    report2 = sprop_statistics(big, 3, 10, SeededRng(1, "sp"))
    assert report2["mode"] == "sampled"
    assert report2["checked"] == 10


def test_sunflower_budget_values():
    budget = sunflower_budget(30, 4, uniformity_t=4)
    assert budget["R"] == 25  # 4! + 1
    assert budget["T"] == 24 * (25 * math.comb(29, 3) - 1) ** 4
    assert budget["b"] == pytest.approx(30 ** (1 - 1 / 80))


# ---------------------------------------------------------------------------
# theorem4 builders
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("gname,t", [("c4", 30), ("c5", 30)])
def test_theorem4_part2_builds(gname, t):
    g = named_graph(gname)
    built, cert = theorem4_part2_build(g, t, SeededRng(0, "t42"))
    assert built.n == t
    assert cert.passed("pattern_absent")
    assert cert.passed("girth")
    assert not contains_subgraph(built, g).found


def test_theorem4_part2_rejects_cliques_and_cut_vertices():
    with pytest.raises(InputError):
        theorem4_part2_build(complete_graph(4), 20, SeededRng(0, "t42"))
    with pytest.raises(InputError):
        theorem4_part2_build(path_graph(4), 20, SeededRng(0, "t42"))


def test_theorem4_part2_try_all_pairs_records_counts():
    built, cert = theorem4_part2_build(
        cycle_graph(4), 25, SeededRng(2, "t42"), try_all_pairs=True
    )
    assert "pair_edge_counts" in cert.measurements
    assert cert.passed("pattern_absent")


def test_theorem4_part1_builds_c5_free():
    built, cert = theorem4_part1_build(
        named_graph("c5"), named_graph("k2"), 40, 3, 12, SeededRng(9, "t41")
    )
    assert cert.passed("g_absent")
    assert cert.passed("cover")
    assert not contains_subgraph(built, named_graph("c5")).found


def test_theorem4_part1_rejects_hom_target():
    # C5 -> C5 identity hom exists, so pattern C5 cannot shield against C5
    with pytest.raises(InputError) as exc:
        theorem4_part1_build(cycle_graph(5), cycle_graph(5), 20, 3, 12, SeededRng(0, "x"))
    assert "homomorphism" in str(exc.value)


def test_theorem4_part1_rejects_acyclic_g():
    with pytest.raises(InputError):
        theorem4_part1_build(path_graph(4), named_graph("k2"), 20, 3, 12, SeededRng(0, "x"))


# ---------------------------------------------------------------------------
# ramsey-style witnesses
# ---------------------------------------------------------------------------

def test_ramsey_witness_on_c5():
    cert = ramsey_witness_check(cycle_graph(5), named_graph("k2"), named_graph("k3"), 3, 3)
    assert cert.passed("g_free")
    assert cert.passed("independence_below_t")
    assert cert.passed("f_free_below_ramsey")
    assert cert.all_passed()


def test_ramsey_witness_fails_on_k3_host():
    cert = ramsey_witness_check(complete_graph(3), named_graph("k2"), named_graph("k3"), 3, 3)
    assert not cert.passed("g_free")


def test_ramsey_witness_alpha_violation():
    host = Graph(6, [])  # alpha = 6 >= t
    cert = ramsey_witness_check(host, named_graph("k2"), named_graph("k3"), 3, 3)
    assert cert.passed("g_free")
    assert not cert.passed("independence_below_t")


# ---------------------------------------------------------------------------
# canonical forms and the brute-force oracle
# ---------------------------------------------------------------------------

def test_canonical_form_invariant_under_relabeling():
    g = named_graph("wagner")
    perm = [3, 1, 4, 0, 7, 5, 2, 6]
    relabeled = Graph(8, [(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges()])
    assert canonical_form(g) == canonical_form(relabeled)
    assert canonical_form(g) != canonical_form(cycle_graph(8))


def test_canonical_form_separates_same_degree_sequence():
    # C6 and two triangles share the degree sequence but not the form
    two_triangles = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert canonical_form(cycle_graph(6)) != canonical_form(two_triangles)


@pytest.mark.parametrize(
    "n,count",
    [(1, 1), (2, 2), (3, 3), (4, 7), (5, 14), (6, 38)],
)
def test_triangle_free_rep_counts(n, count):
    reps, exact, counts = gfree_graph_reps(named_graph("k3"), n)
    assert exact
    assert len(reps) == count


@pytest.mark.parametrize("n,value", [(2, 1), (5, 2), (8, 3)])
def test_brute_force_f_k2_k3(n, value):
    res = brute_force_f(named_graph("k2"), named_graph("k3"), n)
    assert res.exact
    assert res.value == value


def test_brute_force_f_witness_is_extremal():
    res = brute_force_f(named_graph("k2"), named_graph("k3"), 5)
    host = Graph(5, [tuple(e) for e in res.witness_edges])
    assert not perm_contains(host, named_graph("k3"))
    from oracles import brute_mis

    assert brute_mis(host) == res.value


def test_brute_force_f_monotone_in_n():
    vals = [brute_force_f(named_graph("k2"), named_graph("k3"), n).value for n in range(2, 7)]
    assert vals == sorted(vals)


def test_brute_force_f_known_small_cells():
    assert brute_force_f(named_graph("k2"), named_graph("p3"), 6).value == 3
    assert brute_force_f(named_graph("k2"), named_graph("k2"), 6).value == 6
    assert brute_force_f(named_graph("p3"), named_graph("k3"), 5).value == 3
    assert brute_force_f(named_graph("c5"), named_graph("c4"), 5).value == 4
