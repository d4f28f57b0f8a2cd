import pytest

from erdos_rogers import (
    InputError,
    density_floor,
    efr_certificate,
    efr_hypergraph,
    hypergraph_is_linear,
    hypergraph_is_triangle_free,
    sphere_points,
)
from oracles import sphere_count


@pytest.mark.parametrize("d,r,expect", [(2, 5, 2), (2, 4, 0), (3, 3, 3)])
def test_sphere_point_examples(d, r, expect):
    assert sphere_points(d, r).count == expect


def test_sphere_points_are_on_sphere():
    pts = sphere_points(3, 9)
    assert pts.count > 0
    for p in pts:
        assert len(p) == 3
        assert all(c >= 1 for c in p)
        assert sum(c * c for c in p) == 81
    assert list(pts) == sorted(pts)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("r", [1, 2, 3, 5, 7, 12, 25])
def test_sphere_counts_match_convolution(d, r):
    assert sphere_points(d, r).count == sphere_count(d, r)


def test_sphere_points_rejects_bad_args():
    with pytest.raises(InputError):
        sphere_points(0, 3)
    with pytest.raises(InputError):
        sphere_points(2, 0)


@pytest.mark.parametrize("d,r,R", [(2, 5, 3), (3, 3, 3), (2, 10, 4)])
def test_efr_edge_count_formula(d, r, R):
    inst = efr_hypergraph(d, r, R)
    h = inst.hypergraph
    assert h.m == sphere_points(d, r).count * r**d
    assert h.r == R
    assert h.n == inst.declared_n == sum((i * r) ** d for i in range(1, R + 1))


def test_efr_is_linear_and_triangle_free():
    h = efr_hypergraph(2, 5, 3).hypergraph
    assert hypergraph_is_linear(h).passed
    assert hypergraph_is_triangle_free(h).passed


def test_efr_edges_are_transversal():
    inst = efr_hypergraph(2, 5, 3)
    bounds = list(inst.part_offsets) + [inst.declared_n]
    for e in inst.hypergraph.edges:
        parts = [
            next(i for i in range(inst.R) if bounds[i] <= v < bounds[i + 1]) for v in e
        ]
        assert parts == list(range(inst.R))


def test_efr_vertex_id_round_trip():
    inst = efr_hypergraph(2, 5, 3)
    # part 2 has side 10; spot-check corners
    assert inst.vertex_id(1, (1, 1)) == inst.part_offsets[0]
    assert inst.vertex_id(2, (1, 1)) == inst.part_offsets[1]
    assert inst.vertex_id(2, (10, 10)) == inst.part_offsets[1] + 99


def test_efr_rejects_empty_direction_set():
    with pytest.raises(InputError):
        efr_hypergraph(2, 4, 3)  # no positive points at squared radius 16


def test_density_floor_monotone_in_n():
    assert density_floor(10_000, 5) > density_floor(1_000, 5)


def test_efr_certificate_contents():
    cert = efr_certificate(efr_hypergraph(2, 5, 3))
    assert cert.passed("linear")
    assert cert.passed("triangle_free")
    assert cert.passed("edge_count_identity")
    assert cert.all_passed()
    assert cert.parameters["d"] == 2
    assert cert.measurements["declared_n"] == 350
