from __future__ import annotations

import pytest

from qct.admissibility import admits_nZ
from qct.modules import ModuleList, build_M, cycle_family, enumerate_indecomposables, module_from_label
from qct.oracle import Oracle, ar_quiver, find_cluster_tilting, verify_n_cluster_tilting, verify_nZ
from qct.quiver import cycle_quiver, linear_quiver

from conftest import schema_validator
from expected import AR_VERTEX22_EDGES, AR_VERTEX22_TAU, AR_TWELVE_EDGES, AR_TWELVE_TAU


@pytest.mark.parametrize("field", [2, 3])
def test_twelve_passes_at_3(twelve, field):
    rep = verify_n_cluster_tilting(twelve, 3, build_M(twelve, 3), field)
    assert rep["pass"] and rep["counterexamples"] == []
    assert rep["contains_projectives"] and rep["contains_injectives"]
    assert rep["field"] == field
    schema_validator("verify_report").validate(rep)


@pytest.mark.parametrize("field", [2, 3])
def test_vertex22_passes_at_2(vertex22, field):
    assert verify_n_cluster_tilting(vertex22, 2, build_M(vertex22, 2), field)["pass"]


def test_twelve_fails_at_2_with_witness(twelve):
    rep = verify_n_cluster_tilting(twelve, 2, build_M(twelve, 3), 2)
    assert not rep["pass"]
    # add(M_3) is rigid in degrees 1 and 2, so the witnesses are the simples
    # lying outside it yet Ext^1-orthogonal to it on one side
    cx = rep["counterexamples"]
    assert {c["reason"] for c in cx} == {"missing"}
    assert sorted(c["module"] for c in cx) == sorted(twelve.vertices)


def test_everything_is_1_cluster_tilting(twelve):
    gens = ModuleList(tuple(enumerate_indecomposables(twelve)))
    assert verify_n_cluster_tilting(twelve, 1, gens)["pass"]


def test_missing_module_is_reported(vertex22):
    M = build_M(vertex22, 2)
    dropped = module_from_label(vertex22, "7")
    rep = verify_n_cluster_tilting(vertex22, 2, ModuleList(tuple(m for m in M if m != dropped)))
    assert not rep["pass"]
    assert {"module": "7", "i": 0, "direction": "from", "reason": "missing"} in rep["counterexamples"]


def test_missing_projective_fails(vertex22):
    M = build_M(vertex22, 2)
    p = module_from_label(vertex22, "3/4 6")
    rep = verify_n_cluster_tilting(vertex22, 2, ModuleList(tuple(m for m in M if m != p)))
    assert not rep["pass"] and not rep["contains_projectives"]


@pytest.mark.parametrize("m,n", [(3, 2), (5, 2), (7, 3), (9, 4)])
def test_linear_build_M_is_the_only_answer(m, n):
    q = linear_quiver(m)
    found = find_cluster_tilting(q, n)
    assert found == [build_M(q, n).indecomposables]
    assert verify_n_cluster_tilting(q, n, build_M(q, n))["pass"]


@pytest.mark.parametrize("name,n", [("vertex22", 2), ("twelve", 3)])
def test_search_finds_build_M(name, n, request):
    q = request.getfixturevalue(name)
    assert find_cluster_tilting(q, n) == [build_M(q, n).indecomposables]


def test_search_finds_nothing_when_not_admissible(twelve):
    assert find_cluster_tilting(twelve, 2) == []


def test_cycle_family_members_verify():
    q = cycle_quiver(4)
    fam = cycle_family(q, 2)
    assert {frozenset(f.indecomposables) for f in fam} == set(find_cluster_tilting(q, 2))
    for member in fam:
        assert verify_n_cluster_tilting(q, 2, member)["pass"]
        assert verify_nZ(q, 2, member)["pass"]


def test_nz(twelve):
    rep = verify_nZ(twelve, 3, build_M(twelve, 3))
    assert not rep["pass"] and rep["counterexamples"]
    q = linear_quiver(5)
    assert verify_nZ(q, 2, build_M(q, 2))["pass"]
    assert admits_nZ(q, 2)


# -- AR quivers --------------------------------------------------------------------

def _edges(ar):
    out = []
    for a, b, k in ar.arrows:
        out += [(a.label, b.label)] * k
    return sorted(out)


def test_ar_a2():
    ar = ar_quiver(linear_quiver(2))
    assert len(ar.nodes) == 3 and ar.edge_count == 2 and len(ar.tau_pairs) == 1
    assert not ar.mesh_failures()


@pytest.mark.parametrize("name,edges,tau,counts", [
    ("vertex22", AR_VERTEX22_EDGES, AR_VERTEX22_TAU, (22, 28, 14)),
    ("twelve", AR_TWELVE_EDGES, AR_TWELVE_TAU, (30, 36, 18)),
])
@pytest.mark.parametrize("field", [2, 3])
def test_ar_matches_figures(name, edges, tau, counts, field, request):
    q = request.getfixturevalue(name)
    ar = ar_quiver(q, field)
    assert (len(ar.nodes), ar.edge_count, len(ar.tau_pairs)) == counts
    assert _edges(ar) == sorted(edges)
    assert {x.label: t.label for x, t in ar.tau_pairs} == tau
    assert ar.mesh_failures() == []


def test_ar_output_formats(vertex22):
    ar = ar_quiver(vertex22)
    schema_validator("ar_quiver").validate(ar.to_json())
    dot = ar.to_dot()
    assert dot.startswith("digraph ar_quiver {")
    assert dot.count("style=dashed") == 14
    assert dot.count(" -> ") == 28 + 14


def test_ar_mesh_on_cycle_and_linear():
    for q in (cycle_quiver(3), linear_quiver(5)):
        assert ar_quiver(q, oracle=Oracle(q, 2)).mesh_failures() == []
