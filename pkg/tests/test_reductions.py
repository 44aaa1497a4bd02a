import json
from collections import Counter

import pytest

from aboveguarantee.errors import InputError
from aboveguarantee.formats import CnfFormula
from aboveguarantee.generators import complete_polarity_formula
from aboveguarantee.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    empty_graph,
    has_kr,
    is_acyclic,
    is_cluster,
    is_vertex_cover,
    path_graph,
)
from aboveguarantee.oracles import (
    brute_cluster_deletion_number,
    brute_distance_to_kr_free,
    brute_min_fvs,
    brute_min_vertex_cover,
)
from aboveguarantee.reductions import (
    ReductionArtifact,
    assignment_cover,
    clause_side,
    clause_vertex,
    clique_to_vc_complement,
    fvs_to_fvs_below_vc,
    is_to_vc_above_krfree,
    sat3_to_vc_above_cvd,
    variable_side,
    variable_vertex,
    vc_to_fvs_triangles,
)
from aboveguarantee.vc import vc_decide

TWO_K2 = build_graph(4, [(0, 1), (2, 3)])
SINGLE_CLAUSE = CnfFormula.from_ints(3, [[1, 2, 3]])


def covers_at_most(G, k):
    return brute_min_vertex_cover(G).value <= k


# -- clique -> vc on the complement ------------------------------------------


def test_clique_complement_c5():
    art = clique_to_vc_complement(cycle_graph(5), 2)
    assert sorted(art.graph.degrees()) == [2] * 5 and art.budget == 3
    assert covers_at_most(art.graph, art.budget)


def test_clique_complement_k4_and_edgeless():
    art = clique_to_vc_complement(complete_graph(4), 4)
    assert art.graph == empty_graph(4) and art.budget == 0
    assert covers_at_most(art.graph, 0)
    art = clique_to_vc_complement(empty_graph(3), 2)
    assert art.graph == complete_graph(3) and art.budget == 1
    assert not covers_at_most(art.graph, 1)


def test_clique_complement_claimed_bounds():
    G = path_graph(5)
    art = clique_to_vc_complement(G, 2)
    c = art.claimed_params
    assert c["above_min_degree"] <= c["max_degree"]
    assert c["above_clique_number"] <= brute_min_vertex_cover(G).value


@pytest.mark.parametrize("k", [-1, 6])
def test_clique_complement_range(k):
    with pytest.raises(InputError):
        clique_to_vc_complement(cycle_graph(5), k)


# -- vc -> fvs by triangles --------------------------------------------------


def test_triangles_k3():
    art = vc_to_fvs_triangles(complete_graph(3), 2)
    assert art.graph.n == 6 and brute_min_fvs(art.graph).value == 2
    assert art.vertices_labelled("edge") == frozenset({3, 4, 5})


def test_triangles_single_edge_and_edgeless():
    art = vc_to_fvs_triangles(path_graph(2), 1)
    assert art.graph == complete_graph(3) and brute_min_fvs(art.graph).value == 1
    art = vc_to_fvs_triangles(empty_graph(3), 0)
    assert art.graph == empty_graph(3) and is_acyclic(art.graph)


# -- independent set -> vc above distance to K_r-free --------------------------


def test_krfree_two_k2():
    art = is_to_vc_above_krfree(TWO_K2, 2, 3)
    G = art.graph
    assert G.n == 24 and art.budget == 14
    counts = Counter(label[0] for label in art.gadget_map)
    assert counts == {"V": 8, "A": 2, "A_leaf": 2, "B": 6, "B_leaf": 6}
    assert vc_decide(G, 14).feasible
    assert brute_min_vertex_cover(G, tier="bnb").value <= 14


def test_krfree_two_k2_too_large_k():
    art = is_to_vc_above_krfree(TWO_K2, 3, 3)
    assert not vc_decide(art.graph, art.budget).feasible


def test_krfree_single_edge():
    art = is_to_vc_above_krfree(path_graph(2), 1, 3)
    assert vc_decide(art.graph, art.budget).feasible


def test_krfree_designated_set():
    art = is_to_vc_above_krfree(path_graph(3), 2, 3)
    D = art.certificates["D"]
    assert len(D) == 6 == art.claimed_params["distance_to_kr_free"]
    assert not has_kr(delete_vertices(art.graph, D)[0], 3)
    assert brute_distance_to_kr_free(art.graph, 3).value == 6


def test_krfree_r4():
    for G, k, expected in [(TWO_K2, 2, True), (complete_graph(3), 2, False)]:
        art = is_to_vc_above_krfree(G, k, 4)
        assert art.budget == (G.n - 1) * k + 2 * k + 3 * (k + 1)
        assert not has_kr(delete_vertices(art.graph, art.certificates["D"])[0], 4)
        assert vc_decide(art.graph, art.budget).feasible == expected


@pytest.mark.parametrize("k, r, n", [(0, 3, 3), (1, 2, 3), (1, 3, 0)])
def test_krfree_parameter_errors(k, r, n):
    with pytest.raises(InputError):
        is_to_vc_above_krfree(empty_graph(n), k, r)


# -- 3-SAT -> vc with cvd = vc -------------------------------------------------


def test_sat_single_clause():
    art = sat3_to_vc_above_cvd(SINGLE_CLAUSE)
    G = art.graph
    assert G.n == 39 and art.budget == 23 and G.edge_count == 147 + 27 + 63
    assert vc_decide(G, 23).feasible and not vc_decide(G, 22).feasible
    assert brute_cluster_deletion_number(G, tier="bnb").value == 23


def test_sat_layout_and_labels():
    phi = CnfFormula.from_ints(4, [[1, -2, 3], [-1, 2, -4]])
    art = sat3_to_vc_above_cvd(phi)
    assert art.graph.n == 21 * 2 + 6 * 4
    assert art.gadget_map[clause_vertex(1, 2, 6)] == ("u", 1, 2, 6)
    assert art.gadget_map[variable_vertex(2, 3, 1, 2)] == ("v", 3, 1, 2)
    G = art.graph
    # literal -2 in clause 0, side 1, joins the negative side of x2
    assert all(G.has_edge(u, v) for u in clause_side(0, 1) for v in variable_side(2, 1, 1))
    assert not any(G.has_edge(u, v) for u in clause_side(0, 1) for v in variable_side(2, 1, 0))


def test_sat_assignment_cover():
    phi = CnfFormula.from_ints(4, [[1, -2, 3], [-1, 2, -4], [2, 3, 4]])
    art = sat3_to_vc_above_cvd(phi)
    C = assignment_cover(phi, [True, True, False, False])
    assert len(C) == 14 * 3 + 3 * 4 and is_vertex_cover(art.graph, C)
    with pytest.raises(InputError):
        assignment_cover(phi, [False, False, False, False])


def test_sat_unsatisfiable_polarity_family():
    art = sat3_to_vc_above_cvd(complete_polarity_formula())
    assert art.graph.n == 186 and art.budget == 121
    assert not vc_decide(art.graph, 121).feasible


def test_sat_extended_variant():
    phi = CnfFormula.from_ints(3, [[1, 2, 3]] * 3)
    art = sat3_to_vc_above_cvd(phi, extended=True)
    H = art.graph
    assert H.n == 111 and art.budget == 81
    assert len(art.certificates["T"]) == 30
    X = art.certificates["cluster_deletion_set"]
    assert len(X) == 81 and is_cluster(delete_vertices(H, X)[0])
    assert vc_decide(H, 81).feasible and not vc_decide(H, 80).feasible
    assert art.claimed_params["vc_lower_bound"] == 81 and art.claimed_params["base_k"] == 51


def test_sat_extended_padding_is_labelled():
    art = sat3_to_vc_above_cvd(SINGLE_CLAUSE, extended=True)
    assert art.claimed_params["padded_clauses"] == 2
    assert len(art.vertices_labelled("u_dummy")) == 42
    m, n = 3, 3
    assert art.graph.n == 21 * m + 6 * n + 7 * m + 3 * n and art.budget == 21 * m + 6 * n
    assert vc_decide(art.graph, art.budget).feasible


def test_sat_duplicate_literals_end_to_end():
    sat = CnfFormula.from_ints(2, [[1, 1, 2]])
    unsat = CnfFormula.from_ints(1, [[1, 1, 1], [-1, -1, -1]])
    for phi, expected in [(sat, True), (unsat, False)]:
        art = sat3_to_vc_above_cvd(phi)
        assert vc_decide(art.graph, art.budget).feasible == expected


# -- fvs -> fvs below vc -------------------------------------------------------


def test_below_vc_c5_k1():
    art = fvs_to_fvs_below_vc(cycle_graph(5), 1)
    H = art.graph
    assert H.n == 12 and art.claimed_params["lambda"] == 2 and art.budget == 3
    assert brute_min_fvs(H).value <= 3
    assert brute_min_vertex_cover(H).value == 5


def test_below_vc_c5_k0():
    art = fvs_to_fvs_below_vc(cycle_graph(5), 0)
    assert art.graph.n == 13 and art.claimed_params["lambda"] == 3
    assert brute_min_fvs(art.graph).value > 3


def test_below_vc_p3():
    art = fvs_to_fvs_below_vc(path_graph(3), 1)
    assert art.claimed_params["lambda"] == 0 and art.graph.n == 6
    assert is_acyclic(art.graph) and not art.certificates["V_star"]


@pytest.mark.parametrize("G, k", [(empty_graph(3), 0), (cycle_graph(5), 4), (cycle_graph(5), -1)])
def test_below_vc_errors(G, k):
    with pytest.raises(InputError):
        fvs_to_fvs_below_vc(G, k)


# -- artifact plumbing -----------------------------------------------------------


def test_sidecar_is_json_and_labels_everything():
    art = fvs_to_fvs_below_vc(cycle_graph(5), 1)
    side = json.loads(json.dumps(art.sidecar()))
    assert side["k_prime"] == 3 and side["lambda"] == 2 and side["n"] == 12
    assert len(side["gadget_map"]) == 12
    assert side["certificates"]["leaves"] == list(range(5, 10))


def test_sat_sidecar_keeps_edge_count():
    side = sat3_to_vc_above_cvd(SINGLE_CLAUSE).sidecar()
    assert side["k"] == 23 and side["m"] == 237 and side["clauses"] == 1


def test_artifact_validation():
    with pytest.raises(AssertionError):
        ReductionArtifact("bad", path_graph(2), 1, "k", gadget_map=(("x",),))
    with pytest.raises(AssertionError):
        ReductionArtifact("bad", path_graph(2), 1, "k", gadget_map=(("x",), ("x",)))
    with pytest.raises(InputError):
        ReductionArtifact("bad", path_graph(2), 1, "k", {"S": frozenset({5})}, (("x",), ("y",)))
    art = ReductionArtifact("bad", path_graph(2), 1, "k", gadget_map=(("x",), ("y",)), claimed_params={"n": 7})
    with pytest.raises(AssertionError):
        art.sidecar()
