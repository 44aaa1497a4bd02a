import random
from itertools import combinations

import pytest
from hypothesis import given

from aboveguarantee.errors import CapacityError, InputError
from aboveguarantee.generators import random_graph
from aboveguarantee.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    grid_graph,
    has_kr,
    is_acyclic,
    is_cluster,
    is_vertex_cover,
    path_graph,
    petersen_graph,
)
from aboveguarantee.oracles import (
    brute_cluster_deletion_number,
    brute_distance_to_kr_free,
    brute_max_independent_set,
    brute_min_fvs,
    brute_min_vertex_cover,
)

from conftest import graphs

TREE = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])


def test_vertex_cover_examples():
    assert brute_min_vertex_cover(cycle_graph(5)).value == 3
    assert brute_min_vertex_cover(complete_graph(4)).value == 3
    assert brute_min_vertex_cover(empty_graph(4)).value == 0


def test_vertex_cover_witness_is_lexicographically_smallest():
    res = brute_min_vertex_cover(cycle_graph(5))
    assert res.witness == (0, 1, 3) and res.tier == "enumeration"


def test_independent_set_examples():
    assert brute_max_independent_set(cycle_graph(5)).value == 2
    assert brute_max_independent_set(complete_graph(4)).value == 1
    assert brute_max_independent_set(empty_graph(5)).value == 5


def test_fvs_examples():
    assert brute_min_fvs(cycle_graph(5)).value == 1
    assert brute_min_fvs(TREE).value == 0
    assert brute_min_fvs(complete_graph(4)).value == 2
    assert brute_min_fvs(petersen_graph()).value == 3


def test_cvd_examples():
    assert brute_cluster_deletion_number(path_graph(3)).value == 1
    assert brute_cluster_deletion_number(disjoint_union(complete_graph(3), complete_graph(2))).value == 0
    assert brute_cluster_deletion_number(cycle_graph(5)).value == 2


def test_distance_to_kr_free_examples():
    assert brute_distance_to_kr_free(complete_graph(4), 3).value == 2
    assert brute_distance_to_kr_free(cycle_graph(5), 3).value == 0
    assert brute_distance_to_kr_free(disjoint_union(complete_graph(3), complete_graph(3)), 3).value == 2
    with pytest.raises(InputError):
        brute_distance_to_kr_free(cycle_graph(3), 2)


def test_guards():
    with pytest.raises(CapacityError):
        brute_min_vertex_cover(empty_graph(17), tier="enumeration")
    with pytest.raises(CapacityError):
        brute_min_vertex_cover(empty_graph(41))
    with pytest.raises(CapacityError):
        brute_min_fvs(empty_graph(17))
    with pytest.raises(CapacityError):
        brute_cluster_deletion_number(empty_graph(15), tier="enumeration")
    with pytest.raises(CapacityError):
        brute_cluster_deletion_number(empty_graph(65))
    with pytest.raises(CapacityError):
        brute_distance_to_kr_free(complete_graph(30), 3, work_budget=1000)
    with pytest.raises(InputError):
        brute_min_vertex_cover(cycle_graph(3), tier="lp")


def test_bnb_tiers_on_larger_graphs():
    G = grid_graph(5, 6)
    res = brute_min_vertex_cover(G)
    assert res.tier == "bnb" and res.value == 15 and is_vertex_cover(G, res.witness)
    res = brute_cluster_deletion_number(grid_graph(4, 4))
    assert res.tier == "bnb"
    rest, _ = delete_vertices(grid_graph(4, 4), res.witness)
    assert is_cluster(rest)


@given(graphs(max_n=10))
def test_cross_oracle_identities(G):
    vc = brute_min_vertex_cover(G)
    alpha = brute_max_independent_set(G)
    fvs = brute_min_fvs(G)
    cvd = brute_cluster_deletion_number(G)
    dist = brute_distance_to_kr_free(G, 3)
    assert alpha.value + vc.value == G.n
    assert dist.value <= fvs.value <= vc.value
    assert cvd.value <= vc.value
    assert is_acyclic(delete_vertices(G, fvs.witness)[0])
    assert not has_kr(delete_vertices(G, dist.witness)[0], 3)


@given(graphs(max_n=9))
def test_witnesses_are_lexicographically_smallest(G):
    vc = brute_min_vertex_cover(G)
    first = next(S for S in combinations(G.vertices, vc.value) if is_vertex_cover(G, S))
    assert vc.witness == first


def test_tier2_against_enumeration_sample():
    rng = random.Random(3)
    for i in range(150):
        G = random_graph(rng, rng.randint(1, 12), (0.2, 0.5, 0.8)[i % 3])
        assert brute_min_vertex_cover(G, tier="bnb").value == brute_min_vertex_cover(G, tier="enumeration").value
        assert (
            brute_cluster_deletion_number(G, tier="bnb").value
            == brute_cluster_deletion_number(G, tier="enumeration").value
        )
