from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from aboveguarantee.errors import InputError
from aboveguarantee.graph import (
    build_graph,
    complement,
    complete_graph,
    components_mask,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    grid_graph,
    has_kr,
    induced_subgraph,
    is_acyclic,
    is_cluster,
    is_feedback_vertex_set,
    is_independent_set,
    is_vertex_cover,
    path_graph,
    petersen_graph,
    star_graph,
)

from conftest import edge_set, graphs


def test_build_triangle():
    G = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert G == complete_graph(3)
    assert G.edge_count == 3


def test_build_edgeless_and_duplicates():
    assert build_graph(4, []).edge_count == 0
    G = build_graph(2, [(0, 1), (1, 0)])
    assert G.edge_count == 1 and G.edges() == [(0, 1)]


@pytest.mark.parametrize("n, edges", [(3, [(0, 3)]), (3, [(-1, 0)]), (3, [(1, 1)]), (-1, [])])
def test_build_rejects_bad_input(n, edges):
    with pytest.raises(InputError):
        build_graph(n, edges)


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    assert complement(empty_graph(4)) == complete_graph(4)
    c5bar = complement(cycle_graph(5))
    assert sorted(c5bar.degrees()) == [2] * 5 and c5bar.edge_count == 5
    assert is_acyclic(c5bar) is False


def test_induced_subgraph_examples():
    H, old = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert H == complete_graph(3) and old == (0, 1, 2)
    H, old = induced_subgraph(cycle_graph(5), {0, 2})
    assert H.n == 2 and H.edge_count == 0 and old == (0, 2)
    H, _ = induced_subgraph(petersen_graph(), set())
    assert H.n == 0


def test_induced_subgraph_rejects_bad_vertex():
    with pytest.raises(InputError):
        induced_subgraph(cycle_graph(3), {5})


def test_acyclic_examples():
    assert is_acyclic(path_graph(4))
    assert not is_acyclic(cycle_graph(3))
    assert not is_acyclic(disjoint_union(cycle_graph(3), cycle_graph(3)))
    assert is_acyclic(empty_graph(0))


def test_cluster_examples():
    assert is_cluster(disjoint_union(complete_graph(3), complete_graph(2)))
    assert not is_cluster(path_graph(3))
    assert not is_cluster(cycle_graph(4))


def test_has_kr_examples():
    assert has_kr(complete_graph(4), 3)
    assert not has_kr(cycle_graph(5), 3)
    assert has_kr(empty_graph(1), 1)
    assert not has_kr(empty_graph(0), 1)
    with pytest.raises(InputError):
        has_kr(complete_graph(3), 0)


def test_named_graphs():
    P = petersen_graph()
    assert P.n == 10 and P.edge_count == 15 and set(P.degrees()) == {3}
    assert not has_kr(P, 3)
    assert grid_graph(3, 4).edge_count == 3 * 3 + 2 * 4
    assert star_graph(3).degrees() == [3, 1, 1, 1]


def test_solution_predicates():
    C4 = cycle_graph(4)
    assert is_vertex_cover(C4, {0, 2}) and not is_vertex_cover(C4, {0, 1})
    assert is_feedback_vertex_set(C4, {3}) and not is_feedback_vertex_set(C4, set())
    assert is_independent_set(C4, {1, 3}) and not is_independent_set(C4, {0, 1})


@given(graphs(max_n=9))
def test_adjacency_invariants(G):
    for u in G.vertices:
        assert u not in G.neighbors(u)
        for v in G.neighbors(u):
            assert u in G.neighbors(v)
    assert G.edge_count == sum(G.degrees()) // 2 == len(G.edges())


@given(graphs(max_n=9))
def test_double_complement(G):
    assert complement(complement(G)) == G


@given(graphs(max_n=9), st.data())
def test_induced_edges_match(G, data):
    S = data.draw(st.sets(st.sampled_from(range(G.n)))) if G.n else set()
    H, old = induced_subgraph(G, S)
    expected = {(u, v) for u, v in G.edges() if u in S and v in S}
    assert {(old[a], old[b]) for a, b in H.edges()} == expected


@given(graphs(max_n=9))
def test_delete_vertices_is_induced_on_rest(G):
    X = set(range(0, G.n, 2))
    H, old = delete_vertices(G, X)
    assert set(old) == set(G.vertices) - X
    assert H.edge_count == sum(1 for u, v in G.edges() if u not in X and v not in X)


def _has_cycle_dfs(G):
    seen = set()
    for root in G.vertices:
        if root in seen:
            continue
        stack = [(root, -1)]
        seen.add(root)
        while stack:
            v, parent = stack.pop()
            for w in G.neighbors(v):
                if w == parent:
                    continue
                if w in seen:
                    return True
                seen.add(w)
                stack.append((w, v))
    return False


@given(graphs(max_n=9))
def test_acyclic_matches_edge_count_and_traversal(G):
    comps = len(components_mask(G.masks, (1 << G.n) - 1))
    forest = G.edge_count == G.n - comps
    assert is_acyclic(G) == forest == (not _has_cycle_dfs(G))


@given(graphs(max_n=8))
def test_cluster_matches_p3_search(G):
    has_p3 = any(
        G.has_edge(a, b) and G.has_edge(b, c) and not G.has_edge(a, c)
        for b in G.vertices
        for a, c in combinations(sorted(G.neighbors(b)), 2)
    )
    assert is_cluster(G) == (not has_p3)


@given(graphs(max_n=10), st.integers(1, 5))
def test_has_kr_matches_enumeration(G, r):
    brute = any(all(G.has_edge(u, v) for u, v in combinations(S, 2)) for S in combinations(G.vertices, r))
    assert has_kr(G, r) == brute


def test_edge_set_helper_roundtrip():
    G = build_graph(4, [(2, 1), (3, 0)])
    assert edge_set(G) == {(1, 2), (0, 3)}
