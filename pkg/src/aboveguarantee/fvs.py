"""Exact Feedback Vertex Set and the branching above the degeneracy."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .graph import Graph, components_mask, delete_vertices, is_feedback_vertex_set, iter_bits
from .params import degeneracy_core
from .result import SolveResult


@dataclass(frozen=True)
class FvsKernel:
    graph: Graph
    budget: int
    forced: frozenset[int]
    old_ids: tuple[int, ...]
    infeasible: bool

    def lift(self, solution) -> frozenset[int]:
        return self.forced | {self.old_ids[v] for v in solution}


def _reduce(adj: list[int], alive: int, k: int) -> tuple[int, int, int]:
    """Exhaustive reduction in place on ``adj``; returns ``(alive, k, taken)``.

    Rules: drop vertices of degree <= 1; smooth a degree-2 vertex whose two
    neighbours are non-adjacent; a triangle component forces its lowest
    vertex.  A degree-2 vertex with adjacent neighbours is left alone so
    the graph stays simple.
    """
    taken = 0
    changed = True
    while changed and k >= 0:
        changed = False
        for v in iter_bits(alive):
            if not (alive >> v) & 1:
                continue
            nb = adj[v] & alive
            d = nb.bit_count()
            if d <= 1:
                alive &= ~(1 << v)
                changed = True
                continue
            if d != 2:
                continue
            a = (nb & -nb).bit_length() - 1
            b = (nb & ~(1 << a)).bit_length() - 1
            if not (adj[a] >> b) & 1:
                alive &= ~(1 << v)
                adj[a] |= 1 << b
                adj[b] |= 1 << a
                changed = True
            elif (adj[a] & alive).bit_count() == 2 and (adj[b] & alive).bit_count() == 2:
                low = min(v, a, b)
                taken |= 1 << low
                alive &= ~(1 << low)
                k -= 1
                changed = True
                if k < 0:
                    break
    return alive, k, taken


def _shortest_cycle(adj: Sequence[int], alive: int) -> list[int]:
    """Vertices of a shortest cycle (sorted), or [] if the graph is a forest."""
    best: list[int] = []
    best_len = None
    for root in iter_bits(alive):
        parent = {root: -1}
        dist = {root: 0}
        frontier = [root]
        found = None
        while frontier and found is None:
            nxt = []
            for x in frontier:
                for y in iter_bits(adj[x] & alive):
                    if y == parent[x]:
                        continue
                    if y in dist:
                        found = (x, y)
                        break
                    parent[y] = x
                    dist[y] = dist[x] + 1
                    nxt.append(y)
                if found:
                    break
            frontier = nxt
        if found is None:
            continue
        x, y = found
        length = dist[x] + dist[y] + 1
        if best_len is not None and length >= best_len:
            continue
        cyc = set()
        for z in (x, y):
            while z != -1:
                cyc.add(z)
                z = parent[z]
        best_len, best = length, sorted(cyc)
        if best_len == 3:
            break
    return best


class _FvsSearch:
    def __init__(self):
        self.nodes = 0

    def run(self, adj: list[int], alive: int, k: int) -> int | None:
        self.nodes += 1
        adj = list(adj)
        alive, k, taken = _reduce(adj, alive, k)
        if k < 0:
            return None
        if not alive:
            return taken
        if k == 0:
            return None  # every remaining vertex has degree >= 2, so a cycle remains
        degs = [(adj[v] & alive).bit_count() for v in iter_bits(alive)]
        n_alive = len(degs)
        m_alive = sum(degs) // 2
        cyclomatic = m_alive - n_alive + len(components_mask(adj, alive))
        if cyclomatic > k * (max(degs) - 1):
            return None
        for v in _shortest_cycle(adj, alive):
            sub = self.run(adj, alive & ~(1 << v), k - 1)
            if sub is not None:
                return taken | (1 << v) | sub
        return None


def reduce_fvs(G: Graph, k: int) -> FvsKernel:
    if k < 0:
        raise InputError(f"budget must be nonnegative, got {k}")
    adj = list(G.masks)
    alive, budget, taken = _reduce(adj, (1 << G.n) - 1, k)
    old_ids = tuple(iter_bits(alive))
    new_id = {old: i for i, old in enumerate(old_ids)}
    masks = []
    for old in old_ids:
        m = 0
        for w in iter_bits(adj[old] & alive):
            m |= 1 << new_id[w]
        masks.append(m)
    infeasible = budget < 0 or (budget == 0 and alive != 0)
    return FvsKernel(Graph(len(old_ids), masks), budget, frozenset(iter_bits(taken)), old_ids, infeasible)


def fvs_decide(G: Graph, k: int) -> SolveResult:
    """Is there a feedback vertex set of size at most ``k``?"""
    if k < 0:
        raise InputError(f"budget must be nonnegative, got {k}")
    start = time.perf_counter()
    kernel = reduce_fvs(G, k)
    nodes = 0
    cert = None
    if not kernel.infeasible:
        search = _FvsSearch()
        H = kernel.graph
        found = search.run(list(H.masks), (1 << H.n) - 1, kernel.budget)
        nodes = search.nodes
        if found is not None:
            cert = kernel.lift(iter_bits(found))
            _check_fvs(G, cert, k)
    return SolveResult(cert is not None, cert, nodes, time.perf_counter() - start,
                       {"kernel_vertices": kernel.graph.n, "kernel_budget": kernel.budget})


def _check_fvs(G: Graph, S: frozenset[int], k: int) -> None:
    if len(S) > k or not is_feedback_vertex_set(G, S):
        raise AssertionError(f"solver produced an invalid feedback vertex set of size {len(S)} for k={k}")


def fvs_above_degeneracy(G: Graph, k: int, exhaustive: bool = False) -> SolveResult:
    """Branch once over the core ``V'`` of a ``d``-degenerate graph.

    Cases, for a solution ``X`` with forest ``F = V - X``:
      core:     ``V' ⊆ X``                                   budget k - |V'|
      isolated: some ``u`` isolated in ``G[V' ∩ F]``, so
                ``N_{G[V']}(u) ⊆ X``                          budget k - deg'(u)
      leaf:     some leaf ``u`` of ``G[V' ∩ F]`` with forest
                neighbour ``v``, so ``N_{G[V']}(u) - v ⊆ X``  budget k - deg'(u) + 1

    With ``exhaustive`` every branch is solved and ``stats["case_feasible"]``
    counts the feasible branches per case.
    """
    if k < 0:
        raise InputError(f"budget must be nonnegative, got {k}")
    start = time.perf_counter()
    dec = degeneracy_core(G)
    core = dec.core
    core_nb = {u: G.neighbors(u) & core for u in core}

    branches: list[tuple[str, frozenset[int]]] = [("core", frozenset(core))]
    for u in sorted(core):
        branches.append(("isolated", frozenset(core_nb[u])))
    for u in sorted(core):
        for v in sorted(core_nb[u]):
            branches.append(("leaf", frozenset(core_nb[u] - {v})))

    stats = {
        "d": dec.degeneracy,
        "core": sorted(core),
        "branch_bound": len(core) ** 2 + 1,
        "branch_count": len(branches),
        "subcall_budgets": [],
        "case_feasible": {"core": 0, "isolated": 0, "leaf": 0},
    }
    nodes = 0
    cert = None
    for case, X in branches:
        budget = k - len(X)
        if budget < 0:
            continue
        stats["subcall_budgets"].append(budget)
        rest, old_ids = delete_vertices(G, X)
        sub = fvs_decide(rest, budget)
        nodes += sub.nodes_explored
        if sub.feasible:
            stats["case_feasible"][case] += 1
            if cert is None:
                cert = X | {old_ids[v] for v in sub.certificate}
                _check_fvs(G, cert, k)
                stats["solved_by"] = case
            if not exhaustive:
                break
    return SolveResult(cert is not None, cert, nodes, time.perf_counter() - start, stats)
