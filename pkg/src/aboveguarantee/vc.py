"""Exact Vertex Cover: kernelization, branch and bound, and the branching
above the h-index.

The branch and bound works on bitmask views of the kernel.  At every node it
applies the degree-0/1, high-degree and triangle rules, prunes with a
lower bound (greedy matching and greedy clique partition), and branches on
a maximum-degree vertex ``v``: either ``v`` and its mirrors join the cover,
or all of ``N(v)`` does.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .errors import CapacityError, InputError
from .graph import Graph, delete_vertices, induced_subgraph, is_vertex_cover, iter_bits
from .params import h_index_witness
from .result import SolveResult

DEFAULT_OPTIMUM_LIMIT = 256


@dataclass(frozen=True)
class VcKernel:
    graph: Graph
    budget: int
    forced: frozenset[int]
    old_ids: tuple[int, ...]  # kernel vertex -> input vertex
    infeasible: bool

    def lift(self, cover: frozenset[int] | set[int]) -> frozenset[int]:
        return self.forced | {self.old_ids[v] for v in cover}


def _reduce(adj: Sequence[int], alive: int, k: int) -> tuple[int, int, int]:
    """Apply the safe rules to exhaustion: returns ``(alive, k, taken)``.

    Stops early (with ``k < 0``) once the budget is exhausted.
    """
    taken = 0
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if not (alive >> v) & 1:
                continue
            nb = adj[v] & alive
            d = nb.bit_count()
            if d == 0:
                alive &= ~(1 << v)
                continue
            if d == 1:
                take = nb
            elif d > k:
                take = 1 << v
            elif d == 2:
                a = nb & -nb
                b = nb ^ a
                if not adj[a.bit_length() - 1] & b:
                    continue
                take = nb  # v in a triangle of degree 2: both neighbours dominate it
            else:
                continue
            taken |= take
            alive &= ~take
            k -= take.bit_count()
            changed = True
            if k < 0:
                return alive, k, taken
    return alive, k, taken


def kernelize_vc(G: Graph, k: int) -> VcKernel:
    """Degree-0, degree-1, high-degree and degree-2-triangle rules, then the
    ``k(k+1)`` vertex / ``k^2`` edge size test."""
    if k < 0:
        raise InputError(f"budget must be nonnegative, got {k}")
    adj = G.masks
    alive, budget, taken = _reduce(adj, (1 << G.n) - 1, k)
    forced = frozenset(iter_bits(taken))
    edges = sum((adj[v] & alive).bit_count() for v in iter_bits(alive)) // 2
    infeasible = (
        budget < 0
        or edges > budget * budget
        or alive.bit_count() > budget * (budget + 1)
    )
    reduced, old_ids = induced_subgraph(G, iter_bits(alive))
    return VcKernel(reduced, max(budget, 0) if not infeasible else budget, forced, old_ids, infeasible)


def greedy_matching_bound(adj: Sequence[int], alive: int) -> int:
    size = 0
    free = alive
    for v in iter_bits(alive):
        if (free >> v) & 1:
            nb = adj[v] & free
            if nb:
                u = nb & -nb
                free &= ~u & ~(1 << v)
                size += 1
    return size


def clique_partition_bound(adj: Sequence[int], alive: int) -> int:
    """Sum of ``|Q| - 1`` over a greedy partition of ``alive`` into cliques."""
    order = sorted(iter_bits(alive), key=lambda v: ((adj[v] & alive).bit_count(), v))
    free = alive
    bound = 0
    for v in order:
        if not (free >> v) & 1:
            continue
        free &= ~(1 << v)
        cand = adj[v] & free
        size = 1
        while cand:
            best, best_score = -1, -1
            for u in iter_bits(cand):
                score = (adj[u] & cand).bit_count()
                if score > best_score:
                    best, best_score = u, score
            size += 1
            free &= ~(1 << best)
            cand &= adj[best]
        bound += size - 1
    return bound


def _mirrors(adj: Sequence[int], alive: int, v: int) -> int:
    """Vertices ``u`` at distance two from ``v`` such that ``N(v) - N(u)`` is a clique."""
    nb = adj[v] & alive
    second = 0
    for w in iter_bits(nb):
        second |= adj[w]
    second &= alive & ~nb & ~(1 << v)
    found = 0
    for u in iter_bits(second):
        rest = nb & ~adj[u]
        if all(not (rest & ~adj[x] & ~(1 << x)) for x in iter_bits(rest)):
            found |= 1 << u
    return found


class _VcSearch:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.nodes = 0

    def run(self, alive: int, k: int) -> int | None:
        """A cover of the ``alive``-induced graph of size <= k, as a mask."""
        self.nodes += 1
        adj = self.adj
        alive, k, cover = _reduce(adj, alive, k)
        if k < 0:
            return None
        if not alive:
            return cover
        if k == 0:
            return None  # _reduce leaves only vertices with degree >= 1
        degs = {v: (adj[v] & alive).bit_count() for v in iter_bits(alive)}
        max_deg = max(degs.values())
        edges = sum(degs.values()) // 2
        if edges > k * max_deg:
            return None
        if greedy_matching_bound(adj, alive) > k or clique_partition_bound(adj, alive) > k:
            return None

        v = min(degs, key=lambda x: (-degs[x], x))
        take = (1 << v) | _mirrors(adj, alive, v)
        sub = self.run(alive & ~take, k - take.bit_count())
        if sub is not None:
            return cover | take | sub
        nb = adj[v] & alive
        sub = self.run(alive & ~nb & ~(1 << v), k - nb.bit_count())
        if sub is not None:
            return cover | nb | sub
        return None


def vc_decide(G: Graph, k: int) -> SolveResult:
    """Is there a vertex cover of size at most ``k``?"""
    if k < 0:
        raise InputError(f"budget must be nonnegative, got {k}")
    start = time.perf_counter()
    kernel = kernelize_vc(G, k)
    nodes = 0
    certificate = None
    if not kernel.infeasible:
        search = _VcSearch(kernel.graph.masks)
        found = search.run((1 << kernel.graph.n) - 1, kernel.budget)
        nodes = search.nodes
        if found is not None:
            certificate = kernel.lift(set(iter_bits(found)))
            _check_cover(G, certificate, k)
    return SolveResult(
        certificate is not None,
        certificate,
        nodes,
        time.perf_counter() - start,
        {"kernel_vertices": kernel.graph.n, "kernel_budget": kernel.budget},
    )


def _check_cover(G: Graph, cover: frozenset[int], k: int) -> None:
    if len(cover) > k or not is_vertex_cover(G, cover):
        raise AssertionError(f"solver produced an invalid cover of size {len(cover)} for k={k}")


def vc_lower_bound(G: Graph) -> int:
    full = (1 << G.n) - 1
    return max(greedy_matching_bound(G.masks, full), clique_partition_bound(G.masks, full))


def vc_optimum(G: Graph, limit: int = DEFAULT_OPTIMUM_LIMIT) -> tuple[int, frozenset[int]]:
    """Minimum vertex cover by incremental search over :func:`vc_decide`."""
    if G.n > limit:
        raise CapacityError(f"vc_optimum limited to {limit} vertices, graph has {G.n}")
    for k in range(vc_lower_bound(G), G.n + 1):
        result = vc_decide(G, k)
        if result.feasible:
            return len(result.certificate), result.certificate
    raise AssertionError("the full vertex set is always a cover")


def vc_above_h_index(G: Graph, k: int) -> SolveResult:
    """Branch once on the h-index witnesses, then solve each case exactly.

    With ``v1..vh`` the witness vertices (degree >= h): either all of them
    are in the cover (budget ``k - h``), or some ``vi`` is not and its whole
    neighbourhood is (budget ``k - deg(vi) <= k - h``).  Neighbourhoods are
    taken in the input graph.
    """
    if k < 0:
        raise InputError(f"budget must be nonnegative, got {k}")
    start = time.perf_counter()
    h, witness = h_index_witness(G)
    stats = {"h": h, "witness": list(witness), "subcall_budgets": [], "branches": 0}
    nodes = 0

    def finish(cert):
        return SolveResult(cert is not None, cert, nodes, time.perf_counter() - start, stats)

    if h == 0:
        # edgeless: the empty set covers everything
        return finish(frozenset())

    cases: list[frozenset[int]] = [frozenset(witness)]
    cases.extend(G.neighbors(v) for v in witness)
    for taken in cases:
        budget = k - len(taken)
        if budget < 0:
            continue
        stats["branches"] += 1
        stats["subcall_budgets"].append(budget)
        rest, old_ids = delete_vertices(G, taken)
        sub = vc_decide(rest, budget)
        nodes += sub.nodes_explored
        if sub.feasible:
            cert = taken | {old_ids[v] for v in sub.certificate}
            _check_cover(G, cert, k)
            return finish(cert)
    return finish(None)
