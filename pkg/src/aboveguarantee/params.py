"""Structural graph parameters used as lower-bound guarantees.

h-index, degeneracy with a core, degree extremes, clique number and exact
treewidth.  All functions are pure in the input graph.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import CapacityError, InputError
from .graph import Graph, components_mask, iter_bits

DEFAULT_CLIQUE_LIMIT = 128
DEFAULT_TREEWIDTH_LIMIT = 24


def h_index_witness(G: Graph) -> tuple[int, list[int]]:
    """Return ``(h, [v1..vh])``: the h highest-degree vertices, ties by lower id."""
    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    h = 0
    while h < len(order) and G.degree(order[h]) >= h + 1:
        h += 1
    return h, order[:h]


def h_index(G: Graph) -> int:
    return h_index_witness(G)[0]


@dataclass(frozen=True)
class CoreDecomposition:
    degeneracy: int
    core: frozenset[int]
    elimination_order: tuple[int, ...]
    # degree of each vertex at the moment it was removed, aligned with the order
    removal_degrees: tuple[int, ...]


def degeneracy_core(G: Graph) -> CoreDecomposition:
    """Repeatedly remove a minimum-degree vertex (lowest id on ties).

    The core is the set of vertices still present when the first vertex of
    degree ``d`` is removed, so its induced minimum degree is exactly ``d``.
    """
    deg = G.degrees()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * G.n
    order: list[int] = []
    at_removal: list[int] = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        at_removal.append(d)
        for w in G.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    d = max(at_removal, default=0)
    first = at_removal.index(d) if at_removal else 0
    return CoreDecomposition(d, frozenset(order[first:]), tuple(order), tuple(at_removal))


def degeneracy(G: Graph) -> int:
    return degeneracy_core(G).degeneracy


def degree_profile(G: Graph) -> tuple[int, int]:
    """``(min degree, max degree)``."""
    if G.n == 0:
        raise InputError("degree profile of the empty graph is undefined")
    degs = G.degrees()
    return min(degs), max(degs)


# ---------------------------------------------------------------------------
# clique number: branch and bound with a greedy colouring bound


def max_clique(G: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> list[int]:
    """A maximum clique of ``G`` (sorted vertex list)."""
    if G.n > limit:
        raise CapacityError(f"clique search limited to {limit} vertices, graph has {G.n}")
    masks = G.masks
    # Highest degree first; the colouring below visits candidates in this order.
    rank = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    best = [0, 0]  # size, mask

    def colour_order(cand: int) -> list[tuple[int, int]]:
        """Greedy sequential colouring; returns (vertex, colour) by colour."""
        out = []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            for v in rank:
                if (avail >> v) & 1:
                    out.append((v, colour))
                    uncoloured &= ~(1 << v)
                    avail &= ~masks[v] & ~(1 << v)
                    if not avail:
                        break
        return out

    def expand(clique: int, size: int, cand: int) -> None:
        coloured = colour_order(cand)
        for v, colour in reversed(coloured):
            if size + colour <= best[0]:
                return
            new_clique = clique | (1 << v)
            new_cand = cand & masks[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, new_clique
            cand &= ~(1 << v)

    if G.n:
        expand(0, 0, (1 << G.n) - 1)
    return list(iter_bits(best[1]))


def clique_number(G: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> int:
    return len(max_clique(G, limit))


# ---------------------------------------------------------------------------
# treewidth: memoised search over elimination sets


def _min_fill_order(masks: list[int], alive: int) -> tuple[int, list[int]]:
    """Upper bound from the min-fill heuristic: (width, order)."""
    adj = list(masks)
    width = 0
    order = []
    while alive:
        best_v, best_fill = -1, None
        for v in iter_bits(alive):
            nb = adj[v] & alive
            fill = 0
            for u in iter_bits(nb):
                fill += (nb & ~adj[u] & ~(1 << u)).bit_count()
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
                if fill == 0:
                    break
        v = best_v
        nb = adj[v] & alive
        width = max(width, nb.bit_count())
        for u in iter_bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
        order.append(v)
    return width, order


def _minor_min_width(masks: Sequence[int], alive: int) -> int:
    """Lower bound: contract a min-degree vertex into its min-degree neighbour."""
    adj = [m & alive for m in masks]
    lb = 0
    while alive:
        v = min(iter_bits(alive), key=lambda x: (adj[x].bit_count(), x))
        nb = adj[v]
        dv = nb.bit_count()
        lb = max(lb, dv)
        if dv == 0:
            alive &= ~(1 << v)
            continue
        u = min(iter_bits(nb), key=lambda x: (adj[x].bit_count(), x))
        # contract v into u
        merged = (adj[u] | nb) & ~(1 << u) & ~(1 << v)
        for w in iter_bits(nb):
            adj[w] &= ~(1 << v)
        for w in iter_bits(merged):
            adj[w] |= 1 << u
        adj[u] = merged
        adj[v] = 0
        alive &= ~(1 << v)
    return lb


def _treewidth_at_most(masks: Sequence[int], alive: int, k: int, budget: list[int]) -> bool:
    """Decide whether the graph induced by ``alive`` has treewidth <= k."""
    failed: set[int] = set()

    def search(adj: list[int], rest: int) -> bool:
        if rest.bit_count() <= k + 1:
            return True
        if rest in failed:
            return False
        budget[0] -= 1
        if budget[0] < 0:
            raise CapacityError("treewidth search exceeded its work budget")
        adj = list(adj)
        # Safe reductions: simplicial and almost simplicial vertices of degree <= k.
        changed = True
        while changed:
            changed = False
            for v in iter_bits(rest):
                nb = adj[v] & rest
                d = nb.bit_count()
                if d > k:
                    continue
                missing = [u for u in iter_bits(nb) if nb & ~adj[u] & ~(1 << u)]
                if len(missing) > 1 and not _almost_clique(adj, nb, missing):
                    continue
                for u in iter_bits(nb):
                    adj[u] |= nb & ~(1 << u)
                rest &= ~(1 << v)
                changed = True
                if rest.bit_count() <= k + 1:
                    return True
        if rest in failed:
            return False
        if _minor_min_width(adj, rest) > k:
            failed.add(rest)
            return False
        for v in iter_bits(rest):
            nb = adj[v] & rest
            if nb.bit_count() > k:
                continue
            child = list(adj)
            for u in iter_bits(nb):
                child[u] |= nb & ~(1 << u)
            if search(child, rest & ~(1 << v)):
                return True
        failed.add(rest)
        return False

    return search(list(masks), alive)


def _almost_clique(adj: list[int], nb: int, missing: list[int]) -> bool:
    # nb minus one vertex is a clique iff some single vertex accounts for all
    # missing adjacencies.
    for w in missing:
        rest = nb & ~(1 << w)
        if all(not (rest & ~adj[u] & ~(1 << u)) for u in iter_bits(rest)):
            return True
    return False


def treewidth_exact(
    G: Graph, limit: int = DEFAULT_TREEWIDTH_LIMIT, work_budget: int = 5_000_000
) -> int:
    """Exact treewidth by memoised elimination-set search, per component.

    ``limit`` caps the vertex count; ``work_budget`` caps visited search states.
    The empty graph has treewidth 0 by convention here.
    """
    if G.n > limit:
        raise CapacityError(f"exact treewidth limited to {limit} vertices, graph has {G.n}")
    masks = list(G.masks)
    tw = 0
    budget = [work_budget]
    for comp in components_mask(masks, (1 << G.n) - 1):
        if comp.bit_count() <= tw + 1:
            continue
        ub, _ = _min_fill_order(masks, comp)
        lb = max(tw, _minor_min_width(masks, comp))
        k = lb
        while k < ub and not _treewidth_at_most(masks, comp, k, budget):
            k += 1
        tw = max(tw, k)
    return tw


def treewidth_upper_bound(G: Graph) -> tuple[int, list[int]]:
    """Min-fill heuristic width and its elimination order."""
    return _min_fill_order(list(G.masks), (1 << G.n) - 1)
