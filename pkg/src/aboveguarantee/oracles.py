"""Brute-force ground truth.

Tier 1 is plain subset enumeration in increasing size; the first hit in
``itertools.combinations`` order is the lexicographically smallest optimum.
Tier 2 extends reach for the larger reduction outputs:

* vertex cover: maximum independent set branch and bound (include/exclude
  with a clique-partition bound), deliberately unrelated to the solver in
  :mod:`aboveguarantee.vc`;
* cluster deletion: branching on an induced P3 with a packing lower bound
  over disjoint complete multipartite induced subgraphs (P3 is the
  smallest of these).

Tier-2 answers are exact but their witnesses are not necessarily
lexicographically smallest.  Nothing here imports the solver modules.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import CapacityError, InputError
from .graph import Graph, acyclic_mask, cluster_mask, iter_bits

ENUM_LIMIT = 16
CVD_ENUM_LIMIT = 14
VC_BNB_LIMIT = 40
CVD_BNB_LIMIT = 64
DEFAULT_WORK_BUDGET = int(os.environ.get("ABOVEGUARANTEE_WORK_BUDGET", 10**9))


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: tuple[int, ...]
    tier: str = "enumeration"

    def to_json(self) -> dict:
        return {"value": self.value, "witness": list(self.witness), "tier": self.tier}


def _guard(G: Graph, limit: int, what: str) -> None:
    if G.n > limit:
        raise CapacityError(f"{what} limited to {limit} vertices, graph has {G.n}")


def _smallest_hitting(n: int, candidates: Sequence[int], ok, budget: int | None = None) -> tuple[int, ...]:
    """Smallest subset S of ``candidates`` (increasing size, lexicographic)
    such that ``ok(mask(S))``."""
    spent = 0
    for size in range(len(candidates) + 1):
        if budget is not None:
            spent += max(size, 1) * comb(len(candidates), size)
            if spent > budget:
                raise CapacityError(f"enumeration work budget {budget} exceeded at size {size}")
        for S in combinations(candidates, size):
            mask = 0
            for v in S:
                mask |= 1 << v
            if ok(mask):
                return S
    raise AssertionError("the full candidate set must satisfy the predicate")


def _edges_covered(G: Graph):
    edges = [(1 << u) | (1 << v) for u, v in G.edges()]
    return lambda mask: all(e & mask for e in edges)


# ---------------------------------------------------------------------------
# vertex cover / independent set


def brute_min_vertex_cover(
    G: Graph, tier: str = "auto", enum_limit: int = ENUM_LIMIT, bnb_limit: int = VC_BNB_LIMIT
) -> OracleResult:
    """Exact vc(G).  ``tier`` is ``"enumeration"``, ``"bnb"`` or ``"auto"``."""
    if tier == "auto":
        tier = "enumeration" if G.n <= enum_limit else "bnb"
    if tier == "enumeration":
        _guard(G, enum_limit, "vertex cover enumeration")
        S = _smallest_hitting(G.n, range(G.n), _edges_covered(G))
        return OracleResult(len(S), S)
    if tier == "bnb":
        _guard(G, bnb_limit, "vertex cover branch and bound")
        indep = _max_independent_set_bnb(G.masks, G.n)
        cover = tuple(v for v in range(G.n) if not (indep >> v) & 1)
        return OracleResult(len(cover), cover, "bnb")
    raise InputError(f"unknown oracle tier {tier!r}")


def brute_max_independent_set(G: Graph, enum_limit: int = ENUM_LIMIT) -> OracleResult:
    _guard(G, enum_limit, "independent set enumeration")
    masks = G.masks
    best: tuple[int, ...] = ()
    for size in range(G.n, -1, -1):
        for S in combinations(range(G.n), size):
            mask = 0
            for v in S:
                mask |= 1 << v
            if all(not (masks[v] & mask) for v in S):
                best = S
                break
        else:
            continue
        break
    vc = brute_min_vertex_cover(G, tier="enumeration", enum_limit=enum_limit)
    assert len(best) + vc.value == G.n, "alpha + vc must equal n"
    return OracleResult(len(best), best)


def _max_independent_set_bnb(masks: Sequence[int], n: int) -> int:
    """Maximum independent set as a mask: include/exclude branching on a
    vertex of the first clique of a greedy clique partition, bounded by the
    number of cliques in that partition."""
    best = [0, 0]  # size, mask

    def partition(cand: int) -> list[int]:
        cliques = []
        rest = cand
        while rest:
            low = rest & -rest
            clique = low
            common = masks[low.bit_length() - 1] & rest
            while common:
                pick = common & -common
                clique |= pick
                common &= masks[pick.bit_length() - 1]
            cliques.append(clique)
            rest &= ~clique
        return cliques

    def search(chosen: int, size: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        cliques = partition(cand)
        if size + len(cliques) <= best[0]:
            return
        # branch on the vertex of largest degree inside the largest clique
        big = max(cliques, key=lambda c: (c.bit_count(), -c))
        v = max(iter_bits(big), key=lambda x: ((masks[x] & cand).bit_count(), -x))
        search(chosen | (1 << v), size + 1, cand & ~masks[v] & ~(1 << v))
        search(chosen, size, cand & ~(1 << v))

    search(0, 0, (1 << n) - 1)
    return best[1]


# ---------------------------------------------------------------------------
# feedback vertex set


def brute_min_fvs(G: Graph, enum_limit: int = ENUM_LIMIT) -> OracleResult:
    """Exact fvs(G) by enumeration.  Vertices outside the 2-core are never
    needed in a minimal solution, so only 2-core vertices are enumerated."""
    _guard(G, enum_limit, "feedback vertex set enumeration")
    masks = G.masks
    full = (1 << G.n) - 1
    core = full
    changed = True
    while changed:
        changed = False
        for v in iter_bits(core):
            if (masks[v] & core).bit_count() <= 1:
                core &= ~(1 << v)
                changed = True
    S = _smallest_hitting(G.n, list(iter_bits(core)), lambda m: acyclic_mask(masks, full & ~m))
    return OracleResult(len(S), S)


# ---------------------------------------------------------------------------
# cluster vertex deletion


def brute_cluster_deletion_number(
    G: Graph, tier: str = "auto", enum_limit: int = CVD_ENUM_LIMIT, bnb_limit: int = CVD_BNB_LIMIT
) -> OracleResult:
    if tier == "auto":
        tier = "enumeration" if G.n <= enum_limit else "bnb"
    full = (1 << G.n) - 1
    if tier == "enumeration":
        _guard(G, enum_limit, "cluster deletion enumeration")
        masks = G.masks
        S = _smallest_hitting(G.n, range(G.n), lambda m: cluster_mask(masks, full & ~m))
        return OracleResult(len(S), S)
    if tier == "bnb":
        _guard(G, bnb_limit, "cluster deletion branch and bound")
        deleted = _cvd_bnb(G.masks, G.n)
        return OracleResult(deleted.bit_count(), tuple(iter_bits(deleted)), "bnb")
    raise InputError(f"unknown oracle tier {tier!r}")


def _find_p3(masks: Sequence[int], alive: int, keep: int) -> tuple[int, int, int] | None:
    """An induced P3 ``a - b - c`` (a, c non-adjacent), preferring ones with
    the most permanently kept vertices so forced moves surface first."""
    best = None
    best_score = -1
    for b in iter_bits(alive):
        nb = masks[b] & alive
        if nb.bit_count() < 2:
            continue
        for a in iter_bits(nb):
            far = nb & ~masks[a] & ~(1 << a)
            if not far:
                continue
            c = (far & -far).bit_length() - 1
            score = ((keep >> a) & 1) + ((keep >> b) & 1) + ((keep >> c) & 1)
            if score > best_score:
                best, best_score = (a, b, c), score
                if score >= 2:
                    return best
    return best


def _grow_multipartite(masks: Sequence[int], free: int, seed: int) -> tuple[int, int]:
    """Greedily grow an induced complete multipartite subgraph of ``free``
    around ``seed``; returns ``(members, deletion number)``."""
    parts = [1 << seed]
    members = 1 << seed
    cand = masks[seed] & free  # only neighbours of the seed can ever join
    grew = True
    while grew:
        grew = False
        for x in iter_bits(cand & ~members):
            non = members & ~masks[x]
            if non == 0:
                parts.append(1 << x)
            elif non in parts:
                parts[parts.index(non)] |= 1 << x
            else:
                continue
            members |= 1 << x
            grew = True
        # second-hand vertices: non-neighbours of the seed sharing its part
        for x in iter_bits(free & ~members & ~masks[seed]):
            non = members & ~masks[x]
            if non in parts:
                parts[parts.index(non)] |= 1 << x
                members |= 1 << x
                grew = True
    size = members.bit_count()
    return members, size - max(len(parts), max(p.bit_count() for p in parts))


def _multipartite_packing_bound(masks: Sequence[int], alive: int) -> int:
    """Lower bound from disjoint induced complete multipartite subgraphs.

    For a complete multipartite H with parts P1..Pt, the graph left after
    deleting must be a single clique (one vertex per part) or an independent
    set (inside one part), so cvd(H) = |H| - max(t, max |Pi|).  Deletion
    numbers of disjoint induced subgraphs add up to a lower bound.

    One structure is grown per seed; the most valuable pairwise disjoint
    ones are taken first, then the leftover vertices are packed greedily.
    """
    grown = []
    for seed in iter_bits(alive):
        members, value = _grow_multipartite(masks, alive, seed)
        if value > 0:
            grown.append((-value, members.bit_count(), seed, members))
    grown.sort()
    free = alive
    total = 0
    for neg_value, _, _, members in grown:
        if members & ~free:
            continue
        total -= neg_value
        free &= ~members
    for seed in iter_bits(free):
        if not (free >> seed) & 1:
            continue
        members, value = _grow_multipartite(masks, free, seed)
        if value > 0:
            total += value
            free &= ~members
    return total


def _cvd_bnb(masks: Sequence[int], n: int) -> int:
    """Minimum cluster deletion set (mask) by iterative deepening over the
    3-way P3 branching: delete b; keep b and delete a; keep a, b and delete c."""

    def feasible(alive: int, keep: int, budget: int) -> int | None:
        p3 = _find_p3(masks, alive, keep)
        if p3 is None:
            return 0
        if budget == 0:
            return None
        if _multipartite_packing_bound(masks, alive) > budget:
            return None
        a, b, c = p3
        options = []
        if not (keep >> b) & 1:
            options.append((b, keep))
        if not (keep >> a) & 1:
            options.append((a, keep | (1 << b)))
        if not (keep >> c) & 1:
            options.append((c, keep | (1 << b) | (1 << a)))
        for v, new_keep in options:
            sub = feasible(alive & ~(1 << v), new_keep, budget - 1)
            if sub is not None:
                return sub | (1 << v)
        return None

    full = (1 << n) - 1
    k = _multipartite_packing_bound(masks, full)
    while True:
        found = feasible(full, 0, k)
        if found is not None:
            return found
        k += 1


# ---------------------------------------------------------------------------
# distance to K_r-free


def _all_cliques(masks: Sequence[int], n: int, r: int) -> list[int]:
    out = []

    def extend(clique: int, size: int, cand: int) -> None:
        if size == r:
            out.append(clique)
            return
        while cand:
            low = cand & -cand
            cand ^= low
            extend(clique | low, size + 1, cand & masks[low.bit_length() - 1])

    extend(0, 0, (1 << n) - 1)
    return out


def brute_distance_to_kr_free(G: Graph, r: int, work_budget: int = DEFAULT_WORK_BUDGET) -> OracleResult:
    """Fewest vertices whose removal leaves no K_r.

    Enumeration runs over vertices that lie in some K_r (a minimum deletion
    set never contains any other vertex).  The work guard counts
    ``size * C(candidates, size)`` summed over the sizes tried.
    """
    if r < 3:
        raise InputError(f"clique order must be at least 3, got {r}")
    cliques = _all_cliques(G.masks, G.n, r)
    support = 0
    for q in cliques:
        support |= q
    S = _smallest_hitting(G.n, list(iter_bits(support)), lambda m: all(q & m for q in cliques), work_budget)
    if r == 3 and G.n <= 10:
        assert len(S) <= brute_min_fvs(G).value, "distance to K3-free must not exceed fvs"
    return OracleResult(len(S), S)
