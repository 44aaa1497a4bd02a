"""Immutable simple undirected graphs and the predicates the solvers rely on.

Vertices are dense integers ``0..n-1``.  Every graph keeps two views of its
adjacency: ``frozenset`` neighbourhoods for readable code and integer bitmasks
(``masks``) for the inner loops of the search algorithms.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InputError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Undirected loopless graph without parallel edges.

    Instances are immutable; deletion and contraction produce new graphs.
    """

    __slots__ = ("n", "_adj", "_masks", "edge_count")

    def __init__(self, n: int, masks: Sequence[int]):
        # Trusted constructor: callers guarantee symmetry and no loops.
        self.n = n
        self._masks = tuple(masks)
        self._adj = tuple(frozenset(iter_bits(m)) for m in self._masks)
        self.edge_count = sum(m.bit_count() for m in self._masks) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks)

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; repeated pairs collapse, loops are rejected."""
    return Graph.from_edges(n, edges)


def check_vertex_set(G: Graph, S: Iterable[int]) -> frozenset[int]:
    members = frozenset(S)
    for v in members:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise InputError(f"vertex {v!r} is not a vertex of a graph with n={G.n}")
    return members


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, [full & ~m & ~(1 << v) for v, m in enumerate(G.masks)])


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[S]`` together with ``old_ids`` where ``old_ids[new] = old``.

    New ids follow the increasing order of the old ids.
    """
    old_ids = tuple(sorted(check_vertex_set(G, S)))
    new_id = {old: new for new, old in enumerate(old_ids)}
    masks = []
    for old in old_ids:
        m = 0
        for w in G.neighbors(old):
            if w in new_id:
                m |= 1 << new_id[w]
        masks.append(m)
    return Graph(len(old_ids), masks), old_ids


def delete_vertices(G: Graph, X: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G - X`` with the same id remap convention as :func:`induced_subgraph`."""
    X = check_vertex_set(G, X)
    return induced_subgraph(G, [v for v in G.vertices if v not in X])


def disjoint_union(*graphs: Graph) -> Graph:
    masks: list[int] = []
    offset = 0
    for H in graphs:
        masks.extend(m << offset for m in H.masks)
        offset += H.n
    return Graph(offset, masks)


# ---------------------------------------------------------------------------
# predicates (mask level first, Graph wrappers below)


def components_mask(masks: Sequence[int], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``."""
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= masks[v]
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def acyclic_mask(masks: Sequence[int], alive: int) -> bool:
    """True iff the subgraph induced by ``alive`` is a forest."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent.get(x, x)
        return root

    for u in iter_bits(alive):
        for v in iter_bits(masks[u] & alive & ((1 << u) - 1)):
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def cluster_mask(masks: Sequence[int], alive: int) -> bool:
    """True iff every component of the ``alive``-induced subgraph is a clique."""
    for u in iter_bits(alive):
        closed_u = (masks[u] | (1 << u)) & alive
        for v in iter_bits(masks[u] & alive):
            if (masks[v] | (1 << v)) & alive != closed_u:
                return False
    return True


def find_clique_mask(masks: Sequence[int], alive: int, r: int) -> int:
    """Bitmask of some r-clique inside ``alive``, or 0 if there is none."""
    if r <= 0:
        return 0

    def extend(clique: int, size: int, cand: int) -> int:
        if size == r:
            return clique
        if cand.bit_count() < r - size:
            return 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = extend(clique | low, size + 1, cand & masks[v])
            if found:
                return found
        return 0

    return extend(0, 0, alive)


def is_acyclic(G: Graph) -> bool:
    return acyclic_mask(G.masks, (1 << G.n) - 1)


def is_cluster(G: Graph) -> bool:
    return cluster_mask(G.masks, (1 << G.n) - 1)


def has_kr(G: Graph, r: int) -> bool:
    """True iff ``G`` contains a clique on ``r`` vertices."""
    if r < 1:
        raise InputError(f"clique order must be positive, got {r}")
    return find_clique_mask(G.masks, (1 << G.n) - 1, r) != 0


def is_vertex_cover(G: Graph, S: Iterable[int]) -> bool:
    S = set(S)
    return all(u in S or v in S for u, v in G.edges())


def is_feedback_vertex_set(G: Graph, S: Iterable[int]) -> bool:
    return acyclic_mask(G.masks, ((1 << G.n) - 1) & ~to_mask(S))


def is_independent_set(G: Graph, S: Iterable[int]) -> bool:
    return all(not G.has_edge(u, v) for u, v in combinations(sorted(set(S)), 2))


# ---------------------------------------------------------------------------
# named small graphs used by tests, docs and the CLI


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
