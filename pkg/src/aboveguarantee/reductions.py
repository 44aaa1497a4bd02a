"""Instance generators for the hardness constructions.

Each generator returns a :class:`ReductionArtifact`: the output graph, its
budget, named certificate vertex sets, a label for every output vertex and
the parameter values the construction claims.  The claims are verified
externally (see :mod:`aboveguarantee.verify`), never assumed.

Gadget labels are tuples whose first entry names the vertex family; all
indices inside labels are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any

from .errors import InputError
from .formats import CnfFormula
from .graph import Graph, build_graph, check_vertex_set, complement
from .params import clique_number, degree_profile

Label = tuple[Any, ...]


@dataclass(frozen=True)
class ReductionArtifact:
    name: str
    graph: Graph
    budget: int
    budget_name: str
    certificates: dict[str, frozenset[int]] = field(default_factory=dict)
    gadget_map: tuple[Label, ...] = ()
    claimed_params: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.gadget_map) != self.graph.n:
            raise AssertionError(f"{self.name}: gadget map labels {len(self.gadget_map)} of {self.graph.n} vertices")
        if len(set(self.gadget_map)) != self.graph.n:
            raise AssertionError(f"{self.name}: gadget labels are not unique")
        for key, S in self.certificates.items():
            check_vertex_set(self.graph, S)

    def vertices_labelled(self, family: str) -> frozenset[int]:
        return frozenset(v for v, lab in enumerate(self.gadget_map) if lab[0] == family)

    def sidecar(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "reduction": self.name,
            "n": self.graph.n,
            "m": self.graph.edge_count,
            "budget": self.budget,
            self.budget_name: self.budget,
        }
        for key, value in self.claimed_params.items():
            if out.setdefault(key, value) != value:
                raise AssertionError(f"{self.name}: claimed {key}={value} clashes with {out[key]}")
        out["certificates"] = {k: sorted(v) for k, v in sorted(self.certificates.items())}
        out["gadget_map"] = [list(lab) for lab in self.gadget_map]
        return out


class _Builder:
    """Allocates vertex ids in creation order and records their labels."""

    def __init__(self):
        self.labels: list[Label] = []
        self.index: dict[Label, int] = {}
        self.edges: list[tuple[int, int]] = []

    def add(self, label: Label) -> int:
        v = len(self.labels)
        self.labels.append(label)
        self.index[label] = v
        return v

    def connect(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def clique(self, vs) -> None:
        self.edges.extend(combinations(vs, 2))

    def join(self, xs, ys) -> None:
        self.edges.extend(product(xs, ys))

    def graph(self) -> Graph:
        return build_graph(len(self.labels), self.edges)


# ---------------------------------------------------------------------------
# Clique -> Vertex Cover on the complement


def clique_to_vc_complement(G: Graph, k: int) -> ReductionArtifact:
    """``G`` has a k-clique iff the complement has a vertex cover of size ``n - k``.

    Claimed bounds on the output parameters: ``k̄ - δ(Ḡ) <= Δ(G)`` and
    ``k̄ - ω(Ḡ) <= vc(G)``; the first is recorded with both sides, the second
    with its left side (vc needs an oracle).
    """
    if not 0 <= k <= G.n:
        raise InputError(f"clique size must lie in 0..{G.n}, got {k}")
    H = complement(G)
    k_bar = G.n - k
    claimed = {"k_bar": k_bar}
    if G.n:
        min_deg_bar, _ = degree_profile(H)
        _, max_deg = degree_profile(G)
        claimed.update(
            min_degree_bar=min_deg_bar,
            max_degree=max_deg,
            above_min_degree=k_bar - min_deg_bar,
            clique_number_bar=clique_number(H),
            above_clique_number=k_bar - clique_number(H),
        )
    return ReductionArtifact(
        "clique-complement", H, k_bar, "k_bar",
        gadget_map=tuple(("vertex", v) for v in G.vertices),
        claimed_params=claimed,
    )


# ---------------------------------------------------------------------------
# Vertex Cover -> Feedback Vertex Set by one triangle per edge


def vc_to_fvs_triangles(G: Graph, ell: int) -> ReductionArtifact:
    """Add a vertex ``w_uv`` adjacent to both ends of every edge ``uv``.

    Every edge then lies in its own triangle, so a set is a feedback vertex
    set of the output iff it can be turned into a vertex cover of ``G`` of
    the same size.
    """
    b = _Builder()
    for v in G.vertices:
        b.add(("vertex", v))
    for u, v in G.edges():
        b.connect(u, v)
        w = b.add(("edge", u, v))
        b.connect(u, w)
        b.connect(v, w)
    return ReductionArtifact(
        "vc-fvs-triangle", b.graph(), ell, "ell",
        certificates={"original": frozenset(G.vertices)},
        gadget_map=tuple(b.labels),
        claimed_params={"source_n": G.n, "source_m": G.edge_count},
    )


# ---------------------------------------------------------------------------
# Independent Set -> Vertex Cover above distance to K_r-free


def is_to_vc_above_krfree(G: Graph, k: int, r: int = 3) -> ReductionArtifact:
    """``k`` copies ``V_i`` of the vertex set, each a clique; cross edges
    ``w^i_q w^j_q`` and ``w^i_p w^j_q`` for ``pq ∈ E`` (``i ≠ j``); per copy a
    clique ``A_i`` of ``r - 2`` vertices joined to ``V_i``; ``k + 1`` cliques
    of ``r - 1`` vertices (``B``) joined to every copy; a pendant leaf on
    each vertex of ``A ∪ B``.

    Budget ``ℓ = (n-1)k + |A| + |B|``; ``D = ∪ V_i`` is claimed to be a
    minimum K_r-deletion set of size ``nk``.
    """
    n = G.n
    if k < 1 or r < 3 or n < 1:
        raise InputError(f"need k >= 1, r >= 3 and a nonempty graph (got k={k}, r={r}, n={n})")
    b = _Builder()
    copies = [[b.add(("V", i, j)) for j in range(n)] for i in range(k)]
    for Vi in copies:
        b.clique(Vi)
    for i, j in combinations(range(k), 2):
        for q in range(n):
            b.connect(copies[i][q], copies[j][q])
        for p, q in G.edges():
            b.connect(copies[i][p], copies[j][q])
            b.connect(copies[i][q], copies[j][p])

    A: list[int] = []
    leaves: list[int] = []
    for i in range(k):
        Ai = [b.add(("A", i, t)) for t in range(r - 2)]
        b.clique(Ai)
        b.join(Ai, copies[i])
        for t, a in enumerate(Ai):
            leaf = b.add(("A_leaf", i, t))
            b.connect(a, leaf)
            leaves.append(leaf)
        A.extend(Ai)

    B: list[int] = []
    all_copies = [v for Vi in copies for v in Vi]
    for c in range(k + 1):
        Bc = [b.add(("B", c, t)) for t in range(r - 1)]
        b.clique(Bc)
        b.join(Bc, all_copies)
        for t, x in enumerate(Bc):
            leaf = b.add(("B_leaf", c, t))
            b.connect(x, leaf)
            leaves.append(leaf)
        B.extend(Bc)

    ell = (n - 1) * k + len(A) + len(B)
    if ell != (n - 1) * k + len(leaves):
        raise AssertionError("the two forms of the budget disagree")
    if ell != (n - 1) * k + (r - 2) * k + (r - 1) * (k + 1):
        raise AssertionError("budget does not match the closed form")
    return ReductionArtifact(
        "is-krfree", b.graph(), ell, "ell",
        certificates={
            "D": frozenset(all_copies),
            "L": frozenset(leaves),
            "A": frozenset(A),
            "B": frozenset(B),
        },
        gadget_map=tuple(b.labels),
        claimed_params={
            "source_n": n,
            "k": k,
            "r": r,
            "distance_to_kr_free": n * k,
            "parameter": ell - n * k,
        },
    )


# ---------------------------------------------------------------------------
# 3-SAT -> Vertex Cover with cvd = vc


def _pad_formula(phi: CnfFormula) -> tuple[CnfFormula, int]:
    """Pad to a multiple of three clauses with always-true clauses over x1 (and x2)."""
    if phi.num_vars < 1:
        raise InputError("padding needs at least one variable")
    second = 2 if phi.num_vars >= 2 else 1
    dummy = ((1, True), (1, False), (second, True))
    extra = (-phi.num_clauses) % 3
    return CnfFormula(phi.num_vars, phi.clauses + (dummy,) * extra), extra


def clause_vertex(i: int, r: int, s: int) -> int:
    """Id of clause vertex ``u`` for clause ``i``, side ``r`` (0..2), copy ``s`` (0..6)."""
    return 21 * i + 7 * r + s


def variable_vertex(m: int, j: int, r: int, s: int) -> int:
    """Id of variable vertex ``v`` for variable ``j`` (0-based), side ``r``
    (0 = positive, 1 = negative), copy ``s`` (0..2), in a formula with ``m`` clauses."""
    return 21 * m + 6 * j + 3 * r + s


def clause_side(i: int, r: int) -> frozenset[int]:
    return frozenset(clause_vertex(i, r, s) for s in range(7))


def variable_side(m: int, j: int, r: int) -> frozenset[int]:
    return frozenset(variable_vertex(m, j, r, s) for s in range(3))


def sat3_to_vc_above_cvd(phi: CnfFormula, extended: bool = False) -> ReductionArtifact:
    """Clause gadgets ``K_{7,7,7}``, variable gadgets ``K_{3,3}``.  A clause
    side holding ``x_j`` is joined to the positive side of ``x_j``'s gadget,
    one holding ``¬x_j`` to the negative side; a true ``x_j`` puts the
    positive side in the cover.  Budget ``14m + 3n``.

    With ``extended``, the formula is padded to ``m ≡ 0 (mod 3)`` and
    ``7m/3 + n`` triangles (set ``T``) are joined to every gadget vertex;
    the budget becomes ``21m + 6n`` and the gadget vertices form a cluster
    deletion set of exactly that size.
    """
    padded = 0
    if extended:
        phi, padded = _pad_formula(phi)
    m, n = phi.num_clauses, phi.num_vars
    b = _Builder()
    for i in range(m):
        for r in range(3):
            for s in range(7):
                b.add(("u", i, r, s) if i < m - padded else ("u_dummy", i, r, s))
    for j in range(n):
        for r in range(2):
            for s in range(3):
                b.add(("v", j, r, s))
    for i in range(m):
        for r, r2 in combinations(range(3), 2):
            b.join(clause_side(i, r), clause_side(i, r2))
    for j in range(n):
        b.join(variable_side(m, j, 0), variable_side(m, j, 1))
    for i, clause in enumerate(phi.clauses):
        for r, (var, positive) in enumerate(clause):
            b.join(clause_side(i, r), variable_side(m, var - 1, 0 if positive else 1))

    gadgets = frozenset(range(21 * m + 6 * n))
    base_k = 14 * m + 3 * n
    certificates = {
        "clause_gadgets": frozenset(range(21 * m)),
        "variable_gadgets": gadgets - frozenset(range(21 * m)),
    }
    claimed = {"clauses": m, "n_vars": n, "base_k": base_k, "vc_lower_bound": base_k}
    if not extended:
        return ReductionArtifact(
            "sat-cvd", b.graph(), base_k, "k",
            certificates=certificates, gadget_map=tuple(b.labels), claimed_params=claimed,
        )

    T = []
    for t in range(7 * m // 3 + n):
        tri = [b.add(("T", t, x)) for x in range(3)]
        b.clique(tri)
        b.join(tri, sorted(gadgets))
        T.extend(tri)
    budget = 21 * m + 6 * n
    assert len(T) == 7 * m + 3 * n and budget - len(T) == base_k
    certificates.update(cluster_deletion_set=gadgets, T=frozenset(T))
    # a cover holds all of T or all of V(G); either way it has >= budget vertices
    claimed.update(padded_clauses=padded, T_size=len(T), cvd_upper_bound=budget, vc_lower_bound=budget)
    return ReductionArtifact(
        "sat-cvd-extended", b.graph(), budget, "k",
        certificates=certificates, gadget_map=tuple(b.labels), claimed_params=claimed,
    )


def assignment_cover(phi: CnfFormula, assignment: dict[int, bool] | list[bool]) -> frozenset[int]:
    """The cover built from a satisfying assignment of the base construction:
    two sides of every clause gadget (all but the first satisfied literal's
    side) and the variable side that the assignment's truth value selects."""
    value = assignment.__getitem__ if isinstance(assignment, dict) else (lambda v: assignment[v - 1])
    m = phi.num_clauses
    cover: set[int] = set()
    for i, clause in enumerate(phi.clauses):
        chosen = next((r for r, (var, pos) in enumerate(clause) if value(var) == pos), None)
        if chosen is None:
            raise InputError(f"assignment does not satisfy clause {i}")
        for r in range(3):
            if r != chosen:
                cover |= clause_side(i, r)
    for j in range(phi.num_vars):
        cover |= variable_side(m, j, 0 if value(j + 1) else 1)
    return frozenset(cover)


# ---------------------------------------------------------------------------
# Feedback Vertex Set -> Feedback Vertex Set below vertex cover


def fvs_to_fvs_below_vc(G: Graph, k: int) -> ReductionArtifact:
    """Copy ``G``, hang a leaf ``u_v`` on every vertex and add
    ``λ = n - k - 2`` vertices ``V*`` adjacent to all of ``V(G)``.

    ``fvs(H) <= n - 2`` iff ``fvs(G) <= k``, while ``vc(H) = n`` (the leaf
    edges form a perfect matching of ``V(G)`` and ``V(G)`` covers ``H``).
    """
    n = G.n
    if G.edge_count == 0:
        raise InputError("the source graph must have at least one edge")
    if not 0 <= k <= n - 2:
        raise InputError(f"budget must lie in 0..{n - 2}, got {k}")
    lam = n - k - 2
    b = _Builder()
    for v in G.vertices:
        b.add(("vertex", v))
    for u, v in G.edges():
        b.connect(u, v)
    leaves = []
    for v in G.vertices:
        leaf = b.add(("leaf", v))
        b.connect(v, leaf)
        leaves.append(leaf)
    star = [b.add(("universal", t)) for t in range(lam)]
    b.join(star, range(n))
    return ReductionArtifact(
        "fvs-below-vc", b.graph(), n - 2, "k_prime",
        certificates={
            "leaves": frozenset(leaves),
            "V_star": frozenset(star),
            "vertex_cover": frozenset(range(n)),
        },
        gadget_map=tuple(b.labels),
        claimed_params={"lambda": lam, "vc": n, "ell": 2, "source_k": k},
    )


REDUCTIONS = (
    "clique-complement",
    "vc-fvs-triangle",
    "is-krfree",
    "sat-cvd",
    "sat-cvd-extended",
    "fvs-below-vc",
)
