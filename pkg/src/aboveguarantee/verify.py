"""Randomized, oracle-backed verification suites.

Every instance draws from its own ``random.Random(f"{suite}:{seed}:{index}")``,
so a single failing instance can be replayed with ``--seed`` and ``--index``
without rerunning the rest of the suite.  Some suites also carry fixed
checks that do not depend on the seed; those run once per full suite run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .errors import CapacityError
from .formats import CnfFormula
from .fvs import fvs_above_degeneracy, fvs_decide
from .generators import (
    complete_polarity_formula,
    random_3cnf,
    random_graph,
    random_planar_graph,
    satisfying_assignment,
)
from .graph import (
    Graph,
    delete_vertices,
    grid_graph,
    has_kr,
    is_cluster,
    is_vertex_cover,
)
from .oracles import (
    brute_cluster_deletion_number,
    brute_distance_to_kr_free,
    brute_max_independent_set,
    brute_min_fvs,
    brute_min_vertex_cover,
)
from .params import (
    clique_number,
    degeneracy_core,
    degree_profile,
    h_index_witness,
    treewidth_exact,
)
from .planar import check_planar, vc_above_treewidth_planar
from .reductions import (
    assignment_cover,
    clause_side,
    clique_to_vc_complement,
    fvs_to_fvs_below_vc,
    is_to_vc_above_krfree,
    sat3_to_vc_above_cvd,
    variable_side,
    vc_to_fvs_triangles,
)
from .vc import vc_above_h_index, vc_decide, vc_optimum

EDGE_PROBS = (0.2, 0.5, 0.8)


@dataclass(frozen=True)
class Check:
    check_id: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""
    seed: int | None = None
    index: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"id": self.check_id, "status": self.status, "detail": self.detail}
        if self.index is not None:
            out["seed"] = self.seed
            out["index"] = self.index
        return out


@dataclass
class SuiteReport:
    suite: str
    seed: int
    count: int
    checks: list[Check] = field(default_factory=list)

    def by_status(self, status: str) -> list[Check]:
        return [c for c in self.checks if c.status == status]

    @property
    def ok(self) -> bool:
        return not self.by_status("fail")

    def failures_named(self, name: str) -> list[Check]:
        return [c for c in self.by_status("fail") if c.check_id.rsplit("/", 1)[-1] == name]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "count": self.count,
            "passed": len(self.by_status("pass")),
            "failed": len(self.by_status("fail")),
            "skipped": len(self.by_status("skip")),
            "checks": [c.to_json() for c in self.checks],
        }


# an instance yields (name, ok, detail) triples
Outcome = tuple[str, bool, str]


def _graph_desc(G: Graph) -> str:
    return f"n={G.n} edges={list(G.edges())}"


def _brute_clique_number(G: Graph) -> int:
    """Largest clique by direct subset enumeration on ``G`` itself."""
    for size in range(G.n, 0, -1):
        for S in combinations(range(G.n), size):
            if all(G.has_edge(u, v) for u, v in combinations(S, 2)):
                return size
    return 0


# ---------------------------------------------------------------------------
# exact solvers and the above-guarantee branchings


def _solvers_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    n = rng.randint(1, 12)
    G = random_graph(rng, n, EDGE_PROBS[index % 3])
    desc = _graph_desc(G)
    vc = brute_min_vertex_cover(G).value
    fvs = brute_min_fvs(G).value
    h, _ = h_index_witness(G)
    d = degeneracy_core(G).degeneracy
    planar = bool(check_planar(G))

    bad = {name: [] for name in (
        "vc_decide", "fvs_decide", "vc_above_h_index", "h_budgets",
        "fvs_above_degeneracy", "d_budgets", "d_branch_count", "vc_above_treewidth_planar",
    )}
    for k in range(n + 1):
        plain_vc = vc_decide(G, k).feasible
        if plain_vc != (k >= vc):
            bad["vc_decide"].append(k)
        plain_fvs = fvs_decide(G, k).feasible
        if plain_fvs != (k >= fvs):
            bad["fvs_decide"].append(k)

        res = vc_above_h_index(G, k)
        if res.feasible != plain_vc:
            bad["vc_above_h_index"].append(k)
        if any(b > k - h for b in res.stats["subcall_budgets"]):
            bad["h_budgets"].append(k)

        res = fvs_above_degeneracy(G, k)
        if res.feasible != plain_fvs:
            bad["fvs_above_degeneracy"].append(k)
        if any(b > k - d + 1 for b in res.stats["subcall_budgets"]):
            bad["d_budgets"].append(k)
        if res.stats["branch_count"] > res.stats["branch_bound"]:
            bad["d_branch_count"].append(k)

        if planar:
            res, report = vc_above_treewidth_planar(G, k)
            if res.feasible != plain_vc or (report.rejected and plain_vc):
                bad["vc_above_treewidth_planar"].append(k)

    for name, ks in bad.items():
        if name == "vc_above_treewidth_planar" and not planar:
            continue
        yield name, not ks, f"{desc} vc={vc} fvs={fvs} h={h} d={d} bad_k={ks}"


# ---------------------------------------------------------------------------
# planar lower bound


def _planar_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    n = rng.randint(1, 20)
    G = random_planar_graph(rng, n, rng.uniform(0.5, 1.0))
    desc = _graph_desc(G)
    vc, _ = vc_optimum(G)
    yield "planar", bool(check_planar(G)), desc
    bad_equiv, bad_reject = [], []
    r = None
    for k in range(n + 1):
        res, report = vc_above_treewidth_planar(G, k)
        r = report.vc_lower_bound
        if res.feasible != (k >= vc):
            bad_equiv.append(k)
        if report.rejected and k >= vc:
            bad_reject.append(k)
    yield "r_le_vc", r <= vc, f"{desc} r={r} vc={vc}"
    yield "decision_equivalence", not bad_equiv, f"{desc} vc={vc} bad_k={bad_equiv}"
    yield "rejection_sound", not bad_reject, f"{desc} vc={vc} bad_k={bad_reject}"


def _planar_fixed() -> Iterator[Outcome]:
    for g in range(2, 6):
        G = grid_graph(g, g)
        vc, _ = vc_optimum(G)
        floor_bound = g * (g // 2)
        exact = g * g // 2  # g even: g·g/2; g odd: ⌊g²/2⌋
        yield f"grid{g}", vc >= floor_bound and vc == exact, f"vc={vc} bound={floor_bound}"
        res, report = vc_above_treewidth_planar(G, vc - 1, width_limit=G.n)
        yield f"grid{g}_below_optimum", not res.feasible, str(report.to_json())


# ---------------------------------------------------------------------------
# Clique -> VC on the complement


def _clique_complement_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    n = rng.randint(1, 8)
    G = random_graph(rng, n, rng.choice(EDGE_PROBS))
    k = rng.randint(1, n)  # k = 0 is trivial and the degree bound needs k >= 1
    art = clique_to_vc_complement(G, k)
    H = art.graph
    desc = f"{_graph_desc(G)} k={k}"
    has_clique = _brute_clique_number(G) >= k
    small_cover = brute_min_vertex_cover(H).value <= art.budget
    yield "iff", has_clique == small_cover, f"{desc} clique={has_clique} cover={small_cover}"
    k_bar = art.budget
    min_deg_bar, _ = degree_profile(H)
    _, max_deg = degree_profile(G)
    yield "above_min_degree", k_bar - min_deg_bar <= max_deg, f"{desc} k_bar={k_bar} delta_bar={min_deg_bar} Delta={max_deg}"
    omega_bar = brute_max_independent_set(G).value
    vc_g = brute_min_vertex_cover(G).value
    yield "above_clique_number", k_bar - omega_bar <= vc_g, f"{desc} k_bar={k_bar} omega_bar={omega_bar} vc={vc_g}"
    claims = art.claimed_params
    yield "claimed_params", (
        claims["min_degree_bar"] == min_deg_bar
        and claims["clique_number_bar"] == omega_bar
        and claims["max_degree"] == max_deg
    ), f"{desc} claimed={claims}"


# ---------------------------------------------------------------------------
# VC -> FVS with a triangle per edge


def _triangles_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    n = rng.randint(1, 7)
    G = random_graph(rng, n, rng.choice(EDGE_PROBS))
    ell = rng.randint(0, n)
    art = vc_to_fvs_triangles(G, ell)
    H = art.graph
    desc = f"{_graph_desc(G)} ell={ell}"
    vc = brute_min_vertex_cover(G).value
    fvs = brute_min_fvs(H, enum_limit=H.n).value
    yield "iff", (vc <= ell) == (fvs <= ell), f"{desc} vc={vc} fvs_out={fvs}"
    omega = clique_number(G)
    if omega >= 3:
        yield "clique_number", clique_number(H) == omega, f"{desc} omega={omega}"


# ---------------------------------------------------------------------------
# Independent Set -> VC above distance to K_r-free


def _krfree_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    n = rng.randint(1, 5)
    k = rng.randint(1, 2)
    G = random_graph(rng, n, rng.choice(EDGE_PROBS))
    art = is_to_vc_above_krfree(G, k, 3)
    H = art.graph
    desc = f"{_graph_desc(G)} k={k} out_n={H.n}"
    alpha = brute_max_independent_set(G).value
    vc_out = brute_min_vertex_cover(H, tier="bnb", bnb_limit=max(H.n, 40)).value
    yield "iff", (vc_out <= art.budget) == (alpha >= k), f"{desc} alpha={alpha} vc_out={vc_out} ell={art.budget}"
    yield "solver_agrees", vc_decide(H, art.budget).feasible == (vc_out <= art.budget), desc
    dist = brute_distance_to_kr_free(H, 3).value
    yield "distance_exact", dist == n * k, f"{desc} dist={dist} nk={n * k}"
    D = art.certificates["D"]
    rest, _ = delete_vertices(H, D)
    yield "designated_set", len(D) == n * k and not has_kr(rest, 3), f"{desc} |D|={len(D)}"


# ---------------------------------------------------------------------------
# 3-SAT -> VC with cvd = vc


def _sampled_satisfiable(rng: random.Random) -> tuple[CnfFormula, list[bool]]:
    while True:
        phi = random_3cnf(rng, rng.randint(3, 4), rng.randint(1, 3))
        assignment = satisfying_assignment(phi)
        if assignment is not None:
            return phi, assignment


def _takes_whole_sides(phi: CnfFormula, G: Graph, X: frozenset[int]) -> bool:
    m = phi.num_clauses
    for i in range(m):
        if sum(clause_side(i, r) <= X for r in range(3)) < 2:
            return False
    for j in range(phi.num_vars):
        if not any(variable_side(m, j, r) <= X for r in range(2)):
            return False
    return True


def _sat_gadget_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    phi, assignment = _sampled_satisfiable(rng)
    art = sat3_to_vc_above_cvd(phi)
    G = art.graph
    m, n = phi.num_clauses, phi.num_vars
    target = 14 * m + 3 * n
    desc = f"clauses={phi.to_ints()} n={n}"

    C = assignment_cover(phi, assignment)
    yield "assignment_cover", len(C) == target and is_vertex_cover(G, C), f"{desc} |C|={len(C)} target={target}"
    vc = brute_min_vertex_cover(G, tier="bnb", bnb_limit=G.n).value
    yield "vc_exact", vc == target, f"{desc} vc={vc} target={target}"

    cvd = brute_cluster_deletion_number(G, tier="bnb", bnb_limit=G.n)
    X = frozenset(cvd.witness)
    yield "deletion_set_sides", _takes_whole_sides(phi, G, X), f"{desc} |X|={len(X)}"
    yield "cvd_eq_vc", is_vertex_cover(G, X) and len(X) == vc, f"{desc} cvd={len(X)} vc={vc}"

    # duplicate literals allowed: only the end-to-end equivalence is claimed
    dup = random_3cnf(rng, rng.randint(1, 3), rng.randint(1, 4), distinct=False)
    art = sat3_to_vc_above_cvd(dup)
    sat = satisfying_assignment(dup) is not None
    yield "end_to_end", vc_decide(art.graph, art.budget).feasible == sat, f"clauses={dup.to_ints()} sat={sat}"


def _sat_gadget_fixed() -> Iterator[Outcome]:
    unsat = sat3_to_vc_above_cvd(complete_polarity_formula())
    res = vc_decide(unsat.graph, unsat.budget)
    yield "unsat_polarity", not res.feasible and unsat.graph.n == 186 and unsat.budget == 121, (
        f"n={unsat.graph.n} k={unsat.budget} nodes={res.nodes_explored} time={res.wall_time:.2f}s"
    )

    one = sat3_to_vc_above_cvd(CnfFormula.from_ints(3, [[1, 2, 3]]))
    cvd = brute_cluster_deletion_number(one.graph, tier="bnb", bnb_limit=one.graph.n).value
    vc = brute_min_vertex_cover(one.graph, tier="bnb", bnb_limit=one.graph.n).value
    yield "cvd_eq_vc_single_clause", cvd == vc == 23, f"cvd={cvd} vc={vc}"

    phi = CnfFormula.from_ints(3, [[1, 2, 3]] * 3)
    ext = sat3_to_vc_above_cvd(phi, extended=True)
    H = ext.graph
    rest, _ = delete_vertices(H, ext.certificates["cluster_deletion_set"])
    yield "extended_cluster_set", is_cluster(rest) and len(ext.certificates["cluster_deletion_set"]) == 81, f"n={H.n}"
    yield "extended_feasible", H.n == 111 and vc_decide(H, ext.budget).feasible, f"k={ext.budget}"
    ext_unsat = sat3_to_vc_above_cvd(complete_polarity_formula(), extended=True)
    yield "extended_unsat", not vc_decide(ext_unsat.graph, ext_unsat.budget).feasible, f"n={ext_unsat.graph.n}"


# ---------------------------------------------------------------------------
# FVS -> FVS below vertex cover


def _below_vc_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    while True:
        n = rng.randint(2, 7)
        G = random_graph(rng, n, rng.choice(EDGE_PROBS))
        if G.edge_count:
            break
    k = rng.randint(0, n - 2)
    art = fvs_to_fvs_below_vc(G, k)
    H = art.graph
    desc = f"{_graph_desc(G)} k={k} out_n={H.n}"
    fvs_g = brute_min_fvs(G).value
    fvs_h = brute_min_fvs(H, enum_limit=H.n).value
    yield "iff", (fvs_h <= n - 2) == (fvs_g <= k), f"{desc} fvs={fvs_g} fvs_out={fvs_h}"
    vc_h = brute_min_vertex_cover(H, enum_limit=H.n).value
    yield "vc_exact", vc_h == n, f"{desc} vc_out={vc_h}"


# ---------------------------------------------------------------------------
# parameter hierarchy


def _hierarchy_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    n = rng.randint(1, 10)
    G = random_graph(rng, n, EDGE_PROBS[index % 3])
    h, _ = h_index_witness(G)
    d = degeneracy_core(G).degeneracy
    delta, _ = degree_profile(G)
    omega = clique_number(G)
    dist3 = brute_distance_to_kr_free(G, 3).value
    fvs = brute_min_fvs(G).value
    vc = brute_min_vertex_cover(G).value
    cvd = brute_cluster_deletion_number(G).value
    tw = treewidth_exact(G)
    desc = f"{_graph_desc(G)} h={h} d={d} delta={delta} omega={omega} dist3={dist3} fvs={fvs} vc={vc} cvd={cvd} tw={tw}"
    yield "d_le_h", d <= h, desc
    yield "omega_le_d_plus_1", omega - 1 <= d, desc
    yield "delta_le_d", delta <= d, desc
    yield "dist3_le_fvs", dist3 <= fvs, desc
    yield "fvs_le_vc", fvs <= vc, desc
    yield "h_le_vc", h <= vc, desc
    yield "cvd_le_vc", cvd <= vc, desc
    yield "tw_le_fvs_plus_1", tw <= fvs + 1, desc
    yield "d_le_tw", d <= tw, desc


# ---------------------------------------------------------------------------
# tier-2 oracles against enumeration


def _oracles_instance(rng: random.Random, index: int) -> Iterator[Outcome]:
    n = rng.randint(1, 12)
    G = random_graph(rng, n, EDGE_PROBS[index % 3])
    desc = _graph_desc(G)
    enum = brute_min_vertex_cover(G, tier="enumeration")
    bnb = brute_min_vertex_cover(G, tier="bnb")
    yield "vc_tier2", bnb.value == enum.value and is_vertex_cover(G, bnb.witness), f"{desc} enum={enum.value} bnb={bnb.value}"
    enum = brute_cluster_deletion_number(G, tier="enumeration")
    bnb = brute_cluster_deletion_number(G, tier="bnb")
    rest, _ = delete_vertices(G, bnb.witness)
    yield "cvd_tier2", bnb.value == enum.value and is_cluster(rest), f"{desc} enum={enum.value} bnb={bnb.value}"


@dataclass(frozen=True)
class Suite:
    instance: Callable[[random.Random, int], Iterable[Outcome]]
    default_count: int
    fixed: Callable[[], Iterable[Outcome]] | None = None


SUITES: dict[str, Suite] = {
    "solvers": Suite(_solvers_instance, 500),
    "planar": Suite(_planar_instance, 200, _planar_fixed),
    "thm5": Suite(_clique_complement_instance, 100),
    "cor6": Suite(_triangles_instance, 100),
    "thm7": Suite(_krfree_instance, 30),
    "construction1": Suite(_sat_gadget_instance, 50, _sat_gadget_fixed),
    "thm9": Suite(_below_vc_instance, 100),
    "hierarchy": Suite(_hierarchy_instance, 500),
    "oracles": Suite(_oracles_instance, 1000),
}


def _collect(prefix: str, outcomes: Iterable[Outcome], seed: int | None, index: int | None) -> list[Check]:
    checks = []
    try:
        for name, ok, detail in outcomes:
            checks.append(Check(f"{prefix}/{name}", "pass" if ok else "fail", detail, seed, index))
    except CapacityError as exc:
        # a capacity limit is never a pass
        checks.append(Check(f"{prefix}/capacity", "skip", str(exc), seed, index))
    return checks


def run_suite(
    name: str,
    seed: int = 0,
    count: int | None = None,
    index: int | None = None,
    include_fixed: bool = True,
) -> SuiteReport:
    """Run ``count`` instances (or only ``index``) of the named suite."""
    suite = SUITES[name]
    if count is None:
        count = suite.default_count
    indices = [index] if index is not None else range(count)
    report = SuiteReport(name, seed, count)
    for i in indices:
        rng = random.Random(f"{name}:{seed}:{i}")
        report.checks.extend(_collect(f"{name}/{i:04d}", suite.instance(rng, i), seed, i))
    if suite.fixed is not None and include_fixed and index is None:
        report.checks.extend(_collect(f"{name}/fixed", suite.fixed(), None, None))
    report.checks.sort(key=lambda c: c.check_id)
    return report
