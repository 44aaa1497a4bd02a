"""Seeded random instances: Erdős–Rényi graphs, planar graphs, 3-CNF formulas."""

from __future__ import annotations

import random
from itertools import combinations, product

from scipy.spatial import Delaunay

from .formats import CnfFormula
from .graph import Graph, build_graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_planar_graph(rng: random.Random, n: int, keep: float = 0.8) -> Graph:
    """Delaunay triangulation of random points, each edge kept with prob ``keep``."""
    if n <= 4:
        # every graph on at most four vertices is planar
        return random_graph(rng, n, keep)
    pts = [[rng.random(), rng.random()] for _ in range(n)]
    tri = Delaunay(pts, qhull_options="QJ")
    edges = set()
    for simplex in tri.simplices:
        for u, v in combinations(sorted(int(x) for x in simplex), 2):
            edges.add((u, v))
    return build_graph(n, [e for e in sorted(edges) if rng.random() < keep])


def random_3cnf(rng: random.Random, n: int, m: int, distinct: bool = True) -> CnfFormula:
    """``m`` clauses over ``n`` variables; ``distinct`` forbids repeated variables in a clause."""
    clauses = []
    for _ in range(m):
        if distinct:
            vars_ = rng.sample(range(1, n + 1), 3)
        else:
            vars_ = [rng.randint(1, n) for _ in range(3)]
        clauses.append(tuple((v, rng.random() < 0.5) for v in vars_))
    return CnfFormula(n, tuple(clauses))


def satisfying_assignment(phi: CnfFormula) -> list[bool] | None:
    """First satisfying assignment in lexicographic order (False < True), or None."""
    for bits in product((False, True), repeat=phi.num_vars):
        if phi.evaluate(list(bits)):
            return list(bits)
    return None


def complete_polarity_formula() -> CnfFormula:
    """All eight sign patterns over x1, x2, x3: unsatisfiable, 8 clauses."""
    return CnfFormula.from_ints(
        3, [[a, 2 * b, 3 * c] for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    )
