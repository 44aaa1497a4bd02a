"""Vertex Cover above treewidth on planar graphs.

A planar graph of branchwidth ``β`` has a grid minor of side
``g >= (β + 3) / 6`` and every vertex cover of a ``g × g`` grid has at least
``g·⌊g/2⌋`` vertices, which gives ``vc(G) >= (β² - 9) / 72``.  Instances
with ``k`` below that bound are rejected outright; everything else goes to
the exact solver.

Branchwidth itself is not computed.  Exact treewidth is, and
``β >= 2(tw + 1) / 3`` turns it into a valid branchwidth lower bound, which
keeps the rejection sound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import networkx as nx

from .errors import InputError
from .graph import Graph
from .params import DEFAULT_TREEWIDTH_LIMIT, treewidth_exact
from .result import SolveResult
from .vc import vc_decide


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    # clockwise rotation system per vertex when planar
    embedding: dict[int, list[int]] | None
    # edges of a Kuratowski subgraph (subdivided K5 or K3,3) when not planar
    kuratowski_edges: list[tuple[int, int]] | None

    def __bool__(self) -> bool:
        return self.planar


@dataclass(frozen=True)
class WidthBoundReport:
    width_kind: str
    width_value: int
    branchwidth_lower_bound: int
    vc_lower_bound: int
    rejected: bool
    ell: int

    def to_json(self) -> dict:
        return {
            "width": {"kind": self.width_kind, "value": self.width_value},
            "beta_lb": self.branchwidth_lower_bound,
            "r": self.vc_lower_bound,
            "rejected": self.rejected,
            "ell": self.ell,
        }


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges())
    return H


def check_planar(G: Graph) -> PlanarityResult:
    planar, cert = nx.check_planarity(to_networkx(G), counterexample=True)
    if planar:
        return PlanarityResult(True, {v: list(cert.neighbors_cw_order(v)) for v in cert}, None)
    return PlanarityResult(False, None, sorted(tuple(sorted(e)) for e in cert.edges()))


def grid_vc_lower_bound(beta: int) -> int:
    """``max(0, ⌊(β² - 9) / 72⌋)``."""
    if beta < 0:
        raise InputError(f"branchwidth must be nonnegative, got {beta}")
    return max(0, (beta * beta - 9) // 72)


def branchwidth_lower_bound(tw: int) -> int:
    """Smallest integer ``β`` with ``tw + 1 <= 3β/2``."""
    return -(-2 * (tw + 1) // 3)


def vc_above_treewidth_planar(
    G: Graph, k: int, width_limit: int = DEFAULT_TREEWIDTH_LIMIT
) -> tuple[SolveResult, WidthBoundReport]:
    if k < 0:
        raise InputError(f"budget must be nonnegative, got {k}")
    start = time.perf_counter()
    if not check_planar(G):
        raise InputError("vertex cover above treewidth is only defined here for planar graphs")
    tw = treewidth_exact(G, limit=width_limit)
    beta = branchwidth_lower_bound(tw)
    r = grid_vc_lower_bound(beta)
    report = WidthBoundReport("treewidth", tw, beta, r, k < r, k - tw)
    if report.rejected:
        result = SolveResult(False, None, 0, time.perf_counter() - start)
    else:
        result = vc_decide(G, k)
        result.wall_time = time.perf_counter() - start
    result.stats.update(report.to_json())
    return result, report
