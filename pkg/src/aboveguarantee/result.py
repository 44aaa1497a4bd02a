from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class SolveResult:
    """Outcome of a decision query ``(G, k)``.

    ``certificate`` is present exactly when ``feasible`` is true and is always
    expressed in the vertex ids of the graph the caller passed in.
    ``stats`` carries solver instrumentation (subcall budgets, guarantee
    values, branch counts).
    """

    feasible: bool
    certificate: frozenset[int] | None
    nodes_explored: int = 0
    wall_time: float = 0.0
    stats: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.feasible != (self.certificate is not None):
            raise ValueError("certificate must be present iff the instance is feasible")

    def to_json(self) -> dict[str, Any]:
        return {
            "feasible": self.feasible,
            "certificate": sorted(self.certificate) if self.certificate is not None else None,
            "nodes": self.nodes_explored,
            "time_ms": round(self.wall_time * 1000, 3),
        }
