"""Exact Vertex Cover and Feedback Vertex Set solvers parameterized above
structural guarantees, hardness-reduction generators and brute-force oracles."""

__version__ = "0.1.0"

from .errors import CapacityError, InputError, ParseError
from .formats import CnfFormula, parse_cnf, parse_graph
from .fvs import fvs_above_degeneracy, fvs_decide
from .graph import Graph, build_graph
from .params import (
    clique_number,
    degeneracy,
    degeneracy_core,
    h_index,
    treewidth_exact,
)
from .planar import check_planar, vc_above_treewidth_planar
from .result import SolveResult
from .vc import vc_above_h_index, vc_decide, vc_optimum

__all__ = [
    "CapacityError",
    "CnfFormula",
    "Graph",
    "InputError",
    "ParseError",
    "SolveResult",
    "build_graph",
    "check_planar",
    "clique_number",
    "degeneracy",
    "degeneracy_core",
    "fvs_above_degeneracy",
    "fvs_decide",
    "h_index",
    "parse_cnf",
    "parse_graph",
    "treewidth_exact",
    "vc_above_h_index",
    "vc_above_treewidth_planar",
    "vc_decide",
    "vc_optimum",
]
