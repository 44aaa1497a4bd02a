"""Text formats: DIMACS graphs, plain edge lists and DIMACS CNF.

DIMACS files are 1-indexed; everything is converted to 0-based ids here and
nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, ParseError
from .graph import Graph, build_graph

Literal = tuple[int, bool]  # (variable id 1..n, positive?)


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula; each clause is a triple of ``(variable, positive)``."""

    num_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        for i, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise InputError(f"clause {i} has {len(clause)} literals, expected 3")
            for var, _ in clause:
                if not 1 <= var <= self.num_vars:
                    raise InputError(f"clause {i} uses variable {var} outside 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
        """Build from DIMACS-style signed integers, e.g. ``[[1, -2, 3]]``."""
        triples = []
        for clause in clauses:
            lits = tuple((abs(x), x > 0) for x in clause)
            if any(x == 0 for x in clause):
                raise InputError("literal 0 is not a variable")
            triples.append(lits)
        return cls(num_vars, tuple(triples))

    def to_ints(self) -> list[list[int]]:
        return [[v if pos else -v for v, pos in c] for c in self.clauses]

    def evaluate(self, assignment: dict[int, bool] | list[bool]) -> bool:
        """``assignment`` maps variable id to truth value (a list is indexed by id - 1)."""
        if isinstance(assignment, dict):
            value = assignment.__getitem__
        else:
            value = lambda v: assignment[v - 1]  # noqa: E731
        return all(any(value(v) == pos for v, pos in c) for c in self.clauses)

    def has_distinct_variables(self) -> bool:
        return all(len({v for v, _ in c}) == 3 for c in self.clauses)


def _content_lines(text: str, comments: tuple[str, ...] = ("c", "#", "%")):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comments):
            continue
        yield lineno, line.split()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    """Parse a DIMACS graph (``p edge n m`` / ``e u v``) or a plain edge list.

    The format is DIMACS when the first content line starts with ``p`` or
    ``e``; otherwise the first line is ``n m`` followed by 0-indexed pairs.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input")
    if lines[0][1][0] in ("p", "e"):
        return _parse_dimacs_graph(lines)
    return _parse_edge_list(lines)


def _parse_dimacs_graph(lines) -> Graph:
    lineno, tokens = lines[0]
    if tokens[0] != "p":
        raise ParseError("missing 'p edge <n> <m>' header before edges", lineno)
    if len(tokens) != 4 or tokens[1] not in ("edge", "edges", "col"):
        raise ParseError("malformed header, expected 'p edge <n> <m>'", lineno)
    n = _int(tokens[2], lineno)
    _int(tokens[3], lineno)
    if n < 0:
        raise ParseError("negative vertex count", lineno)
    edges = []
    for lineno, tokens in lines[1:]:
        if tokens[0] == "p":
            raise ParseError("duplicate header", lineno)
        if tokens[0] != "e" or len(tokens) != 3:
            raise ParseError("expected 'e <u> <v>'", lineno)
        u, v = _int(tokens[1], lineno), _int(tokens[2], lineno)
        edges.append(_checked_edge(u - 1, v - 1, n, lineno, one_based=True))
    return build_graph(n, edges)


def _parse_edge_list(lines) -> Graph:
    lineno, tokens = lines[0]
    if len(tokens) != 2:
        raise ParseError("expected edge-list header '<n> <m>'", lineno)
    n, m = _int(tokens[0], lineno), _int(tokens[1], lineno)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(lines) - 1}", lineno)
    edges = []
    for lineno, tokens in lines[1:]:
        if len(tokens) != 2:
            raise ParseError("expected '<u> <v>'", lineno)
        u, v = _int(tokens[0], lineno), _int(tokens[1], lineno)
        edges.append(_checked_edge(u, v, n, lineno, one_based=False))
    return build_graph(n, edges)


def _checked_edge(u: int, v: int, n: int, lineno: int, one_based: bool) -> tuple[int, int]:
    shift = 1 if one_based else 0
    for x in (u, v):
        if not 0 <= x < n:
            raise ParseError(f"vertex {x + shift} out of range", lineno)
    if u == v:
        raise ParseError(f"self-loop at vertex {u + shift}", lineno)
    return u, v


def parse_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF; every clause must have exactly three literals."""
    lines = list(_content_lines(text, ("c",)))
    if not lines or lines[0][1][0] != "p":
        raise ParseError("missing 'p cnf <n> <m>' header", lines[0][0] if lines else None)
    lineno, tokens = lines[0]
    if len(tokens) != 4 or tokens[1] != "cnf":
        raise ParseError("malformed header, expected 'p cnf <n> <m>'", lineno)
    n, m = _int(tokens[2], lineno), _int(tokens[3], lineno)
    clauses: list[tuple[Literal, ...]] = []
    pending: list[Literal] = []
    start = None
    for lineno, tokens in lines[1:]:
        if tokens[0] == "%":  # SATLIB end marker
            break
        for tok in tokens:
            x = _int(tok, lineno)
            if start is None:
                start = lineno
            if x == 0:
                if len(pending) != 3:
                    raise InputError(
                        f"line {start}: clause has {len(pending)} literals, expected 3"
                    )
                clauses.append(tuple(pending))
                pending, start = [], None
                continue
            if abs(x) > n:
                raise ParseError(f"literal {x} outside variables 1..{n}", lineno)
            pending.append((abs(x), x > 0))
    if pending:
        raise ParseError("last clause is not terminated by 0", start)
    if len(clauses) != m:
        raise ParseError(f"header declares {m} clauses, found {len(clauses)}", lines[0][0])
    return CnfFormula(n, tuple(clauses))


def format_dimacs(G: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p edge {G.n} {G.edge_count}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(out) + "\n"


def format_cnf(phi: CnfFormula) -> str:
    out = [f"p cnf {phi.num_vars} {phi.num_clauses}"]
    out.extend(" ".join(map(str, c)) + " 0" for c in phi.to_ints())
    return "\n".join(out) + "\n"
