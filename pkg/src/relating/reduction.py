"""SAT instances as relating-edge queries on graphs with no 4- and 5-cycles.

Each variable ``x_i`` becomes a triangle ``(x_i, t_i, f_i)`` hanging off ``y``;
each clause ``c_j`` hangs off ``x``.  A positive occurrence of ``x_i`` in
``c_j`` adds a vertex ``t_{i,j}`` joined to ``f_i`` and ``c_j``; a negative one
adds ``f_{i,j}`` joined to ``t_i`` and ``c_j``.  The edge ``xy`` is relating
exactly when the formula is satisfiable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .graph import Graph, build_graph, has_cycle_of_length
from .oracle import verify_relating_witness

Literal = tuple[int, bool]  # (variable index from 1, True for the positive literal)
Clause = frozenset[Literal]
Assignment = dict[int, bool]

MAX_BRUTE_VARIABLES = 24


class CnfParseError(ValueError):
    pass


class InvalidWitness(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    n: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(frozenset(c) for c in self.clauses))
        for c in self.clauses:
            for var, _ in c:
                if not 1 <= var <= self.n:
                    raise ValueError(f"variable {var} outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def literal_occurrences(self) -> int:
        return sum(len(c) for c in self.clauses)

    def is_normalized(self) -> bool:
        return not any(_is_tautology(c) for c in self.clauses)

    def satisfied_by(self, phi: Mapping[int, bool]) -> bool:
        return all(any(phi[var] == pol for var, pol in c) for c in self.clauses)


def _is_tautology(c: Clause) -> bool:
    return any((var, not pol) in c for var, pol in c)


def parse_cnf(text: str) -> CnfFormula:
    """Read DIMACS CNF; repeated literals inside a clause are merged."""
    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfParseError(f"line {lineno}: bad header {line!r}")
            try:
                header = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfParseError(f"line {lineno}: bad header {line!r}") from None
            if min(header) < 0:
                raise CnfParseError(f"line {lineno}: negative count in header")
            continue
        if header is None:
            raise CnfParseError(f"line {lineno}: clause data before header")
        try:
            tokens.extend(int(t) for t in line.split())
        except ValueError:
            raise CnfParseError(f"line {lineno}: non-integer literal") from None
    if header is None:
        raise CnfParseError("missing 'p cnf' header")
    n, m = header

    clauses = []
    current: set[Literal] = set()
    for lit in tokens:
        if lit == 0:
            clauses.append(frozenset(current))
            current = set()
        elif abs(lit) > n:
            raise CnfParseError(f"literal {lit} refers to a variable beyond {n}")
        else:
            current.add((abs(lit), lit > 0))
    if current:
        raise CnfParseError("last clause is not terminated by 0")
    if len(clauses) != m:
        raise CnfParseError(f"header declares {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def write_cnf(f: CnfFormula) -> str:
    lines = [f"p cnf {f.n} {f.m}"]
    for c in f.clauses:
        lits = sorted(c)
        lines.append(" ".join([str(v if p else -v) for v, p in lits] + ["0"]))
    return "\n".join(lines) + "\n"


def normalize_cnf(f: CnfFormula) -> CnfFormula:
    """Drop clauses holding both polarities of some variable (always true).

    Such a clause would put ``c_j, t_{i,j}, f_i, t_i, f_{i,j}`` on a 5-cycle.
    Empty clauses stay.
    """
    return CnfFormula(f.n, tuple(c for c in f.clauses if not _is_tautology(c)))


def brute_sat(f: CnfFormula) -> Assignment | None:
    if f.n > MAX_BRUTE_VARIABLES:
        raise ValueError(f"{f.n} variables is too many for exhaustive search")
    for values in itertools.product((False, True), repeat=f.n):
        phi = dict(enumerate(values, 1))
        if f.satisfied_by(phi):
            return phi
    return None


@dataclass(frozen=True)
class ReductionArtifact:
    formula: CnfFormula
    graph: Graph
    x: int
    y: int
    labels: dict[str, int]

    def vertex(self, role: str) -> int:
        return self.labels[role]

    def write_labels(self) -> str:
        """``<id> <role>`` per vertex (1-based ids), then ``query <x> <y>``."""
        by_id = sorted((v, role) for role, v in self.labels.items())
        lines = [f"{v + 1} {role}" for v, role in by_id]
        lines.append(f"query {self.x + 1} {self.y + 1}")
        return "\n".join(lines) + "\n"


def read_labels(text: str) -> tuple[dict[str, int], tuple[int, int]]:
    """Inverse of :meth:`ReductionArtifact.write_labels` (returns 0-based ids)."""
    labels = {}
    query = None
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "query" and len(parts) == 3:
            query = int(parts[1]) - 1, int(parts[2]) - 1
        elif len(parts) == 2:
            labels[parts[1]] = int(parts[0]) - 1
        else:
            raise ValueError(f"bad label line {raw!r}")
    if query is None:
        raise ValueError("label file has no query line")
    return labels, query


def reduce(f: CnfFormula) -> ReductionArtifact:
    if not f.is_normalized():
        raise ValueError("formula has tautological clauses; run normalize_cnf first")
    labels: dict[str, int] = {}

    def add(role: str) -> int:
        labels[role] = len(labels)
        return labels[role]

    x, y = add("x"), add("y")
    edges = [(x, y)]
    for i in range(1, f.n + 1):
        xi, ti, fi = add(f"x{i}"), add(f"t{i}"), add(f"f{i}")
        edges += [(y, xi), (xi, ti), (xi, fi), (ti, fi)]
    for j in range(1, f.m + 1):
        edges.append((x, add(f"c{j}")))
    for j, clause in enumerate(f.clauses, 1):
        cj = labels[f"c{j}"]
        for i, positive in sorted(clause):
            if positive:
                occ = add(f"t{i},{j}")
                edges += [(labels[f"f{i}"], occ), (occ, cj)]
            else:
                occ = add(f"f{i},{j}")
                edges += [(labels[f"t{i}"], occ), (occ, cj)]

    g = build_graph(len(labels), edges)
    n, m, occurrences = f.n, f.m, f.literal_occurrences
    assert g.n == 2 + 3 * n + m + occurrences
    assert g.edge_count() == 1 + 4 * n + 2 * occurrences + m
    assert not has_cycle_of_length(g, 4) and not has_cycle_of_length(g, 5)
    return ReductionArtifact(f, g, x, y, labels)


def assignment_to_witness(a: ReductionArtifact, phi: Mapping[int, bool]) -> frozenset[int]:
    """The candidate set picking the true side of every variable gadget."""
    s = set()
    for role, v in a.labels.items():
        if role[0] not in "tf":
            continue
        var = int(role[1:].split(",")[0])
        if phi[var] == (role[0] == "t"):
            s.add(v)
    return frozenset(s)


def witness_to_assignment(a: ReductionArtifact, s) -> Assignment:
    s = frozenset(s)
    if not verify_relating_witness(a.graph, a.x, a.y, s):
        raise InvalidWitness("set is not a relating witness for the query edge")
    return {i: a.labels[f"t{i}"] in s for i in range(1, a.formula.n + 1)}
