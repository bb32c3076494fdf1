"""3-SAT to non-separating-path reduction on general graphs.

A formula maps to a chain of per-variable gadgets between S and T: two
parallel lanes per variable, one vertex per occurrence of each polarity,
with clause vertices hung off the lanes by fat edges (two edges through a
degree-2 dummy, untraversable by any non-separating path). An s-t path
picks one lane per variable; the formula is satisfiable exactly when some
choice of lanes leaves every clause vertex attached after the path's edges
are removed. All edges have length 1; only the decision problem matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CnfError, DummyTraversalError
from .graph import Graph, Path, build_graph

Literal = tuple[int, bool]          # (variable index, is_positive)


@dataclass(frozen=True)
class CNF:
    num_vars: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        for ci, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise CnfError(f"clause {ci} has {len(clause)} literals, need exactly 3")
            vs = [v for v, _pos in clause]
            if len(set(vs)) != 3:
                raise CnfError(f"clause {ci} repeats a variable")
            for v in vs:
                if not (0 <= v < self.num_vars):
                    raise CnfError(f"clause {ci} uses variable {v} out of range")


@dataclass(frozen=True)
class VariableGadget:
    neg_lane: tuple[int, ...]       # one vertex per occurrence of the negated literal
    pos_lane: tuple[int, ...]       # one vertex per occurrence of the positive literal
    join: int                       # the b vertex closing the gadget
    direct_edge: bool               # a lane was empty, so prev-join edge exists


@dataclass
class ReducedInstance:
    graph: Graph
    s: int
    t: int
    cnf: CNF
    gadgets: dict[int, VariableGadget]      # only variables that occur
    clause_vertices: tuple[int, ...]
    dummies: frozenset[int]


def reduce_cnf(cnf: CNF) -> ReducedInstance:
    """Build the reduction graph; unit edge lengths throughout.

    Variables with zero occurrences get no gadget: the literal construction
    would give them a single mandatory bridge edge, making every s-t path
    separating regardless of satisfiability. They constrain nothing, so they
    are skipped and decode to an arbitrary value.
    """
    if not cnf.clauses:
        raise CnfError("cannot reduce an empty formula")
    neg_count = [0] * cnf.num_vars
    pos_count = [0] * cnf.num_vars
    for clause in cnf.clauses:
        for v, positive in clause:
            (pos_count if positive else neg_count)[v] += 1

    edges: list[tuple[int, int, int]] = []
    next_id = 1                      # vertex 0 is S
    gadgets: dict[int, VariableGadget] = {}
    prev = 0
    for var in range(cnf.num_vars):
        k_neg, k_pos = neg_count[var], pos_count[var]
        if k_neg == 0 and k_pos == 0:
            continue
        neg_lane = tuple(range(next_id, next_id + k_neg))
        next_id += k_neg
        pos_lane = tuple(range(next_id, next_id + k_pos))
        next_id += k_pos
        join = next_id
        next_id += 1
        for lane in (neg_lane, pos_lane):
            if lane:
                edges.append((prev, lane[0], 1))
                for a, b in zip(lane, lane[1:]):
                    edges.append((a, b, 1))
                edges.append((lane[-1], join, 1))
        direct = k_neg == 0 or k_pos == 0
        if direct:
            edges.append((prev, join, 1))
        gadgets[var] = VariableGadget(neg_lane, pos_lane, join, direct)
        prev = join
    t = prev

    clause_vertices = tuple(range(next_id, next_id + len(cnf.clauses)))
    next_id += len(cnf.clauses)
    dummies: list[int] = []
    seen_occurrence = [[0, 0] for _ in range(cnf.num_vars)]
    for ci, clause in enumerate(cnf.clauses):
        cv = clause_vertices[ci]
        for v, positive in clause:
            occ = seen_occurrence[v][positive]
            seen_occurrence[v][positive] += 1
            lane = gadgets[v].pos_lane if positive else gadgets[v].neg_lane
            attach = lane[occ]
            dummy = next_id
            next_id += 1
            dummies.append(dummy)
            edges.append((attach, dummy, 1))
            edges.append((dummy, cv, 1))
    graph = build_graph(next_id, edges)
    return ReducedInstance(graph=graph, s=0, t=t, cnf=cnf, gadgets=gadgets,
                           clause_vertices=clause_vertices,
                           dummies=frozenset(dummies))


def assignment_to_path(inst: ReducedInstance, assignment: Sequence[bool]) -> Path:
    """The lane path of an assignment: true picks the negated-occurrence lane."""
    if len(assignment) != inst.cnf.num_vars:
        raise ValueError("assignment length must match the variable count")
    verts = [inst.s]
    prev = inst.s
    for var in sorted(inst.gadgets):
        gadget = inst.gadgets[var]
        lane = gadget.neg_lane if assignment[var] else gadget.pos_lane
        verts.extend(lane)
        verts.append(gadget.join)
        prev = gadget.join
    assert prev == inst.t
    return Path.from_vertices(inst.graph, verts)


def path_to_assignment(inst: ReducedInstance, p: Path) -> list[bool]:
    """Recover an assignment from a simple s-t path.

    A gadget crossed on a lane reads off that lane's truth value; a gadget
    crossed by its direct edge reads as the value whose lane is empty.
    Variables without a gadget default to False. Paths through a fat-edge
    dummy are rejected: traversing one isolates it, so they are always
    separating and carry no assignment.
    """
    on_path = set(p.vertices)
    if not inst.dummies.isdisjoint(on_path):
        raise DummyTraversalError("path traverses a fat-edge dummy")
    out = [False] * inst.cnf.num_vars
    for var, gadget in inst.gadgets.items():
        crosses_neg = any(v in on_path for v in gadget.neg_lane)
        crosses_pos = any(v in on_path for v in gadget.pos_lane)
        if crosses_neg:
            out[var] = True
        elif crosses_pos:
            out[var] = False
        else:
            out[var] = not gadget.neg_lane
    return out


def evaluate(cnf: CNF, assignment: Sequence[bool]) -> bool:
    return all(any(assignment[v] == positive for v, positive in clause)
               for clause in cnf.clauses)


def brute_sat(cnf: CNF, max_vars: int = 20) -> Optional[list[bool]]:
    """Truth-table satisfiability check; first satisfying assignment or None."""
    if cnf.num_vars > max_vars:
        raise CnfError(f"{cnf.num_vars} variables exceeds the brute-force cap {max_vars}")
    for bits in range(1 << cnf.num_vars):
        assignment = [(bits >> i) & 1 == 1 for i in range(cnf.num_vars)]
        if evaluate(cnf, assignment):
            return assignment
    return None


# ---------------------------------------------------------------------------
# DIMACS CNF format: `p cnf <vars> <clauses>`, clause lines of three nonzero
# literals terminated by 0, `c` comment lines.


def parse_dimacs(text: str) -> CNF:
    num_vars = None
    declared = None
    clauses: list[tuple[Literal, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: header must be 'p cnf <vars> <clauses>'")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise CnfError(f"line {lineno}: clause before header")
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise CnfError(f"line {lineno}: {exc}") from exc
        if not lits or lits[-1] != 0:
            raise CnfError(f"line {lineno}: clause must end with 0")
        body = lits[:-1]
        if len(body) != 3 or 0 in body:
            raise CnfError(f"line {lineno}: need exactly 3 nonzero literals")
        for lit in body:
            if abs(lit) > num_vars:
                raise CnfError(f"line {lineno}: literal {lit} out of range")
        clauses.append(tuple((abs(lit) - 1, lit > 0) for lit in body))
    if num_vars is None:
        raise CnfError("missing 'p cnf' header")
    if declared != len(clauses):
        raise CnfError(f"header declares {declared} clauses, found {len(clauses)}")
    return CNF(num_vars=num_vars, clauses=tuple(clauses))


def format_dimacs(cnf: CNF) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    for clause in cnf.clauses:
        lines.append(" ".join(str(v + 1 if positive else -(v + 1))
                              for v, positive in clause) + " 0")
    return "\n".join(lines) + "\n"
