"""Hardness-instance generators and the small solvers that audit them.

Three families live here: the auxiliary cycles (temporal cycles whose
every vertex closes exactly one temporal path), the strong-cycle
instances built from 3-CNF formulas, and the static grid instances built
from monotone formulas whose lifetime-2 temporizations encode NAE
assignments. A brute-force satisfiability solver plus the constructive
witness builders (satisfying assignment to strong cycle, NAE assignment
to temporization) let every generated instance be checked both ways.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .core import CycleKind, Digraph, TemporalDigraph
from .temporize import Temporization

__all__ = [
    "CnfFormatError",
    "CnfFormula",
    "SatMode",
    "parse_dimacs",
    "solve_formula",
    "satisfies",
    "MAX_SOLVE_VARIABLES",
    "auxiliary_cycle",
    "l_circ",
    "StrongInstance",
    "sat_to_strong_instance",
    "NaeInstance",
    "nae_to_simple_instance",
    "nae_to_weak_instance",
    "assignment_to_strong_cycle",
    "assignment_to_temporization",
]

MAX_SOLVE_VARIABLES = 24


class CnfFormatError(ValueError):
    """Raised on malformed DIMACS input."""


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula over variables 1..num_variables.

    Literals are DIMACS-style signed integers: k means variable k, -k its
    negation. Every clause has exactly three literals; the instance
    generators' arithmetic depends on that width, so shorter clauses are
    rejected instead of padded.
    """

    num_variables: int
    clauses: tuple

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_variables < 0:
            raise ValueError("num_variables must be non-negative")
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError(f"clause {clause} does not have exactly 3 literals")
            for lit in clause:
                if not isinstance(lit, int) or isinstance(lit, bool) or lit == 0:
                    raise ValueError(f"bad literal {lit!r} in clause {clause}")
                if abs(lit) > self.num_variables:
                    raise ValueError(
                        f"literal {lit} exceeds variable count {self.num_variables}"
                    )

    @property
    def is_monotone(self) -> bool:
        return all(lit > 0 for clause in self.clauses for lit in clause)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_variables} {len(self.clauses)}"]
        lines += [" ".join(map(str, clause)) + " 0" for clause in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF; `c` lines are comments, clauses end with 0."""
    header = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise CnfFormatError(f"line {lineno}: duplicate header")
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise CnfFormatError(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise CnfFormatError(f"line {lineno}: bad header counts") from None
            continue
        if header is None:
            raise CnfFormatError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise CnfFormatError(f"line {lineno}: bad literal {tok!r}") from None
    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    clauses = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(tok)
    if current:
        raise CnfFormatError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise CnfFormatError(
            f"header announces {header[1]} clauses, found {len(clauses)}"
        )
    try:
        return CnfFormula(header[0], tuple(clauses))
    except ValueError as exc:
        raise CnfFormatError(str(exc)) from None


class SatMode(enum.Enum):
    SAT = "sat"
    NAE_SAT = "nae-sat"


def _clause_ok(clause, assignment: dict, mode: SatMode) -> bool:
    values = [assignment[abs(lit)] ^ (lit < 0) for lit in clause]
    if mode is SatMode.SAT:
        return any(values)
    return any(values) and not all(values)


def satisfies(formula: CnfFormula, assignment: dict, mode: SatMode) -> bool:
    """True when the total assignment meets every clause under the mode."""
    missing = [v for v in range(1, formula.num_variables + 1) if v not in assignment]
    if missing:
        raise ValueError(f"assignment does not cover variables {missing}")
    return all(_clause_ok(c, assignment, mode) for c in formula.clauses)


def solve_formula(formula: CnfFormula, mode: SatMode) -> dict | None:
    """First satisfying assignment in truth-table order, or None.

    Exhaustive, so the variable count is capped at MAX_SOLVE_VARIABLES.
    """
    n = formula.num_variables
    if n > MAX_SOLVE_VARIABLES:
        raise ValueError(f"exhaustive solving is capped at {MAX_SOLVE_VARIABLES} variables")
    for bits in itertools.product((False, True), repeat=n):
        assignment = {v: bits[v - 1] for v in range(1, n + 1)}
        if all(_clause_ok(c, assignment, mode) for c in formula.clauses):
            return assignment
    return None


def auxiliary_cycle(n: int) -> TemporalDigraph:
    """Directed n-cycle v_0..v_{n-1} where every vertex closes a temporal path.

    The wrap arc e_0 = v_{n-1} -> v_0 carries {0, n, 2n, ..., (n-1)n}; the
    arc e_i = v_{i-1} -> v_i carries {n-i, 2n-i, ..., (n-1)n-i}. Lifetime
    is n(n-1), and each vertex's closed path is unique and uses the label
    sequence l_circ(n, i) for starts i <= n-2.
    """
    if n < 2:
        raise ValueError("auxiliary cycle needs order at least 2")
    names = [f"v{i}" for i in range(n)]
    arcs = [(names[-1], names[0], tuple(j * n for j in range(n)))]
    for i in range(1, n):
        arcs.append((names[i - 1], names[i], tuple(j * n - i for j in range(1, n))))
    return TemporalDigraph(arcs, names)


def l_circ(n: int, i: int) -> tuple:
    """Label sequence {j(n-1) - i : j = 1..n} of v_i's closed path, i <= n-2."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"start index {i} outside 0..{n - 2}")
    return tuple(j * (n - 1) - i for j in range(1, n + 1))


@dataclass(frozen=True)
class StrongInstance:
    """Strong-cycle detection instance for a 3-CNF formula.

    graph: the temporal digraph; order: the common order 4m+1 of the three
    merged cycles; symbols: vertex name -> ("shared", index) for merged
    vertices or ("cycle", branch, index); removals: arc -> labels actually
    removed by contradicting-literal pruning.
    """

    graph: TemporalDigraph
    order: int
    symbols: dict
    removals: dict


def _strong_vertex(k: int, branch: int) -> str:
    return f"v{k}" if k % 4 == 0 else f"v{k}.{branch}"


def sat_to_strong_instance(formula: CnfFormula) -> StrongInstance:
    """Merge three order-(4m+1) auxiliary cycles into a formula gadget.

    The shared vertices v_0, v_4, ..., v_4m are the merge points; branch j
    of block i stands for literal j of clause i. Label 0 is added to the
    two block arcs a true literal's closed path may skip over, and for
    every pair of contradicting literals, the labels of one literal's
    closed path are removed from the first block arc of the other.
    Raises if a removal would empty a label set.
    """
    m = len(formula.clauses)
    if m == 0:
        raise ValueError("the construction needs at least one clause")
    n = 4 * m + 1
    labels: dict = {}
    order: list = []

    def add_arc(tail: str, head: str, times) -> None:
        labels[(tail, head)] = set(times)
        order.append((tail, head))

    add_arc(f"v{n - 1}", "v0", (j * n for j in range(n)))
    for branch in (1, 2, 3):
        for i in range(1, n):
            add_arc(
                _strong_vertex(i - 1, branch),
                _strong_vertex(i, branch),
                (j * n - i for j in range(1, n)),
            )
    for i in range(m):
        base = 4 * i
        nxt = f"v{base + 4}"
        for branch, pair in (
            (1, ((base + 2, base + 3), (base + 3, None))),
            (2, ((base + 1, base + 2), (base + 3, None))),
            (3, ((base + 1, base + 2), (base + 2, base + 3))),
        ):
            for lo, hi in pair:
                tail = _strong_vertex(lo, branch)
                head = nxt if hi is None else _strong_vertex(hi, branch)
                labels[(tail, head)].add(0)
    removals: dict = {}
    positions = [(i, j) for i in range(m) for j in (1, 2, 3)]
    for (i, j), (g, h) in itertools.permutations(positions, 2):
        if formula.clauses[g][h - 1] != -formula.clauses[i][j - 1]:
            continue
        arc = (f"v{4 * g}", _strong_vertex(4 * g + 1, h))
        gone = labels[arc] & set(l_circ(n, 4 * i + j))
        if not gone:
            continue
        labels[arc] -= gone
        if not labels[arc]:
            raise ValueError(f"removals emptied the label set of arc {arc}")
        removals[arc] = tuple(sorted(set(removals.get(arc, ())) | gone))
    vertices = []
    for k in range(n):
        if k % 4 == 0:
            vertices.append(f"v{k}")
        else:
            vertices.extend(f"v{k}.{b}" for b in (1, 2, 3))
    symbols = {}
    for name in vertices:
        if "." in name:
            idx, branch = name[1:].split(".")
            symbols[name] = ("cycle", int(branch), int(idx))
        else:
            symbols[name] = ("shared", int(name[1:]))
    graph = TemporalDigraph(
        ((t, h, tuple(sorted(labels[(t, h)]))) for t, h in order), vertices
    )
    return StrongInstance(graph, n, symbols, removals)


@dataclass(frozen=True)
class NaeInstance:
    """Static grid instance whose lifetime-2 temporizations encode NAE truth.

    graph: the static digraph; kind: which cycle kind the instance targets;
    vertical_arcs: (variable, column) -> arc; a_arcs / b_arcs: variable ->
    row arcs in column order (b_arcs is empty for the weak variant);
    b_paths: (variable, junction, offset) -> the three-arc path standing in
    for the removed row arc (weak variant only, offset is -1 or +1);
    clause_arcs: clause index -> the added arcs in cycle order; renames:
    identified-away vertex name -> surviving name; symbols: vertex name ->
    origin tuple.
    """

    graph: Digraph
    kind: CycleKind
    vertical_arcs: dict
    a_arcs: dict
    b_arcs: dict
    b_paths: dict
    clause_arcs: dict
    renames: dict
    symbols: dict


def _nae_check(formula: CnfFormula) -> None:
    if not formula.is_monotone:
        raise ValueError("the grid constructions require a monotone formula")
    if not formula.clauses:
        raise ValueError("the construction needs at least one clause")
    for clause in formula.clauses:
        if len(set(clause)) != 3:
            raise ValueError(
                f"clause {clause} repeats a variable; the column identifications "
                "require three distinct variables per clause"
            )


def _nae_renames(formula: CnfFormula) -> dict:
    renames: dict = {}
    for j, (i1, i2, i3) in enumerate(formula.clauses, start=1):
        q = 2 * j - 1
        renames[f"b{i2}.{q}"] = f"a{i1}.{q}"
        renames[f"b{i3}.{q}"] = f"a{i2}.{q}"
    return renames


def _nae_instance(formula: CnfFormula, kind: CycleKind) -> NaeInstance:
    _nae_check(formula)
    m = len(formula.clauses)
    cols = 2 * m - 1
    renames = _nae_renames(formula)

    def b(i: int, c: int) -> str:
        return renames.get(f"b{i}.{c}", f"b{i}.{c}")

    arcs: list = []
    symbols: dict = {}
    vertical_arcs: dict = {}
    a_arcs: dict = {}
    b_arcs: dict = {}
    b_paths: dict = {}
    for i in range(1, formula.num_variables + 1):
        for c in range(1, cols + 1):
            symbols.setdefault(f"a{i}.{c}", ("a", i, c))
            if f"b{i}.{c}" not in renames:
                symbols.setdefault(f"b{i}.{c}", ("b", i, c))
        for c in range(1, cols + 1, 2):
            arc = (b(i, c), f"a{i}.{c}")
            vertical_arcs[(i, c)] = arc
            arcs.append(arc)
        for c in range(2, cols, 2):
            arc = (f"a{i}.{c}", b(i, c))
            vertical_arcs[(i, c)] = arc
            arcs.append(arc)
        row = []
        for c in range(1, cols):
            arc = (
                (f"a{i}.{c}", f"a{i}.{c + 1}")
                if c % 2 == 1
                else (f"a{i}.{c + 1}", f"a{i}.{c}")
            )
            row.append(arc)
            arcs.append(arc)
        a_arcs[i] = tuple(row)
        if kind is CycleKind.SIMPLE:
            row = []
            for c in range(1, cols):
                arc = (b(i, c + 1), b(i, c)) if c % 2 == 1 else (b(i, c), b(i, c + 1))
                row.append(arc)
                arcs.append(arc)
            b_arcs[i] = tuple(row)
        else:
            for j in range(1, m):
                for offset, stem in ((-1, "p"), (1, "q")):
                    u1 = f"{stem}{i}.{j}.1"
                    u2 = f"{stem}{i}.{j}.2"
                    symbols[u1] = ("path", i, j, offset, 1)
                    symbols[u2] = ("path", i, j, offset, 2)
                    path = (
                        (b(i, 2 * j), u1),
                        (u1, u2),
                        (u2, b(i, 2 * j + offset)),
                    )
                    b_paths[(i, j, offset)] = path
                    arcs.extend(path)
    clause_arcs: dict = {}
    for j, (i1, i2, i3) in enumerate(formula.clauses, start=1):
        q = 2 * j - 1
        tail = f"a{i3}.{q}"
        head = f"b{i1}.{q}"
        if kind is CycleKind.SIMPLE:
            symbols[f"c{j}"] = ("clause", j)
            added = ((tail, f"c{j}"), (f"c{j}", head))
        else:
            w = [f"w{j}.{k}" for k in (1, 2, 3)]
            for k, name in enumerate(w, start=1):
                symbols[name] = ("clause", j, k)
            added = ((tail, w[0]), (w[0], w[1]), (w[1], w[2]), (w[2], head))
        clause_arcs[j] = added
        arcs.extend(added)
    return NaeInstance(
        Digraph(arcs),
        kind,
        vertical_arcs,
        a_arcs,
        b_arcs,
        b_paths,
        clause_arcs,
        renames,
        symbols,
    )


def nae_to_simple_instance(formula: CnfFormula) -> NaeInstance:
    """Grid gadgets plus 5-cycle clause gadgets for the simple kind.

    Per variable, a 2 x (2m-1) grid: the a-row zig-zags into its even
    columns, the b-row zig-zags out of them, odd-column verticals point b
    to a and even-column verticals a to b. Per clause, the three verticals
    of its variables' column are chained by vertex identification and the
    chain is closed through a fresh vertex.
    """
    return _nae_instance(formula, CycleKind.SIMPLE)


def nae_to_weak_instance(formula: CnfFormula) -> NaeInstance:
    """Grid gadgets with three-arc b-row detours and 7-cycle clause gadgets.

    The b-row arcs of the simple variant are each replaced by a directed
    path on three arcs through two fresh vertices, and each clause chain is
    closed through three fresh vertices, so all structural cycles outside
    the clause gadgets have length at least 6.
    """
    return _nae_instance(formula, CycleKind.WEAK)


def assignment_to_strong_cycle(formula: CnfFormula, assignment: dict) -> frozenset:
    """Vertex set whose induced subgraph realizes a strong cycle.

    Takes a satisfying assignment, keeps every shared vertex, and routes
    each block through the branch of the clause's lowest true literal.
    """
    if not satisfies(formula, assignment, SatMode.SAT):
        raise ValueError("the assignment does not satisfy the formula")
    m = len(formula.clauses)
    chosen = {f"v{4 * i}" for i in range(m + 1)}
    for i, clause in enumerate(formula.clauses):
        j = next(
            k
            for k, lit in enumerate(clause, start=1)
            if assignment[abs(lit)] ^ (lit < 0)
        )
        chosen.update(f"v{4 * i + d}.{j}" for d in (1, 2, 3))
    return frozenset(chosen)


def assignment_to_temporization(
    formula: CnfFormula, assignment: dict, kind: CycleKind
) -> Temporization:
    """Lifetime-2 temporization of the grid instance from an NAE assignment.

    True variables put {1} on their verticals and {2} on their row arcs
    (b-row detours alternate 2,1,2), false variables the opposite. Clause
    arcs copy the first vertical's time onto the arc leaving the chain and
    the opposite time onto the arc closing it; the weak variant's two
    middle arcs repeat the first time when the chain's outer verticals
    agree and alternate otherwise.
    """
    if not satisfies(formula, assignment, SatMode.NAE_SAT):
        raise ValueError("the assignment is not a not-all-equal assignment")
    instance = _nae_instance(formula, kind)
    times: dict = {}

    def t(var: int) -> int:
        return 1 if assignment[var] else 2

    for (i, _c), arc in instance.vertical_arcs.items():
        times[arc] = (t(i),)
    for i, row in instance.a_arcs.items():
        for arc in row:
            times[arc] = (3 - t(i),)
    for i, row in instance.b_arcs.items():
        for arc in row:
            times[arc] = (3 - t(i),)
    for (i, _j, _o), path in instance.b_paths.items():
        other = 3 - t(i)
        for arc, label in zip(path, (other, t(i), other)):
            times[arc] = (label,)
    for j, (i1, _i2, i3) in enumerate(formula.clauses, start=1):
        added = instance.clause_arcs[j]
        t1, t3 = t(i1), t(i3)
        if kind is CycleKind.SIMPLE:
            seq = (t1, 3 - t1)
        elif t1 == t3:
            seq = (3 - t1, t1, t1, 3 - t1)
        else:
            seq = (t1, 3 - t1, t1, 3 - t1)
        for arc, label in zip(added, seq):
            times[arc] = (label,)
    return Temporization(times)
