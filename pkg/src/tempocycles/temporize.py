"""Acyclic temporization: constructions, deciders, and bounded search.

A temporization assigns every arc of a static digraph a non-empty label
set; the goal is to avoid a chosen cycle kind in the resulting temporal
digraph. The girth dispatcher answers from structure alone where theory
permits; the bounded-lifetime search settles small instances exhaustively
and is the reference the SAT reductions are checked against.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    CycleKind,
    Digraph,
    GraphFormatError,
    PathModel,
    TemporalDigraph,
    enumerate_cycles,
    girth,
)
from .oracle import OracleCapError, classify_cycle, oracle_detect

__all__ = [
    "Temporization",
    "parse_temporization",
    "DecisionStatus",
    "TemporizationDecision",
    "lexicographic_temporization",
    "strong_acyclic_temporization",
    "acyclic_temporization",
    "strict_acyclic_temporization",
    "bounded_lifetime_search",
    "check_alternation_conditions",
    "DEFAULT_SEARCH_BUDGET",
]

DEFAULT_SEARCH_BUDGET = 5_000_000


def _static(d) -> Digraph:
    return d.underlying() if isinstance(d, TemporalDigraph) else d


@dataclass(frozen=True)
class Temporization:
    """Map from arcs to non-empty, strictly increasing label tuples."""

    assignment: dict

    def __post_init__(self):
        for arc, labels in self.assignment.items():
            if not labels:
                raise ValueError(f"empty time set on arc {arc!r}")

    def labels(self, tail: str, head: str) -> tuple[int, ...]:
        return self.assignment[(tail, head)]

    @property
    def lifetime(self) -> int:
        return max((ls[-1] for ls in self.assignment.values()), default=0)

    def apply(self, D) -> TemporalDigraph:
        """Attach the labels to D's arcs; assignment and A(D) must coincide."""
        d = _static(D)
        missing = [a for a in d.arcs if a not in self.assignment]
        if missing:
            raise ValueError(f"temporization misses arcs: {missing}")
        extra = [a for a in self.assignment if not d.has_arc(*a)]
        if extra:
            raise ValueError(f"temporization labels unknown arcs: {extra}")
        return TemporalDigraph(
            ((t, h, self.assignment[(t, h)]) for t, h in d.arcs), d.vertices
        )

    def to_text(self) -> str:
        lines = [
            f"t {t} {h} {','.join(map(str, ls))}"
            for (t, h), ls in self.assignment.items()
        ]
        return "\n".join(lines) + "\n" if lines else ""


def parse_temporization(text: str) -> Temporization:
    """Parse `t <tail> <head> <t1>,<t2>,...` lines (graph-format lexing)."""
    assignment: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "t" or len(fields) != 4:
            raise GraphFormatError(
                f"line {lineno}: expected 't <tail> <head> <t1>,<t2>,...'"
            )
        tail, head, label_field = fields[1], fields[2], fields[3]
        if (tail, head) in assignment:
            raise GraphFormatError(f"line {lineno}: duplicate arc {tail!r} -> {head!r}")
        labels = []
        for p in label_field.split(","):
            try:
                t = int(p)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad time label {p!r}") from None
            if t < 0:
                raise GraphFormatError(f"line {lineno}: negative time label {t}")
            labels.append(t)
        if any(b <= a for a, b in zip(labels, labels[1:])):
            raise GraphFormatError(f"line {lineno}: labels must be strictly increasing")
        assignment[(tail, head)] = tuple(labels)
    return Temporization(assignment)


class DecisionStatus(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"
    ABORTED = "aborted"


@dataclass(frozen=True)
class TemporizationDecision:
    status: DecisionStatus
    temporization: Temporization | None
    reason: str

    @property
    def is_yes(self) -> bool:
        return self.status is DecisionStatus.YES


def _ranked(D: Digraph, vertex_order):
    d = _static(D)
    order = tuple(vertex_order) if vertex_order is not None else d.vertices
    if sorted(order) != sorted(d.vertices) or len(order) != len(d.vertices):
        raise ValueError("vertex order is not a permutation of the vertices")
    return d, {v: i for i, v in enumerate(order)}


def lexicographic_temporization(D, vertex_order=None) -> Temporization:
    """One distinct label per arc, killing all temporal paths of length 3.

    Descending arcs (tail ranked above head) take labels 1..m' in ascending
    lexicographic order of their (tail, head) ranks; ascending arcs take
    m'+1..m with lexicographically larger arcs getting smaller labels. Any
    non-strict temporal path is then limited to one ascending arc followed
    by at most one descending arc.
    """
    d, rank = _ranked(D, vertex_order)
    descending = sorted(
        (a for a in d.arcs if rank[a[0]] > rank[a[1]]),
        key=lambda a: (rank[a[0]], rank[a[1]]),
    )
    ascending = sorted(
        (a for a in d.arcs if rank[a[0]] < rank[a[1]]),
        key=lambda a: (rank[a[0]], rank[a[1]]),
        reverse=True,
    )
    assignment = {}
    for i, arc in enumerate(descending):
        assignment[arc] = (i + 1,)
    for i, arc in enumerate(ascending):
        assignment[arc] = (len(descending) + i + 1,)
    return Temporization(assignment)


def strong_acyclic_temporization(D, vertex_order=None) -> Temporization:
    """Ascending arcs get {1}, descending get {2}; no strong cycle survives.

    Every cycle visits a highest-ranked vertex, which is entered on an
    ascending arc and left on a descending one, so under either model no
    closed temporal path starts there.
    """
    d, rank = _ranked(D, vertex_order)
    return Temporization(
        {a: ((1,) if rank[a[0]] < rank[a[1]] else (2,)) for a in d.arcs}
    )


def acyclic_temporization(D, kind: CycleKind, vertex_order=None) -> TemporizationDecision:
    """Girth-based decision for the unbounded-lifetime problem.

    Strong is always solvable. Simple is solvable exactly when the girth is
    at least 3. Weak is solvable when the girth is at least 5 and unsolvable
    when it is at most 3; girth 4 is genuinely undecided here and reported
    as Unknown rather than guessed. The vertex order feeds the underlying
    rank-based constructions and defaults to input order.
    """
    d = _static(D)
    if kind is CycleKind.STRONG:
        return TemporizationDecision(
            DecisionStatus.YES,
            strong_acyclic_temporization(d, vertex_order),
            "two-level labeling",
        )
    g = girth(d)
    if kind is CycleKind.SIMPLE:
        if g >= 3:
            return TemporizationDecision(
                DecisionStatus.YES,
                lexicographic_temporization(d, vertex_order),
                f"girth {g}",
            )
        return TemporizationDecision(DecisionStatus.NO, None, f"girth {g}")
    if g >= 5:
        return TemporizationDecision(
            DecisionStatus.YES,
            lexicographic_temporization(d, vertex_order),
            f"girth {g}",
        )
    if g <= 3:
        return TemporizationDecision(DecisionStatus.NO, None, f"girth {g}")
    return TemporizationDecision(DecisionStatus.UNKNOWN, None, "girth 4")


def strict_acyclic_temporization(D, kind: CycleKind) -> TemporizationDecision:
    """Decision under the strict model, where one shared label ends it all.

    With every arc labeled {1}, a strict temporal path cannot use two arcs,
    so no cycle of length 3 or more survives in any sense and no vertex
    closes a 2-cycle. Only a weak 2-cycle survives: a digon is two opposing
    one-arc paths whatever the labels, so for the weak kind a digon means No.
    """
    d = _static(D)
    all_ones = Temporization({a: (1,) for a in d.arcs})
    if kind is CycleKind.WEAK and d.has_digon():
        return TemporizationDecision(DecisionStatus.NO, None, "2-cycles are unavoidable")
    return TemporizationDecision(DecisionStatus.YES, all_ones, "single shared label")


def _candidate_sets(tau_max: int):
    # singletons first, then larger sets, each group in ascending order
    sets = []
    for mask in range(1, 1 << tau_max):
        labels = tuple(t + 1 for t in range(tau_max) if mask & (1 << t))
        sets.append(labels)
    sets.sort(key=lambda s: (len(s), s))
    return sets


class _BudgetSpent(Exception):
    pass


def bounded_lifetime_search(
    D,
    kind: CycleKind,
    tau_max: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    model: PathModel = PathModel.NONSTRICT,
    prune: bool = True,
) -> TemporizationDecision:
    """Exhaustive search for a temporization with lifetime at most tau_max.

    Tries every assignment of non-empty subsets of {1..tau_max}, single
    labels first. With pruning on, an assignment is cut as soon as any
    fully-labeled cycle already realizes the kind (a cycle's classification
    depends only on its own arcs), arcs on no cycle are pinned to {1}, and
    at tau_max <= 2 under the non-strict model a girth below the structural
    floor (4 for simple, 6 for weak) answers No outright. Every returned
    Yes is confirmed by the brute-force detector on the full graph. Budget
    is counted in assignment-tree nodes; exceeding it returns Aborted.
    """
    if tau_max < 1:
        raise ValueError("tau_max must be positive")
    d = _static(D)
    cycles, truncated = enumerate_cycles(d)
    if truncated:
        raise OracleCapError("too many cycles for exhaustive temporization search")
    if (
        prune
        and model is PathModel.NONSTRICT
        and tau_max <= 2
        and kind is not CycleKind.STRONG
    ):
        floor = 4 if kind is CycleKind.SIMPLE else 6
        g = girth(d)
        if g < floor:
            return TemporizationDecision(
                DecisionStatus.NO,
                None,
                f"girth {g} below the lifetime-2 floor of {floor}",
            )
    if prune:
        seen: set = set()
        arc_order: list = []
        for cycle in cycles:
            for i in range(len(cycle)):
                arc = (cycle[i], cycle[(i + 1) % len(cycle)])
                if arc not in seen:
                    seen.add(arc)
                    arc_order.append(arc)
        pinned = {a: (1,) for a in d.arcs if a not in seen}
        finish_at: dict[int, list] = {}
        for cycle in cycles:
            arcs = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
            last = max(arc_order.index(a) for a in arcs)
            finish_at.setdefault(last, []).append((cycle, arcs))
    else:
        arc_order = list(d.arcs)
        pinned = {}
        finish_at = {}
    candidates = _candidate_sets(tau_max)
    assignment: dict = dict(pinned)
    spent = 0

    def cycle_realized(cycle, arcs) -> bool:
        tiny = TemporalDigraph(((t, h, assignment[(t, h)]) for t, h in arcs))
        return classify_cycle(tiny, cycle, model).has(kind)

    def found_at_leaf() -> Temporization | None:
        cand = Temporization(dict(assignment))
        if oracle_detect(cand.apply(d), kind, model) is None:
            return cand
        return None

    def search(idx: int) -> Temporization | None:
        nonlocal spent
        if idx == len(arc_order):
            return found_at_leaf()
        arc = arc_order[idx]
        for labels in candidates:
            spent += 1
            if spent > budget:
                raise _BudgetSpent
            assignment[arc] = labels
            if prune and any(
                cycle_realized(c, arcs) for c, arcs in finish_at.get(idx, ())
            ):
                continue
            result = search(idx + 1)
            if result is not None:
                return result
        del assignment[arc]
        return None

    try:
        result = search(0)
    except _BudgetSpent:
        return TemporizationDecision(
            DecisionStatus.ABORTED, None, f"budget of {budget} nodes exhausted"
        )
    if result is not None:
        return TemporizationDecision(DecisionStatus.YES, result, "search hit")
    return TemporizationDecision(
        DecisionStatus.NO, None, f"all assignments up to lifetime {tau_max} fail"
    )


def check_alternation_conditions(D, temporization: Temporization, kind: CycleKind):
    """Structural necessities for lifetime-2 acyclicity; [] means none violated.

    For the simple kind no cycle may be shorter than 4 and every 4-cycle
    must carry singleton labels alternating around it; for the weak kind the
    same with 6. Passing is necessary for acyclicity, never sufficient.
    """
    for arc, labels in temporization.assignment.items():
        if not set(labels) <= {1, 2}:
            raise ValueError(f"labels outside {{1,2}} on arc {arc!r}: {labels}")
    d = _static(D)
    floor = 4 if kind is CycleKind.SIMPLE else 6
    cycles, truncated = enumerate_cycles(d)
    if truncated:
        raise OracleCapError("too many cycles to check alternation conditions")
    violations = []
    for cycle in cycles:
        q = len(cycle)
        if q < floor:
            violations.append((cycle, f"cycle of length {q} is below {floor}"))
            continue
        if q != floor:
            continue
        try:
            labels = [
                temporization.labels(cycle[i], cycle[(i + 1) % q]) for i in range(q)
            ]
        except KeyError as exc:
            raise ValueError(f"temporization does not cover arc {exc.args[0]!r}") from None
        if any(len(ls) != 1 for ls in labels):
            violations.append((cycle, "non-singleton label on an alternation cycle"))
            continue
        flat = [ls[0] for ls in labels]
        if not (
            all(x == flat[0] for x in flat[0::2])
            and all(x == flat[1] for x in flat[1::2])
            and flat[0] != flat[1]
        ):
            violations.append((cycle, f"labels {flat} do not alternate"))
    return violations
