"""Cycle detection: polynomial weak/simple checks and the timetable search.

Weak detection reduces to reachability: a weak cycle exists exactly when
some ordered vertex pair is temporally reachable in both directions; the
two witness paths are spliced until internally disjoint. Simple detection
closes an earliest-arrival path with one arc. Strong detection runs a
depth-first search over (path, root timetable, path timetable) states with
a blocking store memoizing failed (arc, timetables) keys, which bounds how
often any arc can be re-explored.

A timetable is a plain tuple of length lifetime+1 whose entry at index t
is a time value, with 0 meaning "no path". Because genuine label 0 would
collide with that sentinel, the strong search runs on a copy of the graph
with all labels shifted up by one and reports witnesses in original labels;
extend() itself always takes tables at face value.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from .core import (
    CycleKind,
    CycleWitness,
    PathModel,
    PathWitness,
    TemporalDigraph,
    canonical_cycle,
    earliest_at_least,
    earliest_between,
    greedy_path_times,
)
from .reach import earliest_arrival

__all__ = [
    "extend",
    "detect_weak",
    "detect_simple",
    "detect_strong",
    "RootSearchStats",
    "ExplorationStats",
    "BudgetExceeded",
]


# --- weak ---------------------------------------------------------------------


def _splice(p_xy: PathWitness, p_yx: PathWitness):
    # shrink the pair until the two paths share no internal vertex; each
    # round replaces (x, y) by (x, v) for the first shared interior v,
    # strictly reducing the combined length, so this terminates
    while True:
        inner_back = set(p_yx.vertices[1:-1])
        v = next((z for z in p_xy.vertices[1:-1] if z in inner_back), None)
        if v is None:
            return p_xy, p_yx
        i = p_xy.vertices.index(v)
        j = p_yx.vertices.index(v)
        p_xy = PathWitness(p_xy.vertices[: i + 1], p_xy.times[:i])
        p_yx = PathWitness(p_yx.vertices[j:], p_yx.times[j:])


def detect_weak(D: TemporalDigraph, model: PathModel):
    """Weak-cycle witness, or None.

    There is a weak cycle iff some ordered pair x != y has finite EAT in
    both directions. The two earliest-arrival paths are spliced down to an
    internally disjoint pair, whose arc sets are then disjoint and union to
    a cycle.
    """
    eat: dict[str, object] = {}

    def res(x):
        if x not in eat:
            eat[x] = earliest_arrival(D, x, model)
        return eat[x]

    for x in D.vertices:
        for y in D.vertices:
            if x == y:
                continue
            if not res(x).reachable(y) or not res(y).reachable(x):
                continue
            p_xy, p_yx = _splice(res(x).witness(y), res(y).witness(x))
            cycle = canonical_cycle(p_xy.vertices[:-1] + p_yx.vertices[:-1])
            return CycleWitness(kind=CycleKind.WEAK, cycle=cycle, paths=(p_xy, p_yx))
    return None


# --- simple -------------------------------------------------------------------


def detect_simple(D: TemporalDigraph, model: PathModel):
    """Simple-cycle witness, or None.

    For each arc v -> r, a simple cycle through that arc exists iff the
    earliest arrival from r at v can still depart on some label of the arc.
    The witness is the earliest-arrival path plus that closing arc.
    """
    eat: dict[str, object] = {}
    for v, r, times in D.arcs:
        if r not in eat:
            eat[r] = earliest_arrival(D, r, model)
        res = eat[r]
        if not res.reachable(v):
            continue
        t = earliest_at_least(times, model.min_next(res.value(v)))
        if t is None:
            continue
        p = res.witness(v)
        closed = PathWitness(p.vertices + (r,), p.times + (t,))
        return CycleWitness(
            kind=CycleKind.SIMPLE,
            cycle=canonical_cycle(p.vertices),
            paths=(closed,),
        )
    return None


# --- strong -------------------------------------------------------------------


def extend(T_r, T_P, times, model: PathModel):
    """Push both timetables across one arc; (T_r', T_P', extended).

    Every non-zero root entry moves to the earliest arc label it can chain
    onto, or drops to 0 when none exists. Every non-zero path entry must
    find a label between its current value and its deadline (index + 1
    non-strict, index strict); any entry that cannot makes the whole
    extension fail, returning the input tables unchanged. The new path
    entry lands one below the highest non-zero index i of the *input* root
    table; i = 0 fails because that slot does not exist.
    """
    tau = len(T_r) - 1
    i = -1
    for t in range(tau, -1, -1):
        if T_r[t]:
            i = t
            break
    if i <= 0:
        return T_r, T_P, False
    strict = model is PathModel.STRICT
    new_r = []
    for t in range(tau + 1):
        cur = T_r[t]
        if cur == 0:
            new_r.append(0)
            continue
        lab = earliest_at_least(times, cur + 1 if strict else cur)
        new_r.append(0 if lab is None else lab)
    new_p = list(T_P)
    for t in range(tau + 1):
        cur = T_P[t]
        if cur == 0:
            continue
        lab = earliest_between(times, cur + 1 if strict else cur, t if strict else t + 1)
        if lab is None:
            return T_r, T_P, False
        new_p[t] = lab
    new_p[i - 1] = max(new_p[i - 1], times[0])
    return tuple(new_r), tuple(new_p), True


class BudgetExceeded(RuntimeError):
    """The strong-cycle search ran out of time; partial stats attached."""

    def __init__(self, stats: "ExplorationStats"):
        super().__init__("strong-cycle search budget exceeded")
        self.stats = stats


@dataclass
class RootSearchStats:
    """Instrumentation for the search owned by one root arc.

    Every extend() call on an arc either contributes a fresh key to the
    blocking store or sits on the success spine, so per arc the number of
    extensions can never exceed blocked-or-succeeded distinct keys; equality
    means no (arc, T_r, T_P) triple was ever extended twice.
    """

    root_arc: tuple[str, str]
    recursions: int = 0
    extend_counts: Counter = field(default_factory=Counter)
    blocked_counts: Counter = field(default_factory=Counter)
    success_counts: Counter = field(default_factory=Counter)
    closure_rejections: int = 0
    witness_rejections: int = 0
    blocking_size: int = 0
    completed: bool = False

    def distinct_count(self, arc) -> int:
        return self.blocked_counts[arc] + self.success_counts[arc]

    def repeat_free(self) -> bool:
        return all(
            self.extend_counts[a] <= self.distinct_count(a) for a in self.extend_counts
        )


@dataclass
class ExplorationStats:
    """Aggregated instrumentation across all root-arc searches."""

    roots: list = field(default_factory=list)

    @property
    def total_recursions(self) -> int:
        return sum(r.recursions for r in self.roots)

    @property
    def total_extends(self) -> int:
        return sum(sum(r.extend_counts.values()) for r in self.roots)

    @property
    def total_blocking_size(self) -> int:
        return sum(r.blocking_size for r in self.roots)

    @property
    def closure_rejections(self) -> int:
        return sum(r.closure_rejections for r in self.roots)

    @property
    def witness_rejections(self) -> int:
        return sum(r.witness_rejections for r in self.roots)

    def repeat_free(self) -> bool:
        return all(r.repeat_free() for r in self.roots if r.completed)


def _shift_labels(D: TemporalDigraph) -> TemporalDigraph:
    return TemporalDigraph(
        ((t, h, tuple(x + 1 for x in labels)) for t, h, labels in D.arcs),
        D.vertices,
    )


def _closure_valid(T_P, model: PathModel) -> bool:
    strict = model is PathModel.STRICT
    for x, val in enumerate(T_P):
        if val and val > (x if strict else x + 1):
            return False
    return True


def _strong_witness(D: TemporalDigraph, cycle, model: PathModel):
    cycle = canonical_cycle(cycle)
    paths = []
    for s in range(len(cycle)):
        seq = cycle[s:] + cycle[:s] + (cycle[s],)
        times = greedy_path_times(D, seq, model)
        if times is None:
            return None
        paths.append(PathWitness(seq, times))
    return CycleWitness(kind=CycleKind.STRONG, cycle=cycle, paths=tuple(paths))


def detect_strong(D: TemporalDigraph, model: PathModel, budget_seconds=None):
    """Strong-cycle witness (or None) plus exploration statistics.

    One depth-first search per root arc, each with a fresh blocking store.
    A search state is the path plus the two timetables; extending over an
    arc whose (arc, T_r, T_P) key previously failed is skipped outright.
    Reaching a vertex already on the path closes a candidate cycle: the
    final path table is checked against its deadlines and the closed cycle
    must admit one closed temporal path per vertex (in original labels)
    before it is returned. With budget_seconds set, a search that overruns
    raises BudgetExceeded carrying the partial statistics.
    """
    stats = ExplorationStats()
    shifted = _shift_labels(D)
    tau = shifted.lifetime
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds

    for r, v, times in shifted.arcs:
        rs = RootSearchStats(root_arc=(r, v))
        stats.roots.append(rs)
        T_r = tuple(earliest_at_least(times, t) or 0 for t in range(tau + 1))
        T_P = tuple(0 for _ in range(tau)) + (times[0],)
        blocked: set = set()

        def search(P, T_r, T_P):
            rs.recursions += 1
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded(stats)
            last = P[-1]
            for w, arc_times in shifted.out_arcs(last):
                arc = (last, w)
                key = (arc, T_r, T_P)
                if key in blocked:
                    continue
                rs.extend_counts[arc] += 1
                nr, np_, ok = extend(T_r, T_P, arc_times, model)
                if not ok:
                    blocked.add(key)
                    rs.blocked_counts[arc] += 1
                    continue
                if w in P:
                    if not _closure_valid(np_, model):
                        rs.closure_rejections += 1
                        blocked.add(key)
                        rs.blocked_counts[arc] += 1
                        continue
                    witness = _strong_witness(D, P[P.index(w):], model)
                    if witness is None:
                        rs.witness_rejections += 1
                        blocked.add(key)
                        rs.blocked_counts[arc] += 1
                        continue
                    rs.success_counts[arc] += 1
                    return witness
                found = search(P + [w], nr, np_)
                if found is not None:
                    rs.success_counts[arc] += 1
                    return found
                blocked.add(key)
                rs.blocked_counts[arc] += 1
            return None

        try:
            witness = search([r, v], T_r, T_P)
        finally:
            rs.blocking_size = len(blocked)
        rs.completed = True
        if witness is not None:
            return witness, stats
    return None, stats
