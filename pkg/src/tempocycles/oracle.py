"""Brute-force ground truth for cycle detection and reachability.

Every checker here works straight from the definitions: enumerate all
candidates, try all choices, keep the best. Nothing is shared with the
fast algorithms except the graph type and the single-walk greedy labeler,
so the two sides reach their answers independently. All of it is
deliberately naive and guarded by hard caps; exceeding a cap raises
instead of silently degrading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    CycleKind,
    CycleWitness,
    DEFAULT_CYCLE_CAP,
    PathModel,
    PathWitness,
    TemporalDigraph,
    cycle_arcs,
    earliest_at_least,
    enumerate_cycles,
    greedy_path_times,
    latest_at_most,
)

__all__ = [
    "OracleCapError",
    "CycleClassification",
    "classify_cycle",
    "oracle_detect",
    "detect_all_kinds",
    "oracle_reachability",
    "all_pairs_reachability",
    "DEFAULT_PATH_CAP",
]

DEFAULT_PATH_CAP = 100_000


class OracleCapError(RuntimeError):
    """An enumeration cap was hit; the oracle refuses to answer partially."""


@dataclass(frozen=True)
class CycleClassification:
    """Which cycle kinds a single underlying cycle realizes.

    strong implies simple implies weak; the classifier guarantees the chain
    by construction (a full closed traversal splits at any vertex pair).
    """

    is_simple: bool
    is_weak: bool
    is_strong: bool

    def has(self, kind: CycleKind) -> bool:
        if kind is CycleKind.SIMPLE:
            return self.is_simple
        if kind is CycleKind.WEAK:
            return self.is_weak
        return self.is_strong


def _cycle_of(D: TemporalDigraph, cycle) -> tuple[str, ...]:
    cycle = tuple(cycle)
    if len(cycle) < 2 or len(set(cycle)) != len(cycle):
        raise ValueError(f"not a cycle: {cycle!r}")
    for u, w in cycle_arcs(cycle):
        if not D.has_arc(u, w):
            raise ValueError(f"not a cycle of this graph: missing arc {u!r} -> {w!r}")
    return cycle


def _arc_segment(cycle, i: int, j: int) -> tuple[str, ...]:
    # vertices walking the cycle from index i to index j (wrapping)
    q = len(cycle)
    steps = (j - i) % q
    return tuple(cycle[(i + k) % q] for k in range(steps + 1))


def classify_cycle(D: TemporalDigraph, cycle, model: PathModel) -> CycleClassification:
    """Classify one cycle by trying every start vertex and every split pair.

    A start vertex s succeeds when the cycle's own arc sequence from s can
    be traversed as one closed temporal path (greedy labeling decides this
    exactly). Simple = some start succeeds, strong = all do. Weak = some
    ordered pair (x, y) splits the cycle into two arc-disjoint sub-paths
    that are both traversable.
    """
    cycle = _cycle_of(D, cycle)
    q = len(cycle)
    closes = []
    for s in range(q):
        seq = cycle[s:] + cycle[:s] + (cycle[s],)
        closes.append(greedy_path_times(D, seq, model) is not None)
    is_simple = any(closes)
    is_strong = all(closes)
    is_weak = False
    for i in range(q):
        if is_weak:
            break
        for j in range(q):
            if i == j:
                continue
            if greedy_path_times(D, _arc_segment(cycle, i, j), model) is None:
                continue
            if greedy_path_times(D, _arc_segment(cycle, j, i), model) is not None:
                is_weak = True
                break
    return CycleClassification(is_simple=is_simple, is_weak=is_weak, is_strong=is_strong)


def _witness_for(D, cycle, kind: CycleKind, model: PathModel) -> CycleWitness:
    # the caller has already classified: a witness of this kind must exist
    q = len(cycle)
    if kind is CycleKind.SIMPLE or kind is CycleKind.STRONG:
        paths = []
        for s in range(q):
            seq = cycle[s:] + cycle[:s] + (cycle[s],)
            times = greedy_path_times(D, seq, model)
            if times is None:
                continue
            paths.append(PathWitness(seq, times))
            if kind is CycleKind.SIMPLE:
                break
        return CycleWitness(kind=kind, cycle=cycle, paths=tuple(paths))
    for i in range(q):
        for j in range(q):
            if i == j:
                continue
            fwd = _arc_segment(cycle, i, j)
            back = _arc_segment(cycle, j, i)
            t1 = greedy_path_times(D, fwd, model)
            if t1 is None:
                continue
            t2 = greedy_path_times(D, back, model)
            if t2 is None:
                continue
            return CycleWitness(
                kind=kind,
                cycle=cycle,
                paths=(PathWitness(fwd, t1), PathWitness(back, t2)),
            )
    raise AssertionError("classification promised a weak split that is not there")


def oracle_detect(
    D: TemporalDigraph,
    kind: CycleKind,
    model: PathModel,
    max_cycles: int = DEFAULT_CYCLE_CAP,
):
    """First cycle of the requested kind, as a full witness, or None.

    Enumerates every underlying cycle (deterministic order: by length, then
    lexicographically on the canonical rotation) and classifies each one.
    """
    cycles, truncated = enumerate_cycles(D, max_cycles)
    if truncated:
        raise OracleCapError(f"more than {max_cycles} cycles; oracle refuses")
    for cycle in cycles:
        if classify_cycle(D, cycle, model).has(kind):
            return _witness_for(D, cycle, kind, model)
    return None


def detect_all_kinds(
    D: TemporalDigraph, model: PathModel, max_cycles: int = DEFAULT_CYCLE_CAP
) -> dict:
    """One witness (or None) per kind from a single enumeration pass."""
    cycles, truncated = enumerate_cycles(D, max_cycles)
    if truncated:
        raise OracleCapError(f"more than {max_cycles} cycles; oracle refuses")
    out = {CycleKind.SIMPLE: None, CycleKind.WEAK: None, CycleKind.STRONG: None}
    for cycle in cycles:
        if all(v is not None for v in out.values()):
            break
        cls = classify_cycle(D, cycle, model)
        for kind in out:
            if out[kind] is None and cls.has(kind):
                out[kind] = _witness_for(D, cycle, kind, model)
    return out


class _PathBudget:
    __slots__ = ("left",)

    def __init__(self, cap: int):
        self.left = cap

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise OracleCapError("path enumeration cap exceeded; oracle refuses")


def _forward_paths(D, source, model, budget, on_arrival):
    # every simple path out of source with its greedy (earliest) labeling;
    # on_arrival(vertex, arrival) fires once per path prefix
    path_set = {source}

    def go(u, prev):
        for w, times in D.out_arcs(u):
            if w in path_set:
                continue
            t = earliest_at_least(times, model.min_next(prev))
            if t is None:
                continue
            budget.spend()
            on_arrival(w, t)
            path_set.add(w)
            go(w, t)
            path_set.remove(w)

    go(source, -math.inf)


def _backward_paths(D, target, model, budget, on_departure):
    # every simple path into target with its greedy (latest) labeling
    path_set = {target}

    def go(w, nxt):
        for u, times in D.in_arcs(w):
            if u in path_set:
                continue
            t = latest_at_most(times, model.max_prev(nxt))
            if t is None:
                continue
            budget.spend()
            on_departure(u, t)
            path_set.add(u)
            go(u, t)
            path_set.remove(u)

    go(target, math.inf)


def oracle_reachability(
    D: TemporalDigraph,
    u: str,
    v: str,
    model: PathModel,
    max_paths: int = DEFAULT_PATH_CAP,
):
    """(EAT, LDT) for one ordered pair, by exhausting all simple paths.

    Earliest arrival scans paths forward taking each label as small as
    possible; latest departure scans them backward taking labels as large
    as possible. Per fixed path both greedy choices are exact, so the
    min/max over all paths is the true optimum. Conventions: (u, u) is
    (0, lifetime); an unreachable pair is (+inf, -inf).
    """
    if u not in D:
        raise ValueError(f"unknown vertex {u!r}")
    if v not in D:
        raise ValueError(f"unknown vertex {v!r}")
    if u == v:
        return (0, D.lifetime)
    eat = math.inf
    ldt = -math.inf

    def note_arrival(w, t):
        nonlocal eat
        if w == v and t < eat:
            eat = t

    def note_departure(w, t):
        nonlocal ldt
        if w == u and t > ldt:
            ldt = t

    _forward_paths(D, u, model, _PathBudget(max_paths), note_arrival)
    _backward_paths(D, v, model, _PathBudget(max_paths), note_departure)
    return (eat, ldt)


def all_pairs_reachability(
    D: TemporalDigraph, model: PathModel, max_paths: int = DEFAULT_PATH_CAP
) -> dict:
    """(EAT, LDT) for every ordered vertex pair, same semantics as per-pair.

    One forward sweep per source covers all earliest arrivals, one backward
    sweep per target covers all latest departures; the path cap applies to
    each sweep separately.
    """
    tau = D.lifetime
    out = {}
    for a in D.vertices:
        for b in D.vertices:
            out[(a, b)] = (0, tau) if a == b else (math.inf, -math.inf)
    for source in D.vertices:
        def note_arrival(w, t, source=source):
            eat, ldt = out[(source, w)]
            if t < eat:
                out[(source, w)] = (t, ldt)

        _forward_paths(D, source, model, _PathBudget(max_paths), note_arrival)
    for target in D.vertices:
        def note_departure(w, t, target=target):
            eat, ldt = out[(w, target)]
            if t > ldt:
                out[(w, target)] = (eat, t)

        _backward_paths(D, target, model, _PathBudget(max_paths), note_departure)
    return out
