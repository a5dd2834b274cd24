"""Temporal digraph data model, serialization, and static-graph utilities.

A temporal digraph is a simple digraph together with a non-empty set of
integer time labels on every arc.  A temporal path traverses arcs at
non-decreasing times (non-strict model) or strictly increasing times
(strict model).  This module holds the graph types, the line-based text
format, directed girth, elementary-cycle enumeration, walk simplification,
and the structural validity checkers for cycle witnesses.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

import networkx as nx

__all__ = [
    "GraphFormatError",
    "PathModel",
    "CycleKind",
    "Digraph",
    "TemporalDigraph",
    "PathWitness",
    "CycleWitness",
    "parse_temporal_digraph",
    "parse_digraph",
    "girth",
    "enumerate_cycles",
    "simplify_walk",
    "check_temporal_walk",
    "check_temporal_path",
    "check_witness",
    "canonical_cycle",
    "cycle_arcs",
    "greedy_path_times",
    "greedy_departure_times",
    "earliest_at_least",
    "earliest_between",
    "latest_at_most",
]

DEFAULT_CYCLE_CAP = 10_000


class GraphFormatError(ValueError):
    """Malformed graph or temporization text, reported with a line number."""


class PathModel(enum.Enum):
    """Time monotonicity required along a temporal path."""

    NONSTRICT = "nonstrict"
    STRICT = "strict"

    def admits(self, prev: float, t: int) -> bool:
        """Whether an arc at time t may follow an arrival at time prev."""
        if self is PathModel.NONSTRICT:
            return t >= prev
        return t > prev

    def min_next(self, prev: float) -> float:
        """Smallest time usable after an arrival at time prev."""
        if self is PathModel.NONSTRICT:
            return prev
        return prev + 1

    def max_prev(self, nxt: float) -> float:
        """Largest time usable before a departure at time nxt."""
        if self is PathModel.NONSTRICT:
            return nxt
        return nxt - 1


class CycleKind(enum.Enum):
    SIMPLE = "simple"
    WEAK = "weak"
    STRONG = "strong"


# --- sorted label-tuple helpers ---------------------------------------------


def earliest_at_least(times: tuple[int, ...], bound: float) -> int | None:
    """Smallest label >= bound, or None."""
    i = bisect_left(times, bound)
    return times[i] if i < len(times) else None


def earliest_between(times: tuple[int, ...], lo: float, hi: float) -> int | None:
    """Smallest label in [lo, hi], or None."""
    i = bisect_left(times, lo)
    if i < len(times) and times[i] <= hi:
        return times[i]
    return None


def latest_at_most(times: tuple[int, ...], bound: float) -> int | None:
    """Largest label <= bound, or None."""
    i = bisect_right(times, bound)
    return times[i - 1] if i > 0 else None


# --- graph types -------------------------------------------------------------


def _check_vertex_name(name: str) -> str:
    if not isinstance(name, str) or not name or any(c.isspace() for c in name):
        raise ValueError(f"invalid vertex name {name!r}")
    if name.startswith("#"):
        raise ValueError(f"vertex name may not start with '#': {name!r}")
    return name


class Digraph:
    """A simple static digraph: ordered vertices, ordered arcs, no labels.

    Immutable after construction.  No self-loops, no parallel arcs.
    """

    __slots__ = ("vertices", "arcs", "_out", "_in", "_arc_set")

    def __init__(self, arcs, vertices=()):
        order: dict[str, None] = {}
        for v in vertices:
            order.setdefault(_check_vertex_name(v), None)
        seen: set[tuple[str, str]] = set()
        arc_list: list[tuple[str, str]] = []
        for tail, head in arcs:
            _check_vertex_name(tail)
            _check_vertex_name(head)
            if tail == head:
                raise ValueError(f"self-loop at {tail!r}")
            if (tail, head) in seen:
                raise ValueError(f"duplicate arc {tail!r} -> {head!r}")
            seen.add((tail, head))
            order.setdefault(tail, None)
            order.setdefault(head, None)
            arc_list.append((tail, head))
        self.vertices: tuple[str, ...] = tuple(order)
        self.arcs: tuple[tuple[str, str], ...] = tuple(arc_list)
        self._arc_set = seen
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        inn: dict[str, list[str]] = {v: [] for v in self.vertices}
        for tail, head in arc_list:
            out[tail].append(head)
            inn[head].append(tail)
        self._out = {v: tuple(h) for v, h in out.items()}
        self._in = {v: tuple(t) for v, t in inn.items()}

    def __contains__(self, vertex: str) -> bool:
        return vertex in self._out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph({len(self.vertices)} vertices, {len(self.arcs)} arcs)"

    def out_neighbors(self, vertex: str) -> tuple[str, ...]:
        return self._out[vertex]

    def in_neighbors(self, vertex: str) -> tuple[str, ...]:
        return self._in[vertex]

    def has_arc(self, tail: str, head: str) -> bool:
        return (tail, head) in self._arc_set

    def has_digon(self) -> bool:
        return any((head, tail) in self._arc_set for tail, head in self.arcs)

    def to_text(self) -> str:
        lines = [f"v {v}" for v in self.vertices]
        lines += [f"a {t} {h}" for t, h in self.arcs]
        return "\n".join(lines) + "\n" if lines else ""


class TemporalDigraph:
    """A simple digraph with a non-empty set of integer time labels per arc.

    Arcs are (tail, head, times) with times a strictly increasing tuple of
    integers >= 0.  The lifetime is the maximum label present (0 when there
    are no arcs).  Instances are immutable after construction and safe to
    share; all operations on them are pure.
    """

    __slots__ = ("vertices", "arcs", "lifetime", "_out", "_in", "_times", "_by_label")

    def __init__(self, arcs, vertices=()):
        order: dict[str, None] = {}
        for v in vertices:
            order.setdefault(_check_vertex_name(v), None)
        times_map: dict[tuple[str, str], tuple[int, ...]] = {}
        arc_list: list[tuple[str, str, tuple[int, ...]]] = []
        for tail, head, times in arcs:
            _check_vertex_name(tail)
            _check_vertex_name(head)
            if tail == head:
                raise ValueError(f"self-loop at {tail!r}")
            if (tail, head) in times_map:
                raise ValueError(f"duplicate arc {tail!r} -> {head!r}")
            labels = tuple(sorted(set(times)))
            if not labels:
                raise ValueError(f"empty time set on arc {tail!r} -> {head!r}")
            if any(not isinstance(t, int) or isinstance(t, bool) or t < 0 for t in labels):
                raise ValueError(
                    f"time labels must be integers >= 0 on arc {tail!r} -> {head!r}"
                )
            times_map[(tail, head)] = labels
            order.setdefault(tail, None)
            order.setdefault(head, None)
            arc_list.append((tail, head, labels))
        self.vertices: tuple[str, ...] = tuple(order)
        self.arcs: tuple[tuple[str, str, tuple[int, ...]], ...] = tuple(arc_list)
        self.lifetime: int = max((a[2][-1] for a in arc_list), default=0)
        self._times = times_map
        out: dict[str, list[tuple[str, tuple[int, ...]]]] = {v: [] for v in self.vertices}
        inn: dict[str, list[tuple[str, tuple[int, ...]]]] = {v: [] for v in self.vertices}
        for tail, head, labels in arc_list:
            out[tail].append((head, labels))
            inn[head].append((tail, labels))
        self._out = {v: tuple(x) for v, x in out.items()}
        self._in = {v: tuple(x) for v, x in inn.items()}
        self._by_label = None

    def __contains__(self, vertex: str) -> bool:
        return vertex in self._out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TemporalDigraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return (
            f"TemporalDigraph({len(self.vertices)} vertices, "
            f"{len(self.arcs)} arcs, lifetime={self.lifetime})"
        )

    def out_arcs(self, vertex: str) -> tuple[tuple[str, tuple[int, ...]], ...]:
        """(head, times) pairs leaving vertex, in graph arc order."""
        return self._out[vertex]

    def in_arcs(self, vertex: str) -> tuple[tuple[str, tuple[int, ...]], ...]:
        """(tail, times) pairs entering vertex, in graph arc order."""
        return self._in[vertex]

    def has_arc(self, tail: str, head: str) -> bool:
        return (tail, head) in self._times

    def times(self, tail: str, head: str) -> tuple[int, ...]:
        return self._times[(tail, head)]

    def arcs_by_label(self) -> tuple[tuple[int, tuple[tuple[str, str], ...]], ...]:
        """All (label, arcs active at that label) groups, labels ascending."""
        if self._by_label is None:
            groups: dict[int, list[tuple[str, str]]] = {}
            for tail, head, labels in self.arcs:
                for t in labels:
                    groups.setdefault(t, []).append((tail, head))
            self._by_label = tuple((t, tuple(groups[t])) for t in sorted(groups))
        return self._by_label

    def underlying(self) -> Digraph:
        return Digraph(((t, h) for t, h, _ in self.arcs), self.vertices)

    def induced(self, keep) -> "TemporalDigraph":
        """Subgraph induced by a vertex subset, preserving order and labels."""
        keep = set(keep)
        return TemporalDigraph(
            (a for a in self.arcs if a[0] in keep and a[1] in keep),
            (v for v in self.vertices if v in keep),
        )

    def to_text(self) -> str:
        """Serialize to the line-based text format; round-trips exactly."""
        lines = [f"v {v}" for v in self.vertices]
        for tail, head, labels in self.arcs:
            lines.append(f"a {tail} {head} {','.join(map(str, labels))}")
        return "\n".join(lines) + "\n" if lines else ""


# --- text format --------------------------------------------------------------


def _parse_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_temporal_digraph(text: str) -> TemporalDigraph:
    """Parse the temporal digraph text format.

    Lines: `# comment`, `v <name>` (declares a vertex), and
    `a <tail> <head> <t1>,<t2>,...` with strictly increasing, non-negative
    integer labels.  Vertices are implicitly declared by arcs.  Errors carry
    the offending line number.
    """
    vertices: dict[str, None] = {}
    arcs: list[tuple[str, str, tuple[int, ...]]] = []
    seen: set[tuple[str, str]] = set()
    for lineno, fields in _parse_lines(text):
        kind = fields[0]
        if kind == "v":
            if len(fields) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'v <name>'")
            vertices.setdefault(fields[1], None)
        elif kind == "a":
            if len(fields) != 4:
                raise GraphFormatError(
                    f"line {lineno}: expected 'a <tail> <head> <t1>,<t2>,...'"
                )
            tail, head, label_field = fields[1], fields[2], fields[3]
            if tail == head:
                raise GraphFormatError(f"line {lineno}: self-loop at {tail!r}")
            if (tail, head) in seen:
                raise GraphFormatError(
                    f"line {lineno}: duplicate arc {tail!r} -> {head!r}"
                )
            parts = label_field.split(",")
            if parts == [""]:
                raise GraphFormatError(f"line {lineno}: empty time set")
            labels = []
            for p in parts:
                try:
                    t = int(p)
                except ValueError:
                    raise GraphFormatError(
                        f"line {lineno}: bad time label {p!r}"
                    ) from None
                if t < 0:
                    raise GraphFormatError(f"line {lineno}: negative time label {t}")
                labels.append(t)
            if any(b <= a for a, b in zip(labels, labels[1:])):
                raise GraphFormatError(
                    f"line {lineno}: labels must be strictly increasing"
                )
            seen.add((tail, head))
            vertices.setdefault(tail, None)
            vertices.setdefault(head, None)
            arcs.append((tail, head, tuple(labels)))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {kind!r}")
    try:
        return TemporalDigraph(arcs, vertices)
    except ValueError as exc:  # vertex-name problems surface without a line
        raise GraphFormatError(str(exc)) from None


def parse_digraph(text: str) -> Digraph:
    """Parse a static digraph: `a <tail> <head>` lines, labels ignored if present."""
    vertices: dict[str, None] = {}
    arcs: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for lineno, fields in _parse_lines(text):
        kind = fields[0]
        if kind == "v":
            if len(fields) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'v <name>'")
            vertices.setdefault(fields[1], None)
        elif kind == "a":
            if len(fields) not in (3, 4):
                raise GraphFormatError(f"line {lineno}: expected 'a <tail> <head>'")
            tail, head = fields[1], fields[2]
            if tail == head:
                raise GraphFormatError(f"line {lineno}: self-loop at {tail!r}")
            if (tail, head) in seen:
                raise GraphFormatError(
                    f"line {lineno}: duplicate arc {tail!r} -> {head!r}"
                )
            seen.add((tail, head))
            vertices.setdefault(tail, None)
            vertices.setdefault(head, None)
            arcs.append((tail, head))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {kind!r}")
    try:
        return Digraph(arcs, vertices)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _as_static(graph) -> Digraph:
    if isinstance(graph, TemporalDigraph):
        return graph.underlying()
    return graph


# --- static utilities ----------------------------------------------------------


def girth(graph) -> int | float:
    """Length of a shortest directed cycle; math.inf for acyclic digraphs.

    Accepts a Digraph or a TemporalDigraph (labels are ignored).  Implemented
    as one BFS per vertex, independent of the cycle enumerator so the two can
    cross-check each other.
    """
    d = _as_static(graph)
    best = math.inf
    for s in d.vertices:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                du = dist[u]
                if du + 1 >= best:
                    continue
                for w in d.out_neighbors(u):
                    if w == s:
                        best = min(best, du + 1)
                    elif w not in dist:
                        dist[w] = du + 1
                        nxt.append(w)
            frontier = nxt
    return best


def canonical_cycle(cycle) -> tuple[str, ...]:
    """Rotate a cycle's vertex sequence so its minimum vertex comes first."""
    cycle = tuple(cycle)
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def cycle_arcs(cycle) -> tuple[tuple[str, str], ...]:
    """The arc sequence around a cycle, wrap-around included."""
    cycle = tuple(cycle)
    return tuple(
        (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    )


def enumerate_cycles(graph, max_cycles: int = DEFAULT_CYCLE_CAP):
    """All directed cycles of the underlying digraph, up to rotation.

    Returns (cycles, truncated): cycles are vertex tuples in canonical
    rotation, sorted by length then lexicographically; truncated flags that
    max_cycles was hit and the listing is incomplete.
    """
    d = _as_static(graph)
    g = nx.DiGraph()
    g.add_nodes_from(d.vertices)
    g.add_edges_from(d.arcs)
    found: list[tuple[str, ...]] = []
    truncated = False
    for cyc in nx.simple_cycles(g):
        if len(found) >= max_cycles:
            truncated = True
            break
        found.append(canonical_cycle(cyc))
    found.sort(key=lambda c: (len(c), c))
    return tuple(found), truncated


# --- walks, paths, witnesses ----------------------------------------------------


def greedy_path_times(D: TemporalDigraph, vertices, model: PathModel):
    """Minimum-label temporal realization of a fixed walk, or None.

    Picks the smallest usable label on each arc in turn. For a fixed arc
    sequence this succeeds whenever any label choice does: replacing a valid
    choice by the greedy one never tightens a later constraint.
    """
    prev = -math.inf
    out = []
    vertices = tuple(vertices)
    for u, w in zip(vertices, vertices[1:]):
        if not D.has_arc(u, w):
            raise ValueError(f"missing arc {u!r} -> {w!r}")
        t = earliest_at_least(D.times(u, w), model.min_next(prev))
        if t is None:
            return None
        out.append(t)
        prev = t
    return tuple(out)


def greedy_departure_times(D: TemporalDigraph, vertices, model: PathModel):
    """Latest-departure realization of a fixed walk, or None.

    Mirror of greedy_path_times: labels are chosen largest-first scanning
    from the final arc backward, which maximizes the first-arc label.
    """
    nxt = math.inf
    out = []
    vertices = tuple(vertices)
    for u, w in zip(reversed(vertices[:-1]), reversed(vertices[1:])):
        if not D.has_arc(u, w):
            raise ValueError(f"missing arc {u!r} -> {w!r}")
        t = latest_at_most(D.times(u, w), model.max_prev(nxt))
        if t is None:
            return None
        out.append(t)
        nxt = t
    out.reverse()
    return tuple(out)


def check_temporal_walk(
    D: TemporalDigraph, vertices, times, model: PathModel
) -> list[str]:
    """Violations of temporal-walk validity (empty list when valid)."""
    vertices = tuple(vertices)
    times = tuple(times)
    problems = []
    if len(vertices) != len(times) + 1:
        return [f"{len(vertices)} vertices need {len(vertices) - 1} times, got {len(times)}"]
    if not vertices:
        return ["empty walk"]
    for v in vertices:
        if v not in D:
            problems.append(f"unknown vertex {v!r}")
    if problems:
        return problems
    prev = -math.inf
    for (u, w), t in zip(zip(vertices, vertices[1:]), times):
        if not D.has_arc(u, w):
            problems.append(f"missing arc {u!r} -> {w!r}")
            continue
        if t not in D.times(u, w):
            problems.append(f"time {t} not on arc {u!r} -> {w!r}")
        if not model.admits(prev, t):
            problems.append(f"time {t} after {prev} violates {model.value} order")
        prev = t
    return problems


def check_temporal_path(
    D: TemporalDigraph, vertices, times, model: PathModel, closed: bool = False
) -> list[str]:
    """Violations of temporal-path validity.

    A path's vertices are pairwise distinct; a closed path repeats only its
    endpoint.  Also enforces walk validity (arcs exist, labels on arcs, time
    monotonicity under the model).
    """
    vertices = tuple(vertices)
    problems = check_temporal_walk(D, vertices, times, model)
    if problems:
        return problems
    if closed:
        if len(vertices) < 2 or vertices[0] != vertices[-1]:
            problems.append("closed path must return to its start")
        interior = vertices[:-1]
    else:
        interior = vertices
    if len(set(interior)) != len(interior):
        problems.append("path vertices are not pairwise distinct")
    return problems


def simplify_walk(D: TemporalDigraph, vertices, times, model: PathModel):
    """Excise loops from a temporal walk, yielding a temporal path.

    The result keeps the walk's endpoints and a subsequence of its times, so
    monotonicity is preserved and the arrival never increases.  Closed inputs
    (first vertex equal to last) are rejected; closure is the detectors' job.
    """
    vertices = tuple(vertices)
    times = tuple(times)
    problems = check_temporal_walk(D, vertices, times, model)
    if problems:
        raise ValueError("not a valid temporal walk: " + "; ".join(problems))
    if len(vertices) >= 2 and vertices[0] == vertices[-1]:
        raise ValueError("closed walks cannot be simplified to a path")
    out_v = [vertices[0]]
    out_t: list[int] = []
    first = {vertices[0]: 0}
    for v, t in zip(vertices[1:], times):
        out_v.append(v)
        out_t.append(t)
        if v in first:
            k = first[v]
            for dropped in out_v[k + 1 :]:
                first.pop(dropped, None)
            del out_v[k + 1 :]
            del out_t[k:]
        first[v] = len(out_v) - 1
    return tuple(out_v), tuple(out_t)


@dataclass(frozen=True)
class PathWitness:
    """A temporal path given explicitly: vertex sequence plus arc times."""

    vertices: tuple[str, ...]
    times: tuple[int, ...]

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    def arcs(self) -> tuple[tuple[str, str], ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class CycleWitness:
    """A cycle together with the temporal paths certifying its kind.

    Simple: one closed path whose arcs are exactly the cycle's arcs.
    Weak: an x-to-y path and a y-to-x path partitioning the cycle's arcs.
    Strong: one closed path per cycle vertex, each over the cycle's arcs.
    """

    kind: CycleKind
    cycle: tuple[str, ...]
    paths: tuple[PathWitness, ...]


def _check_cycle_structure(D, cycle) -> list[str]:
    problems = []
    if len(cycle) < 2:
        problems.append("cycle needs at least 2 vertices")
        return problems
    if len(set(cycle)) != len(cycle):
        problems.append("cycle vertices are not pairwise distinct")
    for u, w in cycle_arcs(cycle):
        has = D.has_arc(u, w) if isinstance(D, TemporalDigraph) else (u, w) in set(D.arcs)
        if not has:
            problems.append(f"missing cycle arc {u!r} -> {w!r}")
    return problems


def check_witness(D: TemporalDigraph, witness: CycleWitness, model: PathModel) -> list[str]:
    """Violations of the CycleWitness invariants (empty list when valid)."""
    problems = _check_cycle_structure(D, witness.cycle)
    if problems:
        return problems
    c_arcs = set(cycle_arcs(witness.cycle))
    if witness.kind is CycleKind.SIMPLE:
        if len(witness.paths) != 1:
            return ["simple witness needs exactly one path"]
        p = witness.paths[0]
        problems += check_temporal_path(D, p.vertices, p.times, model, closed=True)
        if set(p.arcs()) != c_arcs or len(p.times) != len(c_arcs):
            problems.append("path arcs do not equal the cycle arcs")
    elif witness.kind is CycleKind.WEAK:
        if len(witness.paths) != 2:
            return ["weak witness needs exactly two paths"]
        p, q = witness.paths
        problems += check_temporal_path(D, p.vertices, p.times, model)
        problems += check_temporal_path(D, q.vertices, q.times, model)
        if p.start == p.end or q.start == q.end:
            problems.append("weak witness paths must join two distinct vertices")
        if p.start != q.end or p.end != q.start:
            problems.append("weak witness paths must join the same pair in both directions")
        pa, qa = set(p.arcs()), set(q.arcs())
        if pa & qa:
            problems.append("weak witness paths share an arc")
        if pa | qa != c_arcs or len(pa) + len(qa) != len(c_arcs):
            problems.append("weak witness paths do not partition the cycle arcs")
    elif witness.kind is CycleKind.STRONG:
        if len(witness.paths) != len(witness.cycle):
            return ["strong witness needs one closed path per cycle vertex"]
        starts = set()
        for p in witness.paths:
            problems += check_temporal_path(D, p.vertices, p.times, model, closed=True)
            starts.add(p.start)
            if set(p.arcs()) != c_arcs or len(p.times) != len(c_arcs):
                problems.append(f"closed path at {p.start!r} does not cover the cycle arcs")
        if starts != set(witness.cycle):
            problems.append("strong witness paths do not cover every cycle vertex")
    else:
        problems.append(f"unknown witness kind {witness.kind!r}")
    return problems
