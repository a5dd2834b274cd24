"""Earliest-arrival and latest-departure computation with witnesses.

Both directions process arcs grouped by label: ascending for arrivals,
descending for departures. Under the non-strict model one label group is
relaxed to a fixpoint, because several arcs can chain at the same time;
the strict model needs a single pass per group. Predecessor (successor)
links record one improving arc per vertex, from which a simple temporal
path achieving the reported value is rebuilt on demand.
"""

from __future__ import annotations

import math

from .core import (
    PathModel,
    PathWitness,
    TemporalDigraph,
    simplify_walk,
)

__all__ = ["ReachResult", "earliest_arrival", "latest_departure"]


class ReachResult:
    """Arrival or departure values from one anchor vertex, plus witnesses.

    mode "eat": value(v) is the earliest arrival of a temporal path from
    the anchor to v, 0 at the anchor itself, +inf when unreachable.
    mode "ldt": value(v) is the latest first-arc label of a temporal path
    from v to the anchor, the lifetime at the anchor, -inf when unreachable.
    """

    __slots__ = ("mode", "anchor", "model", "lifetime", "_graph", "_values", "_links")

    def __init__(self, mode, anchor, model, graph, values, links):
        self.mode = mode
        self.anchor = anchor
        self.model = model
        self.lifetime = graph.lifetime
        self._graph = graph
        self._values = values
        self._links = links

    def value(self, vertex: str):
        if vertex == self.anchor:
            return 0 if self.mode == "eat" else self.lifetime
        return self._values[vertex]

    def reachable(self, vertex: str) -> bool:
        return vertex == self.anchor or math.isfinite(self._values[vertex])

    def witness(self, vertex: str):
        """A simple temporal path realizing value(vertex), or None.

        For the anchor itself the witness is the zero-arc path. The link
        chain is already loop-free; it still goes through the walk
        simplifier, which validates it and is the identity here.
        """
        if vertex == self.anchor:
            return PathWitness((vertex,), ())
        if not self.reachable(vertex):
            return None
        hops = []
        at = vertex
        while at != self.anchor:
            other, t = self._links[at]
            hops.append((at, t))
            at = other
        if self.mode == "eat":
            vertices = [self.anchor] + [v for v, _ in reversed(hops)]
            times = [t for _, t in reversed(hops)]
        else:
            vertices = [v for v, _ in hops] + [self.anchor]
            times = [t for _, t in hops]
        vs, ts = simplify_walk(self._graph, vertices, times, self.model)
        return PathWitness(vs, ts)

    def as_dict(self) -> dict:
        return {v: self.value(v) for v in self._graph.vertices}


def earliest_arrival(
    D: TemporalDigraph,
    source: str,
    model: PathModel,
    min_departure: int | None = None,
) -> ReachResult:
    """Minimum arrival time of a temporal path from source to every vertex.

    min_departure, when given, restricts the labels usable on arcs leaving
    the source; since temporal paths never revisit their start, those are
    exactly the first arcs. The source itself is held at a -infinity
    readiness internally so a first arc may use any label, including 0,
    under either model; its reported value is 0 by convention.
    """
    if source not in D:
        raise ValueError(f"unknown vertex {source!r}")
    arrival = {v: math.inf for v in D.vertices}
    arrival[source] = -math.inf
    pred: dict[str, tuple[str, int]] = {}
    for t, arcs in D.arcs_by_label():
        while True:
            changed = False
            for u, w in arcs:
                if u == source and min_departure is not None and t < min_departure:
                    continue
                if model.admits(arrival[u], t) and t < arrival[w]:
                    arrival[w] = t
                    pred[w] = (u, t)
                    changed = True
            if not changed or model is PathModel.STRICT:
                break
    return ReachResult("eat", source, model, D, arrival, pred)


def latest_departure(D: TemporalDigraph, target: str, model: PathModel) -> ReachResult:
    """Maximum first-arc label of a temporal path from every vertex to target.

    Mirror image of earliest_arrival: labels descend, and the target is held
    at +infinity readiness so the final arc may use any label; its reported
    value is the lifetime by convention.
    """
    if target not in D:
        raise ValueError(f"unknown vertex {target!r}")
    departure = {v: -math.inf for v in D.vertices}
    departure[target] = math.inf
    succ: dict[str, tuple[str, int]] = {}
    for t, arcs in reversed(D.arcs_by_label()):
        while True:
            changed = False
            for u, w in arcs:
                if model.admits(t, departure[w]) and t > departure[u]:
                    departure[u] = t
                    succ[u] = (w, t)
                    changed = True
            if not changed or model is PathModel.STRICT:
                break
    return ReachResult("ldt", target, model, D, departure, succ)
