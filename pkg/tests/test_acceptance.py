"""Acceptance gate: one test per stated correctness criterion.

Every test prints a single PASS/FAIL line before asserting, so a full run
reads as a checklist. All corpora are seeded and deterministic.
"""

import math
import random
import time
from collections import Counter

import pytest

from tempocycles import (
    CnfFormula,
    CycleKind,
    BudgetExceeded,
    DecisionStatus,
    PathModel,
    SatMode,
    Temporization,
    all_pairs_reachability,
    auxiliary_cycle,
    bounded_lifetime_search,
    check_alternation_conditions,
    check_witness,
    classify_cycle,
    detect_all_kinds,
    detect_simple,
    detect_strong,
    detect_weak,
    earliest_arrival,
    girth,
    greedy_path_times,
    l_circ,
    latest_departure,
    lexicographic_temporization,
    nae_to_simple_instance,
    nae_to_weak_instance,
    oracle_detect,
    sat_to_strong_instance,
    solve_formula,
    strict_acyclic_temporization,
    strong_acyclic_temporization,
)
from tempocycles.randgen import random_digraph, random_temporal_digraph

NS = PathModel.NONSTRICT
ST = PathModel.STRICT
KINDS = (CycleKind.SIMPLE, CycleKind.WEAK, CycleKind.STRONG)


def report(name, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    print(f"\n[{'PASS' if ok else 'FAIL'}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def F(*clauses):
    num = max(abs(lit) for clause in clauses for lit in clause)
    return CnfFormula(num, clauses)


# --- shared corpora ---------------------------------------------------------------


@pytest.fixture(scope="module")
def corpus():
    graphs = {}
    for model, seed in ((NS, 20260801), (ST, 20260802)):
        rng = random.Random(seed)
        graphs[model] = [
            random_temporal_digraph(rng, max_vertices=7, max_arcs=14, max_label=4)
            for _ in range(500)
        ]
    return graphs


@pytest.fixture(scope="module")
def detection_runs(corpus):
    rows = []
    t0 = time.perf_counter()
    for model, graphs in corpus.items():
        for g in graphs:
            reference = detect_all_kinds(g, model)
            witnesses = {
                CycleKind.SIMPLE: detect_simple(g, model),
                CycleKind.WEAK: detect_weak(g, model),
            }
            strong, stats = detect_strong(g, model)
            witnesses[CycleKind.STRONG] = strong
            rows.append((g, model, reference, witnesses, stats))
    elapsed = time.perf_counter() - t0
    return rows, elapsed


def test_criterion_01_detection_matches_oracle(detection_runs):
    rows, elapsed = detection_runs
    mismatches = sum(
        1
        for _, _, reference, witnesses, _ in rows
        for kind in KINDS
        if (witnesses[kind] is None) != (reference[kind] is None)
    )
    report(
        "criterion 1: detector booleans equal the oracle on 500 graphs per model",
        mismatches == 0 and elapsed < 60.0,
        f"{len(rows)} runs, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_criterion_02_witnesses_are_sound(detection_runs):
    rows, _ = detection_runs
    checked = bad = 0
    for g, model, reference, witnesses, _ in rows:
        for kind in KINDS:
            for witness in (witnesses[kind], reference[kind]):
                if witness is None:
                    continue
                checked += 1
                if check_witness(g, witness, model):
                    bad += 1
                elif not classify_cycle(g, witness.cycle, model).has(kind):
                    bad += 1
    report(
        "criterion 2: every emitted witness passes the checker and classifier",
        bad == 0 and checked > 0,
        f"{checked} witnesses",
    )


def test_criterion_03_reachability_matches_oracle(corpus):
    graphs = mismatches = 0
    for model, batch in corpus.items():
        for g in batch:
            graphs += 1
            pairs = all_pairs_reachability(g, model)
            for s in g.vertices:
                res = earliest_arrival(g, s, model)
                for v in g.vertices:
                    if res.value(v) != pairs[(s, v)][0]:
                        mismatches += 1
            for t in g.vertices:
                res = latest_departure(g, t, model)
                for u in g.vertices:
                    if res.value(u) != pairs[(u, t)][1]:
                        mismatches += 1
    report(
        "criterion 3: arrival and departure tables equal the oracle on all pairs",
        mismatches == 0,
        f"{graphs} graphs",
    )


def count_closed_paths(g, rotation):
    # number of non-decreasing label choices along the fixed arc sequence
    counts = {-math.inf: 1}
    for u, w in zip(rotation, rotation[1:]):
        nxt = Counter()
        for last, ways in counts.items():
            for t in g.times(u, w):
                if t >= last:
                    nxt[t] += ways
        counts = nxt
    return sum(counts.values())


def test_criterion_04_auxiliary_cycle_properties():
    problems = []
    for n in range(3, 9):
        g = auxiliary_cycle(n)
        cycle = tuple(f"v{k}" for k in range(n))
        temporal_arcs = {}
        for i in range(n):
            rotation = [f"v{(i + k) % n}" for k in range(n)] + [f"v{i}"]
            if count_closed_paths(g, rotation) != 1:
                problems.append(f"n={n} v{i}: closed path count != 1")
                continue
            times = greedy_path_times(g, rotation, NS)
            if i <= n - 2 and times != l_circ(n, i):
                problems.append(f"n={n} v{i}: labels differ from the closed-form set")
            temporal_arcs[i] = {
                (a, t) for a, t in zip(zip(rotation, rotation[1:]), times)
            }
        for i in range(n - 1):
            for k in range(i + 1, n - 1):
                if temporal_arcs.get(i, set()) & temporal_arcs.get(k, set()):
                    problems.append(f"n={n}: paths of v{i} and v{k} share a temporal arc")
        if not classify_cycle(g, cycle, NS).is_strong:
            problems.append(f"n={n}: not classified strong")
    report(
        "criterion 4: auxiliary cycles have unique, arc-disjoint closed paths",
        not problems,
        "; ".join(problems) or "n in 3..8",
    )


CURATED = [
    F((1, 2, 3)),
    F((-1, -2, -3)),
    F((1, -2, 3)),
    F((1, -1, 2)),
    F((1, 1, 1)),
    F((-3, -3, -3)),
    F((1, 1, 1), (-1, -1, -1)),
    F((2, 2, 2), (-2, -2, -2)),
    F((1, -1, 1), (-1, 1, -1)),
    F((1, 2, 3), (-1, -2, -3)),
    F((1, 2, 3), (1, 2, 3)),
    F((1, 2, 3), (3, 2, 1)),
    F((1, -2, 3), (-1, 2, -3)),
    F((1, 1, 2), (-1, -1, -2)),
    F((1, 1, -2), (-1, -1, 2)),
    F((3, 3, 3)),
    F((1, 2, 2), (-2, -2, -2)),
    F((-1, -1, 2), (1, 1, 1)),
    F((-1, -1, -1), (-1, -1, -1)),
    F((1, 1, 1), (-1, -1, 1)),
    F((2, -3, 2), (3, 3, 3)),
    F((-2, 1, -2), (2, 2, 2)),
]


@pytest.fixture(scope="module")
def satisfiability_runs():
    rows = []
    fpt_stats = []
    skipped = 0
    for formula in CURATED:
        sat = solve_formula(formula, SatMode.SAT)
        instance = sat_to_strong_instance(formula)
        oracle_found = oracle_detect(instance.graph, CycleKind.STRONG, NS) is not None
        fpt_found = None
        if len(formula.clauses) == 1:
            try:
                witness, stats = detect_strong(instance.graph, NS, budget_seconds=300.0)
                fpt_found = witness is not None
                fpt_stats.append(stats)
            except BudgetExceeded as exc:
                skipped += 1
                print(
                    f"skipped {formula.clauses}: budget exceeded, "
                    f"blocking store held {exc.stats.total_blocking_size} entries"
                )
        rows.append((formula, sat is not None, oracle_found, fpt_found))
    return rows, fpt_stats, skipped


def test_criterion_05_strong_instance_equivalence(satisfiability_runs):
    rows, _, skipped = satisfiability_runs
    bad = [
        formula.clauses
        for formula, sat, oracle_found, fpt_found in rows
        if sat != oracle_found or (fpt_found is not None and fpt_found != sat)
    ]
    fpt_runs = sum(1 for _, _, _, fpt in rows if fpt is not None)
    report(
        "criterion 5: satisfiability matches strong-cycle existence on curated formulas",
        len(rows) >= 20 and not bad,
        f"{len(rows)} formulas, {fpt_runs} search runs, {skipped} skipped; bad={bad}",
    )


NAE_SINGLE = [F(clause) for clause in [
    (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
]]

NAE_DOUBLE = [
    F((1, 2, 3), (1, 2, 3)),
    F((1, 2, 3), (2, 3, 4)),
    F((1, 2, 3), (1, 2, 4)),
    F((1, 2, 3), (4, 5, 6)),
    F((1, 2, 3), (3, 2, 1)),
    F((1, 2, 3), (2, 1, 4)),
    F((1, 3, 2), (2, 4, 1)),
    F((2, 3, 4), (1, 2, 3)),
    F((1, 2, 4), (2, 3, 4)),
    F((1, 4, 2), (3, 4, 1)),
    F((1, 2, 3), (1, 3, 4)),
    F((2, 4, 6), (1, 3, 5)),
]


@pytest.fixture(scope="module")
def grid_search_runs():
    rows = []
    for formula in NAE_SINGLE + NAE_DOUBLE:
        nae = solve_formula(formula, SatMode.NAE_SAT) is not None
        for kind, build in (
            (CycleKind.SIMPLE, nae_to_simple_instance),
            (CycleKind.WEAK, nae_to_weak_instance),
        ):
            graph = build(formula).graph
            decision = bounded_lifetime_search(graph, kind, 2)
            rows.append((formula, kind, graph, nae, decision))
    return rows


def test_criterion_06_grid_instance_equivalence(grid_search_runs):
    bad = [
        (formula.clauses, kind.value, decision.status.value)
        for formula, kind, _, nae, decision in grid_search_runs
        if decision.status is DecisionStatus.ABORTED or decision.is_yes != nae
    ]
    report(
        "criterion 6: not-all-equal satisfiability matches the lifetime-2 search",
        len(grid_search_runs) >= 36 and not bad,
        f"{len(grid_search_runs)} searches; bad={bad}",
    )


def test_criterion_07_rank_labeling_blocks_long_paths():
    rng = random.Random(20260807)
    path_violations = cycle_violations = 0
    for _ in range(200):
        d = random_digraph(rng, max_vertices=8)
        applied = lexicographic_temporization(d).apply(d)
        for a in d.vertices:
            for b in d.out_neighbors(a):
                t1 = applied.times(a, b)[0]
                for c in d.out_neighbors(b):
                    if c in (a, b):
                        continue
                    t2 = applied.times(b, c)[0]
                    if t1 > t2:
                        continue
                    for e in d.out_neighbors(c):
                        if e in (a, b, c):
                            continue
                        if t2 <= applied.times(c, e)[0]:
                            path_violations += 1
        g = girth(d)
        if g >= 3 and oracle_detect(applied, CycleKind.SIMPLE, NS) is not None:
            cycle_violations += 1
        if g >= 5 and oracle_detect(applied, CycleKind.WEAK, NS) is not None:
            cycle_violations += 1
    report(
        "criterion 7: rank labelings admit no 3-arc path and avoid the girth-gated kinds",
        path_violations == 0 and cycle_violations == 0,
        f"200 graphs, {path_violations} long paths, {cycle_violations} cycles",
    )


def test_criterion_08_two_level_labeling_avoids_strong_cycles():
    rng = random.Random(20260808)
    violations = 0
    for _ in range(200):
        d = random_digraph(rng, max_vertices=8)
        t = strong_acyclic_temporization(d)
        if t.lifetime > 2:
            violations += 1
        elif oracle_detect(t.apply(d), CycleKind.STRONG, NS) is not None:
            violations += 1
    report(
        "criterion 8: two-level labelings have lifetime 2 and no strong cycle",
        violations == 0,
        "200 graphs",
    )


def test_criterion_09_accepted_searches_satisfy_alternation(grid_search_runs):
    checked = violated = 0
    for _, kind, graph, _, decision in grid_search_runs:
        if decision.is_yes:
            checked += 1
            if check_alternation_conditions(graph, decision.temporization, kind):
                violated += 1
    rng = random.Random(20260809)
    for _ in range(40):
        d = random_digraph(rng, max_vertices=5)
        for kind in (CycleKind.SIMPLE, CycleKind.WEAK):
            decision = bounded_lifetime_search(d, kind, 2)
            if decision.is_yes:
                checked += 1
                if check_alternation_conditions(d, decision.temporization, kind):
                    violated += 1
    report(
        "criterion 9: every lifetime-2 acceptance meets the alternation conditions",
        checked > 0 and violated == 0,
        f"{checked} accepted searches",
    )


def test_criterion_10_search_never_repeats_a_state(detection_runs, satisfiability_runs):
    rows, _ = detection_runs
    _, fpt_stats, _ = satisfiability_runs
    all_stats = [stats for *_, stats in rows] + fpt_stats
    roots = repeats = 0
    for stats in all_stats:
        for root in stats.roots:
            if not root.completed:
                continue
            roots += 1
            for arc, count in root.extend_counts.items():
                if count > root.distinct_count(arc):
                    repeats += 1
    report(
        "criterion 10: per-arc explorations never exceed distinct timetable pairs",
        roots > 0 and repeats == 0,
        f"{roots} completed root searches",
    )


def test_criterion_11_strict_decisions_match_oracle():
    rng = random.Random(20260811)
    violations = 0
    for _ in range(100):
        d = random_digraph(rng, max_vertices=8)
        all_ones = {arc: (1,) for arc in d.arcs}
        for kind in KINDS:
            decision = strict_acyclic_temporization(d, kind)
            if kind is CycleKind.WEAK and decision.is_yes == d.has_digon():
                violations += 1
                continue
            if decision.is_yes:
                applied = decision.temporization.apply(d)
                if oracle_detect(applied, kind, ST) is not None:
                    violations += 1
            else:
                applied = Temporization(all_ones).apply(d)
                if oracle_detect(applied, CycleKind.WEAK, ST) is None:
                    violations += 1
    report(
        "criterion 11: strict-model decisions agree with the oracle",
        violations == 0,
        "100 graphs, 3 kinds each",
    )
