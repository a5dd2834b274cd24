import random

import pytest

from tempocycles import (
    CnfFormatError,
    CnfFormula,
    CycleKind,
    PathModel,
    SatMode,
    assignment_to_strong_cycle,
    assignment_to_temporization,
    auxiliary_cycle,
    enumerate_cycles,
    girth,
    greedy_path_times,
    l_circ,
    nae_to_simple_instance,
    nae_to_weak_instance,
    oracle_detect,
    parse_dimacs,
    sat_to_strong_instance,
    satisfies,
    solve_formula,
)

NS = PathModel.NONSTRICT


def f(*clauses):
    num = max(abs(lit) for clause in clauses for lit in clause)
    return CnfFormula(num, clauses)


# --- formulas ------------------------------------------------------------------


def test_cnf_formula_validation():
    CnfFormula(3, [(1, -2, 3)])
    with pytest.raises(ValueError, match="exactly 3"):
        CnfFormula(3, [(1, 2)])
    with pytest.raises(ValueError, match="bad literal"):
        CnfFormula(3, [(1, 0, 2)])
    with pytest.raises(ValueError, match="bad literal"):
        CnfFormula(3, [(1, True, 2)])
    with pytest.raises(ValueError, match="exceeds"):
        CnfFormula(2, [(1, 2, 3)])
    with pytest.raises(ValueError):
        CnfFormula(-1, [])


def test_is_monotone():
    assert f((1, 2, 3)).is_monotone
    assert not f((1, -2, 3)).is_monotone


def test_dimacs_round_trip():
    formula = f((1, -2, 3), (-1, 2, -3))
    assert parse_dimacs(formula.to_dimacs()) == formula


def test_parse_dimacs():
    text = """c a comment
p cnf 3 2
1 -2 3 0
-1 2
-3 0
% trailer
"""
    formula = parse_dimacs(text)
    assert formula.num_variables == 3
    assert formula.clauses == ((1, -2, 3), (-1, 2, -3))


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("1 2 3 0\n", "header"),
        ("p cnf 3 1\np cnf 3 1\n1 2 3 0\n", "duplicate header"),
        ("p cnf x 1\n1 2 3 0\n", "bad header"),
        ("p dnf 3 1\n1 2 3 0\n", "expected"),
        ("p cnf 3 1\n1 2 3\n", "not terminated"),
        ("p cnf 3 2\n1 2 3 0\n", "announces 2 clauses"),
        ("p cnf 3 1\n1 2 z 0\n", "bad literal"),
        ("p cnf 3 1\n1 2 0\n", "exactly 3"),
        ("p cnf 2 1\n1 2 3 0\n", "exceeds"),
    ],
)
def test_parse_dimacs_errors(text, fragment):
    with pytest.raises(CnfFormatError) as exc:
        parse_dimacs(text)
    assert fragment in str(exc.value)


def test_satisfies_modes():
    formula = f((1, 2, 3))
    assert satisfies(formula, {1: True, 2: True, 3: True}, SatMode.SAT)
    assert not satisfies(formula, {1: True, 2: True, 3: True}, SatMode.NAE_SAT)
    assert satisfies(formula, {1: True, 2: False, 3: False}, SatMode.NAE_SAT)
    with pytest.raises(ValueError, match="cover"):
        satisfies(formula, {1: True}, SatMode.SAT)


def test_solve_formula():
    assert solve_formula(f((1, 2, 3)), SatMode.SAT) == {1: False, 2: False, 3: True}
    assert solve_formula(f((1, 1, 1), (-1, -1, -1)), SatMode.SAT) is None
    assert solve_formula(f((1, 1, 1)), SatMode.NAE_SAT) is None
    nae = solve_formula(f((1, 2, 3)), SatMode.NAE_SAT)
    assert satisfies(f((1, 2, 3)), nae, SatMode.NAE_SAT)


def test_solve_formula_cap():
    with pytest.raises(ValueError, match="capped"):
        solve_formula(CnfFormula(25, []), SatMode.SAT)


def test_nae_is_negation_symmetric():
    rng = random.Random(5)
    for _ in range(40):
        clauses = [
            tuple(rng.choice([1, -1]) * rng.randint(1, 4) for _ in range(3))
            for _ in range(rng.randint(1, 3))
        ]
        formula = CnfFormula(4, clauses)
        flipped = CnfFormula(4, [tuple(-lit for lit in c) for c in clauses])
        assignment = {v: rng.random() < 0.5 for v in range(1, 5)}
        assert satisfies(formula, assignment, SatMode.NAE_SAT) == satisfies(
            flipped, assignment, SatMode.NAE_SAT
        )


# --- auxiliary cycles -------------------------------------------------------------


def test_auxiliary_cycle_order_five():
    g = auxiliary_cycle(5)
    assert g.vertices == ("v0", "v1", "v2", "v3", "v4")
    assert g.times("v4", "v0") == (0, 5, 10, 15, 20)
    assert g.times("v0", "v1") == (4, 9, 14, 19)
    assert g.times("v1", "v2") == (3, 8, 13, 18)
    assert g.times("v2", "v3") == (2, 7, 12, 17)
    assert g.times("v3", "v4") == (1, 6, 11, 16)
    assert g.lifetime == 20


def test_auxiliary_cycle_order_three():
    g = auxiliary_cycle(3)
    assert g.times("v2", "v0") == (0, 3, 6)
    assert g.times("v0", "v1") == (2, 5)
    assert g.times("v1", "v2") == (1, 4)


def test_auxiliary_cycle_bounds():
    assert auxiliary_cycle(2).lifetime == 2
    with pytest.raises(ValueError):
        auxiliary_cycle(1)


def test_l_circ_values():
    assert l_circ(5, 0) == (4, 8, 12, 16, 20)
    assert l_circ(5, 3) == (1, 5, 9, 13, 17)
    assert l_circ(3, 0) == (2, 4, 6)
    assert l_circ(3, 1) == (1, 3, 5)
    with pytest.raises(ValueError):
        l_circ(5, -1)
    with pytest.raises(ValueError):
        l_circ(5, 4)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_l_circ_labels_the_unique_closed_path(n):
    g = auxiliary_cycle(n)
    for i in range(n - 1):
        rotation = [f"v{(i + k) % n}" for k in range(n)] + [f"v{i}"]
        assert greedy_path_times(g, rotation, NS) == l_circ(n, i)


# --- strong-cycle instances ---------------------------------------------------------


def test_strong_instance_single_clause():
    inst = sat_to_strong_instance(f((1, 2, 3)))
    g = inst.graph
    assert inst.order == 5
    assert len(g.vertices) == 11
    assert len(g.arcs) == 13
    assert g.lifetime == 20
    assert inst.removals == {}
    cycles, truncated = enumerate_cycles(g)
    assert not truncated and len(cycles) == 3
    assert inst.symbols["v0"] == ("shared", 0)
    assert inst.symbols["v1.2"] == ("cycle", 2, 1)


def test_strong_instance_label_zero_placement():
    g = sat_to_strong_instance(f((1, 2, 3))).graph
    zero_arcs = {
        (t, h) for t, h, labels in g.arcs if labels[0] == 0 and (t, h) != ("v4", "v0")
    }
    assert zero_arcs == {
        ("v2.1", "v3.1"),
        ("v3.1", "v4"),
        ("v1.2", "v2.2"),
        ("v3.2", "v4"),
        ("v1.3", "v2.3"),
        ("v2.3", "v3.3"),
    }


def test_strong_instance_contradiction_removals():
    inst = sat_to_strong_instance(f((1, -1, 2)))
    assert inst.removals == {
        ("v0", "v1.1"): (14,),
        ("v0", "v1.2"): (19,),
    }
    # the removed labels are gone from the graph itself
    assert 14 not in inst.graph.times("v0", "v1.1")
    assert 19 not in inst.graph.times("v0", "v1.2")


def test_strong_instance_two_clauses():
    inst = sat_to_strong_instance(f((1, 2, 3), (2, 3, 4)))
    g = inst.graph
    assert inst.order == 9
    assert len(g.vertices) == 21
    assert len(g.arcs) == 25
    assert g.lifetime == 72
    cycles, _ = enumerate_cycles(g)
    assert len(cycles) == 9


def test_strong_instance_rejects_empty_formula():
    with pytest.raises(ValueError):
        sat_to_strong_instance(CnfFormula(3, []))


def test_strong_instance_matches_satisfiability():
    cases = [f((1, 2, 3)), f((-1, -2, -3)), f((1, 1, 1), (-1, -1, -1))]
    for formula in cases:
        sat = solve_formula(formula, SatMode.SAT)
        found = oracle_detect(
            sat_to_strong_instance(formula).graph, CycleKind.STRONG, NS
        )
        assert (sat is not None) == (found is not None)


def test_assignment_to_strong_cycle():
    formula = f((1, 2, 3))
    chosen = assignment_to_strong_cycle(formula, {1: True, 2: False, 3: False})
    assert chosen == {"v0", "v4", "v1.1", "v2.1", "v3.1"}
    induced = sat_to_strong_instance(formula).graph.induced(chosen)
    assert oracle_detect(induced, CycleKind.STRONG, NS) is not None
    with pytest.raises(ValueError, match="does not satisfy"):
        assignment_to_strong_cycle(formula, {1: False, 2: False, 3: False})


# --- grid instances -------------------------------------------------------------------


def test_simple_grid_single_clause():
    inst = nae_to_simple_instance(f((1, 2, 3)))
    g = inst.graph
    assert set(g.vertices) == {"b1.1", "a1.1", "a2.1", "a3.1", "c1"}
    assert set(g.arcs) == {
        ("b1.1", "a1.1"),
        ("a1.1", "a2.1"),
        ("a2.1", "a3.1"),
        ("a3.1", "c1"),
        ("c1", "b1.1"),
    }
    assert girth(g) == 5
    assert inst.renames == {"b2.1": "a1.1", "b3.1": "a2.1"}
    assert inst.kind is CycleKind.SIMPLE


def test_weak_grid_single_clause():
    inst = nae_to_weak_instance(f((1, 2, 3)))
    g = inst.graph
    assert len(g.vertices) == 7 and len(g.arcs) == 7
    assert girth(g) == 7
    assert inst.clause_arcs[1] == (
        ("a3.1", "w1.1"),
        ("w1.1", "w1.2"),
        ("w1.2", "w1.3"),
        ("w1.3", "b1.1"),
    )
    assert inst.b_arcs == {}


def test_grid_two_clause_shapes():
    formula = f((1, 2, 3), (2, 3, 4))
    simple = nae_to_simple_instance(formula).graph
    assert (len(simple.vertices), len(simple.arcs)) == (22, 32)
    weak = nae_to_weak_instance(formula).graph
    assert (len(weak.vertices), len(weak.arcs)) == (42, 52)
    for g in (simple, weak):
        assert girth(g) >= 4


def test_grid_input_validation():
    with pytest.raises(ValueError, match="monotone"):
        nae_to_simple_instance(f((1, -2, 3)))
    with pytest.raises(ValueError, match="repeats"):
        nae_to_simple_instance(f((1, 1, 2)))
    with pytest.raises(ValueError, match="at least one clause"):
        nae_to_weak_instance(CnfFormula(3, []))


def test_assignment_to_temporization():
    formula = f((1, 2, 3))
    assignment = {1: True, 2: False, 3: False}
    for kind, build in (
        (CycleKind.SIMPLE, nae_to_simple_instance),
        (CycleKind.WEAK, nae_to_weak_instance),
    ):
        t = assignment_to_temporization(formula, assignment, kind)
        assert t.lifetime <= 2
        applied = t.apply(build(formula).graph)
        assert oracle_detect(applied, kind, NS) is None
    with pytest.raises(ValueError, match="not-all-equal"):
        assignment_to_temporization(formula, {1: True, 2: True, 3: True}, CycleKind.SIMPLE)
