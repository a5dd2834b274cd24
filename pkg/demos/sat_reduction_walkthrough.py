"""From a 3-CNF formula to a strong-cycle question.

Builds the temporal instance for a formula with a complementary literal
pair, shows which labels the contradiction removes, then checks both
directions: a satisfying assignment picks out a strong cycle, and the
detector's answer matches the brute-force solver.
"""

from tempocycles import (
    CnfFormula,
    CycleKind,
    PathModel,
    SatMode,
    assignment_to_strong_cycle,
    detect_strong,
    oracle_detect,
    sat_to_strong_instance,
    solve_formula,
)

NS = PathModel.NONSTRICT


def show(formula: CnfFormula) -> None:
    print(f"formula: {' and '.join(str(c) for c in formula.clauses)}")
    instance = sat_to_strong_instance(formula)
    g = instance.graph
    print(f"  instance: {len(g.vertices)} vertices, {len(g.arcs)} arcs, lifetime {g.lifetime}")
    for (tail, head), gone in sorted(instance.removals.items()):
        print(f"  contradiction removed {gone} from {tail} -> {head}")
    assignment = solve_formula(formula, SatMode.SAT)
    witness, _stats = detect_strong(g, NS)
    print(f"  solver: {'satisfiable' if assignment else 'unsatisfiable'}")
    print(f"  detector: {'strong cycle found' if witness else 'no strong cycle'}")
    assert (assignment is None) == (witness is None)
    if assignment is not None:
        chosen = assignment_to_strong_cycle(formula, assignment)
        sub = g.induced(chosen)
        assert oracle_detect(sub, CycleKind.STRONG, NS) is not None
        print(f"  assignment {assignment} routes through {sorted(chosen)}")
    print()


def main() -> None:
    show(CnfFormula(2, [(1, -1, 2)]))
    show(CnfFormula(3, [(1, 2, 3), (-1, -2, -3)]))
    show(CnfFormula(1, [(1, 1, 1), (-1, -1, -1)]))


if __name__ == "__main__":
    main()
