"""Choosing time labels so that cycles cannot be traversed.

Walks the decision surface: girth settles most graphs outright, a 4-cycle
needs the exhaustive lifetime-2 search for the weak kind, and under the
strict model one shared label kills everything except 2-cycles.
"""

from tempocycles import (
    CycleKind,
    Digraph,
    PathModel,
    bounded_lifetime_search,
    check_alternation_conditions,
    acyclic_temporization,
    oracle_detect,
    strict_acyclic_temporization,
)

NS = PathModel.NONSTRICT


def cycle_graph(k: int) -> Digraph:
    return Digraph([(f"x{i}", f"x{(i + 1) % k}") for i in range(k)])


def main() -> None:
    for k in (2, 3, 4, 5):
        d = cycle_graph(k)
        answers = ", ".join(
            f"{kind.value}: {acyclic_temporization(d, kind).status.value}"
            for kind in CycleKind
        )
        print(f"directed {k}-cycle  ->  {answers}")
    print()

    c4 = cycle_graph(4)
    dec = bounded_lifetime_search(c4, CycleKind.SIMPLE, 2)
    print(f"4-cycle, simple kind, lifetime 2: {dec.status.value}")
    print(dec.temporization.to_text())
    assert oracle_detect(dec.temporization.apply(c4), CycleKind.SIMPLE, NS) is None
    assert check_alternation_conditions(c4, dec.temporization, CycleKind.SIMPLE) == []
    print("labels alternate around the cycle, as they must\n")

    print(f"4-cycle, weak kind, lifetime 2: "
          f"{bounded_lifetime_search(c4, CycleKind.WEAK, 2).reason}")
    c6 = cycle_graph(6)
    dec = bounded_lifetime_search(c6, CycleKind.WEAK, 2)
    print(f"6-cycle, weak kind, lifetime 2: {dec.status.value}")
    print(dec.temporization.to_text())

    digon = Digraph([("u", "v"), ("v", "u")])
    for kind in CycleKind:
        dec = strict_acyclic_temporization(digon, kind)
        print(f"digon under the strict model, {kind.value}: "
              f"{dec.status.value} ({dec.reason})")


if __name__ == "__main__":
    main()
