"""Seeded random-instance generators for tests and the command line.

All generators draw from a caller-supplied random.Random so a fixed seed
reproduces the exact instance stream.
"""

from __future__ import annotations

import random

from .core import Digraph, TemporalDigraph
from .reduce import CnfFormula

__all__ = ["random_temporal_digraph", "random_digraph", "random_cnf"]


def random_temporal_digraph(
    rng: random.Random,
    max_vertices: int = 7,
    max_arcs: int = 14,
    max_label: int = 4,
) -> TemporalDigraph:
    """Small temporal digraph: arcs sampled without replacement, labels in 0..max_label."""
    n = rng.randint(2, max_vertices)
    names = [f"v{i}" for i in range(n)]
    pairs = [(a, b) for a in names for b in names if a != b]
    chosen = rng.sample(pairs, min(rng.randint(0, max_arcs), len(pairs)))
    arcs = []
    for tail, head in chosen:
        count = rng.randint(1, min(3, max_label + 1))
        labels = tuple(sorted(rng.sample(range(max_label + 1), count)))
        arcs.append((tail, head, labels))
    return TemporalDigraph(arcs, names)


def random_digraph(rng: random.Random, max_vertices: int = 8) -> Digraph:
    """Static digraph with a density drawn per instance, so girths vary widely."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(n)]
    density = rng.uniform(0.1, 0.6)
    arcs = [
        (a, b) for a in names for b in names if a != b and rng.random() < density
    ]
    return Digraph(arcs, names)


def random_cnf(
    rng: random.Random,
    num_variables: int,
    num_clauses: int,
    monotone: bool = False,
    distinct_variables: bool = False,
) -> CnfFormula:
    """Random 3-CNF; distinct_variables forbids clause-internal repeats."""
    if distinct_variables and num_variables < 3:
        raise ValueError("distinct variables need at least 3 variables")
    clauses = []
    for _ in range(num_clauses):
        if distinct_variables:
            variables = rng.sample(range(1, num_variables + 1), 3)
        else:
            variables = [rng.randint(1, num_variables) for _ in range(3)]
        clauses.append(
            tuple(v if monotone or rng.random() < 0.5 else -v for v in variables)
        )
    return CnfFormula(num_variables, clauses)
