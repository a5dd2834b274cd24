import random

import pytest

from tempocycles.randgen import random_cnf, random_digraph, random_temporal_digraph


def test_temporal_generator_is_deterministic():
    a = random_temporal_digraph(random.Random(99))
    b = random_temporal_digraph(random.Random(99))
    assert a == b


def test_temporal_generator_respects_profile():
    rng = random.Random(1)
    for _ in range(200):
        g = random_temporal_digraph(rng, max_vertices=7, max_arcs=14, max_label=4)
        assert 2 <= len(g.vertices) <= 7
        assert len(g.arcs) <= 14
        assert g.lifetime <= 4
        for _, _, labels in g.arcs:
            assert all(0 <= t <= 4 for t in labels)


def test_static_generator_bounds():
    rng = random.Random(2)
    for _ in range(100):
        d = random_digraph(rng, max_vertices=8)
        assert 1 <= len(d.vertices) <= 8
        assert not any(t == h for t, h in d.arcs)


def test_random_cnf_options():
    rng = random.Random(3)
    plain = random_cnf(rng, num_variables=4, num_clauses=3)
    assert plain.num_variables == 4 and len(plain.clauses) == 3
    mono = random_cnf(rng, num_variables=4, num_clauses=3, monotone=True)
    assert mono.is_monotone
    distinct = random_cnf(rng, num_variables=4, num_clauses=3, distinct_variables=True)
    for clause in distinct.clauses:
        assert len({abs(lit) for lit in clause}) == 3
    with pytest.raises(ValueError):
        random_cnf(rng, num_variables=2, num_clauses=1, distinct_variables=True)
