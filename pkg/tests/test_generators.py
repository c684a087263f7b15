import math
from collections import Counter

import numpy as np
import pytest
from pydantic import ValidationError

from netmend.core.exceptions import DomainError
from netmend.schemas.generator import GeneratorSpec
from netmend.services.generators import (
    build_graph_from_spec,
    gen_er,
    gen_power_law,
    power_law_degrees,
)


def test_er_extremes():
    assert gen_er(10, 0.0, seed=1).number_of_edges() == 0
    assert gen_er(10, 1.0, seed=1).number_of_edges() == 45


def test_er_edge_count_matches_expectation():
    counts = [gen_er(500, 0.01, seed=s).number_of_edges() for s in range(200)]
    # expectation 1247.5, sigma ~35.1 per graph
    assert abs(np.mean(counts) - 1247.5) <= 3 * 35.1


def test_er_is_seeded():
    a, b = gen_er(100, 0.05, seed=42), gen_er(100, 0.05, seed=42)
    assert sorted(a.edges()) == sorted(b.edges())
    assert list(a.nodes) == list(range(100))


def test_er_rejects_bad_parameters():
    with pytest.raises(DomainError):
        gen_er(1, 0.5, seed=1)
    with pytest.raises(DomainError):
        gen_er(10, 1.5, seed=1)


def test_power_law_degrees_are_graphical():
    rng = np.random.default_rng(3)
    degrees = power_law_degrees(400, 2.5, rng)
    assert degrees.sum() % 2 == 0
    assert degrees.min() >= 1
    assert degrees.max() <= math.isqrt(400)


def test_power_law_graph_is_simple():
    g = gen_power_law(300, 2.5, seed=7)
    assert g.number_of_nodes() == 300
    assert not any(u == v for u, v in g.edges())


def test_steep_power_law_is_almost_a_matching():
    g = gen_power_law(500, 50.0, seed=1)
    assert abs(g.number_of_edges() - 250) <= 5


def test_power_law_slope():
    degrees = Counter()
    for seed in range(5):
        g = gen_power_law(500, 2.1, seed=seed)
        degrees.update(d for _, d in g.degree() if d > 0)

    ks = [k for k, count in degrees.items() if count >= 5]
    slope, _ = np.polyfit(np.log(ks), np.log([degrees[k] for k in ks]), 1)
    assert -2.6 <= slope <= -1.6


def test_power_law_is_seeded():
    a, b = gen_power_law(200, 2.5, seed=9), gen_power_law(200, 2.5, seed=9)
    assert sorted(a.edges()) == sorted(b.edges())


def test_power_law_rejects_shallow_exponent():
    with pytest.raises(DomainError):
        gen_power_law(100, 2.0, seed=1)


def test_generator_spec_checks_fields_per_kind():
    with pytest.raises(ValidationError):
        GeneratorSpec(kind="erdos_renyi", n=10, gamma=2.5, seed=1)
    with pytest.raises(ValidationError):
        GeneratorSpec(kind="power_law", n=10, seed=1)

    g = build_graph_from_spec(GeneratorSpec(kind="erdos_renyi", n=10, p=1.0, seed=1))
    assert g.number_of_edges() == 45
