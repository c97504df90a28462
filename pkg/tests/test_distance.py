import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tspga.distance import (
    build_oracle,
    euclidean_distance,
    is_valid_tour,
    nint,
    position_of,
    tour_cost,
)
from tspga.tsplib import City, Instance, Metric

from oracles import closed_length


def test_euclidean_examples():
    o, p = City(1, 0, 0), City(2, 3, 4)
    assert euclidean_distance(o, City(2, 0, 0)) == 0
    assert euclidean_distance(o, p, Metric.EUC2D_REAL) == 5.0
    # sqrt(2) = 1.414... rounds to 1
    assert euclidean_distance(o, City(2, 1, 1), Metric.EUC2D_ROUNDED) == 1


@pytest.mark.parametrize("value,expected", [(0.5, 1), (1.49, 1), (2.5, 3), (-0.5, -1), (-2.5, -3)])
def test_nint_rounds_halves_away_from_zero(value, expected):
    assert nint(value) == expected


def test_collinear_nearest():
    inst = Instance.from_coords([[0, 0], [1, 0], [5, 0]], metric="real")
    oracle = build_oracle(inst)
    assert oracle.nearest.tolist() == [2, 1, 2]
    assert oracle.nearest_city(3) == 2


def test_nearest_ties_go_to_smallest_id():
    # city 1 is equidistant from 2, 3 and 4
    inst = Instance.from_coords([[0, 0], [0, 1], [1, 0], [0, -1]], metric="real")
    assert build_oracle(inst).nearest_city(1) == 2


def random_instance(rng, n, metric="real"):
    return Instance.from_coords(rng.uniform(0, 100, size=(n, 2)), metric=metric)


@pytest.mark.parametrize("metric", list(Metric))
def test_oracle_matches_pairwise_brute_force(metric):
    rng = np.random.default_rng(7)
    inst = random_instance(rng, 10, metric)
    oracle = build_oracle(inst)
    assert np.array_equal(oracle.dist, oracle.dist.T)
    assert np.all(np.diag(oracle.dist) == 0)
    for a in inst.cities:
        for b in inst.cities:
            assert oracle.distance(a.id, b.id) == euclidean_distance(a, b, metric)
        # independent argmin with explicit smallest-id tie-break
        others = [c for c in inst.cities if c.id != a.id]
        best = min(others, key=lambda c: (euclidean_distance(a, c, metric), c.id))
        assert oracle.nearest_city(a.id) == best.id
        assert oracle.nearest_city(a.id) != a.id


def test_oracle_is_read_only():
    oracle = build_oracle(Instance.from_coords([[0, 0], [1, 0], [5, 0]]))
    with pytest.raises(ValueError):
        oracle.dist[0, 1] = 3


def test_unit_square_cost():
    inst = Instance.from_coords([[0, 0], [0, 1], [1, 1], [1, 0]], metric="real")
    assert tour_cost((1, 2, 3, 4), build_oracle(inst)) == 4.0


@pytest.mark.parametrize(
    "tour,city,pos",
    [((5, 3, 10, 2, 1, 8, 9, 7, 4), 3, 2), ((1, 2, 3), 1, 1), ((3, 2, 1), 1, 3)],
)
def test_position_of(tour, city, pos):
    assert position_of(tour, city) == pos
    assert tour[pos - 1] == city


@st.composite
def instance_and_tour(draw):
    n = draw(st.integers(3, 25))
    seed = draw(st.integers(0, 2**32 - 1))
    inst = random_instance(np.random.default_rng(seed), n)
    tour = tuple(draw(st.permutations(list(range(1, n + 1)))))
    return inst, tour


@given(instance_and_tour(), st.integers(0, 100))
@settings(max_examples=200, deadline=None)
def test_cost_rotation_and_reversal_invariant(data, shift):
    inst, tour = data
    oracle = build_oracle(inst)
    cost = tour_cost(tour, oracle)
    k = shift % len(tour)
    assert cost >= 0
    assert math.isclose(tour_cost(tour[k:] + tour[:k], oracle), cost, rel_tol=1e-12)
    assert math.isclose(tour_cost(tour[::-1], oracle), cost, rel_tol=1e-12)
    assert math.isclose(cost, closed_length(inst.coords.tolist(), tour), rel_tol=1e-12)


def test_is_valid_tour():
    assert is_valid_tour((2, 3, 1), 3)
    assert not is_valid_tour((2, 2, 1), 3)
    assert not is_valid_tour((1, 2), 3)
