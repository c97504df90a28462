import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import tspga.select_best as sbm_mod
from tspga.distance import build_oracle, tour_cost
from tspga.rng import Rng
from tspga.select_best import Candidate, Origin, sbm, sbm_candidates, tours_equal
from tspga.tsplib import Instance

T_SLIDE = (1, 2, 3, 4, 5)
T_INV = (1, 3, 2, 4, 5)
T_IRG = (2, 1, 3, 4, 5)


@pytest.fixture
def scripted_candidates(monkeypatch):
    """Make the three operators return fixed tours with chosen costs."""

    def install(costs):
        tours = {T_SLIDE: costs[0], T_INV: costs[1], T_IRG: costs[2]}
        monkeypatch.setattr(
            sbm_mod,
            "_GENERATORS",
            (
                (Origin.SLIDE, lambda t, rng, o: T_SLIDE),
                (Origin.INVERSION, lambda t, rng, o: T_INV),
                (Origin.IRGIBNNM, lambda t, rng, o: T_IRG),
            ),
        )
        monkeypatch.setattr(sbm_mod, "tour_cost", lambda t, o: tours[t])

    return install


PARENT = (5, 4, 3, 2, 1)


def test_plain_minimum(scripted_candidates):
    scripted_candidates([120, 100, 130])
    assert sbm(PARENT, Rng(0), None, set()) == Candidate(T_INV, 100, Origin.INVERSION)


def test_falls_back_to_next_best(scripted_candidates):
    scripted_candidates([120, 100, 130])
    assert sbm(PARENT, Rng(0), None, {T_INV}) == Candidate(T_SLIDE, 120, Origin.SLIDE)


def test_all_duplicates_cancel(scripted_candidates):
    scripted_candidates([120, 100, 130])
    assert sbm(PARENT, Rng(0), None, {T_SLIDE, T_INV, T_IRG}) is None


def test_ties_broken_by_origin(scripted_candidates):
    scripted_candidates([100, 100, 100])
    assert sbm(PARENT, Rng(0), None, set()).origin is Origin.SLIDE
    scripted_candidates([130, 100, 100])
    assert sbm(PARENT, Rng(0), None, set()).origin is Origin.INVERSION
    assert sbm(PARENT, Rng(0), None, {T_INV}).origin is Origin.IRGIBNNM


def test_tours_equal():
    assert tours_equal((1, 2, 3), (1, 2, 3))
    assert tours_equal([1, 2, 3], (1, 2, 3))
    assert not tours_equal((1, 2, 3), (2, 3, 1))
    assert not tours_equal((1, 2, 3), (1, 3, 2))


@pytest.fixture(scope="module")
def oracle20():
    gen = np.random.default_rng(4)
    return build_oracle(Instance.from_coords(gen.uniform(0, 100, size=(20, 2)), metric="real"))


@given(
    st.permutations(list(range(1, 21))),
    st.integers(0, 2**32 - 1),
    st.lists(st.booleans(), min_size=3, max_size=3),
)
@settings(max_examples=200, deadline=None)
def test_sbm_properties(oracle20, parent, seed, block):
    parent = tuple(parent)
    cands = sbm_candidates(parent, Rng(seed), oracle20)
    assert [c.origin for c in sorted(cands, key=lambda c: c.origin)] == list(Origin)
    for c in cands:
        assert c.cost == tour_cost(c.tour, oracle20)
    # block a random subset of the candidates by putting them in the population
    population = {parent} | {c.tour for c, b in zip(cands, block) if b}
    snapshot = tuple(parent)
    got = sbm(parent, Rng(seed), oracle20, population)
    assert parent == snapshot
    free = [c for c in cands if c.tour not in population]
    if not free:
        assert got is None
    else:
        assert got in cands
        assert got.tour not in population
        assert all(got.cost <= c.cost for c in free)


def test_sbm_draw_schedule_independent_of_population(oracle20):
    parent = tuple(range(1, 21))
    r1, r2 = Rng(8), Rng(8)
    first = sbm_candidates(parent, r1, oracle20)
    sbm(parent, r2, oracle20, {c.tour for c in first})
    assert r1.getstate() == r2.getstate()
