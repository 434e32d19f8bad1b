from fractions import Fraction as Q

import pytest

from conftest import CYCLE_ARR, TWO_WAY_CONCURRENT, TWO_WAY_OPEN, random_multigraph
from parkplane.core import Arrangement, Hyperplane
from parkplane.factory import from_multigraph, g_shi, k_shi, multigraph_of
from parkplane.feasibility import interior_witness, satisfies
from parkplane.parking import enumerate_g_parking
from parkplane.regions import enumerate_regions, fundamental_signs, label_of
from parkplane.walk import (
    EmptyI,
    NotGParking,
    find_region,
    make_state,
    ray_parameter,
    step_candidates,
    walk_states,
)


def test_candidates_shi_three():
    arr = k_shi(3, 1)
    st = make_state(arr, (1, 0, 0), fundamental_signs(arr))
    assert st.I == {1} and st.J == {2, 3}
    cands = step_candidates(arr, st)
    assert [arr[i] for i in cands] == [Hyperplane(1, 2, Q(1, 3)), Hyperplane(1, 3, Q(2, 3))]
    r = interior_witness(arr, st.current)
    times = [ray_parameter(arr[i], r, 1, 2) for i in cands]
    assert times == sorted(times)


def test_candidates_cycle():
    st = make_state(CYCLE_ARR, (1, 1, 0), (False,) * 3)
    assert st.I == {1, 2} and st.J == {3}
    assert step_candidates(CYCLE_ARR, st) == [1]


def test_candidates_empty_i():
    st = make_state(CYCLE_ARR, (0, 0, 0), (False,) * 3)
    with pytest.raises(EmptyI):
        step_candidates(CYCLE_ARR, st)


def test_ray_parameter():
    h = Hyperplane(1, 2, Q(1, 2))
    # gap 1/2 closes at speed 1/1 + 1/2
    assert ray_parameter(h, (Q(0), Q(0), Q(0)), 1, 2) == Q(1, 3)


def test_zero_target_stays_home():
    region, trace = find_region(k_shi(3, 2), (0, 0, 0))
    assert trace == ()
    assert region.signs == (False,) * 12


def test_find_210():
    arr = k_shi(3, 1)
    region, trace = find_region(arr, (2, 1, 0))
    assert region.label == (2, 1, 0)
    assert len(trace) == 3
    assert satisfies(arr, region.signs, region.witness)


def test_not_g_parking():
    with pytest.raises(NotGParking) as exc:
        find_region(CYCLE_ARR, (1, 1, 1))
    assert exc.value.subset == (1, 2, 3)


def test_walk_conditions_step_by_step():
    arr = k_shi(3, 2)
    f = (4, 0, 2)
    states = list(walk_states(arr, f))
    assert len(states) == sum(f) + 1
    for before, after in zip(states, states[1:]):
        assert after.I <= before.I
        assert after.J
        moved = [i for i in range(3) if after.label[i] != before.label[i]]
        assert len(moved) == 1
        p = moved[0] + 1
        assert p in before.I and after.label[p - 1] == before.label[p - 1] + 1
        h = after.trace[-1]
        assert h.p in before.I and h.q in before.J
        assert all(after.label[j - 1] == f[j - 1] for j in after.J)
        for h2, s in zip(arr.hyperplanes, after.current):
            assert not (s and h2.p in after.I and h2.q in after.I)
    assert states[-1].label == f


@pytest.mark.parametrize(
    "arr",
    [CYCLE_ARR, TWO_WAY_CONCURRENT, TWO_WAY_OPEN, k_shi(3, 1), k_shi(3, 2),
     g_shi(4, [(1, 2), (2, 3), (3, 4), (1, 4)])],
)
def test_every_gpf_is_reached(arr):
    for f in enumerate_g_parking(multigraph_of(arr)):
        region, trace = find_region(arr, f)
        assert region.label == f
        assert len(trace) == sum(f)
        assert label_of(arr, region.signs) == f


def test_round_trip_on_region_labels(rng):
    for _ in range(15):
        arr = from_multigraph(random_multigraph(rng, n_max=4))
        for r in enumerate_regions(arr):
            assert find_region(arr, r.label)[0].label == r.label


def test_walk_with_arbitrary_constants(rng):
    for _ in range(15):
        n = rng.randint(2, 4)
        hs = set()
        for _ in range(rng.randint(1, 8)):
            p, q = rng.sample(range(1, n + 1), 2)
            hs.add(Hyperplane(p, q, Q(rng.randint(1, 9), rng.randint(1, 4))))
        arr = Arrangement(n, tuple(sorted(hs)))
        for f in enumerate_g_parking(multigraph_of(arr)):
            assert find_region(arr, f)[0].label == f
