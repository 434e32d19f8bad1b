from fractions import Fraction as Q

import pytest

from conftest import CYCLE, CYCLE_ARR, PATH, TWO_WAY, random_multigraph
from parkplane.core import Arrangement, Hyperplane, Multigraph
from parkplane.factory import (
    BadEdge,
    BadParams,
    from_multigraph,
    g_shi,
    k_shi,
    multigraph_of,
    parse_edge_list,
)


def H(p, q, a):
    return Hyperplane(p, q, Q(a))


def test_k_shi_two_points():
    assert set(k_shi(2, 1)) == {H(2, 1, "1/2"), H(1, 2, "1/2")}


def test_k_shi_three_points():
    assert list(k_shi(3, 1)) == [
        H(2, 1, "2/3"),
        H(1, 2, "1/3"),
        H(3, 1, "1/3"),
        H(1, 3, "2/3"),
        H(3, 2, "2/3"),
        H(2, 3, "1/3"),
    ]


def test_k_shi_is_the_unshifted_arrangement_translated():
    # Undo the shift x -> x - s with s_i = (i-1)/n: each hyperplane becomes
    # x_i - x_j = l for some i > j and -k < l <= k, each (i, j, l) once.
    n, k = 4, 3
    seen = set()
    for h in k_shi(n, k):
        shift = Q(h.p - h.q, n)
        i, j, level = h.p, h.q, h.a + shift
        if i < j:
            i, j, level = j, i, -level
        assert level.denominator == 1 and -k < level <= k
        seen.add((i, j, int(level)))
    assert len(seen) == k * n * (n - 1)


@pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 3), (5, 1)])
def test_k_shi_invariants(n, k):
    arr = k_shi(n, k)
    assert len(arr) == k * n * (n - 1)
    assert all(0 < h.a < k + 1 for h in arr)
    assert multigraph_of(arr) == Multigraph.complete(n, k)


def test_k_shi_bad_params():
    with pytest.raises(BadParams):
        k_shi(1, 1)
    with pytest.raises(BadParams):
        k_shi(3, 0)


def test_g_shi_path():
    arr = g_shi(3, [(1, 2), (2, 3)])
    assert len(arr) == 4
    assert multigraph_of(arr) == PATH


def test_g_shi_full_edge_set_is_k_shi():
    for n in (2, 3, 4):
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        assert set(g_shi(n, pairs)) == set(k_shi(n, 1))


def test_g_shi_empty_and_bad_edges():
    assert len(g_shi(3, [])) == 0
    with pytest.raises(BadEdge):
        g_shi(3, [(1, 1)])
    with pytest.raises(BadEdge):
        g_shi(3, [(1, 4)])
    with pytest.raises(BadEdge):
        g_shi(3, [(1, 2), (2, 1)])


def test_from_multigraph_cycle():
    assert from_multigraph(CYCLE) == CYCLE_ARR
    assert multigraph_of(CYCLE_ARR) == CYCLE


def test_from_multigraph_constants():
    G = Multigraph.from_edges(2, [(1, 2, 3)])
    assert [h.a for h in from_multigraph(G)] == [Q(1, 2), Q(3, 2), Q(5, 2)]
    assert len(from_multigraph(Multigraph.zero(4))) == 0
    assert len(from_multigraph(TWO_WAY)) == 4


def test_multigraph_round_trip(rng):
    for _ in range(50):
        G = random_multigraph(rng, n_max=6, mult_max=3)
        assert multigraph_of(from_multigraph(G)) == G


def test_multigraph_of_empty():
    assert multigraph_of(Arrangement(3, ())) == Multigraph.zero(3)


def test_parse_edge_list():
    assert parse_edge_list("1-2, 2-3") == [(1, 2), (2, 3)]
    with pytest.raises(BadEdge):
        parse_edge_list("1:2")
