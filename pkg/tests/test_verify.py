import json

import pytest

from conftest import TWO_WAY, TWO_WAY_CONCURRENT, TWO_WAY_OPEN, labels
from parkplane import io
from parkplane.core import TooLarge
from parkplane.factory import from_multigraph, g_shi
from parkplane.verify import verify_bijectivity_kshi, verify_surjectivity


def test_two_way_concurrent():
    rep = verify_surjectivity(TWO_WAY_CONCURRENT)
    assert rep.regions == 9
    assert len(rep.labels) == 9
    assert rep.ok


def test_two_way_open():
    rep = verify_surjectivity(TWO_WAY_OPEN)
    assert rep.regions == 10
    assert len(rep.labels) == 9
    assert rep.labels[(1, 0, 1)] == 2
    assert rep.ok


def test_two_way_default_constants():
    # The default geometry puts the crossing of x1-x2=1/2 and x3-x1=1/2
    # beyond x3-x2=1/2, so a different label (001) is doubled.
    rep = verify_surjectivity(from_multigraph(TWO_WAY))
    assert rep.regions == 10
    assert rep.labels[(0, 0, 1)] == 2
    assert set(rep.g_parking) == set(rep.labels)
    assert rep.ok


def test_path_graph():
    rep = verify_surjectivity(g_shi(3, [(1, 2), (2, 3)]))
    assert rep.regions == 9
    assert len(rep.labels) == 8
    assert rep.labels[(0, 1, 0)] == 2
    assert rep.summary() == "regions=9 labels=8 gpf=8 LABELS_ARE_GPF SURJECTIVE"


@pytest.mark.parametrize("n,k,count", [(3, 1, 16), (3, 2, 49), (4, 1, 125)])
def test_bijectivity(n, k, count):
    rep = verify_bijectivity_kshi(n, k)
    assert rep.regions == rep.parking == rep.parking_by_definition == rep.formula == count
    assert rep.ok
    assert rep.summary() == f"regions={count} parking={count} formula={count} BIJECTIVE"


def test_bijectivity_guard():
    with pytest.raises(TooLarge):
        verify_bijectivity_kshi(5, 1)


def test_report_serialization():
    rep = verify_surjectivity(TWO_WAY_OPEN)
    data = json.loads(io.write_report(rep, "json"))
    assert data["multiplicity"]["101"] == 2
    assert data["surjective"] is True
    tsv = io.write_report(rep, "tsv")
    assert "regions\t10" in tsv.splitlines()
