import math
from fractions import Fraction

import pytest

from kiteratio.graph import Graph, make_complete, make_cycle, make_kite, make_path, make_star
from kiteratio.irregularity import (
    albertson,
    epsilon_irregularity,
    report_all,
    s_irregularity,
    variance,
)
from kiteratio.search import scan_labeled
from kiteratio.spectral import DisconnectedGraphError


def test_star_k13():
    rep = report_all(make_star(3))
    assert rep.gamma == pytest.approx(math.sqrt(3), rel=1e-12)
    assert rep.epsilon == pytest.approx(math.sqrt(3) - 1.5, abs=1e-12)
    assert rep.variance == 0.75
    assert rep.albertson == 6
    assert rep.s_measure == 3


def test_path3():
    g = make_path(3)
    assert variance(g) == pytest.approx(float(Fraction(2, 9)), abs=0)
    assert albertson(g) == 2
    assert s_irregularity(g) == pytest.approx(4 / 3, abs=1e-15)


def test_paw_s_measure():
    assert s_irregularity(make_kite(2, 3)) == 2


@pytest.mark.parametrize("g", [make_complete(5), make_cycle(7), make_complete(2)])
def test_regular_all_zero(g):
    rep = report_all(g)
    assert rep.as_tuple() == (1.0, 0.0, 0.0, 0, 0.0)


def test_regular_iff_zero_on_small_graphs():
    # every measure vanishes exactly on regular graphs; epsilon up to solver error
    seen = {"graphs": 0}

    def consume(g):
        rep = report_all(g)
        regular = len(set(g.degrees())) == 1
        seen["graphs"] += 1
        for value in (rep.variance, rep.albertson, rep.s_measure):
            assert (value == 0) == regular
        assert (rep.epsilon <= 1e-9) == regular
        assert (rep.gamma - 1 <= 1e-9) == regular
        assert min(rep.epsilon, rep.variance, rep.albertson, rep.s_measure) >= 0

    for n in (3, 4, 5):
        scan_labeled(n, consume)
    assert seen["graphs"] == 4 + 38 + 728


def test_isomorphism_invariance(rng):
    g = make_kite(4, 5)
    base = report_all(g)
    for _ in range(5):
        h = g.permute([int(p) for p in rng.permutation(g.n)])
        rep = report_all(h)
        assert rep.variance == base.variance
        assert rep.albertson == base.albertson
        assert rep.s_measure == base.s_measure
        assert rep.gamma == pytest.approx(base.gamma, rel=1e-10)


def test_disconnected_rejected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        epsilon_irregularity(g)
    # degree-only measures still apply
    assert variance(g) == 0


def test_as_dict_keys():
    assert list(report_all(make_path(4)).as_dict()) == ["gamma", "epsilon", "variance", "albertson", "s_measure"]
