import math

import pytest

import ahpthermo as at

H = [[1.0, 2.0], [3.0, 4.0]]
C = [[0.0, 0.5], [0.5, 0.0]]


def test_reference_profits():
    profits = {s: at.profit(list(s), H, C) for s in [(0, 0), (0, 1), (1, 0), (1, 1)]}
    assert profits == {(0, 0): 3.0, (0, 1): 4.0, (1, 0): 4.0, (1, 1): 7.0}
    assert at.spin_profit([0, 1], H, C) == pytest.approx(4.0, abs=1e-12)


def test_reference_ensemble():
    z = math.exp(3) + 2 * math.exp(4) + math.exp(7)
    assert at.partition_function(-1.0, H, C) == pytest.approx(math.log(z), rel=1e-12)
    assert at.brute_force_partition(-1.0, H, C) == pytest.approx(math.log(z), rel=1e-12)
    assert at.gibbs_weight([1, 1], -1.0, H, C) == pytest.approx(0.8945, abs=1e-3)
    obs = at.observables(-1.0, H, C)
    assert obs.expected_profit == pytest.approx(6.6672436103511845464, rel=1e-12)
    assert obs.variance == pytest.approx(0.95307882929289238618, rel=1e-10)
    assert obs.entropy == pytest.approx(0.44419916884554851605, rel=1e-10)
    assert obs.temperature == -1.0
    assert at.observables(0.0, H, C).temperature == math.inf
    assert at.transfer_matrix(1, -1.0, H, C)[0][1] == pytest.approx(math.exp(3.5))


def test_decompose_reciprocal():
    d = at.decompose([[1.0, 2.0], [0.5, 1.0]])
    assert d["commission"] == [[0.0, 0.0], [0.0, 0.0]]
    assert d["skew"][0][1] == pytest.approx(math.log(2.0))
    assert at.commission_from_bid_ask(1.05, 1.07) == pytest.approx(-0.0094342421521914011015)


def test_clairvoyant():
    best, strategy = at.clairvoyant(H, C)
    assert best == 7.0
    assert strategy == [1, 1]
    assert at.max_profit(H, C) == 7.0


def test_fisher():
    per, total = at.strategy_fisher([0, 1, 2], 3)
    assert total == 6.0
    assert sum(per) == total
    assert at.discrete_fisher([0.5, 0.0, 0.5]) == math.inf
    assert at.discrete_fisher([0.25, 0.25, 0.25, 0.25]) == 0.0


def test_errors():
    with pytest.raises(at.EnumerationCapExceeded):
        at.brute_force_partition(-1.0, H, C, cap=3)
    with pytest.raises(ValueError):
        at.decompose([[1.0, -2.0], [0.5, 1.0]])
    with pytest.raises(ValueError):
        at.partition_function(math.nan, H, C)
