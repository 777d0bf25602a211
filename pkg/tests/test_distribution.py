import numpy as np
import pytest

from miselect import JointDistribution

from conftest import random_distribution


def test_mass_must_sum_to_one():
    with pytest.raises(ValueError, match="sums to"):
        JointDistribution(("x",), (2,), {(0,): 0.4, (1,): 0.4})


def test_negative_mass_rejected():
    with pytest.raises(ValueError, match="negative"):
        JointDistribution(("x",), (2,), {(0,): 1.2, (1,): -0.2})


def test_wrong_arity_rejected():
    with pytest.raises(ValueError, match="arity"):
        JointDistribution(("x", "y"), (2, 2), {(0,): 1.0})


def test_state_out_of_range_rejected():
    with pytest.raises(ValueError, match="out of range"):
        JointDistribution(("x",), (2,), {(2,): 1.0})


def test_duplicate_names_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        JointDistribution(("x", "x"), (2, 2), {(0, 0): 1.0})


def test_empirical_needs_sample_count():
    with pytest.raises(ValueError, match="sample_count"):
        JointDistribution(("x",), (2,), {(0,): 1.0}, origin="empirical")


def test_unknown_variable():
    d = JointDistribution(("x",), (2,), {(0,): 0.5, (1,): 0.5})
    with pytest.raises(ValueError, match="unknown variable"):
        d.marginal(["z"])


def test_marginal_is_valid_distribution():
    rng = np.random.default_rng(7)
    for _ in range(20):
        d = random_distribution(rng, [2, 3, 2])
        m = d.marginal(["v2", "v0"])
        assert m.variables == ("v2", "v0")
        assert sum(m.mass.values()) == pytest.approx(1.0, abs=1e-12)
        # re-marginalizing commutes
        assert m.marginal(["v0"]).mass == pytest.approx(d.marginal_mass(["v0"]))


def test_marginal_preserves_requested_order():
    d = JointDistribution(("a", "b"), (2, 2),
                          {(0, 1): 0.25, (1, 0): 0.75})
    m = d.marginal(["b", "a"])
    assert m.mass == {(1, 0): 0.25, (0, 1): 0.75}
