import numpy as np
import pytest

from miselect import (
    JointDistribution,
    bayes_error_bounds,
    example1,
    feature_bounds_table,
    mutual_information,
)

from conftest import random_distribution


def test_uninformative_feature_binary_class():
    mass = {(i, j): 0.25 for i in (0, 1) for j in (0, 1)}
    d = JointDistribution(("f", "C"), (2, 2), mass)
    b = bayes_error_bounds(d, "f", "C")
    assert b.lower == 0.0
    assert b.upper == pytest.approx(0.5, abs=1e-12)
    assert b.exact == pytest.approx(0.5, abs=1e-12)


def test_deterministic_feature():
    d = JointDistribution(("f", "C"), (2, 2), {(0, 0): 0.3, (1, 1): 0.7})
    b = bayes_error_bounds(d, "f", "C")
    assert b.upper == pytest.approx(0.0, abs=1e-12)
    assert b.exact == pytest.approx(0.0, abs=1e-12)


def test_example1_x1():
    dist, _ = example1()
    b = bayes_error_bounds(dist, "x1", "C")
    assert b.upper == pytest.approx(0.25, abs=1e-9)
    assert b.exact == pytest.approx(0.25, abs=1e-9)
    assert b.lower <= b.exact <= b.upper + 1e-9


def test_degenerate_class_rejected():
    d = JointDistribution(("f", "C"), (2, 1), {(0, 0): 0.5, (1, 0): 0.5})
    with pytest.raises(ValueError, match="two states"):
        bayes_error_bounds(d, "f", "C")


def uniform_prior_distribution(rng, feature_card, class_card):
    # random channel p(f|c) with a uniform class prior; the Fano-type lower
    # bound is only guaranteed under uniform priors
    mass = {}
    for c in range(class_card):
        channel = rng.dirichlet(np.ones(feature_card))
        for f in range(feature_card):
            p = channel[f] / class_card
            if p > 0:
                mass[(f, c)] = p
    return JointDistribution(("f", "C"), (feature_card, class_card), mass)


def test_sandwich_on_random_distributions():
    rng = np.random.default_rng(19)
    for _ in range(200):
        fc = int(rng.integers(2, 5))
        cc = int(rng.integers(2, 4))
        b = bayes_error_bounds(uniform_prior_distribution(rng, fc, cc), "f", "C")
        assert 0.0 <= b.lower <= b.upper + 1e-9 <= 1.0 + 1e-9
        assert b.lower - 1e-9 <= b.exact <= b.upper + 1e-9


def test_upper_bound_and_exact_valid_for_skewed_priors():
    rng = np.random.default_rng(23)
    for i in range(100):
        fc = int(rng.integers(2, 5))
        cc = int(rng.integers(2, 4))
        d = random_distribution(rng, [fc, cc], names=["f", "C"],
                                sparsity=0.2 if i % 3 else 0.0)
        b = bayes_error_bounds(d, "f", "C")
        assert b.exact <= b.upper + 1e-9
        assert 0.0 <= b.exact <= 1.0


def test_bounds_monotone_in_mi():
    # mixing a deterministic channel with noise: more MI, tighter bounds
    prev = None
    for lam in np.linspace(0.0, 1.0, 11):
        mass = {}
        for f in (0, 1):
            for c in (0, 1):
                det = 0.5 if f == c else 0.0
                mass[(f, c)] = lam * det + (1 - lam) * 0.25
        d = JointDistribution(("f", "C"), (2, 2), mass)
        b = bayes_error_bounds(d, "f", "C")
        if prev is not None:
            assert b.mi >= prev.mi - 1e-12
            assert b.lower <= prev.lower + 1e-9
            assert b.upper <= prev.upper + 1e-9
        prev = b


def test_composite_feature_flagged():
    dist, _ = example1()
    b = bayes_error_bounds(dist, ["x2", "x3"], "C")
    assert b.meta["composite_feature"]
    assert b.mi == pytest.approx(mutual_information(dist, ["x2", "x3"], "C"),
                                 abs=1e-12)


def test_feature_bounds_table():
    _, ds = example1()
    rows = feature_bounds_table(ds)
    assert [r["feature"] for r in rows] == list(ds.feature_names)
    x1 = rows[0]
    assert x1["upper"] == pytest.approx(0.25, abs=1e-9)
    assert x1["exact"] == pytest.approx(0.25, abs=1e-9)
