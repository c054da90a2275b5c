"""Unit tests for expansion coefficients and expander existence decisions."""

from fractions import Fraction

import pytest

from quivex import (
    ExpanderDecision,
    ExpanderParams,
    QuadraticSurd,
    SlopeParams,
    StabilityFunction,
    SubdimCache,
    embeds,
    epsilon_k,
    epsilon_m_alpha_delta,
    expander_exists,
    expander_exists_uniform,
    make_kronecker,
    theta_epsilon_supremum,
    theta_expander_exists,
)

HALF = Fraction(1, 2)


def test_epsilon_k_values():
    assert epsilon_k(2) == QuadraticSurd(3, -1, 5, 2)
    assert epsilon_k(3) == QuadraticSurd(2, -1, 2, 1)
    assert epsilon_k(10) == QuadraticSurd(11, -1, 85, 2)
    assert abs(float(epsilon_k(2)) - 0.381966) < 1e-6
    assert abs(float(epsilon_k(3)) - 0.585786) < 1e-6
    with pytest.raises(ValueError):
        epsilon_k(1)


def test_epsilon_k_lies_in_unit_interval():
    for k in range(2, 21):
        value = epsilon_k(k)
        assert Fraction(0) < value < Fraction(1)


def test_epsilon_m_alpha_delta_values():
    assert epsilon_m_alpha_delta(3, 1, HALF) == epsilon_k(2)
    assert epsilon_m_alpha_delta(4, 2, HALF) == HALF


def test_epsilon_m_alpha_delta_distinct_precondition_errors():
    with pytest.raises(ValueError, match="alpha"):
        epsilon_m_alpha_delta(2, 1, HALF)  # alpha^2 - m alpha + 1 = 0, not < 0
    with pytest.raises(ValueError, match="delta"):
        epsilon_m_alpha_delta(3, 1, Fraction(3, 2))
    # valid alpha never violates positivity on 0 < delta < 1, so only an
    # alpha that is itself out of range can reach this branch
    with pytest.raises(ValueError, match="positive"):
        epsilon_m_alpha_delta(3, Fraction(-7, 2), Fraction(1, 10))


def test_epsilon_specialization_identity():
    for k in range(2, 21):
        assert epsilon_m_alpha_delta(k + 1, 1, HALF) == epsilon_k(k)


def test_epsilon_positive_under_preconditions():
    for m in (3, 4, 5, 7):
        for alpha in (1, 2, Fraction(3, 2)):
            if alpha * alpha - m * alpha + 1 >= 0:
                continue
            for delta in (Fraction(1, 4), HALF, Fraction(3, 4)):
                if m * delta + alpha - 2 * alpha * delta <= 0:
                    continue
                assert epsilon_m_alpha_delta(m, alpha, delta) > 0


def test_expander_params_validation():
    with pytest.raises(ValueError):
        ExpanderParams(Fraction(0), Fraction(1, 10))
    with pytest.raises(ValueError):
        ExpanderParams(Fraction(1), Fraction(1, 10))
    with pytest.raises(ValueError):
        ExpanderParams(HALF, Fraction(0))
    params = ExpanderParams(HALF, Fraction(38, 100))
    assert params.epsilon == Fraction(19, 50)


def test_slope_params_validation():
    with pytest.raises(ValueError):
        SlopeParams(0, Fraction(1))
    assert SlopeParams(3, 1).alpha == Fraction(1)


def test_expander_exists_examples():
    assert expander_exists(3, (2, 2), ExpanderParams(HALF, Fraction(38, 100))).exists
    decision = expander_exists(3, (10, 10), ExpanderParams(HALF, HALF))
    assert decision == ExpanderDecision(False, (5, 7))
    assert expander_exists(3, (10, 10), ExpanderParams(HALF, Fraction(38, 100))).exists


def test_expander_exists_boundary_is_inclusive():
    # minimal pair at (10,10) is (5,7): 7 == (1 + 2/5) * 5 exactly, so
    # epsilon = 2/5 still admits an expander and anything above does not
    assert expander_exists(3, (10, 10), ExpanderParams(HALF, Fraction(2, 5))).exists
    assert not expander_exists(3, (10, 10), ExpanderParams(HALF, Fraction(41, 100))).exists


def test_expander_exists_recursive_fallback_consistency():
    # <d, d> > 0 forces the recursive engine; its minima must agree with a
    # direct scan of the embedding relation
    cache = SubdimCache()
    m, d = 3, (12, 1)
    quiver = make_kronecker(m)
    decision = expander_exists(m, d, ExpanderParams(HALF, Fraction(1, 100)), cache)
    for e1 in range(1, 7):
        expected = min(e2 for e2 in range(d[1] + 1) if embeds(quiver, (e1, e2), d, cache))
        from quivex.expander import minimal_second_coordinate

        assert minimal_second_coordinate(m, d, e1, cache) == expected
    assert decision.exists in (True, False)


def test_expander_exists_monotone_in_epsilon_and_delta():
    cache = SubdimCache()
    for n in (4, 6, 10):
        for eps_big, eps_small in [(HALF, Fraction(38, 100)), (Fraction(2, 5), Fraction(1, 5))]:
            if expander_exists(3, (n, n), ExpanderParams(HALF, eps_big), cache).exists:
                assert expander_exists(3, (n, n), ExpanderParams(HALF, eps_small), cache).exists
        for delta_big, delta_small in [(HALF, Fraction(1, 4))]:
            if expander_exists(3, (n, n), ExpanderParams(delta_big, Fraction(2, 5)), cache).exists:
                assert expander_exists(3, (n, n), ExpanderParams(delta_small, Fraction(2, 5)), cache).exists


def test_expander_exists_input_validation():
    with pytest.raises(ValueError):
        expander_exists(0, (2, 2), ExpanderParams(HALF, HALF))
    with pytest.raises(ValueError):
        expander_exists(3, (0, 2), ExpanderParams(HALF, HALF))


def test_expander_exists_uniform_examples():
    slope = SlopeParams(3, Fraction(1))
    assert expander_exists_uniform(slope, HALF, Fraction(38, 100))
    assert not expander_exists_uniform(slope, HALF, Fraction(2, 5))
    # rational threshold hit exactly: inclusive boundary
    assert expander_exists_uniform(SlopeParams(4, Fraction(2)), HALF, HALF)
    assert not expander_exists_uniform(SlopeParams(4, Fraction(2)), HALF, HALF + Fraction(1, 1000))


def test_uniform_true_implies_pointwise_true():
    cache = SubdimCache()
    eps = Fraction(38, 100)
    assert expander_exists_uniform(SlopeParams(3, Fraction(1)), HALF, eps)
    for n in range(1, 13):
        assert expander_exists(3, (n, n), ExpanderParams(HALF, eps), cache).exists


def test_pointwise_failure_above_threshold():
    # strictly above the uniform threshold a desk-scale witness exists
    cache = SubdimCache()
    assert not expander_exists_uniform(SlopeParams(3, Fraction(1)), HALF, HALF)
    failures = [
        n
        for n in range(1, 13)
        if not expander_exists(3, (n, n), ExpanderParams(HALF, HALF), cache).exists
    ]
    assert failures == [10]


def test_kronecker_reduction_tracks_coefficient_threshold():
    # operator-count reduction: K(k+1) on balanced vectors at delta = 1/2
    # stays positive for eps below the sharp coefficient, all the way up to
    # the integer frontier of the desk grid, and fails just above it
    cache = SubdimCache()
    for k, frontier in [(2, Fraction(2, 5)), (3, Fraction(3, 5))]:
        m = k + 1
        threshold = epsilon_k(k)
        assert threshold < frontier
        for n in range(1, 13):
            for eps in (Fraction(38, 100), frontier):
                assert expander_exists(m, (n, n), ExpanderParams(HALF, eps), cache).exists
        bumped = frontier + Fraction(1, 100)
        failing = [
            n
            for n in range(1, 13)
            if not expander_exists(m, (n, n), ExpanderParams(HALF, bumped), cache).exists
        ]
        assert failing == [10], (k, failing)


def test_stability_function():
    theta = StabilityFunction((1, -1))
    assert theta((2, 2)) == 0
    assert theta((0, 1)) == -1
    with pytest.raises(ValueError):
        theta((1, 2, 3))


def test_theta_expander_examples():
    K3 = make_kronecker(3)
    theta = StabilityFunction((1, -1))
    assert theta_expander_exists(K3, theta, (2, 2), ExpanderParams(HALF, Fraction(1))).exists
    decision = theta_expander_exists(K3, theta, (2, 2), ExpanderParams(HALF, Fraction(3, 2)))
    assert decision == ExpanderDecision(False, (0, 1))


def test_theta_expander_rejects_nonzero_theta_d():
    bipartite_theta = StabilityFunction((1, 0, -1))
    from quivex import parse_quiver

    quiver = parse_quiver("vertices 3\n1 -> 2\n1 -> 2\n3 -> 2\n3 -> 2\n")
    with pytest.raises(ValueError):
        theta_expander_exists(
            quiver, bipartite_theta, (3, 6, 5), ExpanderParams(HALF, Fraction(1))
        )


def test_theta_epsilon_supremum_matches_decision():
    K3 = make_kronecker(3)
    theta = StabilityFunction((1, -1))
    cache = SubdimCache()
    for n in (1, 2, 3, 4):
        sup = theta_epsilon_supremum(K3, theta, (n, n), HALF, cache)
        assert sup is not None
        assert theta_expander_exists(K3, theta, (n, n), ExpanderParams(HALF, sup), cache).exists
        bumped = sup + Fraction(1, 1000)
        assert not theta_expander_exists(
            K3, theta, (n, n), ExpanderParams(HALF, bumped), cache
        ).exists


def test_theta_epsilon_supremum_frozen_values():
    K3 = make_kronecker(3)
    theta = StabilityFunction((1, -1))
    sups = [theta_epsilon_supremum(K3, theta, (n, n), HALF) for n in (1, 2, 3, 4)]
    assert sups == [Fraction(1), Fraction(1), Fraction(1, 3), Fraction(1, 3)]
