import math

import pytest

from sliceregular.errors import EstimationError, UsageError
from sliceregular.quaternion import I, J, K, ONE, Quaternion, quat_exp
from sliceregular.timefunctions import (
    TimeDomainFunction,
    constant_function,
    estimate_exp_order,
    exponential_function,
    heaviside_shifted,
    polynomial_function,
    time_function_from_json,
)

from conftest import assert_qclose


class TestFactories:
    def test_constant(self):
        f = constant_function(ONE)
        assert f(3.7) == ONE
        assert f.growth.a == 0.0

    def test_exponential_growth_certificate(self):
        f = exponential_function(Quaternion(2, 1, 0, 0))
        assert f.growth.a == 2.0 and f.growth.K == 1.0
        # |e^{bt}| = e^{Re(b) t} exactly
        t = 1.7
        assert abs(f(t).norm() - math.exp(2 * t)) < 1e-9 * math.exp(2 * t)

    def test_exponential_decaying_is_order_zero(self):
        f = exponential_function(Quaternion(-3, 1, 0, 0))
        assert f.growth.a == 0.0
        assert f(2.0).norm() <= 1.0

    def test_polynomial(self):
        f = polynomial_function([ONE, 2 * J])  # 1 + 2j t
        assert_qclose(f(1.5), ONE + 3 * J, 1e-15)
        # certificate really bounds the function on a sampled range
        g = f.growth
        for t in (0.0, 1.0, 10.0, 40.0):
            assert f(t).norm() <= g.K * math.exp(g.a * t) * (1 + 1e-12)

    def test_heaviside(self):
        f = heaviside_shifted(exponential_function(J), 1.0)
        assert f(0.5) == Quaternion()
        assert f(1.0) == ONE  # H(0) = 1 convention
        assert_qclose(f(2.0), quat_exp(J), 1e-15)
        assert f.breakpoints == (1.0,)

    def test_heaviside_needs_positive_shift(self):
        with pytest.raises(UsageError):
            heaviside_shifted(constant_function(ONE), 0.0)

    def test_initial_value_richardson(self):
        f = TimeDomainFunction(lambda t: ONE * (1 + t + t * t), constant_function(ONE).growth)
        assert_qclose(f.initial_value(), ONE, 1e-9)

    def test_initial_value_supplied_wins(self):
        f = TimeDomainFunction(lambda t: ONE * t, constant_function(ONE).growth,
                               value_at_zero_plus=5 * ONE)
        assert f.initial_value() == 5 * ONE

    def test_growth_spot_check(self, rng):
        # sampled |f(t)| stays under the certificate for every factory
        fns = [
            exponential_function(Quaternion(0.5, 2, 0, 0)),
            polynomial_function([ONE, I, J]),
            heaviside_shifted(polynomial_function([ONE, K]), 2.0),
            exponential_function(I).scaled_left(ONE + K) + constant_function(J),
        ]
        for f in fns:
            g = f.growth
            for _ in range(50):
                t = float(rng.uniform(g.T, g.T + 20))
                assert f(t).norm() <= g.K * math.exp(g.a * t) * (1 + 1e-9)


class TestJsonIngestion:
    def test_exp(self):
        f = time_function_from_json({"kind": "exp", "b": [0, 0, 1, 0]})
        assert_qclose(f(2.0), quat_exp(2 * J), 1e-15)

    def test_poly(self):
        f = time_function_from_json({"kind": "poly", "coeffs": [[0, 0, 0, 0], [1, 0, 0, 0]]})
        assert f(3.0) == 3 * ONE

    def test_heaviside_and_sum_and_scale(self):
        spec = {
            "kind": "sum",
            "terms": [
                {"kind": "heaviside_shift", "shift": 1.0,
                 "inner": {"kind": "exp", "b": [0, 0, 1, 0]}},
                {"kind": "scale", "factor": [0, 0, 0, 2], "where": "left",
                 "inner": {"kind": "poly", "coeffs": [[1, 0, 0, 0]]}},
            ],
        }
        f = time_function_from_json(spec)
        assert_qclose(f(0.5), 2 * K, 1e-15)
        assert_qclose(f(1.5), quat_exp(0.5 * J) + 2 * K, 1e-15)
        assert 1.0 in f.breakpoints

    def test_explicit_exp_order_override(self):
        f = time_function_from_json(
            {"kind": "exp", "b": [1, 0, 0, 0], "exp_order": {"a": 2.0, "K": 3.0, "T": 1.0}})
        assert f.growth.a == 2.0 and f.growth.K == 3.0 and f.growth.T == 1.0

    def test_malformed(self):
        with pytest.raises(UsageError):
            time_function_from_json({"kind": "spline"})
        with pytest.raises(UsageError):
            time_function_from_json({"kind": "exp"})
        with pytest.raises(UsageError):
            time_function_from_json([1, 2, 3])


class TestExpOrderEstimation:
    def test_constant(self):
        bound = estimate_exp_order(lambda t: ONE, 10.0)
        assert bound.a == 0.0

    def test_from_callable_estimates_when_omitted(self):
        f = TimeDomainFunction.from_callable(lambda t: ONE * math.exp(1.2 * t))
        assert abs(f.growth.a - 1.2) <= 0.05
        g = TimeDomainFunction.from_callable(
            lambda t: ONE, growth=constant_function(ONE).growth)
        assert g.growth.a == 0.0 and g.growth.K == 1.0

    def test_e2t(self):
        bound = estimate_exp_order(lambda t: ONE * math.exp(2 * t), 10.0)
        assert abs(bound.a - 2.0) <= 0.05
        assert bound.K >= 1.0

    def test_bounded_oscillation(self):
        bound = estimate_exp_order(lambda t: quat_exp(I * t), 10.0)
        assert bound.a <= 0.05

    def test_superexponential_raises(self):
        with pytest.raises(EstimationError):
            estimate_exp_order(lambda t: ONE * math.exp(t * t), 10.0)

    def test_certificate_covers_samples(self):
        bound = estimate_exp_order(lambda t: ONE * (math.exp(1.5 * t) * (2 + math.sin(t))), 12.0)
        for k in range(50):
            t = bound.T + k * 0.2
            v = math.exp(1.5 * t) * (2 + math.sin(t))
            assert v <= bound.K * math.exp(bound.a * t) * (1 + 1e-9)
