"""Quaternion-valued functions of a real variable t >= 0.

Transform inputs carry a growth certificate |f(t)| <= K e^{a t} for t > T
(a >= 0), an optional list of jump locations and an optional value at 0+.
Factories cover the JSON function vocabulary (exp / poly / heaviside_shift /
sum / scale) and derive growth certificates instead of estimating them; the
least-squares estimator is there for bare callables without a declared order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import EstimationError, UsageError
from .quaternion import ONE, Quaternion, quat_exp, quat_from_list

__all__ = [
    "GrowthBound",
    "TimeDomainFunction",
    "constant_function",
    "exponential_function",
    "polynomial_function",
    "heaviside_shifted",
    "time_function_from_json",
    "estimate_exp_order",
]


@dataclass(frozen=True, slots=True)
class GrowthBound:
    """Certificate |f(t)| <= K e^{a t} for all t > T, with a >= 0."""

    a: float
    K: float
    T: float = 0.0

    def __post_init__(self):
        if self.a < 0:
            raise UsageError("exponential order must be non-negative")
        if self.K <= 0:
            raise UsageError("growth constant K must be positive")


_RICHARDSON_H = 1e-3


class TimeDomainFunction:
    """Piecewise continuous map t >= 0 -> H with exponential-order metadata."""

    __slots__ = ("evaluator", "growth", "breakpoints", "value_at_zero_plus")

    def __init__(self, evaluator: Callable[[float], Quaternion], growth: GrowthBound,
                 breakpoints: Sequence[float] = (),
                 value_at_zero_plus: Optional[Quaternion] = None):
        self.evaluator = evaluator
        self.growth = growth
        self.breakpoints = tuple(sorted(float(b) for b in breakpoints))
        self.value_at_zero_plus = value_at_zero_plus

    def __call__(self, t: float) -> Quaternion:
        return self.evaluator(t)

    @classmethod
    def from_callable(cls, evaluator: Callable[[float], Quaternion],
                      growth: Optional[GrowthBound] = None,
                      breakpoints: Sequence[float] = (),
                      value_at_zero_plus: Optional[Quaternion] = None,
                      t_max: float = 10.0) -> "TimeDomainFunction":
        """Wrap a bare callable; the growth certificate is estimated if omitted."""
        if growth is None:
            growth = estimate_exp_order(evaluator, t_max)
        return cls(evaluator, growth, breakpoints, value_at_zero_plus)

    def component(self, m: int, cache: Optional[dict] = None) -> Callable[[float], float]:
        """Real component t -> f(t)_m; a shared cache avoids re-evaluating f."""
        if cache is None:
            return lambda t: self.evaluator(t).components()[m]

        def evaluate(t: float) -> float:
            hit = cache.get(t)
            if hit is None:
                hit = self.evaluator(t).components()
                cache[t] = hit
            return hit[m]

        return evaluate

    def initial_value(self) -> Quaternion:
        """f(0+): the supplied value, else Richardson extrapolation from t -> 0+."""
        if self.value_at_zero_plus is not None:
            return self.value_at_zero_plus
        h = _RICHARDSON_H
        f1, f2, f4 = self(h), self(h / 2), self(h / 4)
        return (8 * f4 - 6 * f2 + f1) / 3

    def conjugated(self) -> "TimeDomainFunction":
        f0 = self.value_at_zero_plus
        return TimeDomainFunction(
            lambda t: self.evaluator(t).conjugate(), self.growth, self.breakpoints,
            f0.conjugate() if f0 is not None else None,
        )

    def scaled_left(self, factor: Quaternion) -> "TimeDomainFunction":
        g = self.growth
        f0 = self.value_at_zero_plus
        return TimeDomainFunction(
            lambda t: factor * self.evaluator(t),
            GrowthBound(g.a, g.K * max(factor.norm(), 1e-300), g.T),
            self.breakpoints,
            factor * f0 if f0 is not None else None,
        )

    def scaled_right(self, factor: Quaternion) -> "TimeDomainFunction":
        g = self.growth
        f0 = self.value_at_zero_plus
        return TimeDomainFunction(
            lambda t: self.evaluator(t) * factor,
            GrowthBound(g.a, g.K * max(factor.norm(), 1e-300), g.T),
            self.breakpoints,
            f0 * factor if f0 is not None else None,
        )

    def __add__(self, other: "TimeDomainFunction") -> "TimeDomainFunction":
        ga, gb = self.growth, other.growth
        f0 = None
        if self.value_at_zero_plus is not None and other.value_at_zero_plus is not None:
            f0 = self.value_at_zero_plus + other.value_at_zero_plus
        return TimeDomainFunction(
            lambda t: self.evaluator(t) + other.evaluator(t),
            GrowthBound(max(ga.a, gb.a), ga.K + gb.K, max(ga.T, gb.T)),
            sorted({*self.breakpoints, *other.breakpoints}),
            f0,
        )


# -- factories -----------------------------------------------------------------


def constant_function(value: Quaternion) -> TimeDomainFunction:
    v = value if isinstance(value, Quaternion) else Quaternion.real(value)
    return TimeDomainFunction(
        lambda t: v, GrowthBound(0.0, max(v.norm(), 1e-300)), (), v
    )


def exponential_function(b: Quaternion) -> TimeDomainFunction:
    """t -> e^{b t}; |e^{bt}| = e^{Re(b) t} gives the exact growth certificate."""
    b = b if isinstance(b, Quaternion) else Quaternion.real(b)
    return TimeDomainFunction(
        lambda t: quat_exp(b * t), GrowthBound(max(b.w, 0.0), 1.0), (), ONE
    )


#: default exponential order assigned to polynomials (any positive rate works)
POLY_RATE = 0.1


def polynomial_function(coeffs: Sequence[Quaternion], rate: float = POLY_RATE) -> TimeDomainFunction:
    """t -> sum_n c_n t^n with quaternion coefficients (t is real, order is moot)."""
    cs = [c if isinstance(c, Quaternion) else Quaternion.real(c) for c in coeffs]
    if not cs:
        cs = [Quaternion()]
    # sup of t^n e^{-rate t} is (n / (rate e))^n, so K bounds every monomial
    K = 0.0
    for n, c in enumerate(cs):
        peak = 1.0 if n == 0 else (n / (rate * math.e)) ** n
        K += c.norm() * peak
    def evaluate(t: float) -> Quaternion:
        acc = cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * t + c
        return acc

    return TimeDomainFunction(evaluate, GrowthBound(rate, max(K, 1e-300)), (), cs[0])


def heaviside_shifted(inner: TimeDomainFunction, shift: float) -> TimeDomainFunction:
    """t -> f(t - shift) H(t - shift) with H(0) = 1."""
    if shift <= 0:
        raise UsageError("heaviside shift must be positive")
    g = inner.growth

    def evaluate(t: float) -> Quaternion:
        if t < shift:
            return Quaternion()
        return inner.evaluator(t - shift)

    breaks = [shift] + [b + shift for b in inner.breakpoints]
    return TimeDomainFunction(
        evaluate, GrowthBound(g.a, g.K, g.T + shift), breaks, Quaternion()
    )


def time_function_from_json(spec: dict) -> TimeDomainFunction:
    """Build a TimeDomainFunction from its JSON description.

    Kinds: {"kind": "exp", "b": [...]}, {"kind": "poly", "coeffs": [[...], ...]},
    {"kind": "heaviside_shift", "shift": a, "inner": {...}},
    {"kind": "sum", "terms": [...]}, {"kind": "scale", "factor": [...],
    "where": "left"|"right", "inner": {...}}.  Optional keys exp_order
    ({"a":, "K":, "T":}), breakpoints and value_at_zero_plus override the
    derived metadata.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise UsageError("function spec must be an object with a 'kind' field")
    kind = spec["kind"]
    try:
        if kind == "exp":
            fn = exponential_function(quat_from_list(spec["b"]))
        elif kind == "poly":
            fn = polynomial_function([quat_from_list(c) for c in spec["coeffs"]])
        elif kind == "heaviside_shift":
            fn = heaviside_shifted(time_function_from_json(spec["inner"]),
                                   float(spec["shift"]))
        elif kind == "sum":
            terms = [time_function_from_json(t) for t in spec["terms"]]
            if not terms:
                raise UsageError("sum needs at least one term")
            fn = terms[0]
            for t in terms[1:]:
                fn = fn + t
        elif kind == "scale":
            inner = time_function_from_json(spec["inner"])
            factor = quat_from_list(spec["factor"])
            where = spec.get("where", "left")
            if where == "left":
                fn = inner.scaled_left(factor)
            elif where == "right":
                fn = inner.scaled_right(factor)
            else:
                raise UsageError(f"scale 'where' must be left or right, got {where!r}")
        else:
            raise UsageError(f"unknown function kind {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed function spec (kind {kind!r}): {exc}") from exc

    growth = fn.growth
    if "exp_order" in spec:
        eo = spec["exp_order"]
        try:
            growth = GrowthBound(float(eo["a"]), float(eo["K"]), float(eo.get("T", 0.0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed exp_order: {exc}") from exc
    breaks = spec.get("breakpoints", fn.breakpoints)
    f0 = fn.value_at_zero_plus
    if "value_at_zero_plus" in spec:
        f0 = quat_from_list(spec["value_at_zero_plus"])
    return TimeDomainFunction(fn.evaluator, growth, breaks, f0)


def estimate_exp_order(evaluator: Callable[[float], Quaternion], t_max: float,
                       samples: int = 80, tail_safety: float = 10.0) -> GrowthBound:
    """Least-squares fit of the tail slope of log|f| on [t_max/2, t_max].

    The fitted K is inflated by tail_safety.  Growth that looks faster than
    exponential over the window (significant upward curvature of log|f|)
    raises EstimationError rather than returning a bogus certificate.
    """
    t0 = t_max / 2.0
    ts, logs = [], []
    for k in range(samples):
        t = t0 + (t_max - t0) * k / (samples - 1)
        v = evaluator(t)
        n = v.norm() if isinstance(v, Quaternion) else abs(v)
        if n > 0.0:
            ts.append(t)
            logs.append(math.log(n))
    if len(ts) < 8:
        return GrowthBound(0.0, tail_safety * 1e-12, t0)
    ts_arr = np.asarray(ts)
    logs_arr = np.asarray(logs)
    quad = np.polyfit(ts_arr, logs_arr, 2)
    window = ts_arr[-1] - ts_arr[0]
    if quad[0] * window * window > 0.5:
        raise EstimationError(
            f"log|f| curves upward by {quad[0] * window * window:.2f} over the window; "
            "growth looks super-exponential"
        )
    slope, intercept = np.polyfit(ts_arr, logs_arr, 1)
    a = max(float(slope), 0.0)
    residual = float(np.max(logs_arr - (slope * ts_arr + intercept)))
    K = math.exp(float(intercept) + residual) * tail_safety
    return GrowthBound(a, max(K, 1e-300), t0)
