"""Intrinsic complex stems: the scalar building blocks of slice functions.

A stem is a holomorphic evaluator on an axially symmetric complex region
satisfying the reflection symmetry f(conj z) = conj(f(z)) (equivalently, a
power series with real coefficients).  Stems are callables plus an optional
analytic derivative; there is no symbolic layer, because transform stems are
defined by quadrature and are only evaluable.
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Optional, Sequence, Union

from .errors import CapabilityError, PoleError, UsageError
from .regions import Region, disk

__all__ = [
    "IntrinsicStem",
    "constant_stem",
    "identity_stem",
    "polynomial_stem",
    "rational_stem",
    "exp_stem",
    "exp_decay_stem",
    "stem_sum",
    "stem_product",
    "stem_scale",
    "stem_shift",
    "stem_mul_z",
    "stem_div_z",
    "numeric_derivative_stem",
    "symmetry_defect",
]

ENTIRE = disk(math.inf)

DerivativeSpec = Union["IntrinsicStem", Callable[[], "IntrinsicStem"], None]

#: default step of the 4-point numeric complex derivative
NUMERIC_STEP = 1e-4


class IntrinsicStem:
    """Evaluable intrinsic holomorphic function of one complex variable."""

    __slots__ = ("_eval", "domain", "_derivative", "_eval_with_error", "name")

    def __init__(
        self,
        evaluator: Callable[[complex], complex],
        domain: Region = ENTIRE,
        derivative: DerivativeSpec = None,
        evaluator_with_error: Optional[Callable[[complex], tuple[complex, float]]] = None,
        name: str = "stem",
    ):
        self._eval = evaluator
        self.domain = domain
        self._derivative = derivative
        self._eval_with_error = evaluator_with_error
        self.name = name

    def __call__(self, z: complex) -> complex:
        return complex(self._eval(complex(z)))

    def eval_with_error(self, z: complex) -> tuple[complex, float]:
        """Value together with an absolute error bound (0 for analytic stems)."""
        if self._eval_with_error is not None:
            return self._eval_with_error(complex(z))
        return self(z), 0.0

    @property
    def has_derivative(self) -> bool:
        return self._derivative is not None

    def derivative_stem(self, numeric_step: Optional[float] = NUMERIC_STEP) -> "IntrinsicStem":
        """Analytic derivative if available, else a 4-point central difference.

        Passing numeric_step=None disables the numeric fallback, turning a
        missing analytic derivative into a CapabilityError.
        """
        d = self._derivative
        if callable(d) and not isinstance(d, IntrinsicStem):
            d = d()
            self._derivative = d
        if isinstance(d, IntrinsicStem):
            return d
        if numeric_step is None:
            raise CapabilityError(f"stem {self.name!r} has no derivative evaluator")
        return numeric_derivative_stem(self, numeric_step)

    def __repr__(self) -> str:
        return f"<IntrinsicStem {self.name} on {self.domain.kind}{self.domain.bounds}>"


def numeric_derivative_stem(stem: IntrinsicStem, h: float = NUMERIC_STEP) -> IntrinsicStem:
    """4-point central-difference derivative along the real direction."""

    def ev(z: complex) -> complex:
        return (-stem(z + 2 * h) + 8 * stem(z + h) - 8 * stem(z - h) + stem(z - 2 * h)) / (12 * h)

    return IntrinsicStem(
        ev,
        stem.domain,
        derivative=lambda: numeric_derivative_stem(numeric_derivative_stem(stem, h), h),
        name=f"d/dz[{stem.name}] (numeric)",
    )


def symmetry_defect(stem: IntrinsicStem, points: Sequence[complex]) -> float:
    """Largest violation of f(conj z) = conj(f(z)) over the probe points."""
    worst = 0.0
    for z in points:
        worst = max(worst, abs(stem(z.conjugate()) - stem(z).conjugate()))
    return worst


# -- factories ---------------------------------------------------------------


def constant_stem(value: float, domain: Region = ENTIRE) -> IntrinsicStem:
    v = float(value)  # intrinsic constants are necessarily real
    return IntrinsicStem(
        lambda z: complex(v, 0.0),
        domain,
        derivative=lambda: constant_stem(0.0, domain),
        name=f"const {v:g}",
    )


def identity_stem(domain: Region = ENTIRE) -> IntrinsicStem:
    return IntrinsicStem(
        lambda z: z,
        domain,
        derivative=lambda: constant_stem(1.0, domain),
        name="z",
    )


def _poly_eval(coeffs: Sequence[float], z: complex) -> complex:
    acc = complex(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _poly_derivative(coeffs: Sequence[float]) -> list[float]:
    if len(coeffs) <= 1:
        return [0.0]
    return [n * c for n, c in enumerate(coeffs) if n > 0]


def polynomial_stem(coeffs: Sequence[float], domain: Region = ENTIRE) -> IntrinsicStem:
    """Real-coefficient polynomial sum_n coeffs[n] z^n."""
    cs = [float(c) for c in coeffs] or [0.0]
    return IntrinsicStem(
        lambda z: _poly_eval(cs, z),
        domain,
        derivative=lambda: polynomial_stem(_poly_derivative(cs), domain),
        name=f"poly deg {len(cs) - 1}",
    )


def rational_stem(num: Sequence[float], den: Sequence[float], domain: Region,
                  pole_tol: float = 1e-12) -> IntrinsicStem:
    """Ratio of real-coefficient polynomials; raises PoleError near zeros of den."""
    nc = [float(c) for c in num] or [0.0]
    dc = [float(c) for c in den] or [0.0]

    def ev(z: complex) -> complex:
        d = _poly_eval(dc, z)
        if abs(d) <= pole_tol:
            raise PoleError(f"evaluation within {pole_tol:.0e} of a pole sphere at z={z}")
        return _poly_eval(nc, z) / d

    def make_derivative() -> IntrinsicStem:
        # (n/d)' = (n'd - nd') / d^2
        np_, dp = _poly_derivative(nc), _poly_derivative(dc)
        num2 = _poly_sub(_poly_mul(np_, dc), _poly_mul(nc, dp))
        return rational_stem(num2, _poly_mul(dc, dc), domain, pole_tol)

    return IntrinsicStem(ev, domain, derivative=make_derivative, name="rational")


def _poly_mul(a: Sequence[float], b: Sequence[float]) -> list[float]:
    out = [0.0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_sub(a: Sequence[float], b: Sequence[float]) -> list[float]:
    n = max(len(a), len(b))
    a = list(a) + [0.0] * (n - len(a))
    b = list(b) + [0.0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def exp_stem(domain: Region = ENTIRE) -> IntrinsicStem:
    stem = IntrinsicStem(cmath.exp, domain, name="exp")
    stem._derivative = stem  # its own derivative
    return stem


def exp_decay_stem(rate: float, domain: Region = ENTIRE) -> IntrinsicStem:
    """z -> exp(-rate*z) for real rate; intrinsic since the rate is real."""
    r = float(rate)

    def make_derivative() -> IntrinsicStem:
        return stem_scale(-r, exp_decay_stem(r, domain))

    return IntrinsicStem(
        lambda z: cmath.exp(-r * z), domain, derivative=make_derivative,
        name=f"exp(-{r:g} z)",
    )


# -- combinators ---------------------------------------------------------------

def _common_domain(a: IntrinsicStem, b: IntrinsicStem) -> Region:
    if a.domain == b.domain:
        return a.domain
    return a.domain.intersect(b.domain)


def stem_sum(a: IntrinsicStem, b: IntrinsicStem) -> IntrinsicStem:
    dom = _common_domain(a, b)

    def with_error(z):
        va, ea = a.eval_with_error(z)
        vb, eb = b.eval_with_error(z)
        return va + vb, ea + eb

    deriv = None
    if a.has_derivative and b.has_derivative:
        deriv = lambda: stem_sum(a.derivative_stem(None), b.derivative_stem(None))
    return IntrinsicStem(lambda z: a(z) + b(z), dom, derivative=deriv,
                         evaluator_with_error=with_error, name=f"({a.name})+({b.name})")


def stem_product(a: IntrinsicStem, b: IntrinsicStem) -> IntrinsicStem:
    dom = _common_domain(a, b)

    def with_error(z):
        va, ea = a.eval_with_error(z)
        vb, eb = b.eval_with_error(z)
        return va * vb, abs(va) * eb + abs(vb) * ea + ea * eb

    deriv = None
    if a.has_derivative and b.has_derivative:
        deriv = lambda: stem_sum(
            stem_product(a.derivative_stem(None), b),
            stem_product(a, b.derivative_stem(None)),
        )
    return IntrinsicStem(lambda z: a(z) * b(z), dom, derivative=deriv,
                         evaluator_with_error=with_error, name=f"({a.name})*({b.name})")


def stem_scale(factor: float, a: IntrinsicStem) -> IntrinsicStem:
    f = float(factor)

    def with_error(z):
        v, e = a.eval_with_error(z)
        return f * v, abs(f) * e

    deriv = None
    if a.has_derivative:
        deriv = lambda: stem_scale(f, a.derivative_stem(None))
    return IntrinsicStem(lambda z: f * a(z), a.domain, derivative=deriv,
                         evaluator_with_error=with_error, name=f"{f:g}*({a.name})")


def stem_shift(a: IntrinsicStem, offset: float) -> IntrinsicStem:
    """Precompose with z -> z + offset (real offset keeps the stem intrinsic)."""
    off = float(offset)
    dom = a.domain
    if dom.kind == "half-plane":
        dom = Region(dom.kind, (dom.bounds[0] - off,))
    elif dom.kind == "disk" and math.isfinite(dom.bounds[0]):
        # conservative: |z + off| < r is guaranteed on |z| < r - |off|
        r = dom.bounds[0] - abs(off)
        if r <= 0:
            raise UsageError(f"shift by {off:g} empties the disk domain")
        dom = Region(dom.kind, (r,))
    elif dom.kind == "annulus":
        lo, hi = dom.bounds[0] + abs(off), dom.bounds[1] - abs(off)
        if lo >= hi:
            raise UsageError(f"shift by {off:g} empties the annulus domain")
        dom = Region(dom.kind, (lo, hi))

    def with_error(z):
        return a.eval_with_error(z + off)

    deriv = None
    if a.has_derivative:
        deriv = lambda: stem_shift(a.derivative_stem(None), off)
    return IntrinsicStem(lambda z: a(z + off), dom, derivative=deriv,
                         evaluator_with_error=with_error, name=f"{a.name}(z+{off:g})")


def stem_mul_z(a: IntrinsicStem) -> IntrinsicStem:
    def with_error(z):
        v, e = a.eval_with_error(z)
        return z * v, abs(z) * e

    deriv = None
    if a.has_derivative:
        deriv = lambda: stem_sum(a, stem_mul_z(a.derivative_stem(None)))
    return IntrinsicStem(lambda z: z * a(z), a.domain, derivative=deriv,
                         evaluator_with_error=with_error, name=f"z*({a.name})")


def stem_div_z(a: IntrinsicStem, pole_tol: float = 1e-12) -> IntrinsicStem:
    def ev(z: complex) -> complex:
        if abs(z) <= pole_tol:
            raise PoleError("division by z at the origin")
        return a(z) / z

    def with_error(z):
        v, e = a.eval_with_error(z)
        if abs(z) <= pole_tol:
            raise PoleError("division by z at the origin")
        return v / z, e / abs(z)

    deriv = None
    if a.has_derivative:
        # (f/z)' = f'/z - f/z^2
        deriv = lambda: stem_sum(
            stem_div_z(a.derivative_stem(None), pole_tol),
            stem_scale(-1.0, stem_div_z(stem_div_z(a, pole_tol), pole_tol)),
        )
    return IntrinsicStem(ev, a.domain, derivative=deriv,
                         evaluator_with_error=with_error, name=f"({a.name})/z")
