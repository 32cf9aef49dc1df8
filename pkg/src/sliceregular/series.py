"""Truncated power series with quaternion coefficients.

A left series is sum_n q^n a_n (powers to the left of the coefficients), a
right series is sum_n a_n q^n.  Coefficient-level operations implement the
regular calculus exactly: the star product, regular conjugation,
symmetrization, the regular reciprocal, the slice derivative, the reflection
involution that swaps the two sides, and the split of a series into four
real-coefficient (intrinsic) components.

The star product uses the Cauchy convolution c_n = sum_k a_k b_{n-k} for both
sides: that is the unique convention under which the product evaluated at a
real point equals the pointwise product of the factors, on either side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import ConsistencyError, SingularSeriesError, UsageError
from .quaternion import Quaternion, quat_from_list

__all__ = ["Side", "SeriesEvalReport", "RegularSeries", "assemble_components"]

#: coefficients closer than this are considered equal / snapped to zero
COEFF_TOL = 1e-13


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    def flipped(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True, slots=True)
class SeriesEvalReport:
    """Value of a truncated evaluation plus a crude tail indicator."""

    value: Quaternion
    terms_used: int
    trunc_bound: float


def _as_quaternion(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion.real(value)
    if isinstance(value, (list, tuple)):
        return quat_from_list(value)
    raise UsageError(f"cannot interpret {value!r} as a quaternion coefficient")


class RegularSeries:
    """Truncated regular power series: coefficients a_0..a_N plus a side tag."""

    __slots__ = ("side", "coeffs")

    def __init__(self, coeffs: Iterable, side: Side = Side.LEFT):
        cs = tuple(_as_quaternion(c) for c in coeffs)
        if not cs:
            cs = (Quaternion(),)
        self.side = side
        self.coeffs = cs

    @classmethod
    def left(cls, coeffs: Iterable) -> "RegularSeries":
        return cls(coeffs, Side.LEFT)

    @classmethod
    def right(cls, coeffs: Iterable) -> "RegularSeries":
        return cls(coeffs, Side.RIGHT)

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def trimmed(self) -> "RegularSeries":
        """Drop exact-zero trailing coefficients (the canonical representative)."""
        last = 0
        for n, c in enumerate(self.coeffs):
            if c.norm() != 0.0:
                last = n
        return RegularSeries(self.coeffs[: last + 1], self.side)

    def is_intrinsic(self, tol: float = 0.0) -> bool:
        return all(c.im_norm() <= tol for c in self.coeffs)

    def __repr__(self) -> str:
        return f"RegularSeries({[str(c) for c in self.coeffs]}, {self.side.value})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegularSeries):
            return NotImplemented
        if self.side is not other.side:
            return False
        a, b = self.trimmed().coeffs, other.trimmed().coeffs
        if len(a) != len(b):
            # compare padded: trailing near-zero coefficients may survive trimming
            m = max(len(a), len(b))
            a = a + (Quaternion(),) * (m - len(a))
            b = b + (Quaternion(),) * (m - len(b))
        return all((p - q).norm() <= COEFF_TOL for p, q in zip(a, b))

    __hash__ = None

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "RegularSeries") -> "RegularSeries":
        self._require_same_side(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Quaternion(),) * (n - len(self.coeffs))
        b = other.coeffs + (Quaternion(),) * (n - len(other.coeffs))
        return RegularSeries([p + q for p, q in zip(a, b)], self.side)

    def __sub__(self, other: "RegularSeries") -> "RegularSeries":
        return self + (-other)

    def __neg__(self) -> "RegularSeries":
        return RegularSeries([-c for c in self.coeffs], self.side)

    def scale_left(self, factor) -> "RegularSeries":
        lam = _as_quaternion(factor)
        return RegularSeries([lam * c for c in self.coeffs], self.side)

    def scale_right(self, factor) -> "RegularSeries":
        lam = _as_quaternion(factor)
        return RegularSeries([c * lam for c in self.coeffs], self.side)

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, q) -> SeriesEvalReport:
        """Horner evaluation respecting the side; truncation is the caller's business."""
        q = _as_quaternion(q)
        cs = self.trimmed().coeffs
        acc = cs[-1]
        if self.side is Side.LEFT:
            for c in reversed(cs[:-1]):
                acc = c + q * acc
        else:
            for c in reversed(cs[:-1]):
                acc = acc * q + c
        bound = cs[-1].norm() * q.norm() ** (len(cs) - 1)
        return SeriesEvalReport(acc, len(cs), bound)

    def __call__(self, q) -> Quaternion:
        return self.evaluate(q).value

    # -- regular calculus ------------------------------------------------------

    def _require_same_side(self, other: "RegularSeries") -> None:
        if self.side is not other.side:
            raise UsageError("series sides do not match")

    def star(self, other: "RegularSeries") -> "RegularSeries":
        """Star (regular) product: Cauchy convolution of the coefficients.

        The truncation order of the result is the exact sum of the orders.
        """
        self._require_same_side(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(len(a) + len(b) - 1):
            acc = Quaternion()
            for k in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
                acc = acc + a[k] * b[n - k]
            out.append(acc)
        return RegularSeries(out, self.side)

    def regular_conjugate(self) -> "RegularSeries":
        """Coefficientwise quaternion conjugation; same side, same order."""
        return RegularSeries([c.conjugate() for c in self.coeffs], self.side)

    def symmetrization(self, snap_tol: float = COEFF_TOL) -> "RegularSeries":
        """f star f^c; intrinsic by construction, so the result is snapped real.

        Imaginary residue above `snap_tol` means the star product itself went
        wrong and raises rather than silently rounding.
        """
        raw = self.star(self.regular_conjugate())
        coeffs = []
        for c in raw.coeffs:
            residue = c.im_norm()
            if residue > snap_tol:
                raise ConsistencyError(
                    f"symmetrization produced imaginary residue {residue:.3e} > {snap_tol:.1e}"
                )
            coeffs.append(Quaternion.real(c.w))
        return RegularSeries(coeffs, self.side)

    def reciprocal(self, order: int) -> "RegularSeries":
        """Regular reciprocal through the given order: invert f^s, multiply by f^c.

        Requires a_0 != 0; otherwise the origin lies in the zero set of the
        symmetrization and no reciprocal exists near 0.
        """
        if order < 0:
            raise UsageError("reciprocal order must be non-negative")
        if self.coeffs[0].norm() == 0.0:
            raise SingularSeriesError(
                "constant coefficient is zero: 0 belongs to the zero set of the "
                "symmetrization f^s, so the regular reciprocal is undefined at the origin"
            )
        sym = self.symmetrization()
        s = [c.w for c in sym.coeffs]
        inv = [1.0 / s[0]]
        for n in range(1, order + 1):
            acc = 0.0
            for k in range(1, min(n, len(s) - 1) + 1):
                acc += s[k] * inv[n - k]
            inv.append(-acc / s[0])
        inv_series = RegularSeries([Quaternion.real(v) for v in inv], self.side)
        product = inv_series.star(self.regular_conjugate())
        return RegularSeries(product.coeffs[: order + 1], self.side)

    def slice_derivative(self) -> "RegularSeries":
        """Termwise derivative a_n -> (n+1) a_{n+1}; preserves the side."""
        if len(self.coeffs) == 1:
            return RegularSeries([Quaternion()], self.side)
        return RegularSeries(
            [(n + 1) * c for n, c in enumerate(self.coeffs[1:])], self.side
        )

    def reflect(self) -> "RegularSeries":
        """Reflection involution q -> conj(f(conj q)): conjugate coefficients, flip side.

        Swaps left and right regularity and reverses star products.
        """
        return RegularSeries([c.conjugate() for c in self.coeffs], self.side.flipped())

    def intrinsic_components(self) -> tuple["RegularSeries", "RegularSeries", "RegularSeries", "RegularSeries"]:
        """Split into four real-coefficient series h_m with f = h0 + h1*i + h2*j + h3*k."""
        comps = []
        for m in range(4):
            comps.append(
                RegularSeries(
                    [Quaternion.real(c.components()[m]) for c in self.coeffs], self.side
                )
            )
        return tuple(comps)

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"side": self.side.value, "coeffs": [c.to_list() for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RegularSeries":
        try:
            side = Side(data["side"])
            coeffs = [quat_from_list(c) for c in data["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed series spec: {exc}") from exc
        return cls(coeffs, side)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "RegularSeries":
        return cls.from_json_dict(json.loads(text))


def assemble_components(components: Sequence[RegularSeries]) -> RegularSeries:
    """Inverse of intrinsic_components: rebuild f from four real-coefficient series."""
    if len(components) != 4:
        raise UsageError("expected exactly four component series")
    side = components[0].side
    if any(c.side is not side for c in components):
        raise UsageError("component series sides do not match")
    n = max(len(c.coeffs) for c in components)
    coeffs = []
    for idx in range(n):
        vals = [
            c.coeffs[idx].w if idx < len(c.coeffs) else 0.0 for c in components
        ]
        coeffs.append(Quaternion(*vals))
    return RegularSeries(coeffs, side)
