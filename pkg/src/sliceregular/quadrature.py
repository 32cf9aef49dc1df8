"""Adaptive panel quadrature with an embedded Gauss-Kronrod error estimate.

The integrand is vector-valued (the real components of a complex or
quaternion integrand are integrated together); the panel error is the worst
componentwise deviation between the 15-point Kronrod value and the embedded
7-point Gauss value.  Breakpoints force panel boundaries so that jump
discontinuities never sit inside a panel, and the worst panel is bisected
until the summed error estimate meets the tolerance or the panel budget is
exhausted.  Splitting decisions depend only on the integrand and the
interval, so repeated calls are deterministic.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable

import numpy as np

from .errors import AccuracyError
from .quaternion import Quaternion

__all__ = ["integrate_adaptive", "integrate_complex", "integrate_quaternion"]

# 15-point Kronrod nodes on [-1, 1] and weights; the 7 Gauss nodes are the
# odd-indexed entries.  Standard published values.
_XGK = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759,
    0.991455371120813,
])
_WGK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870,
])
_GAUSS_INDICES = np.arange(1, 15, 2)


def _gk15(fn: Callable[[float], np.ndarray], a: float, b: float) -> tuple[np.ndarray, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    values = np.array([fn(mid + half * x) for x in _XGK])
    kronrod = half * np.tensordot(_WGK, values, axes=(0, 0))
    gauss = half * np.tensordot(_WG, values[_GAUSS_INDICES], axes=(0, 0))
    err = float(np.max(np.abs(kronrod - gauss))) if kronrod.size else 0.0
    return kronrod, err


def integrate_adaptive(fn: Callable[[float], np.ndarray], a: float, b: float, *,
                       abs_tol: float, max_panels: int = 400,
                       breakpoints: Iterable[float] = ()) -> tuple[np.ndarray, float]:
    """Integrate a vector-valued integrand over [a, b].

    Returns (value, summed error estimate); raises AccuracyError carrying the
    achieved bound when the panel budget runs out first.
    """
    if b <= a:
        probe = np.asarray(fn(a))
        return np.zeros_like(probe), 0.0
    edges = sorted({a, b, *(p for p in breakpoints if a < p < b)})
    counter = 0
    heap: list[tuple[float, float, int, float, np.ndarray, float]] = []
    total_err = 0.0
    total_val: np.ndarray | None = None
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, err = _gk15(fn, lo, hi)
        total_val = val if total_val is None else total_val + val
        total_err += err
        heapq.heappush(heap, (-err, lo, counter, hi, val, err))
        counter += 1
    n_panels = len(edges) - 1
    min_width = 1e-12 * (b - a + 1.0)
    frozen_err = 0.0
    while total_err + frozen_err > abs_tol and heap:
        if n_panels >= max_panels:
            raise AccuracyError("quadrature subdivision budget exhausted",
                                achieved=total_err + frozen_err)
        neg_err, lo, _, hi, val, err = heapq.heappop(heap)
        if hi - lo < min_width:
            # cannot refine further; count its error as irreducible
            frozen_err += err
            total_err -= err
            continue
        mid = 0.5 * (lo + hi)
        lval, lerr = _gk15(fn, lo, mid)
        rval, rerr = _gk15(fn, mid, hi)
        total_val = total_val - val + lval + rval
        total_err = total_err - err + lerr + rerr
        heapq.heappush(heap, (-lerr, lo, counter, mid, lval, lerr))
        counter += 1
        heapq.heappush(heap, (-rerr, mid, counter, hi, rval, rerr))
        counter += 1
        n_panels += 1
    return total_val, total_err + frozen_err


def integrate_complex(fn: Callable[[float], complex], a: float, b: float, *,
                      abs_tol: float, max_panels: int = 400,
                      breakpoints: Iterable[float] = ()) -> tuple[complex, float]:
    def vec(t: float) -> np.ndarray:
        v = fn(t)
        return np.array([v.real, v.imag])

    value, err = integrate_adaptive(vec, a, b, abs_tol=abs_tol,
                                    max_panels=max_panels, breakpoints=breakpoints)
    return complex(value[0], value[1]), err


def integrate_quaternion(fn: Callable[[float], Quaternion], a: float, b: float, *,
                         abs_tol: float, max_panels: int = 400,
                         breakpoints: Iterable[float] = ()) -> tuple[Quaternion, float]:
    def vec(t: float) -> np.ndarray:
        return np.array(fn(t).components())

    value, err = integrate_adaptive(vec, a, b, abs_tol=abs_tol,
                                    max_panels=max_panels, breakpoints=breakpoints)
    return Quaternion(*(float(c) for c in value)), err
