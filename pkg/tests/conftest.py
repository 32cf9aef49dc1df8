import cmath

import numpy as np
import pytest

from sliceregular.quaternion import Quaternion, slice_embed


@pytest.fixture
def rng():
    return np.random.default_rng(20230517)


def assert_qclose(actual: Quaternion, expected: Quaternion, tol: float = 1e-12):
    d = (actual - expected).norm()
    assert d <= tol, f"{actual} != {expected} (|diff| = {d:.3e} > {tol:.1e})"


def scipy_complex_laplace(component, sigma: complex, T: float = 80.0) -> complex:
    """Independent oracle: QUADPACK on the real and imaginary parts."""
    from scipy.integrate import quad

    def real_part(t):
        return (cmath.exp(-t * sigma) * component(t)).real

    def imag_part(t):
        return (cmath.exp(-t * sigma) * component(t)).imag

    re, _ = quad(real_part, 0.0, T, limit=400, epsabs=1e-12)
    im, _ = quad(imag_part, 0.0, T, limit=400, epsabs=1e-12)
    return complex(re, im)


def gauss_legendre_complex(fn, a: float, b: float, panels: int = 64, order: int = 24) -> complex:
    """Fixed-rule composite Gauss-Legendre, independent of the adaptive engine."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    total = 0.0 + 0.0j
    edges = np.linspace(a, b, panels + 1)
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        for xk, wk in zip(nodes, weights):
            total += wk * half * fn(mid + half * xk)
    return total


def embed_complex(w: complex, unit: Quaternion) -> Quaternion:
    return slice_embed(w.real, w.imag, unit)
