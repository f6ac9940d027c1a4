"""Cached Gauss quadrature rules and composite-panel helpers."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi, roots_legendre


@lru_cache(maxsize=128)
def legendre_rule(n: int):
    x, w = roots_legendre(n)
    return x, w


@lru_cache(maxsize=128)
def jacobi_rule(n: int, beta: float):
    """Nodes/weights for weight (1+x)^beta on [-1, 1] (alpha = 0)."""
    x, w = roots_jacobi(n, 0.0, beta)
    return x, w


def mapped_legendre(a: float, b: float, n: int):
    """Gauss-Legendre nodes/weights on [a, b]."""
    x, w = legendre_rule(n)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def panel_edges(a: float, b: float, max_len: float):
    """Uniform panel subdivision of [a, b] with panels no longer than max_len."""
    k = max(1, int(np.ceil((b - a) / max_len)))
    return np.linspace(a, b, k + 1)


def composite_legendre(f, a: float, b: float, n: int = 32, max_len: float = 2.0):
    """Integrate a smooth vectorized f over [a, b] by fixed GL panels."""
    total = 0.0
    edges = panel_edges(a, b, max_len)
    for lo, hi in zip(edges[:-1], edges[1:]):
        x, w = mapped_legendre(lo, hi, n)
        total += float(np.dot(w, f(x)))
    return total
