"""Shared test helpers: deterministic low-discrepancy sampling and
relative-difference utilities."""

from __future__ import annotations

import math


def rel_diff(a: complex, b: complex) -> float:
    """Symmetric relative difference, 0 when both vanish."""
    denom = abs(a) + abs(b)
    return 2.0 * abs(a - b) / denom if denom else 0.0


def kronecker_points(n: int, lo: float = -3.0, hi: float = 3.0):
    """Deterministic 2-d low-discrepancy sequence on [lo, hi]^2 (additive
    recurrence driven by the plastic constant; reproducible, seedless)."""
    g = 1.3247179572447460260  # real root of t^3 = t + 1
    a1 = 1.0 / g
    a2 = 1.0 / (g * g)
    span = hi - lo
    pts = []
    u = v = 0.5
    for _ in range(n):
        u = (u + a1) % 1.0
        v = (v + a2) % 1.0
        pts.append(complex(lo + span * u, lo + span * v))
    return pts


def kronecker_reals(n: int, lo: float, hi: float):
    """Deterministic 1-d low-discrepancy sequence on [lo, hi]."""
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    a = 1.0 / phi
    u = 0.5
    out = []
    for _ in range(n):
        u = (u + a) % 1.0
        out.append(lo + (hi - lo) * u)
    return out
