"""Brute-force reference values, computed straight from the definitions.

Nothing here touches the closed forms or the number-theory helpers: no gcd,
no cotangent, no subgroup generator. Each function is O(n).
"""

from __future__ import annotations

import math

from .numtheory import DesignParams

__all__ = ["brute_gross", "brute_net", "brute_H"]


def brute_gross(params: DesignParams) -> float:
    n, a, r = params.n, params.a, params.r
    total = 0.0
    for k in range(n):
        steps = ((a - 1) * k) % n
        total += 2.0 * r * math.sin(math.pi * steps / n)
    return total


def brute_net(params: DesignParams) -> float:
    n, a, r = params.n, params.a, params.r
    segments = set()
    for k in range(n):
        t = (a * k) % n
        if t != k:
            segments.add(frozenset((k, t)))
    total = 0.0
    for seg in segments:
        s, t = sorted(seg)
        total += 2.0 * r * math.sin(math.pi * (t - s) / n)
    return total


def brute_H(params: DesignParams) -> list[int]:
    n, a = params.n, params.a
    return [s for s in range(n) if (a * a * s - s) % n == 0]
