"""Closed-form string lengths for residue designs.

All lengths scale linearly with the radius ``r``.  Cotangents are evaluated
as ``cos/sin`` on arguments in ``(0, pi/2]``; at exactly ``pi/2`` the result
is a float of order 1e-16 rather than an exact zero.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import asdict, dataclass

from .numtheory import DesignParams, doubled_subgroup, gcd

__all__ = [
    "LengthReport",
    "chord_length",
    "gross_length",
    "net_length",
    "approx_length",
    "lagrange_sum",
    "one_string_length",
]

# Additive fault injected into every cotangent; only the CLI's negative
# control (``verify --inject-fault``) ever sets it.
_cot_fault = 0.0


@contextmanager
def _perturbed_cot(delta: float):
    global _cot_fault
    saved, _cot_fault = _cot_fault, delta
    try:
        yield
    finally:
        _cot_fault = saved


def _cot(x: float) -> float:
    return math.cos(x) / math.sin(x) + _cot_fault


def _sum_form(n: int, g: int, r: float) -> float:
    # 2 r g cot(pi g / 2n); the angle is built from exact integers first
    return 2.0 * r * g * _cot((math.pi * g) / (2 * n))


@dataclass(frozen=True)
class LengthReport:
    gross: float
    net: float
    approx: float
    m: int
    g1: int
    g2: int
    doubled_segment_count: int
    degenerate_count: int

    def as_dict(self) -> dict:
        return asdict(self)


def chord_length(r: float, n: int, j: int) -> float:
    """Length of the chord spanning ``j`` steps out of ``n`` on a circle of radius ``r``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2.0 * r * math.sin(math.pi * (j % n) / n)


def gross_length(params: DesignParams) -> float:
    """Sum over every k of the distance from k to ``a*k mod n``.

    Doubled segments are counted twice. Equals ``2 r g cot(pi g / 2n)`` with
    ``g = gcd(a - 1, n)``.
    """
    n = params.n
    g = gcd((params.a - 1) % n, n)
    return _sum_form(n, g, params.r)


def net_length(params: DesignParams) -> LengthReport:
    """Physical string length, each doubled segment counted once.

    ``net = S(n, a, r) - S(m, a, r) / 2`` where ``S`` is the gross form and
    ``m`` the order of the doubled subgroup.
    """
    info = doubled_subgroup(params)
    n, r = params.n, params.r
    gross = _sum_form(n, info.g1, r)
    net = gross - 0.5 * _sum_form(info.m, info.g2, r)
    # every fixed point of k -> a k lies in H, and there are g1 of them
    degenerate = info.g1
    doubled = (info.m - degenerate) // 2
    return LengthReport(
        gross=gross,
        net=net,
        approx=(4 * n - 2 * info.m) * r / math.pi,
        m=info.m,
        g1=info.g1,
        g2=info.g2,
        doubled_segment_count=doubled,
        degenerate_count=degenerate,
    )


def approx_length(params: DesignParams) -> float:
    """Leading-order estimate ``(4n - 2m) r / pi`` of the net length."""
    m = doubled_subgroup(params).m
    return (4 * params.n - 2 * m) * params.r / math.pi


def one_string_length(p: int, r: float = 1.0) -> float:
    """Length ``2 r cot(pi / 2p)`` of the single string for a prime and a primitive root."""
    return _sum_form(p, 1, r)


def lagrange_sum(m: int, theta: float) -> float:
    """Closed form of ``sum(sin(j*theta) for j in range(m + 1))``.

    Raises ``ValueError`` when ``theta`` is a multiple of ``2*pi``; the sum
    is plainly 0 there but the closed form divides by zero.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    half = math.sin(theta / 2)
    if half == 0.0 or math.remainder(theta, 2 * math.pi) == 0.0:
        raise ValueError("closed form undefined for theta a multiple of 2*pi")
    return math.sin(m * theta / 2) * math.sin((m + 1) * theta / 2) / half
