"""Modular arithmetic behind residue designs.

A residue design joins each point ``k`` of ``0..n-1`` to ``a*k mod n``.
The segments that get drawn twice (or collapse to a point) are exactly the
sources ``s`` with ``a*a*s == s (mod n)``; that set is a cyclic subgroup of
``Z_n`` and is described here by :class:`SubgroupInfo`.

Python integers are unbounded, so products such as ``a*a*s`` never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "DesignParams",
    "SubgroupInfo",
    "gcd",
    "doubled_subgroup",
    "enumerate_H",
    "is_prime",
    "multiplicative_order",
    "is_primitive_root",
    "prime_factors",
]


@dataclass(frozen=True)
class DesignParams:
    """One residue design: ``n`` nails, factor ``a``, circle radius ``r``.

    ``a`` is kept as given; functions reduce it mod ``n`` when they need to.
    """

    n: int
    a: int
    r: float = 1.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        if isinstance(self.a, bool) or int(self.a) != self.a or self.a < 2:
            raise ValueError(f"a must be an integer >= 2, got {self.a!r}")
        if not (self.r > 0) or math.isinf(self.r):
            raise ValueError(f"r must be a positive finite number, got {self.r!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "r", float(self.r))


@dataclass(frozen=True)
class SubgroupInfo:
    """Structure of ``H = {s : a^2 s == s mod n}``.

    ``m`` is the order of H and ``generator == n // m``.  The trivial group
    is stored as ``m == 1, generator == n`` so the relation holds uniformly.
    """

    n: int
    m: int
    generator: int
    g1: int
    g2: int

    def elements(self) -> list[int]:
        return [i * self.generator for i in range(self.m)]


def gcd(x: int, y: int) -> int:
    """Greatest common divisor of two nonnegative integers.

    ``gcd(x, 0) == x`` and, by convention, ``gcd(0, 0) == 0``.
    """
    if x < 0 or y < 0:
        raise ValueError("gcd is defined here for nonnegative integers only")
    while y:
        x, y = y, x % y
    return x


def _step_gcd(a: int, n: int) -> int:
    # gcd(a - 1, n) with a reduced first; a == 1 (mod n) gives n
    return gcd((a - 1) % n, n)


def doubled_subgroup(params: DesignParams) -> SubgroupInfo:
    """Return the doubled-or-degenerate subgroup of a design.

    ``m`` is the largest divisor of ``n`` with ``a^2 == 1 (mod m)``, which
    equals ``gcd(a^2 - 1, n)``: a divisor ``d`` of ``n`` satisfies the
    congruence exactly when ``d`` divides ``a^2 - 1``.

    >>> doubled_subgroup(DesignParams(56, 3))
    SubgroupInfo(n=56, m=8, generator=7, g1=2, g2=2)
    """
    n = params.n
    a = params.a % n
    m = gcd(abs(a * a - 1), n)
    return SubgroupInfo(
        n=n,
        m=m,
        generator=n // m,
        g1=_step_gcd(a, n),
        g2=_step_gcd(a, m),
    )


def enumerate_H(params: DesignParams) -> list[int]:
    """Ascending residues ``s`` with ``a^2 s == s (mod n)``."""
    return doubled_subgroup(params).elements()


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division by small primes, then Miller-Rabin with the first twelve
    prime bases, which is exact for every ``n < 3.3e24``.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> dict[int, int]:
    """Trial-division factorization ``{prime: exponent}`` of ``n >= 1``."""
    if n < 1:
        raise ValueError("prime_factors needs n >= 1")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _totient(n: int) -> int:
    phi = n
    for p in prime_factors(n):
        phi -= phi // p
    return phi


def multiplicative_order(a: int, n: int) -> int:
    """Smallest ``d >= 1`` with ``a^d == 1 (mod n)``.

    Starts from Euler's totient and strips prime factors while the power
    still reduces to 1.
    """
    if n < 2:
        raise ValueError(f"multiplicative order needs n >= 2, got {n}")
    if gcd(a % n, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}; order undefined")
    order = _totient(n)
    for p in prime_factors(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def is_primitive_root(a: int, p: int) -> bool:
    """True when ``a`` generates the multiplicative group mod the prime ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a % p == 0:
        raise ValueError(f"{a} is not a unit mod {p}")
    return multiplicative_order(a, p) == p - 1
