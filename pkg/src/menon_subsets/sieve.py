"""Linear sieves and elementary number-theoretic helpers.

Everything is exact integer arithmetic.  A SieveTables instance is built
once per run and shared read-only by the counting and gcd-sum modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

# Python's gcd already follows the conventions we need:
# gcd(0, n) = n and gcd(0, 0) = 0.
gcd = math.gcd


@dataclass(eq=False)
class SieveTables:
    """Möbius, totient and smallest-prime-factor tables for 1..limit.

    Entry i of each list corresponds to the integer i; index 0 is padding.
    Instances are treated as immutable after construction and are safe to
    share across concurrent readers.
    """

    limit: int
    mu: list[int]
    phi: list[int]
    spf: list[int]

    @cached_property
    def mertens(self) -> list[int]:
        """Prefix sums of the Möbius values: mertens[x] = mu[1] + ... + mu[x]."""
        out = [0] * (self.limit + 1)
        acc = 0
        mu = self.mu
        for i in range(1, self.limit + 1):
            acc += mu[i]
            out[i] = acc
        return out


def build_sieve(limit: int) -> SieveTables:
    """Build mu, phi and smallest-prime-factor tables up to `limit`.

    Linear sieve: every composite is crossed off exactly once, via its
    smallest prime factor, so construction is O(limit).
    """
    if limit < 1:
        raise ValueError("sieve limit must be a positive integer")
    mu = [0] * (limit + 1)
    phi = [0] * (limit + 1)
    spf = [0] * (limit + 1)
    mu[1] = 1
    phi[1] = 1
    primes: list[int] = []
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
            mu[i] = -1
            phi[i] = i - 1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            spf[ip] = p
            if i % p == 0:
                mu[ip] = 0
                phi[ip] = phi[i] * p
                break
            mu[ip] = -mu[i]
            phi[ip] = phi[i] * (p - 1)
    return SieveTables(limit, mu, phi, spf)


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order.

    Trial division up to sqrt(n), so it works for any n regardless of the
    sieve limit.
    """
    if n < 1:
        raise ValueError("divisors() needs n >= 1")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            q = n // d
            if q != d:
                large.append(q)
        d += 1
    large.reverse()
    return small + large


def mod_inverse(a: int, m: int) -> int:
    """Least positive x with a*x = 1 (mod m).

    For m = 1 every residue qualifies and 1 is returned.  Raises ValueError
    when gcd(a, m) != 1, since no inverse exists.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return 1
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)
