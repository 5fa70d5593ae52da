"""Menon-type gcd sums.

menon_classic(n)  -- sum of gcd(a-1, n) over a reduced residue system mod n,
                     which closes to phi(n) * tau(n)
menon_sum(n)      -- the same kind of sum taken over all nonempty subsets A
                     of {1..n} whose gcd is coprime to n, each contributing
                     gcd(gcd(A) - 1, n)
menon_sum_k(n, k) -- restriction to k-element subsets

menon_sum evaluates a triple divisor sum that expresses the total through
the relatively prime subset counts:

    sum over d | n of phi(d) *
      sum over squarefree delta | n with gcd(delta, d) = 1 of mu(delta) *
        sum over j in 1..n/delta with delta * j = 1 (mod d) of
          relprime_subsets(floor(n / (j * delta)))

The congruence on j is solvable exactly because gcd(delta, d) = 1, so the
inner loop starts at the modular inverse of delta and steps by d instead of
scanning and filtering.  Prime-power and prime inputs additionally admit
collapsed forms (the only surviving (d, delta) pairs are (1, 1), (1, p) and
(p^s, 1)), exposed as *_prime_power and *_prime; `evaluate` dispatches
between the general and collapsed routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counts import MemoCache, relprime_k_subsets, relprime_subsets
from .sieve import SieveTables, divisors, gcd, mod_inverse

THEOREM = "theorem"
PRIME_POWER = "prime-power"
AUTO = "auto"
MENON_STRATEGIES = (THEOREM, PRIME_POWER, AUTO)


def is_prime(n: int) -> bool:
    """Trial-division primality check; inputs here are desk scale."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power_split(n: int) -> tuple[int, int] | None:
    """Return (p, t) with n = p**t and p prime, or None if n is not one."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return (n, 1)
    t = 0
    m = n
    while m % p == 0:
        m //= p
        t += 1
    return (p, t) if m == 1 else None


@dataclass(frozen=True)
class MenonParams:
    """Arguments for one gcd-sum evaluation: n, optional k, strategy."""

    n: int
    k: int | None = None
    strategy: str = AUTO

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be >= 1 when given")
        if self.strategy not in MENON_STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.strategy == PRIME_POWER and prime_power_split(self.n) is None:
            raise ValueError(f"{self.n} is not a prime power")


def _check(n: int, sieve: SieveTables) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if sieve.limit < n:
        raise ValueError(f"sieve limit {sieve.limit} is too small for n = {n}")


def menon_classic(n: int, sieve: SieveTables, direct_sum: bool = False) -> int:
    """Classic identity value phi(n) * tau(n).

    With direct_sum=True, instead accumulates gcd(a - 1, n) over the
    reduced residues a mod n -- the definitional sum, kept around for
    cross-checking.
    """
    _check(n, sieve)
    if direct_sum:
        return sum(gcd(a - 1, n) for a in range(1, n + 1) if gcd(a, n) == 1)
    return sieve.phi[n] * len(divisors(n))


def menon_sum(n: int, sieve: SieveTables, cache: MemoCache | None = None) -> int:
    """Subset gcd sum via the triple divisor sum (see module docstring)."""
    return _triple_sum(n, sieve, cache, k=None)


def menon_sum_k(
    n: int, k: int, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """k-subset restriction of menon_sum; 0-consistent when k exceeds n."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _triple_sum(n, sieve, cache, k=k)


def _triple_sum(
    n: int, sieve: SieveTables, cache: MemoCache | None, k: int | None
) -> int:
    _check(n, sieve)
    divs = divisors(n)
    mu = sieve.mu
    phi = sieve.phi
    total = 0
    for d in divs:
        phi_d = phi[d]
        for delta in divs:
            mu_delta = mu[delta]
            if mu_delta == 0 or gcd(delta, d) != 1:
                continue
            if n % delta:
                raise ArithmeticError(f"{delta} is not a divisor of {n}")
            upper = n // delta  # exact division
            j = 1 if d == 1 else mod_inverse(delta % d, d)
            inner = 0
            while j <= upper:
                m = n // (j * delta)
                if m < 1:
                    raise ArithmeticError("inner floor argument fell below 1")
                if k is None:
                    inner += relprime_subsets(m, sieve, cache=cache)
                else:
                    inner += relprime_k_subsets(m, k, sieve, cache=cache)
                j += d
            total += phi_d * mu_delta * inner
    if total < 0:
        raise ArithmeticError(f"gcd sum came out negative ({total})")
    return total


def _check_prime_power(p: int, t: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t < 1:
        raise ValueError("exponent t must be >= 1")


def menon_sum_prime_power(
    p: int, t: int, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """Collapsed form of menon_sum at n = p**t."""
    return _prime_power_sum(p, t, sieve, cache, k=None)


def menon_sum_k_prime_power(
    p: int, t: int, k: int, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """Collapsed form of menon_sum_k at n = p**t."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _prime_power_sum(p, t, sieve, cache, k=k)


def _count(m, sieve, cache, k):
    if k is None:
        return relprime_subsets(m, sieve, cache=cache)
    return relprime_k_subsets(m, k, sieve, cache=cache)


def _prime_power_sum(
    p: int, t: int, sieve: SieveTables, cache: MemoCache | None, k: int | None
) -> int:
    _check_prime_power(p, t)
    n = p**t
    _check(n, sieve)
    total = sum(_count(n // j, sieve, cache, k) for j in range(1, n + 1))
    prev = p ** (t - 1)
    total -= sum(_count(prev // j, sieve, cache, k) for j in range(1, prev + 1))
    correction = 0
    for s in range(1, t + 1):
        ps = p**s
        inner = 0
        for m in range(1, p ** (t - s) + 1):
            inner += _count(n // (1 + (m - 1) * ps), sieve, cache, k)
        correction += p ** (s - 1) * inner
    total += (p - 1) * correction
    if total < 0:
        raise ArithmeticError(f"gcd sum came out negative ({total})")
    return total


def menon_sum_prime(
    p: int, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """Prime specialization: p * f(p) - 1 + sum over j in 2..p of f(floor(p/j))."""
    _check_prime_power(p, 1)
    _check(p, sieve)
    total = p * relprime_subsets(p, sieve, cache=cache) - 1
    for j in range(2, p + 1):
        total += relprime_subsets(p // j, sieve, cache=cache)
    return total


def menon_sum_k_prime(
    p: int, k: int, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """Prime specialization of the k-subset sum."""
    _check_prime_power(p, 1)
    if k < 1:
        raise ValueError("k must be >= 1")
    _check(p, sieve)
    total = p * relprime_k_subsets(p, k, sieve, cache=cache)
    total -= relprime_k_subsets(1, k, sieve, cache=cache)
    for j in range(2, p + 1):
        total += relprime_k_subsets(p // j, k, sieve, cache=cache)
    if total < 0:
        raise ArithmeticError(f"gcd sum came out negative ({total})")
    return total


def evaluate(
    params: MenonParams, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """Evaluate the subset gcd sum for `params`, dispatching on strategy.

    AUTO picks the collapsed prime-power route when n is a prime power and
    the general triple sum otherwise; both routes return identical values
    wherever both apply.
    """
    strategy = params.strategy
    split = prime_power_split(params.n)
    if strategy == AUTO:
        strategy = PRIME_POWER if split is not None else THEOREM
    if strategy == THEOREM:
        if params.k is None:
            return menon_sum(params.n, sieve, cache)
        return menon_sum_k(params.n, params.k, sieve, cache)
    if split is None:
        raise ValueError(f"{params.n} is not a prime power")
    p, t = split
    if params.k is None:
        return menon_sum_prime_power(p, t, sieve, cache)
    return menon_sum_k_prime_power(p, t, params.k, sieve, cache)
