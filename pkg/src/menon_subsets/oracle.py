"""Independent ground-truth evaluators for the counting functions and gcd sums.

Two flavours:

* definitional brute force over all 2^n - 1 nonempty subsets of {1..n},
  encoded as bitmasks (bit i-1 <-> element i), and
* a gcd-class route: the nonempty subsets of {1..n} whose gcd is exactly j
  biject with the relatively prime subsets of {1..floor(n/j)}, so the
  subset gcd sum collapses to a single sum over j.  O(n) subset-count
  evaluations instead of 2^n subsets.

The gcd-class identity is validated against full enumeration in the test
suite before anything trusts it at scales enumeration cannot reach.
No clever subset DP here on purpose: the whole value of this module is
that it is obviously correct.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counts import MemoCache, relprime_k_subsets, relprime_subsets
from .sieve import SieveTables, gcd

DEFAULT_ENUMERATION_LIMIT = 24


@dataclass(frozen=True)
class SubsetSum:
    """Result of an enumerated gcd sum: term count plus accumulated total."""

    n: int
    k: int | None
    count: int
    total: int


def _check_enum(n: int, limit: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise ValueError(
            f"enumerating 2^{n} subsets exceeds the limit {limit}; "
            "pass a larger `limit` explicitly if you really mean it"
        )


def _mask_gcd(mask: int) -> int:
    # gcd of the elements encoded by mask; a low set bit b encodes the
    # element b.bit_length().  Stops early once the running gcd hits 1.
    g = 0
    while mask:
        low = mask & -mask
        g = gcd(g, low.bit_length())
        if g == 1:
            return 1
        mask ^= low
    return g


def enumerate_relprime_subsets(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Count nonempty subsets of {1..n} whose elements have gcd 1."""
    _check_enum(n, limit)
    return sum(1 for mask in range(1, 1 << n) if _mask_gcd(mask) == 1)


def enumerate_relprime_k_subsets(
    n: int, k: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> int:
    """Count k-element subsets of {1..n} whose elements have gcd 1."""
    _check_enum(n, limit)
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(
        1
        for mask in range(1, 1 << n)
        if mask.bit_count() == k and _mask_gcd(mask) == 1
    )


def enumerate_coprime_subsets(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Count nonempty subsets of {1..n} whose gcd is coprime to n."""
    _check_enum(n, limit)
    return sum(1 for mask in range(1, 1 << n) if gcd(_mask_gcd(mask), n) == 1)


def enumerate_coprime_k_subsets(
    n: int, k: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> int:
    """Count k-element subsets of {1..n} whose gcd is coprime to n."""
    _check_enum(n, limit)
    if k < 1:
        raise ValueError("k must be >= 1")
    return sum(
        1
        for mask in range(1, 1 << n)
        if mask.bit_count() == k and gcd(_mask_gcd(mask), n) == 1
    )


def enumerate_menon_sum(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> SubsetSum:
    """Accumulate gcd(g - 1, n) over nonempty subsets with gcd g coprime to n.

    Note gcd(0, n) = n, so subsets with g = 1 contribute n each.  Returns
    the term count alongside the total; the count must equal the coprime
    subset count.
    """
    _check_enum(n, limit)
    count = 0
    total = 0
    for mask in range(1, 1 << n):
        g = _mask_gcd(mask)
        if gcd(g, n) == 1:
            count += 1
            total += gcd(g - 1, n)
    return SubsetSum(n=n, k=None, count=count, total=total)


def enumerate_menon_sum_k(
    n: int, k: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> SubsetSum:
    """k-subset restriction of enumerate_menon_sum."""
    _check_enum(n, limit)
    if k < 1:
        raise ValueError("k must be >= 1")
    count = 0
    total = 0
    for mask in range(1, 1 << n):
        if mask.bit_count() != k:
            continue
        g = _mask_gcd(mask)
        if gcd(g, n) == 1:
            count += 1
            total += gcd(g - 1, n)
    return SubsetSum(n=n, k=k, count=count, total=total)


def subset_gcd_histogram(
    n: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> dict[int, int]:
    """Map j -> number of nonempty subsets of {1..n} with gcd exactly j.

    The histogram values must sum to 2^n - 1, and entry j must equal the
    relatively prime subset count of floor(n/j); both facts back the
    gcd-class evaluators below.
    """
    _check_enum(n, limit)
    hist: dict[int, int] = {}
    for mask in range(1, 1 << n):
        g = _mask_gcd(mask)
        hist[g] = hist.get(g, 0) + 1
    return hist


def gcd_class_menon_sum(
    n: int, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """Subset gcd sum via grouping by the exact gcd value j.

    total = sum over j in 1..n with gcd(j, n) = 1 of
            gcd(j - 1, n) * (# subsets with gcd exactly j),
    and the subset count for gcd j is the relatively prime subset count at
    floor(n/j).  Shares no code with the divisor-sum evaluator beyond the
    subset-count function itself.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for j in range(1, n + 1):
        if gcd(j, n) == 1:
            total += gcd(j - 1, n) * relprime_subsets(n // j, sieve, cache=cache)
    return total


def gcd_class_menon_sum_k(
    n: int, k: int, sieve: SieveTables, cache: MemoCache | None = None
) -> int:
    """k-subset restriction of gcd_class_menon_sum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 0
    for j in range(1, n + 1):
        if gcd(j, n) == 1:
            total += gcd(j - 1, n) * relprime_k_subsets(n // j, k, sieve, cache=cache)
    return total
