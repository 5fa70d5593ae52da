#!/usr/bin/env python3
"""Timing study for the evaluation strategies.

Compares DIRECT vs BLOCKED subset counting over a grid of n, and the
general divisor sum vs the collapsed prime-power form at n = 2^t.  Every
pair of timed values is checked for exact equality before timings are
trusted.
"""

import argparse
from time import perf_counter

from menon_subsets import (
    BLOCKED,
    DIRECT,
    MemoCache,
    build_sieve,
    menon_sum,
    menon_sum_prime_power,
    relprime_subsets,
)


def timed(fn):
    start = perf_counter()
    value = fn()
    return value, perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=20000)
    parser.add_argument("--max-power", type=int, default=11)
    args = parser.parse_args()

    sieve = build_sieve(max(args.n_max, 2**args.max_power))
    sieve.mertens  # build the prefix table outside the timed region

    print(f"{'n':>8}  {'direct':>10}  {'blocked':>10}   count strategies")
    n = 1000
    while n <= args.n_max:
        direct, t_direct = timed(lambda: relprime_subsets(n, sieve, strategy=DIRECT))
        blocked, t_blocked = timed(lambda: relprime_subsets(n, sieve, strategy=BLOCKED))
        if direct != blocked:
            raise SystemExit(f"strategy mismatch at n={n}")
        print(f"{n:>8}  {t_direct*1000:>8.2f}ms  {t_blocked*1000:>8.2f}ms   ok")
        n *= 2

    print()
    print(f"{'n':>8}  {'general':>10}  {'collapsed':>10}   gcd-sum routes at 2^t")
    for t in range(1, args.max_power + 1):
        n = 2**t
        general, t_general = timed(lambda: menon_sum(n, sieve, MemoCache()))
        collapsed, t_collapsed = timed(
            lambda: menon_sum_prime_power(2, t, sieve, MemoCache())
        )
        if general != collapsed:
            raise SystemExit(f"route mismatch at n={n}")
        print(f"{n:>8}  {t_general*1000:>8.2f}ms  {t_collapsed*1000:>8.2f}ms   ok")


if __name__ == "__main__":
    main()
