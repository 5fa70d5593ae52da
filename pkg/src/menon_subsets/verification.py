"""Formula-vs-oracle verification sweep.

Replays the known small value tables, the enumeration/gcd-class/divisor-sum
agreements and the structural identities, and collects the outcomes in a
VerificationReport.  Each check records its first mismatch, so a red run
points straight at the offending (n, k).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .counts import (
    BLOCKED,
    DIRECT,
    MemoCache,
    coprime_k_subsets,
    coprime_subsets,
    relprime_k_subsets,
    relprime_subsets,
)
from .menon import (
    menon_classic,
    menon_sum,
    menon_sum_k,
    menon_sum_k_prime,
    menon_sum_k_prime_power,
    menon_sum_prime,
    menon_sum_prime_power,
)
from .oracle import (
    DEFAULT_ENUMERATION_LIMIT,
    enumerate_coprime_k_subsets,
    enumerate_coprime_subsets,
    enumerate_menon_sum,
    enumerate_menon_sum_k,
    enumerate_relprime_k_subsets,
    enumerate_relprime_subsets,
    gcd_class_menon_sum,
    gcd_class_menon_sum_k,
    subset_gcd_histogram,
)
from .sieve import SieveTables, build_sieve

# Reference prefixes (index i holds the value at n = i + 1), frozen from the
# bitmask enumeration oracle.  The first six entries of the first four rows
# are the classically tabulated values; the unrestricted relprime count is
# OEIS A085945, the 2-subset count A015614, and the coprime-subset count
# matches A027375 from n = 2 on (the n = 1 entry differs by the empty-set
# convention).
F_PREFIX = (1, 2, 5, 11, 26, 53, 116, 236, 488, 983, 2006, 4016)
F2_PREFIX = (0, 1, 3, 5, 9, 11, 17, 21, 27, 31, 41, 45)
MBAR_PREFIX = (1, 4, 16, 46, 134, 320, 822, 1898, 4414, 9844, 22106, 48208)
MBAR2_PREFIX = (0, 2, 9, 20, 46, 66, 123, 170, 251, 316, 465, 544)
PHI_PREFIX = (1, 2, 6, 12, 30, 54, 126, 240, 504, 990, 2046, 4020)

# Primes whose powers drive the specialization consistency checks.
SPECIALIZATION_PRIMES = (2, 3, 5, 7, 11, 13)
PRIME_POWER_CAP = 256


@dataclass(frozen=True)
class Mismatch:
    n: int | None
    k: int | None
    expected: str
    actual: str


@dataclass
class CheckResult:
    name: str
    scope: str
    passed: bool
    mismatch: Mismatch | None = None
    error: str | None = None


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "overall": self.overall,
            "checks": [asdict(c) for c in self.checks],
        }

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name:34s} {c.scope}"
            if c.mismatch is not None:
                m = c.mismatch
                where = f"n={m.n}" + (f", k={m.k}" if m.k is not None else "")
                line += f"  [first mismatch at {where}: expected {m.expected}, got {m.actual}]"
            if c.error is not None:
                line += f"  [error: {c.error}]"
            lines.append(line)
        lines.append("overall: " + ("PASS" if self.overall else "FAIL"))
        return "\n".join(lines)


def _mm(n, k, expected, actual) -> Mismatch:
    return Mismatch(n=n, k=k, expected=str(expected), actual=str(actual))


def run_verification(
    n_max_enum: int = 16,
    n_max_formula: int = 300,
    k_set: tuple[int, ...] = (1, 2, 3),
    sieve: SieveTables | None = None,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> VerificationReport:
    """Run every formula-vs-oracle check and return the report.

    n_max_enum bounds the 2^n brute-force enumerations, n_max_formula the
    polynomial-cost sweeps.  A prebuilt sieve may be injected (the test
    harness uses this to prove that corruption is detected); it must cover
    max(n_max_formula, 256).
    """
    if n_max_enum > enumeration_limit:
        raise ValueError(
            f"n_max_enum {n_max_enum} exceeds the enumeration limit {enumeration_limit}"
        )
    needed = max(n_max_formula, PRIME_POWER_CAP, n_max_enum)
    if sieve is None:
        sieve = build_sieve(needed)
    elif sieve.limit < needed:
        raise ValueError(f"provided sieve limit {sieve.limit} < required {needed}")

    cache = MemoCache()
    report = VerificationReport()

    def run(name: str, scope: str, fn) -> None:
        try:
            mismatch = fn()
            report.checks.append(
                CheckResult(name, scope, passed=mismatch is None, mismatch=mismatch)
            )
        except Exception as exc:  # a crashed check is a failed check
            report.checks.append(
                CheckResult(
                    name, scope, passed=False, error=f"{type(exc).__name__}: {exc}"
                )
            )

    prefix_n = min(len(F_PREFIX), max(n_max_enum, 6))

    def known_values():
        rows = (
            ("f", F_PREFIX, lambda n: relprime_subsets(n, sieve, cache)),
            ("f2", F2_PREFIX, lambda n: relprime_k_subsets(n, 2, sieve, cache)),
            ("phi", PHI_PREFIX, lambda n: coprime_subsets(n, sieve)),
            ("mbar", MBAR_PREFIX, lambda n: menon_sum(n, sieve, cache)),
            ("mbar2", MBAR2_PREFIX, lambda n: menon_sum_k(n, 2, sieve, cache)),
        )
        for tag, prefix, fn in rows:
            for i in range(prefix_n):
                got = fn(i + 1)
                if got != prefix[i]:
                    return _mm(i + 1, None, f"{tag}={prefix[i]}", got)
        return None

    run("known-values", f"tabulated prefixes, n <= {prefix_n}", known_values)

    def enum_unrestricted():
        for n in range(1, n_max_enum + 1):
            pairs = (
                ("f", enumerate_relprime_subsets(n, enumeration_limit),
                 relprime_subsets(n, sieve, cache)),
                ("phi", enumerate_coprime_subsets(n, enumeration_limit),
                 coprime_subsets(n, sieve)),
            )
            for tag, expected, got in pairs:
                if got != expected:
                    return _mm(n, None, f"{tag}:{expected}", got)
        return None

    run("enumeration-counts", f"f and phi vs brute force, n <= {n_max_enum}",
        enum_unrestricted)

    def enum_k_variants():
        for n in range(1, n_max_enum + 1):
            for k in sorted(set(k_set) | {n}):
                expected = enumerate_relprime_k_subsets(n, k, enumeration_limit)
                got = relprime_k_subsets(n, k, sieve, cache)
                if got != expected:
                    return _mm(n, k, f"fk:{expected}", got)
                expected = enumerate_coprime_k_subsets(n, k, enumeration_limit)
                got = coprime_k_subsets(n, k, sieve)
                if got != expected:
                    return _mm(n, k, f"phik:{expected}", got)
        return None

    run("enumeration-counts-k", f"fk and phik vs brute force, n <= {n_max_enum}",
        enum_k_variants)

    def three_way():
        for n in range(1, n_max_enum + 1):
            enum = enumerate_menon_sum(n, enumeration_limit).total
            gcls = gcd_class_menon_sum(n, sieve, cache)
            thrm = menon_sum(n, sieve, cache)
            if not (enum == gcls == thrm):
                return _mm(n, None, f"enum:{enum}", f"gcd-class:{gcls}, divisor-sum:{thrm}")
        return None

    run("three-way-gcd-sum", f"enumeration = gcd-class = divisor sum, n <= {n_max_enum}",
        three_way)

    def three_way_k():
        for n in range(1, n_max_enum + 1):
            for k in sorted(set(k_set) | {n}):
                enum = enumerate_menon_sum_k(n, k, enumeration_limit).total
                gcls = gcd_class_menon_sum_k(n, k, sieve, cache)
                thrm = menon_sum_k(n, k, sieve, cache)
                if not (enum == gcls == thrm):
                    return _mm(n, k, f"enum:{enum}",
                               f"gcd-class:{gcls}, divisor-sum:{thrm}")
        return None

    run("three-way-gcd-sum-k", f"k-subset variant, n <= {n_max_enum}", three_way_k)

    def gcd_class_medium():
        for n in range(1, n_max_formula + 1):
            gcls = gcd_class_menon_sum(n, sieve, cache)
            thrm = menon_sum(n, sieve, cache)
            if gcls != thrm:
                return _mm(n, None, gcls, thrm)
        return None

    run("gcd-class-vs-divisor-sum", f"two-way at formula scale, n <= {n_max_formula}",
        gcd_class_medium)

    def singleton_sweep():
        for n in range(1, n_max_formula + 1):
            got = relprime_k_subsets(n, 1, sieve, strategy=BLOCKED)
            if got != 1:
                return _mm(n, 1, 1, got)
        return None

    run("singleton-count-is-one", f"fk(n, 1) = 1, n <= {n_max_formula}",
        singleton_sweep)

    def strategy_invariance():
        for n in range(1, n_max_formula + 1):
            a = relprime_subsets(n, sieve, strategy=DIRECT)
            b = relprime_subsets(n, sieve, strategy=BLOCKED)
            if a != b:
                return _mm(n, None, a, b)
            for k in k_set:
                a = relprime_k_subsets(n, k, sieve, strategy=DIRECT)
                b = relprime_k_subsets(n, k, sieve, strategy=BLOCKED)
                if a != b:
                    return _mm(n, k, a, b)
        return None

    run("direct-vs-blocked", f"count strategies agree, n <= {n_max_formula}",
        strategy_invariance)

    def prime_power_consistency():
        for p in SPECIALIZATION_PRIMES:
            t = 1
            while p**t <= PRIME_POWER_CAP:
                n = p**t
                general = menon_sum(n, sieve, cache)
                collapsed = menon_sum_prime_power(p, t, sieve, cache)
                if general != collapsed:
                    return _mm(n, None, general, collapsed)
                for k in k_set:
                    general = menon_sum_k(n, k, sieve, cache)
                    collapsed = menon_sum_k_prime_power(p, t, k, sieve, cache)
                    if general != collapsed:
                        return _mm(n, k, general, collapsed)
                t += 1
        return None

    run("prime-power-consistency",
        f"collapsed = general at prime powers <= {PRIME_POWER_CAP}",
        prime_power_consistency)

    def prime_consistency():
        for p in SPECIALIZATION_PRIMES:
            a = menon_sum_prime(p, sieve, cache)
            b = menon_sum_prime_power(p, 1, sieve, cache)
            if a != b:
                return _mm(p, None, b, a)
            for k in k_set:
                a = menon_sum_k_prime(p, k, sieve, cache)
                b = menon_sum_k_prime_power(p, 1, k, sieve, cache)
                if a != b:
                    return _mm(p, k, b, a)
        return None

    run("prime-consistency", "prime form = prime-power form at t = 1",
        prime_consistency)

    def menon_reduction():
        for n in range(1, n_max_formula + 1):
            expected = menon_classic(n, sieve)
            got = menon_sum_k(n, 1, sieve, cache)
            if got != expected:
                return _mm(n, 1, expected, got)
        return None

    run("menon-reduction", f"k = 1 collapses to phi*tau, n <= {n_max_formula}",
        menon_reduction)

    def classic_direct():
        for n in range(1, n_max_formula + 1):
            product = menon_classic(n, sieve)
            direct = menon_classic(n, sieve, direct_sum=True)
            if product != direct:
                return _mm(n, None, direct, product)
        return None

    run("classic-product-vs-direct", f"phi*tau = residue sum, n <= {n_max_formula}",
        classic_direct)

    def diagonal():
        for n in range(1, min(24, n_max_formula) + 1):
            got = menon_sum_k(n, n, sieve, cache)
            if got != n:
                return _mm(n, n, n, got)
        return None

    run("full-set-diagonal", "k = n gives exactly n, n <= 24", diagonal)

    def term_count_law():
        for n in range(1, n_max_enum + 1):
            result = enumerate_menon_sum(n, enumeration_limit)
            expected = coprime_subsets(n, sieve)
            if result.count != expected:
                return _mm(n, None, expected, result.count)
            for k in k_set:
                result = enumerate_menon_sum_k(n, k, enumeration_limit)
                expected = coprime_k_subsets(n, k, sieve)
                if result.count != expected:
                    return _mm(n, k, expected, result.count)
        return None

    run("term-count-law", f"enumerated term counts equal phi variants, n <= {n_max_enum}",
        term_count_law)

    def partitions():
        for n in range(1, min(60, n_max_formula) + 1):
            total = sum(relprime_k_subsets(n, k, sieve, cache) for k in range(1, n + 1))
            whole = relprime_subsets(n, sieve, cache)
            if total != whole:
                return _mm(n, None, f"f:{whole}", total)
            total = sum(coprime_k_subsets(n, k, sieve) for k in range(1, n + 1))
            whole = coprime_subsets(n, sieve)
            if total != whole:
                return _mm(n, None, f"phi:{whole}", total)
        for n in range(1, min(24, n_max_formula) + 1):
            total = sum(menon_sum_k(n, k, sieve, cache) for k in range(1, n + 1))
            whole = menon_sum(n, sieve, cache)
            if total != whole:
                return _mm(n, None, f"mbar:{whole}", total)
        return None

    run("cardinality-partitions", "sums over k rebuild the unrestricted values",
        partitions)

    def totient_partial_sum():
        acc = 0
        for n in range(2, n_max_formula + 1):
            acc += sieve.phi[n]
            got = relprime_k_subsets(n, 2, sieve, cache)
            if got != acc:
                return _mm(n, 2, acc, got)
        return None

    run("pair-count-totient-sum", f"fk(n, 2) = phi(2) + ... + phi(n), n <= {n_max_formula}",
        totient_partial_sum)

    def histogram_consistency():
        for n in range(1, n_max_enum + 1):
            hist = subset_gcd_histogram(n, enumeration_limit)
            if sum(hist.values()) != (1 << n) - 1:
                return _mm(n, None, (1 << n) - 1, sum(hist.values()))
            for j, count in hist.items():
                expected = relprime_subsets(n // j, sieve, cache)
                if count != expected:
                    return _mm(n, j, expected, count)
        return None

    run("gcd-histogram", f"class sizes match shrunk counts and sum to 2^n - 1, "
        f"n <= {n_max_enum}", histogram_consistency)

    return report
