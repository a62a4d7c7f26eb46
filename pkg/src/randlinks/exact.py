"""Exact cycle-count combinatorics on S_n.

c(n, m) (unsigned Stirling numbers of the first kind) count permutations of
n letters with m cycles. All counts are Python integers; floats appear only
when evaluating the Hammersley and Erdos bound formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from randlinks.config import check_cap

# Euler-Mascheroni constant, double precision (OEIS A001620).
EULER_GAMMA = 0.5772156649015329
# zeta(2) = pi^2 / 6.
ZETA2 = math.pi**2 / 6
# Apery's constant zeta(3), double precision (OEIS A002117).
ZETA3 = 1.2020569031595943

ERDOS_MIN_N = 189


@dataclass(frozen=True)
class StirlingRow:
    n: int
    values: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        """c(n, m) for 1 <= m <= n."""
        if not 1 <= m <= self.n:
            raise IndexError(m)
        return self.values[m - 1]

    def __len__(self):
        return self.n


def iter_stirling_rows(n_max: int) -> Iterator[StirlingRow]:
    """Yield rows 1..n_max from c(n, m) = c(n-1, m-1) + (n-1) c(n-1, m)."""
    check_cap("MAX_EXACT_N", n_max, "n")
    row = [1]
    if n_max >= 1:
        yield StirlingRow(1, (1,))
    for n in range(2, n_max + 1):
        k = n - 1
        new = [0] * n
        new[0] = k * row[0]
        for m in range(1, n - 1):
            new[m] = row[m - 1] + k * row[m]
        new[n - 1] = 1
        row = new
        yield StirlingRow(n, tuple(row))


@lru_cache(maxsize=64)
def stirling_row(n: int) -> StirlingRow:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_cap("MAX_EXACT_N", n, "n")
    for row in iter_stirling_rows(n):
        pass
    return row


def component_distribution(n: int) -> list[Fraction]:
    """Limit law of the closure's component count: c(n, m) / n!."""
    row = stirling_row(n)
    total = math.factorial(n)
    return [Fraction(v, total) for v in row.values]


def row_mode(row: StirlingRow) -> tuple[int, bool]:
    best = max(row.values)
    first = row.values.index(best)
    unique = row.values.count(best) == 1
    return first + 1, unique


def most_expected_components(n: int) -> tuple[int, bool]:
    """Smallest m maximising c(n, m), and whether that maximiser is unique."""
    return row_mode(stirling_row(n))


@dataclass(frozen=True)
class HammersleyEstimate:
    """Residual of the Hammersley mode formula at one n.

    ``h`` is only defined through the bracket
    ``K = floor(base + correction + h / d**2)``, so it is reported as the
    half-open interval ``[h_low, h_high)`` of values that reproduce ``K``.
    """

    n: int
    K: int
    base: float
    correction: float
    d: float
    h_low: float
    h_high: float

    @property
    def h_mid(self) -> float:
        return 0.5 * (self.h_low + self.h_high)

    @property
    def meets_bounds(self) -> bool:
        """Whether the h-interval intersects (-1.1, 1.5)."""
        return self.h_low < 1.5 and self.h_high > -1.1

    def reconstruct(self, h: float | None = None) -> int:
        if h is None:
            h = self.h_mid
        return math.floor(self.base + self.correction + h / self.d**2)


def hammersley_terms(n: int) -> tuple[float, float, float]:
    """(base, correction, d) of the Hammersley expression at n, natural log."""
    log_term = math.log(n + 1) + EULER_GAMMA
    base = log_term - 1.0
    d = log_term - 1.5
    return base, (ZETA2 - ZETA3) / d, d


def hammersley_from_mode(n: int, K: int) -> HammersleyEstimate:
    if n < 3:
        raise ValueError(f"the Hammersley formula needs n >= 3, got {n}")
    base, corr, d = hammersley_terms(n)
    d2 = d * d
    return HammersleyEstimate(
        n=n,
        K=K,
        base=base,
        correction=corr,
        d=d,
        h_low=(K - base - corr) * d2,
        h_high=(K + 1 - base - corr) * d2,
    )


def hammersley_h(n: int) -> HammersleyEstimate:
    K, _ = most_expected_components(n)
    return hammersley_from_mode(n, K)


@dataclass(frozen=True)
class ErdosVerdict:
    n: int
    K: int
    lower: int
    upper: int

    @property
    def passed(self) -> bool:
        # non-strict: the strict form is empty whenever upper == lower + 1
        return self.lower <= self.K <= self.upper

    @property
    def strict_passed(self) -> bool:
        return self.lower < self.K < self.upper


def erdos_bounds(n: int) -> tuple[int, int]:
    log_n = math.log(n)
    return math.floor(log_n - 0.5), math.floor(log_n)


def erdos_from_mode(n: int, K: int) -> ErdosVerdict:
    if n < ERDOS_MIN_N:
        raise ValueError(f"the Erdos bound applies to n > 188, got {n}")
    lower, upper = erdos_bounds(n)
    return ErdosVerdict(n, K, lower, upper)


def erdos_check(n: int) -> ErdosVerdict:
    K, _ = most_expected_components(n)
    return erdos_from_mode(n, K)


def iter_modes(n_min: int, n_max: int) -> Iterator[tuple[int, int, bool]]:
    """(n, K, unique) for every n in range, from a single sweep of the table."""
    for row in iter_stirling_rows(n_max):
        if row.n >= n_min:
            K, unique = row_mode(row)
            yield row.n, K, unique


def harmonic(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    # common denominator keeps this linear in n instead of n reductions
    den = math.lcm(*range(1, n + 1))
    return Fraction(sum(den // i for i in range(1, n + 1)), den)


def expected_components_exact(n: int) -> Fraction:
    row = stirling_row(n)
    return Fraction(sum(m * v for m, v in enumerate(row.values, start=1)), math.factorial(n))


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
