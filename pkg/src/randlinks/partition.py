"""Integer partitions as cycle types of S_n.

The class of permutations with cycle type ``p`` has ``n! / z(p)`` elements,
where ``z(p) = prod_j j**m_j * m_j!`` is the centraliser order and ``m_j`` the
multiplicity of part ``j``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from randlinks.config import check_cap
from randlinks.errors import FalsificationError


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if parts[-1] < 1 or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a non-increasing sequence of positive integers")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def key(self) -> str:
        """Compact string form used as a JSON object key, e.g. ``"3,1"``."""
        return ",".join(map(str, self.parts))

    @classmethod
    def from_key(cls, key: str) -> "Partition":
        return cls(tuple(int(x) for x in key.split(",")))

    @classmethod
    def from_multiplicities(cls, mult: Sequence[int]) -> "Partition":
        """``mult[j - 1]`` is the number of parts equal to ``j``."""
        parts = []
        for j in range(len(mult), 0, -1):
            parts.extend([j] * int(mult[j - 1]))
        return cls(tuple(parts))

    def __repr__(self):
        return f"Partition({self.parts})"


def iter_partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as tuples, reverse-lexicographic from ``(n,)``."""
    a = [n]
    yield (n,)
    while a[0] > 1:
        rem = 0
        while a[-1] == 1:
            a.pop()
            rem += 1
        x = a.pop() - 1
        rem += 1
        a.append(x)
        while rem > x:
            a.append(x)
            rem -= x
        a.append(rem)
        yield tuple(a)


def enumerate_partitions(n: int) -> list[Partition]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_cap("MAX_PARTITION_N", n, "n")
    return [Partition(p) for p in iter_partition_tuples(n)]


def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def _centralizer_of_parts(parts: Sequence[int]) -> int:
    z = 1
    for j, m in Counter(parts).items():
        z *= j**m * math.factorial(m)
    return z


def centralizer_order(p: Partition) -> int:
    return _centralizer_of_parts(p.parts)


@dataclass(frozen=True)
class ClassRecord:
    partition: Partition
    class_size: int
    centralizer_order: int
    probability: Fraction

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "class_size": str(self.class_size),
            "centralizer": str(self.centralizer_order),
            "probability": f"{self.probability.numerator}/{self.probability.denominator}",
        }


def conjugacy_class_size(p: Partition) -> ClassRecord:
    total = math.factorial(p.n)
    z = centralizer_order(p)
    size, rem = divmod(total, z)
    if rem:
        raise ArithmeticError(f"{p}: n! = {total} is not divisible by centraliser order {z}")
    return ClassRecord(p, size, z, Fraction(size, total))


def knot_probability(n: int) -> Fraction:
    """Limit probability that the closure is a knot (one n-cycle)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return conjugacy_class_size(Partition((n,))).probability


@dataclass
class ClassScan:
    """Result of searching for the largest conjugacy classes of S_n."""

    n: int
    min_centralizer: int
    maximizers: list[Partition]
    visited: int

    @property
    def unique(self) -> bool:
        return len(self.maximizers) == 1

    @property
    def best(self) -> Partition:
        return self.maximizers[0]


def scan_max_class(n: int, method: str = "bound") -> ClassScan:
    """Find every cycle type of maximal class size (minimal centraliser).

    ``method="bound"`` walks the reverse-lexicographic partition tree and
    drops a subtree as soon as the centraliser order of its prefix already
    exceeds the best complete value: appending a part ``j`` that brings its
    multiplicity to ``m`` multiplies the order by ``j * m >= 1``, so a
    prefix's order bounds every completion from below. No partition is
    dropped unless it provably loses. ``method="enumerate"`` evaluates every
    partition and serves as the oracle for the pruned search.
    Ties are listed in reverse-lexicographic order.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_cap("MAX_PARTITION_N", n, "n")
    if method == "enumerate":
        best, winners, visited = None, [], 0
        for parts in iter_partition_tuples(n):
            visited += 1
            z = _centralizer_of_parts(parts)
            if best is None or z < best:
                best, winners = z, [parts]
            elif z == best:
                winners.append(parts)
        return ClassScan(n, best, [Partition(w) for w in winners], visited)
    if method != "bound":
        raise ValueError(f"unknown method {method!r}")

    best = math.factorial(n) + 1
    winners: list[tuple[int, ...]] = []
    visited = 0
    prefix: list[int] = []

    def descend(rem: int, cap: int, z: int, run: int) -> None:
        nonlocal best, winners, visited
        visited += 1
        if rem == 0:
            if z < best:
                best, winners = z, [tuple(prefix)]
            elif z == best:
                winners.append(tuple(prefix))
            return
        last = prefix[-1] if prefix else 0
        for j in range(min(rem, cap), 0, -1):
            m = run + 1 if j == last else 1
            zz = z * j * m
            if zz > best:
                continue
            prefix.append(j)
            descend(rem - j, j, zz, m)
            prefix.pop()

    descend(n, n, 1, 0)
    return ClassScan(n, best, [Partition(w) for w in winners], visited)


def most_expected_partition(n: int) -> ClassRecord:
    """Largest conjugacy class of S_n, found by search and checked against ((n-1), 1).

    Raises :class:`FalsificationError` if the search finds a different or a
    tied maximiser, or if its probability is not 1/(n-1).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    scan = scan_max_class(n)
    record = conjugacy_class_size(scan.best)
    expected = Partition((n - 1, 1))
    if scan.best != expected or not scan.unique:
        raise FalsificationError(
            f"n={n}: largest class has type(s) {[p.parts for p in scan.maximizers]}, "
            f"expected {expected.parts} alone",
            witness=scan.maximizers,
        )
    if record.class_size != n * math.factorial(n - 2) or record.probability != Fraction(1, n - 1):
        raise FalsificationError(f"n={n}: class size {record.class_size} != n (n-2)!", witness=record)
    return record


def class_size_totals(n_max: int) -> list[list[int]]:
    """``T[r][c]`` = sum of class sizes over partitions of r with c parts.

    Built by inserting part sizes one at a time: choosing ``m`` parts equal
    to ``j`` among ``r`` letters contributes ``r! / ((r - m j)! j**m m!)``.
    The sum runs over every partition of r, without listing them.
    """
    check_cap("MAX_PARTITION_N", n_max, "n")
    # A[r][c]: permutations of r letters, c cycles, all cycle lengths <= j
    A = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    A[0][0] = 1
    fact = [math.factorial(i) for i in range(n_max + 1)]
    for j in range(1, n_max + 1):
        new = [row[:] for row in A]
        for r in range(j, n_max + 1):
            row = new[r]
            for m in range(1, r // j + 1):
                rest = r - m * j
                w = fact[r] // (fact[rest] * j**m * fact[m])
                src = A[rest]
                for c in range(0, rest + 1):
                    if src[c]:
                        row[c + m] += w * src[c]
        A = new
    return A


@dataclass
class LemmaReport:
    n: int
    classes: list[dict] = field(default_factory=list)
    min_centralizer: int = 0
    minimizers: list[Partition] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def entry(self, parts: Sequence[int]) -> dict:
        for c in self.classes:
            if tuple(c["type"]) == tuple(parts):
                return c
        raise KeyError(tuple(parts))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": self.classes,
            "min_centralizer": self.min_centralizer,
            "minimizers": [list(p.parts) for p in self.minimizers],
            "checks": self.checks,
            "failures": self.failures,
            "pass": self.passed,
        }


def product_sum_claim(parts: Sequence[int]) -> tuple[bool, bool]:
    """For integers k_i >= 2: (prod >= sum, equality iff r == 1 or parts == (2, 2))."""
    prod, total = math.prod(parts), sum(parts)
    equality_case = len(parts) == 1 or tuple(parts) == (2, 2)
    return prod >= total, (prod == total) == equality_case


def verify_lemma(n: int) -> LemmaReport:
    """Exhaustively check the centraliser bound |Z(a)| >= n - 1 on S_n.

    Every centraliser is counted from its definition over all of S_n, then
    compared with the cycle-type formula.
    """
    from randlinks.kernels import centralizer_counts, cycle_profile

    if not 3 <= n:
        raise ValueError(f"need n >= 3, got {n}")
    check_cap("MAX_BRUTE_N", n, "n")
    group = np.array(list(itertools.permutations(range(n))), dtype=np.int32)
    counts = centralizer_counts(group)
    _, mult = cycle_profile(group)
    report = LemmaReport(n)

    by_type: dict[Partition, list[int]] = {}
    for idx, row in enumerate(mult):
        by_type.setdefault(Partition.from_multiplicities(row), []).append(idx)

    formula_ok = True
    for p in sorted(by_type, reverse=True):
        members = by_type[p]
        brute = {int(counts[i]) for i in members}
        z = centralizer_order(p)
        entry = {
            "type": list(p.parts),
            "centralizer": z,
            "centralizer_brute": sorted(brute),
            "class_size": len(members),
        }
        report.classes.append(entry)
        if brute != {z} or len(members) * z != math.factorial(n):
            formula_ok = False
            report.failures.append({"check": "formula", "witness": group[members[0]].tolist(), **entry})
    report.checks["formula_matches_definition"] = formula_ok

    report.min_centralizer = int(counts.min())
    report.minimizers = [p for p in sorted(by_type, reverse=True) if centralizer_order(p) == report.min_centralizer]
    below = np.flatnonzero(counts < n - 1)
    report.checks["centralizer_at_least_n_minus_1"] = below.size == 0
    if below.size:
        report.failures.append({"check": "lower_bound", "witness": group[below[0]].tolist()})

    cycle_type_n1 = Partition((n - 1, 1))
    tight = {Partition.from_multiplicities(mult[i]) for i in np.flatnonzero(counts == n - 1)}
    report.checks["equality_only_for_n_minus_1_cycles"] = tight == {cycle_type_n1}
    if tight != {cycle_type_n1}:
        report.failures.append({"check": "equality", "types": [list(p.parts) for p in tight]})

    claim_ok = True
    for parts in iter_partition_tuples(n):
        big = [k for k in parts if k >= 2]
        if not big:
            continue
        ge, eq = product_sum_claim(big)
        if not (ge and eq):
            claim_ok = False
            report.failures.append({"check": "product_sum", "witness": big})
    report.checks["product_at_least_sum"] = claim_ok
    return report
