"""Seeded random walks on B_n and Monte Carlo statistics of their closures.

Walk ``i`` of a run draws from its own SplitMix64 stream seeded with
``mix64(master_seed ^ (i + 1) * 0x9E3779B97F4A7C15)``, so every trajectory is
reproducible on its own and histograms do not depend on how walks are
split across threads.

Steps follow mu_c: the identity and each sigma_i^{+-1} with probability
1/(2n-1) each. A draw ``r`` in ``[0, 2n-2]`` maps to the letter ``0`` for
``r == 0``, ``+r`` for ``r < n`` and ``-(r - n + 1)`` otherwise.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from randlinks import kernels
from randlinks.braid import BraidWord, apply_letters
from randlinks.config import cap, check_cap
from randlinks.exact import component_distribution
from randlinks.partition import Partition
from randlinks.perm import Permutation

MU_C = "mu_c"
UNIFORM = "uniform_permutation"
KINDS = (MU_C, UNIFORM)

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_CURVE_SALT = 0xC0FFEE


def mix64(z: int) -> int:
    """SplitMix64 finaliser on a Python int."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def child_seed(master_seed: int, index: int) -> int:
    return mix64(master_seed ^ (((index + 1) * _GOLDEN) & MASK64))


class SplitMix64:
    """Pure-Python twin of the stream used by the compiled kernels."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        return mix64(self.state)

    def bounded(self, bound: int) -> int:
        if not 1 <= bound < 1 << 32:
            raise ValueError(f"bound must be in [1, 2**32), got {bound}")
        prod = (self.next64() >> 32) * bound
        low = prod & 0xFFFFFFFF
        if low < bound:
            thresh = ((1 << 32) - bound) % bound
            while low < thresh:
                prod = (self.next64() >> 32) * bound
                low = prod & 0xFFFFFFFF
        return prod >> 32


@dataclass(frozen=True)
class StepDistribution:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown distribution {self.kind!r}; expected one of {KINDS}")
        if self.n < 2:
            raise ValueError(f"need at least 2 strands, got {self.n}")

    def atoms(self) -> list[int]:
        if self.kind != MU_C:
            raise ValueError(f"{self.kind} has no per-letter steps")
        return [0] + [s * i for i in range(1, self.n) for s in (1, -1)]

    def probability(self, letter: int) -> Fraction:
        if self.kind != MU_C:
            raise ValueError(f"{self.kind} has no per-letter steps")
        return Fraction(1, 2 * self.n - 1) if abs(letter) < self.n else Fraction(0)


def draw_to_letter(r: int, n: int) -> int:
    if r == 0:
        return 0
    return r if r < n else -(r - n + 1)


def sample_step(dist: StepDistribution, stream: SplitMix64) -> int:
    if dist.kind != MU_C:
        raise ValueError(f"{dist.kind} has no per-letter steps")
    return draw_to_letter(stream.bounded(2 * dist.n - 1), dist.n)


@dataclass(frozen=True)
class WalkConfig:
    n: int
    k: int
    walks: int
    master_seed: int
    kind: str = MU_C

    def __post_init__(self):
        StepDistribution(self.kind, self.n)
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")
        if self.walks < 1:
            raise ValueError(f"need at least one walk, got {self.walks}")
        if not 0 <= self.master_seed <= MASK64:
            raise ValueError("master_seed must be an unsigned 64-bit integer")
        check_cap("MAX_STRANDS", self.n, "n")
        check_cap("MAX_STEPS", self.k, "k")
        check_cap("MAX_WALKS", self.walks, "walks")
        if self.n < 3:
            warnings.warn(f"n={self.n} is below the n >= 3 range the limit results assume", stacklevel=3)

    @property
    def distribution(self) -> StepDistribution:
        return StepDistribution(self.kind, self.n)

    def metadata(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "walks": self.walks,
            "master_seed": self.master_seed,
            "distribution": self.kind,
            "generator": kernels.GENERATOR_ID,
        }


def run_walk(config: WalkConfig, walk_index: int) -> BraidWord:
    """The k-letter trajectory of walk ``walk_index`` under mu_c."""
    if config.kind != MU_C:
        raise ValueError("uniform_permutation samples endpoints directly; use sample_endpoint")
    if not 0 <= walk_index < config.walks:
        raise IndexError(f"walk_index {walk_index} outside [0, {config.walks})")
    stream = SplitMix64(child_seed(config.master_seed, walk_index))
    dist = config.distribution
    return BraidWord(config.n, tuple(sample_step(dist, stream) for _ in range(config.k)))


def sample_endpoint(config: WalkConfig, walk_index: int) -> Permutation:
    """Permutation reached by walk ``walk_index``, for either distribution."""
    if config.kind == MU_C:
        images = list(range(config.n))
        apply_letters(images, run_walk(config, walk_index).letters)
        return Permutation(tuple(images))
    stream = SplitMix64(child_seed(config.master_seed, walk_index))
    images = list(range(config.n))
    for i in range(config.n - 1, 0, -1):
        j = stream.bounded(i + 1)
        images[i], images[j] = images[j], images[i]
    return Permutation(tuple(images))


def iter_walks(config: WalkConfig) -> Iterator[BraidWord]:
    for i in range(config.walks):
        yield run_walk(config, i)


@dataclass
class EmpiricalDistribution:
    n: int
    k: int
    walks: int
    master_seed: int
    kind: str
    component_counts: dict[int, int]
    type_counts: dict[Partition, int]
    generator: str = kernels.GENERATOR_ID

    @property
    def mean_components(self) -> float:
        return sum(m * c for m, c in self.component_counts.items()) / self.walks

    def probabilities(self) -> list[float]:
        """Empirical p(m) for m = 1..n."""
        return [self.component_counts.get(m, 0) / self.walks for m in range(1, self.n + 1)]

    @property
    def mode(self) -> int:
        return max(sorted(self.component_counts), key=lambda m: self.component_counts[m])

    @property
    def type_mode(self) -> Partition:
        # ties resolved toward the reverse-lexicographically larger partition
        return max(sorted(self.type_counts, reverse=True), key=lambda p: self.type_counts[p])

    def frequency(self, p: Partition | Sequence[int]) -> float:
        if not isinstance(p, Partition):
            p = Partition(tuple(p))
        return self.type_counts.get(p, 0) / self.walks

    def check_invariants(self) -> None:
        if sum(self.component_counts.values()) != self.walks:
            raise AssertionError("component histogram does not sum to walks")
        if sum(self.type_counts.values()) != self.walks:
            raise AssertionError("type histogram does not sum to walks")
        by_parts = Counter()
        for p, c in self.type_counts.items():
            by_parts[len(p)] += c
        if dict(by_parts) != {m: c for m, c in self.component_counts.items() if c}:
            raise AssertionError("component histogram disagrees with type histogram")

    def to_json(self) -> dict:
        return {
            "metadata": {
                "n": self.n,
                "k": self.k,
                "walks": self.walks,
                "master_seed": self.master_seed,
                "distribution": self.kind,
                "generator": self.generator,
            },
            "component_counts": {str(m): c for m, c in sorted(self.component_counts.items())},
            "type_counts": {
                p.key(): c for p, c in sorted(self.type_counts.items(), key=lambda kv: kv[0], reverse=True)
            },
            "mean_components": self.mean_components,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EmpiricalDistribution":
        meta = obj["metadata"]
        return cls(
            n=meta["n"],
            k=meta["k"],
            walks=meta["walks"],
            master_seed=meta["master_seed"],
            kind=meta["distribution"],
            component_counts={int(m): c for m, c in obj["component_counts"].items()},
            type_counts={Partition.from_key(key): c for key, c in obj["type_counts"].items()},
            generator=meta.get("generator", kernels.GENERATOR_ID),
        )


@dataclass
class _Tally:
    components: np.ndarray
    types: Counter = field(default_factory=Counter)
    ranks: np.ndarray | None = None


def _chunk_bounds(walks: int, n: int) -> list[tuple[int, int]]:
    size = max(1, min(1 << 16, (1 << 22) // n))
    return [(lo, min(size, walks - lo)) for lo in range(0, walks, size)]


def _run_chunk(config: WalkConfig, start: int, count: int, want_ranks: bool) -> _Tally:
    n = config.n
    seeds = kernels.child_seeds(config.master_seed, start, count)
    if config.kind == MU_C:
        perms = kernels.walk_perms(seeds, n, config.k)
    else:
        perms = kernels.shuffle_perms(seeds, n)
    counts, mult = kernels.cycle_profile(perms)
    tally = _Tally(np.bincount(counts, minlength=n + 1).astype(np.int64))
    rows, freq = np.unique(mult, axis=0, return_counts=True)
    for row, c in zip(rows, freq):
        tally.types[Partition.from_multiplicities(row)] += int(c)
    if want_ranks:
        tally.ranks = np.bincount(kernels.perm_ranks(perms), minlength=math.factorial(n)).astype(np.int64)
    return tally


def _simulate(config: WalkConfig, threads: int = 1, want_ranks: bool = False) -> _Tally:
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    chunks = _chunk_bounds(config.walks, config.n)
    total = _Tally(np.zeros(config.n + 1, dtype=np.int64))
    if want_ranks:
        total.ranks = np.zeros(math.factorial(config.n), dtype=np.int64)

    def work(bounds):
        return _run_chunk(config, bounds[0], bounds[1], want_ranks)

    if threads == 1 or len(chunks) == 1:
        results = map(work, chunks)
    else:
        pool = ThreadPoolExecutor(max_workers=threads)
        results = pool.map(work, chunks)
    # histogram addition is order-free, so the merge is schedule-independent
    for part in results:
        total.components += part.components
        total.types.update(part.types)
        if want_ranks:
            total.ranks += part.ranks
    if threads > 1 and len(chunks) > 1:
        pool.shutdown()
    return total


def _to_empirical(config: WalkConfig, tally: _Tally) -> EmpiricalDistribution:
    return EmpiricalDistribution(
        n=config.n,
        k=config.k,
        walks=config.walks,
        master_seed=config.master_seed,
        kind=config.kind,
        component_counts={m: int(c) for m, c in enumerate(tally.components) if c},
        type_counts=dict(tally.types),
    )


def monte_carlo(config: WalkConfig, threads: int = 1) -> EmpiricalDistribution:
    emp = _to_empirical(config, _simulate(config, threads))
    emp.check_invariants()
    return emp


def tv_distance_components(emp: EmpiricalDistribution, exact: Sequence[Fraction | float]) -> float:
    """Total variation between empirical and exact component-count laws."""
    if len(exact) != emp.n:
        raise ValueError(f"exact distribution has {len(exact)} entries, expected {emp.n}")
    p = emp.probabilities()
    return 0.5 * sum(abs(a - float(b)) for a, b in zip(p, exact))


def _tv_to_uniform(ranks: np.ndarray, walks: int) -> float:
    u = 1.0 / ranks.size
    return 0.5 * float(np.abs(ranks / walks - u).sum())


def tv_distance_uniform(config: WalkConfig, threads: int = 1) -> float:
    """TV between the empirical law of the walk's endpoint in S_n and uniform."""
    check_cap("MAX_BRUTE_N", config.n, "n")
    return _tv_to_uniform(_simulate(config, threads, want_ranks=True).ranks, config.walks)


@dataclass(frozen=True)
class CurveRow:
    k: int
    tv_components: float
    tv_uniform: float | None
    mean_components: float


CURVE_HEADER = ("k", "tv_components", "tv_uniform", "mean_components")


def curve_seed(master_seed: int, k: int) -> int:
    return mix64(master_seed ^ mix64(k + _CURVE_SALT))


def convergence_curve(config: WalkConfig, step_list: Sequence[int], threads: int = 1) -> list[CurveRow]:
    """One row per k, each from an independent seed derived from (master_seed, k)."""
    exact = component_distribution(config.n)
    with_uniform = config.n <= cap("MAX_BRUTE_N")
    rows = []
    for k in step_list:
        cfg = replace(config, k=int(k), master_seed=curve_seed(config.master_seed, int(k)))
        tally = _simulate(cfg, threads, want_ranks=with_uniform)
        emp = _to_empirical(cfg, tally)
        rows.append(
            CurveRow(
                k=int(k),
                tv_components=tv_distance_components(emp, exact),
                tv_uniform=_tv_to_uniform(tally.ranks, cfg.walks) if with_uniform else None,
                mean_components=emp.mean_components,
            )
        )
    return rows


def format_curve_csv(rows: Sequence[CurveRow]) -> str:
    lines = [",".join(CURVE_HEADER)]
    for r in rows:
        tvu = "" if r.tv_uniform is None else repr(r.tv_uniform)
        lines.append(f"{r.k},{r.tv_components!r},{tvu},{r.mean_components!r}")
    return "\n".join(lines) + "\n"
