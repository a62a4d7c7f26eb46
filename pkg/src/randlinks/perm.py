"""Permutations of ``{0, ..., n-1}`` in one-line notation.

Composition is "right factor first": ``compose(p, q)(i) == p(q(i))``.
Letters are 0-indexed everywhere in the library; :func:`format_cycles` is the
only place that shifts them to the 1-indexed form used for display.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from randlinks.partition import Partition


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise ValueError("a permutation needs at least one letter")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{list(images)} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError(f"invalid permutation size {n}")
    return Permutation(tuple(range(n)))


def transposition(n: int, a: int, b: int) -> Permutation:
    images = list(range(n))
    images[a], images[b] = images[b], images[a]
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``, the permutation ``i -> p(q(i))``."""
    if p.n != q.n:
        raise ValueError(f"cannot compose permutations of sizes {p.n} and {q.n}")
    pi = p.images
    return Permutation(tuple(pi[j] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(tuple(inv))


def cycle_decomposition(p: Permutation) -> list[list[int]]:
    """Disjoint cycles of ``p`` in canonical form.

    Each cycle starts at its smallest letter and cycles are ordered by that
    letter. Fixed points appear as 1-cycles.
    """
    seen = [False] * p.n
    cycles = []
    for start in range(p.n):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = p.images[j]
        cycles.append(cycle)
    return cycles


def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    images = list(range(n))
    for cycle in cycles:
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            images[a] = b
    return Permutation(tuple(images))


def cycle_type(p: Permutation) -> Partition:
    return Partition(sorted((len(c) for c in cycle_decomposition(p)), reverse=True))


def num_cycles(p: Permutation) -> int:
    return len(cycle_decomposition(p))


def format_cycles(p: Permutation) -> str:
    """1-indexed cycle notation, e.g. ``(1 2 3)(4)``."""
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycle_decomposition(p))


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(n)):
        yield Permutation(images)


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))
