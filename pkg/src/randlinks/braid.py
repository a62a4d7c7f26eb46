"""Braid words and their closures.

A word over ``n`` strands is a sequence of signed generator indices: ``+i``
is sigma_i, ``-i`` its inverse and ``0`` a lazy (identity) step. Words are
never reduced; only their image in the symmetric group matters here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from randlinks.partition import Partition
from randlinks.perm import Permutation, cycle_type, num_cycles


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"a braid needs at least 2 strands, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if abs(x) > self.n - 1:
                raise ValueError(f"letter {x} out of range for {self.n} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def to_json(self) -> dict:
        return {"n": self.n, "word": list(self.letters)}

    @classmethod
    def from_json(cls, obj: dict | str) -> "BraidWord":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["n"]), tuple(obj["word"]))


def apply_letters(images: list[int], letters: Iterable[int]) -> None:
    """Right-multiply ``images`` in place by the transposition of each letter."""
    for x in letters:
        if x:
            g = abs(x)
            images[g - 1], images[g] = images[g], images[g - 1]


def project(w: BraidWord) -> Permutation:
    """Image of ``w`` in S_n; sigma_i and its inverse both go to (i-1 i)."""
    images = list(range(w.n))
    apply_letters(images, w.letters)
    return Permutation(tuple(images))


def closure_components(w: BraidWord) -> int:
    return num_cycles(project(w))


def closure_partition(w: BraidWord) -> Partition:
    return cycle_type(project(w))
