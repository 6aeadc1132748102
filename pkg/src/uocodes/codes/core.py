"""Explicit codes in ``{0..q-1}^n``, their distance distributions and energies."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np

from ..exact import PotentialFunction
from ..quasicode import Quasicode

# Pairwise distance blocks are capped at about this many byte comparisons.
_BLOCK_BUDGET = 1 << 24


@dataclass(frozen=True)
class Code:
    """A set of distinct words of length ``n`` over ``{0, ..., q-1}``.

    Words are stored sorted, so two equal sets compare equal.
    """

    q: int
    n: int
    words: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.q < 2 or self.n < 1:
            raise ValueError("need q >= 2 and n >= 1")
        words = tuple(sorted(tuple(int(s) for s in w) for w in self.words))
        if not words:
            raise ValueError("a code needs at least one word")
        for w in words:
            if len(w) != self.n:
                raise ValueError(f"word {w} does not have length {self.n}")
            if any(not 0 <= s < self.q for s in w):
                raise ValueError(f"word {w} has a symbol outside 0..{self.q - 1}")
        if any(a == b for a, b in zip(words, words[1:])):
            raise ValueError("code words must be distinct")
        object.__setattr__(self, "words", words)

    @classmethod
    def from_array(cls, q: int, arr) -> "Code":
        arr = np.asarray(arr)
        return cls(q, arr.shape[1], tuple(map(tuple, arr.tolist())))

    def __len__(self) -> int:
        return len(self.words)

    @property
    def size(self) -> int:
        return len(self.words)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.uint8).reshape(len(self.words), self.n)

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "words": [list(w) for w in self.words]}

    @classmethod
    def from_json(cls, data: dict) -> "Code":
        return cls(int(data["q"]), int(data["n"]), tuple(tuple(w) for w in data["words"]))


def _distance_blocks(code: Code):
    W = code.array
    N = len(W)
    step = max(1, _BLOCK_BUDGET // max(1, N * code.n))
    for lo in range(0, N, step):
        yield lo, (W[lo : lo + step, None, :] != W[None, :, :]).sum(axis=2)


def pair_distance_counts(code: Code) -> list[int]:
    """Number of ordered pairs ``(x, y)`` at each distance ``0..n``."""
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for _, block in _distance_blocks(code):
        counts += np.bincount(block.ravel(), minlength=code.n + 1)
    return [int(c) for c in counts]


def distance_distribution(code: Code) -> Quasicode:
    """``A_i = #{(x, y) in C^2 : |x - y| = i} / |C|``."""
    N = len(code)
    return Quasicode(code.q, code.n, tuple(Fraction(c, N) for c in pair_distance_counts(code)))


def distance_profiles(code: Code) -> np.ndarray:
    """Row ``k`` counts the codewords at each distance from word ``k``."""
    N = len(code)
    prof = np.zeros((N, code.n + 1), dtype=np.int64)
    for lo, block in _distance_blocks(code):
        for d in range(code.n + 1):
            prof[lo : lo + len(block), d] = (block == d).sum(axis=1)
    return prof


def is_distance_regular(code: Code) -> bool:
    """Every codeword sees the same distance profile."""
    prof = distance_profiles(code)
    return bool((prof == prof[0]).all())


def energy(code: Code, f: PotentialFunction) -> Fraction:
    """``E_f(C) = |C|^-1 sum_{x != y} f(|x - y|)``."""
    counts = pair_distance_counts(code)
    if f.start > 1 or f.stop < code.n:
        raise ValueError(f"potential must cover distances 1..{code.n}")
    total = sum((counts[i] * f(i) for i in range(1, code.n + 1)), Fraction(0))
    return total / len(code)


def puncture(code: Code, coordinate: int) -> Code:
    """Delete one coordinate; the words must stay distinct."""
    if not 0 <= coordinate < code.n or code.n < 2:
        raise ValueError("cannot puncture at that coordinate")
    words = [w[:coordinate] + w[coordinate + 1 :] for w in code.words]
    if len(set(words)) != len(words):
        raise ValueError("puncturing would merge codewords")
    return Code(code.q, code.n - 1, tuple(words))


def shorten(code: Code, coordinate: int, symbol: int = 0) -> Code:
    """Keep words with ``symbol`` at ``coordinate``, then delete that coordinate."""
    if not 0 <= coordinate < code.n or code.n < 2:
        raise ValueError("cannot shorten at that coordinate")
    words = [w[:coordinate] + w[coordinate + 1 :] for w in code.words if w[coordinate] == symbol]
    if not words:
        raise ValueError("no codeword carries that symbol at that coordinate")
    return Code(code.q, code.n - 1, tuple(words))


def extend(code: Code) -> Code:
    """Append the check symbol making every coordinate sum vanish mod ``q``."""
    if not _is_prime(code.q):
        raise ValueError("extension is only defined for prime alphabets")
    return Code(code.q, code.n + 1, tuple(w + ((-sum(w)) % code.q,) for w in code.words))


def all_words(q: int, n: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(q), repeat=n)


def complement(code: Code) -> Code:
    """All words of the ambient space not in the code."""
    if len(code) >= code.q**code.n:
        raise ValueError("the complement of the whole space is empty")
    present = set(code.words)
    return Code(code.q, code.n, tuple(w for w in all_words(code.q, code.n) if w not in present))


def whole_space_code(q: int, n: int) -> Code:
    return Code(q, n, tuple(all_words(q, n)))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))
