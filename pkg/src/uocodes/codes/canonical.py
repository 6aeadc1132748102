"""Isometries of Hamming space and canonical representatives of codes.

An isometry permutes the coordinates and applies an independent symbol
permutation in every coordinate.  Points of ``{0..q-1}^n`` are indexed in
base ``q`` with coordinate 0 most significant; a code's canonical form is
the image whose sorted index tuple is lexicographically least.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .core import Code

# The explicit group action is materialized only below this many elements.
MAX_GROUP_ORDER = 50_000


def group_order(q: int, n: int) -> int:
    return math.factorial(n) * math.factorial(q) ** n


def word_index(word, q: int) -> int:
    idx = 0
    for s in word:
        idx = idx * q + s
    return idx


def index_word(idx: int, q: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        idx, s = divmod(idx, q)
        out.append(s)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def point_words(q: int, n: int) -> np.ndarray:
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(q**n, n)


@lru_cache(maxsize=None)
def isometry_group(q: int, n: int) -> np.ndarray:
    """Array ``(|G|, q^n)``: row ``g`` maps point index ``x`` to ``g(x)``."""
    order = group_order(q, n)
    if order > MAX_GROUP_ORDER:
        raise ValueError(f"isometry group of order {order} is too large to materialize")
    W = point_words(q, n)
    weights = [q ** (n - 1 - i) for i in range(n)]
    sym = np.array(list(itertools.permutations(range(q))), dtype=np.int64)  # (q!, q)
    blocks = []
    for perm in itertools.permutations(range(n)):
        Wp = W[:, perm]
        total = np.zeros((1, q**n), dtype=np.int64)
        for i in range(n):
            contrib = sym[:, Wp[:, i]] * weights[i]  # (q!, P)
            total = (total[:, None, :] + contrib[None, :, :]).reshape(-1, q**n)
        blocks.append(total)
    G = np.vstack(blocks)
    assert G.shape == (order, q**n)
    return G


@lru_cache(maxsize=None)
def image_weights(q: int, n: int) -> np.ndarray:
    """``B[g, x] = 2^(P-1-g(x))``; a set is canonical iff its weight sum is maximal."""
    P = q**n
    if P > 63:
        raise ValueError("bit-mask canonical forms need at most 63 points")
    G = isometry_group(q, n)
    return (np.uint64(1) << (np.uint64(P - 1) - G.astype(np.uint64))).astype(np.uint64)


def canonical_indices(indices, q: int, n: int) -> tuple[int, ...]:
    """Lexicographically least sorted image of a set of point indices."""
    idx = np.asarray(sorted(indices), dtype=np.int64)
    P = q**n
    G = isometry_group(q, n)
    if P <= 63:
        B = image_weights(q, n)
        masks = B[:, idx].sum(axis=1, dtype=np.uint64)
        best = int(masks.max())
        return tuple(x for x in range(P) if best >> (P - 1 - x) & 1)
    images = np.sort(G[:, idx], axis=1)
    order = np.lexsort(images.T[::-1])
    return tuple(int(v) for v in images[order[0]])


def canonical_form(code: Code) -> Code:
    """Canonical representative of the isometry class of ``code``."""
    q, n = code.q, code.n
    idx = canonical_indices([word_index(w, q) for w in code.words], q, n)
    return Code(q, n, tuple(index_word(i, q, n) for i in idx))


def are_isometric(a: Code, b: Code) -> bool:
    return (a.q, a.n, len(a)) == (b.q, b.n, len(b)) and canonical_form(a) == canonical_form(b)
