"""Exhaustive search over isometry classes of small codes.

Classes are generated in orderly fashion: a canonical set (lexicographically
least sorted image under the isometry group) stays canonical when its
largest point is removed, so every class of size ``k + 1`` is reached from a
unique canonical parent by adding a point above the parent's maximum.
Canonicity is tested for all candidates at once with bit masks whose
maximum over the group picks out the least image.

Sizes above ``q^n / 2`` are handled through complements: the energy of a
complement is an increasing affine function of the energy of the code.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .codes.canonical import canonical_indices, image_weights, index_word, point_words
from .codes.core import Code
from .exact import PotentialFunction, fraction_to_str, fundamental_values, on_positive_distances

CACHE_ENV = "UO_CACHE_DIR"


class ScaleCapExceeded(ValueError):
    """Exhaustive search was requested outside the supported (q, n)."""


def check_scale(q: int, n: int) -> None:
    if n < 1 or not ((q == 2 and n <= 5) or (q == 3 and n <= 3)):
        raise ScaleCapExceeded(f"exhaustive search supports q=2 with n<=5 and q=3 with n<=3, not q={q}, n={n}")


def _check_size(q: int, n: int, N: int) -> None:
    check_scale(q, n)
    if not 1 <= N <= q**n:
        raise ValueError(f"size must lie in 1..{q ** n}")


def _distance_matrix(q: int, n: int) -> np.ndarray:
    W = point_words(q, n)
    return (W[:, None, :] != W[None, :, :]).sum(axis=2)


def _walk(q: int, n: int, depth: int) -> Iterator[tuple[tuple[int, ...], np.ndarray]]:
    """Every canonical point set of size ``1..depth`` with its unordered distance counts.

    Sets are yielded in depth-first order (lexicographic on index tuples).
    """
    P = q**n
    B = image_weights(q, n)  # (|G|, P), bit P-1-g(x)
    D = _distance_matrix(q, n)
    own = [1 << (P - 1 - x) for x in range(P)]
    # stack of (indices, image masks, own mask, counts)
    stack = [((), np.zeros(B.shape[0], dtype=np.uint64), 0, np.zeros(n + 1, dtype=np.int64))]
    while stack:
        idx, masks, mine, counts = stack.pop()
        lo = idx[-1] + 1 if idx else 0
        if lo >= P:
            continue
        cands = np.arange(lo, P)
        child_masks = masks[:, None] + B[:, cands]
        best = child_masks.max(axis=0)
        children = []
        for col, x in enumerate(cands.tolist()):
            if int(best[col]) != mine + own[x]:
                continue
            cidx = idx + (x,)
            ccounts = counts + np.bincount(D[x, list(idx)], minlength=n + 1) if idx else counts
            yield cidx, ccounts
            if len(cidx) < depth:
                children.append((cidx, child_masks[:, col].copy(), mine + own[x], ccounts))
        stack.extend(reversed(children))


def _code_from_indices(q: int, n: int, idx: Sequence[int]) -> Code:
    return Code(q, n, tuple(index_word(i, q, n) for i in idx))


def _complement_indices(q: int, n: int, idx: Sequence[int]) -> tuple[int, ...]:
    present = set(idx)
    rest = [x for x in range(q**n) if x not in present]
    return canonical_indices(rest, q, n)


def enumerate_codes(q: int, n: int, N: int) -> Iterator[Code]:
    """One canonical representative per isometry class of ``N``-word codes."""
    _check_size(q, n, N)
    P = q**n
    if N == P:
        yield _code_from_indices(q, n, range(P))
        return
    if 2 * N <= P:
        for idx, _ in _walk(q, n, N):
            if len(idx) == N:
                yield _code_from_indices(q, n, idx)
        return
    out = sorted(_complement_indices(q, n, idx) for idx, _ in _walk(q, n, P - N) if len(idx) == P - N)
    for idx in out:
        yield _code_from_indices(q, n, idx)


def count_classes(q: int, n: int, N: int) -> int:
    return sum(1 for _ in enumerate_codes(q, n, N))


def _shell_sum(q: int, n: int, vals: Sequence[Fraction]) -> Fraction:
    """``sum_k C(n,k)(q-1)^k f(k)``: the energy of any point against the whole space."""
    return sum((math.comb(n, k) * (q - 1) ** k * vals[k - 1] for k in range(1, n + 1)), Fraction(0))


def _via_complement(q: int, n: int, M: int, e_small: Fraction, vals) -> Fraction:
    """Energy of the complement of a size-``M`` code with energy ``e_small``."""
    P = q**n
    return (M * e_small + (P - 2 * M) * _shell_sum(q, n, vals)) / (P - M)


def _pair_energy(counts, vals, N: int) -> Fraction:
    return Fraction(2 * sum(int(counts[i]) * vals[i - 1] for i in range(1, len(counts))), 1) / N


def min_energy_exhaustive(q: int, n: int, N: int, f: PotentialFunction) -> tuple[Fraction, list[Code]]:
    """Exact minimum of ``E_f`` over all ``N``-word codes and every minimizing class."""
    _check_size(q, n, N)
    P = q**n
    vals = on_positive_distances(f, n)
    if N == P:
        return _via_complement(q, n, 0, Fraction(0), vals), [_code_from_indices(q, n, range(P))]
    M = min(N, P - N)
    best = None
    found: list[tuple[int, ...]] = []
    for idx, counts in _walk(q, n, M):
        if len(idx) != M:
            continue
        e = _pair_energy(counts, vals, M)
        if best is None or e < best:
            best, found = e, [idx]
        elif e == best:
            found.append(idx)
    if M != N:
        best = _via_complement(q, n, M, best, vals)
        found = sorted(_complement_indices(q, n, idx) for idx in found)
    return best, [_code_from_indices(q, n, idx) for idx in found]


@dataclass(frozen=True)
class SearchResult:
    """Exhaustive minima of ``f_1..f_n`` at one size, plus the universal optima.

    ``optimizer_counts[j-1]`` is the number of classes minimizing ``f_j``.
    """

    q: int
    n: int
    N: int
    minima: tuple[Fraction, ...]
    optimizer_counts: tuple[int, ...]
    universal_optima: tuple[Code, ...]

    @property
    def verdict(self) -> str:
        return "none" if not self.universal_optima else f"{len(self.universal_optima)} class(es)"

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "N": self.N,
            "minima": [fraction_to_str(v) for v in self.minima],
            "optimizer_counts": list(self.optimizer_counts),
            "universal_optima": [c.to_json()["words"] for c in self.universal_optima],
            "verdict": self.verdict,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SearchResult":
        q, n = int(data["q"]), int(data["n"])
        return cls(
            q, n, int(data["N"]),
            tuple(Fraction(v) for v in data["minima"]),
            tuple(int(v) for v in data["optimizer_counts"]),
            tuple(Code(q, n, tuple(tuple(w) for w in words)) for words in data["universal_optima"]),
        )


class _Tracker:
    """Per-size running minima of several integer-valued energies."""

    def __init__(self, k: int):
        self.minima: list[int] | None = None
        self.counts = [0] * k
        self.universal: list[tuple[int, ...]] = []

    def add(self, idx, e: list[int]) -> None:
        if self.minima is None:
            self.minima = list(e)
            self.counts = [1] * len(e)
            self.universal = [idx]
            return
        improved = False
        for j, v in enumerate(e):
            if v < self.minima[j]:
                self.minima[j] = v
                self.counts[j] = 1
                improved = True
            elif v == self.minima[j]:
                self.counts[j] += 1
        if improved:
            self.universal = []
        if e == self.minima:
            self.universal.append(idx)


def _cache_path(q: int, n: int, N: int) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"search-q{q}-n{n}-N{N}.json"


def _cache_load(q: int, n: int, N: int) -> SearchResult | None:
    path = _cache_path(q, n, N)
    if path is None or not path.exists():
        return None
    return SearchResult.from_json(json.loads(path.read_text()))


def _cache_store(res: SearchResult) -> None:
    path = _cache_path(res.q, res.n, res.N)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(res.to_json(), sort_keys=True))


def survey(q: int, n: int, sizes: Sequence[int] | None = None) -> dict[int, SearchResult]:
    """SearchResults for the given sizes (default ``1..q^n``) from one tree walk."""
    check_scale(q, n)
    P = q**n
    sizes = sorted(set(range(1, P + 1) if sizes is None else sizes))
    for N in sizes:
        _check_size(q, n, N)
    out: dict[int, SearchResult] = {}
    todo = []
    for N in sizes:
        hit = _cache_load(q, n, N)
        if hit is not None:
            out[N] = hit
        else:
            todo.append(N)
    if not todo:
        return out
    small = sorted({min(N, P - N) for N in todo if N < P})
    F = [[fundamental_values(j, n)[i] for i in range(1, n + 1)] for j in range(1, n + 1)]
    Fm = np.array(F, dtype=np.int64)  # (n, n): row j-1 holds f_j(1..n)
    trackers = {M: _Tracker(n) for M in small}
    if small:
        want = set(small)
        for idx, counts in _walk(q, n, max(small)):
            if len(idx) in want:
                trackers[len(idx)].add(idx, (Fm @ counts[1:]).tolist())
    for N in todo:
        vals_j = [tuple(Fraction(v) for v in row) for row in F]
        if N == P:
            minima = tuple(_via_complement(q, n, 0, Fraction(0), v) for v in vals_j)
            res = SearchResult(q, n, N, minima, (1,) * n, (_code_from_indices(q, n, range(P)),))
        else:
            M = min(N, P - N)
            t = trackers[M]
            minima = tuple(Fraction(2 * m, M) for m in t.minima)
            classes = sorted(t.universal)
            if M != N:
                minima = tuple(_via_complement(q, n, M, m, v) for m, v in zip(minima, vals_j))
                classes = sorted(_complement_indices(q, n, idx) for idx in classes)
            res = SearchResult(q, n, N, minima, tuple(t.counts),
                               tuple(_code_from_indices(q, n, idx) for idx in classes))
        _cache_store(res)
        out[N] = res
    return out


def search(q: int, n: int, N: int) -> SearchResult:
    _check_size(q, n, N)
    return survey(q, n, [N])[N]


def classify_universal_optima(q: int, n: int, N: int) -> list[Code]:
    """Every class minimizing all fundamental potentials at once; empty means none."""
    return list(search(q, n, N).universal_optima)
