"""Krawtchouk polynomials of the Hamming scheme H(n, q) and the transform they define."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import PotentialFunction, binomial, fundamental_potential


def krawtchouk_eval(k: int, x: int, n: int, q: int) -> int:
    """``K_k(x; n, q) = sum_j (-1)^j (q-1)^(k-j) C(x, j) C(n-x, k-j)``.

    ``x`` may be any integer; binomials are evaluated as polynomials.
    """
    if q < 2:
        raise ValueError("alphabet size must be at least 2")
    if not 0 <= k <= n:
        raise ValueError(f"degree {k} outside 0..{n}")
    return sum(
        (-1) ** j * (q - 1) ** (k - j) * binomial(x, j) * binomial(n - x, k - j)
        for j in range(k + 1)
    )


def leading_coefficient(k: int, q: int) -> Fraction:
    """Leading coefficient of ``K_k`` as a polynomial in ``x``, term by term.

    Every term of the defining sum contributes with sign ``(-1)^k``; the
    total is ``(-q)^k / k!``.
    """
    total = Fraction(0)
    for j in range(k + 1):
        term = Fraction((-1) ** k * (q - 1) ** (k - j), math.factorial(j) * math.factorial(k - j))
        assert term == 0 or (term > 0) == (k % 2 == 0), "term sign must be (-1)^k"
        total += term
    assert total == Fraction((-q) ** k, math.factorial(k))
    return total


def _recurrence_rows(n: int, q: int) -> list[list[int]]:
    # (k+1) K_{k+1}(x) = (k + (q-1)(n-k) - q x) K_k(x) - (q-1)(n-k+1) K_{k-1}(x)
    rows = [[1] * (n + 1)]
    if n >= 1:
        rows.append([(q - 1) * n - q * x for x in range(n + 1)])
    for k in range(1, n):
        prev, cur = rows[k - 1], rows[k]
        nxt = []
        for x in range(n + 1):
            val = (k + (q - 1) * (n - k) - q * x) * cur[x] - (q - 1) * (n - k + 1) * prev[x]
            quo, rem = divmod(val, k + 1)
            assert rem == 0
            nxt.append(quo)
        rows.append(nxt)
    return rows


@dataclass(frozen=True)
class KrawtchoukTable:
    """The (n+1)x(n+1) matrix ``K[j][i] = K_j(i; n, q)``."""

    q: int
    n: int
    K: tuple[tuple[int, ...], ...]

    def row(self, j: int) -> tuple[int, ...]:
        return self.K[j]

    def apply(self, vec: Sequence) -> list:
        """``K @ vec``: ``sum_i K_j(i) vec[i]`` for every ``j``."""
        return _matvec(self.K, vec)

    def apply_transpose(self, vec: Sequence) -> list:
        """``K^t @ vec``: ``sum_j K_j(i) vec[j]`` for every ``i``."""
        return _matvec(_transpose(self.K), vec)

    @property
    def size(self) -> int:
        return self.q**self.n


@lru_cache(maxsize=None)
def _transpose(M: tuple) -> tuple:
    return tuple(zip(*M))


def _matvec(M: Sequence[Sequence[int]], vec: Sequence) -> list:
    """Integer matrix times a rational vector, on a common denominator."""
    if all(isinstance(v, int) for v in vec):
        return [sum(a * v for a, v in zip(row, vec)) for row in M]
    fr = [Fraction(v) for v in vec]
    den = math.lcm(*(v.denominator for v in fr))
    ints = [v.numerator * (den // v.denominator) for v in fr]
    return [Fraction(sum(a * v for a, v in zip(row, ints)), den) for row in M]


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a]


def check_inverse_identity(table: KrawtchoukTable) -> bool:
    """``K·K == q^n I`` exactly."""
    prod = _matmul(table.K, table.K)
    qn = table.size
    return all(
        prod[i][j] == (qn if i == j else 0) for i in range(table.n + 1) for j in range(table.n + 1)
    )


def check_orthogonality(table: KrawtchoukTable) -> bool:
    """``q^-n sum_i C(n,i)(q-1)^i K_j(i) K_k(i) == C(n,j)(q-1)^j δ_jk``."""
    n, q = table.n, table.q
    w = [math.comb(n, i) * (q - 1) ** i for i in range(n + 1)]
    for j in range(n + 1):
        for k in range(j, n + 1):
            s = sum(w[i] * table.K[j][i] * table.K[k][i] for i in range(n + 1))
            expected = table.size * math.comb(n, j) * (q - 1) ** j if j == k else 0
            if s != expected:
                return False
    return True


@lru_cache(maxsize=None)
def transform_matrix(n: int, q: int) -> KrawtchoukTable:
    """Cached Krawtchouk table, built by recurrence and checked against the sum."""
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    rows = _recurrence_rows(n, q)
    for k in range(n + 1):
        for x in range(n + 1):
            if rows[k][x] != krawtchouk_eval(k, x, n, q):
                raise AssertionError(f"recurrence disagrees with definition at k={k}, x={x}")
    table = KrawtchoukTable(q, n, tuple(tuple(r) for r in rows))
    if not check_inverse_identity(table):
        raise AssertionError(f"K^2 != q^n I for n={n}, q={q}")
    return table


def krawtchouk_coefficients(h: PotentialFunction, table: KrawtchoukTable) -> list[Fraction]:
    """``c`` with ``h(i) = sum_j c_j K_j(i)``, computed as ``q^n c^t = h^t K``."""
    n = table.n
    if h.start != 0 or h.stop != n:
        raise ValueError(f"h must be tabulated on 0..{n}")
    qn = table.size
    return [Fraction(sum(table.K[i][j] * h.values[i] for i in range(n + 1))) / qn for j in range(n + 1)]


def reconstruct(c: Sequence[Fraction], table: KrawtchoukTable) -> PotentialFunction:
    """``i -> sum_j c_j K_j(i)`` on ``0..n``."""
    return PotentialFunction(0, tuple(Fraction(v) for v in table.apply_transpose(list(c))))


def is_positive_definite(h: PotentialFunction, table: KrawtchoukTable) -> bool:
    """All Krawtchouk coefficients of ``h`` are nonnegative."""
    return all(c >= 0 for c in krawtchouk_coefficients(h, table))


def fundamental_dual_identity(table: KrawtchoukTable, j: int) -> bool:
    """``K^t f_j == q^(n-j) f_(n-j)`` as exact vectors."""
    n, q = table.n, table.q
    lhs = table.apply_transpose(list(fundamental_potential(j, n).values))
    rhs = [q ** (n - j) * v for v in fundamental_potential(n - j, n).values]
    return lhs == rhs


def generating_function_identity(table: KrawtchoukTable, i: int) -> bool:
    """Coefficients of ``(1 + (q-1)z)^(n-i) (1-z)^i`` equal ``K_k(i)``."""
    n, q = table.n, table.q
    poly = [1]
    for factor in [[1, q - 1]] * (n - i) + [[1, -1]] * i:
        out = [0] * (len(poly) + 1)
        for a, pa in enumerate(poly):
            out[a] += pa * factor[0]
            out[a + 1] += pa * factor[1]
        poly = out
    return poly == [table.K[k][i] for k in range(n + 1)]
