"""Shared oracles.  Each one is written independently of the library code it checks."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest


def kraw_alt(k: int, x: int, n: int, q: int) -> int:
    """``K_k(x) = sum_j (-q)^j (q-1)^(k-j) C(n-j, k-j) C(x, j)``, a second closed form."""
    return sum((-q) ** j * (q - 1) ** (k - j) * math.comb(n - j, k - j) * math.comb(x, j) for j in range(k + 1))


def kraw_character_sum(k: int, x: int, n: int) -> int:
    """Binary ``K_k(x)`` as the character sum over weight-k words against a weight-x word."""
    u = [1] * x + [0] * (n - x)
    total = 0
    for ones in itertools.combinations(range(n), k):
        total += (-1) ** sum(u[i] for i in ones)
    return total


def hamming_distance(a, b) -> int:
    return sum(1 for s, t in zip(a, b) if s != t)


def brute_distribution(words, n: int) -> list[Fraction]:
    N = len(words)
    counts = [0] * (n + 1)
    for a in words:
        for b in words:
            counts[hamming_distance(a, b)] += 1
    return [Fraction(c, N) for c in counts]


def brute_energy(words, f) -> Fraction:
    total = Fraction(0)
    for a in words:
        for b in words:
            if a != b:
                total += f(hamming_distance(a, b))
    return total / len(words)


def burnside_class_count(q: int, n: int, N: int) -> int:
    """Orbits of N-subsets of {0..q-1}^n under coordinate and symbol permutations.

    Fixed N-subsets of one group element are the x^N coefficient of
    ``prod over cycles (1 + x^len)``; averaging over the group gives the count.
    """
    points = list(itertools.product(range(q), repeat=n))
    pos = {p: i for i, p in enumerate(points)}
    total = 0
    order = 0
    for perm in itertools.permutations(range(n)):
        for syms in itertools.product(list(itertools.permutations(range(q))), repeat=n):
            order += 1
            image = [pos[tuple(syms[i][p[perm[i]]] for i in range(n))] for p in points]
            seen = [False] * len(points)
            poly = [1]
            for s in range(len(points)):
                if seen[s]:
                    continue
                length, t = 0, s
                while not seen[t]:
                    seen[t] = True
                    t = image[t]
                    length += 1
                nxt = [0] * (len(poly) + length)
                for e, c in enumerate(poly):
                    nxt[e] += c
                    nxt[e + length] += c
                poly = nxt
            total += poly[N] if N < len(poly) else 0
    assert total % order == 0
    return total // order


def random_fraction(rng: random.Random, lo=0, hi=10, den=12) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def random_cm_coefficients(rng: random.Random, n: int) -> list[Fraction]:
    """Nonnegative, sparse-ish coefficients for a random completely monotonic function."""
    return [random_fraction(rng) if rng.random() < 0.6 else Fraction(0) for _ in range(n + 1)]


def random_cm_values(rng: random.Random, n: int) -> list[Fraction]:
    """A completely monotonic f on {0..n} built from geometric and power terms.

    Sums of ``c * g^x`` (0 < g <= 1) and ``c / (x + s)^a`` are completely
    monotonic, so this does not rely on the fundamental basis.
    """
    vals = [Fraction(0)] * (n + 1)
    for _ in range(rng.randint(1, 3)):
        c = random_fraction(rng, 0, 5)
        if rng.random() < 0.5:
            g = Fraction(rng.randint(1, 9), 10)
            for x in range(n + 1):
                vals[x] += c * g**x
        else:
            s, a = rng.randint(1, 3), rng.randint(1, 3)
            for x in range(n + 1):
                vals[x] += c / Fraction(x + s) ** a
    return vals


@pytest.fixture
def rng():
    return random.Random(20240611)


def _solve_square(M, v):
    """Gaussian elimination over Fractions; None if singular."""
    m = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(M, v)]
    for col in range(m):
        piv = next((r for r in range(col, m) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        for r in range(m):
            if r != col and A[r][col] != 0:
                t = A[r][col] / A[col][col]
                A[r] = [a - t * b for a, b in zip(A[r], A[col])]
    return [A[i][m] / A[i][i] for i in range(m)]


def vertex_min(objective, rows):
    """Minimum of ``objective·x`` over ``x >= 0`` and ``rows`` by enumerating vertices.

    ``rows`` holds ``(coeffs, sense, rhs)``.  Returns None when infeasible.
    The region must be bounded in the objective direction; x >= 0 makes it
    pointed, so some vertex is optimal.
    """
    m = len(objective)
    ineq = []  # g·x >= h
    for coeffs, sense, rhs in rows:
        if sense in (">=", "="):
            ineq.append((list(coeffs), rhs))
        if sense in ("<=", "="):
            ineq.append(([-c for c in coeffs], -rhs))
    for i in range(m):
        ineq.append(([1 if k == i else 0 for k in range(m)], 0))
    best = None
    for combo in itertools.combinations(range(len(ineq)), m):
        x = _solve_square([ineq[k][0] for k in combo], [ineq[k][1] for k in combo])
        if x is None:
            continue
        if all(sum(g * xi for g, xi in zip(gs, x)) >= h for gs, h in ineq):
            val = sum(Fraction(c) * xi for c, xi in zip(objective, x))
            if best is None or val < best:
                best = val
    return best


# acceptance lines, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
