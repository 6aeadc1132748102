"""Quasicodes: feasible points of the Delsarte linear program, and MacWilliams duality."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import PotentialFunction, as_fraction, fraction_to_str
from .krawtchouk import transform_matrix


def feasibility_violations(q: int, n: int, A: Sequence) -> list[str]:
    """Human-readable list of violated quasicode constraints (empty iff feasible)."""
    A = [as_fraction(a) for a in A]
    if len(A) != n + 1:
        return [f"expected {n + 1} entries, got {len(A)}"]
    out = []
    if A[0] != 1:
        out.append(f"A_0 = {A[0]} != 1")
    for i, a in enumerate(A):
        if a < 0:
            out.append(f"A_{i} = {a} < 0")
    table = transform_matrix(n, q)
    for j, v in enumerate(table.apply(A)):
        if v < 0:
            out.append(f"(K a)_{j} = {v} < 0")
    return out


def is_feasible(q: int, n: int, A: Sequence) -> tuple[bool, list[str]]:
    """Check ``A_0 = 1``, ``A >= 0`` and ``K A >= 0`` exactly."""
    violations = feasibility_violations(q, n, A)
    return not violations, violations


@dataclass(frozen=True)
class Quasicode:
    """A distance-distribution-like vector ``(A_0, ..., A_n)``.

    Construction validates every Delsarte constraint; the size ``N`` is
    always derived as ``sum(A)``.
    """

    q: int
    n: int
    A: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(as_fraction(a) for a in self.A))
        violations = feasibility_violations(self.q, self.n, self.A)
        if violations:
            raise ValueError("infeasible quasicode: " + "; ".join(violations))

    @property
    def size(self) -> Fraction:
        return sum(self.A, Fraction(0))

    @property
    def N(self) -> Fraction:
        return self.size

    def dual_vector(self) -> list[Fraction]:
        table = transform_matrix(self.n, self.q)
        N = self.size
        return [v / N for v in table.apply(self.A)]

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "A": [fraction_to_str(a) for a in self.A]}

    @classmethod
    def from_json(cls, data: dict) -> "Quasicode":
        return cls(int(data["q"]), int(data["n"]), tuple(Fraction(a) for a in data["A"]))


def dual(a: Quasicode) -> Quasicode:
    """MacWilliams transform ``a^⊥ = K a / |a|``."""
    return Quasicode(a.q, a.n, tuple(a.dual_vector()))


def support(a: Quasicode) -> frozenset[int]:
    return frozenset(i for i in range(1, a.n + 1) if a.A[i] != 0)


def dual_support(a: Quasicode) -> frozenset[int]:
    b = a.dual_vector()
    return frozenset(j for j in range(1, a.n + 1) if b[j] != 0)


def design_strength(a: Quasicode) -> int:
    """Largest ``t`` with ``A^⊥_j = 0`` for ``1 <= j <= t``."""
    b = a.dual_vector()
    for j in range(1, a.n + 1):
        if b[j] != 0:
            return j - 1
    return a.n


def design_average_check(a: Quasicode, f: PotentialFunction, degree: int) -> bool:
    """Compare the code average of ``f`` with its average over the whole space.

    ``f`` must be the tabulation of a polynomial of degree ``degree`` on
    ``0..n``; the identity is only guaranteed when ``degree`` does not exceed
    the design strength, so larger degrees are refused.
    """
    if degree > design_strength(a):
        raise ValueError(f"degree {degree} exceeds design strength {design_strength(a)}")
    n, q = a.n, a.q
    lhs = sum(a.A[i] * f(i) for i in range(n + 1)) / a.size
    rhs = Fraction(sum(math.comb(n, i) * (q - 1) ** i * f(i) for i in range(n + 1)), q**n)
    return lhs == rhs


def qc_energy(a: Quasicode, f: PotentialFunction) -> Fraction:
    """``sum_i f(i) A_i``, including ``i = 0`` when ``f`` is defined there."""
    return sum((a.A[i] * f(i) for i in f.domain if i <= a.n), Fraction(0))


def whole_space(q: int, n: int) -> Quasicode:
    return Quasicode(q, n, tuple(Fraction(math.comb(n, i) * (q - 1) ** i) for i in range(n + 1)))


def singleton(q: int, n: int) -> Quasicode:
    return Quasicode(q, n, (Fraction(1),) + (Fraction(0),) * n)
