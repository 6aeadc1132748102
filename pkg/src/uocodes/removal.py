"""Deleting one codeword from an LP universally optimal code.

Such a code is distance regular, so every deletion leaves the same
distribution ``B_i = (N-2)/(N-1) A_i``.  The deleted code is certified by
matching the strengthened (Ashikhmin-Simonis) program at size ``N - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .codes.core import Code, distance_distribution, distance_profiles, energy, is_distance_regular
from .exact import PotentialFunction, fraction_to_str, fundamental_potential, on_positive_distances
from .krawtchouk import transform_matrix
from .lp.delsarte import DelsarteSolver, delsarte_min_energy, is_lp_universally_optimal
from .quasicode import Quasicode, qc_energy

MULTIPLE_OF_Q = "multiple_of_q"
MINIMIZED_AT_ALL_DISTANCES = "f_minimized_at_all_distances"
BOUND_NOT_TIGHT = "bound_not_tight"


class TheoremDiscrepancy(AssertionError):
    """A check that must hold for LP universally optimal codes failed."""


def _integer_size(a: Quasicode) -> int:
    N = a.size
    if N.denominator != 1:
        raise ValueError(f"size {N} is not an integer")
    return N.numerator


def removal_distribution(a: Quasicode) -> Quasicode:
    """Average distribution after deleting a uniformly random codeword."""
    N = _integer_size(a)
    if N < 2:
        raise ValueError("need at least two codewords to delete one")
    r = Fraction(N - 2, N - 1)
    return Quasicode(a.q, a.n, (Fraction(1),) + tuple(r * x for x in a.A[1:]))


def ashikhmin_simonis_slacks(a: Quasicode) -> list[Fraction]:
    """``N (K a)_j - (q-1)^j C(n,j)`` for ``j = 0..n``."""
    N = _integer_size(a)
    q, n = a.q, a.n
    Ka = transform_matrix(n, q).apply(a.A)
    return [N * Ka[j] - (q - 1) ** j * math.comb(n, j) for j in range(n + 1)]


def check_ashikhmin_simonis(a: Quasicode) -> tuple[bool, list[Fraction]]:
    N = _integer_size(a)
    if N % a.q == 0:
        raise ValueError(f"the inequalities are only valid when q={a.q} does not divide N={N}")
    slacks = ashikhmin_simonis_slacks(a)
    return all(s >= 0 for s in slacks), slacks


def qmult_check(code: Code, f: PotentialFunction) -> str:
    """Classify an LP-tight code: its size is a multiple of q, or f is flat on its distances.

    Raises TheoremDiscrepancy when neither alternative holds for a tight code.
    """
    q, n, N = code.q, code.n, len(code)
    value, _, _ = delsarte_min_energy(q, n, N, f)
    if energy(code, f) != value:
        return BOUND_NOT_TIGHT
    if N % q == 0:
        return MULTIPLE_OF_Q
    vals = on_positive_distances(f, n)
    low = min(vals)
    A = distance_distribution(code).A
    if all(vals[i - 1] == low for i in range(1, n + 1) if A[i] != 0):
        return MINIMIZED_AT_ALL_DISTANCES
    raise TheoremDiscrepancy(f"tight code of size {N} not divisible by {q} with f not minimal on its distances")


@dataclass
class RemovalReport:
    code_id: str
    q: int
    n: int
    N: int
    distance_regular: bool
    deletion_distributions: list[Quasicode]
    distributions_coincide: bool
    removal_distribution: Quasicode
    as_optima: list[Fraction]
    removal_energies: list[Fraction]
    discrepancies: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not self.discrepancies

    def to_json(self) -> dict:
        distinct = []
        for d in self.deletion_distributions:
            if d not in distinct:
                distinct.append(d)
        return {
            "code": self.code_id,
            "q": self.q,
            "n": self.n,
            "N": self.N,
            "distance_regular": self.distance_regular,
            "deletions_checked": len(self.deletion_distributions),
            "distinct_deletion_distributions": [d.to_json()["A"] for d in distinct],
            "distributions_coincide": self.distributions_coincide,
            "removal_distribution": self.removal_distribution.to_json()["A"],
            "as_optima": [fraction_to_str(v) for v in self.as_optima],
            "removal_energies": [fraction_to_str(v) for v in self.removal_energies],
            "discrepancies": list(self.discrepancies),
            "verdict": self.verdict,
        }


def deletion_distributions(code: Code) -> list[Quasicode]:
    """Distance distribution of ``code`` minus each codeword, in word order."""
    q, n, N = code.q, code.n, len(code)
    prof = distance_profiles(code)
    base = [Fraction(int(c)) for c in prof.sum(axis=0)]  # N * A_i
    out = []
    seen: dict[tuple, Quasicode] = {}
    for row in prof:
        key = tuple(int(v) for v in row)
        if key not in seen:
            A = [Fraction(1)] + [(base[i] - 2 * key[i]) / (N - 1) for i in range(1, n + 1)]
            seen[key] = Quasicode(q, n, tuple(A))
        out.append(seen[key])
    return out


def verify_removal_theorem(code: Code, code_id: str = "code") -> RemovalReport:
    q, n, N = code.q, code.n, len(code)
    if N < 2:
        raise ValueError("need at least two codewords")
    a = distance_distribution(code)
    if not is_lp_universally_optimal(a):
        raise ValueError(f"{code_id} is not LP universally optimal")
    bad: list[str] = []
    regular = is_distance_regular(code)
    if not regular:
        bad.append("code is not distance regular")
    B = removal_distribution(a)
    dels = deletion_distributions(code)
    coincide = all(d == B for d in dels)
    if not coincide:
        bad.append("some single deletion differs from the averaged distribution")
    optima: list[Fraction] = []
    energies: list[Fraction] = []
    if (N - 1) % q == 0:
        bad.append(f"q={q} divides N-1={N - 1}; the strengthened program does not apply")
    else:
        solver = DelsarteSolver(q, n, N - 1, strengthened=True)
        for j in range(1, n + 1):
            f = fundamental_potential(j, n)
            value = solver.minimize(f)[0]
            e = qc_energy(B, f.restrict(1, n))
            optima.append(value)
            energies.append(e)
            if e != value:
                bad.append(f"f_{j}: deleted code has energy {e}, strengthened optimum {value}")
    return RemovalReport(code_id, q, n, N, regular, dels, coincide, B, optima, energies, bad)


def complement_energy_identity(code: Code, f: PotentialFunction) -> tuple[Fraction, Fraction]:
    """Both sides of ``(q^n - N) E(rest) = N E(C) + (q^n - 2N) sum_k C(n,k)(q-1)^k f(k)``.

    The left side is computed from the complement itself.  Raises
    TheoremDiscrepancy if the sides differ.
    """
    from .codes.core import complement

    q, n, N = code.q, code.n, len(code)
    total = q**n
    if not 1 <= N < total:
        raise ValueError("code must be a nonempty proper subset")
    vals = on_positive_distances(f, n)
    shell = sum((math.comb(n, k) * (q - 1) ** k * vals[k - 1] for k in range(1, n + 1)), Fraction(0))
    lhs = (total - N) * energy(complement(code), f)
    rhs = N * energy(code, f) + (total - 2 * N) * shell
    if lhs != rhs:
        raise TheoremDiscrepancy(f"complement identity fails: {lhs} != {rhs}")
    return lhs, rhs
