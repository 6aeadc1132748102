"""The Delsarte energy program, its Ashikhmin-Simonis strengthening and dual certificates.

Variables are ``A_1..A_n`` (``A_0 = 1`` is fixed).  Row 0 is the size
equation ``sum A_i = N - 1`` and row ``j`` is ``(K a)_j >= 0``.  The
multiplier of row 0 becomes ``c_0`` and that of row ``j`` becomes ``c_j``,
so the dual of the program is exactly the search for the auxiliary function
``h = sum c_j K_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..exact import PotentialFunction, as_fraction, fraction_to_str, fundamental_potential
from ..krawtchouk import reconstruct, transform_matrix
from ..quasicode import Quasicode, dual_support, is_feasible, qc_energy, support
from .simplex import Constraint, InconsistentBasis, LinearProgram, Tableau, result_from


@dataclass(frozen=True)
class DualCertificate:
    """``h = sum_j c_j K_j`` with ``c_j >= 0`` (j >= 1) and ``h <= f`` off zero."""

    h: PotentialFunction
    c: tuple[Fraction, ...]
    bound: Fraction
    equality_support: frozenset[int]
    zero_dual: frozenset[int]

    def to_json(self) -> dict:
        return {
            "h": [fraction_to_str(v) for v in self.h.values],
            "c": [fraction_to_str(v) for v in self.c],
            "bound": fraction_to_str(self.bound),
            "equality_support": sorted(self.equality_support),
            "zero_dual": sorted(self.zero_dual),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DualCertificate":
        return cls(
            PotentialFunction.from_values(data["h"]),
            tuple(Fraction(v) for v in data["c"]),
            Fraction(data["bound"]),
            frozenset(data["equality_support"]),
            frozenset(data["zero_dual"]),
        )


def _values_on_positive(f: PotentialFunction, n: int) -> list[Fraction]:
    if f.start > 1 or f.stop < n:
        raise ValueError(f"potential must be defined on 1..{n}")
    return [f(i) for i in range(1, n + 1)]


def make_certificate(q: int, n: int, N, f: PotentialFunction, c: Sequence) -> DualCertificate:
    """Assemble a certificate from coefficients ``c_0..c_n``; no validity check."""
    N = as_fraction(N)
    c = tuple(as_fraction(v) for v in c)
    h = reconstruct(c, transform_matrix(n, q))
    return DualCertificate(
        h=h,
        c=c,
        bound=N * c[0] - h(0),
        equality_support=frozenset(i for i in range(1, n + 1) if h(i) == f(i)),
        zero_dual=frozenset(j for j in range(1, n + 1) if c[j] == 0),
    )


def certificate_violations(q: int, n: int, N, f: PotentialFunction, cert: DualCertificate) -> list[str]:
    """Invariant violations of a certificate for size ``N`` and potential ``f``."""
    N = as_fraction(N)
    out = []
    if len(cert.c) != n + 1 or cert.h.start != 0 or cert.h.stop != n:
        return ["certificate has the wrong length"]
    out += [f"c_{j} = {cert.c[j]} < 0" for j in range(1, n + 1) if cert.c[j] < 0]
    h = reconstruct(cert.c, transform_matrix(n, q))
    if h.values != cert.h.values:
        out.append("h is not sum_j c_j K_j")
    out += [f"h({i}) = {h(i)} > f({i}) = {f(i)}" for i in range(1, n + 1) if h(i) > f(i)]
    if cert.bound != N * cert.c[0] - h(0):
        out.append("bound != N c_0 - h(0)")
    if cert.equality_support != frozenset(i for i in range(1, n + 1) if h(i) == f(i)):
        out.append("equality_support does not match h and f")
    if cert.zero_dual != frozenset(j for j in range(1, n + 1) if cert.c[j] == 0):
        out.append("zero_dual does not match c")
    return out


def verify_certificate(a: Quasicode, f: PotentialFunction, cert: DualCertificate) -> bool:
    """True iff ``cert`` is valid and proves that ``a`` attains its bound for ``f``.

    Besides the invariants this checks ``h = f`` on the support of ``a`` and
    ``c_j = 0`` on its dual support; together they force equality.
    """
    n = a.n
    try:
        if certificate_violations(a.q, n, a.size, f, cert):
            return False
    except ValueError:
        return False
    if not support(a) <= cert.equality_support:
        return False
    if dual_support(a) & (frozenset(range(1, n + 1)) - cert.zero_dual):
        return False
    energy = sum((a.A[i] * f(i) for i in range(1, n + 1)), Fraction(0))
    if energy != cert.bound:
        raise AssertionError("complementary slackness held but the energies differ")
    return True


def trivial_certificate(q: int, n: int, N) -> DualCertificate:
    """Certificate for ``f_0``: ``h = 1``, ``c = e_0``, bound ``N - 1``."""
    c = (Fraction(1),) + (Fraction(0),) * n
    return make_certificate(q, n, N, fundamental_potential(0, n), c)


def delsarte_program(q: int, n: int, N, objective: Sequence = None, *, strengthened: bool = False) -> LinearProgram:
    """The energy program as a LinearProgram over ``A_1..A_n``.

    With ``strengthened`` the constraints ``N (K a)_j >= (q-1)^j C(n,j)`` for
    ``j = 0..n`` are appended; those hold only for codes with ``q`` not
    dividing ``N``.
    """
    N = as_fraction(N)
    if N < 1:
        raise ValueError("size must be at least 1")
    K = transform_matrix(n, q).K
    cons = [Constraint((1,) * n, "=", N - 1)]
    for j in range(1, n + 1):
        cons.append(Constraint(K[j][1:], ">=", -K[j][0]))
    if strengthened:
        for j in range(n + 1):
            cons.append(Constraint(tuple(N * k for k in K[j][1:]), ">=", K[j][0] * (1 - N)))
    if objective is None:
        objective = (0,) * n
    return LinearProgram(tuple(objective), tuple(cons))


class DelsarteSolver:
    """Warm-started solver for one ``(q, n)`` and a changing size or potential.

    The tableau is reused: a new potential restarts the primal simplex from
    the previous optimal basis and a new size ``N`` runs the dual simplex.
    """

    def __init__(self, q: int, n: int, N, *, strengthened: bool = False):
        self.q, self.n = q, n
        self.N = as_fraction(N)
        self.strengthened = strengthened
        if not 1 <= self.N <= q**n:
            raise ValueError(f"the program is feasible only for 1 <= N <= {q ** n}")
        if strengthened and (self.N.denominator != 1 or self.N.numerator % q == 0):
            raise ValueError(f"the strengthened constraints need an integer size not divisible by q={q}")
        self._tab = Tableau(delsarte_program(q, n, self.N, strengthened=strengthened))
        if not self._tab.phase_one():
            raise AssertionError("the energy program is always feasible for 1 <= N")
        self._objective = None

    def resize(self, N) -> None:
        N = as_fraction(N)
        if not 1 <= N <= self.q**self.n:
            raise ValueError(f"the program is feasible only for 1 <= N <= {self.q ** self.n}")
        if self.strengthened:
            self.__init__(self.q, self.n, N, strengthened=True)
            return
        self.N = N
        try:
            self._tab.set_rhs(0, N - 1)
        except InconsistentBasis:
            self.__init__(self.q, self.n, N)

    def minimize(self, f: PotentialFunction) -> tuple[Fraction, Quasicode, DualCertificate]:
        objective = _values_on_positive(f, self.n)
        tab = self._tab
        if any(v < 0 for v in tab.rhs):
            # after a resize the old optimal basis is still dual feasible
            if self._objective is None:
                self.__init__(self.q, self.n, self.N, strengthened=self.strengthened)
            else:
                tab.set_costs(list(self._objective) + [Fraction(0)] * (tab.width - self.n))
                if tab.dual_simplex() != "optimal":
                    raise AssertionError("the energy program is always feasible for 1 <= N")
            tab = self._tab
        status = tab.phase_two(objective)
        self._objective = tuple(objective)
        res = result_from(tab, status)
        if not res.optimal:
            raise AssertionError(f"energy program returned {res.status}")
        return self._package(f, res)

    def _package(self, f, res) -> tuple[Fraction, Quasicode, DualCertificate | None]:
        q, n, N = self.q, self.n, self.N
        A = (Fraction(1),) + tuple(res.x)
        if self.strengthened:
            return res.value, Quasicode(q, n, A), None
        cert = make_certificate(q, n, N, f, res.y)
        bad = certificate_violations(q, n, N, f, cert)
        if bad or cert.bound != res.value:
            raise AssertionError("extracted certificate is invalid: " + "; ".join(bad))
        return res.value, Quasicode(q, n, A), cert


def delsarte_min_energy(q: int, n: int, N, f: PotentialFunction) -> tuple[Fraction, Quasicode, DualCertificate]:
    """Minimum of ``sum_{i>=1} A_i f(i)`` over quasicodes of size ``N``.

    Returns the value, an optimal quasicode and a certificate whose bound
    equals the value.
    """
    return DelsarteSolver(q, n, N).minimize(f)


def fundamental_minima(q: int, n: int, N, solver: DelsarteSolver | None = None) -> list[Fraction]:
    """``m_j`` for ``j = 0..n``: the minimal ``f_j`` energies at size ``N``."""
    N = as_fraction(N)
    if solver is None:
        solver = DelsarteSolver(q, n, N)
    elif solver.N != N:
        solver.resize(N)
    out = [N - 1]
    for j in range(1, n + 1):
        out.append(solver.minimize(fundamental_potential(j, n))[0])
    return out


def as_min_energy(q: int, n: int, N: int, f: PotentialFunction) -> tuple[Fraction, Quasicode]:
    """Minimum energy over quasicodes that also satisfy the strengthened rows."""
    if int(N) != N or N < 1:
        raise ValueError("the strengthened program needs an integer size")
    value, a, _ = DelsarteSolver(q, n, int(N), strengthened=True).minimize(f)
    return value, a


def as_fundamental_minima(q: int, n: int, N: int) -> list[Fraction]:
    """Strengthened minima of ``f_1..f_n`` (index 0 holds ``N - 1``)."""
    solver = DelsarteSolver(q, n, int(N), strengthened=True)
    return [Fraction(N - 1)] + [solver.minimize(fundamental_potential(j, n))[0] for j in range(1, n + 1)]


@dataclass(frozen=True)
class OptimalityResult:
    optimal: bool
    certificates: tuple[DualCertificate, ...]
    first_failure: int | None = None
    lp_value: Fraction | None = None
    energy: Fraction | None = None

    def __iter__(self) -> Iterator:
        return iter((self.optimal, list(self.certificates)))

    def __bool__(self) -> bool:
        return self.optimal


def is_lp_universally_optimal(a: Quasicode) -> OptimalityResult:
    """Check ``qc_energy(a, f_j)`` against the program minimum for each ``j = 1..n``.

    On success the ``n`` certificates are returned, each verified against
    ``a``; on failure ``first_failure`` is the first ``j`` with a gap.
    """
    q, n, N = a.q, a.n, a.size
    solver = DelsarteSolver(q, n, N)
    certs = []
    for j in range(1, n + 1):
        f = fundamental_potential(j, n)
        value, _, cert = solver.minimize(f)
        energy = qc_energy(a, f.restrict(1, n))
        if energy != value:
            if energy < value:
                raise AssertionError("a feasible quasicode beat the program minimum")
            return OptimalityResult(False, tuple(certs), j, value, energy)
        if not verify_certificate(a, f, cert):
            raise AssertionError("optimal certificate fails complementary slackness")
        certs.append(cert)
    return OptimalityResult(True, tuple(certs))


def solve_from_minima(q: int, n: int, minima: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """The unique ``A`` whose ``f_j`` energies are ``minima[j]`` for ``j = 0..n``.

    ``sum_i A_i C(n-i, j) = m_j + C(n, j)``; the matrix vanishes below its
    anti-diagonal, so back substitution from ``j = n`` gives ``A_0, A_1, ...``.
    """
    from math import comb

    A: list[Fraction] = []
    for j in range(n, -1, -1):
        rhs = as_fraction(minima[j]) + comb(n, j)
        rhs -= sum((A[i] * comb(n - i, j) for i in range(len(A))), Fraction(0))
        A.append(rhs)
    return tuple(A)


def universal_quasicode(q: int, n: int, N, solver: DelsarteSolver | None = None) -> Quasicode | None:
    """The quasicode of size ``N`` minimizing every ``f_j`` energy at once, if any."""
    N = as_fraction(N)
    if not 1 <= N <= q**n:
        raise ValueError("size must lie in 1..q^n")
    minima = fundamental_minima(q, n, N, solver)
    A = solve_from_minima(q, n, minima)
    ok, _ = is_feasible(q, n, A)
    if not ok:
        return None
    a = Quasicode(q, n, A)
    for j in range(n + 1):
        if qc_energy(a, fundamental_potential(j, n).restrict(1, n)) != minima[j]:
            raise AssertionError("solved distribution does not reproduce the minima")
    return a
