import itertools
import math
import random
from fractions import Fraction

import pytest

from conftest import kraw_alt, random_fraction, vertex_min
from uocodes.codes import Code, construct, distance_distribution
from uocodes.exact import PotentialFunction, fundamental_potential, make_potential
from uocodes.lp.delsarte import (
    DelsarteSolver,
    DualCertificate,
    as_min_energy,
    delsarte_min_energy,
    fundamental_minima,
    is_lp_universally_optimal,
    trivial_certificate,
    universal_quasicode,
    verify_certificate,
)
from uocodes.quasicode import Quasicode, qc_energy, singleton, whole_space


def f1(n):
    return fundamental_potential(1, n)


def oracle_min(q, n, N, vals, strengthened=False):
    """The same program written out by hand and solved by vertex enumeration."""
    K = [[kraw_alt(j, i, n, q) for i in range(n + 1)] for j in range(n + 1)]
    rows = [([1] * n, "=", N - 1)]
    rows += [(list(K[j][1:]), ">=", -K[j][0]) for j in range(1, n + 1)]
    if strengthened:
        rows += [([N * k for k in K[j][1:]], ">=", K[j][0] * (1 - N)) for j in range(n + 1)]
    return vertex_min(vals, rows)


def test_small_examples():
    value, a, cert = delsarte_min_energy(2, 2, 2, f1(2))
    assert value == 0 and a.A == (1, 0, 1)
    # the program is strictly weaker than codes here: (1,1,1) is feasible with energy 1
    value, a, cert = delsarte_min_energy(2, 2, 3, f1(2))
    assert value == 1 == oracle_min(2, 2, 3, [1, 0])
    assert a.A == (1, 1, 1)
    assert cert.bound == 1
    for q, n, N in [(2, 5, 7), (3, 3, Fraction(9, 2)), (4, 2, 3)]:
        assert delsarte_min_energy(q, n, N, fundamental_potential(0, n))[0] == N - 1


def test_strengthened_examples():
    value, a = as_min_energy(2, 2, 3, f1(2))
    assert value == Fraction(4, 3) == oracle_min(2, 2, 3, [1, 0], strengthened=True)
    assert a.A == (1, Fraction(4, 3), Fraction(2, 3))
    with pytest.raises(ValueError):
        as_min_energy(2, 3, 4, f1(3))
    ham = distance_distribution(construct("hamming", q=2, r=3))
    for j in range(1, 8):
        f = fundamental_potential(j, 7)
        expected = Fraction(14, 15) * qc_energy(ham, f.restrict(1, 7))
        assert as_min_energy(2, 7, 15, f)[0] == expected


def test_random_instances_against_oracle():
    rng = random.Random(41)
    for _ in range(150):
        q, n = rng.choice([(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)])
        N = rng.randint(1, q**n)
        vals = [random_fraction(rng, 0, 6) for _ in range(n)]
        f = PotentialFunction(1, tuple(vals))
        value, a, cert = delsarte_min_energy(q, n, N, f)
        assert value == oracle_min(q, n, N, vals)
        assert qc_energy(a, f) == value and a.size == N
        assert cert.bound == value
        if N % q:
            as_value, _ = as_min_energy(q, n, N, f)
            assert as_value == oracle_min(q, n, N, vals, strengthened=True)
            assert as_value >= value


def test_bound_is_sound_for_actual_codes():
    rng = random.Random(42)
    for _ in range(300):
        q, n = rng.choice([(2, 3), (2, 4), (3, 2), (3, 3)])
        pts = list(itertools.product(range(q), repeat=n))
        c = Code(q, n, tuple(rng.sample(pts, rng.randint(1, len(pts)))))
        a = distance_distribution(c)
        f = make_potential("inverse_power", rng.randint(1, 4), n)
        assert delsarte_min_energy(q, n, len(c), f)[0] <= qc_energy(a, f)


def test_hamming_and_golay_energies_meet_the_bound():
    ham = distance_distribution(construct("hamming", q=2, r=3))
    for j in range(8):
        f = fundamental_potential(j, 7)
        assert delsarte_min_energy(2, 7, 16, f)[0] == qc_energy(ham, f.restrict(1, 7))
    res = is_lp_universally_optimal(distance_distribution(construct("golay_binary24")))
    assert res.optimal and len(res.certificates) == 24


def test_lp_universal_optimality_decisions():
    res = is_lp_universally_optimal(Quasicode(2, 2, (1, 1, 0)))
    assert not res and res.first_failure == 1 and res.lp_value < res.energy
    for q, n in [(2, 4), (3, 3)]:
        ok, certs = is_lp_universally_optimal(whole_space(q, n))
        assert ok and len(certs) == n


def test_certificate_checks():
    a = distance_distribution(construct("hamming", q=2, r=3))
    assert verify_certificate(a, fundamental_potential(0, 7), trivial_certificate(2, 7, 16))
    ok, certs = is_lp_universally_optimal(a)
    for j, cert in enumerate(certs, start=1):
        f = fundamental_potential(j, 7)
        assert verify_certificate(a, f, cert)
        assert DualCertificate.from_json(cert.to_json()) == cert
    # break nonnegativity of one dual coefficient
    cert = certs[0]
    c = list(cert.c)
    k = next(j for j in range(1, 8) if c[j] > 0)
    c[k] = -c[k]
    bad = DualCertificate(cert.h, tuple(c), cert.bound, cert.equality_support, cert.zero_dual)
    assert not verify_certificate(a, fundamental_potential(1, 7), bad)


def test_universal_quasicode_examples():
    assert universal_quasicode(2, 12, 30) is None
    assert universal_quasicode(3, 3, 27) == whole_space(3, 3)
    assert universal_quasicode(2, 5, 1) == singleton(2, 5)
    solver = DelsarteSolver(2, 11, 1)
    for N in (1, 2, 17, 100, 1000, 2048):
        a = universal_quasicode(2, 11, N, solver)
        assert a is not None and a.size == N
        minima = fundamental_minima(2, 11, N)
        for j in range(12):
            assert qc_energy(a, fundamental_potential(j, 11)) == minima[j] + math.comb(11, j)


def test_warm_started_solver_matches_cold():
    rng = random.Random(43)
    solver = DelsarteSolver(2, 6, 10)
    for _ in range(60):
        N = Fraction(rng.randint(2, 128), 2) if rng.random() < 0.5 else Fraction(rng.randint(1, 64))
        solver.resize(N)
        f = PotentialFunction(1, tuple(random_fraction(rng, 0, 5) for _ in range(6)))
        assert solver.minimize(f)[0] == delsarte_min_energy(2, 6, N, f)[0]


def test_sizes_beyond_the_space_are_rejected():
    with pytest.raises(ValueError):
        delsarte_min_energy(2, 3, 9, f1(3))
    with pytest.raises(ValueError):
        DelsarteSolver(2, 3, 4).resize(Fraction(17, 2))
