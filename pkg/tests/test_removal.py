import itertools
import math
import random
from fractions import Fraction

import pytest

from conftest import brute_energy, random_fraction
from uocodes.catalog import all_entries, entry_code
from uocodes.codes import Code, complement, construct, distance_distribution, energy, extend
from uocodes.exact import PotentialFunction, fundamental_potential, make_potential
from uocodes.krawtchouk import transform_matrix
from uocodes.lp.delsarte import is_lp_universally_optimal
from uocodes.quasicode import Quasicode, singleton
from uocodes.removal import (
    BOUND_NOT_TIGHT,
    MINIMIZED_AT_ALL_DISTANCES,
    MULTIPLE_OF_Q,
    ashikhmin_simonis_slacks,
    check_ashikhmin_simonis,
    complement_energy_identity,
    deletion_distributions,
    qmult_check,
    removal_distribution,
    verify_removal_theorem,
)
from uocodes.search import enumerate_codes, min_energy_exhaustive

THREE = Code(2, 2, ((0, 0), (0, 1), (1, 1)))


def test_removal_distribution_examples():
    b = removal_distribution(Quasicode(2, 2, (1, 0, 1)))
    assert b.A == (1, 0, 0) and b.size == 1
    g = removal_distribution(distance_distribution(construct("golay_binary24")))
    assert g.A[8] == Fraction(4094, 4095) * 759 and g.size == 4095
    t = removal_distribution(distance_distribution(THREE))
    assert t.A == (1, Fraction(2, 3), Fraction(1, 3)) and t.size == 2
    with pytest.raises(ValueError):
        removal_distribution(singleton(2, 3))


def test_ashikhmin_simonis_examples():
    ok, slacks = check_ashikhmin_simonis(distance_distribution(THREE))
    assert ok and slacks == [8, 0, 0]
    for q, n in [(2, 4), (3, 3), (4, 2)]:
        ok, slacks = check_ashikhmin_simonis(singleton(q, n))
        assert ok and slacks == [0] * (n + 1)
    with pytest.raises(ValueError):
        check_ashikhmin_simonis(distance_distribution(construct("hamming", q=2, r=3)))


def test_ashikhmin_simonis_holds_for_every_odd_code_in_f2_cubed():
    pts = list(itertools.product(range(2), repeat=3))
    checked = 0
    for N in (1, 3, 5, 7):
        for words in itertools.combinations(pts, N):
            ok, _ = check_ashikhmin_simonis(distance_distribution(Code(2, 3, words)))
            assert ok, words
            checked += 1
    assert checked == 8 + 56 + 56 + 8


def test_qmult_examples():
    ham = construct("hamming", q=2, r=3)
    for j in range(1, 8):
        assert qmult_check(ham, fundamental_potential(j, 7)) == MULTIPLE_OF_Q
    rep = Code(2, 5, ((0,) * 5, (1,) * 5))
    assert qmult_check(rep, fundamental_potential(2, 5)) == MULTIPLE_OF_Q
    # over F_3 the pair has size 2, not a multiple of 3, and every distance is n
    rep3 = Code(3, 3, ((0, 0, 0), (1, 1, 1)))
    assert qmult_check(rep3, fundamental_potential(1, 3)) == MINIMIZED_AT_ALL_DISTANCES
    near = Code(2, 3, ((0, 0, 0), (0, 0, 1)))
    assert qmult_check(near, fundamental_potential(1, 3)) == BOUND_NOT_TIGHT


def test_removal_theorem_on_small_codes():
    for code in (construct("hamming", q=2, r=3), construct("simplex", q=2, r=3),
                 extend(construct("hamming", q=2, r=3))):
        rep = verify_removal_theorem(code)
        assert rep.verdict, rep.discrepancies
        assert rep.distance_regular and rep.distributions_coincide
        assert rep.removal_energies == rep.as_optima


def test_removal_theorem_precondition():
    with pytest.raises(ValueError):
        verify_removal_theorem(THREE)
    with pytest.raises(ValueError):
        verify_removal_theorem(Code(2, 3, ((0, 0, 0), (0, 0, 1))))


def test_catalog_codes_are_distance_regular_with_identical_deletions():
    for e in all_entries():
        if e.level != "code" or e.N > 800:
            continue
        code = entry_code(e)
        if not is_lp_universally_optimal(distance_distribution(code)):
            continue
        dels = deletion_distributions(code)
        assert len(set(dels)) == 1, e.label
        assert dels[0] == removal_distribution(distance_distribution(code)), e.label


def test_deletions_stay_optimal_by_exhaustive_search():
    """Small binary LP-UO codes: every single deletion is optimal among all codes of that size."""
    checked = 0
    for n in (2, 3, 4):
        fs = [fundamental_potential(j, n) for j in range(1, n + 1)]
        for N in range(2, 2**n + 1, 2):
            minima = None
            for code in enumerate_codes(2, n, N):
                if not is_lp_universally_optimal(distance_distribution(code)):
                    continue
                if minima is None:
                    minima = [min_energy_exhaustive(2, n, N - 1, f)[0] for f in fs]
                for w in code.words:
                    rest = Code(2, n, tuple(x for x in code.words if x != w))
                    assert [energy(rest, f) for f in fs] == minima, (n, N, w)
                checked += 1
    assert checked > 0


def test_complement_identity_examples():
    even = Code(2, 4, tuple(w for w in itertools.product(range(2), repeat=4) if sum(w) % 2 == 0))
    f = make_potential("inverse_power", 1, 4)
    lhs, rhs = complement_energy_identity(even, f)
    assert lhs == rhs == 8 * energy(even, f)
    one = Code(3, 2, ((1, 2),))
    f = fundamental_potential(1, 2)
    lhs, rhs = complement_energy_identity(one, f)
    pts = [w for w in itertools.product(range(3), repeat=2) if w != (1, 2)]
    assert lhs == rhs == 8 * brute_energy(pts, f)


def test_complement_identity_random():
    rng = random.Random(61)
    for _ in range(1000):
        q, n = rng.choice([(2, 3), (2, 4), (3, 2)])
        pts = list(itertools.product(range(q), repeat=n))
        code = Code(q, n, tuple(rng.sample(pts, rng.randint(1, len(pts) - 1))))
        f = PotentialFunction.from_values([random_fraction(rng, 0, 4) for _ in range(n)], start=1)
        lhs, rhs = complement_energy_identity(code, f)
        rest = [w for w in pts if w not in set(code.words)]
        assert lhs == rhs == len(rest) * brute_energy(rest, f)
        assert energy(complement(code), f) == brute_energy(rest, f)


def test_pivot_identity():
    """Delsarte inequalities for A hold exactly when the strengthened ones hold for B at N-1."""
    rng = random.Random(62)
    seen = {True: 0, False: 0}
    for _ in range(1000):
        q, n = rng.choice([(2, 3), (2, 4), (2, 5), (3, 2), (3, 3)])
        N = q * rng.randint(1, q ** (n - 1))
        w = [Fraction(rng.randint(0, 6)) for _ in range(n)]
        if not any(w):
            w[-1] = Fraction(1)
        A = [Fraction(1)] + [(N - 1) * x / sum(w) for x in w]
        K = transform_matrix(n, q).K
        delsarte = all(sum(K[j][i] * A[i] for i in range(n + 1)) >= 0 for j in range(n + 1))
        r = Fraction(N - 2, N - 1)
        B = [Fraction(1)] + [r * x for x in A[1:]]
        as_ok = all(
            (N - 1) * sum(K[j][i] * B[i] for i in range(n + 1)) >= (q - 1) ** j * math.comb(n, j)
            for j in range(n + 1)
        )
        assert delsarte == as_ok
        seen[delsarte] += 1
        if delsarte and N > 2:
            assert ashikhmin_simonis_slacks(removal_distribution(Quasicode(q, n, tuple(A)))) == [
                (N - 2) * sum(K[j][i] * A[i] for i in range(n + 1)) for j in range(n + 1)
            ]
    assert min(seen.values()) > 100
