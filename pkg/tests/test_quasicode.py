import math
import random
from fractions import Fraction

import pytest

from conftest import random_cm_values, random_fraction
from uocodes.codes import construct, distance_distribution
from uocodes.exact import PotentialFunction, fundamental_potential, is_completely_monotonic
from uocodes.krawtchouk import transform_matrix
from uocodes.quasicode import (
    Quasicode,
    design_average_check,
    design_strength,
    dual,
    dual_support,
    is_feasible,
    qc_energy,
    singleton,
    support,
    whole_space,
)


def random_quasicode(rng, q, n):
    """Random convex combination of code distributions; always feasible."""
    import itertools

    pts = list(itertools.product(range(q), repeat=n))
    from uocodes.codes import Code

    dists = [distance_distribution(Code(q, n, tuple(rng.sample(pts, rng.randint(1, len(pts))))))
             for _ in range(2)]
    t = Fraction(rng.randint(0, 10), 10)
    return Quasicode(q, n, tuple(t * a + (1 - t) * b for a, b in zip(dists[0].A, dists[1].A)))


def test_feasibility_examples():
    assert is_feasible(2, 7, distance_distribution(construct("hamming", q=2, r=3)).A)[0]
    ok, why = is_feasible(2, 2, (1, -1, 2))
    assert not ok and any("A_1" in w for w in why)
    ok, why = is_feasible(2, 2, (1, 3, 0))
    # K_1 = (2, 0, -2) gives 2 >= 0; the violated row is K_2 = (1, -1, 1)
    assert why == ["(K a)_2 = -2 < 0"]
    with pytest.raises(ValueError):
        Quasicode(2, 2, (1, 3, 0))


def test_dual_examples():
    a = Quasicode(2, 2, (1, Fraction(4, 3), Fraction(2, 3)))
    d = dual(a)
    assert d.A == (1, Fraction(2, 9), Fraction(1, 9)) and d.size == Fraction(4, 3)
    h = distance_distribution(construct("hamming", q=2, r=3))
    assert dual(h).A == (1, 0, 0, 0, 7, 0, 0, 0)
    assert dual(whole_space(3, 4)) == singleton(3, 4)


def test_supports_and_strength():
    h = distance_distribution(construct("hamming", q=2, r=3))
    assert support(h) == {3, 4, 7} and dual_support(h) == {4}
    assert design_strength(h) == 3
    w = whole_space(2, 5)
    assert support(w) == set(range(1, 6)) and dual_support(w) == set()
    assert design_strength(w) == 5
    assert support(singleton(2, 5)) == set()


def test_design_average_check():
    h = distance_distribution(construct("hamming", q=2, r=3))
    one = PotentialFunction(0, (1,) * 8)
    assert design_average_check(h, one, 0)
    assert design_average_check(h, PotentialFunction.from_values(range(8)), 1)
    # A^perp_1 != 0: a two-word code at distance 1 is not a 1-design
    a = Quasicode(2, 3, (1, 1, 0, 0))
    assert design_strength(a) == 0
    with pytest.raises(ValueError):
        design_average_check(a, PotentialFunction.from_values(range(4)), 1)
    # the identity itself fails for that quasicode
    lhs = sum(a.A[i] * i for i in range(4)) / a.size
    rhs = Fraction(sum(math.comb(3, i) * i for i in range(4)), 8)
    assert lhs != rhs


def test_qc_energy_examples():
    g = distance_distribution(construct("golay_binary24"))
    assert qc_energy(g, fundamental_potential(0, 24)) == 4096
    for j in range(25):
        moment = sum(g.A[i] * math.comb(24 - i, j) for i in range(25))
        assert qc_energy(g, fundamental_potential(j, 24)) == moment
    f = PotentialFunction.from_values([5, 3, 2, 1, 1, 1, 1, 1])
    h = distance_distribution(construct("hamming", q=2, r=3))
    assert qc_energy(h, f) == qc_energy(h, f.restrict(1, 7)) + 5


def test_duality_involution_and_sizes():
    rng = random.Random(21)
    for _ in range(1000):
        q, n = rng.choice([(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
        a = random_quasicode(rng, q, n)
        d = dual(a)
        assert dual(d) == a
        assert a.size * d.size == q**n


def test_cm_dual_closure():
    rng = random.Random(22)
    for _ in range(1000):
        n, q = rng.randint(1, 8), rng.randint(2, 5)
        f = PotentialFunction.from_values(random_cm_values(rng, n))
        g = PotentialFunction.from_values(transform_matrix(n, q).apply_transpose(list(f.values)))
        assert is_completely_monotonic(g)


def test_duality_energy_identity():
    rng = random.Random(23)
    for _ in range(300):
        q, n = rng.choice([(2, 3), (3, 2), (2, 4)])
        a = random_quasicode(rng, q, n)
        f = [random_fraction(rng, -3, 3) for _ in range(n + 1)]
        Ktf = transform_matrix(n, q).apply_transpose(f)
        lhs = a.size * sum(fi * di for fi, di in zip(f, dual(a).A))
        rhs = sum(k * ai for k, ai in zip(Ktf, a.A))
        assert lhs == rhs
