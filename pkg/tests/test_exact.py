import math
import random
from fractions import Fraction

import pytest

from conftest import random_cm_values, random_fraction
from uocodes.exact import (
    PotentialFunction,
    as_fraction,
    binomial,
    cm_decompose,
    cm_reconstruct,
    extend_to_zero,
    finite_difference,
    fundamental_potential,
    is_absolutely_monotonic,
    is_completely_monotonic,
    make_potential,
    minimal_zero_extension,
    parse_potential,
    reflect,
)


def pf(values, start=0):
    return PotentialFunction.from_values(values, start)


def test_binomial_small_cases():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(7, 0) == 1
    assert binomial(4, -1) == 0


def test_binomial_negative_top_matches_polynomial():
    for m in range(-6, 0):
        for k in range(6):
            prod = Fraction(1)
            for i in range(k):
                prod *= m - i
            assert binomial(m, k) == prod / math.factorial(k)


def test_as_fraction_refuses_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("3/6") == Fraction(1, 2)


def test_finite_difference_examples():
    assert finite_difference(pf([1, 1, 1])).values == (0, 0)
    assert finite_difference(pf([3, 1, 0, 0])).values == (-2, -1, 0)
    assert finite_difference(pf([8, 4, 2, 1])).values == (-4, -2, -1)
    with pytest.raises(ValueError):
        finite_difference(pf([1]))


def test_complete_monotonicity_examples():
    assert is_completely_monotonic(pf([Fraction(1, r) for r in range(1, 8)], start=1))
    assert is_completely_monotonic(fundamental_potential(2, 6))
    assert not is_completely_monotonic(pf([0, 1, 0]))


def test_absolute_monotonicity_examples():
    n = 6
    for j in range(n + 1):
        assert is_absolutely_monotonic(pf([math.comb(x, j) for x in range(n + 1)]))
    assert is_absolutely_monotonic(pf([1, 1, 1]))
    assert not is_absolutely_monotonic(pf([1, 0]))


def test_cm_decompose_examples():
    assert cm_decompose(fundamental_potential(3, 6)) == [0, 0, 0, 1, 0, 0, 0]
    assert cm_decompose(pf([1] * 5)) == [1, 0, 0, 0, 0]
    geo = extend_to_zero(make_potential("geometric", Fraction(1, 2), 3))
    assert all(d >= 0 for d in cm_decompose(geo))


def test_make_potential_examples():
    assert make_potential("fundamental", 1, 7).values == (7, 6, 5, 4, 3, 2, 1, 0)
    g = make_potential("geometric", Fraction(1, 2), 3)
    assert (g.start, g.values) == (1, (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)))
    p = make_potential("inverse_power", 2, 4)
    assert (p.start, p.values) == (1, (1, Fraction(1, 4), Fraction(1, 9), Fraction(1, 16)))
    for bad in [("geometric", 0), ("geometric", Fraction(3, 2)), ("inverse_power", 0), ("fundamental", 9)]:
        with pytest.raises(ValueError):
            make_potential(bad[0], bad[1], 4)


def test_parse_potential():
    assert parse_potential("fundamental:2", 4) == fundamental_potential(2, 4)
    assert parse_potential("power:1", 3).values == (1, Fraction(1, 2), Fraction(1, 3))
    assert parse_potential("geometric:1/3", 2).values == (Fraction(1, 3), Fraction(1, 9))
    with pytest.raises(ValueError):
        parse_potential("bogus:1", 3)


def test_minimal_zero_extension_is_minimal():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 7)
        full = random_cm_values(rng, n + 1)  # values at 0..n+1, cm
        f = pf(full[1:], start=1)
        v = minimal_zero_extension(f)
        ext = pf([v] + list(f.values))
        assert is_completely_monotonic(ext)
        assert v <= full[0]
        if v > 0:
            assert not is_completely_monotonic(pf([v - Fraction(1, 10**6)] + list(f.values)))


def test_reconstruction_round_trip():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(0, 8)
        f = pf([random_fraction(rng, -5, 5) for _ in range(n + 1)])
        assert cm_reconstruct(cm_decompose(f), n) == f


def test_cm_iff_nonnegative_coefficients():
    rng = random.Random(12)
    seen_cm = 0
    for _ in range(1000):
        n = rng.randint(1, 7)
        if rng.random() < 0.5:
            f = pf(random_cm_values(rng, n))
        else:
            f = pf([random_fraction(rng, 0, 5) for _ in range(n + 1)])
        cm = is_completely_monotonic(f)
        seen_cm += cm
        assert cm == all(d >= 0 for d in cm_decompose(f))
    assert seen_cm > 300


def test_cm_iff_reflection_absolutely_monotonic():
    rng = random.Random(13)
    for _ in range(1000):
        n = rng.randint(1, 6)
        vals = random_cm_values(rng, n) if rng.random() < 0.5 else [random_fraction(rng) for _ in range(n + 1)]
        f = pf(vals, start=rng.randint(0, 2))
        assert is_completely_monotonic(f) == is_absolutely_monotonic(reflect(f))


def test_nonnegative_combinations_stay_cm():
    rng = random.Random(14)
    for _ in range(1000):
        n = rng.randint(1, 7)
        f, g = pf(random_cm_values(rng, n)), pf(random_cm_values(rng, n))
        a, b = random_fraction(rng), random_fraction(rng)
        assert is_completely_monotonic(f.scale(a) + g.scale(b))
