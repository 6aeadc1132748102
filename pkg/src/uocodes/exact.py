"""Exact rational arithmetic helpers and the cone of completely monotonic potentials.

Every quantity in this package is a :class:`fractions.Fraction` or a Python
``int``; nothing is ever rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding into a
    computation that must be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def binomial(m: int, k: int) -> int:
    """Binomial coefficient with the falling-factorial polynomial convention.

    ``binomial(m, k) = m (m-1) ... (m-k+1) / k!`` for ``k >= 0`` and any
    integer ``m`` (so negative ``m`` is allowed), and 0 for ``k < 0``.
    """
    if k < 0:
        return 0
    if m >= 0:
        return math.comb(m, k)
    num = 1
    for i in range(k):
        num *= m - i
    return num // math.factorial(k)


@dataclass(frozen=True)
class PotentialFunction:
    """A function tabulated on the contiguous range ``start, ..., start+len-1``."""

    start: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.start < 0:
            raise ValueError("domain must start at a nonnegative integer")
        if not self.values:
            raise ValueError("potential function needs at least one value")
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    @classmethod
    def from_values(cls, values: Iterable, start: int = 0) -> "PotentialFunction":
        return cls(start, tuple(as_fraction(v) for v in values))

    @property
    def stop(self) -> int:
        """Last point of the domain (inclusive)."""
        return self.start + len(self.values) - 1

    @property
    def domain(self) -> range:
        return range(self.start, self.stop + 1)

    def __call__(self, x: int) -> Fraction:
        if not self.start <= x <= self.stop:
            raise ValueError(f"{x} outside domain {self.start}..{self.stop}")
        return self.values[x - self.start]

    def __len__(self) -> int:
        return len(self.values)

    def restrict(self, start: int, stop: int) -> "PotentialFunction":
        return PotentialFunction(start, tuple(self(x) for x in range(start, stop + 1)))

    def __add__(self, other: "PotentialFunction") -> "PotentialFunction":
        _check_same_domain(self, other)
        return PotentialFunction(self.start, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "PotentialFunction":
        c = as_fraction(c)
        return PotentialFunction(self.start, tuple(c * v for v in self.values))

    def to_json(self) -> dict:
        return {"start": self.start, "values": [fraction_to_str(v) for v in self.values]}

    @classmethod
    def from_json(cls, data: dict) -> "PotentialFunction":
        return cls.from_values(data["values"], start=data.get("start", 0))


def _check_same_domain(f: PotentialFunction, g: PotentialFunction) -> None:
    if f.start != g.start or len(f) != len(g):
        raise ValueError("potential functions have different domains")


def finite_difference(f: PotentialFunction) -> PotentialFunction:
    """Forward difference ``f(x+1) - f(x)`` on ``start .. stop-1``."""
    if len(f) < 2:
        raise ValueError("finite difference needs at least two values")
    v = f.values
    return PotentialFunction(f.start, tuple(v[i + 1] - v[i] for i in range(len(v) - 1)))


def difference_table(values: Sequence[Fraction]) -> list[list[Fraction]]:
    """Rows ``Δ^0 f, Δ^1 f, ...`` down to a single entry."""
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return rows


def is_completely_monotonic(f: PotentialFunction) -> bool:
    """True iff ``(-1)^k Δ^k f(i) >= 0`` wherever defined."""
    for k, row in enumerate(difference_table(f.values)):
        sign = -1 if k % 2 else 1
        if any(sign * v < 0 for v in row):
            return False
    return True


def is_absolutely_monotonic(f: PotentialFunction) -> bool:
    """True iff every iterated difference ``Δ^k f(i)`` is nonnegative."""
    return all(v >= 0 for row in difference_table(f.values) for v in row)


def reflect(f: PotentialFunction) -> PotentialFunction:
    """The function ``x -> f(start + stop - x)`` on the same domain."""
    return PotentialFunction(f.start, tuple(reversed(f.values)))


def cm_decompose(f: PotentialFunction) -> list[Fraction]:
    """Coefficients ``d_j`` with ``f(x) = sum_j d_j * C(n - x, j)`` on ``0..n``.

    Uses the discrete Taylor expansion of ``g(x) = f(n - x)`` at 0, so
    ``d_j = Δ^j g(0)``.
    """
    if f.start != 0:
        raise ValueError("cm_decompose expects a function on {0..n}")
    return [row[0] for row in difference_table(reflect(f).values)]


def fundamental_values(j: int, n: int) -> tuple[int, ...]:
    if not 0 <= j <= n:
        raise ValueError(f"fundamental index {j} outside 0..{n}")
    return tuple(binomial(n - x, j) for x in range(n + 1))


def fundamental_potential(j: int, n: int) -> PotentialFunction:
    """``f_j(x) = C(n - x, j)`` tabulated on ``0..n``."""
    return PotentialFunction(0, tuple(Fraction(v) for v in fundamental_values(j, n)))


def cm_reconstruct(coeffs: Sequence[Fraction], n: int) -> PotentialFunction:
    """Inverse of :func:`cm_decompose`."""
    vals = [Fraction(0)] * (n + 1)
    for j, d in enumerate(coeffs):
        if d:
            for x, b in enumerate(fundamental_values(j, n)):
                vals[x] += d * b
    return PotentialFunction(0, tuple(vals))


def minimal_zero_extension(f: PotentialFunction) -> Fraction:
    """Smallest ``f(0)`` such that prepending it keeps complete monotonicity.

    Only the conditions at position 0 involve the new value; in terms of
    ``v = f(0)`` the k-th one reads ``v >= sum_{i=1}^k (-1)^(i+1) C(k,i) f(i)``.
    """
    if f.start != 1:
        raise ValueError("expected a function on {1..n}")
    best = Fraction(0)
    for k in range(1, len(f) + 1):
        bound = sum(
            ((-1) ** (i + 1)) * math.comb(k, i) * f(i) for i in range(1, k + 1)
        )
        best = max(best, bound)
    return best


def extend_to_zero(f: PotentialFunction) -> PotentialFunction:
    """Extend a potential on ``{1..n}`` to ``{0..n}`` with minimal ``f(0)``."""
    if f.start == 0:
        return f
    return PotentialFunction(0, (minimal_zero_extension(f),) + f.values)


def make_potential(kind: str, param, n: int, *, with_zero: bool = False) -> PotentialFunction:
    """Build one of the standard potentials.

    ``kind`` is ``"inverse_power"`` (``param`` a positive integer exponent),
    ``"geometric"`` (``param`` a rational in (0, 1]) or ``"fundamental"``
    (``param`` an index 0..n).  The first two live on ``{1..n}`` unless
    ``with_zero`` is set, in which case ``f(0)`` is the minimal completely
    monotonic extension.  Fundamental potentials always live on ``{0..n}``.
    """
    if n < 1:
        raise ValueError("block length must be at least 1")
    if kind == "fundamental":
        return fundamental_potential(int(param), n)
    if kind == "inverse_power":
        if isinstance(param, Fraction):
            if param.denominator != 1:
                raise ValueError("inverse power exponent must be an integer")
            param = param.numerator
        alpha = int(param)
        if alpha != param or alpha <= 0:
            raise ValueError("inverse power exponent must be a positive integer")
        f = PotentialFunction(1, tuple(Fraction(1, r**alpha) for r in range(1, n + 1)))
    elif kind == "geometric":
        gamma = as_fraction(param)
        if not 0 < gamma <= 1:
            raise ValueError("geometric parameter must lie in (0, 1]")
        f = PotentialFunction(1, tuple(gamma**r for r in range(1, n + 1)))
    else:
        raise ValueError(f"unknown potential kind {kind!r}")
    return extend_to_zero(f) if with_zero else f


def parse_potential(spec: str, n: int, *, with_zero: bool = False) -> PotentialFunction:
    """Parse CLI potentials: ``fundamental:j``, ``power:alpha``, ``geometric:p/q``."""
    kind, _, arg = spec.partition(":")
    aliases = {"power": "inverse_power", "fundamental": "fundamental", "geometric": "geometric",
               "inverse_power": "inverse_power"}
    if kind not in aliases or not arg:
        raise ValueError(f"bad potential spec {spec!r}")
    kind = aliases[kind]
    param = int(arg) if kind in ("fundamental", "inverse_power") else Fraction(arg)
    return make_potential(kind, param, n, with_zero=with_zero)


def on_positive_distances(f: PotentialFunction, n: int) -> tuple[Fraction, ...]:
    """Values ``f(1), ..., f(n)``; ``f`` may or may not include 0."""
    if f.start > 1 or f.stop < n:
        raise ValueError(f"potential must cover 1..{n}")
    return tuple(f(i) for i in range(1, n + 1))
