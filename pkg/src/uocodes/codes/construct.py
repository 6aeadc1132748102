"""Standard code constructions over prime fields.

Only integers mod a prime are used; catalog rows that need prime-power
fields are handled at the quasicode level elsewhere.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

import numpy as np

from .core import Code, _is_prime, extend

# Largest code we are willing to enumerate explicitly.
MAX_WORDS = 1 << 12


class UnsupportedParameters(ValueError):
    pass


def _require_prime(q: int) -> None:
    if not _is_prime(q):
        raise UnsupportedParameters(f"q={q} is not prime")


def row_reduce_mod_p(M: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p) and the pivot columns."""
    R = [[x % p for x in row] for row in M]
    pivots = []
    r = 0
    cols = len(R[0]) if R else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = pow(R[r][c], -1, p)
        R[r] = [(x * inv) % p for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [(a - f * b) % p for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def nullspace_mod_p(H: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of ``{x : H x = 0}`` over GF(p)."""
    n = len(H[0])
    R, pivots = row_reduce_mod_p(H, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def linear_code(G: Sequence[Sequence[int]], p: int) -> Code:
    """All ``p^k`` combinations of the rows of a full-rank generator matrix."""
    G = np.array(G, dtype=np.int64) % p
    k, n = G.shape
    if p**k > MAX_WORDS:
        raise UnsupportedParameters(f"{p}^{k} codewords exceeds the enumeration cap {MAX_WORDS}")
    msgs = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64).reshape(-1, k)
    words = (msgs @ G) % p
    code = Code.from_array(p, words)
    if len(code) != p**k:
        raise ValueError("generator matrix is not of full rank")
    return code


def _projective_points(q: int, r: int) -> list[tuple[int, ...]]:
    """One representative (first nonzero entry 1) of each point of PG(r-1, q)."""
    pts = []
    for v in itertools.product(range(q), repeat=r):
        nz = next((x for x in v if x), 0)
        if nz == 1:
            pts.append(v)
    return pts


def hamming(q: int, r: int) -> Code:
    """q-ary Hamming code of redundancy ``r``: length ``(q^r-1)/(q-1)``."""
    _require_prime(q)
    if r < 2:
        raise UnsupportedParameters("Hamming codes need r >= 2")
    H = [list(col) for col in zip(*_projective_points(q, r))]
    return linear_code(nullspace_mod_p(H, q), q)


def simplex(q: int, r: int) -> Code:
    """q-ary simplex code: the dual of the Hamming code, constant weight ``q^(r-1)``."""
    _require_prime(q)
    if r < 2:
        raise UnsupportedParameters("simplex codes need r >= 2")
    G = [list(col) for col in zip(*_projective_points(q, r))]
    return linear_code(G, q)


def reed_solomon(q: int, n: int, d: int) -> Code:
    """Evaluation code of polynomials of degree ``< n-d+1`` at ``0..n-1``."""
    _require_prime(q)
    if not 1 <= d <= n <= q:
        raise UnsupportedParameters("need 1 <= d <= n <= q")
    k = n - d + 1
    G = [[pow(x, i, q) for x in range(n)] for i in range(k)]
    return linear_code(G, q)


def cyclic_code(g: Sequence[int], n: int, p: int) -> Code:
    """Cyclic code with generator polynomial ``g`` (lowest degree first)."""
    k = n - (len(g) - 1)
    G = [[0] * i + list(g) + [0] * (n - len(g) - i) for i in range(k)]
    return linear_code(G, p)


def golay_binary23() -> Code:
    return cyclic_code([1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1], 23, 2)


def golay_binary24() -> Code:
    return extend(golay_binary23())


def golay_ternary11() -> Code:
    # x^5 + x^4 - x^3 + x^2 - 1
    return cyclic_code([2, 0, 1, 2, 1, 1], 11, 3)


def golay_ternary12() -> Code:
    return extend(golay_ternary11())


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _jacobsthal(p: int) -> np.ndarray:
    return np.array([[_legendre(j - i, p) for j in range(p)] for i in range(p)], dtype=np.int64)


def hadamard_matrix(order: int) -> np.ndarray:
    """Sylvester matrices for powers of 2, Paley type I for ``order - 1`` a prime ``≡ 3 mod 4``."""
    if order >= 1 and order & (order - 1) == 0:
        H = np.array([[1]], dtype=np.int64)
        while len(H) < order:
            H = np.block([[H, H], [H, -H]])
    elif order % 4 == 0 and _is_prime(order - 1) and (order - 1) % 4 == 3:
        p = order - 1
        S = np.zeros((order, order), dtype=np.int64)
        S[0, 1:] = 1
        S[1:, 0] = -1
        S[1:, 1:] = _jacobsthal(p)
        H = np.eye(order, dtype=np.int64) + S
    else:
        raise UnsupportedParameters(f"no Hadamard matrix of order {order} implemented")
    if not (H @ H.T == order * np.eye(order, dtype=np.int64)).all():
        raise AssertionError("construction is not a Hadamard matrix")
    return H


def _normalize_first_column(H: np.ndarray) -> np.ndarray:
    return H * H[:, :1]


def hadamard(order: int) -> Code:
    """Rows of ``H`` and ``-H`` mapped ``+1 -> 0``, ``-1 -> 1``: ``2n`` words of length ``n``."""
    H = hadamard_matrix(order)
    words = np.vstack([H, -H])
    return Code.from_array(2, (1 - words) // 2)


def punctured_hadamard(order: int) -> Code:
    """Hadamard code of a first-column-normalized matrix, with that column deleted."""
    H = _normalize_first_column(hadamard_matrix(order))
    words = np.vstack([H, -H])[:, 1:]
    return Code.from_array(2, (1 - words) // 2)


def conference(order: int) -> Code:
    """Conference code of length ``p = order - 1 ≡ 1 mod 4`` from the Paley matrix.

    Words: 0, 1 and the rows of ``(J + I ± Q)/2`` where ``Q`` is the Jacobsthal
    matrix.  The minimum distance is ``(p-1)/2``, but a row and its partner
    are at distance ``p-1``, so the support is wider than ``{(p±1)/2, p}``.
    """
    p = order - 1
    if not (_is_prime(p) and p % 4 == 1):
        raise UnsupportedParameters(f"no Paley conference matrix of order {order}")
    Q = _jacobsthal(p)
    J = np.ones((p, p), dtype=np.int64)
    Id = np.eye(p, dtype=np.int64)
    rows = [np.zeros((1, p), dtype=np.int64), np.ones((1, p), dtype=np.int64), (J + Id + Q) // 2, (J + Id - Q) // 2]
    return Code.from_array(2, np.vstack(rows))


# Octacode: a self-dual Z4-linear code of length 8, lifted from the [8,4] Hamming code.
_OCTACODE = [
    [1, 0, 0, 0, 3, 1, 2, 1],
    [0, 1, 0, 0, 1, 2, 3, 1],
    [0, 0, 1, 0, 3, 3, 3, 2],
    [0, 0, 0, 1, 2, 3, 1, 1],
]
_GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


def nordstrom_robinson16() -> Code:
    G = np.array(_OCTACODE, dtype=np.int64)
    msgs = np.array(list(itertools.product(range(4), repeat=4)), dtype=np.int64)
    z4 = (msgs @ G) % 4
    words = [tuple(b for s in row for b in _GRAY[int(s)]) for row in z4]
    return Code(2, 16, tuple(words))


CONSTRUCTORS: dict[str, Callable[..., Code]] = {
    "hamming": hamming,
    "simplex": simplex,
    "reed_solomon": reed_solomon,
    "golay_binary23": golay_binary23,
    "golay_binary24": golay_binary24,
    "golay_ternary11": golay_ternary11,
    "golay_ternary12": golay_ternary12,
    "hadamard": hadamard,
    "punctured_hadamard": punctured_hadamard,
    "conference": conference,
    "nordstrom_robinson16": nordstrom_robinson16,
}


def construct(name: str, **params) -> Code:
    try:
        fn = CONSTRUCTORS[name]
    except KeyError:
        raise UnsupportedParameters(f"unknown construction {name!r}") from None
    return fn(**params)
