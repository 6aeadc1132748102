"""Registry of LP universally optimal codes and quasicodes.

Rows and their concrete instances live in ``data/registry.json``.  An instance
either names a construction (base code plus puncture/shorten/extend steps)
or carries only ``(q, n, N, support, dual support)``; in the second case the
quasicode is recovered by a feasibility program restricted to those sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .codes.construct import MAX_WORDS, UnsupportedParameters, construct
from .codes.core import Code, distance_distribution, extend, puncture, shorten
from .krawtchouk import transform_matrix
from .lp.simplex import Constraint, LinearProgram, solve_lp
from .quasicode import Quasicode, dual_support, support


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    name: str
    family: str
    route: tuple[str, ...]
    q: int
    n: int
    N: int
    support: frozenset[int]
    dual_support: frozenset[int]
    params: tuple[tuple[str, object], ...] = ()
    construction: dict | None = None
    formula: tuple[tuple[str, str], ...] = ()
    fallback_route: tuple[str, ...] | None = None

    @property
    def label(self) -> str:
        if not self.params:
            return self.key
        return self.key + "[" + ",".join(f"{k}={v}" for k, v in self.params) + "]"

    @property
    def level(self) -> str:
        return "code" if self.construction is not None else "quasicode"

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "label": self.label,
            "name": self.name,
            "family": self.family,
            "route": list(self.route),
            "q": self.q,
            "n": self.n,
            "N": self.N,
            "support": sorted(self.support),
            "dual_support": sorted(self.dual_support),
            "level": self.level,
        }


@lru_cache(maxsize=None)
def _raw() -> dict:
    text = resources.files("uocodes").joinpath("data/registry.json").read_text()
    return json.loads(text)


def entries_from(data: dict) -> tuple[CatalogEntry, ...]:
    """Parse a registry document (same layout as the shipped table)."""
    out = []
    for row in data["rows"]:
        for inst in row["instances"]:
            out.append(
                CatalogEntry(
                    key=row["key"],
                    name=row["name"],
                    family=row["family"],
                    route=tuple(row["route"]),
                    q=inst["q"],
                    n=inst["n"],
                    N=inst["N"],
                    support=frozenset(inst["support"]),
                    dual_support=frozenset(inst["dual_support"]),
                    params=tuple(sorted(inst["params"].items())),
                    construction=inst["construction"],
                    formula=tuple(row.get("formula", {}).items()),
                    fallback_route=tuple(row["fallback_route"]) if row.get("fallback_route") else None,
                )
            )
    return tuple(out)


@lru_cache(maxsize=None)
def all_entries() -> tuple[CatalogEntry, ...]:
    return entries_from(_raw())


def row_keys() -> list[str]:
    return [row["key"] for row in _raw()["rows"]]


def families() -> list[str]:
    return sorted({row["family"] for row in _raw()["rows"]})


def entries(family: str | None = None, key: str | None = None) -> list[CatalogEntry]:
    return [
        e for e in all_entries()
        if (family is None or e.family == family) and (key is None or e.key == key)
    ]


def lookup(key: str, **params) -> CatalogEntry:
    """The instance of row ``key`` whose parameters include ``params``.

    Without parameters the first instance of the row is returned.
    """
    cands = entries(key=key)
    if not cands:
        raise KeyError(f"no catalog row named {key!r}")
    for e in cands:
        have = dict(e.params)
        if all(k in have and str(have[k]) == str(v) for k, v in params.items()):
            return e
    raise KeyError(f"row {key!r} has no instance with {params}")


def _even_subcode(code: Code) -> Code:
    return Code(code.q, code.n, tuple(w for w in code.words if sum(w) % 2 == 0))


def build_code(spec: dict) -> Code:
    code = construct(spec["base"], **spec.get("params", {}))
    for op in spec.get("ops", []):
        kind = op[0]
        if kind == "shorten":
            code = shorten(code, op[1], op[2] if len(op) > 2 else 0)
        elif kind == "puncture":
            code = puncture(code, op[1])
        elif kind == "extend":
            code = extend(code)
        elif kind == "even_subcode":
            code = _even_subcode(code)
        else:
            raise ValueError(f"unknown code operation {kind!r}")
    return code


def entry_code(entry: CatalogEntry) -> Code | None:
    """The explicit code of an instance, or None for quasicode-level rows."""
    if entry.construction is None:
        return None
    if entry.N > MAX_WORDS:
        raise UnsupportedParameters(f"{entry.label} has {entry.N} words")
    return build_code(entry.construction)


def restricted_quasicode(q: int, n: int, N, sup, dsup) -> Quasicode | None:
    """A quasicode of size ``N`` with support in ``sup`` and dual support in ``dsup``."""
    sup = sorted(sup)
    K = transform_matrix(n, q).K
    cons = [Constraint((1,) * len(sup), "=", Fraction(N) - 1)]
    for j in range(1, n + 1):
        sense = ">=" if j in dsup else "="
        cons.append(Constraint(tuple(K[j][i] for i in sup), sense, -K[j][0]))
    res = solve_lp(LinearProgram((0,) * len(sup), tuple(cons)))
    if not res.optimal:
        return None
    A = [Fraction(0)] * (n + 1)
    A[0] = Fraction(1)
    for i, v in zip(sup, res.x):
        A[i] = v
    return Quasicode(q, n, tuple(A))


def entry_quasicode(entry: CatalogEntry) -> Quasicode:
    """Distance distribution of the construction, or the supports' quasicode."""
    code = entry_code(entry)
    if code is not None:
        if (code.q, code.n, len(code)) != (entry.q, entry.n, entry.N):
            raise ValueError(f"{entry.label}: construction has parameters {(code.q, code.n, len(code))}")
        a = distance_distribution(code)
    else:
        a = restricted_quasicode(entry.q, entry.n, entry.N, entry.support, entry.dual_support)
        if a is None:
            raise ValueError(f"{entry.label}: no quasicode has the listed supports")
    if not support(a) <= entry.support or not dual_support(a) <= entry.dual_support:
        raise ValueError(
            f"{entry.label}: support {sorted(support(a))} / dual {sorted(dual_support(a))} "
            "outside the listed sets"
        )
    return a
