"""Command line front end.  Every command prints one JSON document.

Exit status: 0 success/certified, 1 ran but not certified, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .exact import fraction_to_str, fundamental_potential, parse_potential

EXIT_OK, EXIT_NOT_CERTIFIED, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _parse_extra(tokens: list[str]) -> dict[str, str]:
    """``--key value`` pairs left over by argparse become catalog parameters."""
    params: dict[str, str] = {}
    it = iter(tokens)
    for tok in it:
        if not tok.startswith("--"):
            raise InputError(f"unexpected argument {tok!r}")
        key, eq, val = tok[2:].partition("=")
        if not eq:
            val = next(it, None)
            if val is None:
                raise InputError(f"missing value for {tok}")
        params[key] = val
    return params


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_object(path: str):
    """A Code (``words``) or a Quasicode (``A``) from a JSON file."""
    from .codes.core import Code
    from .quasicode import Quasicode

    data = _load_json(path)
    try:
        if "words" in data:
            return Code.from_json(data)
        if "A" in data:
            return Quasicode.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    raise InputError(f"{path}: expected a 'words' or 'A' field")


def _distribution(obj):
    from .codes.core import Code, distance_distribution

    return distance_distribution(obj) if isinstance(obj, Code) else obj


def _catalog_entry(name: str, params: dict):
    from .catalog import lookup

    try:
        return lookup(name, **params)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc


def _lp_report(a) -> tuple[dict, bool]:
    from .lp.delsarte import is_lp_universally_optimal

    res = is_lp_universally_optimal(a)
    out = {
        "lp_universally_optimal": res.optimal,
        "certificates": [c.to_json() for c in res.certificates] if res.optimal else None,
    }
    if not res.optimal:
        out["first_failure"] = {
            "potential": f"fundamental:{res.first_failure}",
            "lp_minimum": fraction_to_str(res.lp_value),
            "energy": fraction_to_str(res.energy),
        }
    return out, res.optimal


def cmd_certify(args, extra) -> tuple[dict, int]:
    from .certificates import certify_table_row
    from .catalog import entry_quasicode

    if args.verify_only:
        return _verify_only(args.file)
    if args.catalog:
        entry = _catalog_entry(args.catalog, extra)
        a = entry_quasicode(entry)
        rep = certify_table_row(entry)
        lp, lp_ok = _lp_report(a)
        out = {
            "input": {"catalog": entry.label, "q": entry.q, "n": entry.n, "N": entry.N, "level": entry.level},
            "quasicode": a.to_json(),
            "route": list(entry.route),
            "criterion": rep.to_json(),
            "lp_universally_optimal": lp_ok,
            "certificates": rep.to_json()["certificates"] or lp["certificates"],
        }
        ok = lp_ok and rep.certified and not rep.criterion.startswith("fallback:")
        out["certified"] = ok
        return out, EXIT_OK if ok else EXIT_NOT_CERTIFIED
    if extra:
        raise InputError(f"unexpected arguments {extra}")
    if not args.file:
        raise InputError("certify needs --catalog NAME or --file PATH")
    a = _distribution(_load_object(args.file))
    lp, ok = _lp_report(a)
    out = {"input": {"file": args.file}, "quasicode": a.to_json(), **lp, "certified": ok}
    return out, EXIT_OK if ok else EXIT_NOT_CERTIFIED


def _verify_only(path: str | None) -> tuple[dict, int]:
    """Re-check the certificates embedded in a certify report; no programs are solved."""
    from .lp.delsarte import DualCertificate, verify_certificate
    from .quasicode import Quasicode

    if not path:
        raise InputError("--verify-only needs --file REPORT")
    data = _load_json(path)
    try:
        a = Quasicode.from_json(data["quasicode"])
        certs = [DualCertificate.from_json(c) for c in data["certificates"] or []]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not a certify report ({exc})") from exc
    results = []
    for j, cert in enumerate(certs, start=1):
        try:
            ok = verify_certificate(a, fundamental_potential(j, a.n), cert)
        except ValueError:
            ok = False
        results.append({"potential": f"fundamental:{j}", "verified": ok})
    ok = len(certs) == a.n and all(r["verified"] for r in results)
    return {"input": {"file": path}, "verifications": results, "certified": ok}, (
        EXIT_OK if ok else EXIT_NOT_CERTIFIED
    )


def cmd_table(args, extra) -> tuple[dict, int]:
    from .catalog import all_entries, entries_from
    from .certificates import certify_table_row

    if extra:
        raise InputError(f"unexpected arguments {extra}")
    pool = entries_from(_load_json(args.registry)) if args.registry else all_entries()
    if args.family:
        pool = [e for e in pool if e.family == args.family]
        if not pool:
            raise InputError(f"no rows in family {args.family!r}")
    instances, rows = [], {}
    for e in pool:
        try:
            rep = certify_table_row(e)
            crit, ok, why = rep.criterion, rep.certified and not rep.criterion.startswith("fallback:"), list(
                rep.hypothesis_failures) + list(rep.notes)
        except (ValueError, AssertionError) as exc:
            crit, ok, why = None, False, [str(exc)]
        instances.append({
            "row": e.key, "instance": e.label, "name": e.name, "q": e.q, "n": e.n, "N": e.N,
            "support": sorted(e.support), "dual_support": sorted(e.dual_support),
            "route": list(e.route), "level": e.level, "criterion": crit, "certified": ok, "notes": why,
        })
        rows[e.key] = rows.get(e.key, True) and ok
    out = {
        "rows": len(rows),
        "instances": instances,
        "failed_rows": sorted(k for k, ok in rows.items() if not ok),
    }
    return out, EXIT_OK if not out["failed_rows"] else EXIT_NOT_CERTIFIED


def cmd_search(args, extra) -> tuple[dict, int]:
    from .search import search

    if extra:
        raise InputError(f"unexpected arguments {extra}")
    try:
        res = search(args.q, args.n, args.N)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return res.to_json(), EXIT_OK


def _potential(spec: str, n: int):
    try:
        return parse_potential(spec, n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_energy(args, extra) -> tuple[dict, int]:
    from .codes.core import Code, energy
    from .quasicode import qc_energy

    obj = _load_object(args.file)
    f = _potential(args.potential, obj.n)
    value = energy(obj, f) if isinstance(obj, Code) else qc_energy(obj, f.restrict(1, obj.n))
    return {"input": {"file": args.file, "potential": args.potential}, "energy": fraction_to_str(value)}, EXIT_OK


def cmd_dual(args, extra) -> tuple[dict, int]:
    from .quasicode import dual

    a = _distribution(_load_object(args.file))
    return {"input": {"file": args.file}, "distribution": a.to_json(), "dual": dual(a).to_json()}, EXIT_OK


def cmd_lp(args, extra) -> tuple[dict, int]:
    from .lp.delsarte import as_min_energy, delsarte_min_energy

    try:
        N = Fraction(args.N)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    f = _potential(args.potential, args.n)
    out = {"input": {"q": args.q, "n": args.n, "N": args.N, "potential": args.potential,
                     "strengthened": args.strengthened}}
    try:
        if args.strengthened:
            value, a = as_min_energy(args.q, args.n, N, f)
            cert = None
        else:
            value, a, cert = delsarte_min_energy(args.q, args.n, N, f)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out["minimum"] = fraction_to_str(value)
    out["optimizer"] = a.to_json()
    out["certificate"] = None if cert is None else cert.to_json()
    return out, EXIT_OK


def cmd_remove_check(args, extra) -> tuple[dict, int]:
    from .catalog import entry_code
    from .removal import verify_removal_theorem

    entry = _catalog_entry(args.name, extra)
    code = entry_code(entry)
    if code is None:
        raise InputError(f"{entry.label} is a quasicode-level row; removal needs explicit codewords")
    try:
        rep = verify_removal_theorem(code, entry.label)
    except ValueError as exc:
        return {"input": {"catalog": entry.label}, "error": str(exc), "verdict": False}, EXIT_NOT_CERTIFIED
    return rep.to_json(), EXIT_OK if rep.verdict else EXIT_NOT_CERTIFIED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uocodes", description="Certify universally optimal codes in Hamming space.")
    p.add_argument("--timings", action="store_true", help="add wall-clock time to the report")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="LP universal optimality of a catalog entry or a file")
    c.add_argument("--catalog", help="catalog row key; row parameters follow as --name value")
    c.add_argument("--file", help="code ({q,n,words}), quasicode ({q,n,A}) or, with --verify-only, a report")
    c.add_argument("--verify-only", action="store_true", help="re-verify the certificates of a saved report")
    c.set_defaults(func=cmd_certify)

    t = sub.add_parser("table", help="certify every catalog row")
    t.add_argument("--family")
    t.add_argument("--registry", help="alternative registry JSON")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("search", help="exhaustive universal optima at small sizes")
    for name in ("q", "n", "N"):
        s.add_argument(name, type=int)
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("energy", help="energy of a code or quasicode")
    e.add_argument("file")
    e.add_argument("potential", help="fundamental:j, power:alpha or geometric:p/q")
    e.set_defaults(func=cmd_energy)

    d = sub.add_parser("dual", help="MacWilliams transform of a distribution")
    d.add_argument("file")
    d.set_defaults(func=cmd_dual)

    lp = sub.add_parser("lp", help="minimum of the energy program")
    lp.add_argument("q", type=int)
    lp.add_argument("n", type=int)
    lp.add_argument("N")
    lp.add_argument("potential")
    lp.add_argument("--strengthened", action="store_true", help="add the constraints for q not dividing N")
    lp.set_defaults(func=cmd_lp)

    r = sub.add_parser("remove-check", help="single-codeword deletion checks for a catalog code")
    r.add_argument("name")
    r.set_defaults(func=cmd_remove_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        out, code = args.func(args, _parse_extra(extra))
    except (InputError, ValueError) as exc:
        out, code = {"command": args.command, "error": str(exc)}, EXIT_ERROR
    out = {"command": args.command, **out}
    if args.timings:
        out["timings"] = {"seconds": round(time.perf_counter() - start, 3)}
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
