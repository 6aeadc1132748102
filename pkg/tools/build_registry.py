"""Regenerate src/uocodes/data/registry.json from the row formulas below.

Each row lists concrete instances; sets are written out explicitly so the
shipped registry needs no formula evaluation.
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "uocodes" / "data" / "registry.json"


def rng(a, b, step=1):
    return list(range(a, b + 1, step))


def inst(params, q, n, N, sup, dsup, construction=None):
    return {
        "params": params, "q": q, "n": n, "N": N,
        "support": sorted(set(sup)), "dual_support": sorted(set(dsup)),
        "construction": construction,
    }


def build(base, params=None, ops=()):
    return {"base": base, "params": params or {}, "ops": [list(o) for o in ops]}


S = ["shorten", 0]
P = ["puncture", 0]
rows = []


def row(key, name, family, route, fq, fn, fN, fsup, fdsup, instances, fallback=None):
    rows.append({
        "key": key, "name": name, "family": family, "route": route, "fallback_route": fallback,
        "formula": {"q": fq, "n": fn, "N": fN, "support": fsup, "dual_support": fdsup},
        "instances": instances,
    })


def bin_ham(r, sh=0, pu=0, ext=False, even=False):
    ops = [S] * sh + [P] * pu + ([["extend"]] if ext else []) + ([["even_subcode"]] if even else [])
    return build("hamming", {"q": 2, "r": r}, ops)


# binary Hamming block
D = ["duality"]
inst_list = []
for r in (3, 4, 5):
    n = 2**r - 1
    N = 2 ** (n - r)
    inst_list.append(inst({"q": 2, "r": r}, 2, n, N, rng(3, n - 3) + [n], [(n + 1) // 2],
                          bin_ham(r) if N <= 4096 else None))
row("hamming", "Binary Hamming", "hamming", D + ["one_design"], "2", "2^r-1", "2^(2^r-r-1)",
    "{3..n-3, n}", "{(n+1)/2}", inst_list)

inst_list = []
for r in (3, 4, 5):
    n = 2**r
    N = 2 ** (n - r - 1)
    inst_list.append(inst({"q": 2, "r": r}, 2, n, N, rng(4, n - 4, 2) + [n], [n // 2, n],
                          bin_ham(r, ext=True) if N <= 4096 else None))
row("hamming_extended", "Binary Hamming, extended", "hamming", D + ["design_cover"], "2", "2^r",
    "2^(2^r-r-1)", "{4 ->2 n-4} (plus n)", "{n/2, n}", inst_list)

inst_list = []
for r in (3, 4, 5):
    n = 2**r - 1
    N = 2 ** (n - r - 1)
    inst_list.append(inst({"q": 2, "r": r}, 2, n, N, rng(4, n - 3, 2), [(n - 1) // 2, (n + 1) // 2, n],
                          bin_ham(r, even=True) if N <= 4096 else None))
row("hamming_even", "Binary Hamming, even subcode", "hamming", D + ["design_cover"], "2", "2^r-1",
    "2^(2^r-r-2)", "{4 ->2 n-3}", "{(n-1)/2, (n+1)/2, n}", inst_list)

inst_list = []
for r in (3, 4, 5):
    n = 2**r - 2
    N = 2 ** (n - r)
    inst_list.append(inst({"q": 2, "r": r}, 2, n, N, rng(3, n - 2), [n // 2, n // 2 + 1],
                          bin_ham(r, sh=1) if N <= 4096 else None))
row("hamming_shortened", "Binary Hamming, shortened", "hamming", D + ["design_cover"], "2", "2^r-2",
    "2^(2^r-r-2)", "{3..n-2}", "{n/2, n/2+1}", inst_list)

inst_list = []
for r in (3, 4, 5):
    n = 2**r - 3
    N = 2 ** (n - r)
    inst_list.append(inst({"q": 2, "r": r}, 2, n, N, rng(3, n - 1), [(n - 1) // 2, (n + 1) // 2, (n + 3) // 2],
                          bin_ham(r, sh=2) if N <= 4096 else None))
row("hamming_2shortened", "Binary Hamming, 2x shortened", "hamming", D + ["three_support"], "2",
    "2^r-3", "2^(2^r-r-3)", "{3..n-1}", "{(n-1)/2, (n+1)/2, (n+3)/2}", inst_list)

inst_list = []
for r in (3, 4, 5):
    n = 2**r - 2
    N = 2 ** (n - r + 1)
    inst_list.append(inst({"q": 2, "r": r}, 2, n, N, rng(2, n - 2) + [n], [n // 2 + 1],
                          bin_ham(r, pu=1) if N <= 4096 else None))
row("hamming_punctured", "Binary Hamming, punctured", "hamming", D + ["one_design"], "2", "2^r-2",
    "2^(2^r-r-1)", "{2..n-2, n}", "{n/2+1}", inst_list)

# q-ary Hamming block
def qham(q, r, kind):
    n0 = (q**r - 1) // (q - 1)
    prime = q in (2, 3, 5, 7)
    if kind == "plain":
        n, N, sup, dsup, ops = n0, q ** (n0 - r), rng(3, n0), [q ** (r - 1)], []
    elif kind == "shortened":
        n, N = n0 - 1, q ** (n0 - 1 - r)
        sup, dsup, ops = rng(3, n), [q ** (r - 1) - 1, q ** (r - 1)], [S]
    else:
        n, N = n0 - 1, q ** (n0 - r)
        sup, dsup, ops = rng(2, n), [q ** (r - 1)], [P]
    c = build("hamming", {"q": q, "r": r}, ops) if prime and N <= 4096 else None
    return inst({"q": q, "r": r}, q, n, N, sup, dsup, c)


QH = [(3, 2), (4, 2), (5, 2), (3, 3), (7, 2)]
row("qhamming", "q-ary Hamming", "qhamming", D + ["one_design"], "q", "(q^r-1)/(q-1)", "q^(n-r)",
    "{3..n}", "{q^(r-1)}", [qham(q, r, "plain") for q, r in QH])
row("qhamming_shortened", "q-ary Hamming, shortened", "qhamming", D + ["one_design"], "q",
    "(q^r-q)/(q-1)", "q^(n-r)", "{3..n}", "{q^(r-1)-1, q^(r-1)}", [qham(q, r, "shortened") for q, r in QH])
row("qhamming_punctured", "q-ary Hamming, punctured", "qhamming", D + ["one_design"], "q",
    "(q^r-q)/(q-1)", "q^(n-r+1)", "{2..n}", "{q^(r-1)}", [qham(q, r, "punctured") for q, r in QH])

# simplex block: concrete linear simplex codes plus one generic 1-design
inst_list, punct = [], []
for q, r in ((2, 3), (2, 4), (3, 2), (3, 3), (5, 2)):
    n = (q**r - 1) // (q - 1)
    a = q ** (r - 1)
    inst_list.append(inst({"q": q, "r": r}, q, n, q**r, [a], rng(2, n), build("simplex", {"q": q, "r": r})))
    punct.append(inst({"q": q, "r": r}, q, n - 1, q**r, [a - 1, a], rng(2, n - 1),
                      build("simplex", {"q": q, "r": r}, [P])))
inst_list.append(inst({"q": 2, "generic": "n6N4"}, 2, 6, 4, [4], rng(2, 6)))
punct.append(inst({"q": 2, "generic": "n6N4"}, 2, 5, 4, [3, 4], rng(2, 5)))
row("simplex", "Simplex (1-design)", "simplex", ["one_design"], "q", "n", "N", "{a}", "{2..n}", inst_list)
row("simplex_punctured", "Simplex, punctured", "simplex", ["one_design"], "q", "n-1", "N", "{a-1, a}",
    "{2..n-1}", punct)

# Hadamard block
inst_list, punct, conf = [], [], []
for order in (4, 8, 12, 16, 20):
    n = order
    inst_list.append(inst({"order": order}, 2, n, 2 * n, [n // 2, n], rng(4, n - 4, 2) + [n],
                          build("hadamard", {"order": order})))
    m = order - 1
    punct.append(inst({"order": order}, 2, m, 2 * m + 2, [(m - 1) // 2, (m + 1) // 2, m], rng(4, m - 3, 2),
                      build("punctured_hadamard", {"order": order})))
for n in (5, 9, 13, 17):
    conf.append(inst({"order": n + 1}, 2, n, 2 * n + 2, [(n - 1) // 2, (n + 1) // 2, n], rng(4, n - 1, 2)))
row("hadamard", "Hadamard", "hadamard", ["design_cover"], "2", "4k", "2n", "{n/2, n}",
    "{4 ->2 n-4} (plus n)", inst_list)
row("hadamard_punctured", "Hadamard, punctured", "hadamard", ["design_cover"], "2", "4k-1", "2n+2",
    "{(n-1)/2, (n+1)/2, n}", "{4 ->2 n-3}", punct)
row("conference", "Conference", "hadamard", ["design_cover"], "2", "4k+1", "2n+2",
    "{(n-1)/2, (n+1)/2, n}", "{4 ->2 n-1}", conf)

# Golay block
G23 = [7, 8, 11, 12, 15, 16]
g6_16 = [x for x in rng(6, 16) if x not in (9, 13)]
gol = lambda base, ops=(): build(base, {}, ops)
row("golay23", "Binary Golay", "golay", D + ["design_spread"], "2", "23", "2^12",
    "{7,8,11,12,15,16,23}", "{8,12,16}", [inst({}, 2, 23, 4096, G23 + [23], [8, 12, 16], gol("golay_binary23"))])
row("golay24", "Binary Golay, extended", "golay", ["design_spread"], "2", "24", "2^12", "{8,12,16,24}",
    "{8,12,16,24}", [inst({}, 2, 24, 4096, [8, 12, 16, 24], [8, 12, 16, 24], gol("golay_binary24"))])
row("golay22_punctured", "Binary Golay, punctured", "golay", D + ["design_spread"], "2", "22", "2^12",
    "{6..16, 22} minus {9,13}", "{8,12,16}",
    [inst({}, 2, 22, 4096, g6_16 + [22], [8, 12, 16], gol("golay_binary23", [P]))])
row("golay22_shortened", "Binary Golay, shortened", "golay", ["lp"], "2", "22", "2^11",
    "{7,8,11,12,15,16}", "{7,8,11,12,15,16}", [inst({}, 2, 22, 2048, G23, G23, gol("golay_binary23", [S]))])
row("golay21_2shortened", "Binary Golay, 2x shortened", "golay", ["lp"], "2", "21", "2^10",
    "{7,8,11,12,15,16}", "{6..16} minus {9,13}", [inst({}, 2, 21, 1024, G23, g6_16, gol("golay_binary23", [S, S]))])
row("golay20_punctured_2shortened", "Binary Golay, punctured and 2x shortened", "golay", ["lp"], "2", "20",
    "2^10", "{6..16} minus {9,13}", "{6..16} minus {9,13}",
    [inst({}, 2, 20, 1024, g6_16, g6_16, gol("golay_binary23", [S, S, P]))])
row("golay11", "Ternary Golay", "golay", D + ["design_spread"], "3", "11", "3^6", "{5,6,8,9,11}", "{6,9}",
    [inst({}, 3, 11, 729, [5, 6, 8, 9, 11], [6, 9], gol("golay_ternary11"))])
row("golay12", "Ternary Golay, extended", "golay", ["design_spread"], "3", "12", "3^6", "{6,9,12}", "{6,9,12}",
    [inst({}, 3, 12, 729, [6, 9, 12], [6, 9, 12], gol("golay_ternary12"))])
row("golay10_shortened", "Ternary Golay, shortened", "golay", ["lp"], "3", "10", "3^5", "{5,6,8,9}",
    "{5,6,8,9}", [inst({}, 3, 10, 243, [5, 6, 8, 9], [5, 6, 8, 9], gol("golay_ternary11", [S]))])
row("golay9_2shortened", "Ternary Golay, 2x shortened", "golay", ["design_cover"], "3", "9", "3^4",
    "{5,6,8,9}", "{4..9}", [inst({}, 3, 9, 81, [5, 6, 8, 9], rng(4, 9), gol("golay_ternary11", [S, S]))])
row("golay8_3shortened", "Ternary Golay, 3x shortened", "golay", ["design_cover"], "3", "8", "3^3",
    "{5,6,8}", "{3..8}", [inst({}, 3, 8, 27, [5, 6, 8], rng(3, 8), gol("golay_ternary11", [S, S, S]))])
row("golay7_4shortened", "Ternary Golay, 4x shortened", "golay", ["one_design"], "3", "7", "3^2",
    "{5,6}", "{2..7}", [inst({}, 3, 7, 9, [5, 6], rng(2, 7), gol("golay_ternary11", [S, S, S, S]))])
row("golay10_punctured", "Ternary Golay, punctured", "golay", D + ["design_spread"], "3", "10", "3^6",
    "{4..10}", "{6,9}", [inst({}, 3, 10, 729, rng(4, 10), [6, 9], gol("golay_ternary11", [P]))])
row("golay9_2punctured", "Ternary Golay, 2x punctured", "golay", D + ["design_spread"], "3", "9", "3^6",
    "{3..9}", "{6,9}", [inst({}, 3, 9, 729, rng(3, 9), [6, 9], gol("golay_ternary11", [P, P]))],
    # the dual is only a 2-design, short of what the spread hypotheses ask for
    fallback=D + ["design_cover"])
row("golay8_3punctured", "Ternary Golay, 3x punctured", "golay", D + ["one_design"], "3", "8", "3^6",
    "{2..8}", "{6}", [inst({}, 3, 8, 729, rng(2, 8), [6], gol("golay_ternary11", [P, P, P]))])

# MDS
mds = []
for q, n, d in ((3, 3, 2), (5, 4, 2), (5, 5, 3), (5, 5, 4), (7, 6, 4), (7, 7, 5), (4, 5, 4), (8, 9, 7)):
    N = q ** (n - d + 1)
    c = build("reed_solomon", {"q": q, "n": n, "d": d}) if q in (3, 5, 7) and N <= 4096 else None
    mds.append(inst({"q": q, "n": n, "d": d}, q, n, N, rng(d, n), rng(n - d + 2, n), c))
row("mds", "MDS", "mds", ["mds_pd"], "q", "n", "q^(n-d+1)", "{d..n}", "{n-d+2..n}", mds)

# ovoid codes: quasicode level only
ov = lambda f: [f(q) for q in (3, 4, 5)]
row("ovoid", "Ovoid (q>2)", "ovoid", ["design_cover"], "q", "q^2+1", "q^4", "{q^2-q, q^2}", "{4..n}",
    ov(lambda q: inst({"q": q}, q, q * q + 1, q**4, [q * q - q, q * q], rng(4, q * q + 1))))
row("ovoid_shortened", "Ovoid, shortened", "ovoid", ["design_cover"], "q", "q^2", "q^3", "{q^2-q, q^2}",
    "{3..n}", ov(lambda q: inst({"q": q}, q, q * q, q**3, [q * q - q, q * q], rng(3, q * q))))
row("ovoid_2shortened", "Ovoid, 2x shortened", "ovoid", ["one_design"], "q", "q^2-1", "q^2", "{q^2-q}",
    "{2..n}", ov(lambda q: inst({"q": q}, q, q * q - 1, q**2, [q * q - q], rng(2, q * q - 1))))
row("ovoid_punctured", "Ovoid, punctured", "ovoid", ["design_cover"], "q", "q^2", "q^4",
    "{q^2-q-1, q^2-q, q^2-1, q^2}", "{4..n}",
    ov(lambda q: inst({"q": q}, q, q * q, q**4, [q * q - q - 1, q * q - q, q * q - 1, q * q], rng(4, q * q))))

# Nordstrom-Robinson block
nr = lambda ops=(): build("nordstrom_robinson16", {}, ops)
row("nr16", "Nordstrom-Robinson", "nordstrom_robinson", ["lp"], "2", "16", "256", "{6,8,10,16}",
    "{6,8,10,16}", [inst({}, 2, 16, 256, [6, 8, 10, 16], [6, 8, 10, 16], nr())])
row("nr15_punctured", "Nordstrom-Robinson, punctured", "nordstrom_robinson", ["lp"], "2", "15", "256",
    "{5..10, 15}", "{6,8,10}", [inst({}, 2, 15, 256, rng(5, 10) + [15], [6, 8, 10], nr([P]))])
row("nr15_shortened", "Nordstrom-Robinson, shortened", "nordstrom_robinson", ["lp"], "2", "15", "128",
    "{6,8,10}", "{5..10, 15}", [inst({}, 2, 15, 128, [6, 8, 10], rng(5, 10) + [15], nr([S]))])
row("nr14_2shortened", "Nordstrom-Robinson, 2x shortened", "nordstrom_robinson", ["lp"], "2", "14", "64",
    "{6,8,10}", "{4..10, 14}", [inst({}, 2, 14, 64, [6, 8, 10], rng(4, 10) + [14], nr([S, S]))])

OUT.write_text(json.dumps({"rows": rows}, indent=1) + "\n")
print(f"wrote {len(rows)} rows, {sum(len(r['instances']) for r in rows)} instances to {OUT}")
