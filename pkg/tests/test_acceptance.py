"""Acceptance criteria 1-8.

Each ``criterion_N`` returns (ok, detail).  Under pytest every criterion is its
own test and prints one PASS/FAIL line; run the file directly to get all eight
lines without pytest.
"""

import math
import random
import sys
import time
from collections import Counter
from itertools import product
from pathlib import Path

import pytest
from gmpy2 import mpq

sys.path.insert(0, str(Path(__file__).resolve().parent))

from rhokit import cones
from rhokit import linalg as la
from rhokit.catalog import CatalogError, proposition_family
from rhokit.classifier import si_scan
from rhokit.embedding import (
    AlgebraSpec,
    EmbeddingSpec,
    FactorSpec,
    Irrep,
    adjoint_weight_multiset,
    ambient_weight_multiset,
    form_admitted,
)
from rhokit.grammar import parse_pair
from rhokit.rho import VerdictKind, decide, rho_eval
from rhokit.roots import build_root_system
from rhokit.subalgebras import decompose
from rhokit.table1 import DEFAULT_BOUNDS, instances, load_golden, verify_table1
from rhokit.weights import (
    WeightMultiset,
    dimension,
    dominance_leq,
    enumerate_dominant,
    f_lambda,
    weight_system,
)
from reference_data import E6_FUND, E8_FUND

SEED = 20240611
NOT, WIT, STRICT = VerdictKind.NOT_DOMINATED, VerdictKind.DOMINATED_WITH_WITNESS, VerdictKind.STRICTLY_DOMINATED


def rand_q(rng, lo=0, hi=9, den=6):
    return mpq(rng.randint(lo * den, hi * den), rng.randint(1, den))


def chamber(rng, alg):
    return alg.point_from_values([rand_q(rng) for _ in range(alg.rank)])


def anywhere(rng, alg):
    return alg.point_from_values([rand_q(rng, -9, 9) for _ in range(alg.rank)])


def adjoint_of(f):
    c = Counter()
    for r in f.positive_root_coeffs:
        c[r] += 1
        c[tuple(-x for x in r)] += 1
    c[(mpq(0),) * f.rank] += f.rank
    return WeightMultiset(f, c)


def direct_d(spec, point):
    """rho_g - 2 rho_h evaluated straight from the weight multisets."""
    return rho_eval(ambient_weight_multiset(spec), point) - 2 * rho_eval(adjoint_weight_multiset(spec.h), point)


# ------------------------------------------------------------ 1


def criterion_1():
    t = time.time()
    report = verify_table1(DEFAULT_BOUNDS)
    dt = time.time() - t
    ok = report.empty and report.checked > 0 and dt < 600
    detail = f"verify-table over {DEFAULT_BOUNDS}: {report.checked} instances, "
    detail += "empty diff" if report.empty else f"{len(report.lines())} differences: {report.lines()[:3]}"
    return ok, detail + f", {dt:.1f}s"


# ------------------------------------------------------------ 2


def criterion_2():
    res = si_scan(30, 3)
    not_dom = {(r.h, r.labels, r.ambient, r.n) for r in res if r.verdict.kind is NOT}
    witness = [r for r in res if r.verdict.kind is WIT]
    expected = {(("G2", 2), (1, 0), "so", 7), (("B", 3), (0, 0, 1), "so", 8)}
    # (sl_2p, sp_p) with rank p <= 3 and 2p <= 30; p = 1 is h = g and is not a proper pair
    expected |= {(("C", p), (1,) + (0,) * (p - 1), "sl", 2 * p) for p in (2, 3)}
    ok = not_dom == expected and not witness
    return ok, f"{len(res)} pairs scanned, NotDominated at {sorted(not_dom)}, {len(witness)} with witness"


# ------------------------------------------------------------ 3


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def grid_checks():
    """(label, family id, params, expected leq, expected strict)."""
    out = []
    for p in range(1, 8):
        for q in range(1, p + 1):
            out.append((f"red2(1) p={p} q={q}", "red2.1", dict(p=p, q=q), p <= q + 1, False))
    for p in range(1, 10):
        for q in range(1, p + 1):
            out.append((f"red2(2) p={p} q={q}", "red2.2", dict(p=p, q=q), p <= q + 2, p <= q + 1))
    for p in range(1, 6):
        for q in range(1, p + 1):
            out.append((f"red2(3) p={p} q={q}", "red2.3", dict(p=p, q=q), False, False))
    for p in range(1, 9):
        out.append((f"incl(1) p={p}", "incl.1", dict(p=p), True, True))
        out.append((f"incl(2) p={p}", "incl.2", dict(p=p), False, False))
        out.append((f"incl(3) p={p}", "incl.3", dict(p=p), False, False))
        out.append((f"incl(4) p={p}", "incl.4", dict(p=p), True, True))
    for p in range(1, 3):
        for q in range(1, 5):
            out.append((f"tens(3) p={p} q={q}", "tens.3", dict(p=p, q=q), True, p * q > 2))
    for n in range(1, 10):
        for parts in partitions(n):
            n1 = parts[0]
            n2 = parts[1] if len(parts) > 1 else 0
            out.append(
                (f"red3(1) n={n} {parts}", "red3.1", dict(n=n, parts=list(parts)), 2 * n1 <= n + 1, 2 * n1 <= n and n1 + n2 <= n - 1)
            )
    for n in range(1, 7):
        for s in range(1, n + 1):
            for parts in partitions(s):
                n1 = parts[0]
                n2 = parts[1] if len(parts) > 1 else 0
                leq = 2 * n1 <= n and not (n == 2 * n1 == 2 * n2)
                strict = 2 * n1 <= n - 1 and not (n == 3 and parts == (1, 1, 1))
                out.append((f"red3(3) n={n} {parts}", "red3.3", dict(n=n, parts=list(parts)), leq, strict))
    for p in range(1, 4):
        for q in range(1, 9):
            out.append((f"redu(1) p={p} q={q}", "redu.1", dict(p=p, q=q), q <= 2 * p + 1, 1 < q <= 2 * p))
    for q in range(1, 11):
        out.append((f"redex(1) q={q}", "redex.1", dict(q=q), 2 <= q <= 9, 3 <= q <= 8))
    for q in range(1, 12):
        out.append((f"redex(2) q={q}", "redex.2", dict(q=q), 3 <= q <= 10, 4 <= q <= 9))
    for p in range(1, 7):
        for q in range(1, p + 1):
            out.append((f"khcomp p={p} q={q}", "khcomp.3", dict(p=p, q=q), True, p >= q + 1))
    return out


def criterion_3():
    t = time.time()
    failures = []
    solved = skipped = 0
    for label, fid, params, leq, strict in grid_checks():
        try:
            spec = proposition_family(fid, **params)
        except CatalogError:
            # parameters outside the family (zero subalgebra, so_2 factors, ...)
            skipped += 1
            continue
        v = decide(spec)
        solved += 1
        if (v.leq, v.strict) != (leq, strict):
            failures.append(f"{label}: got {v.kind.value}, expected leq={leq} strict={strict}")
    dt = time.time() - t
    detail = f"{solved} grid points solved ({skipped} outside the families) in {dt:.1f}s"
    if failures:
        detail += f"; {len(failures)} disagree: " + "; ".join(failures)
    return not failures and dt < 300, detail


# ------------------------------------------------------------ 4


def closed_form_rho(kind, rank):
    """Printed coefficient formula: (kind of input, coefficients)."""
    n = rank
    if kind == "A":
        return "eps", [n + 1 - 2 * i + 1 for i in range(1, n + 2)]
    if kind == "B":
        return "eps", [2 * n + 1 - 2 * i for i in range(1, n + 1)]
    if kind == "C":
        return "eps", [2 * (n + 1 - i) for i in range(1, n + 1)]
    if kind == "D":
        return "eps", [2 * (n - i) for i in range(1, n + 1)]
    if kind == "G2":
        return "alpha", [10, 6]
    if kind == "F4":
        return "alpha", [16, 30, 42, 22]
    if kind == "E7":
        return "alpha", [34, 49, 66, 96, 75, 52, 27]
    table = E6_FUND if kind == "E6" else E8_FUND
    # 2 rho = 2 * sum of fundamental weights
    coeffs = [sum(2 * mpq(s) * row[j] for s, row in table) for j in range(rank)]
    return "alpha", coeffs


def criterion_4():
    rng = random.Random(SEED)
    types = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] + [("C", n) for n in range(1, 9)]
    types += [("D", n) for n in range(3, 9)] + [("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)]
    bad = []
    for kind, rank in types:
        f = build_root_system(kind, rank)
        adj = adjoint_of(f)
        mode, coeffs = closed_form_rho(kind, rank)
        for _ in range(100):
            y = chamber(rng, f)
            lhs = rho_eval(adj, y)
            rhs = la.dot(coeffs, y if mode == "eps" else f.simple_values(y))
            if lhs != rhs:
                bad.append(f"{kind}{rank} at {y}")
                break
    return not bad, f"{len(types)} simple types x 100 chamber points" + (f"; mismatches: {bad}" if bad else ", all equal")


# ------------------------------------------------------------ 5


def criterion_5():
    problems = []
    g2 = build_root_system("G2")
    b3 = build_root_system("B", 3)
    e6 = build_root_system("E6")
    for name, f, lam, d in [("g2 w1", g2, (1, 0), 7), ("so7 w3", b3, (0, 0, 1), 8), ("e6 w1", e6, (1, 0, 0, 0, 0, 0), 27)]:
        total = weight_system(f, lam).total()
        if not total == dimension(f, lam) == d:
            problems.append(f"{name}: Freudenthal {total}, Weyl {dimension(f, lam)}, expected {d}")
    lam_g2 = set(weight_system(g2, (1, 0)).entries)
    want_g2 = {(s * 2, s * 1) for s in (1, -1)} | {(s, s) for s in (1, -1)} | {(s, 0) for s in (1, -1)} | {(0, 0)}
    if lam_g2 != want_g2:
        problems.append(f"Lambda(g2, w1) = {lam_g2}")
    half = mpq(1, 2)
    lam_b3 = {b3.covector(w) for w in weight_system(b3, (0, 0, 1)).entries}
    want_b3 = {(a * half, b * half, c * half) for a, b, c in product((1, -1), repeat=3)}
    if lam_b3 != want_b3:
        problems.append(f"Lambda(so7, w3) = {lam_b3}")
    return not problems, "dims 7, 8, 27 and both weight sets" + (f" wrong: {problems}" if problems else " match")


# ------------------------------------------------------------ 6

PROPERTY_SPECS = [
    "g=sl:5; h=sl:3+sl:2; V=std1 (+) std2",
    "g=so:9; h=g2; V=std1 (+) triv:2",
    "g=sp:4; h=sp:2+sp:1+sp:1; V=std1 (+) std2 (+) std3",
    "g=so:8; h=so:7; V=irrep1[0,0,1]",
    "g=sl:6; h=sl:2+sl:3; V=std1 (x) std2",
    "g=sp:3; h=sl:3; V=std1 (+) dual(std1)",
    "g=so:11; h=so:7+so:3; V=irrep1[0,0,1] (+) std2",
    "g=sl:10; h=sp:2+sl:3; V=std1 (+) std2 (+) dual(std2)",
]
SAMPLES = 1000


def random_weyl(rng, alg, point):
    parts = list(alg.split_point(point))
    for k, f in enumerate(alg.factors):
        for _ in range(3 * f.rank):
            parts[k] = f.reflect_point(rng.randrange(f.rank), parts[k])
    return alg.join(parts)


def rank3_types():
    return [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("G2", 2)]


def criterion_6():
    rng = random.Random(SEED)
    specs = [parse_pair(t) for t in PROPERTY_SPECS]
    mods = [(s, ambient_weight_multiset(s)) for s in specs]
    fails = Counter()

    for _ in range(SAMPLES):
        s, m = rng.choice(mods)
        y = anywhere(rng, s.h.internal)
        t = rand_q(rng, 0, 20)
        if rho_eval(m, la.scale(t, y)) != t * rho_eval(m, y):
            fails["homogeneity"] += 1
    for _ in range(SAMPLES):
        s, m = rng.choice(mods)
        y1, y2 = anywhere(rng, s.h.internal), anywhere(rng, s.h.internal)
        lam = mpq(rng.randint(0, 12), 12)
        y = la.add(la.scale(lam, y1), la.scale(1 - lam, y2))
        if rho_eval(m, y) > lam * rho_eval(m, y1) + (1 - lam) * rho_eval(m, y2):
            fails["convexity"] += 1
    for _ in range(SAMPLES):
        s, m1 = rng.choice(mods)
        m2 = adjoint_weight_multiset(s.h)
        y = anywhere(rng, s.h.internal)
        if rho_eval(m1 + m2, y) != rho_eval(m1, y) + rho_eval(m2, y):
            fails["additivity"] += 1
    for _ in range(SAMPLES):
        s, m = rng.choice(mods)
        y = anywhere(rng, s.h.internal)
        if rho_eval(m, random_weyl(rng, s.h.internal, y)) != rho_eval(m, y):
            fails["W-invariance"] += 1

    # f-monotonicity: every pair mu < lam of dominant weights with dim <= 30 on rank <= 3 factors
    pairs = []
    for t in rank3_types():
        f = build_root_system(*t)
        lams = enumerate_dominant(f, 30)
        pairs += [(f, mu, lam) for lam in lams for mu in lams if mu != lam and dominance_leq(f, mu, lam)]
    per_pair = math.ceil(SAMPLES / len(pairs))
    mono = 0
    for f, mu, lam in pairs:
        for _ in range(per_pair):
            y = chamber(rng, f)
            mono += 1
            if f_lambda(f, mu, y) > f_lambda(f, lam, y):
                fails["f-monotonicity"] += 1

    # f(lam; Y) <= rho_g for every ambient the irreducible module admits
    embeddings = []
    for t in rank3_types():
        f = build_root_system(*t)
        fs = FactorSpec(*_user_name(t))
        if fs.internal != (t,):
            continue  # so_5 is handled as sp_2
        for lam in enumerate_dominant(f, 30):
            if not any(lam) or dimension(f, lam) < 2:
                continue
            sym, skew = form_admitted((f,), decompose((t,), weight_system(f, lam).entries))
            for amb, allowed in (("sl", True), ("so", sym), ("sp", skew)):
                if allowed:
                    spec = EmbeddingSpec(AlgebraSpec([fs]), Irrep(1, lam), amb).validate()
                    embeddings.append((f, lam, ambient_weight_multiset(spec)))
    per_emb = math.ceil(SAMPLES / len(embeddings))
    for f, lam, amb in embeddings:
        for _ in range(per_emb):
            y = chamber(rng, f)
            if f_lambda(f, lam, y) > rho_eval(amb, y):
                fails["f <= rho_g"] += 1

    # rho_V(Y1) <= rho_V(Y1 + Y2) for Y1, Y2 in the chambers of complementary ideals
    split = [(s, m) for s, m in mods if len(s.h.internal.factors) > 1]
    for _ in range(SAMPLES):
        s, m = rng.choice(split)
        alg = s.h.internal
        k = rng.randrange(1, len(alg.factors))
        y = chamber(rng, alg)
        parts = alg.split_point(y)
        zero = [tuple(mpq(0) for _ in p) for p in parts]
        y1 = alg.join(list(parts[:k]) + zero[k:])
        if rho_eval(m, y1) > rho_eval(m, y):
            fails["ideal monotonicity"] += 1

    counts = (
        f"{SAMPLES} samples each for homogeneity, convexity, additivity, W-invariance, ideal monotonicity; "
        f"{mono} over {len(pairs)} dominance pairs; {per_emb * len(embeddings)} over {len(embeddings)} embeddings"
    )
    return not fails, counts + (f"; failures {dict(fails)}" if fails else "; no violations")


def _user_name(t):
    kind, rank = t
    return {"A": ("sl", rank + 1), "B": ("so", 2 * rank + 1), "C": ("sp", rank)}.get(kind, (kind.lower(),))


# ------------------------------------------------------------ 7


def oracle_cone(spec):
    """Zero set of D in the chamber, from the hyperplane arrangement alone.

    D is linear on every cell cut out by the walls w = 0 of the ambient weights
    and the chamber walls.  As D >= 0 here, its zero set meets each cell in a
    face, so the zero set is the cone over the arrangement vertices (on the
    slice sum x = 1) where D vanishes.  D is evaluated straight from rho_eval.
    """
    alg = spec.h.internal
    walls = {w for w in ambient_weight_multiset(spec).entries if any(w)}
    verts = cones.arrangement_vertices(alg.rank, sorted(walls))
    return [v for v in verts if direct_d(spec, alg.point_from_values(v)) == 0]


def criterion_7():
    _, rows = load_golden()
    checked = 0
    bad = []
    for row in rows:
        for inst in instances(row):
            spec = inst.spec
            if spec.h.rank > 3:
                continue
            checked += 1
            v = decide(spec)
            zero = oracle_cone(spec)
            if v.kind is not WIT or not zero:
                bad.append(f"{row['id']}: verdict {v.kind.value}, oracle has {len(zero)} zero vertices")
                continue
            w = v.witness
            on_slice = {tuple(x / sum(r) for x in r) for r in w.rays}
            inside = all(w.contains_values(z) for z in zero)
            if not (on_slice <= set(zero) and inside):
                bad.append(f"{row['id']}: LP rays {w.rays}, oracle vertices {zero}")
    return checked > 0 and not bad, f"{checked} golden instances of rank <= 3 compared" + (f"; {bad}" if bad else ", all cones equal")


# ------------------------------------------------------------ 8


def criterion_8():
    notes = []
    ok = True
    spec = parse_pair("g=sl:4; h=sl:2+sl:2; V=std1 (+) std2")
    v = decide(spec)
    y = spec.h.internal.point_from_values(v.minimizer)
    a1, _, b1, _ = spec.h.coordinates_of(y)
    ok &= v.exact_min == 0 and direct_d(spec, y) == 0 and a1 == b1
    notes.append(f"(sl4, sl2+sl2) min {v.exact_min}, a1={a1}, b1={b1}, D={direct_d(spec, y)}")
    for text, sign, name in [
        ("g=so:7; h=g2; V=std1", -1, "(so7, g2)"),
        ("g=sp:3; h=sl:3; V=std1 (+) dual(std1)", 1, "(sp3, sl3)"),
    ]:
        spec = parse_pair(text)
        v = decide(spec)
        d = direct_d(spec, spec.h.internal.point_from_values(v.minimizer))
        ok &= d == v.exact_min and (d > 0 if sign > 0 else d < 0)
        notes.append(f"{name} min {v.exact_min}, D at minimizer {d}")
    return bool(ok), "; ".join(notes)


# ------------------------------------------------------------ drivers

CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def line(n, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [CRITERIA[n - 1]() for n in range(1, 9)]
    for n, (ok, detail) in enumerate(results, 1):
        print(line(n, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
