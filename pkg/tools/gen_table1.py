"""Write src/rhokit/data/table1.jsonl from the row descriptions of the classification table.

Each row of the table is instantiated at every size inside COVERAGE.  The
witness column is turned into linear forms in the natural coordinates of the
fixed factors (letters a, b, c, ... in factor order).  ``rest_zero`` means that
every coordinate of the h2 slot vanishes on the witness set.
"""

import json
from pathlib import Path

VERSION = 1
COVERAGE = {"sl": (2, 12), "so": (7, 13), "sp": (1, 8)}
OUT = Path(__file__).resolve().parent.parent / "src" / "rhokit" / "data" / "table1.jsonl"


def form(**coeffs):
    return {k: str(v) for k, v in coeffs.items() if v}


def diff(x, y):
    return {x: "1", y: "-1"}


def in_range(family, n):
    lo, hi = COVERAGE[family]
    return lo <= n <= hi


def row(num, params, g, h, v, eqs=(), ineqs=(), h2=None, rest_zero=False):
    return {
        "version": VERSION,
        "id": f"row{num}" + "".join(f"/{k}={val}" for k, val in params.items()),
        "row": num,
        "g": g,
        "fixed": {"h": h, "V": v},
        "h2": h2,
        "witness": {"equalities": list(eqs), "inequalities": list(ineqs), "rest_zero": rest_zero},
    }


def slot(within, proper, exclude=()):
    return {"within": within, "proper": proper, "exclude": list(exclude)}


def rows():
    out = []
    # 1: sl_2p > sl_p + sl_p, a_i = b_i
    for p in range(2, 7):
        if in_range("sl", 2 * p):
            eqs = [diff(f"a{i}", f"b{i}") for i in range(1, p + 1)]
            out.append(row(1, {"p": p}, f"sl:{2 * p}", f"sl:{p}+sl:{p}", "std1 (+) std2", eqs))
    for p in range(1, 6):
        if not in_range("sl", 2 * p + 1):
            continue
        n = f"sl:{2 * p + 1}"
        # 2: sl_{p+1} + sl_p, a1 >= b1 >= a2 >= ... >= b_p >= a_{p+1}
        seq = [f"{x}{i}" for i in range(1, p + 1) for x in "ab"] + [f"a{p + 1}"]
        if p == 1:
            out.append(row(2, {"p": p}, n, "sl:2", "std1 (+) triv:1", (), [diff("a1", "a2")]))
        else:
            ineqs = [diff(x, y) for x, y in zip(seq, seq[1:])]
            out.append(row(2, {"p": p}, n, f"sl:{p + 1}+sl:{p}", "std1 (+) std2", (), ineqs))
        # 3: sl_{p+1} + h2 with h2 a proper subalgebra of sl_p; witness (a1, 0, ..., 0, -a1)
        if p >= 2:
            eqs = [form(**{f"a{i}": 1}) for i in range(2, p + 1)] + [form(a1=1, **{f"a{p + 1}": 1})]
            out.append(
                row(3, {"p": p}, n, f"sl:{p + 1}", "std1", eqs, h2=slot(f"sl:{p}", True), rest_zero=True)
            )
        # 4: sp_p, full chamber
        out.append(row(4, {"p": p}, n, f"sp:{p}", "std1 (+) triv:1"))
    # 5: so_{2p+2} > so_{p+2} + h2, h2 inside so_p; witness (a1, 0, ..., 0)
    for p in range(3, 6):
        if in_range("so", 2 * p + 2):
            m = (p + 2) // 2
            eqs = [form(**{f"a{i}": 1}) for i in range(2, m + 1)]
            out.append(
                row(5, {"p": p}, f"so:{2 * p + 2}", f"so:{p + 2}", "std1", eqs, h2=slot(f"so:{p}", False), rest_zero=True)
            )
    # 6: so_{2p+1} > sl_p, a_i = -a_{p-i+1}
    for p in range(3, 7):
        if in_range("so", 2 * p + 1):
            eqs = [form(**{f"a{i}": 1, f"a{p - i + 1}": 1}) for i in range(1, p // 2 + 1)]
            out.append(row(6, {"p": p}, f"so:{2 * p + 1}", f"sl:{p}", "std1 (+) dual(std1) (+) triv:1", eqs))
    # 7: g2 in so_9 through so_7, a1 = a2
    out.append(row(7, {}, "so:9", "g2", "std1 (+) triv:2", [diff("a1", "a2")]))
    # 8: spin so_7 + h2 in so_11, h2 inside so_3; a1 = a2, a3 = 0, b1 = 0
    out.append(
        row(8, {}, "so:11", "so:7", "irrep1[0,0,1]", [diff("a1", "a2"), form(a3=1)], h2=slot("so:3", False), rest_zero=True)
    )
    # 9: sp_2p > sp_p + h2, h2 a proper subalgebra of sp_p; witness (a1, 0, ..., 0)
    for p in range(1, 5):
        if in_range("sp", 2 * p):
            eqs = [form(**{f"a{i}": 1}) for i in range(2, p + 1)]
            excl = ["h=sp:1+sp:1; V=std1 (+) std2"] if p == 2 else []
            out.append(
                row(9, {"p": p}, f"sp:{2 * p}", f"sp:{p}", "std1", eqs, h2=slot(f"sp:{p}", True, excl), rest_zero=True)
            )
    # 10: sp_4 > sp_2 + 2 sp_1, a2 = b1 = c1
    out.append(row(10, {}, "sp:4", "sp:2+sp:1+sp:1", "std1 (+) std2 (+) std3", [diff("a2", "b1"), diff("b1", "c1")]))
    # 11: sp_3 > 3 sp_1, a1 = b1 = c1
    out.append(row(11, {}, "sp:3", "sp:1+sp:1+sp:1", "std1 (+) std2 (+) std3", [diff("a1", "b1"), diff("b1", "c1")]))
    return out


def main():
    OUT.parent.mkdir(parents=True, exist_ok=True)
    lines = [json.dumps({"version": VERSION, "coverage": COVERAGE})]
    lines += [json.dumps(r) for r in rows()]
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines) - 1} rows to {OUT}")


if __name__ == "__main__":
    main()
