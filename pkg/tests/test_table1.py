import copy
import importlib.util
import json
from pathlib import Path

import pytest

from rhokit.grammar import format_pair

from rhokit.table1 import GoldenError, golden_cone, instances, load_golden, verify_table1

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="module")
def golden():
    return load_golden()


def _edit(golden, row_id, fn):
    header, rows = copy.deepcopy(golden)
    out = []
    for r in rows:
        if r["id"] == row_id:
            r = fn(r)
        if r is not None:
            out.append(r)
    return header, out


def test_golden_file_is_generated_by_the_tool(golden):
    spec = importlib.util.spec_from_file_location("gen_table1", ROOT / "tools" / "gen_table1.py")
    gen = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(gen)
    header, rows = golden
    assert header == json.loads(json.dumps({"version": gen.VERSION, "coverage": gen.COVERAGE}))
    assert rows == json.loads(json.dumps(gen.rows()))


def test_small_bounds_clean(golden):
    report = verify_table1({"sl": (4, 6), "so": (9, 9), "sp": (3, 4)}, golden)
    assert report.empty, report.lines()
    assert report.checked > 0


def test_corrupted_witness_is_reported(golden):
    def corrupt(r):
        r["witness"]["equalities"] = [{"a1": "1", "b1": "-1"}]
        return r

    bad = _edit(golden, "row10", corrupt)
    report = verify_table1({"sl": (5, 4), "so": (8, 7), "sp": (4, 4)}, bad)
    assert not report.empty
    assert [m[0] for m in report.mismatched] == ["row10"]
    assert not report.missing and not report.extra


def test_dropped_row_shows_as_extra(golden):
    bad = _edit(golden, "row7", lambda r: None)
    report = verify_table1({"sl": (5, 4), "so": (9, 9), "sp": (2, 1)}, bad)
    assert report.extra == [("so:9", "h=g2; V=std1 (+) triv:2")]


def test_bogus_row_shows_as_missing(golden):
    header, rows = copy.deepcopy(golden)
    rows.append(
        {
            "version": 1,
            "id": "bogus",
            "row": 99,
            "g": "sl:4",
            "fixed": {"h": "sp:2", "V": "std1"},
            "h2": None,
            "witness": {"equalities": [], "inequalities": [], "rest_zero": False},
        }
    )
    report = verify_table1({"sl": (4, 4), "so": (8, 7), "sp": (2, 1)}, (header, rows))
    assert report.missing == [("bogus", "h=sp:2; V=std1")]


def test_empty_bounds(golden):
    report = verify_table1({"sl": (4, 3), "so": (2, 1), "sp": (9, 8)}, golden)
    assert report.empty and report.checked == 0
    assert verify_table1({}, golden).empty


def test_bounds_outside_coverage(golden):
    with pytest.raises(GoldenError):
        verify_table1({"sl": (4, 40)}, golden)
    with pytest.raises(GoldenError):
        verify_table1({"su": (4, 5)}, golden)


def test_bad_golden_files(tmp_path):
    p = tmp_path / "g.jsonl"
    for text in ["", "not json\n", '{"version": 2, "coverage": {}}\n', '{"version": 1, "coverage": {}}\n{"id": "x"}\n']:
        p.write_text(text, encoding="utf-8")
        with pytest.raises(GoldenError):
            load_golden(p)
    with pytest.raises(GoldenError):
        load_golden(tmp_path / "missing.jsonl")


def test_instances_of_row9(golden):
    (row,) = [r for r in golden[1] if r["id"] == "row9/p=2"]
    got = sorted(format_pair(i.spec) for i in instances(row))
    # h2 runs over 0 and the proper subalgebras of sp_2 other than sp_1 + sp_1
    assert got == [
        "g=sp:4; h=sp:2+sp:1; V=std1 (+) irrep2[3]",
        "g=sp:4; h=sp:2+sp:1; V=std1 (+) std2 (+) std2",
        "g=sp:4; h=sp:2+sp:1; V=std1 (+) std2 (+) triv:2",
        "g=sp:4; h=sp:2; V=std1 (+) triv:4",
    ]


def test_golden_cone_row3(golden):
    (row,) = [r for r in golden[1] if r["id"] == "row3/p=3"]
    for inst in instances(row):
        rays, _, _ = golden_cone(inst)
        (ray,) = rays
        a = inst.spec.h.coordinates_of(inst.spec.h.internal.point_from_values(ray))
        assert a[0] == -a[3] > 0 and a[1] == a[2] == 0 and not any(a[4:])
