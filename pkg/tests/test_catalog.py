import pytest

from rhokit.catalog import (
    CatalogError,
    FAMILIES,
    describe,
    maximal_irreducible_nonsimple,
    maximal_reducible,
    proposition_family,
)
from rhokit.grammar import format_pair

# Written out by hand, not generated.
DRED = {
    ("sl", 2): [],
    ("sl", 3): ["sl:2"],
    ("sl", 4): ["sl:3", "sl:2 + sl:2"],
    ("sl", 5): ["sl:4", "sl:3 + sl:2"],
    ("sl", 6): ["sl:5", "sl:4 + sl:2", "sl:3 + sl:3"],
    ("sl", 7): ["sl:6", "sl:5 + sl:2", "sl:4 + sl:3"],
    ("sl", 8): ["sl:7", "sl:6 + sl:2", "sl:5 + sl:3", "sl:4 + sl:4"],
    ("sl", 9): ["sl:8", "sl:7 + sl:2", "sl:6 + sl:3", "sl:5 + sl:4"],
    ("sl", 10): ["sl:9", "sl:8 + sl:2", "sl:7 + sl:3", "sl:6 + sl:4", "sl:5 + sl:5"],
    ("sl", 11): ["sl:10", "sl:9 + sl:2", "sl:8 + sl:3", "sl:7 + sl:4", "sl:6 + sl:5"],
    ("sl", 12): ["sl:11", "sl:10 + sl:2", "sl:9 + sl:3", "sl:8 + sl:4", "sl:7 + sl:5", "sl:6 + sl:6"],
    ("so", 7): ["so:5", "so:4 + so:3", "so:6"],
    ("so", 8): ["so:6", "sl:4", "so:4 + so:4"],
    ("so", 9): ["so:7", "so:4 + so:5", "so:6 + so:3", "so:8"],
    ("so", 10): ["so:8", "sl:5", "so:6 + so:4"],
    ("so", 11): ["so:9", "so:4 + so:7", "so:6 + so:5", "so:8 + so:3", "so:10"],
    ("so", 12): ["so:10", "sl:6", "so:8 + so:4", "so:6 + so:6"],
    ("sp", 1): [],
    ("sp", 2): ["sl:2", "sp:1 + sp:1"],
    ("sp", 3): ["sl:3", "sp:2 + sp:1"],
    ("sp", 4): ["sl:4", "sp:3 + sp:1", "sp:2 + sp:2"],
    ("sp", 5): ["sl:5", "sp:4 + sp:1", "sp:3 + sp:2"],
    ("sp", 6): ["sl:6", "sp:5 + sp:1", "sp:4 + sp:2", "sp:3 + sp:3"],
}

DTENS = {
    ("sl", 4): ["sl:2 (x) sl:2"],
    ("sl", 6): ["sl:2 (x) sl:3"],
    ("sl", 8): ["sl:2 (x) sl:4"],
    ("sl", 9): ["sl:3 (x) sl:3"],
    ("sl", 10): ["sl:2 (x) sl:5"],
    ("sl", 12): ["sl:2 (x) sl:6", "sl:3 (x) sl:4"],
    ("so", 9): ["so:3 (x) so:3"],
    ("so", 12): ["so:3 (x) so:4"],
    ("sp", 6): ["sp:2 (x) so:3"],
    ("sp", 8): ["sp:2 (x) so:4"],
    ("sp", 9): ["sp:3 (x) so:3"],
    ("sp", 10): ["sp:2 (x) so:5"],
    ("sp", 12): ["sp:2 (x) so:6", "sp:3 (x) so:4", "sp:4 (x) so:3"],
}

AMBIENTS = [("sl", n) for n in range(2, 13)] + [("so", n) for n in range(7, 13)] + [("sp", n) for n in range(1, 13)]


def _size(kind, n):
    return 2 * n if kind == "sp" else n


@pytest.mark.parametrize("g", AMBIENTS)
def test_dred_matches_hand_list(g):
    got = [e.subalgebra for e in maximal_reducible(g)]
    if g in DRED:
        assert sorted(got) == sorted(DRED[g])
    assert len(set(got)) == len(got)
    for e in maximal_reducible(g):
        spec = e.spec()
        assert spec.ambient == g[0] and spec.dim_v == _size(*g)


@pytest.mark.parametrize("g", AMBIENTS)
def test_dtens_matches_hand_list(g):
    got = [e.subalgebra for e in maximal_irreducible_nonsimple(g)]
    assert sorted(got) == sorted(DTENS.get(g, []))
    for e in maximal_irreducible_nonsimple(g):
        spec = e.spec()
        assert spec.ambient == g[0] and spec.dim_v == _size(*g)


def test_dtens_symplectic_pairs_in_so():
    assert {e.subalgebra for e in maximal_irreducible_nonsimple(("so", 16))} == {"so:4 (x) so:4", "sp:2 (x) sp:2"}
    assert {e.subalgebra for e in maximal_irreducible_nonsimple(("so", 32))} == {"so:4 (x) so:8", "sp:2 (x) sp:4"}


def test_catalog_rejects_bad_ambients():
    for g in [("e", 6), ("so", 2), ("sl", 1), ("sp", 0)]:
        with pytest.raises(CatalogError):
            maximal_reducible(g)


@pytest.mark.parametrize(
    "fid,params,text",
    [
        ("red2.1", dict(p=3, q=2), "g=sl:5; h=sl:3+sl:2; V=std1 (+) std2"),
        ("redex.1", dict(q=5), "g=so:12; h=g2+so:5; V=std1 (+) std2"),
        ("redex.2", dict(q=3), "g=so:11; h=so:7+so:3; V=irrep1[0,0,1] (+) std2"),
        ("redex.1", dict(q=2), "g=so:9; h=g2; V=std1 (+) triv:2"),
        ("redu.4", dict(p=2), "g=so:8; h=sp:2; V=std1 (+) dual(std1)"),
        ("redu.1", dict(p=2, q=1), "g=sl:5; h=sp:2; V=std1 (+) triv:1"),
        ("incl.4", dict(p=3), "g=sp:3; h=sl:3; V=std1 (+) dual(std1)"),
        ("tens.3", dict(p=1, q=2), "g=so:8; h=sp:1+sp:2; V=std1 (x) std2"),
        ("red3.1", dict(n=7, parts=[2, 3]), "g=sl:7; h=sl:3+sl:2; V=std1 (+) std2 (+) triv:2"),
        ("khcomp.3", dict(p=3, q=2), "g=sp:5; h=sp:2; V=std1 (+) triv:6"),
        ("si", dict(factor="g2", labels=[1, 0], ambient="so"), "g=so:7; h=g2; V=irrep1[1,0]"),
    ],
)
def test_family_examples(fid, params, text):
    assert format_pair(proposition_family(fid, **params)) == text


def test_describe_matches_format():
    spec = proposition_family("red2.2", p=5, q=3)
    assert describe(spec) == format_pair(spec)


@pytest.mark.parametrize(
    "fid,params",
    [
        ("red2.1", dict(p=1, q=2)),
        ("red2.2", dict(p=2, q=3)),
        ("incl.1", dict(p=2)),
        ("tens.2", dict(p=2, q=3)),
        ("khcomp.3", dict(p=2, q=3)),
        ("red3.1", dict(n=3, parts=[2, 2])),
        ("nope", dict()),
        ("redex.1", dict(p=3)),
    ],
)
def test_family_rejects_out_of_range(fid, params):
    with pytest.raises(CatalogError):
        proposition_family(fid, **params)


def test_every_family_builds_something():
    samples = {
        "red2.1": dict(p=3, q=2), "red2.2": dict(p=4, q=3), "red2.3": dict(p=2, q=1),
        "incl.1": dict(p=3), "incl.2": dict(p=2), "incl.3": dict(p=3), "incl.4": dict(p=2),
        "tens.1": dict(p=2, q=3), "tens.2": dict(p=3, q=3), "tens.3": dict(p=1, q=2), "tens.4": dict(p=1, q=3),
        "si": dict(factor=("so", 7), labels=[0, 0, 1], ambient="so"),
        "red3.1": dict(n=6, parts=[3, 2]), "red3.2": dict(n=9, parts=[4, 3]), "red3.3": dict(n=4, parts=[2, 1]),
        "redu.1": dict(p=2, q=3), "redu.2": dict(p=3, q=3), "redu.3": dict(p=2, q=2), "redu.4": dict(p=3),
        "redex.1": dict(q=4), "redex.2": dict(q=4),
        "khcomp.1": dict(p=3, q=2), "khcomp.2": dict(p=4, q=3), "khcomp.3": dict(p=2, q=2),
    }
    assert set(samples) == set(FAMILIES)
    for fid, params in samples.items():
        spec = proposition_family(fid, **params)
        assert spec.validate() is spec
