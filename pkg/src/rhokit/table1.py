"""Golden transcription of the classification table and its comparison against ``classify``.

The golden file is JSON lines.  The first line is a header
``{"version": 1, "coverage": {"sl": [lo, hi], ...}}``; every other line is one
row of the table at one size::

    {"version": 1, "id": "row3/p=3", "row": 3, "g": "sl:7",
     "fixed": {"h": "sl:4", "V": "std1"},
     "h2": {"within": "sl:3", "proper": true, "exclude": []},
     "witness": {"equalities": [{"a2": "1"}, ...], "inequalities": [...],
                 "rest_zero": true}}

``fixed`` lists the factors that are always present together with their module
on a subspace of the defining space.  When ``h2`` is present, the row stands
for every semisimple subalgebra of ``within`` (conjugacy classes, including 0;
``within`` itself unless ``proper``), acting on the complementary subspace.
``exclude`` holds ``h=...; V=...`` texts for h2 values that are left out.

Witness forms are dicts from natural coordinate names of the fixed factors
(a1, a2, ... for the first factor, b1, ... for the second) to rational strings.
Each equality reads form = 0 and each inequality form >= 0, intersected with
the closed chamber.  ``rest_zero`` adds the condition that Y has no component
in h2.
"""

import json
from dataclasses import dataclass, field
from importlib import resources

from gmpy2 import mpq

from . import cones
from . import linalg as la
from .classifier import classify
from .embedding import AlgebraSpec, EmbeddingError, EmbeddingSpec, FactorSpec, Triv, dsum, render
from .embedding import DirectSum, Dual, Irrep, OuterTensor, Std
from .grammar import ParseError, parse_algebra, parse_module, parse_pair
from .rho import VerdictKind, decide
from .subalgebras import Node, canonical, descendants, node_from_spec, spec_from_node

GOLDEN_VERSION = 1
DEFAULT_BOUNDS = {"sl": (4, 9), "so": (7, 11), "sp": (2, 6)}


class GoldenError(ValueError):
    pass


@dataclass
class DiffReport:
    missing: list = field(default_factory=list)  # (row id, pair text)
    extra: list = field(default_factory=list)  # (g, pair text)
    mismatched: list = field(default_factory=list)  # (row id, pair text, reason)
    checked: int = 0

    @property
    def empty(self):
        return not (self.missing or self.extra or self.mismatched)

    def lines(self):
        out = [f"missing  {rid}: {text}" for rid, text in self.missing]
        out += [f"extra    {g}: {text}" for g, text in self.extra]
        out += [f"mismatch {rid}: {text}: {why}" for rid, text, why in self.mismatched]
        return out


@dataclass(frozen=True)
class Instance:
    """One concrete pair covered by a golden row."""

    row_id: str
    spec: EmbeddingSpec
    fixed_rank: int
    equalities: tuple
    inequalities: tuple
    rest_zero: bool


# ------------------------------------------------------------ loading


def load_golden(path=None):
    """(header, rows) from a golden file; the packaged file when ``path`` is None."""
    try:
        if path is None:
            text = resources.files("rhokit").joinpath("data/table1.jsonl").read_text(encoding="utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise GoldenError(f"cannot read golden file: {e}") from None
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GoldenError("golden file is empty")
    try:
        records = [json.loads(ln) for ln in lines]
    except json.JSONDecodeError as e:
        raise GoldenError(f"golden file is not valid JSON lines: {e}") from None
    header, rows = records[0], records[1:]
    if header.get("version") != GOLDEN_VERSION or "coverage" not in header:
        raise GoldenError("golden header must carry version 1 and a coverage map")
    for r in rows:
        _check_row(r)
    return header, rows


def _check_row(r):
    for key in ("id", "g", "fixed", "witness"):
        if key not in r:
            raise GoldenError(f"golden row lacks {key!r}: {r}")
    if r.get("version") != GOLDEN_VERSION:
        raise GoldenError(f"golden row {r['id']} has an unknown version")
    w = r["witness"]
    if not isinstance(w.get("equalities"), list) or not isinstance(w.get("inequalities"), list):
        raise GoldenError(f"golden row {r['id']} has a malformed witness")


def _ambient(text):
    fam, _, n = text.partition(":")
    if fam not in ("sl", "so", "sp") or not n.isdigit():
        raise GoldenError(f"bad ambient {text!r}")
    return fam, int(n)


# ------------------------------------------------------------ instantiation


def _shift(v, k):
    if isinstance(v, Std):
        return Std(v.factor + k)
    if isinstance(v, Irrep):
        return Irrep(v.factor + k, v.labels)
    if isinstance(v, Dual):
        return Dual(_shift(v.inner, k))
    if isinstance(v, DirectSum):
        return DirectSum(tuple(_shift(t, k) for t in v.terms))
    if isinstance(v, OuterTensor):
        return OuterTensor(tuple(_shift(t, k) for t in v.terms))
    return v


def _whole_node(family, n):
    f = FactorSpec(family, n)
    return canonical(Node(family, n, f.internal, ((f.std_labels, 1),)))


def _h2_nodes(slot):
    fam, n = _ambient(slot["within"])
    top = _whole_node(fam, n)
    nodes = set(descendants(top, include_self=not slot.get("proper", False)))
    d = FactorSpec(fam, n).std_dim
    nodes.add(Node(fam, n, (), (((), d),)))
    for text in slot.get("exclude", []):
        try:
            nodes.discard(canonical(node_from_spec(parse_pair(f"g={slot['within']}; {text}"))))
        except (ParseError, EmbeddingError) as e:
            raise GoldenError(f"bad exclusion {text!r}: {e}") from None
    return sorted(nodes)


def instances(row):
    """Every concrete pair a golden row stands for."""
    fam, n = _ambient(row["g"])
    try:
        h = parse_algebra(row["fixed"]["h"])
        v = parse_module(row["fixed"]["V"])
    except ParseError as e:
        raise GoldenError(f"golden row {row['id']}: {e}") from None
    w = row["witness"]
    common = dict(
        row_id=row["id"],
        fixed_rank=h.rank,
        equalities=tuple(w["equalities"]),
        inequalities=tuple(w["inequalities"]),
        rest_zero=bool(w.get("rest_zero")),
    )
    if not row.get("h2"):
        return [Instance(spec=EmbeddingSpec(h, v, fam), **common)]
    out = []
    k = len(h.factors)
    for node in _h2_nodes(row["h2"]):
        if node.factors:
            s2 = spec_from_node(node)
            spec = EmbeddingSpec(AlgebraSpec(list(h.factors) + list(s2.h.factors)), dsum(v, _shift(s2.V, k)), fam)
        else:
            spec = EmbeddingSpec(h, dsum(v, Triv(node.blocks[0][1])), fam)
        out.append(Instance(spec=spec, **common))
    for inst in out:
        if inst.spec.g_size != n:
            raise GoldenError(f"golden row {row['id']}: V does not have the size of {row['g']}")
    return out


def _x_covector(h, names, form):
    """A linear form in natural coordinates, rewritten in simple-value coordinates."""
    cov = [mpq(0)] * h.internal.dim
    for name, coef in form.items():
        if name not in names:
            raise GoldenError(f"unknown coordinate {name!r}")
        cov = la.add(cov, la.scale(mpq(coef), names[name]))
    r = h.rank
    basis = [h.internal.point_from_values([mpq(int(i == j)) for i in range(r)]) for j in range(r)]
    return tuple(la.dot(cov, p) for p in basis)


def golden_cone(inst):
    """(rays, equalities, inequalities) of the golden witness in x-coordinates."""
    h = inst.spec.h
    names = dict(h.coordinate_covectors())
    r = h.rank
    eqs = [_x_covector(h, names, f) for f in inst.equalities]
    ineqs = [_x_covector(h, names, f) for f in inst.inequalities]
    if inst.rest_zero:
        eqs += [tuple(mpq(int(i == j)) for i in range(r)) for j in range(inst.fixed_rank, r)]
    eqs, ineqs = cones.normalize_hrep(r, eqs, ineqs)
    return cones.extreme_rays(r, eqs, ineqs), tuple(eqs), tuple(ineqs)


# ------------------------------------------------------------ comparison


def _ambients(bounds, coverage):
    out = []
    for fam, (lo, hi) in sorted(bounds.items()):
        if fam not in coverage:
            raise GoldenError(f"golden file does not cover {fam}")
        clo, chi = coverage[fam]
        if lo > hi:
            continue
        if lo < clo or hi > chi:
            raise GoldenError(f"bounds {fam}:{lo}..{hi} exceed golden coverage {fam}:{clo}..{chi}")
        out.extend((fam, n) for n in range(lo, hi + 1))
    return out


def verify_table1(bounds=None, golden=None, threads=None):
    """Compare ``classify`` with the golden rows for every ambient in ``bounds``.

    ``bounds`` maps a family to an inclusive (lo, hi) size range; ``golden`` is
    a path or a preloaded (header, rows) pair.
    """
    bounds = DEFAULT_BOUNDS if bounds is None else bounds
    header, rows = golden if isinstance(golden, tuple) else load_golden(golden)
    report = DiffReport()
    for g in _ambients(bounds, header["coverage"]):
        label = f"{g[0]}:{g[1]}"
        found = {r.node: r for r in classify(g, threads=threads)}
        expected = {}
        for row in rows:
            if _ambient(row["g"]) != g:
                continue
            for inst in instances(row):
                key = canonical(node_from_spec(inst.spec))
                expected.setdefault(key, inst)
                text = f"h={inst.spec.h}; V={render(inst.spec.V)}"
                report.checked += 1
                if key not in found:
                    report.missing.append((inst.row_id, text))
                    continue
                why = _witness_mismatch(inst)
                if why:
                    report.mismatched.append((inst.row_id, text, why))
        for key, r in found.items():
            if key not in expected:
                s = r.spec
                report.extra.append((label, f"h={s.h}; V={render(s.V)}"))
    return report


def _witness_mismatch(inst):
    verdict = decide(inst.spec)
    if verdict.kind is not VerdictKind.DOMINATED_WITH_WITNESS:
        return f"verdict is {verdict.kind.value}"
    rays, eqs, ineqs = golden_cone(inst)
    w = verdict.witness
    if not cones.same_cone(rays, (eqs, ineqs), w.rays, (w.equalities, w.inequalities)):
        return f"witness cone differs: computed rays {[list(map(str, r)) for r in w.rays]}"
    return None
