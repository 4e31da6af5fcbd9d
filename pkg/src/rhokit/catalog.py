"""Maximal semisimple subalgebras of classical algebras and the parametric families.

``maximal_reducible`` and ``maximal_irreducible_nonsimple`` transcribe
Dynkin's lists (reducible action, and non-simple irreducible action on the
defining module).  ``proposition_family`` builds the embedding of each named
family; a factor that degenerates (sl_1, so_1, so_2, sp_0) contributes
trivial summands to the module and no ideal to h.
"""

from dataclasses import dataclass
from typing import Callable

from .embedding import (
    AlgebraSpec,
    Dual,
    EmbeddingError,
    EmbeddingSpec,
    FactorSpec,
    Irrep,
    Std,
    Triv,
    dsum,
    render,
    tensor,
)


class CatalogError(ValueError):
    pass


CLASSICAL = ("sl", "so", "sp")


@dataclass(frozen=True)
class CatalogEntry:
    ambient: tuple
    subalgebra: str
    build: Callable[[], EmbeddingSpec]

    def spec(self):
        return self.build()


def _defining_dim(kind, n):
    return 2 * n if kind == "sp" else n


def _semisimple(family, n):
    """True when family:n is a nonzero semisimple algebra."""
    return {"sl": n >= 2, "so": n >= 3, "sp": n >= 1}[family]


def pair(ambient, blocks):
    """Assemble an EmbeddingSpec from blocks.

    Each block is (factors, builder): ``factors`` a list of (family, n) and
    ``builder`` maps the 1-based indices of those factors to a module
    expression.  Degenerate classical factors must be handled by the caller.
    """
    factors = []
    terms = []
    for fs, builder in blocks:
        idx = list(range(len(factors) + 1, len(factors) + len(fs) + 1))
        factors.extend(FactorSpec(*f) if isinstance(f, tuple) else FactorSpec(f) for f in fs)
        terms.append(builder(*idx))
    if not factors:
        raise CatalogError("the subalgebra is zero")
    return EmbeddingSpec(AlgebraSpec(factors), terms[0] if len(terms) == 1 else dsum(*terms), ambient)


def _std_block(family, n, dual_too=False):
    """The defining module of family:n, or trivial summands if it degenerates."""
    if _semisimple(family, n):
        if dual_too:
            return ([(family, n)], lambda i: dsum(Std(i), Dual(Std(i))))
        return ([(family, n)], lambda i: Std(i))
    d = _defining_dim(family, n) * (2 if dual_too else 1)
    if d == 0:
        return None
    return ([], lambda: Triv(d))


def _sum_of(ambient, parts, rest=0):
    """Direct sum of defining modules of classical factors plus ``rest`` trivial dims."""
    blocks = [b for b in (_std_block(f, n) for f, n in parts) if b is not None]
    if rest:
        blocks.append(([], lambda: Triv(rest)))
    return pair(ambient, _merge_triv(blocks))


def _merge_triv(blocks):
    total = 0
    out = []
    for fs, b in blocks:
        if fs:
            out.append((fs, b))
        else:
            total += b().dim
    if total:
        out.append(([], lambda: Triv(total)))
    return out


def _entry(ambient, label, build):
    return CatalogEntry(ambient, label, build)


def _check_g(g):
    kind, n = g
    if kind not in CLASSICAL:
        raise CatalogError(f"{kind} is not a classical family")
    if not _semisimple(kind, n):
        raise CatalogError(f"{kind}:{n} is not semisimple")
    return kind, n


def maximal_reducible(g):
    kind, n = _check_g(g)
    out = []
    if kind == "sl":
        if n >= 3:
            out.append(_entry(g, f"sl:{n - 1}", lambda: _sum_of("sl", [("sl", n - 1)], 1)))
        for k in range(2, n // 2 + 1):
            if n - k >= 2:
                out.append(_entry(g, f"sl:{n - k} + sl:{k}", lambda k=k: _sum_of("sl", [("sl", n - k), ("sl", k)])))
    elif kind == "sp":
        if n >= 2:
            out.append(_entry(g, f"sl:{n}", lambda: pair("sp", [_std_block("sl", n, True)])))
        for k in range(1, n // 2 + 1):
            out.append(_entry(g, f"sp:{n - k} + sp:{k}", lambda k=k: _sum_of("sp", [("sp", n - k), ("sp", k)])))
    elif n % 2:
        m = (n - 1) // 2
        if 2 * m - 1 >= 3:
            out.append(_entry(g, f"so:{2 * m - 1}", lambda: _sum_of("so", [("so", 2 * m - 1)], 2)))
        for k in range(2, m + 1):
            odd = 2 * (m - k) + 1
            label = f"so:{2 * k} + so:{odd}" if odd >= 3 else f"so:{2 * k}"
            out.append(_entry(g, label, lambda k=k, odd=odd: _sum_of("so", [("so", 2 * k), ("so", odd)])))
    else:
        m = n // 2
        if 2 * m - 2 >= 3:
            out.append(_entry(g, f"so:{2 * m - 2}", lambda: _sum_of("so", [("so", 2 * m - 2)], 2)))
        if m >= 2:
            out.append(_entry(g, f"sl:{m}", lambda: pair("so", [_std_block("sl", m, True)])))
        for k in range(2, m // 2 + 1):
            if m - k >= 2:
                out.append(
                    _entry(g, f"so:{2 * (m - k)} + so:{2 * k}", lambda k=k: _sum_of("so", [("so", 2 * (m - k)), ("so", 2 * k)]))
                )
    return out


def _tensor_pair(ambient, f1, f2):
    return pair(ambient, [([f1, f2], lambda i, j: tensor(Std(i), Std(j)))])


def maximal_irreducible_nonsimple(g):
    kind, n = _check_g(g)
    out = []
    if kind == "sl":
        for p in range(2, n + 1):
            q, r = divmod(n, p)
            if r == 0 and q >= p:
                out.append(_entry(g, f"sl:{p} (x) sl:{q}", lambda p=p, q=q: _tensor_pair("sl", ("sl", p), ("sl", q))))
    elif kind == "so":
        for p in range(3, n + 1):
            q, r = divmod(n, p)
            if r == 0 and q >= p:
                out.append(_entry(g, f"so:{p} (x) so:{q}", lambda p=p, q=q: _tensor_pair("so", ("so", p), ("so", q))))
        if n % 4 == 0:
            for p in range(2, n // 4 + 1):
                q, r = divmod(n // 4, p)
                if r == 0 and q >= p:
                    out.append(_entry(g, f"sp:{p} (x) sp:{q}", lambda p=p, q=q: _tensor_pair("so", ("sp", p), ("sp", q))))
    else:
        for p in range(2, n + 1):
            q, r = divmod(n, p)
            if r == 0 and q >= 3:
                out.append(_entry(g, f"sp:{p} (x) so:{q}", lambda p=p, q=q: _tensor_pair("sp", ("sp", p), ("so", q))))
    return out


# ------------------------------------------------------------ families

def _need(cond, msg):
    if not cond:
        raise CatalogError(msg)


def _red2(kind, p, q):
    _need(p >= q >= 1, "needs p >= q >= 1")
    return _sum_of(kind, [(kind, p), (kind, q)])


def _red3(kind, n, parts):
    parts = sorted(parts, reverse=True)
    _need(parts and parts[-1] >= 1 and sum(parts) <= n, "needs parts >= 1 with sum <= n")
    rest = _defining_dim(kind, n - sum(parts))
    return _sum_of(kind, [(kind, k) for k in parts], rest)


def _incl(i, p):
    _need(p >= 1, "needs p >= 1")
    if i == 1:
        _need(p >= 3, "so_p needs p >= 3")
        return _sum_of("sl", [("so", p)])
    if i == 2:
        return _sum_of("sl", [("sp", p)])
    _need(p >= 2, "sl_p needs p >= 2")
    return pair("so" if i == 3 else "sp", [_std_block("sl", p, True)])


def _tens(i, p, q):
    if i in (1, 2):
        _need(p > 1 and q > 1, "needs p, q > 1")
        fam = "sl" if i == 1 else "so"
        _need(fam == "sl" or (p >= 3 and q >= 3), "so_2 is not semisimple")
        return _tensor_pair(fam, (fam, p), (fam, q))
    _need(p >= 1 and q > 1, "needs p >= 1, q > 1")
    if i == 3:
        return _tensor_pair("so", ("sp", p), ("sp", q))
    _need(q >= 3, "so_q needs q >= 3")
    return _tensor_pair("sp", ("sp", p), ("so", q))


def _redu(i, p, q=None):
    if i == 4:
        _need(p >= 2, "needs p >= 2")
        return pair("so", [_std_block("sp", p, True)])
    _need(p >= 1 and q >= 1, "needs p, q >= 1")
    if i == 1:
        blocks = [_std_block("sp", p), _std_block("sl", q)]
        return pair("sl", _merge_triv([b for b in blocks if b]))
    if i == 2:
        blocks = [_std_block("sl", p, True), _std_block("so", q)]
        return pair("so", _merge_triv([b for b in blocks if b]))
    blocks = [_std_block("sl", p, True), _std_block("sp", q)]
    return pair("sp", _merge_triv([b for b in blocks if b]))


def _redex(i, q):
    _need(q >= 1, "needs q >= 1")
    head = (["g2"], lambda a: Std(a)) if i == 1 else ([("so", 7)], lambda a: Irrep(a, (0, 0, 1)))
    return pair("so", _merge_triv([head, _std_block("so", q)]))


def _khcomp(kind, p, q):
    _need(p >= q >= 1, "needs p >= q >= 1")
    _need(_semisimple(kind, q), f"{kind}:{q} is not semisimple")
    return _sum_of(kind, [(kind, q)], _defining_dim(kind, p))


def _si(factor, labels, ambient):
    f = FactorSpec(*factor) if isinstance(factor, tuple) else FactorSpec(factor)
    spec = EmbeddingSpec(AlgebraSpec([f]), Irrep(1, tuple(labels)), ambient)
    return spec.validate()


FAMILIES = {
    "red2.1": lambda p, q: _red2("sl", p, q),
    "red2.2": lambda p, q: _red2("so", p, q),
    "red2.3": lambda p, q: _red2("sp", p, q),
    "incl.1": lambda p: _incl(1, p),
    "incl.2": lambda p: _incl(2, p),
    "incl.3": lambda p: _incl(3, p),
    "incl.4": lambda p: _incl(4, p),
    "tens.1": lambda p, q: _tens(1, p, q),
    "tens.2": lambda p, q: _tens(2, p, q),
    "tens.3": lambda p, q: _tens(3, p, q),
    "tens.4": lambda p, q: _tens(4, p, q),
    "si": _si,
    "red3.1": lambda n, parts: _red3("sl", n, parts),
    "red3.2": lambda n, parts: _red3("so", n, parts),
    "red3.3": lambda n, parts: _red3("sp", n, parts),
    "redu.1": lambda p, q: _redu(1, p, q),
    "redu.2": lambda p, q: _redu(2, p, q),
    "redu.3": lambda p, q: _redu(3, p, q),
    "redu.4": lambda p: _redu(4, p),
    "redex.1": lambda q: _redex(1, q),
    "redex.2": lambda q: _redex(2, q),
    "khcomp.1": lambda p, q: _khcomp("sl", p, q),
    "khcomp.2": lambda p, q: _khcomp("so", p, q),
    "khcomp.3": lambda p, q: _khcomp("sp", p, q),
}


def proposition_family(family_id, **params):
    """EmbeddingSpec for a named family, e.g. proposition_family("redex.1", q=5)."""
    if family_id not in FAMILIES:
        raise CatalogError(f"unknown family {family_id!r}; known: {', '.join(FAMILIES)}")
    try:
        spec = FAMILIES[family_id](**params)
    except TypeError as e:
        raise CatalogError(f"{family_id}: {e}") from None
    try:
        return spec.validate()
    except EmbeddingError as e:
        raise CatalogError(f"{family_id}: {e}") from None


def describe(spec):
    return f"g={spec.g_label}; h={spec.h}; V={render(spec.V)}"
