"""Module expressions for semisimple h and the ambient weight multisets of sl, so, sp.

User-facing factors are named the classical way (sl:n, so:n, sp:n, g2, ...).
Small orthogonal and symplectic algebras are normalized to isomorphic types
(so_3 = sl_2, so_4 = sl_2 + sl_2, so_5 = sp_2, so_6 = sl_4, sp_1 = sl_2), so a
single user factor may own one or two internal simple factors.  Each user
factor also records its natural coordinates (a_1, a_2, ...) as covectors on
the internal ``a``, so points and witness descriptions can be written the
usual way.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from gmpy2 import mpq

from . import linalg as la
from .linalg import ZERO
from .roots import SemisimpleAlgebra, build_root_system, dual_permutation
from .weights import WeightMultiset, highest_weights, product_weights

HALF = mpq(1, 2)


class EmbeddingError(ValueError):
    pass


# ---------------------------------------------------------------- factors

EXCEPTIONAL_STD = {"g2": ("G2", (1, 0)), "f4": ("F4", (0, 0, 0, 1)), "e6": ("E6", (1, 0, 0, 0, 0, 0)),
                   "e7": ("E7", (0, 0, 0, 0, 0, 0, 1)), "e8": ("E8", (0, 0, 0, 0, 0, 0, 0, 1))}


def _eps(n, i):
    v = [ZERO] * n
    v[i] = mpq(1)
    return v


@dataclass(frozen=True)
class FactorSpec:
    """A user-level simple factor such as ("so", 7) or ("g2", None)."""

    family: str
    n: int = None

    def __post_init__(self):
        fam = self.family
        if fam in EXCEPTIONAL_STD:
            return
        if fam not in ("sl", "so", "sp"):
            raise EmbeddingError(f"unknown algebra family {fam!r}")
        n = self.n
        if n is None:
            raise EmbeddingError(f"{fam} needs a size")
        if fam == "sl" and n < 2:
            raise EmbeddingError("sl:n needs n >= 2")
        if fam == "sp" and n < 1:
            raise EmbeddingError("sp:n needs n >= 1")
        if fam == "so" and n < 3:
            raise EmbeddingError("so:1 and so:2 are not semisimple; use triv:k in the module instead")

    def __str__(self):
        return self.family if self.n is None else f"{self.family}:{self.n}"

    @cached_property
    def internal(self):
        """Internal simple factors as (kind, rank) pairs."""
        fam, n = self.family, self.n
        if fam in EXCEPTIONAL_STD:
            k = EXCEPTIONAL_STD[fam][0]
            return ((k, build_root_system(k).rank),)
        if fam == "sl":
            return (("A", n - 1),)
        if fam == "sp":
            return (("A", 1),) if n == 1 else (("C", n),)
        small = {3: (("A", 1),), 4: (("A", 1), ("A", 1)), 5: (("C", 2),), 6: (("A", 3),)}
        if n in small:
            return small[n]
        return (("B", (n - 1) // 2),) if n % 2 else (("D", n // 2),)

    @cached_property
    def std_labels(self):
        """Highest weight (per internal factor) of the defining module."""
        fam, n = self.family, self.n
        if fam in EXCEPTIONAL_STD:
            return (EXCEPTIONAL_STD[fam][1],)
        if fam == "so" and n == 3:
            return ((2,),)
        if fam == "so" and n == 4:
            return ((1,), (1,))
        if fam == "so" and n == 5:
            return ((0, 1),)
        if fam == "so" and n == 6:
            return ((0, 1, 0),)
        rank = self.internal[0][1]
        return (tuple([1] + [0] * (rank - 1)),)

    @cached_property
    def std_dim(self):
        fam, n = self.family, self.n
        if fam == "sp":
            return 2 * n
        if fam in ("sl", "so"):
            return n
        return {"g2": 7, "f4": 26, "e6": 27, "e7": 56, "e8": 248}[fam]

    @cached_property
    def coordinates(self):
        """Natural coordinates a_i of this factor as covectors on the internal a.

        Returns a list of covectors on the concatenated epsilon space of the
        internal factors of this user factor.
        """
        fam, n = self.family, self.n
        dims = [build_root_system(*t).space.dim for t in self.internal]
        total = sum(dims)
        if fam == "sp" and n == 1:
            return [la.vec(_eps(2, 0))]
        if fam == "so" and n == 3:
            return [la.vec([1, -1])]
        if fam == "so" and n == 4:
            return [la.vec([HALF, -HALF, HALF, -HALF]), la.vec([HALF, -HALF, -HALF, HALF])]
        if fam == "so" and n == 5:
            return [la.vec([1, 1]), la.vec([1, -1])]
        if fam == "so" and n == 6:
            d = [la.vec(_eps(4, i)) for i in range(4)]
            return [la.add(d[0], d[1]), la.add(d[0], d[2]), la.add(d[0], d[3])]
        return [la.vec(_eps(total, i)) for i in range(total)]

    def coordinate_names(self, letter):
        return [f"{letter}{i + 1}" for i in range(len(self.coordinates))]


def factor_from_internal(kind, rank):
    """The user-level name of an internal simple type."""
    if kind == "A":
        return FactorSpec("sl", rank + 1)
    if kind == "C":
        return FactorSpec("sp", rank)
    if kind == "B":
        return FactorSpec("so", 2 * rank + 1)
    if kind == "D":
        return FactorSpec("so", 2 * rank)
    return FactorSpec(kind.lower())


class AlgebraSpec:
    """A semisimple algebra given by user-level factors."""

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise EmbeddingError("empty algebra")
        internal = []
        self.owner = []
        for i, f in enumerate(self.factors):
            for t in f.internal:
                self.owner.append(i)
                internal.append(build_root_system(*t))
        self.internal = SemisimpleAlgebra(internal)
        self.internal_index = [[k for k, o in enumerate(self.owner) if o == i] for i in range(len(self.factors))]

    def __repr__(self):
        return "+".join(str(f) for f in self.factors)

    def __eq__(self, other):
        return isinstance(other, AlgebraSpec) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    @property
    def rank(self):
        return self.internal.rank

    def coordinate_covectors(self):
        """(name, covector on the full internal a) for every natural coordinate."""
        out = []
        letters = "abcdefghijklmnopqrstuvwxyz"
        offs = []
        o = 0
        for d in self.internal.dims:
            offs.append(o)
            o += d
        for i, f in enumerate(self.factors):
            ks = self.internal_index[i]
            start = offs[ks[0]]
            width = sum(self.internal.dims[k] for k in ks)
            for name, cov in zip(f.coordinate_names(letters[i % 26]), f.coordinates):
                full = [ZERO] * self.internal.dim
                full[start : start + width] = cov
                out.append((name, tuple(full)))
        return out

    def point_from_coordinates(self, coords):
        """Internal point whose natural coordinates are ``coords`` (flat list)."""
        covs = [c for _, c in self.coordinate_covectors()]
        coords = la.vec(coords)
        if len(coords) != len(covs):
            raise EmbeddingError(f"expected {len(covs)} coordinates, got {len(coords)}")
        h = self.internal
        basis = []
        for k, f in enumerate(h.factors):
            for b in f.space.basis:
                parts = [tuple([ZERO] * g.space.dim) for g in h.factors]
                parts[k] = b
                basis.append(h.join(parts))
        rows = [[la.dot(c, b) for b in basis] + [v] for c, v in zip(covs, coords)]
        m, piv = la.rref(rows, len(basis) + 1)
        if len(basis) in piv:
            raise EmbeddingError("coordinates violate the defining constraints of a")
        y = [ZERO] * len(basis)
        for i, pc in enumerate(piv):
            y[pc] = m[i][len(basis)]
        point = [ZERO] * h.dim
        for yk, b in zip(y, basis):
            for i, x in enumerate(b):
                point[i] += yk * x
        return tuple(point)

    def coordinates_of(self, point):
        return [la.dot(c, point) for _, c in self.coordinate_covectors()]


def algebra(*factors):
    """Build an AlgebraSpec from ("sl", 3), "g2", FactorSpec, ..."""
    out = []
    for f in factors:
        if isinstance(f, FactorSpec):
            out.append(f)
        elif isinstance(f, str):
            out.append(FactorSpec(f))
        else:
            out.append(FactorSpec(*f))
    return AlgebraSpec(out)


# ---------------------------------------------------------------- modules

class ModuleExpr:
    pass


@dataclass(frozen=True)
class Std(ModuleExpr):
    factor: int


@dataclass(frozen=True)
class Irrep(ModuleExpr):
    factor: int
    labels: tuple


@dataclass(frozen=True)
class Triv(ModuleExpr):
    dim: int


@dataclass(frozen=True)
class Dual(ModuleExpr):
    inner: ModuleExpr


@dataclass(frozen=True)
class DirectSum(ModuleExpr):
    terms: tuple


@dataclass(frozen=True)
class OuterTensor(ModuleExpr):
    terms: tuple


def dsum(*terms):
    return DirectSum(tuple(terms))


def tensor(*terms):
    return OuterTensor(tuple(terms))


def support(v):
    """User factor indices (1-based) a module expression acts through."""
    if isinstance(v, (Std, Irrep)):
        return {v.factor}
    if isinstance(v, Triv):
        return set()
    if isinstance(v, Dual):
        return support(v.inner)
    if isinstance(v, (DirectSum, OuterTensor)):
        out = set()
        for t in v.terms:
            out |= support(t)
        return out
    raise EmbeddingError(f"malformed module expression: {v!r}")


def _check(h, v):
    if isinstance(v, (Std, Irrep)):
        if not 1 <= v.factor <= len(h.factors):
            raise EmbeddingError(f"factor index {v.factor} out of range 1..{len(h.factors)}")
        if isinstance(v, Irrep):
            need = sum(h.internal.factors[k].rank for k in h.internal_index[v.factor - 1])
            if len(v.labels) != need or any(int(x) != x or x < 0 for x in v.labels):
                raise EmbeddingError(f"irrep{v.factor} needs {need} nonnegative integer labels")
    elif isinstance(v, Triv):
        if v.dim < 1:
            raise EmbeddingError("triv:k needs k >= 1")
    elif isinstance(v, Dual):
        _check(h, v.inner)
    elif isinstance(v, DirectSum):
        if not v.terms:
            raise EmbeddingError("empty direct sum")
        for t in v.terms:
            _check(h, t)
    elif isinstance(v, OuterTensor):
        if not v.terms:
            raise EmbeddingError("empty tensor product")
        seen = set()
        for t in v.terms:
            _check(h, t)
            s = support(t)
            if s & seen:
                raise EmbeddingError("tensor factors must act through disjoint factors")
            seen |= s
    else:
        raise EmbeddingError(f"malformed module expression: {v!r}")


def _atom_labels(h, v):
    """Full label tuple (one entry per internal factor) of an irreducible atom."""
    labels = [tuple([0] * f.rank) for f in h.internal.factors]
    ks = h.internal_index[v.factor - 1]
    if isinstance(v, Std):
        for k, lab in zip(ks, h.factors[v.factor - 1].std_labels):
            labels[k] = tuple(lab)
    else:
        flat = list(v.labels)
        for k in ks:
            r = h.internal.factors[k].rank
            labels[k] = tuple(int(x) for x in flat[:r])
            flat = flat[r:]
    return tuple(labels)


def _weights(h, v):
    if isinstance(v, (Std, Irrep)):
        return Counter(product_weights(h.internal.factors, _atom_labels(h, v)))
    if isinstance(v, Triv):
        return Counter({tuple([ZERO] * h.rank): v.dim})
    if isinstance(v, Dual):
        return Counter({tuple(-x for x in w): m for w, m in _weights(h, v.inner).items()})
    if isinstance(v, DirectSum):
        out = Counter()
        for t in v.terms:
            out.update(_weights(h, t))
        return out
    if isinstance(v, OuterTensor):
        acc = Counter({tuple([ZERO] * h.rank): 1})
        for t in v.terms:
            ws = _weights(h, t)
            nxt = Counter()
            for a, m in acc.items():
                for b, k in ws.items():
                    nxt[tuple(x + y for x, y in zip(a, b))] += m * k
            acc = nxt
        return acc
    raise EmbeddingError(f"malformed module expression: {v!r}")


def module_weights(h, v):
    _check(h, v)
    return WeightMultiset(h.internal, _weights(h, v))


# ---------------------------------------------------------------- forms

class FormType(Enum):
    NONE = "none"
    SYMMETRIC = "symmetric"
    SKEW = "skew"
    BOTH = "symmetric+skew"


def _irrep_form(factors, labels):
    """None, 'symmetric' or 'skew' for an irreducible outer tensor product."""
    parity = 0
    for f, lab in zip(factors, labels):
        perm = dual_permutation(f.kind, f.rank)
        if tuple(lab[perm[i]] for i in range(f.rank)) != tuple(lab):
            return None
        c = f.dynkin_to_root(lab)
        for a in f.positive_root_coeffs:
            parity += 2 * f.form(c, a) / f.form(a, a)
    return "symmetric" if int(parity) % 2 == 0 else "skew"


def _dual_labels(factors, labels):
    out = []
    for f, lab in zip(factors, labels):
        perm = dual_permutation(f.kind, f.rank)
        out.append(tuple(lab[perm[i]] for i in range(f.rank)))
    return tuple(out)


def form_admitted(factors, decomposition):
    """(symmetric?, skew?) for a module given by its irreducible decomposition."""
    sym = skew = True
    for lab, m in decomposition.items():
        kind = _irrep_form(factors, lab)
        if kind is None:
            if decomposition.get(_dual_labels(factors, lab), 0) != m:
                return False, False
        elif kind == "symmetric":
            skew = skew and m % 2 == 0
        else:
            sym = sym and m % 2 == 0
    return sym, skew


def form_type(h, v):
    dec = highest_weights(h.internal, module_weights(h, v))
    sym, skew = form_admitted(h.internal.factors, dec)
    if sym and skew:
        return FormType.BOTH
    if sym:
        return FormType.SYMMETRIC
    if skew:
        return FormType.SKEW
    return FormType.NONE


# ---------------------------------------------------------------- ambient

AMBIENTS = ("sl", "so", "sp")


@dataclass(frozen=True, eq=False)
class EmbeddingSpec:
    h: AlgebraSpec
    V: ModuleExpr
    ambient: str

    def __post_init__(self):
        if self.ambient not in AMBIENTS:
            raise EmbeddingError(f"ambient must be one of {AMBIENTS}")

    @cached_property
    def weights(self):
        return module_weights(self.h, self.V)

    @property
    def dim_v(self):
        return self.weights.total()

    @property
    def g_size(self):
        return self.dim_v // 2 if self.ambient == "sp" else self.dim_v

    @property
    def g_label(self):
        return f"{self.ambient}:{self.g_size}"

    def validate(self):
        w = self.weights
        if w.total() < 2:
            raise EmbeddingError("dim V must be at least 2")
        if self.ambient == "sl":
            return self
        dec = highest_weights(self.h.internal, w)
        sym, skew = form_admitted(self.h.internal.factors, dec)
        if self.ambient == "so" and not sym:
            raise EmbeddingError("V carries no invariant symmetric form; it does not embed h in so")
        if self.ambient == "sp" and not skew:
            raise EmbeddingError("V carries no invariant skew form; it does not embed h in sp")
        return self


def ambient_weights(ambient, module, rank):
    """Weights of sl(V), so(V) or sp(V) from the weights of V (a Counter)."""
    items = list(module.items())
    zero = tuple([ZERO] * rank)
    out = Counter()
    if ambient == "sl":
        for u, mu in items:
            for v, mv in items:
                if u != v:
                    out[tuple(a - b for a, b in zip(u, v))] += mu * mv
            out[zero] += mu * (mu - 1)
        out[zero] += sum(module.values()) - 1
    else:
        for i, (u, mu) in enumerate(items):
            for v, mv in items[i + 1 :]:
                out[tuple(a + b for a, b in zip(u, v))] += mu * mv
            same = mu * (mu - 1) // 2 if ambient == "so" else mu * (mu + 1) // 2
            if same:
                out[tuple(2 * a for a in u)] += same
    return out


def ambient_weight_multiset(spec):
    """Weights of the ambient sl(V), so(V) or sp(V) as an h-module."""
    spec.validate()
    return WeightMultiset(spec.h.internal, ambient_weights(spec.ambient, spec.weights.entries, spec.h.rank))


def adjoint_weight_multiset(h):
    """Weights of the adjoint module of h (root coordinates)."""
    out = Counter()
    o = 0
    for f in h.internal.factors:
        for c in f.positive_root_coeffs:
            w = [ZERO] * h.rank
            w[o : o + f.rank] = c
            out[tuple(w)] += 1
            out[tuple(-x for x in w)] += 1
        o += f.rank
    out[tuple([ZERO] * h.rank)] += h.rank
    return WeightMultiset(h.internal, out)


def check_adjoint_contained(spec):
    """Debug check: the roots of h occur in the ambient multiset."""
    amb = ambient_weight_multiset(spec).entries
    adj = adjoint_weight_multiset(spec.h).entries
    return all(amb.get(w, 0) >= m for w, m in adj.items())


# ---------------------------------------------------------------- printing

def render(v):
    if isinstance(v, Std):
        return f"std{v.factor}"
    if isinstance(v, Irrep):
        return f"irrep{v.factor}[" + ",".join(str(int(x)) for x in v.labels) + "]"
    if isinstance(v, Triv):
        return f"triv:{v.dim}"
    if isinstance(v, Dual):
        return f"dual({render(v.inner)})"
    if isinstance(v, DirectSum):
        return " (+) ".join(render(t) for t in v.terms)
    if isinstance(v, OuterTensor):
        parts = []
        for t in v.terms:
            if isinstance(t, DirectSum) and len(t.terms) > 1:
                raise EmbeddingError("a direct sum inside a tensor product has no textual form")
            parts.append(render(t))
        return " (x) ".join(parts)
    raise EmbeddingError(f"malformed module expression: {v!r}")


def render_pair(spec):
    return f"g={spec.g_label}; h={spec.h}; V={render(spec.V)}"
