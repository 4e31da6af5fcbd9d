"""Dominant weights, weight systems and the comparison function f(lambda; Y).

Weights of a single simple factor are handled in two coordinate systems:
Dynkin labels (integer tuples, used for Weyl orbits and dominance) and
simple-root coordinates (rational tuples, used everywhere a weight is
evaluated, since alpha_j(Y) are the natural coordinates of the chamber).
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from gmpy2 import mpq

from . import linalg as la
from .linalg import ZERO
from .roots import RootSystemData, build_root_system


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class DominantWeight:
    factor_index: int
    coeffs: tuple

    def __post_init__(self):
        if any(int(c) != c or c < 0 for c in self.coeffs):
            raise WeightError(f"not a dominant weight: {self.coeffs}")


class WeightMultiset:
    """Finite multiset of weights on ``a``, stored in simple-root coordinates.

    ``algebra`` is a RootSystemData or SemisimpleAlgebra; keys are tuples of
    mpq of length rank.  Zero-multiplicity entries are never stored.
    """

    __slots__ = ("algebra", "entries")

    def __init__(self, algebra, entries=None):
        self.algebra = algebra
        c = Counter()
        for w, m in (entries or {}).items():
            if m:
                c[tuple(mpq(x) for x in w)] += m
        self.entries = c

    def __repr__(self):
        return f"WeightMultiset({len(self.entries)} weights, dim {self.total()})"

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self.entries == other.entries

    def total(self):
        return sum(self.entries.values())

    def items(self):
        return self.entries.items()

    def __add__(self, other):
        out = Counter(self.entries)
        out.update(other.entries)
        return WeightMultiset(self.algebra, out)

    def negate(self):
        return WeightMultiset(self.algebra, {tuple(-x for x in w): m for w, m in self.entries.items()})

    def is_self_dual(self):
        return all(self.entries.get(tuple(-x for x in w), 0) == m for w, m in self.entries.items())

    def covector_entries(self):
        """Entries keyed by epsilon-coordinate covectors."""
        return {self.algebra.covector(w): m for w, m in self.entries.items()}

    def values(self, point):
        x = self.algebra.simple_values(point)
        return [(la.dot(w, x), m) for w, m in self.entries.items()]


def _factor(factor):
    if isinstance(factor, RootSystemData):
        return factor
    if isinstance(factor, tuple):
        return build_root_system(*factor)
    raise WeightError(f"not a simple factor: {factor!r}")


def _labels(lam, rank):
    coeffs = lam.coeffs if isinstance(lam, DominantWeight) else tuple(lam)
    if len(coeffs) != rank:
        raise WeightError(f"expected {rank} Dynkin labels, got {len(coeffs)}")
    if any(int(c) != c or c < 0 for c in coeffs):
        raise WeightError(f"not dominant: {coeffs}")
    return tuple(int(c) for c in coeffs)


def dominance_leq(factor, mu, lam):
    """True iff lam - mu is a nonnegative integer combination of simple roots."""
    if isinstance(mu, DominantWeight) and isinstance(lam, DominantWeight):
        if mu.factor_index != lam.factor_index:
            raise WeightError("weights live on different factors")
    f = _factor(factor)
    d = la.sub(f.dynkin_to_root(_labels(lam, f.rank)), f.dynkin_to_root(_labels(mu, f.rank)))
    return all(x.denominator == 1 and x >= 0 for x in d)


def _reflect_labels(f, i, labels):
    m = labels[i]
    if m == 0:
        return labels
    row = f.cartan[i]
    return tuple(labels[j] - m * int(row[j]) for j in range(f.rank))


def orbit_labels(f, labels):
    seen = {labels}
    stack = [labels]
    while stack:
        v = stack.pop()
        for i in range(f.rank):
            if v[i] != 0:
                w = _reflect_labels(f, i, v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


def dominant_labels(f, labels):
    v = tuple(labels)
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            return v
        v = _reflect_labels(f, i, v)


@lru_cache(maxsize=None)
def _positive_root_labels(f):
    return [tuple(int(x) for x in f.root_to_dynkin(c)) for c in f.positive_root_coeffs]


@lru_cache(maxsize=None)
def _dominant_multiplicities(f, lam):
    """Freudenthal multiplicities of the dominant weights of V(lam)."""
    proots = _positive_root_labels(f)
    # dominant weights below lam: positive-root steps between dominant weights suffice
    level = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in proots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) >= 0 and nu not in level:
                    level[nu] = None
                    nxt.append(nu)
        frontier = nxt
    lam_root = f.dynkin_to_root(lam)
    for mu in level:
        level[mu] = sum(lam_root) - sum(f.dynkin_to_root(mu))
    rho = f.rho_root_coords()
    rho = tuple(x / 2 for x in rho)
    root_coords = f.positive_root_coeffs

    def norm_shift(c):
        v = la.add(c, rho)
        return f.form(v, v)

    top = norm_shift(lam_root)
    mult = {}
    for mu in sorted(level, key=lambda m: level[m]):
        if mu == lam:
            mult[mu] = 1
            continue
        mu_root = f.dynkin_to_root(mu)
        total = ZERO
        for a_lab, a_root in zip(proots, root_coords):
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a_lab))
                m = mult.get(dominant_labels(f, nu), 0)
                if not m:
                    break
                nu_root = tuple(x + k * y for x, y in zip(mu_root, a_root))
                total += m * f.form(nu_root, a_root)
                k += 1
        denom = top - norm_shift(mu_root)
        val = 2 * total / denom
        if val.denominator != 1:
            raise WeightError("non-integral Freudenthal multiplicity")
        if val:
            mult[mu] = int(val)
    return mult


@lru_cache(maxsize=None)
def _weight_system_root(f, lam):
    out = Counter()
    for mu, m in _dominant_multiplicities(f, lam).items():
        for nu in orbit_labels(f, mu):
            out[f.dynkin_to_root(nu)] += m
    return out


def weight_system(factor, lam):
    """Weight multiset of the irreducible module with highest weight ``lam``."""
    f = _factor(factor)
    return WeightMultiset(f, _weight_system_root(f, _labels(lam, f.rank)))


@lru_cache(maxsize=None)
def _dimension(f, lam):
    rho = tuple(x / 2 for x in f.rho_root_coords())
    lr = la.add(f.dynkin_to_root(lam), rho)
    num = den = mpq(1)
    for a in f.positive_root_coeffs:
        num *= f.form(lr, a)
        den *= f.form(rho, a)
    d = num / den
    assert d.denominator == 1
    return int(d)


def dimension(factor, lam):
    f = _factor(factor)
    return _dimension(f, _labels(lam, f.rank))


def enumerate_dominant(factor, max_dim):
    """All dominant weights whose module has dimension <= max_dim."""
    if max_dim < 1:
        raise WeightError("max_dim must be >= 1")
    f = _factor(factor)
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == f.rank:
            out.append(tuple(prefix))
            return
        m = 0
        while True:
            cand = tuple(prefix) + (m,) + (0,) * (f.rank - i - 1)
            if _dimension(f, cand) > max_dim:
                break
            rec(prefix + [m])
            m += 1

    rec([])
    out.sort(key=lambda v: (sum(v), v))
    return out


def f_lambda(factor, lam, point):
    """Half the sum of |mu(Y) - nu(Y)| over distinct weights with mu + nu != 0."""
    f = _factor(factor)
    if not f.in_chamber(point):
        raise WeightError("f(lambda; Y) needs Y in the closed positive chamber")
    x = f.simple_values(point)
    ws = list(weight_system(f, lam).entries)
    vals = [la.dot(w, x) for w in ws]
    total = ZERO
    for i, j in combinations(range(len(ws)), 2):
        if any(a + b for a, b in zip(ws[i], ws[j])):
            total += abs(vals[i] - vals[j])
    return total / 2


def highest_weights(algebra, multiset):
    """Decompose a weight multiset of a semisimple algebra into irreducibles.

    Returns a Counter mapping tuples of Dynkin-label tuples (one per factor)
    to multiplicities.  Peels off a weight of maximal height repeatedly.
    """
    factors = algebra.factors if hasattr(algebra, "factors") else (algebra,)
    slices = []
    r = 0
    for f in factors:
        slices.append((r, r + f.rank))
        r += f.rank
    rest = Counter(multiset.entries if isinstance(multiset, WeightMultiset) else multiset)
    out = Counter()
    while rest:
        top = max(rest, key=lambda w: (sum(w), w))
        m = rest[top]
        if m < 0:
            raise WeightError("weight multiset is not a module")
        labels = tuple(
            tuple(int(x) for x in f.root_to_dynkin(top[s:e])) for f, (s, e) in zip(factors, slices)
        )
        if any(x < 0 for lab in labels for x in lab):
            raise WeightError("weight multiset is not a module")
        out[labels] += m
        for w, k in product_weights(factors, labels).items():
            rest[w] -= k * m
            if rest[w] == 0:
                del rest[w]
            elif rest[w] < 0:
                raise WeightError("weight multiset is not a module")
    return out


def product_weights(factors, labels):
    """Weights (root coordinates, concatenated) of an outer tensor product of irreducibles."""
    acc = Counter({(): 1})
    for f, lab in zip(factors, labels):
        ws = _weight_system_root(f, tuple(lab))
        nxt = Counter()
        for w, m in acc.items():
            for v, k in ws.items():
                nxt[w + v] += m * k
        acc = nxt
    return acc


def dimension_of(factors, labels):
    d = 1
    for f, lab in zip(factors, labels):
        d *= _dimension(f, tuple(lab))
    return d


def labels_of(factor, root_coeffs):
    f = _factor(factor)
    return tuple(f.root_to_dynkin(root_coeffs))


def simple_type(kind, rank=None):
    return build_root_system(kind, rank)
