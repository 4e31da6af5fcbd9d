"""rho functions, the difference D = rho_g - 2 rho_h, and the trichotomy.

Throughout, a point of the closed chamber is handled through its simple
values x_j = alpha_j(Y).  A weight in simple-root coordinates is then just a
linear form in x, D is a sum of absolute values plus a linear term, and the
slice sum_j x_j = 1 compactifies the chamber.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from gmpy2 import mpq

from . import cones
from . import linalg as la
from .embedding import ambient_weight_multiset
from .linalg import ZERO
from .lp import minimize


class RhoError(RuntimeError):
    pass


def rho_eval(multiset, point):
    """Half the sum of |w(Y)| over the multiset, with multiplicity."""
    return sum((m * abs(v) for v, m in multiset.values(point)), ZERO) / 2


def _sign_canonical(w):
    for a in w:
        if a:
            return w if a > 0 else tuple(-x for x in w)
    return None


@dataclass(frozen=True)
class PLDifference:
    """D(x) = sum_i c_i |w_i . x| + linear . x on the chamber, x = simple values."""

    algebra: object
    terms: tuple  # ((w, c), ...) with w in simple-root coordinates, merged up to sign
    linear: tuple

    @property
    def rank(self):
        return len(self.linear)

    def at_values(self, x):
        if any(v < 0 for v in x):
            raise RhoError("D is only piecewise-linear in this form on the closed chamber")
        s = sum((c * abs(la.dot(w, x)) for w, c in self.terms), ZERO)
        return s + la.dot(self.linear, x)

    def __call__(self, point):
        """D(Y) for any Y in a (uses the dominant representative)."""
        y = self.algebra.dominant_representative(point)
        return self.at_values(self.algebra.simple_values(y))

    def abs_covectors(self):
        return [(self.algebra.covector(w), c) for w, c in self.terms]

    def linear_covector(self):
        return self.algebra.covector(self.linear)


def difference_from_weights(algebra, ambient):
    """D for h with Cartan ``algebra`` inside g whose weights (as h-module) are ``ambient``."""
    merged = Counter()
    for w, m in ambient.items():
        key = _sign_canonical(w)
        if key is not None:
            merged[key] += mpq(m, 2)
    terms = tuple(sorted(merged.items(), reverse=True))
    linear = tuple(-2 * x for x in algebra.rho_root_coords())
    return PLDifference(algebra, terms, linear)


def difference_function(spec):
    return difference_from_weights(spec.h.internal, ambient_weight_multiset(spec))


class VerdictKind(Enum):
    NOT_DOMINATED = "not_tempered"
    DOMINATED_WITH_WITNESS = "tempered_not_strict"
    STRICTLY_DOMINATED = "square_integrable_strict"


@dataclass(frozen=True)
class WitnessCone:
    """Zero set of D in the closed chamber, in simple-value coordinates x_j = alpha_j(Y)."""

    algebra: object
    rays: tuple
    equalities: tuple
    inequalities: tuple

    @property
    def is_full_chamber(self):
        return not self.equalities and not self.inequalities

    def contains_values(self, x):
        return cones.satisfies(x, self.equalities, self.inequalities)

    def points(self):
        """Ray generators as primitive points of a."""
        return [la.primitive(self.algebra.point_from_values(r)) for r in self.rays]

    def same_as(self, other):
        return cones.same_cone(
            self.rays, (self.equalities, self.inequalities), other.rays, (other.equalities, other.inequalities)
        )


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    exact_min: mpq
    minimizer: tuple = None  # simple values of a minimizing point of the slice
    witness: WitnessCone = field(default=None, compare=False)

    @property
    def leq(self):
        return self.kind is not VerdictKind.NOT_DOMINATED

    @property
    def strict(self):
        return self.kind is VerdictKind.STRICTLY_DOMINATED


def min_over_slice(d, with_lp=False):
    """Exact minimum of D on {Y in a_+ : sum alpha_j(Y) = 1} and a minimizing point of a."""
    res = minimize(list(d.terms), d.linear)
    if d.at_values(res.x) != res.value:
        raise RhoError("minimizer does not attain the reported minimum")
    point = d.algebra.point_from_values(res.x)
    return (res.value, point, res) if with_lp else (res.value, point)


def _cone_from_lp(d, res):
    r = d.rank
    eqs = []
    ineqs = []
    for j, s in enumerate(res.slack):
        if s > 0:
            eqs.append(tuple(la.ONE if k == j else ZERO for k in range(r)))
    for (w, c), y in zip(d.terms, res.y):
        if y == c:
            ineqs.append(w)
        elif y == -c:
            ineqs.append(tuple(-a for a in w))
        else:
            eqs.append(w)
    eqs, ineqs = cones.normalize_hrep(r, eqs, ineqs)
    rays = cones.extreme_rays(r, eqs, ineqs)
    for ray in rays:
        if d.at_values(ray) != 0:
            raise RhoError("witness ray with D != 0")
    eqs, ineqs = cones.minimal_hrep(r, rays, ineqs)
    return WitnessCone(d.algebra, tuple(rays), tuple(eqs), tuple(ineqs))


def witness_cone(d):
    value, _, res = min_over_slice(d, with_lp=True)
    if value != 0:
        raise RhoError("witness cone requested but min over the slice is not zero")
    return _cone_from_lp(d, res)


def decide_difference(d):
    value, _, res = min_over_slice(d, with_lp=True)
    if value < 0:
        return Verdict(VerdictKind.NOT_DOMINATED, value, res.x)
    if value > 0:
        return Verdict(VerdictKind.STRICTLY_DOMINATED, value, res.x)
    return Verdict(VerdictKind.DOMINATED_WITH_WITNESS, value, res.x, _cone_from_lp(d, res))


def decide(spec):
    return decide_difference(difference_function(spec))


def reduce_direct_sum(per_ideal, diag_flags=()):
    """Combine verdicts for the ideals h_i = h cap g_i of g = g_1 + ... + g_k.

    Strict for h iff strict on every ideal and no ideal of h sits diagonally
    across two isomorphic summands.  With a diagonal the pair is never strict.
    Otherwise the weakest per-ideal verdict is returned.
    """
    per_ideal = list(per_ideal)
    if len(per_ideal) == 1 and not diag_flags:
        return per_ideal[0]
    if any(flag for _, _, flag in diag_flags):
        worst = min(per_ideal, key=lambda v: v.exact_min, default=None)
        if worst is not None and worst.kind is VerdictKind.NOT_DOMINATED:
            return worst
        return Verdict(VerdictKind.DOMINATED_WITH_WITNESS, ZERO)
    return min(per_ideal, key=lambda v: (v.kind is not VerdictKind.NOT_DOMINATED, v.strict, v.exact_min))


def monotone_prune(strict_for_superalgebra):
    """True when a subalgebra's verdict is already known to be strict."""
    return bool(strict_for_superalgebra)

