"""Polyhedral cones inside the nonnegative orthant.

A cone is described by equalities E x = 0 and inequalities F x >= 0 together
with x >= 0.  Rays are enumerated by the double description method, starting
from the orthant's generators e_1, ..., e_r and adding one constraint at a
time with the combinatorial adjacency test.
"""

from itertools import combinations

from . import linalg as la
from .linalg import ZERO


def _tight(ray, rows):
    return frozenset(k for k, a in enumerate(rows) if la.dot(a, ray) == 0)


def _add_constraint(rays, rows, a, equality):
    vals = [la.dot(a, v) for v in rays]
    pos = [i for i, v in enumerate(vals) if v > 0]
    neg = [i for i, v in enumerate(vals) if v < 0]
    zero = [i for i, v in enumerate(vals) if v == 0]
    keep = [rays[i] for i in zero] + ([] if equality else [rays[i] for i in pos])
    if pos and neg:
        tights = [_tight(v, rows) for v in rays]
        for i in pos:
            for j in neg:
                common = tights[i] & tights[j]
                if any(k not in (i, j) and common <= tights[k] for k in range(len(rays))):
                    continue
                new = la.sub(la.scale(vals[i], rays[j]), la.scale(vals[j], rays[i]))
                keep.append(la.primitive(new))
    out = []
    seen = set()
    for v in keep:
        v = la.primitive(v)
        if any(v) and v not in seen:
            seen.add(v)
            out.append(v)
    return out


def extreme_rays(dim, equalities=(), inequalities=()):
    """Primitive integer generators of {x >= 0, E x = 0, F x >= 0}, sorted."""
    rows = [tuple(la.ONE if i == j else ZERO for i in range(dim)) for j in range(dim)]
    rays = list(rows)
    for a in equalities:
        a = la.vec(a)
        rays = _add_constraint(rays, rows, a, True)
        rows.append(a)
    for a in inequalities:
        a = la.vec(a)
        rays = _add_constraint(rays, rows, a, False)
        rows.append(a)
    return sorted(rays, reverse=True)


def satisfies(x, equalities=(), inequalities=()):
    if any(v < 0 for v in x):
        return False
    if any(la.dot(a, x) != 0 for a in equalities):
        return False
    return all(la.dot(a, x) >= 0 for a in inequalities)


def same_cone(rays_a, hrep_a, rays_b, hrep_b):
    """Mutual containment: each cone's generators satisfy the other's H-representation."""
    return all(satisfies(r, *hrep_b) for r in rays_a) and all(satisfies(r, *hrep_a) for r in rays_b)


def normalize_hrep(dim, equalities, inequalities):
    """Independent equalities (row-reduced) and primitive inequalities, duplicates removed."""
    eq = []
    if equalities:
        m, piv = la.rref([la.vec(a) for a in equalities], dim)
        eq = [la.primitive(m[i]) for i in range(len(piv))]
    ineq = sorted({la.primitive(la.vec(a)) for a in inequalities if any(a)}, reverse=True)
    return eq, ineq


def arrangement_vertices(dim, hyperplanes):
    """Vertices of the arrangement {h = 0} together with x_j = 0 on the slice sum x = 1.

    Every choice of dim-1 hyperplanes meeting the slice in a single point gives
    a candidate; points outside the orthant are dropped.
    """
    ones = tuple(la.ONE for _ in range(dim))
    planes = [la.vec(h) for h in hyperplanes if any(h)]
    planes += [tuple(la.ONE if i == j else ZERO for i in range(dim)) for j in range(dim)]
    seen = set()
    out = []
    for combo in combinations(range(len(planes)), dim - 1):
        rows = [list(planes[k]) + [ZERO] for k in combo] + [list(ones) + [la.ONE]]
        m, piv = la.rref(rows, dim + 1)
        if len(piv) != dim or dim in piv:
            continue
        x = tuple(m[i][dim] for i in range(dim))
        if all(v >= 0 for v in x) and x not in seen:
            seen.add(x)
            out.append(x)
    return out


def minimal_hrep(dim, rays, inequalities):
    """Explicit equalities (the annihilator of the rays) and irredundant inequalities.

    ``inequalities`` must be valid on the cone spanned by ``rays``; together
    with x >= 0 and the returned equalities they must cut out that cone.
    """
    eqs = la.nullspace([list(r) for r in rays], dim) if rays else [
        tuple(la.ONE if i == j else ZERO for i in range(dim)) for j in range(dim)
    ]
    eqs, _ = normalize_hrep(dim, eqs, ())
    cand = [a for a in normalize_hrep(dim, (), inequalities)[1] if any(la.dot(a, r) for r in rays)]
    keep = list(cand)
    for a in cand:
        rest = [b for b in keep if b != a]
        if all(la.dot(a, r) >= 0 for r in extreme_rays(dim, eqs, rest)):
            keep = rest
    return eqs, keep
