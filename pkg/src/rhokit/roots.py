"""Root data for the simple types in explicit epsilon coordinates.

A covector is a tuple of rationals giving its coefficients on the dual basis
eps_1..eps_N.  The abelian subspace ``a`` is the common kernel of the
constraint covectors (empty for B, C, D, F4, E8).  Coroots are computed from
the Cartan integers rather than by orthogonal projection, because the E6/E7
constraint hyperplanes are not orthogonal to the span of the roots.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from gmpy2 import mpq

from . import linalg as la
from .linalg import ONE, ZERO

HALF = mpq(1, 2)

EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
POSITIVE_ROOT_COUNT = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


class RootDataError(ValueError):
    pass


@dataclass(frozen=True)
class AmbientSpace:
    dim: int
    constraints: tuple
    basis: tuple

    @classmethod
    def make(cls, dim, constraints=()):
        cons = tuple(la.vec(c) for c in constraints)
        basis = tuple(la.nullspace([list(c) for c in cons], dim))
        return cls(dim, cons, basis)

    def contains(self, point):
        return len(point) == self.dim and all(la.dot(c, point) == 0 for c in self.constraints)

    def canonical(self, cov):
        """Representative of ``cov`` modulo the constraint span.

        The representative is the orthogonal projection onto the complement
        of the constraint span, which is unique and exact.
        """
        cov = la.vec(cov)
        if not self.constraints:
            return cov
        cons = self.constraints
        gram = [[la.dot(a, b) for b in cons] for a in cons]
        rhs = [la.dot(cov, c) for c in cons]
        coef = la.solve(gram, rhs)
        out = list(cov)
        for k, c in zip(coef, cons):
            for i in range(self.dim):
                out[i] -= k * c[i]
        return tuple(out)


def _unit(n, i, c=ONE):
    v = [ZERO] * n
    v[i] = mpq(c)
    return v


def _raw_simple_roots(kind, rank):
    """Simple roots (epsilon coordinates) and constraint covectors."""
    if kind == "A":
        n = rank + 1
        roots = [la.sub(_unit(n, i), _unit(n, i + 1)) for i in range(rank)]
        return n, roots, [[1] * n]
    if kind in ("B", "C", "D"):
        n = rank
        roots = [la.sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
        if kind == "B":
            roots.append(tuple(_unit(n, n - 1)))
        elif kind == "C":
            roots.append(tuple(_unit(n, n - 1, 2)))
        else:
            roots.append(la.add(_unit(n, n - 2), _unit(n, n - 1)))
        return n, roots, []
    if kind == "G2":
        return 3, [la.vec([1, -1, 0]), la.vec([-2, 1, 1])], [[1, 1, 1]]
    if kind == "F4":
        return 4, [
            la.vec([0, 1, -1, 0]),
            la.vec([0, 0, 1, -1]),
            la.vec([0, 0, 0, 1]),
            la.vec([HALF, -HALF, -HALF, -HALF]),
        ], []
    if kind in ("E6", "E7", "E8"):
        a1 = la.vec([HALF] + [-HALF] * 6 + [HALF])
        roots = [a1, la.add(_unit(8, 0), _unit(8, 1))]
        for i in range(3, rank + 1):
            roots.append(la.sub(_unit(8, i - 2), _unit(8, i - 3)))
        cons = {
            "E6": [[0, 0, 0, 0, 0, -1, 1, 0], [0, 0, 0, 0, -1, 1, 0, 0]],
            "E7": [[0, 0, 0, 0, 0, -1, 1, 0]],
            "E8": [],
        }[kind]
        return 8, roots, cons
    raise RootDataError(f"unknown kind {kind!r}")


def check_type(kind, rank):
    if kind in EXCEPTIONAL_RANK:
        if rank != EXCEPTIONAL_RANK[kind]:
            raise RootDataError(f"{kind} has rank {EXCEPTIONAL_RANK[kind]}, not {rank}")
        return
    lowest = {"A": 1, "B": 2, "C": 1, "D": 3}.get(kind)
    if lowest is None:
        raise RootDataError(f"unknown kind {kind!r}")
    if rank < lowest:
        raise RootDataError(f"{kind}{rank} is not a valid simple type (rank >= {lowest})")


@dataclass(frozen=True, eq=False)
class RootSystemData:
    kind: str
    rank: int
    space: AmbientSpace
    simple_roots: tuple
    positive_roots: tuple
    positive_root_coeffs: tuple
    fundamental_weights: tuple
    chamber: tuple
    cartan: tuple
    coroots: tuple
    coweights: tuple
    gram: tuple
    fund_coeffs: tuple
    _sr_values: tuple = field(repr=False, default=())

    @property
    def name(self):
        return self.kind if self.kind in EXCEPTIONAL_RANK else f"{self.kind}{self.rank}"

    # conversions -----------------------------------------------------
    def covector(self, coeffs):
        """Covector of sum_k coeffs[k] * alpha_k."""
        out = [ZERO] * self.space.dim
        for c, a in zip(coeffs, self.simple_roots):
            if c:
                for i, x in enumerate(a):
                    out[i] += c * x
        return tuple(out)

    def root_coords(self, cov):
        """Coefficients of a covector on the simple roots (restricted to a)."""
        vals = [la.dot(cov, h) for h in self.coroots]
        # vals_j = sum_k c_k A[k][j]
        return la.solve(la.transpose(self.cartan), vals)

    def simple_values(self, point):
        return tuple(la.dot(a, point) for a in self.simple_roots)

    def point_from_values(self, values):
        """The point Y of a with alpha_i(Y) = values[i]."""
        out = [ZERO] * self.space.dim
        for v, w in zip(values, self.coweights):
            if v:
                for i, x in enumerate(w):
                    out[i] += v * x
        return tuple(out)

    def dynkin_to_root(self, labels):
        r = self.rank
        return tuple(sum((mpq(labels[i]) * self.fund_coeffs[i][j] for i in range(r)), ZERO) for j in range(r))

    def root_to_dynkin(self, coeffs):
        r = self.rank
        return tuple(sum((coeffs[k] * self.cartan[k][j] for k in range(r)), ZERO) for j in range(r))

    def form(self, c1, c2):
        """Invariant inner product of two weights given in root coordinates."""
        s = ZERO
        for i, a in enumerate(c1):
            if a:
                row = self.gram[i]
                for j, b in enumerate(c2):
                    if b:
                        s += a * row[j] * b
        return s

    # Weyl group --------------------------------------------------------
    def in_chamber(self, point):
        return all(v >= 0 for v in self.simple_values(point))

    def reflect_point(self, i, point):
        v = la.dot(self.simple_roots[i], point)
        return tuple(y - v * h for y, h in zip(point, self.coroots[i]))

    def dominant_representative(self, point):
        point = la.vec(point)
        while True:
            vals = self.simple_values(point)
            i = next((k for k, v in enumerate(vals) if v < 0), None)
            if i is None:
                return point
            point = self.reflect_point(i, point)

    def rho_covector(self):
        """Sum of the positive roots (twice the usual rho)."""
        out = [ZERO] * self.space.dim
        for r in self.positive_roots:
            for i, x in enumerate(r):
                out[i] += x
        return tuple(out)

    def rho_root_coords(self):
        out = [ZERO] * self.rank
        for c in self.positive_root_coeffs:
            for i, x in enumerate(c):
                out[i] += x
        return tuple(out)


def _positive_root_coeffs(cartan):
    r = len(cartan)
    simple = [tuple(1 if i == j else 0 for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # alpha_i-string through beta: p - q = <beta, alpha_i^vee>
                pair = sum(beta[k] * cartan[k][i] for k in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda c: (sum(c), tuple(-x for x in c)))


@lru_cache(maxsize=None)
def build_root_system(kind, rank=None):
    """Root data of the simple type ``kind`` of the given rank."""
    if rank is None:
        rank = EXCEPTIONAL_RANK.get(kind)
        if rank is None:
            raise RootDataError(f"rank required for kind {kind!r}")
    check_type(kind, rank)
    n, raw, cons = _raw_simple_roots(kind, rank)
    space = AmbientSpace.make(n, cons)
    norms = [la.dot(a, a) for a in raw]
    cartan = tuple(
        tuple(mpq(2) * la.dot(raw[i], raw[j]) / norms[j] for j in range(rank)) for i in range(rank)
    )
    if any(x.denominator != 1 for row in cartan for x in row):
        raise RootDataError("non-integral Cartan matrix")
    gram = tuple(tuple(la.dot(raw[i], raw[j]) for j in range(rank)) for i in range(rank))
    simple = tuple(space.canonical(a) for a in raw)

    # values of simple roots on the basis of a, then coroots and coweights
    basis = space.basis
    m = [[la.dot(a, b) for b in basis] for a in simple]
    minv = la.inverse(m)

    def point_with(values):
        y = [sum((minv[k][i] * values[i] for i in range(rank)), ZERO) for k in range(rank)]
        out = [ZERO] * n
        for yk, b in zip(y, basis):
            for i, x in enumerate(b):
                out[i] += yk * x
        return tuple(out)

    coroots = tuple(point_with([cartan[i][j] for i in range(rank)]) for j in range(rank))
    coweights = tuple(point_with([ONE if i == j else ZERO for i in range(rank)]) for j in range(rank))

    pos = _positive_root_coeffs([[int(x) for x in row] for row in cartan])
    fund = la.inverse([list(row) for row in cartan])
    data = RootSystemData(
        kind=kind,
        rank=rank,
        space=space,
        simple_roots=simple,
        positive_roots=(),
        positive_root_coeffs=tuple(tuple(mpq(x) for x in c) for c in pos),
        fundamental_weights=(),
        chamber=simple,
        cartan=cartan,
        coroots=coroots,
        coweights=coweights,
        gram=gram,
        fund_coeffs=tuple(tuple(row) for row in fund),
    )
    object.__setattr__(data, "positive_roots", tuple(data.covector(c) for c in data.positive_root_coeffs))
    object.__setattr__(data, "fundamental_weights", tuple(data.covector(row) for row in data.fund_coeffs))
    return data


def expected_positive_roots(kind, rank):
    if kind == "A":
        return rank * (rank + 1) // 2
    if kind in ("B", "C"):
        return rank * rank
    if kind == "D":
        return rank * (rank - 1)
    return POSITIVE_ROOT_COUNT[kind]


def diagram_automorphisms(kind, rank):
    """Permutations of the simple roots induced by diagram automorphisms."""
    ident = tuple(range(rank))
    if kind == "A" and rank > 1:
        return [ident, tuple(reversed(ident))]
    if kind == "D":
        swap = ident[:-2] + (rank - 1, rank - 2)
        if rank == 4:
            # triality permutes nodes 0, 2, 3 around the central node 1
            outs = []
            for p in permutations((0, 2, 3)):
                perm = [0, 1, 2, 3]
                for src, dst in zip((0, 2, 3), p):
                    perm[src] = dst
                outs.append(tuple(perm))
            return outs
        return [ident, swap]
    if kind == "E6":
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def dual_permutation(kind, rank):
    """Node permutation realising lambda -> -w0(lambda)."""
    ident = tuple(range(rank))
    if kind == "A":
        return tuple(reversed(ident))
    if kind == "D" and rank % 2 == 1:
        return ident[:-2] + (rank - 1, rank - 2)
    if kind == "E6":
        return (5, 1, 4, 3, 2, 0)
    return ident


class SemisimpleAlgebra:
    """Direct sum of simple factors; ``a`` is the direct sum of their subspaces."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise RootDataError("a semisimple algebra needs at least one factor")
        self.factors = factors
        self.rank = sum(f.rank for f in factors)
        self.dims = tuple(f.space.dim for f in factors)
        self.dim = sum(self.dims)
        self._offsets = []
        self._root_offsets = []
        o = r = 0
        for f in factors:
            self._offsets.append(o)
            self._root_offsets.append(r)
            o += f.space.dim
            r += f.rank

    def __repr__(self):
        return "SemisimpleAlgebra(" + "+".join(f.name for f in self.factors) + ")"

    def __eq__(self, other):
        return isinstance(other, SemisimpleAlgebra) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def split_point(self, point):
        return [tuple(point[o : o + f.space.dim]) for o, f in zip(self._offsets, self.factors)]

    def join(self, parts):
        out = []
        for p in parts:
            out.extend(p)
        return tuple(out)

    def root_slices(self):
        return [(r, r + f.rank) for r, f in zip(self._root_offsets, self.factors)]

    def contains(self, point):
        return len(point) == self.dim and all(
            f.space.contains(p) for f, p in zip(self.factors, self.split_point(point))
        )

    def simple_values(self, point):
        out = []
        for f, p in zip(self.factors, self.split_point(point)):
            out.extend(f.simple_values(p))
        return tuple(out)

    def point_from_values(self, values):
        parts = []
        for f, (s, e) in zip(self.factors, self.root_slices()):
            parts.append(f.point_from_values(values[s:e]))
        return self.join(parts)

    def covector(self, coeffs):
        parts = []
        for f, (s, e) in zip(self.factors, self.root_slices()):
            parts.append(f.covector(coeffs[s:e]))
        return self.join(parts)

    def root_coords(self, cov):
        out = []
        for f, (o, d) in zip(self.factors, zip(self._offsets, self.dims)):
            out.extend(f.root_coords(cov[o : o + d]))
        return tuple(out)

    def canonical(self, cov):
        parts = [f.space.canonical(c) for f, c in zip(self.factors, self.split_point(cov))]
        return self.join(parts)

    def in_chamber(self, point):
        return all(v >= 0 for v in self.simple_values(point))

    def dominant_representative(self, point):
        return self.join(f.dominant_representative(p) for f, p in zip(self.factors, self.split_point(point)))

    def chamber(self):
        """Chamber inequalities alpha_i >= 0 as covectors on the whole of a."""
        out = []
        for k, f in enumerate(self.factors):
            for a in f.simple_roots:
                parts = [tuple([ZERO] * g.space.dim) for g in self.factors]
                parts[k] = a
                out.append(self.join(parts))
        return out

    def rho_covector(self):
        return self.join(f.rho_covector() for f in self.factors)

    def rho_root_coords(self):
        out = []
        for f in self.factors:
            out.extend(f.rho_root_coords())
        return tuple(out)


def rho_adjoint_covector(h):
    """Sum of all positive roots of ``h``; equals rho_h on the closed chamber."""
    return h.rho_covector()


def dominant_representative(h, point):
    return h.dominant_representative(point)
