"""Semisimple subalgebras h of a classical g, as modules on the defining space.

A node is an ambient (family, n) plus an abstract h, given by its internal
simple factors, and the decomposition of the defining module V into
irreducibles (one Dynkin label tuple per factor, with multiplicity).  All
semisimple subalgebras below a node are reached by two moves:

* replace a simple factor X by a semisimple subalgebra s of X.  The inclusion
  is recorded as a linear map from weights of X to weights of s, found by
  matching the weights of the defining module of X with those of its
  restriction to s.  Diagram automorphisms of X give the other classes;
* replace two isomorphic factors by a (possibly twisted) diagonal copy.

Every maximal semisimple subalgebra of a semisimple algebra arises this way,
so closing under the moves enumerates all of them up to conjugacy.
"""

from collections import Counter, namedtuple
from functools import lru_cache
from itertools import permutations, product

from . import linalg as la
from .catalog import pair
from .embedding import (
    AlgebraSpec,
    DirectSum,
    Dual,
    EmbeddingSpec,
    FactorSpec,
    Irrep,
    OuterTensor,
    Std,
    Triv,
    ambient_weights,
    dsum,
    factor_from_internal,
    tensor,
)
from .linalg import ZERO
from .rho import difference_from_weights
from .roots import SemisimpleAlgebra, build_root_system, diagram_automorphisms, dual_permutation
from .weights import dimension, enumerate_dominant, highest_weights, product_weights, weight_system


class SubalgebraError(ValueError):
    pass


Node = namedtuple("Node", "ambient n factors blocks")


class _Factors:
    def __init__(self, factors):
        self.factors = tuple(build_root_system(*f) for f in factors)


def decompose(factors, weights):
    """Irreducible decomposition of a weight Counter over internal factors."""
    return highest_weights(_Factors(factors), weights)


def _normalize_blocks(blocks):
    c = Counter()
    for labels, m in blocks:
        c[tuple(tuple(int(x) for x in lab) for lab in labels)] += m
    return tuple(sorted(c.items()))


def defining_type(family, n):
    """Internal simple type (kind, rank) and labels of the defining module of family:n."""
    f = FactorSpec(family, n)
    if len(f.internal) != 1:
        raise SubalgebraError(f"{f} is not simple")
    return f.internal[0], f.std_labels[0]


def root_node(family, n):
    t, lab = defining_type(family, n)
    return Node(family, n, (t,), (((lab,), 1),))


def node_weights(node):
    out = Counter()
    fs = [build_root_system(*f) for f in node.factors]
    for labels, m in node.blocks:
        for w, k in product_weights(fs, labels).items():
            out[w] += m * k
    return out


def node_algebra(node):
    return SemisimpleAlgebra([build_root_system(*f) for f in node.factors])


def node_difference(node):
    if not node.factors:
        raise SubalgebraError("the zero subalgebra has no chamber")
    rank = sum(r for _, r in node.factors)
    amb = ambient_weights(node.ambient, node_weights(node), rank)
    return difference_from_weights(node_algebra(node), amb)


def node_from_spec(spec):
    spec.validate()
    factors = tuple((f.kind, f.rank) for f in spec.h.internal.factors)
    dec = decompose(factors, spec.weights.entries)
    return Node(spec.ambient, spec.g_size, factors, _normalize_blocks(dec.items()))


def node_user_factors(node):
    # inside sp, A1 reads more naturally as sp_1
    return [FactorSpec("sp", 1) if node.ambient == "sp" and f == ("A", 1) else factor_from_internal(*f) for f in node.factors]


def _atom(i, lab, user):
    std = user[i].std_labels[0]
    if (lab,) == user[i].std_labels:
        return Std(i + 1)
    perm = dual_permutation(*user[i].internal[0])
    if len(user[i].internal) == 1 and lab == _permute_labels(std, perm):
        return Dual(Std(i + 1))
    return Irrep(i + 1, lab)


def spec_from_node(node):
    if not node.factors:
        raise SubalgebraError("the zero subalgebra has no embedding spec")
    user = node_user_factors(node)
    h = AlgebraSpec(user)
    blocks = [list(labels) for labels, _ in node.blocks]
    # twisting a factor by a diagram automorphism keeps the image; prefer std atoms
    for i, t in enumerate(node.factors):
        std = user[i].std_labels[0]
        best = max(
            diagram_automorphisms(*t),
            key=lambda p: sum(_permute_labels(b[i], p) == std for b in blocks),
        )
        for b in blocks:
            b[i] = _permute_labels(b[i], best)
    keyed = []
    triv = 0
    for labels, m in zip(blocks, (m for _, m in node.blocks)):
        idx = [i for i, lab in enumerate(labels) if any(lab)]
        if not idx:
            triv += m
            continue
        atoms = [_atom(i, labels[i], user) for i in idx]
        t = atoms[0] if len(atoms) == 1 else tensor(*atoms)
        keyed.extend([((idx, [tuple(-x for x in labels[i]) for i in idx]), t)] * m)
    terms = [t for _, t in sorted(keyed, key=lambda kt: kt[0])]
    if triv:
        terms.append(Triv(triv))
    v = terms[0] if len(terms) == 1 else dsum(*terms)
    return EmbeddingSpec(h, v, node.ambient)


def describe_h(node):
    if not node.factors:
        return "0"
    return "+".join(str(f) for f in node_user_factors(node))


# ------------------------------------------------------------ canonical form

def _permute_labels(lab, perm):
    out = [0] * len(lab)
    for k, x in enumerate(lab):
        out[perm[k]] = x
    return tuple(out)


def _aut_canonical(factors, blocks):
    """Minimum over factor permutations (within a type) and diagram automorphisms."""
    order = sorted(range(len(factors)), key=lambda i: (factors[i][0], -factors[i][1]))
    factors_sorted = tuple(factors[i] for i in order)
    groups = []
    i = 0
    while i < len(factors_sorted):
        j = i
        while j < len(factors_sorted) and factors_sorted[j] == factors_sorted[i]:
            j += 1
        groups.append(range(i, j))
        i = j
    auts = [diagram_automorphisms(*f) for f in factors_sorted]
    base = [tuple(labels[i] for i in order) for labels, _ in blocks]
    mults = [m for _, m in blocks]
    best = None
    for perms in product(*(permutations(g) for g in groups)):
        arrangement = [k for p in perms for k in p]
        for choice in product(*auts):
            cand = []
            for labs, m in zip(base, mults):
                moved = tuple(_permute_labels(labs[arrangement[k]], choice[k]) for k in range(len(labs)))
                cand.append((moved, m))
            cand = tuple(sorted(cand))
            if best is None or cand < best:
                best = cand
    return factors_sorted, best if best is not None else tuple(sorted(blocks))


def _triality_images(node):
    """The module pulled back through the outer automorphisms of so_8."""
    X = ("D", 4)
    images = []
    for lab in ((0, 0, 1, 0), (0, 0, 0, 1)):
        for r in _embedding_maps(X, node.factors, node_weights(node)):
            dec = _restrict(X, lab, node.factors, r)
            images.append(_normalize_blocks(dec.items()))
            break
    return images


def canonical(node):
    factors, blocks = _aut_canonical(node.factors, node.blocks)
    best = (factors, blocks)
    if node.ambient == "so" and node.n == 8 and node.factors:
        for img in _triality_images(node):
            cand = _aut_canonical(node.factors, img)
            best = min(best, cand)
    return Node(node.ambient, node.n, best[0], best[1])


# ------------------------------------------------------------ restriction maps

def _std_weights(X):
    f = build_root_system(*X)
    lab = tuple([1] + [0] * (f.rank - 1))
    return weight_system(f, lab).entries


def _expand(counter):
    out = []
    for w, m in sorted(counter.items()):
        out.extend([w] * m)
    return out


def _pairs(ws):
    """Split a self-dual weight list into (representative, negative) pairs and zeros."""
    rest = Counter(ws)
    reps = []
    zeros = 0
    for w in sorted(rest, reverse=True):
        while rest[w] > 0:
            if not any(w):
                zeros += rest[w]
                rest[w] = 0
                break
            neg = tuple(-x for x in w)
            if rest[neg] <= 0:
                return None
            rest[w] -= 1
            rest[neg] -= 1
            reps.append(w)
    return reps, zeros


def _solve_map(src, dst, rank_x, rank_s):
    """Matrix R with s . R = d for each matched pair (s, d), or None if inconsistent."""
    rows = [list(s) + list(d) for s, d in zip(src, dst)]
    m, piv = la.rref(rows, rank_x)
    if len(piv) != rank_x:
        return None
    for i in range(len(piv), len(m)):
        if any(m[i][rank_x:]):
            return None
    return tuple(tuple(m[i][rank_x:]) for i in range(rank_x))


def _apply(w, r, rank_s):
    out = [ZERO] * rank_s
    for a, row in zip(w, r):
        if a:
            for k, x in enumerate(row):
                out[k] += a * x
    return tuple(out)


def _candidate_maps(X, w_counter, rank_s):
    kind, rank = X
    std = _std_weights(X)
    ws = _expand(w_counter)
    if kind == "A":
        yield _expand(std), ws
        return
    if kind in ("B", "C", "D"):
        sp = _pairs(list(std.elements()))
        wp = _pairs(ws)
        if sp is None or wp is None:
            return
        zero = tuple([ZERO] * rank_s)
        reps = wp[0] + [zero] * (wp[1] // 2)
        if len(sp[0]) != len(reps):
            return
        src = sp[0] + [tuple(-x for x in s) for s in sp[0]]
        dst = reps + [tuple(-x for x in w) for w in reps]
        yield src, dst
        return
    if kind == "G2":
        nz_std = [w for w in std if any(w)]
        u = next(
            (a, b, c)
            for a in nz_std
            for b in nz_std
            for c in nz_std
            if all(x + y + z == 0 for x, y, z in zip(a, b, c)) and len({a, b, c}) == 3
        )
        nz = [w for w in ws if any(w)]
        seen = set()
        for a in nz:
            for b in nz:
                c = tuple(-x - y for x, y in zip(a, b))
                if (a, b) in seen:
                    continue
                seen.add((a, b))
                trip = [a, b, c]
                got = Counter(trip + [tuple(-x for x in t) for t in trip])
                if got == Counter(nz):
                    yield list(u), trip
        return
    raise SubalgebraError(f"no restriction rule for type {kind}")


def _embedding_maps(X, s_factors, w_counter):
    """Linear maps (weights of X) -> (weights of s) realising V_X|s = W, up to W(X)."""
    rank_x = X[1]
    rank_s = sum(r for _, r in s_factors)
    std = _std_weights(X)
    found = []
    for src, dst in _candidate_maps(X, w_counter, rank_s):
        r = _solve_map(src, dst, rank_x, rank_s)
        if r is None:
            continue
        image = Counter()
        for w, m in std.items():
            image[_apply(w, r, rank_s)] += m
        if image == Counter(w_counter):
            found.append(r)
            break
    return found


@lru_cache(maxsize=None)
def _restrict(X, lab, s_factors, r):
    rank_s = sum(k for _, k in s_factors)
    f = build_root_system(*X)
    img = Counter()
    for w, m in weight_system(f, lab).entries.items():
        img[_apply(w, r, rank_s)] += m
    return decompose(s_factors, img)


def _twists(X, r):
    out = []
    for perm in diagram_automorphisms(*X):
        # twisted map: mu -> sigma(mu) . R, sigma moving coordinate k to perm[k]
        out.append(tuple(r[perm[k]] for k in range(len(r))))
    return list(dict.fromkeys(out))


# ------------------------------------------------------------ sub-embedding catalogs

def _simple_types(max_rank):
    out = []
    for r in range(1, max_rank + 1):
        out.append(("A", r))
        if r >= 2:
            out.append(("C", r))
        if r >= 3:
            out.append(("B", r))
        if r >= 4:
            out.append(("D", r))
    if max_rank >= 2:
        out.append(("G2", 2))
    return out


def _form_kind(t, lab):
    from .embedding import _irrep_form

    return _irrep_form((build_root_system(*t),), (lab,))


def _simple_irreducible(family, d, exclude_dim):
    """Simple s with an irreducible module of dimension d preserving the right form."""
    out = []
    for t in _simple_types(d):
        f = build_root_system(*t)
        if len(f.positive_roots) * 2 + f.rank >= exclude_dim:
            continue
        seen = set()
        for lab in enumerate_dominant(f, d):
            if dimension(f, lab) != d or not any(lab):
                continue
            key = min(_permute_labels(lab, p) for p in diagram_automorphisms(*t))
            if key in seen:
                continue
            seen.add(key)
            kind = _form_kind(t, lab)
            if family == "so" and kind != "symmetric":
                continue
            if family == "sp" and kind != "skew":
                continue
            out.append(((t,), (((lab,), 1),)))
    return out


def _node_parts(spec):
    n = node_from_spec(spec)
    return n.factors, n.blocks


def _sum_parts(family, parts, rest=0):
    from .catalog import _sum_of

    return _node_parts(_sum_of(family, parts, rest))


def _tensor_parts(family, f1, f2):
    return _node_parts(pair(family, [([f1, f2], lambda i, j: tensor(Std(i), Std(j)))]))


def _dual_pair_parts(family, m):
    return _node_parts(pair(family, [([("sl", m)], lambda i: dsum(Std(i), Dual(Std(i))))]))


@lru_cache(maxsize=None)
def sub_catalog(X):
    """Semisimple subalgebras s of the simple type X with the module V_X restricted to s.

    Contains every maximal semisimple subalgebra (reducible, tensor and simple
    irreducible ones) and a few non-maximal extras.  Entries are
    (s_factors, blocks) with blocks as in a Node.
    """
    kind, rank = X
    f = build_root_system(*X)
    dim_x = len(f.positive_roots) * 2 + rank
    entries = []
    if kind == "A":
        d = rank + 1
        if d == 2:
            entries.append(((), (((), 2),)))
        for k in range(1, d // 2 + 1):
            if d - k >= 2:
                entries.append(_sum_parts("sl", [("sl", d - k), ("sl", k)]))
        for p in range(2, d):
            q, r = divmod(d, p)
            if r == 0 and q >= p:
                entries.append(_tensor_parts("sl", ("sl", p), ("sl", q)))
        entries += _simple_irreducible("sl", d, dim_x)
    elif kind == "C":
        n = rank
        entries.append(_dual_pair_parts("sp", n))
        for k in range(1, n // 2 + 1):
            entries.append(_sum_parts("sp", [("sp", n - k), ("sp", k)]))
        for p in range(1, n + 1):
            q, r = divmod(n, p)
            if r == 0 and q >= 3:
                entries.append(_tensor_parts("sp", ("sp", p), ("so", q)))
        entries += _simple_irreducible("sp", 2 * n, dim_x)
    elif kind in ("B", "D"):
        d = 2 * rank + 1 if kind == "B" else 2 * rank
        for k in range(1, d // 2 + 1):
            if d - k >= 3:
                entries.append(_sum_parts("so", [("so", d - k), ("so", k)]))
        if d % 2 == 0:
            entries.append(_dual_pair_parts("so", d // 2))
        for p in range(3, d):
            q, r = divmod(d, p)
            if r == 0 and q >= p:
                entries.append(_tensor_parts("so", ("so", p), ("so", q)))
        if d % 4 == 0:
            for p in range(1, d // 4 + 1):
                q, r = divmod(d // 4, p)
                if r == 0 and q >= p:
                    entries.append(_tensor_parts("so", ("sp", p), ("sp", q)))
        entries += _simple_irreducible("so", d, dim_x)
    elif kind == "G2":
        entries.append(((("A", 2),), _normalize_blocks([(((1, 0),), 1), (((0, 1),), 1), (((0, 0),), 1)])))
        entries.append(((("A", 1), ("A", 1)), _normalize_blocks([(((1,), (1,)), 1), (((0,), (2,)), 1)])))
        entries.append(((("A", 1),), _normalize_blocks([(((6,),), 1)])))
    else:
        raise SubalgebraError(f"no subalgebra catalog for type {kind}")
    out = []
    for s_factors, blocks in entries:
        s_factors = tuple(s_factors)
        w = Counter()
        fs = [build_root_system(*t) for t in s_factors]
        for labels, m in blocks:
            for wt, k in product_weights(fs, labels).items():
                w[wt] += m * k
        maps = _embedding_maps(X, s_factors, w)
        if not maps:
            raise SubalgebraError(f"could not embed {s_factors} into {X}")
        for r in _twists(X, maps[0]):
            out.append((s_factors, r))
    return tuple(out)


@lru_cache(maxsize=None)
def _tensor_decompose(X, lab1, lab2):
    f = build_root_system(*X)
    w1 = weight_system(f, lab1).entries
    w2 = weight_system(f, lab2).entries
    c = Counter()
    for a, m in w1.items():
        for b, k in w2.items():
            c[tuple(x + y for x, y in zip(a, b))] += m * k
    return decompose((X,), c)


def children(node):
    """Canonical forms of all nodes one move below ``node``."""
    out = set()
    fs = node.factors
    for i, X in enumerate(fs):
        for s_factors, r in sub_catalog(X):
            new_factors = fs[:i] + s_factors + fs[i + 1 :]
            blocks = []
            for labels, m in node.blocks:
                for slabels, k in _restrict(X, labels[i], s_factors, r).items():
                    blocks.append((labels[:i] + slabels + labels[i + 1 :], m * k))
            out.add(canonical(Node(node.ambient, node.n, new_factors, _normalize_blocks(blocks))))
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if fs[i] != fs[j]:
                continue
            X = fs[i]
            new_factors = fs[:j] + fs[j + 1 :]
            for perm in diagram_automorphisms(*X):
                blocks = []
                for labels, m in node.blocks:
                    twisted = _permute_labels(labels[j], perm)
                    for (lab,), k in _tensor_decompose(X, labels[i], twisted).items():
                        new = list(labels)
                        new[i] = lab
                        del new[j]
                        blocks.append((tuple(new), m * k))
                out.add(canonical(Node(node.ambient, node.n, new_factors, _normalize_blocks(blocks))))
    return sorted(out)


def descendants(node, include_self=True):
    """All nodes reachable from ``node`` (no pruning), canonical."""
    start = canonical(node)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for c in children(cur):
            if c not in seen:
                seen.add(c)
                stack.append(c)
    if not include_self:
        seen.discard(start)
    return sorted(seen)


def outer_sum(parts, ambient, n):
    """Direct sum of nodes living on complementary subspaces of the defining space."""
    factors = ()
    blocks = []
    for part in parts:
        pad_before = tuple(tuple([0] * r) for _, r in factors)
        factors = factors + part.factors
        blocks = [(labels + tuple(tuple([0] * r) for _, r in part.factors), m) for labels, m in blocks]
        blocks += [(pad_before + labels, m) for labels, m in part.blocks]
    return canonical(Node(ambient, n, factors, _normalize_blocks(blocks)))


__all__ = [
    "Node",
    "canonical",
    "children",
    "decompose",
    "describe_h",
    "descendants",
    "node_difference",
    "node_from_spec",
    "node_weights",
    "outer_sum",
    "root_node",
    "spec_from_node",
    "sub_catalog",
    "DirectSum",
    "OuterTensor",
]
