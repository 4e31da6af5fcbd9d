"""Classification of semisimple h inside classical g by the rho trichotomy.

``classify`` walks the subalgebra lattice downward from g.  A node whose
pair is strictly dominated is not expanded: if 2 rho_h < rho_g holds for h,
it holds for every semisimple subalgebra of h.  All other nodes are expanded,
and those whose pair has witness vectors become rows.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .embedding import form_admitted
from .rho import VerdictKind, decide_difference, monotone_prune
from .roots import build_root_system, diagram_automorphisms
from .subalgebras import (
    Node,
    canonical,
    children,
    decompose,
    describe_h,
    node_difference,
    root_node,
    spec_from_node,
)
from .weights import dimension, enumerate_dominant, weight_system


class ClassifierError(ValueError):
    pass


SUPPORTED = {"sl": 2, "so": 7, "sp": 1}


@dataclass(frozen=True)
class ClassificationRow:
    g: tuple
    h: str
    node: Node
    verdict: object

    @property
    def spec(self):
        return spec_from_node(self.node)

    @property
    def witness(self):
        w = self.verdict.witness
        return "all of a_+" if w.is_full_chamber else w


def thread_count():
    raw = os.environ.get("RHO_KIT_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ClassifierError("RHO_KIT_THREADS must be a positive integer") from None
    return 1


def node_verdict(node):
    return decide_difference(node_difference(node))


def _verdicts(nodes, pool):
    if pool is None:
        return [node_verdict(n) for n in nodes]
    return list(pool.map(node_verdict, nodes, chunksize=4))


def _check_g(family, n):
    if family not in SUPPORTED:
        raise ClassifierError(f"unsupported ambient {family!r}; expected one of sl, so, sp")
    if n < SUPPORTED[family]:
        raise ClassifierError(f"{family}:{n} is outside the supported range")


def explore(family, n, depth_bound=None, prune=True, threads=None):
    """Verdicts of every node visited below g (canonical node -> Verdict)."""
    _check_g(family, n)
    threads = thread_count() if threads is None else threads
    start = canonical(root_node(family, n))
    verdicts = {}
    level = [start]
    depth = 0
    pool = ProcessPoolExecutor(threads) if threads > 1 else None
    try:
        seen = {start}
        while level:
            todo = [nd for nd in level if nd.factors]
            for nd, v in zip(todo, _verdicts(todo, pool)):
                verdicts[nd] = v
            if depth_bound is not None and depth >= depth_bound:
                break
            nxt = []
            for nd in level:
                if not nd.factors:
                    continue
                if prune and monotone_prune(verdicts[nd].strict):
                    continue
                for c in children(nd):
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            level = sorted(nxt)
            depth += 1
    finally:
        if pool is not None:
            pool.shutdown()
    return verdicts


def classify(g, depth_bound=None, prune=True, threads=None):
    """Rows (g, h) with rho_h <= rho_q but not strictly, in a deterministic order."""
    family, n = g
    verdicts = explore(family, n, depth_bound, prune, threads)
    rows = [
        ClassificationRow((family, n), describe_h(nd), nd, v)
        for nd, v in verdicts.items()
        if v.kind is VerdictKind.DOMINATED_WITH_WITNESS
    ]
    rows.sort(key=lambda r: (-sum(k for _, k in r.node.factors), r.node))
    return rows


# ------------------------------------------------------------ simple irreducible scan

SI_TYPES = (("A", 1), ("A", 2), ("A", 3), ("B", 3), ("C", 2), ("C", 3), ("G2", 2), ("D", 4), ("A", 4), ("B", 4), ("C", 4))


@dataclass(frozen=True)
class SiResult:
    h: tuple
    labels: tuple
    ambient: str
    n: int
    verdict: object


def si_scan(g_dim_bound, rank_bound):
    """Verdicts for simple h acting irreducibly on V, dim V <= g_dim_bound, rank h <= rank_bound."""
    if g_dim_bound < 1 or rank_bound < 1:
        raise ClassifierError("bounds must be >= 1")
    out = []
    for t in SI_TYPES:
        if t[1] > rank_bound:
            continue
        f = build_root_system(*t)
        dim_h = 2 * len(f.positive_roots) + f.rank
        seen = set()
        for lab in enumerate_dominant(f, g_dim_bound):
            if not any(lab):
                continue
            key = min(tuple(lab[p.index(k)] for k in range(f.rank)) for p in diagram_automorphisms(*t))
            if key in seen:
                continue
            seen.add(key)
            d = dimension(f, lab)
            sym, skew = form_admitted((f,), decompose((t,), _irrep_weights(t, lab)))
            ambients = [("sl", d)]
            if sym:
                ambients.append(("so", d))
            if skew:
                ambients.append(("sp", d // 2))
            for amb, n in ambients:
                dim_g = {"sl": d * d - 1, "so": d * (d - 1) // 2, "sp": d * (d + 1) // 2}[amb]
                if dim_g == dim_h:
                    continue
                node = Node(amb, n, (t,), (((tuple(lab),), 1),))
                out.append(SiResult(t, tuple(lab), amb, n, node_verdict(node)))
    return out


def _irrep_weights(t, lab):
    return weight_system(build_root_system(*t), tuple(lab)).entries


__all__ = ["ClassificationRow", "classify", "explore", "si_scan", "thread_count"]
