"""Exact minimization of D(x) = sum_i c_i |w_i . x| + l . x over the simplex.

The domain is {x >= 0, sum x = 1}; x_j plays the role of alpha_j(Y).  We
solve the dual problem

    maximize z  subject to  z <= l_j + sum_i y_i w_ij  (all j),  -c_i <= y_i <= c_i

with a bounded-variable primal simplex (Bland's rule) in exact rationals.  It
has only one row per coordinate of x, however many weights there are.  The
row multipliers at the optimum are a minimizer x, and the optimal y is kept
for complementary slackness (used to describe the zero set of D).
"""

from dataclasses import dataclass

from gmpy2 import mpq

from .linalg import ONE, ZERO


class LPError(RuntimeError):
    pass


@dataclass(frozen=True)
class LPResult:
    value: mpq
    x: tuple
    y: tuple
    slack: tuple  # l_j + sum_i y_i w_ij - value, all >= 0


def evaluate(terms, linear, x):
    s = sum((c * abs(sum(a * b for a, b in zip(w, x))) for w, c in terms), ZERO)
    return s + sum((a * b for a, b in zip(linear, x)), ZERO)


def minimize(terms, linear):
    """Minimize over the simplex.  ``terms`` is a list of (w, c) with c > 0."""
    r = len(linear)
    if r == 0:
        raise LPError("empty domain")
    m = len(terms)
    ws = [tuple(mpq(a) for a in w) for w, _ in terms]
    cs = [mpq(c) for _, c in terms]
    if any(c <= 0 for c in cs):
        raise LPError("absolute-value coefficients must be positive")
    # variables: 0..m-1 are u_i = y_i + c_i in [0, 2c_i]; m..m+r-1 slacks s_j >= 0; m+r is z (free)
    nvar = m + r + 1
    zi = m + r
    upper = [2 * c for c in cs] + [None] * r + [None]
    lower = [ZERO] * (m + r) + [None]
    cols = [tuple(-w[j] for j in range(r)) for w in ws]
    cols += [tuple(ONE if k == j else ZERO for k in range(r)) for j in range(r)]
    cols.append(tuple(ONE for _ in range(r)))
    obj = [ZERO] * (m + r) + [ONE]
    b = [mpq(linear[j]) - sum((cs[i] * ws[i][j] for i in range(m)), ZERO) for j in range(r)]

    value = [ZERO] * nvar  # nonbasic u at lower bound 0
    jstar = min(range(r), key=lambda j: (b[j], j))
    basis = [zi if j == jstar else m + j for j in range(r)]
    # B = columns of basis; inverse built directly
    binv = [[ZERO] * r for _ in range(r)]
    for j in range(r):
        if j == jstar:
            binv[j][jstar] = ONE
        else:
            binv[j][j] = ONE
            binv[j][jstar] = -ONE
    xb = [sum((binv[k][j] * b[j] for j in range(r)), ZERO) for k in range(r)]
    for k, v in enumerate(basis):
        value[v] = xb[k]
    in_basis = set(basis)

    for _ in range(100000):
        cb = [obj[v] for v in basis]
        pi = [sum((cb[k] * binv[k][j] for k in range(r)), ZERO) for j in range(r)]
        enter = None
        direction = 0
        for v in range(nvar):
            if v in in_basis:
                continue
            d = obj[v] - sum((p * a for p, a in zip(pi, cols[v]) if a), ZERO)
            at_lower = value[v] == lower[v]
            if d > 0 and (upper[v] is None or value[v] < upper[v]):
                enter, direction = v, 1
                break
            if d < 0 and not at_lower:
                enter, direction = v, -1
                break
        if enter is None:
            break
        col = cols[enter]
        alpha = [sum((binv[k][j] * col[j] for j in range(r) if col[j]), ZERO) for k in range(r)]
        # basic var k changes by -direction * alpha[k] * t; ties go to the smallest index
        cands = []
        if upper[enter] is not None:
            cands.append((upper[enter] - lower[enter], enter, None))
        for k, v in enumerate(basis):
            delta = -direction * alpha[k]
            if delta == 0 or v == zi:
                continue
            if delta < 0:
                cands.append(((value[v] - lower[v]) / (-delta), v, k))
            elif upper[v] is not None:
                cands.append(((upper[v] - value[v]) / delta, v, k))
        best, _, leave = min(cands, key=lambda c: (c[0], c[1])) if cands else (None, None, None)
        if best is None:
            raise LPError("unbounded dual; the simplex slice should make this impossible")
        value[enter] += direction * best
        for k, v in enumerate(basis):
            value[v] -= direction * alpha[k] * best
        if leave is None:
            continue  # bound flip
        out = basis[leave]
        piv = alpha[leave]
        row = [x / piv for x in binv[leave]]
        for k in range(r):
            if k != leave and alpha[k]:
                f = alpha[k]
                binv[k] = [x - f * y for x, y in zip(binv[k], row)]
        binv[leave] = row
        basis[leave] = enter
        in_basis.discard(out)
        in_basis.add(enter)
    else:
        raise LPError("simplex iteration limit reached")

    z = value[zi]
    cb = [obj[v] for v in basis]
    x = tuple(sum((cb[k] * binv[k][j] for k in range(r)), ZERO) for j in range(r))
    y = tuple(value[i] - cs[i] for i in range(m))
    slack = tuple(value[m + j] for j in range(r))
    if any(v < 0 for v in x) or sum(x) != 1:
        raise LPError("dual multipliers are not a point of the simplex")
    if evaluate(list(zip(ws, cs)), linear, x) != z:
        raise LPError("strong duality check failed")
    return LPResult(z, x, y, slack)
