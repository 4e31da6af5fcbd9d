"""Small exact linear algebra over gmpy2 rationals.

Everything here works on lists of lists of ``mpq``; sizes are tiny (rank of a
Lie algebra, at most a few dozen), so plain Gaussian elimination is the right
tool.
"""

from math import gcd, lcm

from gmpy2 import mpq

ZERO = mpq(0)
ONE = mpq(1)


def q(x):
    """Coerce an int, str ("p/q"), Fraction or mpq to mpq."""
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


def vec(xs):
    return tuple(mpq(x) for x in xs)


def dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u):
    return tuple(c * a for a in u)


def matmul(a, b):
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (matrix, pivot column list)."""
    m = [list(map(mpq, r)) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, n):
    """Basis of {x in Q^n : rows @ x = 0}."""
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
    m, piv = rref(rows, n)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for i, pc in enumerate(piv):
            x[pc] = -m[i][f]
        basis.append(tuple(x))
    return basis


def solve(a, b):
    """Solve the square nonsingular system a x = b (b a vector)."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    m, piv = rref(aug, n)
    if len(piv) < n:
        raise ValueError("singular system")
    return tuple(m[i][n] for i in range(n))


def inverse(a):
    n = len(a)
    aug = [list(a[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    m, piv = rref(aug, n)
    if len(piv) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in m]


def primitive(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    dens = [int(x.denominator) for x in v if x != 0]
    if not dens:
        return tuple(ZERO for _ in v)
    d = lcm(*dens)
    ints = [int(x * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(mpq(x // g) for x in ints)


def fmt(x):
    """Render a rational as "p/q" or "p"."""
    x = mpq(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return f"{int(x.numerator)}/{int(x.denominator)}"
