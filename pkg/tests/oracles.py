"""Independent reference computations used to cross-check the package.

Nothing here imports the package under test.  The vertex enumerator is
the textbook brute force: solve every maximal subsystem of active
constraints and keep the feasible unique solutions.
"""

from fractions import Fraction
from itertools import combinations


def _rref(rows, ncols):
    m = [[Fraction(x) for x in r] for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    return m[:r], piv


def parametrize(eqs, dim):
    """``{x : n.x = b}`` as ``x0 + N t``; ``None`` when inconsistent."""
    if not eqs:
        return [Fraction(0)] * dim, [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    red, piv = _rref([list(n) + [b] for n, b in eqs], dim + 1)
    if dim in piv:
        return None
    x0 = [Fraction(0)] * dim
    for row, p in zip(red, piv):
        x0[p] = row[dim]
    free = [c for c in range(dim) if c not in piv]
    cols = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        cols.append(v)
    return x0, cols


def _solve_square(rows, rhs):
    k = len(rows)
    red, piv = _rref([list(r) + [b] for r, b in zip(rows, rhs)], k + 1)
    if piv != list(range(k)):
        return None
    return [red[i][k] for i in range(k)]


def brute_force_vertices(ineqs, eqs, dim):
    """Vertices of ``{x : n.x <= b for ineqs, n.x = b for eqs}``."""
    par = parametrize(eqs, dim)
    if par is None:
        return []
    x0, cols = par
    k = len(cols)
    rows = []
    for n, b in ineqs:
        a = [sum(Fraction(ni) * c[i] for i, ni in enumerate(n)) for c in cols]
        r = Fraction(b) - sum(Fraction(ni) * x for ni, x in zip(n, x0))
        if all(x == 0 for x in a):
            if r < 0:
                return []
            continue
        rows.append((tuple(a), r))
    rows = sorted(set(rows))

    def point(t):
        return tuple(x0[i] + sum(t[j] * cols[j][i] for j in range(k)) for i in range(dim))

    def feasible(t):
        return all(sum(ai * ti for ai, ti in zip(a, t)) <= r for a, r in rows)

    if k == 0:
        return [tuple(x0)]
    out = set()
    for sub in combinations(rows, k):
        t = _solve_square([a for a, _ in sub], [r for _, r in sub])
        if t is not None and feasible(t):
            out.add(point(t))
    return sorted(out)


def dirac_measures(n):
    """Point masses on the subsets of {1..n}, subsets in bitmask order."""
    return sorted(tuple(Fraction((m >> i) & 1) for m in range(1 << n)) for i in range(n))


def grid_norm(positive, unit, x, den=64, steps=640):
    """Least ``k/den`` with ``-a u <= x <= a u``, from a membership predicate."""
    for k in range(1, steps + 1):
        a = Fraction(k, den)
        up = tuple(a * u - xi for u, xi in zip(unit, x))
        down = tuple(a * u + xi for u, xi in zip(unit, x))
        if positive(up) and positive(down):
            return a
    return None


def lex_positive(v):
    x, y = v
    return (x >= 0 and y == 0) or y > 0


def halfplane_positive(v):
    x, y = v
    return y > 0 or (x == 0 and y == 0)


def quadrant_positive(v):
    x, y = v
    return (x == 0 and y == 0) or (x > 0 and y > 0)


def affine_on_vertices_solve(vertices, images):
    """Direct least-structure solve of ``M v_i = w_i`` by elimination."""
    d = len(vertices[0])
    m = len(images[0])
    M = []
    for r in range(m):
        red, piv = _rref([list(v) + [w[r]] for v, w in zip(vertices, images)], d + 1)
        if d in piv:
            return None
        row = [Fraction(0)] * d
        for rr, p in zip(red, piv):
            row[p] = rr[d]
        M.append(tuple(row))
    return tuple(M)
