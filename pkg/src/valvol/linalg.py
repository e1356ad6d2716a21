"""Exact dense linear algebra over the coefficient field K.

Matrices are lists of rows of FieldElem.  Everything here is plain
fraction-field Gaussian elimination with a sparsity-biased pivot choice;
sizes stay at desk scale throughout the package.
"""

from __future__ import annotations


def zeros(ctx, m, n):
    return [[ctx.zero() for _ in range(n)] for _ in range(m)]


def identity(ctx, n):
    a = zeros(ctx, n, n)
    one = ctx.one()
    for i in range(n):
        a[i][i] = one
    return a


def mat_vec(a, x):
    out = []
    for row in a:
        acc = None
        for c, xi in zip(row, x):
            if c.is_zero() or xi.is_zero():
                continue
            term = c * xi
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else row[0].ctx.zero())
    return out


def _weight(e):
    return len(e.num) + len(e.den)


def _forward_eliminate(rows, ncols):
    """In-place echelon form; returns list of (row_index, col_index) pivots."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        best = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                w = _weight(rows[i][c])
                if best is None or w < best[1]:
                    best = (i, w)
        if best is None:
            continue
        i = best[0]
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        inv = piv.inverse()
        for i in range(r + 1, nrows):
            if rows[i][c].is_zero():
                continue
            f = rows[i][c] * inv
            rows[i][c] = piv.ctx.zero()
            for j in range(c + 1, len(rows[i])):
                if not rows[r][j].is_zero():
                    rows[i][j] = rows[i][j] - f * rows[r][j]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return pivots


def solve(ctx, a, b):
    """One exact solution of A x = b (free variables set to 0), or None."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [list(a[i]) + [b[i]] for i in range(m)]
    pivots = _forward_eliminate(rows, n)
    rank = len(pivots)
    for i in range(rank, m):
        if not rows[i][n].is_zero():
            return None
    x = [ctx.zero() for _ in range(n)]
    for r, c in reversed(pivots):
        acc = rows[r][n]
        for j in range(c + 1, n):
            if not rows[r][j].is_zero() and not x[j].is_zero():
                acc = acc - rows[r][j] * x[j]
        x[c] = acc * rows[r][c].inverse()
    return x


def nullspace(ctx, a):
    """Basis of ker A as a list of length-n vectors."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [list(r) for r in a]
    pivots = _forward_eliminate(rows, n)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        x = [ctx.zero() for _ in range(n)]
        x[fc] = ctx.one()
        for r, c in reversed(pivots):
            acc = ctx.zero()
            for j in range(c + 1, n):
                if not rows[r][j].is_zero() and not x[j].is_zero():
                    acc = acc - rows[r][j] * x[j]
            x[c] = acc * rows[r][c].inverse()
        basis.append(x)
    return basis


def rank(a):
    if not a:
        return 0
    rows = [list(r) for r in a]
    return len(_forward_eliminate(rows, len(a[0])))


def det(ctx, a):
    """Exact determinant of a square matrix over K."""
    n = len(a)
    if n == 0:
        return ctx.one()
    rows = [list(r) for r in a]
    sign = 1
    acc = ctx.one()
    for c in range(n):
        best = None
        for i in range(c, n):
            if not rows[i][c].is_zero():
                w = _weight(rows[i][c])
                if best is None or w < best[1]:
                    best = (i, w)
        if best is None:
            return ctx.zero()
        i = best[0]
        if i != c:
            rows[c], rows[i] = rows[i], rows[c]
            sign = -sign
        piv = rows[c][c]
        acc = acc * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if rows[i][c].is_zero():
                continue
            f = rows[i][c] * inv
            for j in range(c + 1, n):
                if not rows[c][j].is_zero():
                    rows[i][j] = rows[i][j] - f * rows[c][j]
    return acc if sign == 1 else -acc
