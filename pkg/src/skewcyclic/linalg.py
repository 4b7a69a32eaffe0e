"""Dense linear algebra over a FieldSpec, on integer-code matrices, plus a
fraction-free determinant for matrices of polynomials."""

from __future__ import annotations

from .fields import FieldSpec, Poly


def poly_det(field: FieldSpec, rows) -> Poly:
    """Bareiss determinant of a square list-of-lists of Poly over F[z]."""
    n = len(rows)
    assert all(len(r) == n for r in rows), "matrix must be square"
    a = [list(r) for r in rows]
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(field)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = Poly.zero(field)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _echelon(field: FieldSpec, rows, ncols):
    """Row-reduce in place; returns list of pivot column indices."""
    mul, inv, sub = field._mul, field.inv_c, field.sub_c
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        f = inv(piv[c])
        if f != 1:
            rows[r] = piv = [mul[x][f] for x in piv]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                g = rows[i][c]
                row = rows[i]
                rows[i] = [sub(x, mul[g][y]) for x, y in zip(row, piv)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(field: FieldSpec, matrix) -> int:
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    return len(_echelon(field, rows, len(rows[0])))


def solve(field: FieldSpec, matrix, rhs):
    """One solution of matrix @ x = rhs (codes), or None if inconsistent."""
    if not matrix:
        return [] if not any(rhs) else None
    ncols = len(matrix[0])
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    pivots = _echelon(field, rows, ncols)
    for i in range(len(pivots), len(rows)):
        if rows[i][ncols]:
            return None
    x = [0] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return x


def nullspace(field: FieldSpec, matrix):
    """Basis of the right nullspace of the matrix (list of code vectors)."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [list(r) for r in matrix]
    pivots = _echelon(field, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    neg = field._neg
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, c in enumerate(pivots):
            v[c] = neg[rows[r][fc]]
        basis.append(v)
    return basis
