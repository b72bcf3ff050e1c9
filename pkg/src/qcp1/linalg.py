"""Exact linear algebra over Q(i)(v).

Rows are cleared to Gaussian polynomials (pairs of ``fmpq_poly``), then
reduced by fraction-free Gauss-Jordan elimination.  After every row update the
row's polynomial content is divided out, which keeps degrees small.
"""
from __future__ import annotations

from typing import Sequence

from flint import fmpq_poly

from .scalar import ONE, ZERO, Scalar

_P0 = fmpq_poly([])


def _clear_row(row: Sequence[Scalar]) -> list:
    """Multiply a row by the lcm of its denominators; return [(re, im)] polynomials."""
    den = fmpq_poly([1])
    for x in row:
        if not x.is_zero():
            g = den.gcd(x.den)
            den = den * (x.den // g)
    out = []
    for x in row:
        if x.is_zero():
            out.append((_P0, _P0))
        else:
            f = den // x.den
            out.append((x.re * f, x.im * f))
    return _strip(out)


def _is_zero(e) -> bool:
    return e[0] == 0 and e[1] == 0


def _mul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _strip(row: list) -> list:
    g = None
    for re, im in row:
        for p in (re, im):
            if p != 0:
                g = p if g is None else g.gcd(p)
                if g.degree() == 0:
                    break
    if g is None:
        return row
    lead = g.coeffs()[-1]
    if g.degree() == 0 and lead == 1:
        return row
    if g.degree() == 0:
        return [(re / lead, im / lead) for re, im in row]
    return [(re // g, im // g) for re, im in row]


def _degree(e) -> int:
    return max(e[0].degree(), e[1].degree())


def _to_scalar(e) -> Scalar:
    return Scalar(e[0], e[1], fmpq_poly([1]))


def row_reduce(rows: Sequence[Sequence[Scalar]], ncols: int):
    """Fraction-free Gauss-Jordan.  Returns (reduced rows, pivot columns).

    Pivots are taken column by column from left to right, so earlier columns
    are preferred; within a column the lowest-degree entry is chosen.
    """
    mat = [_clear_row(r) for r in rows]
    mat = [r for r in mat if any(not _is_zero(e) for e in r)]
    pivots = []
    top = 0
    for col in range(ncols):
        best = None
        for i in range(top, len(mat)):
            e = mat[i][col]
            if not _is_zero(e):
                d = _degree(e)
                if best is None or d < best[1]:
                    best = (i, d)
                    if d == 0:
                        break
        if best is None:
            continue
        i = best[0]
        mat[top], mat[i] = mat[i], mat[top]
        prow = mat[top]
        p = prow[col]
        for j in range(len(mat)):
            if j == top:
                continue
            e = mat[j][col]
            if _is_zero(e):
                continue
            r = mat[j]
            mat[j] = _strip([_sub(_mul(p, r[k]), _mul(e, prow[k])) for k in range(ncols)])
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


def rank(rows: Sequence[Sequence[Scalar]], ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> list:
    """Basis of {x : A x = 0}; one vector per free column, with a 1 in that column."""
    red, pivots = row_reduce(rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, pc in zip(red, pivots):
            e = r[f]
            if not _is_zero(e):
                x[pc] = -(_to_scalar(e) / _to_scalar(r[pc]))
        basis.append(x)
    return basis


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int):
    """One solution of A x = b (free variables set to 0), or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = row_reduce(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, pc in zip(red, pivots):
        e = r[ncols]
        if not _is_zero(e):
            x[pc] = _to_scalar(e) / _to_scalar(r[pc])
    return x


def matvec(rows: Sequence[Sequence[Scalar]], x: Sequence[Scalar]) -> list:
    out = []
    for r in rows:
        s = ZERO
        for a, b in zip(r, x):
            if not a.is_zero() and not b.is_zero():
                s = s + a * b
        out.append(s)
    return out


__all__ = ["row_reduce", "rank", "nullspace", "solve", "matvec"]
