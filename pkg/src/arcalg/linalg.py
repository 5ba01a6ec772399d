"""Exact integer/rational linear algebra for the tensor-space oracle.

Matrices are lists of integer rows.  Elimination keeps rows integral by
cross-multiplying and dividing out the row gcd, so entries stay small;
rational back-substitution happens only when extracting nullspace
vectors, and those are cleared back to integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

Row = List[int]
Matrix = List[Row]


def _reduce_row(row: Row) -> Row:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def _clear_row(row: Sequence) -> Row:
    """Scale a row of ints/Fractions to coprime integers."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    return _reduce_row([int(x * denom) for x in row])


def row_echelon(mat: Matrix) -> Tuple[Matrix, List[int]]:
    """Integer row echelon form; returns (rows, pivot column indices).
    Rational rows are cleared to integers first (row scaling preserves
    pivots and kernels)."""
    rows = [_clear_row(r) for r in mat if any(r)]
    ncols = len(rows[0]) if rows else 0
    echelon: Matrix = []
    pivots: List[int] = []
    col = 0
    while rows and col < ncols:
        pivot_idx = None
        for k, r in enumerate(rows):
            if r[col]:
                # prefer the smallest pivot to limit growth
                if pivot_idx is None or abs(r[col]) < abs(rows[pivot_idx][col]):
                    pivot_idx = k
        if pivot_idx is None:
            col += 1
            continue
        piv = rows.pop(pivot_idx)
        pv = piv[col]
        nxt = []
        for r in rows:
            if r[col]:
                f = r[col]
                g = gcd(pv, f)
                a, b = pv // g, f // g
                r = [a * x - b * y for x, y in zip(r, piv)]
                r = _reduce_row(r)
            if any(r):
                nxt.append(r)
        rows = nxt
        echelon.append(piv)
        pivots.append(col)
        col += 1
    return echelon, pivots


def rank(mat: Matrix) -> int:
    return len(row_echelon(mat)[0])


def nullspace(mat: Matrix, ncols: int) -> Matrix:
    """Integer basis of {v : mat . v = 0} (v a column vector of length
    ncols); returned as rows."""
    if not mat:
        return [[1 if j == k else 0 for j in range(ncols)]
                for k in range(ncols)]
    echelon, pivots = row_echelon(mat)
    free = [j for j in range(ncols) if j not in pivots]
    basis: Matrix = []
    for f in free:
        v: List[Fraction] = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i in range(len(echelon) - 1, -1, -1):
            p = pivots[i]
            s = sum((Fraction(echelon[i][j]) * v[j]
                     for j in range(p + 1, ncols) if v[j]), Fraction(0))
            v[p] = -s / echelon[i][p]
        denom = 1
        for x in v:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in v]
        basis.append(_reduce_row(ints))
    return basis


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_sub_scaled_identity(a: Matrix, c: int) -> Matrix:
    return [[x - c if i == j else x for j, x in enumerate(row)]
            for i, row in enumerate(a)]


def intersect_rowspaces(a: Matrix, b: Matrix) -> Matrix:
    """Row basis of row-space(a) ∩ row-space(b)."""
    if not a or not b:
        return []
    stacked = [list(r) for r in a] + [list(r) for r in b]
    ka = len(a)
    combos = nullspace([list(col) for col in zip(*stacked)], len(stacked))
    rows = []
    for w in combos:
        v = [sum(w[i] * a[i][j] for i in range(ka))
             for j in range(len(a[0]))]
        if any(v):
            rows.append(_reduce_row(v))
    return row_echelon(rows)[0]


def iterated_left_kernel(a: Matrix, c: int) -> Matrix:
    """Integer row-basis of the generalised eigenspace of v -> v . a at
    eigenvalue c, via kernels of integer powers of (a - cI)."""
    k = len(a)
    if k == 0:
        return []
    shifted = mat_sub_scaled_identity(a, c)

    def left_kernel(mat: Matrix) -> Matrix:
        return nullspace([list(col) for col in zip(*mat)], k)

    power = shifted
    space = left_kernel(power)
    while 0 < len(space) < k:
        power = mat_mul(power, shifted)
        bigger = left_kernel(power)
        if len(bigger) == len(space):
            break
        space = bigger
    return space
