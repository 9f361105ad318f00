"""Exact rank and nullspace of integer matrices over the rationals."""

from __future__ import annotations

from fractions import Fraction


def rational_rank(rows: list[list[int]]) -> int:
    """Rank by Gaussian elimination with exact Fraction arithmetic."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def rational_nullspace(rows: list[list[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, via reduced row echelon form.

    Returned vectors are scaled to integer entries with content 1.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        denom = 1
        for x in v:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        ints = [x * denom for x in v]
        g = 0
        for x in ints:
            g = _gcd(g, abs(int(x)))
        if g > 1:
            ints = [x / g for x in ints]
        basis.append(ints)
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
