"""Exact linear algebra over Q or Q(alpha): fraction-free elimination, rank, kernel."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import as_scalar


def echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Row echelon form by Bareiss fraction-free elimination.

    Returns the echelon rows (zero rows dropped) and the pivot columns.
    """
    M = [[as_scalar(x) for x in r] for r in rows]
    if not M:
        return [], []
    m, n = len(M), len(M[0])
    prev = Fraction(1)
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        a = pr[c]
        for i in range(r + 1, m):
            row = M[i]
            b = row[c]
            for j in range(c + 1, n):
                row[j] = (a * row[j] - b * pr[j]) / prev
            row[c] = Fraction(0)
        prev = a
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(echelon(rows)[1])


def kernel(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of the right kernel ``{x : M x = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    E, pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = E[r]
            s = Fraction(0)
            for j in range(pc + 1, ncols):
                if row[j] and x[j]:
                    s = s + row[j] * x[j]
            x[pc] = -s / row[pc]
        basis.append(x)
    return basis


def det3(m) -> object:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
