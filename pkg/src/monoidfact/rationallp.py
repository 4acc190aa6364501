"""Exact feasibility for small systems of linear inequalities over Q.

Single entry point: find a rational point f with dot(a_i, f) >= 1 for every
row a_i, or report that none exists.  Implemented as a dense phase-1 simplex
on Fractions with Bland's rule, so it terminates and never rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_geq_one(rows: Sequence[Sequence[int]], dim: int) -> list[Fraction] | None:
    """Return f in Q^dim with row . f >= 1 for all rows, or None.

    Free variables are split as f = u - v with u, v >= 0, a surplus is
    subtracted per row, and artificials complete the phase-1 basis.
    """
    m = len(rows)
    if m == 0:
        return [Fraction(0)] * dim
    n = 2 * dim + m  # u, v, surplus
    tab = []
    for i, row in enumerate(rows):
        line = [Fraction(c) for c in row]
        line += [Fraction(-c) for c in row]
        line += [Fraction(-1) if j == i else Fraction(0) for j in range(m)]
        line += [Fraction(1) if j == i else Fraction(0) for j in range(m)]  # artificial
        line.append(Fraction(1))  # rhs
        tab.append(line)
    ncols = n + m + 1
    basis = [n + i for i in range(m)]
    # Phase-1 objective: minimize the artificial sum; its reduced-cost row is
    # the negated sum of the constraint rows on non-artificial columns.
    obj = [Fraction(0)] * ncols
    for i in range(m):
        for j in range(ncols):
            obj[j] -= tab[i][j]
    for i in range(m):
        obj[n + i] = Fraction(0)

    while True:
        enter = -1
        for j in range(n + m):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # Unbounded phase-1 objective cannot happen (bounded below by 0).
            return None
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter

    if -obj[-1] != 0:
        return None
    values = [Fraction(0)] * (n + m)
    for i, b in enumerate(basis):
        values[b] = tab[i][-1]
    return [values[j] - values[dim + j] for j in range(dim)]
