"""Row insertion, the Robinson-Schensted correspondence and its inverse,
and the tableau-transpose involution on involutions.

``rsk`` maps a permutation p to the pair (P, Q): P is built by Schensted
row insertion of p's entries in position order, Q records in which cell
each insertion step ended.  Involutions are exactly the permutations with
P = Q, so transposing that common tableau and running the inverse
correspondence defines an involution ``f_involution`` on involutions.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Sequence

from . import tableaux
from .errors import DuplicateEntry, InvalidTableau, NotInvolution, ShapeMismatch
from .permutations import Perm, check_permutation, is_involution
from .tableaux import Tableau


def _bump(rows: list[list[int]], x: int) -> int:
    # Schensted bumping; returns the 0-based row where an append happened.
    r = 0
    while r < len(rows):
        row = rows[r]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return r
        row[j], x = x, row[j]
        r += 1
    rows.append([x])
    return r


def row_insert(t: Sequence[Sequence[int]], x: int) -> tuple[Tableau, int]:
    """
    Insert x into a partial standard tableau (increasing rows and columns,
    any entry set) by row bumping: x replaces the leftmost entry greater
    than x in the first row, the displaced entry recurses into the next
    row, and so on until an append.  Returns the new tableau and the
    1-based row where the append happened.

    >>> row_insert(((1, 4), (2,)), 3)
    (((1, 3), (2, 4)), 2)
    """
    if any(x in row for row in t):
        raise DuplicateEntry(f"entry {x} already present")
    rows = [list(row) for row in t]
    landing = _bump(rows, x)
    return tableaux.as_tableau(rows), landing + 1


def rsk(p: Sequence[int]) -> tuple[Tableau, Tableau]:
    """
    The Robinson-Schensted correspondence: p -> (P, Q) of equal shape.

    >>> rsk((2, 1, 4, 3))
    (((1, 3), (2, 4)), ((1, 3), (2, 4)))
    """
    check_permutation(p)
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(p, start=1):
        landing = _bump(prows, x)
        if landing == len(qrows):
            qrows.append([step])
        else:
            qrows[landing].append(step)
    return tableaux.as_tableau(prows), tableaux.as_tableau(qrows)


def inverse_rsk(pair: tuple[Sequence[Sequence[int]], Sequence[Sequence[int]]]) -> Perm:
    """
    The unique permutation p with rsk(p) == pair, obtained by reverse
    bumping the cells of P in decreasing order of Q's entries.

    >>> inverse_rsk((((1, 2, 5, 9), (3, 4, 8), (6, 7)),) * 2)
    (6, 7, 3, 4, 8, 1, 2, 5, 9)
    """
    p_tab, q_tab = pair
    for t in (p_tab, q_tab):
        if not tableaux.validate(t):
            raise InvalidTableau(f"not a standard Young tableau: {tableaux.as_tableau(t)}")
    if tableaux.shape(p_tab) != tableaux.shape(q_tab):
        raise ShapeMismatch(
            f"shapes differ: {tableaux.shape(p_tab)} vs {tableaux.shape(q_tab)}"
        )
    n = tableaux.size(p_tab)
    row_of = {v: r for r, row in enumerate(q_tab) for v in row}
    rows = [list(row) for row in p_tab]
    out = [0] * n
    for k in range(n, 0, -1):
        x = rows[row_of[k]].pop()
        for r in range(row_of[k] - 1, -1, -1):
            row = rows[r]
            j = bisect_left(row, x) - 1
            row[j], x = x, row[j]
        out[k - 1] = x
    return tuple(out)


def tableau_of_involution(p: Sequence[int]) -> Tableau:
    """The common insertion/recording tableau P(p) = Q(p) of an involution."""
    if not is_involution(check_permutation(p)):
        raise NotInvolution(f"not an involution: {tuple(p)}")
    p_tab, _ = rsk(p)
    return p_tab


def f_involution(p: Sequence[int]) -> Perm:
    """
    Transpose the tableau of the involution p and apply the inverse
    correspondence.  This map is an involution on involutions.

    >>> f_involution((2, 1, 5, 4, 3, 9, 8, 7, 6))
    (6, 7, 3, 4, 8, 1, 2, 5, 9)
    """
    flipped = tableaux.transpose(tableau_of_involution(p))
    return inverse_rsk((flipped, flipped))
