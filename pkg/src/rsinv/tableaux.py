"""Standard Young tableaux stored as ragged rows of entries.

A tableau is a tuple of rows (tuples of ints); a shape is the tuple of row
lengths.  Entries of a standard tableau on n boxes are exactly 1..n,
strictly increasing along rows and down columns.  The empty tableau ``()``
is valid.
"""
from __future__ import annotations

import json
from typing import Sequence

from .errors import InvalidTableau

Tableau = tuple[tuple[int, ...], ...]
Shape = tuple[int, ...]


def as_tableau(rows: Sequence[Sequence[int]]) -> Tableau:
    return tuple(tuple(row) for row in rows)


def shape(t: Sequence[Sequence[int]]) -> Shape:
    return tuple(len(row) for row in t)


def size(t: Sequence[Sequence[int]]) -> int:
    return sum(len(row) for row in t)


def conjugate(s: Sequence[int]) -> Shape:
    """
    The conjugate partition: column lengths of the Young diagram.

    >>> conjugate((3, 3, 2, 1))
    (4, 3, 2)
    """
    if not s:
        return ()
    return tuple(sum(1 for length in s if length > c) for c in range(max(s)))


def validate(t: Sequence[Sequence[int]]) -> bool:
    """
    True iff t is a standard Young tableau: weakly decreasing positive row
    lengths, entries exactly 1..n, rows and columns strictly increasing.
    Returns False on any violation instead of raising, so it can screen
    untrusted input.
    """
    rows = [list(row) for row in t]
    lengths = [len(row) for row in rows]
    if any(length == 0 for length in lengths):
        return False
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    n = sum(lengths)
    entries = [v for row in rows for v in row]
    if sorted(entries) != list(range(1, n + 1)):
        return False
    for row in rows:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for r in range(len(rows) - 1):
        below = rows[r + 1]
        if any(rows[r][c] >= below[c] for c in range(len(below))):
            return False
    return True


def check_tableau(t: Sequence[Sequence[int]]) -> Tableau:
    tab = as_tableau(t)
    if not validate(tab):
        raise InvalidTableau(f"not a standard Young tableau: {tab}")
    return tab


def transpose(t: Sequence[Sequence[int]]) -> Tableau:
    """
    Reflect across the main diagonal: the entry in row r, column c moves to
    row c, column r.

    >>> transpose(((1, 3, 6), (2, 4, 7), (5, 8), (9,)))
    ((1, 2, 5, 9), (3, 4, 8), (6, 7))
    """
    if not t:
        return ()
    width = len(t[0])
    return tuple(
        tuple(row[c] for row in t if len(row) > c) for c in range(width)
    )


def row_of_entry(t: Sequence[Sequence[int]]) -> dict[int, int]:
    """Map each entry to its 1-based row index."""
    return {v: r for r, row in enumerate(t, start=1) for v in row}


def column_of_entry(t: Sequence[Sequence[int]]) -> dict[int, int]:
    """Map each entry to its 1-based column index."""
    return {v: c for row in t for c, v in enumerate(row, start=1)}


def tableau_descents(t: Sequence[Sequence[int]]) -> set[int]:
    """
    Entries i such that i+1 lies in a strictly lower row.

    >>> sorted(tableau_descents(((1, 2, 5, 9), (3, 4, 8), (6, 7))))
    [2, 5]
    """
    row = row_of_entry(t)
    return {i for i in range(1, size(t)) if row[i + 1] > row[i]}


def is_layered_tableau(t: Sequence[Sequence[int]]) -> bool:
    """
    True iff every entry i+1 sits either in the row directly below i's row
    or in the top row.  Vacuously true on 0 or 1 boxes.
    """
    row = row_of_entry(t)
    return all(
        row[i + 1] == row[i] + 1 or row[i + 1] == 1 for i in range(1, size(t))
    )


def satisfies_transposed_layer(t: Sequence[Sequence[int]]) -> bool:
    """
    True iff every entry i+1 sits either in the first column or in the
    column immediately right of i's column.
    """
    col = column_of_entry(t)
    return all(
        col[i + 1] == col[i] + 1 or col[i + 1] == 1 for i in range(1, size(t))
    )


def first_column(t: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Entries of the leftmost column, top to bottom."""
    return tuple(row[0] for row in t)


def tableau_to_json(t: Sequence[Sequence[int]]) -> str:
    """Serialize as ``{"rows":[[...],...]}`` with rows top to bottom."""
    return json.dumps({"rows": [list(row) for row in t]}, separators=(",", ":"))


def tableau_from_json(text: str) -> Tableau:
    """Parse and validate the JSON tableau format; raises InvalidTableau."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidTableau(f"bad tableau JSON: {exc}") from exc
    if not isinstance(data, dict) or set(data) != {"rows"}:
        raise InvalidTableau('tableau JSON must be an object with single key "rows"')
    rows = data["rows"]
    if not isinstance(rows, list) or not all(
        isinstance(row, list) and all(isinstance(v, int) for v in row) for row in rows
    ):
        raise InvalidTableau('"rows" must be a list of lists of integers')
    return check_tableau(rows)
