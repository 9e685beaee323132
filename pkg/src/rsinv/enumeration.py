"""Generators for permutation and tableau families, partition machinery,
and the count of permutations whose insertion and recording tableaux are
both layered.

All streams are lazy with documented deterministic orders, and all counts
use exact integer arithmetic.
"""
from __future__ import annotations

import os
from functools import lru_cache
from itertools import permutations as _symmetric_group
from math import factorial
from typing import Iterator, Sequence

from .errors import InstanceTooLarge
from .greene import is_dually_gfk_tight
from .permutations import Perm, inverse
from .rsk import inverse_rsk
from .tableaux import Shape, Tableau, as_tableau
from .tableaux import shape as shape_of

Partition = tuple[int, ...]
Composition = tuple[int, ...]

#: largest n for which the n!-scan count is allowed
BRUTE_COUNT_CAP = 8


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """
    All partitions of n in reverse-lexicographic order.

    >>> list(partitions(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n == 0:
        yield ()
        return
    bound = n if largest is None else min(largest, n)
    for first in range(bound, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """
    Number of partitions of n by Euler's pentagonal-number recurrence
    (independent of the partitions generator, which tests compare against).

    >>> [partition_count(n) for n in range(8)]
    [1, 1, 2, 3, 5, 7, 11, 15]
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 else -1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def compositions(n: int) -> Iterator[Composition]:
    """
    All compositions of n in lexicographic order of parts.

    >>> list(compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def comp_count(parts: Sequence[int]) -> int:
    """
    Number of distinct compositions obtained by rearranging the parts of a
    partition: the multinomial (number of parts)! / product(multiplicity!).

    >>> comp_count((3, 2, 1)), comp_count((2, 2, 1, 1, 1))
    (6, 10)
    """
    result = factorial(len(parts))
    for part in set(parts):
        result //= factorial(list(parts).count(part))
    return result


def count_A(n: int) -> int:
    """
    Number of permutations of length n whose insertion and recording
    tableaux are both layered: the sum of comp_count(h)**2 over all
    partitions h of n.

    >>> [count_A(n) for n in range(1, 5)]
    [1, 2, 6, 16]
    """
    return sum(comp_count(h) ** 2 for h in partitions(n))


def count_layered(n: int) -> int:
    """Layered permutations of length n are in bijection with compositions."""
    return 2 ** (n - 1) if n >= 1 else 1


@lru_cache(maxsize=None)
def count_involutions(n: int) -> int:
    """Involution numbers by the recurrence I(n) = I(n-1) + (n-1) I(n-2)."""
    if n <= 1:
        return 1
    return count_involutions(n - 1) + (n - 1) * count_involutions(n - 2)


def layered_from_composition(parts: Sequence[int]) -> Perm:
    """The layered permutation whose layer lengths are the given parts."""
    out: list[int] = []
    base = 0
    for width in parts:
        out.extend(range(base + width, base, -1))
        base += width
    return tuple(out)


def layered_permutations(n: int) -> Iterator[Perm]:
    """
    All 2^(n-1) layered permutations of length n, one per composition, in
    the composition order of ``compositions``.

    >>> list(layered_permutations(3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    """
    for parts in compositions(n):
        yield layered_from_composition(parts)


def involutions(n: int) -> Iterator[Perm]:
    """
    All involutions of length n in lexicographic one-line order: the
    smallest unmatched element is first fixed, then paired with each larger
    element in turn.

    >>> list(involutions(3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    """

    def matchings(elems: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not elems:
            yield []
            return
        a, rest = elems[0], elems[1:]
        for sub in matchings(rest):
            yield [(a, a)] + sub
        for i, b in enumerate(rest):
            remaining = rest[:i] + rest[i + 1 :]
            for sub in matchings(remaining):
                yield [(a, b)] + sub

    for pairs in matchings(tuple(range(1, n + 1))):
        word = [0] * n
        for a, b in pairs:
            word[a - 1], word[b - 1] = b, a
        yield tuple(word)


def layered_tableaux(n: int) -> Iterator[Tableau]:
    """
    All 2^(n-1) standard tableaux in which each entry i+1 sits directly
    below i or in the top row, grown entry by entry; at each step the
    top-row placement is emitted before the below placement.

    >>> list(layered_tableaux(2))
    [((1, 2),), ((1,), (2,))]
    """
    if n == 0:
        yield ()
        return

    rows: list[list[int]] = [[1]]

    def extend(entry: int, prev_row: int) -> Iterator[Tableau]:
        if entry > n:
            yield as_tableau(rows)
            return
        rows[0].append(entry)
        yield from extend(entry + 1, 0)
        rows[0].pop()
        below = prev_row + 1
        if below == len(rows):
            rows.append([])
        rows[below].append(entry)
        yield from extend(entry + 1, below)
        rows[below].pop()
        if not rows[below]:
            rows.pop()

    yield from extend(2, 0)


def standard_tableaux(n: int) -> Iterator[Tableau]:
    """
    All standard Young tableaux on n boxes, grown by appending each next
    entry to every legal row end (top row first).
    """
    if n == 0:
        yield ()
        return

    rows: list[list[int]] = [[1]]

    def grow(entry: int) -> Iterator[Tableau]:
        if entry > n:
            yield as_tableau(rows)
            return
        for r in range(len(rows)):
            if r == 0 or len(rows[r]) < len(rows[r - 1]):
                rows[r].append(entry)
                yield from grow(entry + 1)
                rows[r].pop()
        rows.append([entry])
        yield from grow(entry + 1)
        rows.pop()

    yield from grow(2)


def layered_tableaux_by_shape(n: int) -> dict[Shape, list[Tableau]]:
    """Layered tableaux grouped by shape, preserving generation order."""
    grouped: dict[Shape, list[Tableau]] = {}
    for t in layered_tableaux(n):
        grouped.setdefault(shape_of(t), []).append(t)
    return grouped


def generalized_layered(n: int) -> Iterator[Perm]:
    """
    The permutations whose insertion and recording tableaux are both
    layered: the inverse correspondence applied to every ordered pair of
    equal-shape layered tableaux.  Shapes run in the reverse-lexicographic
    partition order, pairs in generation order.

    >>> list(generalized_layered(2))
    [(1, 2), (2, 1)]
    """
    grouped = layered_tableaux_by_shape(n)
    for shp in partitions(n):
        group = grouped.get(shp, [])
        for p_tab in group:
            for q_tab in group:
                yield inverse_rsk((p_tab, q_tab))


def brute_count_general(n: int) -> int:
    """
    Count, by full n!-scan with the subset oracle, the permutations p such
    that p and its inverse are both dually GFK-tight.  Must agree with
    count_A; capped because the scan is factorial.
    """
    cap = BRUTE_COUNT_CAP
    env = os.environ.get("RSINV_MAX_N")
    if env:
        cap = min(cap, int(env))
    if n > cap:
        raise InstanceTooLarge(f"factorial scan capped at n <= {cap}, got {n}")
    count = 0
    for p in _symmetric_group(range(1, n + 1)):
        if is_dually_gfk_tight(p) and is_dually_gfk_tight(inverse(p)):
            count += 1
    return count


def verify_bounds(n: int) -> bool:
    """
    Exact-integer check of 4^(n-1)/p(n) <= count_A(n) <= 4^(n-1); the lower
    bound is compared as p(n) * count_A(n) >= 4^(n-1) to stay in integers.
    """
    a_n = count_A(n)
    power = 4 ** (n - 1)
    return partition_count(n) * a_n >= power and a_n <= power
