"""Permutations in one-line notation and their structural decompositions.

A permutation of length n is a tuple of the values 1..n, each exactly once;
``p[i]`` is the value in position i+1 (positions and values are 1-based
throughout, the empty tuple is the length-0 permutation).  Functions accept
any integer sequence and return plain tuples.
"""
from __future__ import annotations

from itertools import combinations, permutations as _permutations
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidPermutation, NotInvolution, NotLayered, PatternTooLarge

Perm = tuple[int, ...]

#: largest pattern length accepted by the brute-force containment scan
MAX_PATTERN_LENGTH = 6


class Interval(NamedTuple):
    """The consecutive-integer set {lo, lo+1, ..., hi} (inclusive, lo <= hi)."""

    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def values(self) -> range:
        return range(self.lo, self.hi + 1)


class EntryClassification(NamedTuple):
    """Partition of 1..n into fixed points and the two halves of 2-cycles."""

    fixed: frozenset[int]
    small: frozenset[int]
    large: frozenset[int]


def is_permutation(values: Sequence[int]) -> bool:
    """
    Check that ``values`` is a rearrangement of 1..n where n = len(values).

    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 1), (0, 1)]]
    [True, True, True, False, False]
    """
    return sorted(values) == list(range(1, len(values) + 1))


def check_permutation(values: Sequence[int]) -> Perm:
    """Return ``values`` as a tuple, raising InvalidPermutation if it is not one."""
    p = tuple(values)
    if not is_permutation(p):
        raise InvalidPermutation(f"not a permutation of 1..{len(p)}: {p}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    """The reversing permutation n, n-1, ..., 1."""
    return tuple(range(n, 0, -1))


def parse_permutation(text: str) -> Perm:
    """
    Parse a permutation from text.

    Two formats are accepted: whitespace-separated integers ("2 1 5 4 3")
    and, for n <= 9 only, a compact digit string ("21543").  The compact
    form is rejected for longer inputs because values would need two digits.

    >>> parse_permutation("2 1 5 4 3")
    (2, 1, 5, 4, 3)
    >>> parse_permutation("21543")
    (2, 1, 5, 4, 3)
    """
    stripped = text.strip()
    if not stripped:
        return ()
    if any(ch.isspace() for ch in stripped):
        try:
            values = [int(tok) for tok in stripped.split()]
        except ValueError as exc:
            raise InvalidPermutation(f"bad permutation token in {text!r}") from exc
    elif stripped.isdigit():
        if len(stripped) > 9:
            raise InvalidPermutation(
                f"compact digit form only supports n <= 9, got {len(stripped)} digits;"
                " use whitespace-separated values"
            )
        values = [int(ch) for ch in stripped]
    else:
        raise InvalidPermutation(f"cannot parse permutation from {text!r}")
    return check_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    """One-line form as whitespace-separated values (unambiguous for n >= 10)."""
    return " ".join(str(v) for v in p)


def inverse(p: Sequence[int]) -> Perm:
    """
    The inverse permutation q, with q[p[i]] = i for all positions i.

    >>> inverse((1, 4, 2, 3))
    (1, 3, 4, 2)
    """
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v - 1] = i + 1
    return tuple(q)


def reverse(p: Sequence[int]) -> Perm:
    """The reverse word: entries in reversed position order."""
    return tuple(p[::-1])


def is_involution(p: Sequence[int]) -> bool:
    """True iff p composed with itself is the identity."""
    return all(p[v - 1] == i + 1 for i, v in enumerate(p))


def position_of_value(p: Sequence[int]) -> tuple[int, ...]:
    """pos[v-1] = 1-based position of value v in p; the inverse as a lookup table."""
    return inverse(p)


def classify_entries(p: Sequence[int]) -> EntryClassification:
    """
    Split the entries of an involution into fixed points, small entries
    (lesser halves of 2-cycles) and large entries (greater halves).

    >>> classify_entries((2, 1, 3)) == (frozenset({3}), frozenset({1}), frozenset({2}))
    True
    """
    if not is_involution(p):
        raise NotInvolution(f"not an involution: {tuple(p)}")
    fixed, small, large = set(), set(), set()
    for i, v in enumerate(p, start=1):
        if v == i:
            fixed.add(i)
        elif i < v:
            small.add(i)
            large.add(v)
    return EntryClassification(frozenset(fixed), frozenset(small), frozenset(large))


def descent_set(p: Sequence[int]) -> set[int]:
    """Positions i (1-based, i < n) where p_i > p_{i+1}."""
    return {i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]}


def jogs(p: Sequence[int]) -> list[Interval]:
    """
    Decompose 1..n into jogs: maximal sets of consecutive integers whose
    positions in p increase.  Values i and i+1 share a jog exactly when i
    precedes i+1 in p.  Returned in increasing order of interval start.

    >>> jogs((3, 6, 1, 4, 7, 2, 5))
    [Interval(lo=1, hi=2), Interval(lo=3, hi=5), Interval(lo=6, hi=7)]
    """
    pos = position_of_value(p)
    return _consecutive_blocks(len(p), lambda v: pos[v - 1] < pos[v])


def reverse_jogs(p: Sequence[int]) -> list[Interval]:
    """
    Decompose 1..n into reverse jogs: maximal sets of consecutive integers
    whose positions in p decrease (i+1 precedes i).  Increasing order of
    interval start.

    >>> reverse_jogs((3, 2, 1, 5, 4))
    [Interval(lo=1, hi=3), Interval(lo=4, hi=5)]
    """
    pos = position_of_value(p)
    return _consecutive_blocks(len(p), lambda v: pos[v - 1] > pos[v])


def _consecutive_blocks(n, joined) -> list[Interval]:
    # joined(v) tells whether values v and v+1 belong to the same block
    blocks = []
    lo = 1
    for v in range(1, n):
        if not joined(v):
            blocks.append(Interval(lo, v))
            lo = v + 1
    if n >= 1:
        blocks.append(Interval(lo, n))
    return blocks


def is_layered(p: Sequence[int]) -> bool:
    """
    True iff p is a concatenation of decreasing blocks, each block's values
    all smaller than the next block's.  The empty permutation is layered.
    """
    try:
        layers(p)
    except NotLayered:
        return False
    return True


def layers(p: Sequence[int]) -> list[Interval]:
    """
    The layers of a layered permutation as value intervals in increasing
    order.  Raises NotLayered when p is not layered.

    >>> layers((2, 1, 5, 4, 3, 7, 6))
    [Interval(lo=1, hi=2), Interval(lo=3, hi=5), Interval(lo=6, hi=7)]
    """
    result = []
    base = 0
    i = 0
    n = len(p)
    while i < n:
        top = p[i]
        if top <= base:
            raise NotLayered(f"not layered: {tuple(p)}")
        width = top - base
        if list(p[i : i + width]) != list(range(top, base, -1)):
            raise NotLayered(f"not layered: {tuple(p)}")
        result.append(Interval(base + 1, top))
        base = top
        i += width
    return result


def pattern_of(values: Sequence[int]) -> Perm:
    """The order-isomorphic permutation (standardization) of distinct values."""
    order = sorted(values)
    rank = {v: r + 1 for r, v in enumerate(order)}
    return tuple(rank[v] for v in values)


def contains_pattern(p: Sequence[int], q: Sequence[int]) -> bool:
    """
    Brute-force containment: does some subsequence of p have the same
    relative order as q?  Scans all position subsets of size len(q), so the
    pattern length is capped at MAX_PATTERN_LENGTH.

    >>> contains_pattern((6, 5, 7, 4, 2, 1, 3), (1, 2, 3))
    False
    >>> contains_pattern((7, 4, 1, 8, 5, 2, 9, 6, 3), (1, 2, 3))
    True
    """
    pattern = check_permutation(q)
    if len(pattern) > MAX_PATTERN_LENGTH:
        raise PatternTooLarge(
            f"pattern length {len(pattern)} exceeds cap {MAX_PATTERN_LENGTH}"
        )
    if len(pattern) > len(p):
        return False
    if not pattern:
        return True
    return any(pattern_of(sub) == pattern for sub in combinations(p, len(pattern)))


def avoids(p: Sequence[int], q: Sequence[int]) -> bool:
    return not contains_pattern(p, q)


def all_permutations(n: int) -> Iterator[Perm]:
    """All permutations of length n in lexicographic order."""
    return _permutations(range(1, n + 1))
