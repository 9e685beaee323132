"""Brute-force oracle for longest k-increasing / k-decreasing subsequences
and the GFK-tightness predicates.

A k-increasing subsequence is a union of k increasing subsequences; by
Dilworth's theorem a position subset qualifies exactly when its induced
subsequence has no decreasing subsequence of length k+1.  The oracle
maximizes the subset size over all 2^n subsets, which is deliberately
independent of the Robinson-Schensted machinery so the two can be tested
against each other.  The scan walks the inclusion/exclusion tree once per
permutation and records the best size for every k simultaneously, so a
full profile costs O(2^n * n); profiles are cached per permutation.
"""
from __future__ import annotations

import os
from functools import lru_cache
from typing import Sequence

from .errors import InstanceTooLarge
from .permutations import Interval, jogs, reverse_jogs

#: largest n the subset oracle will accept
ORACLE_CAP = 16


def oracle_cap() -> int:
    """Effective oracle cap; RSINV_MAX_N can lower it for constrained runs."""
    env = os.environ.get("RSINV_MAX_N")
    return min(ORACLE_CAP, int(env)) if env else ORACLE_CAP


def _check_cap(n: int) -> None:
    cap = oracle_cap()
    if n > cap:
        raise InstanceTooLarge(f"subset oracle capped at n <= {cap}, got {n}")


def _subset_profile(values: tuple[int, ...], decreasing_chains: bool) -> tuple[int, ...]:
    # best[k] = largest subset whose induced subsequence has no monotone
    # chain of length k+1 (chains decreasing or increasing per flag).
    n = len(values)
    best = [0] * (n + 1)
    chosen: list[tuple[int, int]] = []  # (value, longest chain ending here)

    def explore(i: int, longest: int) -> None:
        if i == n:
            if len(chosen) > best[longest]:
                best[longest] = len(chosen)
            return
        explore(i + 1, longest)
        x = values[i]
        ending = 1
        if decreasing_chains:
            for v, c in chosen:
                if v > x and c >= ending:
                    ending = c + 1
        else:
            for v, c in chosen:
                if v < x and c >= ending:
                    ending = c + 1
        chosen.append((x, ending))
        explore(i + 1, ending if ending > longest else longest)
        chosen.pop()

    explore(0, 0)
    for k in range(1, n + 1):
        if best[k] < best[k - 1]:
            best[k] = best[k - 1]
    return tuple(best)


@lru_cache(maxsize=None)
def k_increasing_profile(p: tuple[int, ...]) -> tuple[int, ...]:
    """profile[k] = length of the longest k-increasing subsequence, k = 0..n."""
    _check_cap(len(p))
    return _subset_profile(p, decreasing_chains=True)


@lru_cache(maxsize=None)
def k_decreasing_profile(p: tuple[int, ...]) -> tuple[int, ...]:
    """profile[k] = length of the longest k-decreasing subsequence, k = 0..n."""
    _check_cap(len(p))
    return _subset_profile(p, decreasing_chains=False)


def longest_k_increasing(p: Sequence[int], k: int) -> int:
    """
    Maximum size of a position subset of p that is a union of k increasing
    subsequences.  Saturates at n once k reaches the longest decreasing
    subsequence length.

    >>> longest_k_increasing((7, 4, 1, 8, 5, 2, 9, 6, 3), 2)
    6
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _check_cap(len(p))
    profile = k_increasing_profile(tuple(p))
    return profile[min(k, len(p))]


def longest_k_decreasing(p: Sequence[int], k: int) -> int:
    """Mirror of longest_k_increasing with increasing/decreasing swapped."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _check_cap(len(p))
    profile = k_decreasing_profile(tuple(p))
    return profile[min(k, len(p))]


def _tight_against(profile: tuple[int, ...], intervals: list[Interval]) -> bool:
    # Compare cumulative lengths of the longest intervals against the profile.
    lengths = sorted((iv.length for iv in intervals), reverse=True)
    total = 0
    for k, length in enumerate(lengths, start=1):
        total += length
        if total != profile[k]:
            return False
    return True


def is_gfk_tight(p: Sequence[int]) -> bool:
    """
    True iff for every k up to the number of jogs, the k longest jogs
    jointly realize the longest k-increasing subsequence length.  Beyond
    that k both sides equal n, so the quantifier stops there.
    """
    p = tuple(p)
    _check_cap(len(p))
    return _tight_against(k_increasing_profile(p), jogs(p))


def is_dually_gfk_tight(p: Sequence[int]) -> bool:
    """True iff the k longest reverse jogs realize the longest k-decreasing
    subsequence length for every k up to the number of reverse jogs."""
    p = tuple(p)
    _check_cap(len(p))
    return _tight_against(k_decreasing_profile(p), reverse_jogs(p))


def prefix_lds_lengths(p: Sequence[int]) -> list[int]:
    """Longest strictly decreasing subsequence length of each prefix of p,
    by quadratic dynamic programming (no subset scan, no insertion)."""
    ending = []  # longest decreasing subsequence ending at each position
    out = []
    running = 0
    for j, x in enumerate(p):
        e = 1 + max((ending[i] for i in range(j) if p[i] > x), default=0)
        ending.append(e)
        running = max(running, e)
        out.append(running)
    return out


def record_breakers(p: Sequence[int]) -> set[int]:
    """
    Positions where the longest decreasing subsequence of the prefix grows.

    >>> sorted(record_breakers((6, 5, 7, 4, 2, 1, 3)))
    [1, 2, 4, 5, 6]
    """
    prefix = prefix_lds_lengths(p)
    return {
        i + 1
        for i, value in enumerate(prefix)
        if value > (prefix[i - 1] if i else 0)
    }
