"""Independent ground-truth counting: pentagonal-recurrence partition
numbers, coin-change (denumerant) tables, brute-force partition enumeration,
and Durfee-square classification.

Everything here is deliberately elementary; these are the oracles the
discovered formulas are checked against.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, ResourceLimitError

# Partitions are plain non-increasing tuples of positive ints.
Partition = tuple[int, ...]

# p(80) is about 1.6e7 partitions; enumeration beyond this is a mistake.
DEFAULT_ENUMERATION_BOUND = 80


def euler_partition_series(n_max: int) -> list[int]:
    """p(0..n_max) by Euler's pentagonal-number recurrence."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    table = [0] * (n_max + 1)
    table[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = n - k * (3 * k - 1) // 2
            if g1 < 0:
                break
            term = table[g1]
            g2 = g1 - k
            if g2 >= 0:
                term += table[g2]
            total += term if k % 2 else -term
            k += 1
        table[n] = total
    return table


def denumerant_table(parts: Iterable[int], n_max: int) -> list[int]:
    """Counts of partitions of 0..n_max with parts from the given multiset.

    Pure-integer coin-change dynamic program; the same recurrence as
    polys.series_expand with numerator 1.
    """
    parts = list(parts)
    if not parts:
        raise DomainError("the part multiset must be nonempty")
    if any(s < 1 for s in parts):
        raise DomainError("all parts must be >= 1")
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    table = [1] + [0] * n_max
    for s in parts:
        for i in range(s, n_max + 1):
            table[i] += table[i - s]
    return table


def pmn_oracle(m: int, n: int) -> int:
    """Number of partitions of n into at most m parts (equivalently, with
    all parts at most m)."""
    if m < 1:
        raise DomainError("m must be >= 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    return denumerant_table(range(1, m + 1), n)[n]


def pmn_table(m: int, n_max: int) -> list[int]:
    """p_m(0..n_max) as a table."""
    return denumerant_table(range(1, m + 1), n_max)


def enumerate_partitions(
    n: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> Iterator[Partition]:
    """All partitions of n, first parts in decreasing lexicographic order:
    enumerate_partitions(5) yields (5,), (4,1), (3,2), (3,1,1), (2,2,1),
    (2,1,1,1), (1,1,1,1,1)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > bound:
        raise ResourceLimitError(
            f"enumeration of partitions of {n} exceeds the bound {bound}"
        )
    if n == 0:
        yield ()
        return
    current: Partition = (n,)
    yield current
    while True:
        i = len(current) - 1
        while i >= 0 and current[i] == 1:
            i -= 1
        if i < 0:
            return
        remainder = len(current) - i
        current = current[:i] + (current[i] - 1,)
        while remainder > 0:
            nxt = min(current[-1], remainder)
            current += (nxt,)
            remainder -= nxt
        yield current


def durfee_size(parts: Partition) -> int:
    """Side of the largest k x k square in the diagram: max k with parts[k-1] >= k."""
    k = 0
    for i, part in enumerate(parts):
        if part >= i + 1:
            k = i + 1
        else:
            break
    return k


@lru_cache(maxsize=None)
def _durfee_histogram(n: int, bound: int) -> tuple[int, ...]:
    counts = [0] * (int(n**0.5) + 2)
    for parts in enumerate_partitions(n, bound):
        counts[durfee_size(parts)] += 1
    return tuple(counts)


def durfee_count_oracle(
    k: int, n: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> int:
    """Number of partitions of n whose Durfee square has size k, by
    exhaustive enumeration."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    hist = _durfee_histogram(n, bound)
    return hist[k] if k < len(hist) else 0
