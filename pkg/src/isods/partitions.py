"""Exact integer-partition arithmetic: dominance order, parity classes, collapses.

A partition is a canonical tuple of weakly decreasing positive integers; the
empty partition is ``()``.  Everything here is pure and exact.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]


class ParityClass(Enum):
    """Parity constraint family for nilpotent-orbit partitions."""

    B = "B"  # odd total, even parts occur with even multiplicity
    C = "C"  # even total, odd parts occur with even multiplicity
    D = "D"  # even total, even parts occur with even multiplicity


def partition(parts: Iterable[int]) -> Partition:
    """Canonical form: sort descending, drop zeros, reject negatives."""
    out = tuple(sorted((int(x) for x in parts), reverse=True))
    while out and out[-1] == 0:
        out = out[:-1]
    if out and out[-1] < 0:
        raise ValueError(f"partition parts must be nonnegative, got {out}")
    return out


def transpose(p: Partition) -> Partition:
    """Conjugate partition (column counts of the Young diagram)."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def prefix_sums(p: Partition, upto: int) -> list[int]:
    out, s = [], 0
    for i in range(upto):
        s += p[i] if i < len(p) else 0
        out.append(s)
    return out


def dominance_le(p: Partition, q: Partition) -> bool:
    """True iff every prefix sum of p is <= the one of q (equal totals)."""
    if sum(p) != sum(q):
        raise ValueError(f"dominance needs equal totals: {p} vs {q}")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp > sq:
            return False
    return True


def lambda_evenly(n: int, r: int) -> Partition:
    """The unique partition of n with at most r parts, all of size
    floor(n/r) or ceil(n/r).  It is the dominance minimum among
    partitions of n with at most r parts."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    if n == 0:
        return ()
    k, rem = divmod(n, r)
    return partition((k + 1,) * rem + (k,) * (r - rem))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part, descending parts."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out: list[Partition] = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_exact_parts(n: int, r: int) -> Iterator[Partition]:
    """Partitions of n with exactly r (positive) parts."""
    if r < 0 or n < r:
        return
    if r == 0:
        if n == 0:
            yield ()
        return
    # bijection with partitions of n-r having at most r parts
    for q in partitions_of(n - r):
        if len(q) <= r:
            yield tuple(q[i] + 1 if i < len(q) else 1 for i in range(r))


def partitions_max_parts(n: int, r: int) -> Iterator[Partition]:
    for p in partitions_of(n):
        if len(p) <= r:
            yield p


def dominance_minimum(items: Iterable[Partition]) -> Partition | None:
    """The element <= all others, or None if no unique minimum exists."""
    pool = list(items)
    if not pool:
        return None
    best = pool[0]
    for p in pool[1:]:
        if dominance_le(p, best):
            best = p
    if all(dominance_le(best, p) for p in pool):
        return best
    return None


def lambda_tilde(n: int, r: int) -> Partition:
    """Dominance minimum among partitions of n with exactly r parts,
    excluding lambda_evenly(n, r).

    Raises when n <= r (only (1,...,1) has r parts) or when the minimum
    fails to be unique.  When r divides n (the case the solvers use) the
    minimum always exists and a closed form is asserted against it.
    """
    if r < 1 or n <= r:
        raise ValueError(f"lambda_tilde undefined for n={n}, r={r}")
    lam = lambda_evenly(n, r)
    pool = [p for p in partitions_exact_parts(n, r) if p != lam]
    if not pool:
        raise ValueError(f"no partition of {n} with {r} parts other than {lam}")
    best = dominance_minimum(pool)
    if best is None:
        raise ValueError(f"no unique next-smallest partition for n={n}, r={r}")
    k, rem = divmod(n, r)
    if k >= 2 and rem <= r - 2:
        fast = partition((k + 1,) * (rem + 1) + (k,) * (r - rem - 2) + (k - 1,))
        assert fast == best, (n, r, fast, best)
    return best


def smallest_excluding_evenly(n: int, r: int) -> Partition | None:
    """Dominance minimum over partitions of n with at most r parts,
    excluding lambda_evenly(n, r); None when absent or not unique.

    Coincides with lambda_tilde when the latter is defined and r | n, and
    extends it to n == r (where the exact-parts version has no candidates).
    """
    if r < 1 or n < 1:
        return None
    lam = lambda_evenly(n, r)
    pool = [p for p in partitions_max_parts(n, r) if p != lam]
    if not pool:
        return None
    return dominance_minimum(pool)


def is_very_even(p: Partition) -> bool:
    return all(x % 2 == 0 for x in p)


def is_valid(p: Partition, cls: ParityClass) -> bool:
    """Parity-class membership test, including the total-parity constraint."""
    total = sum(p)
    counts = Counter(p)
    if cls is ParityClass.B:
        return total % 2 == 1 and all(c % 2 == 0 for v, c in counts.items() if v % 2 == 0)
    if cls is ParityClass.C:
        return total % 2 == 0 and all(c % 2 == 0 for v, c in counts.items() if v % 2 == 1)
    return total % 2 == 0 and all(c % 2 == 0 for v, c in counts.items() if v % 2 == 0)


def collapse(p: Partition, cls: ParityClass) -> Partition:
    """Dominance maximum among parity-valid partitions dominated by p.

    Greedy unit moves: take the largest bad-parity value with odd
    multiplicity, shrink its last occurrence and regrow as early as the
    weakly decreasing shape allows.  Verified against exhaustive search.
    """
    total = sum(p)
    if cls is ParityClass.B:
        if total % 2 == 0:
            raise ValueError("B-collapse needs odd total")
        bad_residue = 0
    elif cls is ParityClass.C:
        if total % 2 == 1:
            raise ValueError("C-collapse needs even total")
        bad_residue = 1
    else:
        if total % 2 == 1:
            raise ValueError("D-collapse needs even total")
        bad_residue = 0

    parts = list(p)
    while True:
        counts = Counter(parts)
        viols = [v for v, c in counts.items() if v % 2 == bad_residue and c % 2 == 1]
        if not viols:
            break
        v = max(viols)
        i = max(ix for ix, x in enumerate(parts) if x == v)
        parts[i] -= 1
        j = i + 1
        while j < len(parts):
            if parts[j] + 1 <= parts[j - 1]:
                parts[j] += 1
                break
            j += 1
        else:
            parts.append(1)
    out = partition(parts)
    assert is_valid(out, cls), (p, cls, out)
    return out


def sum_parts(ps: Iterable[Partition]) -> Partition:
    """Componentwise sum of part sequences, padding with zeros."""
    ps = list(ps)
    if not ps:
        return ()
    width = max((len(p) for p in ps), default=0)
    return partition(
        tuple(sum(p[i] if i < len(p) else 0 for p in ps) for i in range(width))
    )


def union_parts(p: Partition, extra: Iterable[int]) -> Partition:
    """Multiset union, e.g. union_parts((3,2), (1,)) == (3,2,1)."""
    return partition(tuple(p) + tuple(extra))
