"""Exact rational linear algebra on small sparse/dense matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = dict[int, Fraction]


def sparse_rank(rows: Iterable[Row]) -> int:
    """Rank over Q of a matrix given as sparse rows (col -> value)."""
    pivots: dict[int, Row] = {}
    rank = 0
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            c = min(row)
            if c in pivots:
                f = row.pop(c)
                for cc, vv in pivots[c].items():
                    nv = row.get(cc, 0) - f * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                f = row.pop(c)
                pivots[c] = {cc: vv / f for cc, vv in row.items()}
                rank += 1
                break
    return rank


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            v = ai[t]
            if v:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += v * bt[j]
    return out


def mat_rank(a: Sequence[Sequence[Fraction]]) -> int:
    return sparse_rank({j: v for j, v in enumerate(row) if v} for row in a)


def jordan_type_from_ranks(dim: int, op: Sequence[Sequence[Fraction]]) -> tuple[int, ...]:
    """Jordan type of a nilpotent operator from the rank sequence of its powers:
    multiplicity of part j is rank(N^(j-1)) - 2 rank(N^j) + rank(N^(j+1))."""
    ranks = [dim]
    power = [list(map(Fraction, row)) for row in op]
    while True:
        r = mat_rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = mat_mul(power, op)
        if len(ranks) > dim + 2:
            raise ValueError("operator is not nilpotent")
    parts: list[int] = []
    ranks.append(0)
    for j in range(1, len(ranks) - 1):
        mult = ranks[j - 1] - 2 * ranks[j] + ranks[j + 1]
        parts.extend([j] * mult)
    assert sum(parts) == dim
    return tuple(sorted(parts, reverse=True))


