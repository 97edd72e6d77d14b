"""Nilpotent and adjoint orbits: validity, centralizer dimensions (closed form
and matrix-kernel oracle), Lusztig-Spaltenstein induction, closure order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import exceptional_data as xd
from .linalg import sparse_rank
from .partitions import (
    ParityClass,
    Partition,
    collapse,
    dominance_le,
    is_valid,
    is_very_even,
    partition,
    sum_parts,
    transpose,
)
from .root_data import LieType, defining_dim


class UnsupportedComparisonError(Exception):
    """Closure comparison requires Hasse data that is not available."""


def parity_class(t: LieType) -> ParityClass:
    if t.family not in ("B", "C", "D"):
        raise ValueError(f"no parity class for {t}")
    return ParityClass[t.family]


@dataclass(frozen=True)
class NilpotentOrbit:
    """Nilpotent orbit: a partition for classical types (with an optional
    very-even label I/II in type D), or a Bala-Carter label for exceptional
    types."""

    type: LieType
    partition: Partition | None = None
    label: str | None = None
    very_even_label: str | None = None

    def __post_init__(self):
        t = self.type
        if t.is_exceptional:
            if self.label is None or self.partition is not None:
                raise ValueError("exceptional orbits carry a Bala-Carter label")
            return
        if self.partition is None:
            raise ValueError("classical orbits carry a partition")
        p = self.partition
        if p != partition(p):
            raise ValueError(f"partition not canonical: {p}")
        if sum(p) != defining_dim(t):
            raise ValueError(f"partition of {sum(p)} does not fit {t}")
        if t.family != "A" and not is_valid(p, parity_class(t)):
            raise ValueError(f"{p} violates the {t.family}-parity constraint")
        if self.very_even_label is not None:
            if t.family != "D" or not is_very_even(p):
                raise ValueError("very-even label only on very even type-D orbits")
            if self.very_even_label not in ("I", "II"):
                raise ValueError("very-even label must be 'I' or 'II'")

    @property
    def is_very_even(self) -> bool:
        return (
            self.type.family == "D"
            and self.partition is not None
            and is_very_even(self.partition)
        )

    def to_json(self) -> dict:
        if self.type.is_exceptional:
            return {"kind": "nilpotent", "label": self.label}
        out: dict = {"kind": "nilpotent", "partition": list(self.partition)}
        if self.very_even_label:
            out["very_even_label"] = self.very_even_label
        return out


@dataclass(frozen=True)
class Block:
    """One nonzero eigenvalue class: in types B/C/D the tag stands for the
    pair of eigenvalues +-a."""

    tag: str | Fraction
    mult: int
    partition: Partition


@dataclass(frozen=True)
class AdjointOrbit:
    """Adjoint orbit of a classical type, given by eigenvalue blocks plus the
    zero block (type A: partition of the zero multiplicity; B: of 2*m_s+1;
    C/D: of 2*m_s)."""

    type: LieType
    blocks: tuple[Block, ...]
    zero_block: Partition

    def __post_init__(self):
        t = self.type
        if t.is_exceptional:
            raise ValueError("adjoint orbits are modeled for classical types only")
        tags = [b.tag for b in self.blocks]
        if len(set(map(str, tags))) != len(tags):
            raise ValueError("eigenvalue tags must be pairwise distinct")
        for b in self.blocks:
            if sum(b.partition) != b.mult or b.partition != partition(b.partition):
                raise ValueError(f"block partition {b.partition} must be of {b.mult}")
        z = self.zero_block
        if z != partition(z):
            raise ValueError("zero block not canonical")
        N = defining_dim(t)
        if t.family == "A":
            total = sum(b.mult for b in self.blocks) + sum(z)
        else:
            total = 2 * sum(b.mult for b in self.blocks) + sum(z)
            if t.family == "B":
                if sum(z) % 2 == 0 or not is_valid(z, ParityClass.B):
                    raise ValueError("type B zero block must be a valid odd B-partition")
            else:
                if sum(z) % 2 or (z and not is_valid(z, parity_class(t))):
                    raise ValueError(f"zero block {z} invalid for {t.family}")
        if total != N:
            raise ValueError(f"multiplicities sum to {total}, expected {N}")

    def to_json(self) -> dict:
        return {
            "kind": "adjoint",
            "blocks": [
                {"eig": str(b.tag), "mult": b.mult, "partition": list(b.partition)}
                for b in self.blocks
            ],
            "zero_block": list(self.zero_block),
        }


def zero_orbit(t: LieType) -> NilpotentOrbit:
    if t.is_exceptional:
        return NilpotentOrbit(t, label="0")
    return NilpotentOrbit(t, partition((1,) * defining_dim(t)))


def regular_orbit(t: LieType) -> NilpotentOrbit:
    if t.is_exceptional:
        return NilpotentOrbit(t, label=t.family)
    N = defining_dim(t)
    if t.family == "D":
        return NilpotentOrbit(t, partition((N - 1, 1)))
    return NilpotentOrbit(t, partition((N,)))


# ---------------------------------------------------------------------------
# Centralizer dimensions
# ---------------------------------------------------------------------------


def dim_centralizer(o: NilpotentOrbit) -> int:
    t = o.type
    if t.is_exceptional:
        key = (t.family, o.label)
        if key not in xd.DIM_C:
            raise ValueError(f"no embedded centralizer dimension for {key}")
        return xd.DIM_C[key]
    p = o.partition
    tp = transpose(p)
    sq = sum(x * x for x in tp)
    odd = sum(1 for x in p if x % 2)
    if t.family == "A":
        return sq - 1
    if t.family == "C":
        return (sq + odd) // 2
    return (sq - odd) // 2


def _jordan_shift_entries(p: Partition) -> tuple[list[tuple[int, int]], int]:
    """Entries (row, col) of the nilpotent shift e with Jordan type p."""
    entries: list[tuple[int, int]] = []
    off = 0
    for k in p:
        for i in range(1, k):
            entries.append((off + i - 1, off + i))
        off += k
    return entries, off


def _form_blocks(p: Partition, symplectic: bool):
    """Pairing data realizing Jordan type p inside so(N) or sp(N).

    Returns (e_entries, form) with form a dict {(i, j): +-1}; the form is
    symmetric in the orthogonal case and antisymmetric in the symplectic one,
    and e is skew-adjoint for it.  Parts of the wrong parity are consumed in
    equal pairs.
    """
    eps = -1 if symplectic else 1
    self_parity = 0 if symplectic else 1  # part size parity admitting a self-dual block
    entries, _ = _jordan_shift_entries(p)
    form: dict[tuple[int, int], int] = {}
    off = 0
    pending: dict[int, int] = {}
    for k in p:
        if k % 2 == self_parity:
            for i in range(k):
                j = k - 1 - i
                form[(off + i, off + j)] = (-1) ** (i + 1)
        elif k in pending:
            o2 = pending.pop(k)
            for i in range(k):
                j = k - 1 - i
                v = (-1) ** (i + 1)
                form[(o2 + i, off + j)] = v
                form[(off + j, o2 + i)] = eps * v
        else:
            pending[k] = off
        off += k
    if pending:
        raise ValueError(f"partition {p} not valid for this form")
    return entries, form


def dim_centralizer_oracle(o: NilpotentOrbit, bound: int = 14) -> int:
    """Centralizer dimension in the matrix Lie algebra, by exact linear
    algebra: dimension of {X in g : [X, e] = 0} for an explicit nilpotent e of
    the given Jordan type.  Independent of the closed-form route."""
    t = o.type
    if t.is_exceptional:
        raise ValueError("matrix oracle is for classical types")
    p = o.partition
    N = sum(p)
    if N > bound:
        raise ValueError(f"total {N} exceeds oracle bound {bound}")

    if t.family == "A":
        entries, _ = _jordan_shift_entries(p)
        by_c: dict[int, list[int]] = {}
        by_r: dict[int, list[int]] = {}
        for (r, c) in entries:
            by_c.setdefault(c, []).append(r)
            by_r.setdefault(r, []).append(c)
        # ad(e) on gl_N: E_(a,b) -> e E_(a,b) - E_(a,b) e
        rows = []
        for a in range(N):
            for b in range(N):
                out: dict[int, int] = {}
                for r in by_c.get(a, ()):
                    out[r * N + b] = out.get(r * N + b, 0) + 1
                for c in by_r.get(b, ()):
                    out[a * N + c] = out.get(a * N + c, 0) - 1
                rows.append({k: v for k, v in out.items() if v})
        rank = sparse_rank(rows)
        return N * N - rank - 1

    symplectic = t.family == "C"
    entries, form = _form_blocks(p, symplectic)
    # g = { B^{-1} S } with S antisymmetric (orthogonal) / symmetric (symplectic);
    # ad(e) corresponds to S -> e^T S + S e on that space.
    if symplectic:
        basis = [(a, b) for a in range(N) for b in range(a, N)]
    else:
        basis = [(a, b) for a in range(N) for b in range(a + 1, N)]
    coord = {ab: i for i, ab in enumerate(basis)}

    def add(target: dict[int, int], a: int, b: int, v: int):
        if a == b:
            if symplectic:
                target[coord[(a, b)]] = target.get(coord[(a, b)], 0) + v
            return
        if a < b:
            target[coord[(a, b)]] = target.get(coord[(a, b)], 0) + v
        else:
            sgn = 1 if symplectic else -1
            target[coord[(b, a)]] = target.get(coord[(b, a)], 0) + sgn * v

    sym_sign = 1 if symplectic else -1
    rows = []
    for (a, b) in basis:
        # S = E_(a,b) + sym_sign E_(b,a) (single term when a == b)
        out: dict[int, int] = {}
        pairs = [(a, b, 1)]
        if a != b:
            pairs.append((b, a, sym_sign))
        for (x, y, v) in pairs:
            for (r, c) in entries:
                # (e^T S)_(c, y) += S_(r, y); (S e)_(x, c) += S_(x, r)
                if x == r:
                    add(out, c, y, v)
                if y == r:
                    add(out, x, c, v)
        rows.append({k: v for k, v in out.items() if v})
    rank = sparse_rank(rows)
    return len(basis) - rank


# ---------------------------------------------------------------------------
# Lusztig-Spaltenstein induction and the asymptotic cone
# ---------------------------------------------------------------------------


def ls_induction(a: AdjointOrbit) -> NilpotentOrbit:
    """Nilpotent orbit attached to an adjoint orbit: componentwise sums in
    type A; in B/C/D, combine the nonzero blocks, double, add the zero block
    and take the parity collapse."""
    t = a.type
    if t.family == "A":
        return NilpotentOrbit(t, sum_parts([b.partition for b in a.blocks] + [a.zero_block]))
    d = sum_parts([b.partition for b in a.blocks])
    f = a.zero_block
    width = max(len(d), len(f))
    p = partition(
        tuple(
            2 * (d[i] if i < len(d) else 0) + (f[i] if i < len(f) else 0)
            for i in range(width)
        )
    )
    return NilpotentOrbit(t, collapse(p, parity_class(t)))


# ---------------------------------------------------------------------------
# Closure order
# ---------------------------------------------------------------------------


@dataclass
class HasseDiagram:
    """Closure order on exceptional orbits from covering relations."""

    orbits: frozenset[str]
    covers: tuple[tuple[str, str], ...]  # (upper, lower)
    dims: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        below: dict[str, set[str]] = {o: {o} for o in self.orbits}
        changed = True
        while changed:
            changed = False
            for hi, lo in self.covers:
                new = below[lo] - below[hi]
                if new:
                    below[hi] |= new
                    changed = True
        self._below = below
        for hi, lo in self.covers:
            if hi in self.dims and lo in self.dims and not self.dims[hi] < self.dims[lo]:
                raise ValueError(f"dim C must increase downward: {hi} -> {lo}")

    def le(self, a: str, b: str) -> bool:
        """a <= b in the closure order."""
        if a not in self.orbits or b not in self.orbits:
            raise KeyError(f"unknown orbit label {a!r} or {b!r}")
        return a in self._below[b]

    @classmethod
    def from_json(cls, data: list[dict]) -> "HasseDiagram":
        covers, dims, orbs = [], {}, set()
        for item in data:
            if "from" in item:
                covers.append((item["from"], item["to"]))
                orbs |= {item["from"], item["to"]}
            elif "label" in item:
                dims[item["label"]] = int(item["dimC"])
                orbs.add(item["label"])
        return cls(frozenset(orbs), tuple(covers), dims)


def _builtin_hasse(family: str) -> HasseDiagram | None:
    if family == "G2":
        covers = xd.G2_HASSE_COVERS
    elif family == "F4":
        covers = xd.F4_HASSE_COVERS
    else:
        return None
    labels = frozenset(x for c in covers for x in c)
    dims = {lbl: xd.DIM_C[(family, lbl)] for lbl in labels}
    return HasseDiagram(labels, covers, dims)


@lru_cache(maxsize=None)
def builtin_hasse(family: str) -> HasseDiagram | None:
    return _builtin_hasse(family)


def closure_le_detail(
    o1: NilpotentOrbit, o2: NilpotentOrbit, hasse: HasseDiagram | None = None
) -> tuple[bool, bool]:
    """(o1 <= o2, ambiguous): ambiguous flags a very-even type-D comparison
    decided by dominance only because a label was unspecified."""
    if o1.type != o2.type:
        raise ValueError("closure comparison needs equal types")
    t = o1.type
    if t.is_exceptional:
        a, b = o1.label, o2.label
        if a == b:
            return True, False
        if a == "0" or b == t.family:
            return True, False
        if b == "0" or a == t.family:
            return False, False
        h = hasse or builtin_hasse(t.family)
        if h is None:
            raise UnsupportedComparisonError(
                f"no Hasse data for {t.family}: cannot compare {a} and {b}"
            )
        return h.le(a, b), False
    p, q = o1.partition, o2.partition
    if t.family == "D" and o1.is_very_even and o2.is_very_even:
        if p == q:
            if o1.very_even_label and o2.very_even_label:
                return o1.very_even_label == o2.very_even_label, False
            return True, True
        return dominance_le(p, q), bool(o1.very_even_label and o2.very_even_label)
    return dominance_le(p, q), False


def closure_le(o1: NilpotentOrbit, o2: NilpotentOrbit, hasse: HasseDiagram | None = None) -> bool:
    return closure_le_detail(o1, o2, hasse)[0]


def cone_contains(o_target: NilpotentOrbit, a: AdjointOrbit) -> bool:
    """True iff o_target lies in the closure of the scaling cone of a,
    i.e. o_target <= the induced nilpotent orbit of a."""
    return closure_le(o_target, ls_induction(a))
