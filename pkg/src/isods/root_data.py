"""Static root-system data: Cartan matrices, positive roots, affine marks,
exponents, Coxeter numbers, regular and elliptic-regular number predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

FAMILIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")
EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}


@dataclass(frozen=True)
class LieType:
    """Simple Lie type: family plus rank (rank fixed for exceptional families)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in EXCEPTIONAL_RANK:
            if self.rank != EXCEPTIONAL_RANK[self.family]:
                raise ValueError(f"{self.family} has rank {EXCEPTIONAL_RANK[self.family]}")
        else:
            lo = {"A": 1, "B": 2, "C": 2, "D": 3}[self.family]
            if self.rank < lo:
                raise ValueError(f"{self.family}-rank must be >= {lo}")

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_RANK

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank}

    def __str__(self):
        return f"{self.family}{self.rank}" if not self.is_exceptional else self.family


def lie_type(family: str, rank: int | None = None) -> LieType:
    """Build a LieType from e.g. ('B', 4), ('F4', None) or the string 'B4'."""
    family = family.strip()
    if rank is None:
        if family in EXCEPTIONAL_RANK:
            return LieType(family, EXCEPTIONAL_RANK[family])
        head = family[0]
        if head in ("A", "B", "C", "D") and family[1:].isdigit():
            return LieType(head, int(family[1:]))
        raise ValueError(f"cannot parse Lie type {family!r}")
    return LieType(family, int(rank))


@dataclass(frozen=True)
class Slope:
    """Positive slope d/m in lowest terms."""

    d: int
    m: int

    def __post_init__(self):
        if self.d < 1 or self.m < 1:
            raise ValueError("slope needs positive numerator and denominator")
        if gcd(self.d, self.m) != 1:
            raise ValueError(f"slope {self.d}/{self.m} not in lowest terms")

    @property
    def nu(self) -> Fraction:
        return Fraction(self.d, self.m)

    def __str__(self):
        return f"{self.d}/{self.m}"


def slope(d: int, m: int) -> Slope:
    g = gcd(d, m)
    return Slope(d // g, m // g)


def parse_slope(text: str) -> Slope:
    num, _, den = text.partition("/")
    return slope(int(num), int(den) if den else 1)


# ---------------------------------------------------------------------------
# Dynkin diagrams and Cartan matrices.  Nodes are numbered 1..rank; for the
# exceptional families the conventions are:
#   G2: node 1 long, node 2 short (highest root 2a1 + 3a2)
#   F4: chain 1-2=>3-4, nodes 1,2 long and 3,4 short
#   E6/E7/E8: Bourbaki (chain 1-3-4-5-...-r with node 2 attached to node 4)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with A[i][j] = <alpha_j, alpha_i^vee> (0-based nodes)."""
    r = t.rank
    A = [[0] * r for _ in range(r)]
    for i in range(r):
        A[i][i] = 2

    def edge(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    fam = t.family
    if fam == "A":
        for i in range(r - 1):
            edge(i, i + 1)
    elif fam == "B":
        for i in range(r - 2):
            edge(i, i + 1)
        # last node short: <alpha_{r-1}, alpha_r^vee> = -2
        edge(r - 2, r - 1, -1, -2)
    elif fam == "C":
        for i in range(r - 2):
            edge(i, i + 1)
        # last node long
        edge(r - 2, r - 1, -2, -1)
    elif fam == "D":
        for i in range(r - 2):
            edge(i, i + 1)
        edge(r - 3, r - 1)
    elif fam == "G2":
        edge(0, 1, -1, -3)
    elif fam == "F4":
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
    else:  # E-series, Bourbaki
        chain = [1, 3, 4, 5, 6, 7, 8][: r - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a - 1, b - 1)
        edge(2 - 1, 4 - 1)
    return tuple(tuple(row) for row in A)


@lru_cache(maxsize=None)
def adjacency(t: LieType) -> dict[int, frozenset[int]]:
    """Finite Dynkin diagram adjacency on nodes 1..rank."""
    A = cartan_matrix(t)
    r = t.rank
    out = {}
    for i in range(r):
        out[i + 1] = frozenset(j + 1 for j in range(r) if j != i and A[i][j] != 0)
    return out


def short_nodes(t: LieType) -> frozenset[int]:
    fam, r = t.family, t.rank
    if fam == "B":
        return frozenset({r})
    if fam == "C":
        return frozenset(range(1, r))
    if fam == "G2":
        return frozenset({2})
    if fam == "F4":
        return frozenset({3, 4})
    return frozenset()


@lru_cache(maxsize=None)
def positive_roots(t: LieType) -> tuple[tuple[int, ...], ...]:
    """All positive roots as coefficient vectors over the simple roots."""
    A = cartan_matrix(t)
    r = t.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(r):
                pairing = sum(beta[j] * A[i][j] for j in range(r))
                # length of the alpha_i-string below beta, within the root set
                q = 0
                gamma = list(beta)
                while True:
                    gamma[i] -= 1
                    if gamma[i] < 0 or tuple(gamma) not in roots:
                        break
                    q += 1
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        new.append(up)
        frontier = new
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


@lru_cache(maxsize=None)
def highest_root(t: LieType) -> tuple[int, ...]:
    return positive_roots(t)[-1]


def phi_count(t: LieType) -> int:
    """Number of roots."""
    fam, n = t.family, t.rank
    if fam == "A":
        return n * (n + 1)
    if fam in ("B", "C"):
        return 2 * n * n
    if fam == "D":
        return 2 * n * (n - 1)
    return {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}[fam]


def exponents(t: LieType) -> tuple[int, ...]:
    fam, n = t.family, t.rank
    if fam == "A":
        return tuple(range(1, n + 1))
    if fam in ("B", "C"):
        return tuple(range(1, 2 * n, 2))
    if fam == "D":
        return tuple(sorted(tuple(range(1, 2 * n - 2, 2)) + (n - 1,)))
    return {
        "G2": (1, 5),
        "F4": (1, 5, 7, 11),
        "E6": (1, 4, 5, 7, 8, 11),
        "E7": (1, 5, 7, 9, 11, 13, 17),
        "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    }[fam]


def coxeter_number(t: LieType) -> int:
    return max(exponents(t)) + 1


def dim_cartan_fixed(t: LieType, m: int) -> int:
    """dim of the fixed space of a regular element of order m on the Cartan:
    the number of exponents divisible by m."""
    return sum(1 for e in exponents(t) if e % m == 0)


# Regular numbers of the Weyl groups; exceptional values embedded as data.
_REGULAR_EXC = {
    "G2": {1, 2, 3, 6},
    "F4": {1, 2, 3, 4, 6, 8, 12},
    "E6": {1, 2, 3, 4, 6, 8, 9, 12},
    "E7": {1, 2, 3, 6, 7, 9, 14, 18},
    "E8": {1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30},
}


def is_regular(t: LieType, m: int) -> bool:
    if m < 1:
        return False
    fam, n = t.family, t.rank
    if fam == "A":
        N = n + 1
        return N % m == 0 or (N - 1) % m == 0
    if fam in ("B", "C"):
        return (2 * n) % m == 0 or n % m == 0
    if fam == "D":
        return n % m == 0 or (2 * n - 2) % m == 0 or (n - 1) % m == 0
    return m in _REGULAR_EXC[fam]


def is_elliptic_regular(t: LieType, m: int) -> bool:
    if not is_regular(t, m):
        raise ValueError(f"{m} is not a regular number for {t}")
    fam, n = t.family, t.rank
    if fam == "A":
        return m == n + 1
    if fam in ("B", "C"):
        return m % 2 == 0 and (2 * n) % m == 0
    if fam == "D":
        if m % 2 == 0 and n % m == 0:
            return True
        return (2 * n - 2) % m == 0 and ((2 * n - 2) // m) % 2 == 1
    return dim_cartan_fixed(t, m) == 0


@dataclass(frozen=True)
class AffineDiagram:
    """Affine Dynkin diagram: node 0 is the affine node, marks n_alpha."""

    type: LieType
    nodes: tuple[int, ...]
    marks: dict[int, int]

    @property
    def finite_nodes(self) -> tuple[int, ...]:
        return self.nodes[1:]

    def levi_factors(self, J) -> tuple[str, ...]:
        """Irreducible factors of the Levi with simple roots J inside the
        finite diagram, as type strings ('A2', '~A1', 'B3', 'D4', ...)."""
        return levi_factor_types(self.type, J)


@lru_cache(maxsize=None)
def affine_marks(t: LieType) -> AffineDiagram:
    """Marks from the highest-root coefficients; the affine node gets 1."""
    theta = highest_root(t)
    marks = {0: 1}
    for i, c in enumerate(theta):
        marks[i + 1] = c
    return AffineDiagram(t, tuple(range(t.rank + 1)), marks)


def defining_dim(t: LieType) -> int:
    """Dimension of the defining representation of the classical families."""
    fam, n = t.family, t.rank
    if fam == "A":
        return n + 1
    if fam == "B":
        return 2 * n + 1
    if fam in ("C", "D"):
        return 2 * n
    raise ValueError(f"no defining matrix representation used for {t}")


def dim_g(t: LieType) -> int:
    return phi_count(t) + t.rank


def components(t: LieType, J) -> list[frozenset[int]]:
    """Connected components of the sub-diagram on nodes J."""
    adj = adjacency(t)
    J = set(J)
    seen: set[int] = set()
    comps = []
    for start in sorted(J):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(y for y in adj[x] if y in J and y not in comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


_F4_MIXED = {
    frozenset({2, 3}): "B2",
    frozenset({1, 2, 3}): "B3",
    frozenset({2, 3, 4}): "C3",
    frozenset({1, 2, 3, 4}): "F4",
}


def levi_factor_types(t: LieType, J) -> tuple[str, ...]:
    """Irreducible factor types of the sub-diagram on J, with '~' marking
    components made of short roots only."""
    J = frozenset(J)
    bad = J - set(range(1, t.rank + 1))
    if bad:
        raise ValueError(f"nodes {sorted(bad)} are not finite diagram nodes of {t}")
    fam, n = t.family, t.rank
    shorts = short_nodes(t)
    out = []
    for comp in components(t, J):
        if fam == "G2":
            out.append("G2" if len(comp) == 2 else ("~A1" if comp <= shorts else "A1"))
        elif fam == "F4":
            if comp & shorts and comp - shorts:
                out.append(_F4_MIXED[comp])
            else:
                out.append(("~" if comp <= shorts else "") + f"A{len(comp)}")
        elif fam in ("E6", "E7", "E8"):
            cf, cr = simply_laced_component_type(t, comp)
            out.append(f"{cf}{cr}")
        elif fam == "A":
            out.append(f"A{len(comp)}")
        elif fam in ("B", "C"):
            out.append(f"{fam}{len(comp)}" if n in comp else f"A{len(comp)}")
        else:  # D: both fork nodes together form the D-tail
            fork = {n - 1, n}
            if comp & fork and fork <= J:
                continue  # merged below
            out.append(f"A{len(comp)}")
    if fam == "D" and {n - 1, n} <= J:
        tail = frozenset().union(*(c for c in components(t, J) if c & {n - 1, n}))
        out.append(f"D{len(tail)}")
    return tuple(sorted(out))


def simply_laced_component_type(t: LieType, comp: frozenset[int]) -> tuple[str, int]:
    """Cartan type (family, rank) of a connected sub-diagram of an ADE diagram."""
    adj = adjacency(t)
    deg = {x: len(adj[x] & comp) for x in comp}
    branch = [x for x in comp if deg[x] == 3]
    if not branch:
        return ("A", len(comp))
    if len(branch) != 1:
        raise ValueError(f"not a connected ADE sub-diagram: {sorted(comp)}")
    b = branch[0]
    arms = []
    for first in sorted(adj[b] & comp):
        length, prev, cur = 1, b, first
        while True:
            nxt = [y for y in (adj[cur] & comp) if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", len(comp))
    if arms[0] == 1 and arms[1] == 2:
        return ("E", len(comp))
    raise ValueError(f"not an ADE sub-diagram: {sorted(comp)}")
