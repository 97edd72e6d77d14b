"""Rigidity index, cohomological-rigidity predicate, closed forms and the
classification scan over elliptic slopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import exceptional_data as xd
from .coxeter import UnsupportedSlopeError
from .orbits import AdjointOrbit, NilpotentOrbit, dim_centralizer, ls_induction
from .root_data import (
    LieType,
    Slope,
    coxeter_number,
    dim_cartan_fixed,
    is_elliptic_regular,
    is_regular,
    phi_count,
    slope,
)
from .solver import ds_solve, o_nu


@dataclass(frozen=True)
class RigidityReport:
    delta: Fraction
    nu_phi: Fraction
    dim_c: int
    dim_tw: int
    rigid: bool
    m_elliptic: bool
    orbit_nonresonant: bool | None


def delta_of_orbit(t: LieType, s: Slope, o_nil: NilpotentOrbit) -> Fraction:
    """Delta = (nu*|Phi| - dim C + dim t^w) / 2 for a nilpotent orbit; adjoint
    orbits share the value of their induced nilpotent orbit."""
    if not is_regular(t, s.m):
        raise ValueError(f"{s.m} is not regular for {t}")
    nu_phi = s.nu * phi_count(t)
    dc = dim_centralizer(o_nil)
    tw = dim_cartan_fixed(t, s.m)
    return Fraction(nu_phi - dc + tw, 2)


def delta(t: LieType, s: Slope, orbit: NilpotentOrbit | AdjointOrbit) -> Fraction:
    o_nil = ls_induction(orbit) if isinstance(orbit, AdjointOrbit) else orbit
    return delta_of_orbit(t, s, o_nil)


def rigidity_report(t: LieType, s: Slope, orbit: NilpotentOrbit | AdjointOrbit) -> RigidityReport:
    if isinstance(orbit, AdjointOrbit):
        o_nil = ls_induction(orbit)
        try:
            nonres: bool | None = non_resonant(orbit)
        except ValueError:
            nonres = None
    else:
        o_nil = orbit
        nonres = True
    d = delta_of_orbit(t, s, o_nil)
    ell = is_elliptic_regular(t, s.m)
    rigid = bool(ell and nonres and d == 0)
    return RigidityReport(
        delta=d,
        nu_phi=s.nu * phi_count(t),
        dim_c=dim_centralizer(o_nil),
        dim_tw=dim_cartan_fixed(t, s.m),
        rigid=rigid,
        m_elliptic=ell,
        orbit_nonresonant=nonres,
    )


def is_cohomologically_rigid(t: LieType, s: Slope, orbit) -> bool:
    """Requires an affirmative verdict; true iff the denominator is elliptic,
    the orbit is non-resonant, and Delta vanishes."""
    ans = ds_solve(t, s, orbit)
    if ans.affirmative is not True:
        raise ValueError(f"verdict for ({t}, {s}) is not affirmative: {ans.affirmative}")
    return rigidity_report(t, s, orbit).rigid


# ---------------------------------------------------------------------------
# Resonance
# ---------------------------------------------------------------------------


def non_resonant(a: AdjointOrbit) -> bool:
    """No two adjoint eigenvalues differ by a nonzero integer.  Symbolic tags
    are treated as generic; a symbolic/rational mix is undecidable."""
    rat = [b.tag for b in a.blocks if isinstance(b.tag, (int, Fraction))]
    sym = [b.tag for b in a.blocks if not isinstance(b.tag, (int, Fraction))]
    if rat and sym:
        raise ValueError("mixed symbolic and rational eigenvalue tags are undecidable")
    if sym:
        return True
    vals = [Fraction(v) for v in rat]
    fam = a.type.family

    def bad(x: Fraction) -> bool:
        return x != 0 and x.denominator == 1

    if fam == "A":
        eigs = vals + ([Fraction(0)] if a.zero_block else [])
        return not any(bad(x - y) for x in eigs for y in eigs)
    # roots evaluate to +-a_i +- a_j, and +-a_i (B), +-2 a_i (C)
    for i, x in enumerate(vals):
        for y in vals[i:]:
            if bad(x - y) or bad(x + y):
                return False
        if a.zero_block and bad(x):
            return False
        if fam == "B" and bad(x):
            return False
        if fam == "C" and bad(2 * x):
            return False
    return True


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def _kd(m: int, d: int) -> tuple[int, int]:
    k = m // d
    return k, m - k * d


def closed_form_delta(t: LieType, s: Slope) -> Fraction:
    """Row formulas for Delta_nu in the classical types.

    Valid for nu < 1 at every regular denominator, and for every d at the
    Coxeter denominator except past the Airy slope in type D; outside that
    domain the rows do not compute Delta of the zero orbit and an
    UnsupportedSlopeError is raised.  All four families carry the common
    leading term l(l-1)/4 d'(d-d'), with l the block count of the matching
    divisibility.
    """
    d, m = s.d, s.m
    fam, n = t.family, t.rank
    if t.is_exceptional:
        raise UnsupportedSlopeError("closed-form Delta rows are classical")
    if not is_regular(t, m):
        raise UnsupportedSlopeError(f"{m} not regular for {t}")
    if s.nu >= 1 and m != coxeter_number(t):
        raise UnsupportedSlopeError(
            f"Delta rows apply for nu < 1 or m = h; got {s} for {t}"
        )
    if s.nu >= 1 and fam == "D" and d > m + 1:
        # the D rows extend past nu = 1 only to the Airy slope 1 + 1/h
        raise UnsupportedSlopeError(f"Delta rows for D stop at d = h + 1; got {s}")
    k, dp = _kd(m, d)
    vals: list[Fraction] = []
    F = Fraction
    if fam == "A":
        N = n + 1
        if N % m == 0:
            ell = N // m
            vals.append(F(ell * (ell - 1), 2) * dp * (d - dp) + F(ell, 2) * (dp - 1) * (d - dp - 1))
        if (N - 1) % m == 0:
            ell = (N - 1) // m
            vals.append(F(ell * (ell - 1), 2) * dp * (d - dp) + F(ell, 2) * (dp - 1) * (d - dp - 1))
    elif fam == "B":
        if m % 2 == 0 and (2 * n) % m == 0:
            ell = 2 * n // m
            if ell % 2 == 0:
                if d == 1:
                    vals.append(F(0))
                elif k % 2 == 0:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 2) * (d - dp - 1) - 2))
                else:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 1) * (d - dp - 2) - 2))
            else:
                if k % 2 == 0:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * dp * (d - dp - 1))
                else:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * (dp + 1) * (d - dp - 2) + F(ell - 1, 2))
        if m % 2 == 1 and n % m == 0:
            ell = 2 * n // m
            if k % 2 == 0:
                vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 2) * (d - dp - 1) - 1))
            else:
                vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 1) * (d - dp - 2) - 1))
    elif fam == "C":
        ell = 2 * n // m
        lead = F(ell * (ell - 1), 4) * dp * (d - dp)
        if m % 2 == 0:
            if k % 2 == 0:
                vals.append(lead + F(ell, 4) * dp * (d - dp - 1))
            else:
                vals.append(lead + F(ell, 4) * (dp - 1) * (d - dp))
        else:
            if k % 2 == 0:
                vals.append(lead + F(ell, 4) * (dp * (d - dp - 1) + 1))
            else:
                vals.append(lead + F(ell, 4) * ((dp - 1) * (d - dp) + 1))
    else:  # D
        if n % m == 0:
            ell = 2 * n // m
            if m % 2 == 0:
                if d == 1:
                    vals.append(F(0))
                elif k % 2 == 0:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 2) * (d - dp - 1) - 2))
                else:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 1) * (d - dp - 2) - 2))
            else:
                if k % 2 == 0:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 2) * (d - dp - 1) - 1))
                else:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 1) * (d - dp - 2) - 1))
        if (2 * n - 2) % m == 0 and (n - 1) % m != 0:
            ell = (2 * n - 2) // m
            if k % 2 == 0:
                vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * dp * (d - dp - 1))
            else:
                vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * (dp + 1) * (d - dp - 2) + F(ell - 1, 2))
        if (n - 1) % m == 0:
            ell = (2 * n - 2) // m
            if m % 2 == 0:
                if d == 1:
                    vals.append(F(0))
                elif k % 2 == 0:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 2) * (d - dp - 1) - 2))
                else:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 1) * (d - dp - 2) - 2))
            else:
                if k % 2 == 0:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 2) * (d - dp - 1) - 1))
                else:
                    vals.append(F(ell * (ell - 1), 4) * dp * (d - dp) + F(ell, 4) * ((dp - 1) * (d - dp - 2) - 1))
    if not vals:
        raise UnsupportedSlopeError(f"no Delta row matches {t} at {s}")
    assert all(v == vals[0] for v in vals), (t, s, vals)
    return vals[0]


def coxeter_delta_column(t: LieType, d: int) -> Fraction:
    """Delta at slope d/h from the Coxeter-solution table columns.

    Here k and d' come from writing N = d*k + d' for the relevant defining
    count N (n, 2n+1, 2n, 2n-1); valid for d <= h + 1.
    """
    F = Fraction
    fam, n = t.family, t.rank
    if t.is_exceptional:
        key = (fam, d)
        if key not in xd.EXC_COXETER:
            raise UnsupportedSlopeError(f"no Coxeter table entry for {key}")
        return F(xd.EXC_COXETER[key][1])
    N = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n - 1}[fam]
    k, dp = divmod(N, d)
    if fam == "A":
        return F((dp - 1) * (d - dp - 1), 2)
    if fam == "B":
        return F((dp - 1) * (d - dp), 4) if k % 2 == 0 else F(dp * (d - dp - 1), 4)
    if fam == "C":
        return F(dp * (d - dp - 1), 4) if k % 2 == 0 else F((dp - 1) * (d - dp), 4)
    return F((dp - 1) * (d - dp), 4) if k % 2 == 0 else F(dp * (d - dp - 1), 4)


# ---------------------------------------------------------------------------
# Classification scan
# ---------------------------------------------------------------------------


def rigid_predicate(fam: str, n: int, m: int, d: int) -> bool:
    """Elliptic slopes d/m with Delta = 0, row by row.

    Two rows are delicate: the C-row divisibility d | m+-1 only holds at
    m = 2n (proper even divisors admit d = 1 alone), and D carries the
    family m = n even, d = 3, mirroring the B row.  The only slopes with
    nu > 1 are d = h + 1 at m = h.
    """
    h = {"A": n + 1, "B": 2 * n, "C": 2 * n, "D": 2 * n - 2}[fam]
    if d > m and not (m == h and d == h + 1):
        return False
    if fam == "A":
        return m == n + 1 and ((n + 2) % d == 0 or n % d == 0)
    if fam == "B":
        if m == 2 * n and ((n + 1) % d == 0 or (2 * n + 1) % d == 0):
            return True
        if m == n and n % 2 == 0 and d == 3:
            return True
        return m % 2 == 0 and (2 * n) % m == 0 and d == 1
    if fam == "C":
        if m == 2 * n and ((2 * n - 1) % d == 0 or (2 * n + 1) % d == 0):
            return True
        return (2 * n) % m == 0 and m % 2 == 0 and d == 1
    # D
    if m % 2 == 0 and n % m == 0 and d == 1:
        return True
    if (2 * n - 2) % m == 0 and (n - 1) % m != 0 and d == 1:
        return True
    if m == n and n % 2 == 0 and d == 3:
        return True
    return m == 2 * n - 2 and ((2 * n) % d == 0 or (2 * n - 1) % d == 0)


def scan_rigid(family: str, max_rank: int, d_limit_factor: int = 2):
    """All (rank, m, d) with elliptic m, gcd(d, m) = 1, d < d_limit_factor*m
    and Delta = 0, each with its threshold orbit.  For exceptional families,
    returns the embedded numerics rows instead."""
    if family in ("G2", "F4", "E6", "E7", "E8"):
        out = []
        for fam, nu, lbl, exist in xd.POTENTIALLY_RIGID_EXC:
            if fam == family:
                out.append(
                    {
                        "rank": {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}[fam],
                        "m": nu.denominator,
                        "d": nu.numerator,
                        "orbit": lbl,
                        "existence": exist or "numerics-only",
                    }
                )
        return out
    out = []
    lo = 3 if family == "D" else 2
    for n in range(lo, max_rank + 1):
        t = LieType(family, n)
        h = coxeter_number(t)
        for m in range(2, h + 1):
            if not is_regular(t, m) or not is_elliptic_regular(t, m):
                continue
            for d in range(1, d_limit_factor * m):
                if gcd(d, m) != 1:
                    continue
                s = slope(d, m)
                orbit = o_nu(t, s)
                if delta_of_orbit(t, s, orbit) == 0:
                    out.append(
                        {
                            "rank": n,
                            "m": m,
                            "d": d,
                            "orbit": list(orbit.partition),
                        }
                    )
    return out
