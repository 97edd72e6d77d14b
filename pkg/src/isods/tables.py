"""Deterministic CSV regeneration of the solution and rigidity tables."""

from __future__ import annotations

import io
from math import gcd

from . import exceptional_data as xd
from .coxeter import UnsupportedSlopeError
from .orbits import dim_centralizer, NilpotentOrbit
from .rigidity import closed_form_delta, delta_of_orbit, scan_rigid
from .root_data import coxeter_number, is_regular, lie_type, slope
from .solver import o_nu, o_nu_rows

TABLE_NAMES = (
    "t_clCox",
    "t_excCox",
    "t_completecl",
    "t_clq",
    "t_cl_index_rig",
    "t_cl_ell_rig",
    "DSsolnF4",
    "potigexc-numerics",
)


def _fmt_partition(p) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def t_clCox(family: str, max_rank: int) -> str:
    rows = []
    lo = 3 if family == "D" else 2
    for n in range(lo, max_rank + 1):
        t = lie_type(family, n)
        h = coxeter_number(t)
        for d in range(1, h):
            if gcd(d, h) != 1:
                continue
            s = slope(d, h)
            orbit = o_nu(t, s)
            delta = delta_of_orbit(t, s, orbit)
            rows.append([family, str(n), str(d), _fmt_partition(orbit.partition), str(delta)])
    return _csv(["family", "rank", "d", "o_nu", "delta"], rows)


def t_excCox() -> str:
    rows = []
    for (fam, d), (label, delta) in sorted(xd.EXC_COXETER.items()):
        rows.append([fam, str(d), label, str(delta)])
    return _csv(["family", "d", "o_nu", "delta"], rows)


def t_completecl(family: str, max_rank: int) -> str:
    rows = []
    lo = 3 if family == "D" else 2
    for n in range(lo, max_rank + 1):
        t = lie_type(family, n)
        for m in range(2, 2 * n + 2):
            if not is_regular(t, m):
                continue
            for d in range(1, m):
                if gcd(d, m) != 1:
                    continue
                s = slope(d, m)
                for row in o_nu_rows(t, s):
                    rows.append(
                        [family, str(n), str(m), str(d), row.row_id, _fmt_partition(row.orbit.partition)]
                    )
    return _csv(["family", "rank", "m", "d", "row", "o_nu"], rows)


def t_clq(family: str, rank: int, s, mults: tuple[int, ...], zero_mult: int) -> str:
    from .solver import q_candidates

    t = lie_type(family, rank)
    cands = q_candidates(t, s, mults, zero_mult)
    rows = []
    for c in cands:
        rows.append(
            [
                family,
                str(rank),
                str(s),
                ";".join(_fmt_partition(p) for p in c.linear),
                _fmt_partition(c.tail),
            ]
        )
    return _csv(["family", "rank", "slope", "linear_factors", "zero_sector"], rows)


def t_cl_index_rig(family: str, max_rank: int) -> str:
    rows = []
    lo = 3 if family == "D" else 2
    for n in range(lo, max_rank + 1):
        t = lie_type(family, n)
        for m in range(2, 2 * n + 2):
            if not is_regular(t, m):
                continue
            for d in range(1, 2 * m):
                if gcd(d, m) != 1:
                    continue
                s = slope(d, m)
                try:
                    delta = closed_form_delta(t, s)
                except UnsupportedSlopeError:
                    continue
                rows.append([family, str(n), str(m), str(d), str(delta)])
    return _csv(["family", "rank", "m", "d", "delta"], rows)


def t_cl_ell_rig(family: str, max_rank: int) -> str:
    rows = []
    for entry in scan_rigid(family, max_rank):
        rows.append(
            [
                family,
                str(entry["rank"]),
                str(entry["m"]),
                str(entry["d"]),
                _fmt_partition(entry["orbit"]) if isinstance(entry["orbit"], list) else str(entry["orbit"]),
            ]
        )
    return _csv(["family", "rank", "m", "d", "o_nu"], rows)


def dssoln_f4() -> str:
    rows = []
    for nu, (label, delta) in sorted(xd.F4_SMALL.items()):
        rows.append([f"{nu.numerator}/{nu.denominator}", label, str(delta)])
    return _csv(["nu", "o_nu", "delta"], rows)


def potigexc_numerics() -> str:
    rows = []
    for fam, nu, label, exist in xd.POTENTIALLY_RIGID_EXC:
        t = lie_type(fam)
        from .root_data import phi_count

        nuphi = nu * phi_count(t)
        dc = dim_centralizer(NilpotentOrbit(t, label=label))
        rows.append(
            [
                fam,
                f"{nu.numerator}/{nu.denominator}",
                label,
                str(nuphi),
                str(dc),
                exist or "numerics-only",
            ]
        )
    return _csv(["family", "nu", "o_nil", "nu_phi", "dim_c", "existence"], rows)


def generate(name: str, family: str | None = None, max_rank: int = 6, **kw) -> str:
    if name == "t_clCox":
        return t_clCox(family or "B", max_rank)
    if name == "t_excCox":
        return t_excCox()
    if name == "t_completecl":
        return t_completecl(family or "B", max_rank)
    if name == "t_cl_index_rig":
        return t_cl_index_rig(family or "B", max_rank)
    if name == "t_cl_ell_rig":
        return t_cl_ell_rig(family or "B", max_rank)
    if name == "DSsolnF4":
        return dssoln_f4()
    if name == "potigexc-numerics":
        return potigexc_numerics()
    if name == "t_clq":
        return t_clq(family or "B", kw["rank"], kw["slope"], kw["mults"], kw["zero_mult"])
    raise ValueError(f"unknown table {name!r}; choose one of {TABLE_NAMES}")
