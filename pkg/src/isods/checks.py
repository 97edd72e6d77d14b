"""Cross-validation suite behind `ds check`: oracle equivalences, Delta
agreement, and the row-overlap consistency of the threshold table."""

from __future__ import annotations

import random
from math import gcd

from .coxeter import UnsupportedSlopeError
from .orbits import NilpotentOrbit, dim_centralizer, dim_centralizer_oracle
from .partitions import ParityClass, is_valid, partitions_of
from .rigidity import closed_form_delta, delta_of_orbit
from .root_data import coxeter_number, is_elliptic_regular, is_regular, lie_type, slope
from .skeleton import minimal_jordan_type_report
from .solver import o_nu, o_nu_rows


def check_centralizer_oracle(max_total: int = 10) -> str:
    for fam in ("A", "B", "C", "D"):
        lo = 3 if fam == "D" else (1 if fam == "A" else 2)
        for n in range(lo, max_total // 2 + 2):
            t = lie_type(fam, n)
            try:
                N = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[fam]
            except KeyError:
                continue
            if N > max_total:
                continue
            for p in partitions_of(N):
                if fam != "A" and not is_valid(p, ParityClass[fam]):
                    continue
                o = NilpotentOrbit(t, p)
                if dim_centralizer(o) != dim_centralizer_oracle(o, bound=max_total):
                    return f"mismatch at {fam}{n} {p}"
    return "ok"


def check_skeleton(max_rank: int = 5) -> str:
    for fam in ("A", "B", "C", "D"):
        ranks = range(1, max_rank + 1) if fam == "A" else range(3 if fam == "D" else 2, max_rank + 1)
        for n in ranks:
            t = lie_type(fam, n)
            for m in range(2, 2 * n + 2):
                if not is_regular(t, m):
                    continue
                if fam == "A":
                    if m != n + 1:
                        continue
                elif not is_elliptic_regular(t, m):
                    continue
                for d in range(1, 2 * m):
                    if gcd(d, m) != 1:
                        continue
                    s = slope(d, m)
                    got, cert = minimal_jordan_type_report(t, s)
                    if not cert or got != o_nu(t, s).partition:
                        return f"mismatch at {fam}{n} {s}"
    return "ok"


def check_delta(max_rank: int = 8) -> str:
    for fam in ("A", "B", "C", "D"):
        for n in range(3 if fam == "D" else 2, max_rank + 1):
            t = lie_type(fam, n)
            h = coxeter_number(t)
            for m in range(1, 2 * n + 2):
                if not is_regular(t, m):
                    continue
                for d in range(1, 2 * m):
                    if gcd(d, m) != 1:
                        continue
                    s = slope(d, m)
                    direct = delta_of_orbit(t, s, o_nu(t, s))
                    try:
                        cf = closed_form_delta(t, s)
                    except UnsupportedSlopeError:
                        if s.nu < 1 or (m == h and not (fam == "D" and d > m + 1)):
                            return f"unexpectedly unsupported: {fam}{n} {s}"
                        continue
                    if cf != direct:
                        return f"mismatch at {fam}{n} {s}: {cf} vs {direct}"
    return "ok"


def check_row_overlap(max_rank: int = 12) -> str:
    for fam in ("A", "B", "C", "D"):
        for n in range(3 if fam == "D" else 2, max_rank + 1):
            t = lie_type(fam, n)
            for m in range(1, 2 * n + 1):
                if not is_regular(t, m):
                    continue
                for d in range(1, 2 * m + 1):
                    if gcd(d, m) != 1:
                        continue
                    rows = o_nu_rows(t, slope(d, m))
                    parts = {r.orbit.partition for r in rows}
                    if len(parts) != 1:
                        return f"row conflict at {fam}{n} {d}/{m}: {sorted(parts)}"
    return "ok"


def check_q_equivalence(per_type: int = 100, max_rank: int = 6, seed: int = 11) -> str:
    from .orbits import AdjointOrbit, Block
    from .solver import ds_solve, ds_solve_q

    rng = random.Random(seed)
    for fam in ("A", "B", "C", "D"):
        for _ in range(per_type):
            n = rng.randint(3 if fam == "D" else 2, max_rank)
            t = lie_type(fam, n)
            cap = n + 1 if fam == "A" else n
            m = rng.choice([m for m in range(1, 2 * cap + 1) if is_regular(t, m)])
            d = rng.choice([d for d in range(1, 2 * m + 1) if gcd(d, m) == 1])
            s = slope(d, m)
            zero_mult = rng.randint(0, cap)
            rest = cap - zero_mult
            mults = []
            while rest:
                x = rng.randint(1, rest)
                mults.append(x)
                rest -= x
            eps = 1 if fam == "B" else 0
            tail_total = zero_mult if fam == "A" else 2 * zero_mult + eps
            if fam == "A":
                tails = list(partitions_of(tail_total)) if tail_total else [()]
            else:
                tails = [p for p in partitions_of(tail_total) if is_valid(p, ParityClass[fam])]
                tails = tails or [()]
            blocks = tuple(
                Block(f"a{i}", mults[i], rng.choice(list(partitions_of(mults[i]))))
                for i in range(len(mults))
            )
            a = AdjointOrbit(t, blocks, rng.choice(tails))
            if ds_solve(t, s, a).affirmative != ds_solve_q(t, s, a).affirmative:
                return f"mismatch at {fam}{n} {s} {a.to_json()}"
    return "ok"


def run_all(max_rank: int = 5) -> dict[str, str]:
    return {
        "centralizer_oracle": check_centralizer_oracle(10),
        "skeleton_vs_tables": check_skeleton(max_rank),
        "delta_agreement": check_delta(max_rank + 2),
        "row_overlap": check_row_overlap(max_rank + 4),
        "q_equivalence": check_q_equivalence(60, max_rank),
    }
