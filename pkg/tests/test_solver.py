import random
from math import gcd

import pytest

from isods.coxeter import UnsupportedSlopeError
from isods.orbits import AdjointOrbit, Block, NilpotentOrbit, cone_contains, ls_induction
from isods.partitions import ParityClass, is_valid, is_very_even, partitions_of
from isods.root_data import is_regular, lie_type, slope
from isods.solver import ds_solve, ds_solve_q, o_nu, o_nu_rows, q_candidates


def test_o_nu_examples():
    assert o_nu(lie_type("C", 3), slope(5, 6)).partition == (2, 1, 1, 1, 1)
    assert o_nu(lie_type("D", 5), slope(1, 4)).partition == (5, 3, 1, 1)
    assert o_nu(lie_type("F4"), slope(5, 8)).label == "~A1"
    assert o_nu(lie_type("B", 4), slope(3, 8)).partition == (3, 3, 3)
    # nu >= 1 collapses to the zero orbit
    assert o_nu(lie_type("C", 3), slope(7, 6)).partition == (1,) * 6
    assert o_nu(lie_type("E8"), slope(31, 30)).label == "0"


def test_threshold_just_below_one_is_minimal_orbit():
    # at slope 1 - 1/h the threshold is the minimal nilpotent orbit, so the
    # verdict is affirmative precisely for nonzero orbits
    from isods.root_data import coxeter_number

    minimal = {
        "A": lambda n: (2,) + (1,) * (n - 1),
        "B": lambda n: (2, 2) + (1,) * (2 * n - 3),
        "C": lambda n: (2,) + (1,) * (2 * n - 2),
        "D": lambda n: (2, 2) + (1,) * (2 * n - 4),
    }
    for fam in ("A", "B", "C", "D"):
        for n in range(3, 8):
            t = lie_type(fam, n)
            h = coxeter_number(t)
            assert o_nu(t, slope(h - 1, h)).partition == minimal[fam](n), (fam, n)
    for fam in ("G2", "F4", "E6", "E7", "E8"):
        t = lie_type(fam)
        h = coxeter_number(t)
        assert o_nu(t, slope(h - 1, h)).label == "A1"


def test_o_nu_unsupported():
    with pytest.raises(UnsupportedSlopeError):
        o_nu(lie_type("B", 3), slope(1, 5))  # 5 not regular for B3
    with pytest.raises(UnsupportedSlopeError):
        o_nu(lie_type("E7"), slope(5, 14))  # non-Coxeter exceptional slope
    with pytest.raises(UnsupportedSlopeError):
        o_nu(lie_type("F4"), slope(1, 8))  # F4 small denominators cover 5/6, 5/8, 7/8 only


def test_o_nu_never_very_even():
    for n in range(3, 11):
        t = lie_type("D", n)
        for m in range(2, 2 * n + 1):
            if not is_regular(t, m):
                continue
            for d in range(1, m):
                if gcd(d, m) != 1:
                    continue
                p = o_nu(t, slope(d, m)).partition
                assert not is_very_even(p), (n, m, d, p)


def test_row_overlap_spot_instance():
    # D4 at m = 2, d = 1: both table rows apply and agree
    rows = o_nu_rows(lie_type("D", 4), slope(1, 2))
    assert len(rows) >= 2
    assert {r.orbit.partition for r in rows} == {(3, 2, 2, 1)}


def test_ds_solve_examples():
    B2 = lie_type("B", 2)
    assert ds_solve(B2, slope(3, 4), NilpotentOrbit(B2, (3, 1, 1))).affirmative is True
    assert ds_solve(B2, slope(3, 4), NilpotentOrbit(B2, (1, 1, 1, 1, 1))).affirmative is False
    # nu >= 1 is always affirmative
    C3 = lie_type("C", 3)
    assert ds_solve(C3, slope(7, 6), NilpotentOrbit(C3, (1,) * 6)).affirmative is True
    # regular adjoint orbits are always affirmative
    a = AdjointOrbit(C3, (Block("a", 3, (3,)),), ())
    assert ds_solve(C3, slope(1, 6), a).affirmative is True


def test_ds_solve_monotone_in_cone_order():
    rng = random.Random(9)
    for fam in ("B", "C", "D"):
        cls = ParityClass[fam]
        for _ in range(200):
            n = rng.randint(3, 7)
            t = lie_type(fam, n)
            ms = [m for m in range(2, 2 * n + 1) if is_regular(t, m)]
            m = rng.choice(ms)
            ds = [d for d in range(1, m) if gcd(d, m) == 1]
            if not ds:
                continue
            s = slope(rng.choice(ds), m)
            zero_mult = rng.randint(0, n)
            rest = n - zero_mult
            mults = []
            while rest:
                x = rng.randint(1, rest)
                mults.append(x)
                rest -= x
            eps = 1 if fam == "B" else 0
            tails = [p for p in partitions_of(2 * zero_mult + eps) if is_valid(p, cls)] or [()]
            blocks = tuple(
                Block(f"a{i}", mm, rng.choice(list(partitions_of(mm)))) for i, mm in enumerate(mults)
            )
            a = AdjointOrbit(t, blocks, rng.choice(tails))
            o_prime = ls_induction(a)
            if ds_solve(t, s, o_prime).affirmative:
                assert cone_contains(o_nu(t, s), a) == ds_solve(t, s, a).affirmative
                assert ds_solve(t, s, a).affirmative is True


def test_ds_solve_exceptional():
    F4 = lie_type("F4")
    ans = ds_solve(F4, slope(5, 8), NilpotentOrbit(F4, label="B2"))
    assert ans.affirmative is True  # ~A1 <= B2 in the embedded Hasse diagram
    ans = ds_solve(F4, slope(5, 8), NilpotentOrbit(F4, label="A1"))
    assert ans.affirmative is False
    E6 = lie_type("E6")
    ans = ds_solve(E6, slope(5, 12), NilpotentOrbit(E6, label="A2"))
    assert ans.affirmative == "unknown-needs-hasse"


def test_ds_answer_serialization_roundtrip():
    import json

    B2 = lie_type("B", 2)
    ans = ds_solve(B2, slope(3, 4), NilpotentOrbit(B2, (3, 1, 1)))
    data = json.loads(json.dumps(ans.to_json()))
    assert data["affirmative"] is True
    assert data["o_nu"]["partition"] == [2, 2, 1]


def test_q_candidates_row_shapes():
    # A3 at 3/4: every block gets the 2-part even minimum
    t = lie_type("A", 3)
    cands = q_candidates(t, slope(3, 4), (2, 2), 0)
    assert [c.linear for c in cands] == [((1, 1), (1, 1))]
    # B row with odd 2n*nu: single candidate (l^{m_1,3}, ..., l^{2m_s+1,3})
    t = lie_type("B", 4)
    cands = q_candidates(t, slope(3, 8), (1, 1), 2)
    assert [(c.linear, c.tail) for c in cands] == [(((1,), (1,)), (2, 2, 1))]
    # the lambda-tilde substitution row: B, d=1, m even, l even, l | gcd
    t = lie_type("B", 6)
    cands = q_candidates(t, slope(1, 6), (2, 2), 2)
    tails = {c.tail for c in cands}
    linears = {c.linear for c in cands}
    assert ((1, 1), (1, 1)) in linears and (3, 1, 1) in tails
    assert ((2,), (1, 1)) in linears  # the degenerate factor bump


def test_ds_solve_q_equals_ds_solve_exhaustive_rank3():
    import itertools

    for fam in ("A", "B", "C", "D"):
        n = 3
        t = lie_type(fam, n)
        cap = n + 1 if fam == "A" else n
        for m in range(1, 2 * cap + 1):
            if not is_regular(t, m):
                continue
            for d in range(1, 2 * m):
                if gcd(d, m) != 1:
                    continue
                s = slope(d, m)
                for zero_mult in range(cap + 1):
                    rest = cap - zero_mult
                    for mults in {p for p in partitions_of(rest)}:
                        eps = 1 if fam == "B" else 0
                        tail_total = zero_mult if fam == "A" else 2 * zero_mult + eps
                        if fam == "A":
                            tails = list(partitions_of(tail_total)) if tail_total else [()]
                        else:
                            tails = [
                                p for p in partitions_of(tail_total) if is_valid(p, ParityClass[fam])
                            ] or [()]
                        pools = [list(partitions_of(x)) for x in mults]
                        for combo in itertools.product(*pools):
                            for tl in tails:
                                blocks = tuple(
                                    Block(f"a{i}", mults[i], combo[i]) for i in range(len(mults))
                                )
                                a = AdjointOrbit(t, blocks, tl)
                                assert (
                                    ds_solve(t, s, a).affirmative
                                    == ds_solve_q(t, s, a).affirmative
                                ), (fam, n, str(s), a.to_json())
