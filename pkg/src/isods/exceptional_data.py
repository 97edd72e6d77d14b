"""Embedded data for exceptional types: centralizer dimensions, the G2 and F4
Hasse diagrams, Coxeter-slope solutions, the F4 small-denominator solutions,
and the numerics rows for potentially rigid slopes.

Every centralizer dimension here is pinned by the identity
nu*|Phi| - 2*Delta = dim C(O) exercised in the acceptance suite; the G2/F4
Hasse data is additionally consistent with the dimension order.
Labels are ASCII: "~" marks short-root pieces, primes are apostrophes.
"""

from __future__ import annotations

from fractions import Fraction

# dim C(O) for the orbits this package touches, keyed by (family, label).
DIM_C: dict[tuple[str, str], int] = {
    # G2: full list
    ("G2", "0"): 14,
    ("G2", "A1"): 8,
    ("G2", "~A1"): 6,
    ("G2", "G2(a1)"): 4,
    ("G2", "G2"): 2,
    # F4: full list
    ("F4", "0"): 52,
    ("F4", "A1"): 36,
    ("F4", "~A1"): 30,
    ("F4", "A1+~A1"): 24,
    ("F4", "A2"): 22,
    ("F4", "~A2"): 22,
    ("F4", "A2+~A1"): 18,
    ("F4", "~A2+A1"): 16,
    ("F4", "B2"): 16,
    ("F4", "C3(a1)"): 14,
    ("F4", "F4(a3)"): 12,
    ("F4", "B3"): 10,
    ("F4", "C3"): 10,
    ("F4", "F4(a2)"): 8,
    ("F4", "F4(a1)"): 6,
    ("F4", "F4"): 4,
    # E6 rows referenced by the embedded tables
    ("E6", "0"): 78,
    ("E6", "E6"): 6,
    ("E6", "A2+2A1"): 28,
    ("E6", "3A1"): 38,
    ("E6", "A1"): 56,
    ("E6", "A4+A1"): 16,
    ("E6", "A2+A1"): 32,
    ("E6", "2A2"): 30,
    # E7 rows
    ("E7", "0"): 133,
    ("E7", "E7"): 7,
    ("E7", "A3+A2+A1"): 33,
    ("E7", "A2+3A1"): 49,
    ("E7", "(3A1)'"): 69,
    ("E7", "2A1"): 81,
    ("E7", "A1"): 99,
    ("E7", "D5(a1)"): 27,
    ("E7", "A4+A2"): 27,
    ("E7", "A3+A2"): 35,
    ("E7", "2A2"): 49,
    # E8 rows
    ("E8", "0"): 248,
    ("E8", "E8"): 8,
    ("E8", "A4+A2+A1"): 52,
    ("E8", "2A2+2A1"): 80,
    ("E8", "A2+3A1"): 94,
    ("E8", "4A1"): 120,
    ("E8", "3A1"): 136,
    ("E8", "2A1"): 156,
    ("E8", "A1"): 190,
    ("E8", "D4(a1)+A1"): 72,
    ("E8", "A3"): 100,
    ("E8", "D6"): 32,
    ("E8", "E6"): 32,
    ("E8", "D7(a2)"): 32,
    ("E8", "D4+A1"): 64,
    ("E8", "D4(a1)+A2"): 64,
    ("E8", "A2+A1"): 112,
    ("E8", "A6+A1"): 36,
    ("E8", "E7(a4)"): 36,
    ("E8", "A3+A1"): 84,
    ("E8", "D4+A2"): 50,
    ("E8", "E6(a3)"): 50,
    ("E8", "A3+A2"): 70,
    ("E8", "A4+2A1"): 56,
}

# Covering relations of the closure order, written (upper, lower).
G2_HASSE_COVERS: tuple[tuple[str, str], ...] = (
    ("G2", "G2(a1)"),
    ("G2(a1)", "~A1"),
    ("~A1", "A1"),
    ("A1", "0"),
)

F4_HASSE_COVERS: tuple[tuple[str, str], ...] = (
    ("F4", "F4(a1)"),
    ("F4(a1)", "F4(a2)"),
    ("F4(a2)", "B3"),
    ("F4(a2)", "C3"),
    ("B3", "F4(a3)"),
    ("C3", "F4(a3)"),
    ("F4(a3)", "C3(a1)"),
    ("C3(a1)", "B2"),
    ("C3(a1)", "~A2+A1"),
    ("B2", "A2+~A1"),
    ("~A2+A1", "A2+~A1"),
    ("~A2+A1", "~A2"),
    ("A2+~A1", "A2"),
    ("A2", "A1+~A1"),
    ("~A2", "A1+~A1"),
    ("A1+~A1", "~A1"),
    ("~A1", "A1"),
    ("A1", "0"),
)

# Coxeter-denominator solutions (slope d/h): (family, d) -> (orbit label, Delta).
EXC_COXETER: dict[tuple[str, int], tuple[str, int]] = {
    ("G2", 1): ("G2", 0),
    ("G2", 5): ("A1", 1),
    ("F4", 1): ("F4", 0),
    ("F4", 5): ("A2+~A1", 1),
    ("F4", 7): ("A1+~A1", 2),
    ("F4", 11): ("A1", 4),
    ("E6", 1): ("E6", 0),
    ("E6", 5): ("A2+2A1", 1),
    ("E6", 7): ("3A1", 2),
    ("E6", 11): ("A1", 5),
    ("E7", 1): ("E7", 0),
    ("E7", 5): ("A3+A2+A1", 1),
    ("E7", 7): ("A2+3A1", 0),
    ("E7", 11): ("(3A1)'", 4),
    ("E7", 13): ("2A1", 5),
    ("E7", 17): ("A1", 10),
    ("E8", 1): ("E8", 0),
    ("E8", 7): ("A4+A2+A1", 2),
    ("E8", 11): ("2A2+2A1", 4),
    ("E8", 13): ("A2+3A1", 5),
    ("E8", 17): ("4A1", 8),
    ("E8", 19): ("3A1", 8),
    ("E8", 23): ("2A1", 14),
    ("E8", 29): ("A1", 21),
}

# F4 solutions at the non-Coxeter denominators 6 and 8: slope -> (label, Delta).
F4_SMALL: dict[Fraction, tuple[str, int]] = {
    Fraction(5, 6): ("A1", 2),
    Fraction(5, 8): ("~A1", 0),
    Fraction(7, 8): ("A1", 3),
}

# Numerics rows for potentially rigid exceptional slopes with 1 < d < m:
# (family, slope, orbit label, existence).  existence: "yes", "no" or "" when
# open.  Every row satisfies nu * |Phi| = dim C(orbit); in particular the
# F4 3/4 orbit must be A1 (the unique F4 orbit with dim C = 36) and the E7
# slope paired with 2A1 must be 9/14 (dim C(2A1) = 81 = (9/14)*126).
POTENTIALLY_RIGID_EXC: tuple[tuple[str, Fraction, str, str], ...] = (
    ("G2", Fraction(2, 3), "A1", ""),
    ("F4", Fraction(3, 4), "A1", ""),
    ("F4", Fraction(3, 8), "A2+~A1", ""),
    ("F4", Fraction(5, 8), "~A1", "yes"),
    ("E6", Fraction(2, 9), "A4+A1", ""),
    ("E6", Fraction(4, 9), "A2+A1", ""),
    ("E6", Fraction(7, 9), "A1", ""),
    ("E6", Fraction(5, 12), "2A2", "no"),
    ("E7", Fraction(3, 14), "D5(a1)", ""),
    ("E7", Fraction(3, 14), "A4+A2", ""),
    ("E7", Fraction(9, 14), "2A1", ""),
    ("E7", Fraction(11, 14), "A1", ""),
    ("E7", Fraction(5, 18), "A3+A2", "no"),
    ("E7", Fraction(7, 18), "2A2", "no"),
    ("E7", Fraction(7, 18), "A2+3A1", "yes"),
    ("E8", Fraction(3, 10), "D4(a1)+A1", ""),
    ("E8", Fraction(5, 12), "A3", ""),
    ("E8", Fraction(2, 15), "D6", ""),
    ("E8", Fraction(2, 15), "E6", ""),
    ("E8", Fraction(2, 15), "D7(a2)", ""),
    ("E8", Fraction(4, 15), "D4+A1", ""),
    ("E8", Fraction(4, 15), "D4(a1)+A2", ""),
    ("E8", Fraction(7, 15), "A2+A1", ""),
    ("E8", Fraction(3, 20), "A6+A1", ""),
    ("E8", Fraction(3, 20), "E7(a4)", ""),
    ("E8", Fraction(7, 20), "A3+A1", ""),
    ("E8", Fraction(13, 20), "2A1", ""),
    ("E8", Fraction(5, 24), "D4+A2", ""),
    ("E8", Fraction(5, 24), "E6(a3)", ""),
    ("E8", Fraction(7, 24), "A3+A2", ""),
    ("E8", Fraction(19, 24), "A1", ""),
    ("E8", Fraction(7, 30), "A4+2A1", "no"),
    ("E8", Fraction(17, 30), "3A1", "no"),
)
