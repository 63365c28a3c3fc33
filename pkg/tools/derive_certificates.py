#!/usr/bin/env python3
"""Derive and freeze the degeneration-certificate corpus.

Each entry below is a one-parameter change of basis (column j = new basis
vector j in old coordinates) taking the source exactly onto the target's
table at t = 0.  They were found by hand and by a small monomial-curve
search (`search_missing`); every one is machine-verified here before being
written, and the transitive closure of the shipped corpus is diffed against
the expected component data so that no unintended membership sneaks in.

Run from the repository root:  python3 tools/derive_certificates.py
"""

import itertools
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from jsuper import catalog  # noqa: E402
from jsuper.degeneration import (DegenerationCertificate, verify_certificate,  # noqa: E402
                                 family_certificate_check, build_relation,
                                 Dim2Poset, load_reference_components)
from jsuper.exact import RatFun, parse_ratfun  # noqa: E402

DATA = ROOT / "src/jsuper/data"
CERTDIR = DATA / "certificates"


def nm(i):
    return i if isinstance(i, str) else f"(2,2)_{i}"


I2 = [["1", "0"], ["0", "1"]]
T2 = [["t", "0"], ["0", "t"]]
SWAP = [["0", "1"], ["1", "0"]]
KILL2 = [["1", "0"], ["0", "t"]]          # scale the second vector by t
E2T = [["1", "0"], ["0", "t"]]            # E1=e1, E2=t e2
UNIT = [["1", "0"], ["1", "t"]]           # E1=e1+e2, E2=t e2
IDEM = [["t", "t^2"], ["-t", "t^2"]]      # E1=t(e1-e2), E2=t^2(e1+e2)
SQ = [["t", "t^2"], ["1", "0"]]           # E1=t e1+e2, E2=t^2 e1
MIX = [["1", "t^-1"], ["0", "1"]]          # F1=f1, F2=(1/t) f1+f2
MIX2 = [["1", "2*t^-1"], ["0", "1"]]         # F1=f1, F2=(2/t) f1+f2

# (source, target, gamma or None, even matrix, odd matrix, how it works)
CERTS = [
    # the family onto its printed targets (variable-parameter curves)
    ("D_gamma", 7, "t", [["0", "1"], ["1", "0"]], I2, "swap the two idempotents"),
    ("D_gamma", 26, "t", E2T, I2, "shrink the second idempotent"),
    ("D_gamma", 43, "1+t", UNIT, I2, "merge idempotents, shrink the second"),
    ("D_gamma", 23, "1+t", E2T, T2, "shrink e2 and both odd vectors"),
    ("D_gamma", 24, "t^2", E2T, I2, "parameter of order two kills the e2 leg"),
    ("D_gamma", 25, "1+t", E2T, [["t", "0"], ["0", "1"]],
     "shrink e2 and f1; the odd product lands on the shrunk idempotent"),
    ("D_gamma", 40, "1+t", UNIT, T2, "merged unit keeps the full odd action"),
    ("D_gamma", 41, "1+t^2", UNIT, I2, "merged unit, odd product on the unit"),
    ("D_gamma", 42, "2+t", UNIT, [["t", "0"], ["0", "1"]],
     "merged unit; odd product retargeted to the nilpotent leg"),
    ("D_gamma", 46, "t^2-1", IDEM, T2, "split-idempotent square"),
    ("D_gamma", 47, "t^2-1", IDEM, [["t", "0"], ["0", "1"]],
     "split-idempotent square keeping the odd product"),
    ("D_gamma", 48, "1+t", IDEM, T2, "split square; odd product onto the square"),
    ("D_gamma", 71, "t-1", [["t", "t"], ["-t", "t"]], [["t", "0"], ["0", "1"]],
     "flatten both idempotents, keep the odd product"),
    # top (2,2)_1 and its associative closure
    (1, 17, None, E2T, I2, "shrink the second idempotent"),
    (1, 32, None, UNIT, I2, "merge the idempotents"),
    # chains inside the semisimple-even group
    (2, 17, None, [["0", "t"], ["1", "0"]], T2, "keep the inert idempotent"),
    (3, 2, None, I2, T2, "kill the odd-odd product"),
    (3, 18, None, [["0", "t^2"], ["1", "0"]], T2,
     "keep the inert idempotent; odd product onto the shrunk one"),
    (3, 24, None, E2T, I2, "shrink the inert idempotent"),
    (3, 36, None, [["1", "t^2"], ["1", "-t^2"]], [["2*t", "0"], ["0", "t"]],
     "merge idempotents; odd product onto the difference"),
    (4, 17, None, [["0", "t"], ["1", "0"]], T2, "keep the inert idempotent"),
    (4, 30, None, E2T, I2, "shrink the second idempotent"),
    (4, 40, None, UNIT, I2, "merge the idempotents"),
    (5, 4, None, I2, T2, "kill the odd-odd product"),
    (5, 18, None, [["0", "t^2"], ["1", "0"]], T2,
     "keep the inert idempotent; odd product onto the shrunk one"),
    (5, 31, None, E2T, I2, "shrink the second idempotent"),
    (5, 42, None, [["1", "t^2"], ["1", "-t^2"]], [["2*t", "0"], ["0", "t"]],
     "merge idempotents; odd product onto the difference"),
    # dim-aut-2 tops (semisimple even part)
    (8, 19, None, [["t^2", "t"], ["1", "t^2"]], MIX2,
     "half-action becomes a nilpotent action"),
    (8, 21, None, E2T, SWAP, "swap odd vectors"),
    (8, 33, None, UNIT, SWAP, "merge idempotents, swap odd vectors"),
    (8, 49, None, [["t", "t^2"], ["t^2", "t^4"]], MIX2,
     "flattened idempotent squares; action becomes nilpotent"),
    (8, 68, None, [["0", "t"], ["t", "t^2"]], MIX2,
     "everything flattens; action becomes nilpotent"),
    (9, 21, None, E2T, I2, "drop the crossed half-action"),
    (9, 35, None, UNIT, I2, "merge idempotents"),
    (9, 37, None, [["1", "0"], ["1", "2*t"]], MIX,
     "merged unit; crossed action becomes nilpotent"),
    (9, 46, None, [["t^2", "t^4"], ["t", "t^2"]], I2, "flattened square"),
    (9, 49, None, [["t^2", "t^4"], ["t", "t^2"]], MIX2,
     "flattened square keeping a nilpotent action"),
    (9, 68, None, [["t^2", "0"], ["0", "t"]], MIX2, "only the crossed action survives"),
    (10, 21, None, [["0", "t"], ["1", "0"]], T2, "keep the half-acting idempotent"),
    (10, 22, None, E2T, SWAP, "swap odd vectors"),
    (10, 39, None, UNIT, SWAP, "merge idempotents, swap odd vectors"),
    (10, 49, None, [["t", "t^2"], ["t^2", "t^4"]], MIX,
     "flattened square with nilpotent action"),
    (10, 51, None, [["1/2*t", "1/4*t^2"], ["t", "t^2"]],
     [["1", "-4*t^-2"], ["0", "1"]],
     "balanced combination squares onto the acting vector"),
    (10, 68, None, [["t^2", "0"], ["0", "t"]], [["1", "-2*t^-1"], ["0", "1"]],
     "half-action becomes the nilpotent action"),
    (11, 21, None, E2T, SWAP, "swap odd vectors"),
    (11, 29, None, [["0", "t"], ["1", "0"]], I2, "keep the doubly-acting idempotent"),
    (11, 40, None, UNIT, I2, "merged unit acts as the identity"),
    (11, 44, None, [["1", "2*t"], ["1", "0"]], MIX,
     "merged unit; residual action becomes nilpotent"),
    (11, 46, None, IDEM, I2, "split-idempotent square"),
    (11, 49, None, [["t", "t^2"], ["-t", "t^2"]], MIX,
     "antisymmetric combination squares; difference action goes nilpotent"),
    (11, 68, None, [["t", "t"], ["t", "-t"]], MIX,
     "difference of the idempotents acts nilpotently in the limit"),
    (12, 19, None, [["0", "t"], ["1", "0"]], MIX,
     "full action becomes a nilpotent action of the other idempotent"),
    (12, 22, None, E2T, SWAP, "swap odd vectors"),
    (12, 34, None, UNIT, SWAP, "merge idempotents, swap odd vectors"),
    (12, 46, None, IDEM, I2, "split-idempotent square"),
    (12, 49, None, [["t", "t^2"], ["t^2", "t^4"]], MIX, "flattened square"),
    (12, 68, None, [["0", "t"], ["t", "0"]], MIX, "flatten; keep nilpotent action"),
    (13, 19, None, [["0", "t"], ["1", "0"]], MIX2, "action goes nilpotent"),
    (13, 29, None, E2T, SWAP, "swap odd vectors"),
    (13, 39, None, UNIT, SWAP, "merge idempotents, swap odd vectors"),
    (13, 49, None, [["t", "t^2"], ["t^2", "t^4"]], MIX2, "flattened square"),
    (13, 68, None, [["0", "t"], ["t", "0"]], MIX2, "flatten; keep nilpotent action"),
    (14, 22, None, E2T, SWAP, "swap odd vectors"),
    (14, 40, None, UNIT, I2, "merged unit acts as the identity"),
    (14, 44, None, [["1", "t"], ["1", "0"]], MIX,
     "merged unit; residual action goes nilpotent"),
    (14, 46, None, IDEM, I2, "split-idempotent square"),
    (14, 49, None, [["t", "t^2"], ["t^2", "t^4"]], MIX, "flattened square"),
    (14, 68, None, [["t^2", "0"], ["0", "t"]], [["1", "-1*t^-1"], ["0", "1"]],
     "second action goes nilpotent"),
    (15, 21, None, [["0", "t"], ["1", "0"]], SWAP, "swap idempotents and odds"),
    (15, 34, None, UNIT, SWAP, "merged unit acts fully on one odd vector"),
    (15, 46, None, IDEM, I2, "split square; equal actions cancel"),
    (15, 51, None, [["-t", "t^2"], ["t", "t^2"]], [["1", "t^-2"], ["0", "1"]],
     "difference squares onto the sum, which acts nilpotently"),
    (15, 68, None, [["0", "t"], ["t^2", "0"]], MIX2, "flatten; keep one action"),
    (16, 21, None, [["0", "t"], ["1", "0"]], SWAP, "keep the single-acting idempotent"),
    (16, 27, None, [["1", "0"], ["0", "2*t"]], MIX,
     "crossed half-action becomes nilpotent"),
    (16, 39, None, UNIT, SWAP, "merge idempotents, swap odd vectors"),
    (16, 46, None, IDEM, I2, "split-idempotent square"),
    (16, 49, None, [["t^2", "t^4"], ["t", "t^2"]], MIX2, "flattened square"),
    (16, 68, None, [["t", "t"], ["0", "-t"]], [["1", "-2*t^-1"], ["0", "1"]],
     "difference action survives as nilpotent"),
    # trivial-even tops and their chains
    (17, 46, None, SQ, I2, "idempotent flattens onto its square"),
    (18, 17, None, I2, T2, "kill the odd-odd product"),
    (18, 46, None, SQ, T2, "flatten; kill the odd-odd product"),
    (18, 48, None, [["t", "t^2"], ["-1*t^-1", "0"]], I2,
     "odd-odd product retargeted onto the square"),
    (18, 71, None, [["0", "t"], ["t^2", "0"]], T2,
     "kill the idempotent, keep the odd-odd product"),
    (19, 17, None, I2, KILL2, "kill the nilpotent action"),
    (20, 18, None, I2, [["t^-1", "0"], ["0", "t"]],
     "kill the action, keep the odd-odd product"),
    (20, 19, None, I2, T2, "kill the odd-odd product"),
    (20, 46, None, SQ, [["1", "0"], ["0", "t^2"]], "flatten everything"),
    (20, 48, None, SQ, [["-1", "0"], ["0", "t"]],
     "odd-odd product onto the square"),
    (20, 49, None, SQ, T2, "flattened square keeps the action"),
    (20, 50, None, [["-t^2", "t^4"], ["1", "0"]], T2,
     "signed flattening keeps both odd products"),
    (20, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the idempotent"),
    (20, 71, None, [["0", "t"], ["t", "0"]], KILL2,
     "kill everything but the odd-odd product"),
    (24, 23, None, I2, T2, "kill the odd-odd product"),
    (25, 23, None, I2, T2, "kill the odd-odd product"),
    (26, 23, None, I2, T2, "kill the odd-odd product"),
    (27, 23, None, I2, KILL2, "kill the nilpotent action"),
    (28, 23, None, I2, KILL2, "kill action and odd-odd product"),
    (28, 25, None, I2, [["t^-1", "0"], ["0", "t"]],
     "kill the action, keep the odd-odd product"),
    (28, 27, None, I2, T2, "kill the odd-odd product"),
    (28, 46, None, SQ, [["1", "0"], ["0", "t^2"]], "flatten everything"),
    (28, 48, None, SQ, [["-1", "0"], ["0", "t"]], "odd-odd product onto the square"),
    (28, 49, None, SQ, [["t^2", "0"], ["0", "t^2"]], "flattened square keeps the action"),
    (28, 50, None, [["-t^2", "t^4"], ["1", "0"]], T2,
     "signed flattening keeps both odd products"),
    (28, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the idempotent"),
    (28, 71, None, [["0", "t"], ["t", "0"]], KILL2,
     "keep only the odd-odd product"),
    (31, 30, None, I2, T2, "kill the odd-odd product"),
    # one-idempotent-with-null (dual-numbers even part) tops
    (36, 35, None, I2, T2, "kill the odd-odd product"),
    (37, 35, None, I2, KILL2, "kill the nilpotent action"),
    (38, 35, None, I2, KILL2, "kill action and odd-odd product"),
    (38, 36, None, I2, [["t^-1", "0"], ["0", "t"]],
     "kill the action, keep the odd-odd product"),
    (38, 37, None, I2, T2, "kill the odd-odd product"),
    (38, 46, None, [["t^2", "t^4"], ["1", "2*t^2"]], [["1", "0"], ["0", "t^3"]],
     "dual-numbers square flattens"),
    (38, 48, None, [["t^2", "t^4"], ["1", "2*t^2"]], [["1", "0"], ["0", "t^2"]],
     "odd-odd product onto the square"),
    (38, 49, None, [["t^2", "t^4"], ["1", "2*t^2"]], [["t^2", "0"], ["0", "t^2"]],
     "square with surviving nilpotent action"),
    (38, 50, None, [["t^2", "t^4"], ["1", "2*t^2"]], T2,
     "square with action and odd-odd product"),
    (38, 68, None, [["t", "0"], ["0", "1"]], T2,
     "kill the even part, keep the action"),
    (38, 69, None, [["0", "t^3"], ["t^2", "1"]], T2,
     "odd-odd product onto the inert leg, action kept"),
    (38, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the even part"),
    (38, 71, None, [["0", "t^3"], ["t^2", "1"]], [["1", "0"], ["0", "t^2"]],
     "only the odd-odd product survives"),
    (41, 40, None, I2, T2, "kill the odd-odd product"),
    (42, 40, None, I2, T2, "kill the odd-odd product"),
    (42, 46, None, [["t^2", "t^4"], ["1", "2*t^2"]], [["t^2", "0"], ["0", "t^2"]],
     "dual-numbers square flattens"),
    (42, 48, None, [["t^2", "t^4"], ["1", "2*t^2"]], T2,
     "odd-odd product onto the square"),
    (42, 71, None, [["0", "t"], ["t^2", "0"]], T2,
     "keep only the odd-odd product"),
    (43, 40, None, I2, T2, "kill the odd-odd product"),
    (44, 40, None, I2, KILL2, "kill the nilpotent action"),
    (45, 40, None, I2, KILL2, "kill action and odd-odd product"),
    (45, 42, None, I2, [["t^-1", "0"], ["0", "t"]],
     "kill the action, keep the odd-odd product"),
    (45, 44, None, I2, T2, "kill the odd-odd product"),
    (45, 46, None, [["t^2", "t^4"], ["1", "2*t^2"]], [["1", "0"], ["0", "t^3"]],
     "dual-numbers square flattens"),
    (45, 48, None, [["t^2", "t^4"], ["1", "2*t^2"]], [["1", "0"], ["0", "t^2"]],
     "odd-odd product onto the square"),
    (45, 49, None, [["t^2", "t^4"], ["1", "2*t^2"]], [["t^2", "0"], ["0", "t^2"]],
     "square with surviving nilpotent action"),
    (45, 50, None, [["t^2", "t^4"], ["1", "2*t^2"]], T2,
     "square with action and odd-odd product"),
    (45, 68, None, [["t", "0"], ["0", "1"]], T2, "keep only the action"),
    (45, 69, None, [["0", "t^3"], ["t", "t^-1"]], KILL2,
     "odd-odd product onto the inert leg, action kept"),
    (45, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the even part"),
    (45, 71, None, [["0", "t^3"], ["t^2", "1"]], [["1", "0"], ["0", "t^2"]],
     "only the odd-odd product survives"),
    # nilpotent tops
    (47, 46, None, I2, T2, "kill the odd-odd product"),
    (47, 48, None, [["1", "0"], ["-1*t^-2", "1"]], T2,
     "odd-odd product onto the square"),
    (47, 71, None, [["1", "0"], ["0", "t^-1"]], I2, "kill the squaring"),
    (48, 46, None, I2, T2, "kill the odd-odd product"),
    (49, 46, None, I2, KILL2, "kill the nilpotent action"),
    (50, 46, None, I2, KILL2, "kill action and odd-odd product"),
    (50, 48, None, I2, [["t^-1", "0"], ["0", "t"]],
     "kill the action, keep the odd-odd product"),
    (50, 49, None, I2, T2, "kill the odd-odd product"),
    (50, 68, None, [["0", "t"], ["1", "0"]], [["t", "0"], ["0", "1"]],
     "squaring dies, action moves to the other even vector"),
    (50, 69, None, [["0", "1"], ["t^-2", "0"]], [["t^-1", "0"], ["0", "t^-1"]],
     "odd-odd product onto the former squaring target"),
    (50, 71, None, [["0", "t"], ["1", "0"]], I2, "keep only the odd-odd product"),
    (51, 46, None, I2, KILL2, "kill the nilpotent action"),
    (51, 49, None, [["t", "0"], ["1", "t^2"]], I2,
     "acting vector also becomes the square root"),
    (51, 68, None, T2, [["t", "0"], ["0", "1"]], "kill the squaring"),
    # half-unit even part tops
    (54, 53, None, I2, T2, "kill the odd-odd product"),
    (55, 53, None, I2, KILL2, "kill the nilpotent action"),
    (56, 53, None, I2, KILL2, "kill action and odd-odd product"),
    (56, 54, None, I2, [["t^-1", "0"], ["0", "t"]],
     "kill the action, keep the odd-odd product"),
    (56, 55, None, I2, T2, "kill the odd-odd product"),
    (56, 68, None, [["t", "0"], ["0", "1"]], T2, "keep only the action"),
    (56, 69, None, [["0", "t"], ["t", "t^-1"]], KILL2,
     "odd-odd product onto the inert leg"),
    (56, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the even part"),
    (56, 71, None, [["0", "t"], ["t", "1"]], KILL2,
     "only the odd-odd product survives"),
    (57, 68, None, [["t^2", "t"], ["1", "1"]], [["0", "1"], ["1", "t^-1"]],
     "the half-unit action reappears as a nilpotent action"),
    (58, 53, None, I2, [["0", "1"], ["t", "0"]], "swap odds, kill the action"),
    (59, 53, None, I2, [["0", "1"], ["t", "0"]], "swap odds, kill everything else"),
    (59, 54, None, I2, [["0", "t^-1"], ["-t", "0"]],
     "swap odds, keep the odd-odd product"),
    (59, 58, None, I2, T2, "kill the odd-odd product"),
    (59, 68, None, [["t", "0"], ["0", "1"]], T2, "keep only the action"),
    (59, 69, None, [["0", "t"], ["t", "t^-1"]], KILL2,
     "odd-odd product onto the inert leg"),
    (59, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the even part"),
    (59, 71, None, [["0", "t"], ["t", "1"]], KILL2,
     "only the odd-odd product survives"),
    (62, 61, None, I2, T2, "kill the odd-odd product"),
    (63, 61, None, I2, KILL2, "kill the nilpotent action"),
    (64, 61, None, I2, KILL2, "kill action and odd-odd product"),
    (64, 62, None, I2, [["t^-1", "0"], ["0", "t"]],
     "kill the action, keep the odd-odd product"),
    (64, 63, None, I2, T2, "kill the odd-odd product"),
    (64, 68, None, [["t", "0"], ["0", "1"]], T2, "keep only the action"),
    (64, 69, None, [["0", "t"], ["t", "t^-1"]], KILL2,
     "odd-odd product onto the inert leg"),
    (64, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the even part"),
    (64, 71, None, [["0", "t"], ["t", "1"]], KILL2,
     "only the odd-odd product survives"),
    (66, 61, None, I2, [["0", "t^-1"], ["t^2", "0"]],
     "swap odds, kill the extra products"),
    (66, 62, None, I2, [["0", "t^-1"], ["-t", "0"]],
     "swap odds, keep the odd-odd product"),
    (66, 65, None, I2, T2, "kill the odd-odd product"),
    (66, 68, None, [["t", "0"], ["0", "1"]], T2, "keep only the action"),
    (66, 69, None, [["0", "t"], ["t", "t^-1"]], KILL2,
     "odd-odd product onto the inert leg"),
    (66, 70, None, [["t", "0"], ["0", "1"]], I2, "kill the even part"),
    (66, 71, None, [["0", "t"], ["t", "1"]], KILL2,
     "only the odd-odd product survives"),
    # low strata
    (7, 6, None, I2, T2, "kill the odd-odd product"),
    (69, 68, None, I2, T2, "kill the odd-odd product"),
    (70, 68, None, I2, T2, "kill the odd-odd product"),
]

# Listed memberships with no one-parameter witness: for (2,2)_5 -> (2,2)_41
# a t-adic valuation analysis of the general curve shows the required
# conditions are contradictory, so the membership is left "unknown" and the
# corpus intentionally does not cover it.
KNOWN_UNESTABLISHED = {(nm(5), nm(41))}


def build(source, target, gamma, even, odd, note):
    return DegenerationCertificate(
        source=nm(source), target=nm(target),
        even_matrix=tuple(tuple(parse_ratfun(x) for x in row) for row in even),
        odd_matrix=tuple(tuple(parse_ratfun(x) for x in row) for row in odd),
        gamma=parse_ratfun(gamma) if gamma else None,
        note=note)


def search_missing(entries, missing):
    """Monomial-curve search for any uncovered pair (development aid)."""
    from fractions import Fraction
    found = []
    coeffs = ["1", "-1", "2", "1/2", "-2"]
    powers = ["t^-2", "t^-1", "1", "t", "t^2", "t^3"]
    shapes_e = [
        [["1", "0"], ["0", "P"]], [["0", "P"], ["1", "0"]],
        [["1", "0"], ["1", "P"]], [["t", "t^2"], ["-t", "t^2"]],
        [["t", "t^2"], ["1", "0"]], [["P", "0"], ["0", "Q"]],
        [["0", "P"], ["Q", "R"]], [["P", "Q"], ["1", "R"]],
    ]
    # deliberately tiny: this exists to flag gaps, not to run in CI
    for (a, b) in missing:
        print(f"  searching {a} -> {b} ...")
        hit = None
        for shape in shapes_e:
            if hit:
                break
            slots = sorted({x for row in shape for x in row if x in "PQR"})
            for combo in itertools.product(powers, repeat=len(slots)):
                sub = dict(zip(slots, combo))
                even = [[sub.get(x, x) for x in row] for row in shape]
                for odd in ([["1", "0"], ["0", "1"]], [["t", "0"], ["0", "t"]],
                            [["1", "0"], ["0", "t"]], [["0", "1"], ["1", "0"]],
                            [["1", "t^-1"], ["0", "1"]], [["1", "2*t^-1"], ["0", "1"]]):
                    try:
                        cert = build(a, b, None, even, odd, "search")
                        if verify_certificate(cert, entries).ok:
                            hit = cert
                            break
                    except Exception:
                        continue
                if hit:
                    break
        if hit:
            print(f"    found: even={hit.to_dict()['even_matrix']} "
                  f"odd={hit.to_dict()['odd_matrix']}")
            found.append(hit)
        else:
            print("    NOT FOUND")
    return found


def main():
    entries = catalog.catalog_map(catalog.load_default())
    poset = Dim2Poset.load_default()
    certs = []
    for source, target, gamma, even, odd, note in CERTS:
        cert = build(source, target, gamma, even, odd, note)
        checker = family_certificate_check if entries[cert.source].is_family \
            else verify_certificate
        res = checker(cert, entries)
        if not res.ok:
            raise SystemExit(f"BAD CERT {cert.source} -> {cert.target}: {res.message}")
        certs.append(cert)
    print(f"all {len(certs)} certificates verify")

    relation = build_relation(entries, certs, poset)
    reference = load_reference_components()
    missing = []
    extra = set()
    for comp in reference["tops"]:
        name = comp["name"]
        listed = set(comp["members"]) | set(comp.get("open_members", ()))
        for x in comp["members"]:
            if x != name and relation.status(name, x) != "established" \
                    and (name, x) not in KNOWN_UNESTABLISHED:
                missing.append((name, x))
        for (a, b) in relation.established:
            if a == name and b != name and b not in listed:
                extra.add((a, b))
    for kind in ("nilpotent_components", "associative_components"):
        for top, members in reference[kind].items():
            for x in members:
                if x != top and relation.status(top, x) != "established":
                    missing.append((top, x))
    if missing:
        print(f"{len(missing)} expected memberships not established:")
        for a, b in sorted(set(missing)):
            print(f"  {a} -> {b}")
        search_missing(entries, sorted(set(missing)))
        raise SystemExit(1)
    print("every expected membership is certificate-established")
    print(f"memberships established beyond the printed lists: {sorted(extra)}")

    CERTDIR.mkdir(parents=True, exist_ok=True)
    for old in CERTDIR.glob("*.json"):
        old.unlink()
    for i, cert in enumerate(certs):
        src = cert.source.replace("(2,2)_", "").replace("D_gamma", "D")
        tgt = cert.target.replace("(2,2)_", "")
        path = CERTDIR / f"{int(src):02d}_to_{int(tgt):02d}.json" \
            if src.isdigit() else CERTDIR / f"D_to_{int(tgt):02d}.json"
        path.write_text(json.dumps(cert.to_dict(), indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(certs)} certificate files to {CERTDIR}")


if __name__ == "__main__":
    main()
