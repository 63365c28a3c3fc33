#!/usr/bin/env python3
"""Transcribe the reference classification data into the package data dir:

* components.json          expected component closures (certain + open
                           memberships), plus the nilpotent and associative
                           restriction closures
* nondegenerations.json    the published non-degeneration pairs with the
                           invariant class that witnesses each
* open_pairs.json          pairs left open (must surface as "unknown")
* dim2_poset.json          degeneration order on the 2-dimensional even
                           parts, with witnessing 2-dim certificates
"""

import json
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "src/jsuper/data"


def nm(i):
    return i if isinstance(i, str) else f"(2,2)_{i}"


def pairs(sources, targets):
    return [[nm(i), nm(j)] for i in sources for j in targets]


def r(a, b):
    return list(range(a, b + 1))


# --- expected components -------------------------------------------------------

COMPONENTS = {
    "tops": [
        {"name": "D_gamma",
         "members": ["D_gamma"] + [nm(i) for i in
                                   [6, 7, 23, 24, 25, 26, 40, 41, 42, 43,
                                    46, 47, 48, 71, 72]],
         "open_members": [nm(i) for i in [2, 4, 17, 18, 30, 31, 32, 35, 36]]},
        {"name": nm(1), "members": [nm(i) for i in [1, 17, 32, 46, 72]],
         "open_members": []},
        {"name": nm(3),
         "members": [nm(i) for i in [2, 3, 17, 18, 23, 24, 35, 36, 46, 48, 71, 72]],
         "open_members": [nm(25), nm(47)]},
        {"name": nm(5),
         "members": [nm(i) for i in [4, 5, 17, 18, 30, 31, 40, 41, 42, 46, 48, 71, 72]],
         "open_members": [nm(47)]},
        {"name": nm(8),
         "members": [nm(i) for i in [8, 17, 19, 21, 33, 46, 49, 68, 72]],
         "open_members": [nm(51)]},
        {"name": nm(9),
         "members": [nm(i) for i in [9, 21, 35, 37, 46, 49, 68, 72]],
         "open_members": []},
        {"name": nm(10),
         "members": [nm(i) for i in [10, 21, 22, 39, 46, 49, 51, 68, 72]],
         "open_members": [nm(32)]},
        {"name": nm(11),
         "members": [nm(i) for i in [11, 21, 29, 40, 44, 46, 49, 68, 72]],
         "open_members": [nm(33), nm(51)]},
        {"name": nm(12),
         "members": [nm(i) for i in [12, 17, 19, 22, 34, 46, 49, 68, 72]],
         "open_members": [nm(32)]},
        {"name": nm(13),
         "members": [nm(i) for i in [13, 17, 19, 29, 39, 46, 49, 68, 72]],
         "open_members": [nm(33), nm(51)]},
        {"name": nm(14),
         "members": [nm(i) for i in [14, 22, 40, 44, 46, 49, 68, 72]],
         "open_members": [nm(32)]},
        {"name": nm(15),
         "members": [nm(i) for i in [15, 21, 34, 46, 49, 51, 68, 72]],
         "open_members": []},
        {"name": nm(16),
         "members": [nm(i) for i in [16, 21, 23, 27, 39, 46, 49, 68, 72]],
         "open_members": []},
        {"name": nm(20),
         "members": [nm(i) for i in [17, 18, 19, 20, 46, 48, 49, 50, 70, 71, 72]],
         "open_members": [nm(47)]},
        {"name": nm(28),
         "members": [nm(i) for i in [23, 25, 27, 28, 46, 48, 49, 50, 70, 71, 72]],
         "open_members": [nm(24), nm(26), nm(47)]},
        {"name": nm(38),
         "members": [nm(i) for i in [35, 36, 37, 38, 46, 48, 49, 50, 68, 69, 70, 71, 72]],
         "open_members": [nm(47)]},
        {"name": nm(45),
         "members": [nm(i) for i in [40, 42, 44, 45, 46, 48, 49, 50, 68, 69, 70, 71, 72]],
         "open_members": [nm(32), nm(41), nm(43), nm(47)]},
        {"name": nm(52), "members": [nm(52), nm(72)], "open_members": []},
        {"name": nm(56),
         "members": [nm(i) for i in [53, 54, 55, 56, 68, 69, 70, 71, 72]],
         "open_members": []},
        {"name": nm(57), "members": [nm(57), nm(68), nm(72)], "open_members": []},
        {"name": nm(59),
         "members": [nm(i) for i in [53, 54, 58, 59, 68, 69, 70, 71, 72]],
         "open_members": []},
        {"name": nm(60), "members": [nm(60), nm(72)], "open_members": []},
        {"name": nm(64),
         "members": [nm(i) for i in [61, 62, 63, 64, 68, 69, 70, 71, 72]],
         "open_members": []},
        {"name": nm(66),
         "members": [nm(i) for i in [61, 62, 65, 66, 68, 69, 70, 71, 72]],
         "open_members": []},
        {"name": nm(67), "members": [nm(67), nm(72)], "open_members": []},
    ],
    "nilpotent_components": {
        nm(47): [nm(i) for i in [46, 47, 48, 71, 72]],
        nm(50): [nm(i) for i in [46, 48, 49, 50, 68, 69, 71, 72]],
        nm(51): [nm(i) for i in [46, 49, 51, 68, 72]],
    },
    "associative_components": {
        nm(1): [nm(i) for i in [1, 17, 32, 46, 72]],
        nm(4): [nm(i) for i in [4, 17, 30, 40, 46, 72]],
        nm(12): [nm(i) for i in [12, 17, 19, 22, 34, 46, 49, 68, 72]],
        nm(14): [nm(i) for i in [14, 22, 40, 44, 46, 49, 68, 72]],
        nm(18): [nm(i) for i in [17, 18, 46, 48, 71, 72]],
        nm(42): [nm(i) for i in [40, 42, 46, 48, 71, 72]],
    },
}

# --- non-degenerations ----------------------------------------------------------

SECTIONS = []

even_part = []
even_part += pairs(r(1, 16), r(52, 67))
even_part += pairs(r(17, 31), r(1, 16) + r(32, 45) + r(52, 67))
even_part += pairs(r(32, 45), r(1, 31) + r(52, 67))
even_part += pairs(r(46, 51), r(1, 45) + r(52, 67))
even_part += pairs(r(52, 67), r(1, 51))
even_part += pairs(r(68, 72), r(1, 67))
SECTIONS.append({"reason": "even_part", "checkable": True, "pairs": even_part})

ab_pairs = []
ab_pairs += pairs(r(8, 16), [3, 5, 7, 18, 24, 25, 26, 31, 36, 41, 42, 43,
                             47, 48, 50, 69, 70, 71])
ab_pairs += pairs([19, 21, 22, 27, 29], [18, 24, 25, 31, 47, 48, 69, 71])
ab_pairs += pairs([33, 34, 37, 39, 44], [36, 41, 42, 47, 48, 69, 71])
ab_pairs += pairs([51], [47, 48, 69, 71])
ab_pairs += pairs([55, 58, 63, 65], [69, 71])
ab_pairs += pairs([1, 2, 4, 6, 49], [48, 71])
ab_pairs += pairs([17, 23, 30, 32, 35, 40, 53, 57, 61, 68], [71])
SECTIONS.append({"reason": "ab", "checkable": True, "pairs": ab_pairs})

as_algebras = []
as_algebras += pairs([2], [30, 32, 40]) + pairs([4], [32]) + pairs([6], [17, 30, 32, 40])
as_algebras += pairs([8], [1, 2, 4, 6, 22, 23, 27, 30, 32, 34, 35, 37, 39, 40, 44])
as_algebras += pairs([9], [1, 2, 4, 6, 17, 19, 22, 23, 27, 29, 30, 32, 33, 34, 39, 40, 44, 51])
as_algebras += pairs([10], [1, 2, 4, 6, 17, 19, 23, 27, 29, 30, 33, 34, 35, 37, 40, 44])
as_algebras += pairs([11], [1, 2, 4, 6, 17, 19, 22, 23, 27, 30, 32, 34, 35, 37, 39])
as_algebras += pairs([12], [1, 4, 40, 44])
as_algebras += pairs([13], [1, 2, 4, 6, 21, 22, 23, 27, 30, 32, 34, 35, 37, 40, 44])
as_algebras += pairs([14], [1, 4, 17, 19, 30, 34])
as_algebras += pairs([15], [1, 2, 4, 6, 17, 19, 22, 23, 27, 29, 32, 33, 35, 37, 39, 40, 44])
as_algebras += pairs([16], [1, 2, 4, 6, 17, 19, 22, 29, 30, 32, 33, 34, 35, 37, 40, 44, 51])
as_algebras += pairs([21, 29], [17, 23, 30]) + pairs([22, 27], [17, 30])
as_algebras += pairs([33, 39], [32, 35, 40]) + pairs([34, 37], [32, 40])
as_algebras += pairs([44], [32]) + pairs([55], [52, 57, 60, 61, 67])
as_algebras += pairs([53, 57, 58, 61], [52, 60, 67])
as_algebras += pairs([63, 65], [52, 53, 57, 60, 67])
SECTIONS.append({"reason": "as_algebras", "checkable": False, "pairs": as_algebras})

forget_pairs = []
forget_pairs += pairs([3], [1, 4, 6, 30, 31, 32, 40, 41, 42, 49, 68, 69])
forget_pairs += pairs([5], [1, 2, 6, 23, 24, 25, 32, 35, 36, 49, 68, 69])
forget_pairs += pairs([7], [1, 2, 4, 17, 18, 30, 31, 32, 35, 36, 49, 68, 69])
forget_pairs += pairs([20], [21, 22, 23, 24, 25, 26, 27, 29, 30, 31, 51])
forget_pairs += pairs([24, 25], [17, 30])
forget_pairs += pairs([26], [17, 18, 30, 31, 49, 68, 69])
forget_pairs += pairs([28], [17, 18, 19, 21, 22, 29, 30, 31, 51])
forget_pairs += pairs([31], [17, 23]) + pairs([36], [32, 40])
forget_pairs += pairs([38], [32, 33, 34, 39, 40, 41, 42, 43, 44, 51])
forget_pairs += pairs([41], [32, 35, 68]) + pairs([42], [68])
forget_pairs += pairs([43], [32, 35, 36, 49, 68, 69])
forget_pairs += pairs([45], [33, 34, 35, 36, 37, 39, 51])
forget_pairs += pairs([47], [33]) + pairs([54], [52, 57, 60, 61, 67])
forget_pairs += pairs([56], [52, 57, 58, 60, 61, 62, 63, 65, 67])
forget_pairs += pairs([58], [57])
forget_pairs += pairs([59], [52, 55, 57, 58, 60, 61, 62, 63, 65, 67])
forget_pairs += pairs([62], [52, 53, 57, 60, 67])
forget_pairs += pairs([64], [52, 53, 54, 55, 57, 58, 60, 65, 67])
forget_pairs += pairs([66], [52, 53, 54, 55, 57, 58, 60, 63, 67])
SECTIONS.append({"reason": "forget", "checkable": True, "pairs": forget_pairs})

SECTIONS.append({"reason": "power_even", "checkable": True,
                 "pairs": pairs([50], [47])})

power_odd = []
power_odd += pairs([1], [30, 40, 68]) + pairs([8], [29]) + pairs([18], [30, 68])
power_odd += pairs([12, 19, 15], [30]) + pairs([47], [68]) + pairs([58], [61])
SECTIONS.append({"reason": "power_odd", "checkable": True, "pairs": power_odd})

general_basis = []
general_basis += pairs([2, 4, 6, 24, 25, 31, 36], [68])
general_basis += pairs(["D_gamma"],
                       r(8, 16) + r(19, 22) + [27, 28, 29, 33, 34, 37, 38, 39,
                                               44, 45, 49, 50, 51]
                       + r(53, 59) + r(61, 66) + [68, 69, 70])
SECTIONS.append({"reason": "general_basis", "checkable": True,
                 "pairs": general_basis})

# --- open pairs -----------------------------------------------------------------

OPEN = []
OPEN += pairs([3], [25, 47]) + pairs([7], [41, 47]) + pairs([8], [51])
OPEN += pairs([5, 20, 38], [47]) + pairs([10, 14], [32])
OPEN += pairs([11, 13], [33, 51]) + pairs([12], [32])
OPEN += pairs([28], [24, 26, 47]) + pairs([45], [32, 41, 43, 47])
OPEN += pairs(["D_gamma"], [2, 4, 17, 18, 30, 31, 32, 35, 36])

# --- 2-dimensional even-part poset ----------------------------------------------

Z = "0"


def alpha2(e11, e12, e22):
    """2x2x2 alpha tensor from the three products (as coefficient pairs)."""
    return [[list(e11), list(e12)], [list(e12), list(e22)]]


DIM2 = {
    "algebras": {
        "semisimple_pair": alpha2(("1", Z), (Z, Z), (Z, "1")),
        "idempotent_plus_null": alpha2(("1", Z), (Z, Z), (Z, Z)),
        "dual_numbers": alpha2(("1", Z), (Z, "1"), (Z, Z)),
        "null_square": alpha2((Z, "1"), (Z, Z), (Z, Z)),
        "half_unit": alpha2(("1", Z), (Z, "1/2"), (Z, Z)),
        "zero": alpha2((Z, Z), (Z, Z), (Z, Z)),
    },
    "established": [
        ["semisimple_pair", "semisimple_pair"],
        ["semisimple_pair", "idempotent_plus_null"],
        ["semisimple_pair", "dual_numbers"],
        ["semisimple_pair", "null_square"],
        ["semisimple_pair", "zero"],
        ["idempotent_plus_null", "idempotent_plus_null"],
        ["idempotent_plus_null", "null_square"],
        ["idempotent_plus_null", "zero"],
        ["dual_numbers", "dual_numbers"],
        ["dual_numbers", "null_square"],
        ["dual_numbers", "zero"],
        ["null_square", "null_square"],
        ["null_square", "zero"],
        ["half_unit", "half_unit"],
        ["half_unit", "zero"],
        ["zero", "zero"],
    ],
    # witnessing curves for the non-reflexive established pairs
    "certificates": {
        "semisimple_pair->idempotent_plus_null": [["1", "0"], ["0", "t"]],
        "semisimple_pair->dual_numbers": [["1", "0"], ["1", "t"]],
        "semisimple_pair->null_square": [["t", "t^2"], ["-t", "t^2"]],
        "semisimple_pair->zero": [["t", "0"], ["0", "t"]],
        "idempotent_plus_null->null_square": [["t", "t^2"], ["1", "0"]],
        "idempotent_plus_null->zero": [["t", "0"], ["0", "t"]],
        "dual_numbers->null_square": [["t", "t^2"], ["t", "2*t^2"]],
        "dual_numbers->zero": [["t", "0"], ["0", "t"]],
        "null_square->zero": [["t", "0"], ["0", "t"]],
        "half_unit->zero": [["t", "0"], ["0", "t"]],
    },
}


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "components.json").write_text(json.dumps(COMPONENTS, indent=1) + "\n")
    (DATA / "nondegenerations.json").write_text(json.dumps(SECTIONS, indent=1) + "\n")
    (DATA / "open_pairs.json").write_text(json.dumps(OPEN, indent=1) + "\n")
    (DATA / "dim2_poset.json").write_text(json.dumps(DIM2, indent=1) + "\n")
    n = sum(len(s["pairs"]) for s in SECTIONS)
    print(f"wrote components ({len(COMPONENTS['tops'])} tops), "
          f"nondegenerations ({n} pairs), open ({len(OPEN)}), dim2 poset")


if __name__ == "__main__":
    main()
