#!/usr/bin/env python3
"""One-time transcription of the type-(2,2) catalog into data/catalog.json.

Each row below is (index-or-name, products, dim_aut, marker, nilpotent).
Products use a compact "lhs*rhs=coeff sym [+ coeff sym]" notation with
canonical pair order (e_i e_j with i <= j, e before f, f_i f_j with i < j).
Derived columns are re-verified by the validation suite, not trusted.
"""

import json
import pathlib
import re

ROWS = [
    (1, "e1*e1=e1; e2*e2=e2", 4, "A", False),
    (2, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2", 4, "NA", False),
    (3, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; f1*f2=e1", 3, "NA", False),
    (4, "e1*e1=e1; e2*e2=e2; e1*f1=f1; e1*f2=f2", 4, "A", False),
    (5, "e1*e1=e1; e2*e2=e2; e1*f1=f1; e1*f2=f2; f1*f2=e1", 3, "NA", False),
    (6, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f1=1/2 f1; e2*f2=1/2 f2",
     4, "NA", False),
    (7, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f1=1/2 f1; e2*f2=1/2 f2; f1*f2=e2",
     3, "NA", False),
    ("D_gamma",
     "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f1=1/2 f1; e2*f2=1/2 f2; f1*f2=e1 + g e2",
     3, "NA", False),
    (8, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1", 2, "NA", False),
    (9, "e1*e1=e1; e2*e2=e2; e1*f2=1/2 f2; e2*f1=1/2 f1", 2, "NA", False),
    (10, "e1*e1=e1; e2*e2=e2; e1*f1=f1; e2*f2=1/2 f2", 2, "NA", False),
    (11, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e2*f1=1/2 f1; e2*f2=f2", 2, "NA", False),
    (12, "e1*e1=e1; e2*e2=e2; e1*f1=f1", 2, "A", False),
    (13, "e1*e1=e1; e2*e2=e2; e1*f1=f1; e1*f2=1/2 f2", 2, "NA", False),
    (14, "e1*e1=e1; e2*e2=e2; e1*f1=f1; e2*f2=f2", 2, "A", False),
    (15, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e2*f1=1/2 f1", 2, "NA", False),
    (16, "e1*e1=e1; e2*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f1=1/2 f1", 2, "NA", False),
    (17, "e1*e1=e1", 5, "A", False),
    (18, "e1*e1=e1; f1*f2=e2", 4, "A", False),
    (19, "e1*e1=e1; e2*f2=f1", 3, "A", False),
    (20, "e1*e1=e1; e2*f2=f1; f1*f2=e2", 2, "NA", False),
    (21, "e1*e1=e1; e1*f2=1/2 f2", 3, "NA", False),
    (22, "e1*e1=e1; e1*f2=f2", 3, "A", False),
    (23, "e1*e1=e1; e1*f1=1/2 f1; e1*f2=1/2 f2", 5, "NA", False),
    (24, "e1*e1=e1; e1*f1=1/2 f1; e1*f2=1/2 f2; f1*f2=e1", 4, "NA", False),
    (25, "e1*e1=e1; e1*f1=1/2 f1; e1*f2=1/2 f2; f1*f2=e2", 4, "NA", False),
    (26, "e1*e1=e1; e1*f1=1/2 f1; e1*f2=1/2 f2; f1*f2=e1 + e2", 3, "NA", False),
    (27, "e1*e1=e1; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f2=f1", 3, "NA", False),
    (28, "e1*e1=e1; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f2=f1; f1*f2=e2", 2, "NA", False),
    (29, "e1*e1=e1; e1*f1=1/2 f1; e1*f2=f2", 3, "NA", False),
    (30, "e1*e1=e1; e1*f1=f1; e1*f2=f2", 5, "A", False),
    (31, "e1*e1=e1; e1*f1=f1; e1*f2=f2; f1*f2=e1", 4, "NA", False),
    (32, "e1*e1=e1; e1*e2=e2", 5, "A", False),
    (33, "e1*e1=e1; e1*e2=e2; e1*f2=1/2 f2", 3, "NA", False),
    (34, "e1*e1=e1; e1*e2=e2; e1*f2=f2", 3, "A", False),
    (35, "e1*e1=e1; e1*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2", 5, "NA", False),
    (36, "e1*e1=e1; e1*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; f1*f2=e2", 4, "NA", False),
    (37, "e1*e1=e1; e1*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f2=f1", 3, "NA", False),
    (38, "e1*e1=e1; e1*e2=e2; e1*f1=1/2 f1; e1*f2=1/2 f2; e2*f2=f1; f1*f2=e2",
     2, "NA", False),
    (39, "e1*e1=e1; e1*e2=e2; e1*f1=1/2 f1; e1*f2=f2", 3, "NA", False),
    (40, "e1*e1=e1; e1*e2=e2; e1*f1=f1; e1*f2=f2", 5, "A", False),
    (41, "e1*e1=e1; e1*e2=e2; e1*f1=f1; e1*f2=f2; f1*f2=e1", 4, "NA", False),
    (42, "e1*e1=e1; e1*e2=e2; e1*f1=f1; e1*f2=f2; f1*f2=e2", 4, "A", False),
    (43, "e1*e1=e1; e1*e2=e2; e1*f1=f1; e1*f2=f2; f1*f2=e1 + e2", 3, "NA", False),
    (44, "e1*e1=e1; e1*e2=e2; e1*f1=f1; e1*f2=f2; e2*f2=f1", 3, "A", False),
    (45, "e1*e1=e1; e1*e2=e2; e1*f1=f1; e1*f2=f2; e2*f2=f1; f1*f2=e2", 2, "NA", False),
    (46, "e1*e1=e2", 6, "A", True),
    (47, "e1*e1=e2; f1*f2=e1", 4, "NA", True),
    (48, "e1*e1=e2; f1*f2=e2", 5, "A", True),
    (49, "e1*e1=e2; e1*f2=f1", 4, "A", True),
    (50, "e1*e1=e2; e1*f2=f1; f1*f2=e2", 3, "NA", True),
    (51, "e1*e1=e2; e2*f2=f1", 3, "NA", True),
    (52, "e1*e1=e1; e1*e2=1/2 e2", 6, "NA", False),
    (53, "e1*e1=e1; e1*e2=1/2 e2; e1*f2=1/2 f2", 4, "NA", False),
    (54, "e1*e1=e1; e1*e2=1/2 e2; e1*f2=1/2 f2; f1*f2=e2", 3, "NA", False),
    (55, "e1*e1=e1; e1*e2=1/2 e2; e1*f2=1/2 f2; e2*f2=f1", 3, "NA", False),
    (56, "e1*e1=e1; e1*e2=1/2 e2; e1*f2=1/2 f2; e2*f2=f1; f1*f2=e2", 2, "NA", False),
    (57, "e1*e1=e1; e1*e2=1/2 e2; e1*f2=f2", 4, "NA", False),
    (58, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=1/2 f1; e2*f2=f1", 3, "NA", False),
    (59, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=1/2 f1; e2*f2=f1; f1*f2=e2", 2, "NA", False),
    (60, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=1/2 f1; e1*f2=1/2 f2", 6, "NA", False),
    (61, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=1/2 f1; e1*f2=f2", 4, "NA", False),
    (62, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=1/2 f1; e1*f2=f2; f1*f2=e2", 3, "NA", False),
    (63, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=1/2 f1; e1*f2=f2; e2*f2=f1", 3, "NA", False),
    (64, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=1/2 f1; e1*f2=f2; e2*f2=f1; f1*f2=e2",
     2, "NA", False),
    (65, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=f1; e1*f2=1/2 f2; e2*f2=f1", 3, "NA", False),
    (66, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=f1; e1*f2=1/2 f2; e2*f2=f1; f1*f2=e2",
     2, "NA", False),
    (67, "e1*e1=e1; e1*e2=1/2 e2; e1*f1=f1; e1*f2=f2", 6, "NA", False),
    (68, "e2*f2=f1", 5, "A", True),
    (69, "e2*f2=f1; f1*f2=e1", 4, "NA", True),
    (70, "e2*f2=f1; f1*f2=e2", 3, "NA", False),
    (71, "f1*f2=e1", 6, "A", True),
    (72, "", 8, "A", True),
]

TERM = re.compile(r"^\s*(?:(?P<coeff>-?\d+(?:/\d+)?|g|-g)\s+)?(?P<sym>[ef]\d)\s*$")


def parse_products(spec: str):
    products = []
    if not spec.strip():
        return products
    for chunk in spec.split(";"):
        lhsrhs, _, value = chunk.partition("=")
        lhs, rhs = (s.strip() for s in lhsrhs.split("*"))
        coeffs = {}
        for term in value.split("+"):
            m = TERM.match(term)
            if not m:
                raise SystemExit(f"bad term {term!r} in {chunk!r}")
            coeffs[m.group("sym")] = m.group("coeff") or "1"
        products.append([lhs, rhs, coeffs])
    return products


def main():
    entries = []
    for key, spec, dim_aut, marker, nilp in ROWS:
        name = key if isinstance(key, str) else f"(2,2)_{key}"
        obj = {
            "name": name,
            "even": ["e1", "e2"],
            "odd": ["f1", "f2"],
            "products": parse_products(spec),
            "flags": {"associative": marker == "A", "nilpotent": nilp},
            "expected_dim_aut": dim_aut,
        }
        if isinstance(key, str):
            obj["family_param"] = "g"
        entries.append(obj)
    out = pathlib.Path(__file__).resolve().parent.parent / "src/jsuper/data/catalog.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(entries, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out} ({len(entries)} entries)")


if __name__ == "__main__":
    main()
