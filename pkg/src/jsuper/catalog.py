"""Machine-readable catalog of the type-(2,2) Jordan superalgebras.

The shipped data file transcribes the 72 superalgebras plus the
one-parameter family once, as data; every derived column (associativity and
nilpotency markers, the automorphism-group dimension) is recomputed at
validation time, so a transcription slip surfaces as a named failure rather
than silent corruption.

Catalog JSON: a list of entries

    { "name": "(2,2)_3",
      "even": ["e1", "e2"], "odd": ["f1", "f2"],
      "products": [["e1", "e1", {"e1": "1"}], ...],
      "flags": {"associative": false, "nilpotent": false},
      "expected_dim_aut": 3,
      "family_param": "g" }            # only on the family entry

Products are stored for canonical pairs only (e_i e_j with i <= j, e_i f_j,
and f_i f_j with i < j); the remaining products follow from the sign rules
and are filled in by the parser.  Omitted products are zero.  Coefficients
are rational strings, or polynomials in the family parameter on a family
entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
import json
import re

from .exact import Poly, parse_ratfun, ExactError
from .superalgebra import (SuperAlgebra, ParamFamily, zero_tensor,
                           check_supercommutativity, check_jordan_superidentity,
                           check_associativity, is_nilpotent)
from .derivation import even_derivation_dim

FAMILY_SAMPLE_VALUES = (Fraction(2), Fraction(3), Fraction(5))


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: object  # SuperAlgebra | ParamFamily
    expected_dim_aut: int
    associative: bool
    nilpotent: bool

    @property
    def is_family(self) -> bool:
        return isinstance(self.algebra, ParamFamily)


def _parse_coeff(text: str, param: str | None):
    if param is None:
        try:
            return Fraction(text)
        except ValueError as exc:
            raise CatalogError(f"non-rational coefficient {text!r}") from exc
    try:
        r = parse_ratfun(text, var=param)
    except ExactError as exc:
        raise CatalogError(f"bad coefficient {text!r}: {exc}") from exc
    if r.den.degree != 0:
        raise CatalogError(f"coefficient {text!r} is not polynomial in {param}")
    return r.num


_SYM_RE = re.compile(r"^[ef]\d+$")


def _build_entry(obj: dict) -> CatalogEntry:
    name = obj["name"]
    even = list(obj.get("even", []))
    odd = list(obj.get("odd", []))
    m, n = len(even), len(odd)
    param = obj.get("family_param")
    sym_index = {}
    for i, s in enumerate(even):
        sym_index[s] = ("e", i)
    for i, s in enumerate(odd):
        sym_index[s] = ("f", i)

    zero = Poly() if param else Fraction(0)
    alpha = [[[zero] * m for _ in range(m)] for _ in range(m)]
    beta = [[[zero] * n for _ in range(n)] for _ in range(m)]
    beta_prime = [[[zero] * n for _ in range(m)] for _ in range(n)]
    gamma = [[[zero] * m for _ in range(n)] for _ in range(n)]

    seen = set()
    for lhs, rhs, coeffs in obj.get("products", []):
        if lhs not in sym_index or rhs not in sym_index:
            raise CatalogError(f"{name}: unknown basis symbol in {lhs}*{rhs}")
        (ls, li), (rs, ri) = sym_index[lhs], sym_index[rhs]
        if (lhs, rhs) in seen:
            raise CatalogError(f"{name}: duplicate product {lhs}*{rhs}")
        seen.add((lhs, rhs))
        if ls == "f" and rs == "e":
            raise CatalogError(f"{name}: store {rhs}*{lhs} instead of {lhs}*{rhs}")
        if ls == rs and li > ri:
            raise CatalogError(f"{name}: store {rhs}*{lhs} instead of {lhs}*{rhs}")
        if ls == "f" and rs == "f" and li == ri:
            raise CatalogError(f"{name}: {lhs}*{lhs} is forced to zero")
        for sym, coeff_text in coeffs.items():
            if sym not in sym_index:
                raise CatalogError(f"{name}: unknown basis symbol {sym!r}")
            (ts, ti) = sym_index[sym]
            c = _parse_coeff(coeff_text, param)
            if ls == "e" and rs == "e":
                if ts != "e":
                    raise CatalogError(f"{name}: {lhs}*{rhs} must land in the even part")
                alpha[li][ri][ti] = c
                alpha[ri][li][ti] = c
            elif ls == "e" and rs == "f":
                if ts != "f":
                    raise CatalogError(f"{name}: {lhs}*{rhs} must land in the odd part")
                beta[li][ri][ti] = c
                beta_prime[ri][li][ti] = c
            else:
                if ts != "e":
                    raise CatalogError(f"{name}: {lhs}*{rhs} must land in the even part")
                gamma[li][ri][ti] = c
                gamma[ri][li][ti] = -c

    if param:
        algebra = ParamFamily.build(m, n, alpha, beta, beta_prime, gamma, param=param)
    else:
        algebra = SuperAlgebra.build(m, n, alpha, beta, beta_prime, gamma)
    flags = obj.get("flags", {})
    return CatalogEntry(name=name, algebra=algebra,
                        expected_dim_aut=obj["expected_dim_aut"],
                        associative=bool(flags.get("associative")),
                        nilpotent=bool(flags.get("nilpotent")))


def parse_catalog(text: str) -> list[CatalogEntry]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"malformed catalog JSON: {exc}") from exc
    entries = []
    names = set()
    for obj in data:
        entry = _build_entry(obj)
        if entry.name in names:
            raise CatalogError(f"name collision: {entry.name}")
        names.add(entry.name)
        entries.append(entry)
    return entries


def serialize_catalog(entries: list[CatalogEntry]) -> str:
    """Canonical JSON for the catalog; parse(serialize(x)) == x."""
    from .exact import fmt_poly, fmt_scalar

    out = []
    for entry in entries:
        alg = entry.algebra
        m, n = alg.m, alg.n
        param = alg.param if entry.is_family else None

        def fmt(c):
            return fmt_poly(c, param) if param else fmt_scalar(c)

        def nonzero(c):
            return bool(c)

        products = []
        for i in range(m):
            for j in range(i, m):
                coeffs = {f"e{k+1}": fmt(alg.alpha[i][j][k])
                          for k in range(m) if nonzero(alg.alpha[i][j][k])}
                if coeffs:
                    products.append([f"e{i+1}", f"e{j+1}", coeffs])
        for i in range(m):
            for j in range(n):
                coeffs = {f"f{k+1}": fmt(alg.beta[i][j][k])
                          for k in range(n) if nonzero(alg.beta[i][j][k])}
                if coeffs:
                    products.append([f"e{i+1}", f"f{j+1}", coeffs])
        for i in range(n):
            for j in range(i + 1, n):
                coeffs = {f"e{k+1}": fmt(alg.gamma[i][j][k])
                          for k in range(m) if nonzero(alg.gamma[i][j][k])}
                if coeffs:
                    products.append([f"f{i+1}", f"f{j+1}", coeffs])
        obj = {
            "name": entry.name,
            "even": [f"e{i+1}" for i in range(m)],
            "odd": [f"f{i+1}" for i in range(n)],
            "products": products,
            "flags": {"associative": entry.associative,
                      "nilpotent": entry.nilpotent},
            "expected_dim_aut": entry.expected_dim_aut,
        }
        if param:
            obj["family_param"] = param
        out.append(obj)
    return json.dumps(out, indent=1, sort_keys=True)


def load_default() -> list[CatalogEntry]:
    text = resources.files("jsuper.data").joinpath("catalog.json").read_text()
    return parse_catalog(text)


def catalog_map(entries) -> dict:
    return {e.name: e for e in entries}


def _validate_concrete(name, A, expected_dim, associative, nilpotent, lines):
    ok = True
    sc, wit = check_supercommutativity(A)
    if not sc:
        lines.append(f"FAIL {name}: supercommutativity violated at {wit}")
        ok = False
    ji, wit = check_jordan_superidentity(A)
    if not ji:
        lines.append(f"FAIL {name}: graded identity violated at {wit[0]}")
        ok = False
    assoc, _ = check_associativity(A)
    if assoc != associative:
        lines.append(f"FAIL {name}: associativity marker is {associative}, "
                     f"recomputed {assoc}")
        ok = False
    nil, _ = is_nilpotent(A)
    if nil != nilpotent:
        lines.append(f"FAIL {name}: nilpotency marker is {nilpotent}, recomputed {nil}")
        ok = False
    if expected_dim is not None:
        dim = even_derivation_dim(A, name).dim
        if dim != expected_dim:
            lines.append(f"FAIL {name}: expected dim Aut {expected_dim}, "
                         f"recomputed {dim}")
            ok = False
    return ok


def validate_entry(entry: CatalogEntry) -> list[str]:
    """Failure lines for one entry (empty means pass)."""
    lines: list[str] = []
    if entry.is_family:
        fam = entry.algebra
        zero_value = Fraction(0)
        spec0 = fam.specialize(zero_value)
        # the family parameter ranges over nonzero scalars only
        if spec0 == fam.specialize(Fraction(1)):
            lines.append(f"FAIL {entry.name}: family does not depend on its parameter")
        for value in FAMILY_SAMPLE_VALUES:
            _validate_concrete(f"{entry.name}[{value}]", fam.specialize(value),
                               entry.expected_dim_aut, entry.associative,
                               entry.nilpotent, lines)
    else:
        _validate_concrete(entry.name, entry.algebra, entry.expected_dim_aut,
                           entry.associative, entry.nilpotent, lines)
    return lines


def validate_catalog(entries: list[CatalogEntry]) -> list[str]:
    """Report lines; per-entry failures plus catalog-level tallies."""
    lines = []
    for entry in entries:
        lines.extend(validate_entry(entry))
    concrete = [e for e in entries if not e.is_family]
    families = [e for e in entries if e.is_family]
    marked = sum(1 for e in concrete if e.nilpotent)
    recomputed = sum(1 for e in concrete if is_nilpotent(e.algebra)[0])
    if marked != recomputed:
        lines.append(f"FAIL catalog: {marked} nilpotency marks but {recomputed} "
                     f"nilpotent algebras recomputed")
    if not lines:
        lines.append(f"{len(concrete)} algebras + {len(families)} family: all pass")
    return lines
