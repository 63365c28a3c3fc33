"""Degeneration certificates, non-degeneration invariants, and the
component bookkeeping for the type-(2,2) variety.

A positive degeneration A -> B is witnessed by a one-parameter change of
basis: a pair of matrices over rational functions in t, invertible for
generic t, whose transformed structure constants have a limit at t = 0
equal, entry by entry, to B's stored table.  Limit equality is on the nose,
never up to isomorphism; a certificate author composes with a constant
basis change when needed.

Negative statements are produced by `separate`, which evaluates a battery
of closed, basis-change-invariant necessary conditions: the automorphism
dimension must strictly grow, graded power-space dimensions cannot grow,
the 2-dimensional even parts must themselves degenerate (shipped poset),
the odd-odd-only and odd-killed companion algebras must degenerate,
associativity is inherited, and a scalar action of the even part on the odd
part is inherited.  An empty result is *not* a proof of degeneration; such
pairs stay "unknown".

The family entry is one node of the relation.  Certificates out of it carry
a substitution gamma(t); invariant checks against it are evaluated at
several parameter samples and must agree (all invariants used here are
parameter-independent).  For the family the automorphism-dimension bound is
relaxed by one: the union over the parameter adds one dimension to the
closure, so only targets with strictly smaller automorphism dimension are
excluded, not equal ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
import json

from .exact import (RatFun, Poly, parse_ratfun, fmt_ratfun, eval_at_zero,
                    ExactError, QQ0, QQ1)
from . import linear
from .superalgebra import (SuperAlgebra, ParamFamily, transform_tensors,
                           check_supercommutativity, check_jordan_superidentity,
                           check_associativity, is_nilpotent, power_dims_sequence,
                           scalar_odd_action, even_part, ab, forget)
from .derivation import even_derivation_dim
from .catalog import CatalogEntry, FAMILY_SAMPLE_VALUES

POWER_DEPTH = 6  # power dims are compared for r = 1..POWER_DEPTH (all stable by then)


class CertificateError(ValueError):
    pass


class SoundnessError(RuntimeError):
    """A pair both certificate-verified and invariant-refuted."""


@dataclass(frozen=True)
class DegenerationCertificate:
    source: str
    target: str
    even_matrix: tuple   # column j = old-basis coordinates of new vector j
    odd_matrix: tuple
    gamma: RatFun | None = None   # substitution for a family source
    note: str = ""

    @staticmethod
    def from_dict(obj: dict) -> "DegenerationCertificate":
        ev = tuple(tuple(parse_ratfun(x) for x in row) for row in obj["even_matrix"])
        od = tuple(tuple(parse_ratfun(x) for x in row) for row in obj["odd_matrix"])
        gamma = parse_ratfun(obj["gamma"]) if obj.get("gamma") else None
        return DegenerationCertificate(obj["source"], obj["target"], ev, od,
                                       gamma, obj.get("note", ""))

    def to_dict(self) -> dict:
        obj = {
            "source": self.source,
            "target": self.target,
            "even_matrix": [[fmt_ratfun(x) for x in row] for row in self.even_matrix],
            "odd_matrix": [[fmt_ratfun(x) for x in row] for row in self.odd_matrix],
        }
        if self.gamma is not None:
            obj["gamma"] = fmt_ratfun(self.gamma)
        if self.note:
            obj["note"] = self.note
        return obj


def identity_certificate(name: str, m: int = 2, n: int = 2) -> DegenerationCertificate:
    one, zero = RatFun.const(1), RatFun.const(0)
    ev = tuple(tuple(one if i == j else zero for j in range(m)) for i in range(m))
    od = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    return DegenerationCertificate(name, name, ev, od, note="identity")


def scaling_certificate(name: str, target: str, m: int = 2, n: int = 2,
                        gamma: RatFun | None = None) -> DegenerationCertificate:
    t, zero = RatFun.t(1), RatFun.const(0)
    ev = tuple(tuple(t if i == j else zero for j in range(m)) for i in range(m))
    od = tuple(tuple(t if i == j else zero for j in range(n)) for i in range(n))
    return DegenerationCertificate(name, target, ev, od, gamma,
                                   note="scale every basis vector by t")


def _lift_tensor(t):
    return tuple(tuple(tuple(RatFun.const(x) for x in row) for row in plane)
                 for plane in t)


def apply_curve(cert: DegenerationCertificate, entries: dict):
    """Exact transformed structure constants over the rational-function
    field.  Returns (m, n, tensors)."""
    if cert.source not in entries:
        raise CertificateError(f"unknown source {cert.source!r}")
    src = entries[cert.source].algebra
    if isinstance(src, ParamFamily):
        if cert.gamma is None:
            raise CertificateError(f"{cert.source} is a family: certificate "
                                   f"needs a gamma substitution")
        tensors = src.substitute(cert.gamma)
    else:
        if cert.gamma is not None:
            raise CertificateError(f"{cert.source} is not a family: drop gamma")
        tensors = tuple(_lift_tensor(t) for t in
                        (src.alpha, src.beta, src.beta_prime, src.gamma))
    m, n = src.m, src.n
    if not linear.det([list(r) for r in cert.even_matrix]):
        raise CertificateError("curve not in G for generic t: even block singular")
    if n and not linear.det([list(r) for r in cert.odd_matrix]):
        raise CertificateError("curve not in G for generic t: odd block singular")
    new = transform_tensors(m, n, *tensors, cert.even_matrix, cert.odd_matrix)
    return m, n, new


_TENSOR_NAMES = ("alpha", "beta", "beta_prime", "gamma")


def limit_at_zero(m: int, n: int, tensors) -> SuperAlgebra:
    """Entrywise value at t = 0, validated to stay inside the variety."""
    limits = []
    for name, tensor in zip(_TENSOR_NAMES, tensors):
        out = []
        for i, plane in enumerate(tensor):
            row_out = []
            for j, row in enumerate(plane):
                entry_out = []
                for k, f in enumerate(row):
                    try:
                        entry_out.append(eval_at_zero(f))
                    except ExactError as exc:
                        raise CertificateError(
                            f"pole at t=0 in {name}[{i}][{j}][{k}]") from exc
                row_out.append(tuple(entry_out))
            out.append(tuple(row_out))
        limits.append(tuple(out))
    B = SuperAlgebra(m, n, *limits)
    ok, wit = check_supercommutativity(B)
    if not ok:
        raise CertificateError(f"limit left the variety: supercommutativity at {wit}")
    ok, wit = check_jordan_superidentity(B)
    if not ok:
        raise CertificateError(f"limit left the variety: graded identity at {wit[0]}")
    return B


@dataclass(frozen=True)
class VerificationResult:
    certificate: DegenerationCertificate
    ok: bool
    message: str
    limit: SuperAlgebra | None = None


def verify_certificate(cert: DegenerationCertificate, entries: dict) -> VerificationResult:
    """apply_curve, take the limit, and compare exactly with the target."""
    if cert.target not in entries:
        return VerificationResult(cert, False, f"unknown target {cert.target!r}")
    tgt_entry = entries[cert.target]
    if isinstance(tgt_entry.algebra, ParamFamily):
        return VerificationResult(cert, False, "target must be a concrete entry")
    try:
        m, n, tensors = apply_curve(cert, entries)
        B = limit_at_zero(m, n, tensors)
    except CertificateError as exc:
        return VerificationResult(cert, False, str(exc))
    T = tgt_entry.algebra
    for name, got, want in zip(_TENSOR_NAMES, B.tensors(), T.tensors()):
        if got != want:
            where = _first_difference(got, want)
            return VerificationResult(cert, False,
                                      f"limit differs from {cert.target} at "
                                      f"{name}{where}", B)
    return VerificationResult(cert, True, "limit equals target exactly", B)


def _first_difference(got, want):
    for i, (pa, pb) in enumerate(zip(got, want)):
        for j, (ra, rb) in enumerate(zip(pa, pb)):
            for k, (xa, xb) in enumerate(zip(ra, rb)):
                if xa != xb:
                    return f"[{i}][{j}][{k}] ({xa} != {xb})"
    return ""


def family_certificate_check(cert: DegenerationCertificate, entries: dict) -> VerificationResult:
    """verify_certificate plus the variable-parameter sanity condition:
    gamma(t) is nonconstant, or the target differs from every member of the
    family (so the curve really leaves the fibers)."""
    src = entries.get(cert.source)
    if src is None or not isinstance(src.algebra, ParamFamily):
        return VerificationResult(cert, False, f"{cert.source} is not a family")
    if cert.gamma is None:
        return VerificationResult(cert, False, "family certificate needs gamma")
    if cert.gamma.is_constant():
        tgt = entries[cert.target].algebra
        value = src.algebra.matches_specialization(tgt)
        if value is not None:
            return VerificationResult(
                cert, False,
                f"constant gamma and target equals the member at {value}")
    return verify_certificate(cert, entries)


# --- invariant profiles -------------------------------------------------------


@dataclass(frozen=True)
class CoreInvariants:
    dim_aut: int
    power_dims: tuple      # ((even, odd) for r = 1..POWER_DEPTH)
    associative: bool
    scalar_odd: bool
    even_key: str
    table: tuple           # the four tensors, for on-the-nose equality


@dataclass(frozen=True)
class InvariantProfile:
    name: str
    core: CoreInvariants
    ab_core: CoreInvariants
    forget_core: CoreInvariants
    nilpotent: bool
    nilpotency_index: int | None


class Dim2Poset:
    """Degeneration order on the two-dimensional even parts occurring in
    the catalog.  Shipped as derived data; re-derived by the test suite
    from 2-dimensional certificates plus the invariant battery."""

    def __init__(self, algebras: dict, established: set):
        self.algebras = algebras          # key -> alpha tensor (2x2x2)
        self.established = established    # set of (key, key)
        self._by_table = {alpha: key for key, alpha in algebras.items()}

    @staticmethod
    def load_default() -> "Dim2Poset":
        text = resources.files("jsuper.data").joinpath("dim2_poset.json").read_text()
        return Dim2Poset.from_dict(json.loads(text))

    @staticmethod
    def from_dict(obj: dict) -> "Dim2Poset":
        algebras = {}
        for key, table in obj["algebras"].items():
            algebras[key] = tuple(
                tuple(tuple(Fraction(x) for x in row) for row in plane)
                for plane in table)
        established = {tuple(p) for p in obj["established"]}
        return Dim2Poset(algebras, established)

    def classify(self, A: SuperAlgebra) -> str:
        key = self._by_table.get(A.alpha)
        if key is None:
            raise KeyError("even part is not one of the catalogued "
                           "2-dimensional algebras")
        return key

    def allows(self, a: str, b: str) -> bool:
        return (a, b) in self.established


def _core(A: SuperAlgebra, poset: Dim2Poset) -> CoreInvariants:
    return CoreInvariants(
        dim_aut=even_derivation_dim(A).dim,
        power_dims=tuple(power_dims_sequence(A, POWER_DEPTH)),
        associative=check_associativity(A)[0],
        scalar_odd=scalar_odd_action(A),
        even_key=poset.classify(even_part(A)),
        table=(A.alpha, A.beta, A.beta_prime, A.gamma),
    )


def profile(A: SuperAlgebra, poset: Dim2Poset, name: str = "") -> InvariantProfile:
    """Invariant battery for one algebra; cached on the instance."""
    cached = A.__dict__.get("_invariant_profile")
    if cached is not None and cached.name == name:
        return cached
    core = _core(A, poset)
    # nilpotency falls out of the power sequence: the chain of a nilpotent
    # algebra of dimension d strictly descends, so it hits 0 by r = d + 1
    nil, idx = False, None
    for r, dims in enumerate(core.power_dims, start=1):
        if dims == (0, 0):
            nil, idx = True, r
            break
    got = InvariantProfile(
        name=name,
        core=core,
        ab_core=_core(ab(A), poset),
        forget_core=_core(forget(A), poset),
        nilpotent=nil,
        nilpotency_index=idx,
    )
    object.__setattr__(A, "_invariant_profile", got)
    return got


@dataclass(frozen=True)
class Obstruction:
    kind: str          # dim_aut / power_dims / even_part / ab / forget /
                       # associativity / scalar_odd_action
    detail: str = ""

    def __str__(self):
        return f"{self.kind}({self.detail})" if self.detail else self.kind


def _power_violations(pa: CoreInvariants, pb: CoreInvariants):
    out = []
    for r, (da, db) in enumerate(zip(pa.power_dims, pb.power_dims), start=1):
        for parity in (0, 1):
            if da[parity] < db[parity]:
                out.append((r, parity))
    return out


def _derived_obstruction(pa: CoreInvariants, pb: CoreInvariants,
                         poset: Dim2Poset) -> str | None:
    """Refute X -> Y for derived companion algebras, where X ~ Y is not
    excluded: only strict invariant drops count."""
    if pa.table == pb.table:
        return None
    if pa.dim_aut > pb.dim_aut:
        return f"dim_aut {pa.dim_aut} > {pb.dim_aut}"
    viol = _power_violations(pa, pb)
    if viol:
        r, parity = viol[0]
        return f"power dims r={r} parity={parity}"
    if not poset.allows(pa.even_key, pb.even_key):
        return f"even part {pa.even_key} cannot reach {pb.even_key}"
    if pa.associative and not pb.associative:
        return "associativity lost"
    if pa.scalar_odd and not pb.scalar_odd:
        return "scalar odd action lost"
    return None


def separate(pa: InvariantProfile, pb: InvariantProfile, poset: Dim2Poset,
             source_is_family: bool = False) -> list[Obstruction]:
    """Every violated necessary condition for `pa -> pb` (assumed distinct,
    non-isomorphic entries).  Empty list means no obstruction found, which
    is *not* a proof of degeneration."""
    out = []
    if source_is_family:
        # the closure of the parameter union gains one dimension
        if pb.core.dim_aut < pa.core.dim_aut:
            out.append(Obstruction("dim_aut",
                                   f"{pb.core.dim_aut} < {pa.core.dim_aut} (family)"))
    else:
        if pa.core.dim_aut >= pb.core.dim_aut:
            out.append(Obstruction("dim_aut",
                                   f"{pa.core.dim_aut} >= {pb.core.dim_aut}"))
    for (r, parity) in _power_violations(pa.core, pb.core):
        out.append(Obstruction("power_dims", f"r={r},parity={parity}"))
    if not poset.allows(pa.core.even_key, pb.core.even_key):
        out.append(Obstruction("even_part",
                               f"{pa.core.even_key} -/-> {pb.core.even_key}"))
    inner = _derived_obstruction(pa.ab_core, pb.ab_core, poset)
    if inner:
        out.append(Obstruction("ab", inner))
    inner = _derived_obstruction(pa.forget_core, pb.forget_core, poset)
    if inner:
        out.append(Obstruction("forget", inner))
    if pa.core.associative and not pb.core.associative:
        out.append(Obstruction("associativity"))
    if pa.core.scalar_odd and not pb.core.scalar_odd:
        out.append(Obstruction("scalar_odd_action"))
    return out


def entry_profiles(entry: CatalogEntry, poset: Dim2Poset):
    """Profiles of a catalog entry; families yield one per sample value and
    the invariant battery insists they agree.  Cached on the entry."""
    cached = entry.__dict__.get("_entry_profiles")
    if cached is not None:
        return cached
    if entry.is_family:
        profs = [profile(entry.algebra.specialize(v), poset, entry.name)
                 for v in FAMILY_SAMPLE_VALUES]
    else:
        profs = [profile(entry.algebra, poset, entry.name)]
    object.__setattr__(entry, "_entry_profiles", profs)
    return profs


def separate_entries(a: CatalogEntry, b: CatalogEntry, poset: Dim2Poset) -> list[Obstruction]:
    """Obstruction battery between catalog entries; family sources are
    checked at all samples and the verdicts must coincide."""
    pbs = entry_profiles(b, poset)
    results = []
    for pa in entry_profiles(a, poset):
        for pb in pbs:
            results.append(separate(pa, pb, poset, source_is_family=a.is_family))
    canonical = {tuple(str(o) for o in r) for r in results}
    if len(canonical) != 1:
        raise SoundnessError(
            f"obstructions for {a.name} -> {b.name} depend on the family sample")
    return results[0]


# --- the degeneration relation -------------------------------------------------


ZERO_ALGEBRA = "(2,2)_72"


@dataclass
class DegenRelation:
    nodes: list
    established: dict          # (a, b) -> provenance string
    refuted: dict              # (a, b) -> list[Obstruction]
    targets: list = field(default_factory=list)

    def status(self, a: str, b: str) -> str:
        if (a, b) in self.established:
            return "established"
        if (a, b) in self.refuted:
            return "refuted"
        return "unknown"

    def unknown_pairs(self):
        out = []
        for a in self.nodes:
            for b in self.targets:
                if a != b and self.status(a, b) == "unknown":
                    out.append((a, b))
        return out


def build_relation(entries: dict, certs, poset: Dim2Poset,
                   include_trivial: bool = True,
                   check_soundness: bool = True) -> DegenRelation:
    """Verified certificates (plus identity and total-scaling), closed under
    transitivity, against the invariant battery on every ordered pair.

    Raises SoundnessError if any pair ends up both established and refuted,
    or if a supplied certificate fails verification.
    """
    names = list(entries)
    concrete = [n for n in names if not entries[n].is_family]
    established = {}

    def add(a, b, why):
        established.setdefault((a, b), why)

    for name in names:
        add(name, name, "identity")
    if include_trivial:
        for name in concrete:
            cert = identity_certificate(name, entries[name].algebra.m,
                                        entries[name].algebra.n)
            res = verify_certificate(cert, entries)
            if not res.ok:
                raise SoundnessError(f"identity certificate failed on {name}: {res.message}")
        if ZERO_ALGEBRA in entries:
            for name in names:
                e = entries[name]
                gamma = RatFun.t(1) if e.is_family else None
                cert = scaling_certificate(name, ZERO_ALGEBRA, e.algebra.m,
                                           e.algebra.n, gamma)
                res = (family_certificate_check if e.is_family else verify_certificate)(cert, entries)
                if not res.ok:
                    raise SoundnessError(f"scaling certificate failed on {name}: {res.message}")
                add(name, ZERO_ALGEBRA, "scaling")
    for cert in certs:
        checker = family_certificate_check if entries[cert.source].is_family \
            else verify_certificate
        res = checker(cert, entries)
        if not res.ok:
            raise SoundnessError(
                f"certificate {cert.source} -> {cert.target} failed: {res.message}")
        add(cert.source, cert.target, "certificate")
    # transitive closure
    changed = True
    while changed:
        changed = False
        pairs = list(established)
        succ = {}
        for (a, b) in pairs:
            succ.setdefault(a, set()).add(b)
        for (a, b) in pairs:
            for c in succ.get(b, ()):
                if (a, c) not in established:
                    established[(a, c)] = "transitive"
                    changed = True
    refuted = {}
    for a in names:
        for b in concrete:
            if a == b:
                continue
            obs = separate_entries(entries[a], entries[b], poset)
            if obs:
                refuted[(a, b)] = obs
    if check_soundness:
        bad = sorted(set(established) & set(refuted))
        if bad:
            raise SoundnessError(f"pairs both established and refuted: {bad}")
    return DegenRelation(nodes=names, established=established, refuted=refuted,
                         targets=concrete)


def covering_edges(relation: DegenRelation):
    proper = {(a, b) for (a, b) in relation.established if a != b}
    out = []
    for (a, b) in sorted(proper):
        if not any((a, c) in proper and (c, b) in proper
                   for c in relation.nodes if c not in (a, b)):
            out.append((a, b))
    return out


def _dot_id(name: str) -> str:
    return '"%s"' % name.replace('"', "")


def to_dot(relation: DegenRelation, include_unknown: bool = True,
           include_refuted: bool = True) -> str:
    """DOT text: solid = established covering edges, dashed = refuted with
    its reason, dotted = undecided."""
    lines = ["digraph degenerations {"]
    lines.append("  // solid: established (covering edges of the closure)")
    lines.append("  // dashed: refuted, annotated with the failed invariant")
    lines.append("  // dotted: unknown")
    for n in relation.nodes:
        lines.append(f"  {_dot_id(n)};")
    for (a, b) in covering_edges(relation):
        lines.append(f"  {_dot_id(a)} -> {_dot_id(b)} [style=solid];")
    if include_refuted:
        for (a, b), obs in sorted(relation.refuted.items()):
            label = str(obs[0])
            lines.append(f"  {_dot_id(a)} -> {_dot_id(b)} "
                         f"[style=dashed,arrowhead=tee,label=\"{label}\"];")
    if include_unknown:
        for (a, b) in relation.unknown_pairs():
            lines.append(f"  {_dot_id(a)} -> {_dot_id(b)} [style=dotted];")
    lines.append("}")
    return "\n".join(lines)


# --- certificate corpus and reference data -------------------------------------


def load_certificates(path=None):
    """Certificates from a directory (or the shipped corpus)."""
    certs = []
    if path is None:
        root = resources.files("jsuper.data").joinpath("certificates")
        files = sorted(root.iterdir(), key=lambda p: p.name)
        for f in files:
            if f.name.endswith(".json"):
                certs.append(DegenerationCertificate.from_dict(json.loads(f.read_text())))
        return certs
    import pathlib
    p = pathlib.Path(path)
    files = sorted(p.glob("*.json")) if p.is_dir() else [p]
    for f in files:
        certs.append(DegenerationCertificate.from_dict(json.loads(f.read_text())))
    return certs


def load_reference_components() -> dict:
    text = resources.files("jsuper.data").joinpath("components.json").read_text()
    return json.loads(text)


def load_reference_separations() -> list:
    text = resources.files("jsuper.data").joinpath("nondegenerations.json").read_text()
    return json.loads(text)


def load_open_pairs() -> list:
    text = resources.files("jsuper.data").joinpath("open_pairs.json").read_text()
    return [tuple(p) for p in json.loads(text)]


# --- component report -----------------------------------------------------------


@dataclass
class ComponentReport:
    tops: list                    # per-top dicts
    membership_violations: list   # listed members that got refuted (must be empty)
    open_pair_violations: list    # open pairs not reported unknown
    extra_established: list       # established beyond the printed lists (flagged)
    nilpotent_ok: bool
    nilpotent_closures: dict
    associative_ok: bool
    associative_closures: dict

    @property
    def ok(self) -> bool:
        return not self.membership_violations and not self.open_pair_violations \
            and self.nilpotent_ok and self.associative_ok

    def lines(self) -> list:
        out = []
        for top in self.tops:
            out.append(f"component {top['name']}: "
                       f"{len(top['established'])} established, "
                       f"{len(top['unknown'])} unknown, "
                       f"{len(top['refuted_listed'])} listed-but-refuted")
        if self.extra_established:
            out.append("FLAG: certificate-established memberships missing from "
                       "the printed component lists (transcription gap in the "
                       "reference lists):")
            for a, b in self.extra_established:
                out.append(f"  {a} -> {b}")
        for a, b in self.membership_violations:
            out.append(f"ERROR: listed membership {a} -> {b} was refuted")
        for a, b in self.open_pair_violations:
            out.append(f"ERROR: open pair {a} -> {b} is not reported unknown")
        out.append(f"nilpotent restriction matches reference: {self.nilpotent_ok}")
        out.append(f"associative restriction matches reference: {self.associative_ok}")
        return out

    def to_dict(self) -> dict:
        return {
            "tops": self.tops,
            "membership_violations": self.membership_violations,
            "open_pair_violations": self.open_pair_violations,
            "extra_established": self.extra_established,
            "nilpotent_ok": self.nilpotent_ok,
            "nilpotent_closures": {k: sorted(v) for k, v in self.nilpotent_closures.items()},
            "associative_ok": self.associative_ok,
            "associative_closures": {k: sorted(v) for k, v in self.associative_closures.items()},
            "ok": self.ok,
        }


def _restricted_maximal_closures(relation: DegenRelation, nodes: set) -> dict:
    reach = {a: {b for b in nodes if (a, b) in relation.established}
             for a in nodes}
    maximal = [a for a in nodes
               if not any(a in reach[c] for c in nodes if c != a)]
    return {a: reach[a] for a in sorted(maximal)}


def component_report(entries: dict, relation: DegenRelation,
                     reference: dict, open_pairs) -> ComponentReport:
    tops = []
    membership_violations = []
    extra = []
    listed = {}
    for comp in reference["tops"]:
        name = comp["name"]
        members = set(comp["members"])
        open_members = set(comp.get("open_members", ()))
        listed[name] = members | open_members
        established, unknown, refuted_listed = [], [], []
        for x in sorted(members | open_members):
            if x == name:
                continue
            st = relation.status(name, x)
            if st == "established":
                established.append(x)
            elif st == "refuted":
                refuted_listed.append(x)
                membership_violations.append((name, x))
            else:
                unknown.append(x)
        for (a, b), why in relation.established.items():
            if a == name and b != name and b not in (members | open_members):
                extra.append((a, b))
        tops.append({"name": name, "established": established,
                     "unknown": unknown, "refuted_listed": refuted_listed})
    open_violations = [(a, b) for (a, b) in open_pairs
                       if relation.status(a, b) != "unknown"]
    nilp_nodes = {n for n, e in entries.items()
                  if not e.is_family and e.nilpotent}
    nilp = _restricted_maximal_closures(relation, nilp_nodes)
    nilp_ref = {k: set(v) for k, v in reference["nilpotent_components"].items()}
    assoc_nodes = {n for n, e in entries.items()
                   if not e.is_family and e.associative}
    assoc = _restricted_maximal_closures(relation, assoc_nodes)
    assoc_ref = {k: set(v) for k, v in reference["associative_components"].items()}
    return ComponentReport(
        tops=tops,
        membership_violations=membership_violations,
        open_pair_violations=open_violations,
        extra_established=sorted(set(extra)),
        nilpotent_ok=(nilp == nilp_ref),
        nilpotent_closures=nilp,
        associative_ok=(assoc == assoc_ref),
        associative_closures=assoc,
    )
