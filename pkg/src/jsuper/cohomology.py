"""Second cohomology of a Jordan superalgebra with coefficients in itself.

A 2-cochain is a bilinear map h with the graded symmetry
h(a,b) = (-1)^{|a||b|} h(b,a); its values may mix parities.  The cocycle
condition is the six-term relation

    F(a,b,c,d) + s1 F(a,d,c,b) + s2 F(b,d,c,a)
        = G(a,b,c,d) + s3 G(a,c,b,d) + s4 G(a,d,b,c)

with  F(a,b,c,d) = h((ab)c, d) + h(ab, c)d + (h(a,b)c)d,
      G(a,b,c,d) = h(ab, cd) + h(a,b)(cd) + (ab)h(c,d),
      s1 = (-1)^{|b|(|c|+|d|)+|c||d|},  s2 = (-1)^{|a|(|b|+|c|+|d|)+|c||d|},
      s3 = (-1)^{|b||c|},               s4 = (-1)^{|d|(|c|+|b|)},

imposed on every homogeneous basis 4-tuple; the signs use only the
parities of the four arguments.  Coboundaries are the maps
h(a,b) = a mu(b) + mu(a) b - mu(ab) for a linear mu; requiring this on all
ordered pairs forces the graded symmetry of h, so the coboundary space is
the image of mu -> delta(mu) intersected with the symmetric cochains.

Vanishing of the quotient, or of its grading-preserving part, is the
sufficient rigidity condition this module reports.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
import itertools
import json

from .exact import QQ0, QQ1
from . import linear
from .superalgebra import SuperAlgebra, _struct


def cochain_pairs(A: SuperAlgebra):
    """Ordered index pairs carrying independent cochain values: p <= q,
    skipping the forced-zero odd diagonal."""
    d = A.dim
    pairs = []
    for p in range(d):
        for q in range(p, d):
            if p == q and A.parity(p) == 1:
                continue
            pairs.append((p, q))
    return pairs


def cochain_dim(A: SuperAlgebra) -> int:
    return len(cochain_pairs(A)) * A.dim


def even_coordinate_mask(A: SuperAlgebra):
    """Flags for the unknowns of a grading-preserving cochain."""
    mask = []
    for (p, q) in cochain_pairs(A):
        pe = (A.parity(p) + A.parity(q)) % 2
        for k in range(A.dim):
            mask.append(A.parity(k) == pe)
    return mask


class _Forms:
    """Linear forms over the cochain unknowns, as sparse {unknown: coeff}
    dicts (one per output coordinate)."""

    def __init__(self, A: SuperAlgebra):
        self.A = A
        self.d = A.dim
        self.pairs = cochain_pairs(A)
        self.pair_index = {pq: i for i, pq in enumerate(self.pairs)}
        self.nunk = len(self.pairs) * self.d
        self.C = _struct(A)

    def h_basis(self, p, q):
        """h(b_p, b_q) as a form-valued coordinate vector."""
        A = self.A
        sign = QQ1
        if p > q:
            if A.parity(p) == 1 and A.parity(q) == 1:
                sign = -QQ1
            p, q = q, p
        forms = [dict() for _ in range(self.d)]
        if p == q and A.parity(p) == 1:
            return forms
        base = self.pair_index[(p, q)] * self.d
        for k in range(self.d):
            forms[k][base + k] = sign
        return forms

    def h_vec(self, u, v):
        """h(u, v) for scalar coordinate vectors u, v (bilinear extension)."""
        forms = [dict() for _ in range(self.d)]
        for p in range(self.d):
            if not u[p]:
                continue
            for q in range(self.d):
                if not v[q]:
                    continue
                c = u[p] * v[q]
                hb = self.h_basis(p, q)
                for k in range(self.d):
                    tgt = forms[k]
                    for t, x in hb[k].items():
                        tgt[t] = tgt.get(t, QQ0) + c * x
        return forms

    def mul_form_vec(self, forms, v):
        """(form-valued element) * (scalar element)."""
        out = [dict() for _ in range(self.d)]
        for i in range(self.d):
            row = forms[i]
            if not row:
                continue
            for j in range(self.d):
                if not v[j]:
                    continue
                vec = self.C[i][j]
                for k in range(self.d):
                    c = vec[k] * v[j]
                    if not c:
                        continue
                    tgt = out[k]
                    for t, x in row.items():
                        tgt[t] = tgt.get(t, QQ0) + c * x
        return out

    def mul_vec_form(self, v, forms):
        out = [dict() for _ in range(self.d)]
        for j in range(self.d):
            row = forms[j]
            if not row:
                continue
            for i in range(self.d):
                if not v[i]:
                    continue
                vec = self.C[i][j]
                for k in range(self.d):
                    c = vec[k] * v[i]
                    if not c:
                        continue
                    tgt = out[k]
                    for t, x in row.items():
                        tgt[t] = tgt.get(t, QQ0) + c * x
        return out

    def add(self, a, b, scale=QQ1):
        out = []
        for ra, rb in zip(a, b):
            merged = dict(ra)
            for t, x in rb.items():
                merged[t] = merged.get(t, QQ0) + scale * x
            out.append(merged)
        return out


def _basis_vec(d, p):
    return tuple(QQ1 if i == p else QQ0 for i in range(d))


def cocycle_matrix(A: SuperAlgebra):
    """Rows of the cocycle system over the supersymmetric cochain unknowns."""
    from .superalgebra import mul_coords
    W = _Forms(A)
    d = A.dim
    C = W.C

    def sgn(e):
        return -QQ1 if e % 2 else QQ1

    fcache = {}
    gcache = {}

    def F(a, b, c, dd):
        key = (a, b, c, dd)
        got = fcache.get(key)
        if got is None:
            ab = C[a][b]
            vb = _basis_vec(d, c)
            abc = mul_coords(A, ab, vb)
            t1 = W.h_vec(abc, _basis_vec(d, dd))
            t2 = W.mul_form_vec(W.h_vec(ab, vb), _basis_vec(d, dd))
            t3 = W.mul_form_vec(W.mul_form_vec(W.h_basis(a, b), vb),
                                _basis_vec(d, dd))
            got = W.add(W.add(t1, t2), t3)
            fcache[key] = got
        return got

    def G(a, b, c, dd):
        key = (a, b, c, dd)
        got = gcache.get(key)
        if got is None:
            ab = C[a][b]
            cd = C[c][dd]
            t1 = W.h_vec(ab, cd)
            t2 = W.mul_form_vec(W.h_basis(a, b), cd)
            t3 = W.mul_vec_form(ab, W.h_basis(c, dd))
            got = W.add(W.add(t1, t2), t3)
            gcache[key] = got
        return got

    rows = []
    seen = set()
    par = [A.parity(p) for p in range(d)]
    for a, b, c, dd in itertools.product(range(d), repeat=4):
        pa, pb, pc, pd = par[a], par[b], par[c], par[dd]
        lhs = F(a, b, c, dd)
        lhs = W.add(lhs, F(a, dd, c, b), sgn(pb * (pc + pd) + pc * pd))
        lhs = W.add(lhs, F(b, dd, c, a), sgn(pa * (pb + pc + pd) + pc * pd))
        rhs = G(a, b, c, dd)
        rhs = W.add(rhs, G(a, c, b, dd), sgn(pb * pc))
        rhs = W.add(rhs, G(a, dd, b, c), sgn(pd * (pc + pb)))
        for k in range(d):
            items = dict(lhs[k])
            for t, x in rhs[k].items():
                items[t] = items.get(t, QQ0) - x
            row = tuple(items.get(t, QQ0) for t in range(W.nunk))
            if any(row) and row not in seen:
                seen.add(row)
                rows.append(row)
    return rows, W.nunk


def cocycle_space(A: SuperAlgebra, even_only: bool = False):
    """(dimension, basis) of the cocycle space, in full cochain coordinates.

    With even_only the unknowns are restricted to grading-preserving
    cochains; the returned basis is still embedded in the full coordinate
    space so containment checks can mix the two variants.
    """
    rows, nunk = cocycle_matrix(A)
    if not even_only:
        basis = linear.nullspace(rows, nunk)
        return len(basis), basis
    mask = even_coordinate_mask(A)
    cols = [t for t in range(nunk) if mask[t]]
    sub = [[row[t] for t in cols] for row in rows]
    kernel = linear.nullspace(sub, len(cols))
    basis = []
    for vec in kernel:
        full = [QQ0] * nunk
        for value, t in zip(vec, cols):
            full[t] = value
        basis.append(tuple(full))
    return len(basis), basis


def coboundary_matrix(A: SuperAlgebra, even_only: bool = False):
    """Matrix of mu -> delta(mu) into all ordered-pair values.

    Unknowns: the full (m+n)^2 matrix of mu, or the m^2+n^2 block-diagonal
    unknowns when even_only is set.  Rows are indexed by (ordered pair,
    coordinate).
    """
    from .superalgebra import mul_coords
    d = A.dim
    m, n = A.m, A.n
    if even_only:
        layout = [(i, j) for i in range(m) for j in range(m)]
        layout += [(m + i, m + j) for i in range(n) for j in range(n)]
    else:
        layout = [(i, j) for i in range(d) for j in range(d)]
    nunk = len(layout)
    unk = {ij: t for t, ij in enumerate(layout)}
    C = _struct(A)

    def mu_of(p):
        forms = [[QQ0] * nunk for _ in range(d)]
        for i in range(d):
            if (i, p) in unk:
                forms[i][unk[(i, p)]] = QQ1
        return forms

    rows = []
    for p in range(d):
        for q in range(d):
            mup = mu_of(p)
            muq = mu_of(q)
            entry = [[QQ0] * nunk for _ in range(d)]
            # b_p * mu(b_q)
            for s in range(d):
                vec = C[p][s]
                for k in range(d):
                    if vec[k]:
                        for t in range(nunk):
                            if muq[s][t]:
                                entry[k][t] += vec[k] * muq[s][t]
            # mu(b_p) * b_q
            for s in range(d):
                vec = C[s][q]
                for k in range(d):
                    if vec[k]:
                        for t in range(nunk):
                            if mup[s][t]:
                                entry[k][t] += vec[k] * mup[s][t]
            # - mu(b_p b_q)
            prod = C[p][q]
            for s in range(d):
                if prod[s]:
                    mus = mu_of(s)
                    for k in range(d):
                        for t in range(nunk):
                            if mus[k][t]:
                                entry[k][t] -= prod[s] * mus[k][t]
            rows.append(((p, q), entry))
    return rows, nunk


def _delta_to_cochain_coords(A: SuperAlgebra, pair_values):
    """Project values-on-ordered-pairs to the supersymmetric coordinates."""
    pairs = cochain_pairs(A)
    out = []
    for (p, q) in pairs:
        for k in range(A.dim):
            out.append(pair_values[(p, q)][k])
    return tuple(out)


def coboundary_space(A: SuperAlgebra, even_only: bool = False):
    """(dimension, basis in full cochain coordinates) of the coboundaries.

    A mu qualifies only if delta(mu) has the graded symmetry on every
    ordered pair (automatic for grading-preserving mu, a real restriction
    otherwise).
    """
    rows, nunk = coboundary_matrix(A, even_only)
    d = A.dim
    # symmetry-defect rows: delta(p,q) - sign * delta(q,p) = 0
    defect = []
    by_pair = {pq: entry for pq, entry in rows}
    for p in range(d):
        for q in range(p, d):
            sign = -QQ1 if (A.parity(p) == 1 and A.parity(q) == 1) else QQ1
            a, b = by_pair[(p, q)], by_pair[(q, p)]
            for k in range(d):
                row = [x - sign * y for x, y in zip(a[k], b[k])]
                if any(row):
                    defect.append(row)
    admissible = linear.nullspace(defect, nunk) if defect else \
        [tuple(QQ1 if i == t else QQ0 for i in range(nunk)) for t in range(nunk)]
    # kernel of delta itself, to measure the image dimension
    flat = []
    for _, entry in rows:
        flat.extend(entry)
    kernel_dim = len(linear.nullspace(flat, nunk))
    images = []
    for mu in admissible:
        values = {}
        for pq, entry in rows:
            values[pq] = [sum((entry[k][t] * mu[t] for t in range(nunk)), start=QQ0)
                         for k in range(d)]
        images.append(_delta_to_cochain_coords(A, values))
    basis = linear.echelon_basis(images)
    dim = len(basis)
    assert dim == len(admissible) - kernel_dim
    return dim, basis


@dataclass(frozen=True)
class CohomologyReport:
    algebra_name: str
    dim_z2: int
    dim_b2: int
    dim_h2: int
    dim_z2_even: int
    dim_b2_even: int
    dim_h2_even: int

    @property
    def rigid_by_h2(self) -> bool:
        return self.dim_h2 == 0

    @property
    def rigid_by_h2_even(self) -> bool:
        return self.dim_h2_even == 0

    def to_dict(self):
        d = asdict(self)
        d["rigid_by_h2"] = self.rigid_by_h2
        d["rigid_by_h2_even"] = self.rigid_by_h2_even
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def h2_report(A: SuperAlgebra, name: str = "") -> CohomologyReport:
    z2, _ = cocycle_space(A)
    b2, _ = coboundary_space(A)
    z2e, _ = cocycle_space(A, even_only=True)
    b2e, _ = coboundary_space(A, even_only=True)
    if b2 > z2 or b2e > z2e:
        raise AssertionError("coboundaries escaped the cocycle space")
    return CohomologyReport(name, z2, b2, z2 - b2, z2e, b2e, z2e - b2e)


def cochain_from_values(A: SuperAlgebra, values) -> tuple:
    """Pack {(p, q): coordinate tuple} (p <= q pairs) into unknown coords."""
    out = [QQ0] * cochain_dim(A)
    pairs = cochain_pairs(A)
    index = {pq: i for i, pq in enumerate(pairs)}
    for (p, q), vec in values.items():
        base = index[(p, q)] * A.dim
        for k, c in enumerate(vec):
            out[base + k] = Fraction(c)
    return tuple(out)


def is_cocycle(A: SuperAlgebra, coords) -> bool:
    rows, nunk = cocycle_matrix(A)
    for row in rows:
        if sum((row[t] * coords[t] for t in range(nunk)), start=QQ0):
            return False
    return True


def in_coboundaries(A: SuperAlgebra, coords) -> bool:
    _, basis = coboundary_space(A)
    return linear.in_span(basis, coords)
