"""Even derivations and the automorphism-group dimension.

An even derivation is a grading-preserving linear map D (block m x m on the
even part, n x n on the odd part) with D(xy) = D(x)y + xD(y) on all
homogeneous basis pairs.  In characteristic zero the automorphism group of
a finite-dimensional algebra is an algebraic group whose Lie algebra is
exactly this derivation space, so its dimension doubles as dim Aut.  That
turns the group-dimension column of the catalog into exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import QQ0, QQ1
from . import linear
from .superalgebra import SuperAlgebra, mul_coords, _struct


@dataclass(frozen=True)
class DerivationSpace:
    algebra_name: str
    dim: int
    basis: tuple  # tuples (even_block, odd_block), column j = image of j-th vector


def _leibniz_rows(A: SuperAlgebra):
    """Rows of the Leibniz system over the m^2 + n^2 block unknowns.

    Unknown layout: u[i][j] = coefficient of e_i in D(e_j) (m*m entries,
    row-major), then v[i][j] for the odd block.
    """
    m, n, d = A.m, A.n, A.dim
    nunk = m * m + n * n

    def unk_even(i, j):
        return i * m + j

    def unk_odd(i, j):
        return m * m + i * n + j

    C = _struct(A)

    def d_of_basis(p):
        # D(b_p) as a list over flat coords of linear forms (len-nunk rows)
        forms = [[QQ0] * nunk for _ in range(d)]
        if p < m:
            for i in range(m):
                forms[i][unk_even(i, p)] = QQ1
        else:
            for i in range(n):
                forms[m + i][unk_odd(i, p - m)] = QQ1
        return forms

    rows = []
    for p in range(d):
        Dp = d_of_basis(p)
        for q in range(d):
            Dq = d_of_basis(q)
            prod = C[p][q]
            # D(b_p b_q): apply the unknown map coordinatewise
            lhs = [[QQ0] * nunk for _ in range(d)]
            for k in range(d):
                c = prod[k]
                if not c:
                    continue
                Dk = d_of_basis(k)
                for s in range(d):
                    row = Dk[s]
                    tgt = lhs[s]
                    for t in range(nunk):
                        if row[t]:
                            tgt[t] += c * row[t]
            # D(b_p) * b_q and b_p * D(b_q), expanded through the tensors
            rhs = [[QQ0] * nunk for _ in range(d)]
            for s in range(d):
                for t in range(nunk):
                    c = Dp[s][t]
                    if c:
                        vec = C[s][q]
                        for k in range(d):
                            if vec[k]:
                                rhs[k][t] += c * vec[k]
                    c2 = Dq[s][t]
                    if c2:
                        vec = C[p][s]
                        for k in range(d):
                            if vec[k]:
                                rhs[k][t] += c2 * vec[k]
            for k in range(d):
                row = [lhs[k][t] - rhs[k][t] for t in range(nunk)]
                if any(row):
                    rows.append(row)
    return rows, nunk


def even_derivation_dim(A: SuperAlgebra, name: str = "") -> DerivationSpace:
    """Solve the Leibniz system; dimension and a basis of block maps."""
    rows, nunk = _leibniz_rows(A)
    kernel = linear.nullspace(rows, nunk)
    m, n = A.m, A.n
    basis = []
    for vec in kernel:
        eb = tuple(tuple(vec[i * m + j] for j in range(m)) for i in range(m))
        ob = tuple(tuple(vec[m * m + i * n + j] for j in range(n)) for i in range(n))
        basis.append((eb, ob))
    return DerivationSpace(name, len(kernel), tuple(basis))


def leibniz_defect(A: SuperAlgebra, even_block, odd_block):
    """Max-norm-style witness: first basis pair where D fails Leibniz."""
    m, n, d = A.m, A.n, A.dim
    C = _struct(A)

    def apply(vec):
        out = [QQ0] * d
        for i in range(m):
            for j in range(m):
                if even_block[i][j] and vec[j]:
                    out[i] += even_block[i][j] * vec[j]
        for i in range(n):
            for j in range(n):
                if odd_block[i][j] and vec[m + j]:
                    out[m + i] += odd_block[i][j] * vec[m + j]
        return tuple(out)

    for p in range(d):
        bp = tuple(QQ1 if i == p else QQ0 for i in range(d))
        for q in range(d):
            bq = tuple(QQ1 if i == q else QQ0 for i in range(d))
            lhs = apply(C[p][q])
            rhs_vec = [x + y for x, y in zip(mul_coords(A, apply(bp), bq),
                                             mul_coords(A, bp, apply(bq)))]
            if list(lhs) != rhs_vec:
                return (p, q)
    return None


def orbit_dim(A: SuperAlgebra) -> int:
    """dim of the change-of-basis orbit: dim G - dim Aut with G the block
    general linear group."""
    return A.m * A.m + A.n * A.n - even_derivation_dim(A).dim
