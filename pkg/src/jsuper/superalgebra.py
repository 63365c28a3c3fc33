"""Type-(m,n) superalgebras as exact structure-constant tensors.

A superalgebra is stored as four tensors over Fraction:

    alpha[i][j][k]       e_i e_j = sum_k alpha[i][j][k] e_k      (m x m x m)
    beta[i][j][k]        e_i f_j = sum_k beta[i][j][k] f_k       (m x n x n)
    beta_prime[i][j][k]  f_i e_j = sum_k beta_prime[i][j][k] f_k (n x m x n)
    gamma[i][j][k]       f_i f_j = sum_k gamma[i][j][k] e_k      (n x n x m)

Both beta and beta_prime are kept and cross-validated; the redundancy
catches transcription errors in catalog data.  Basis elements are addressed
by a flat index p in [0, m+n): p < m is the even vector e_{p+1}, p >= m the
odd vector f_{p-m+1}.

Supercommutativity in coordinates:
    alpha[i][j][k] == alpha[j][i][k]
    beta_prime[i][j][k] == beta[j][i][k]
    gamma[i][j][k] == -gamma[j][i][k]   (so gamma[i][i] = 0)

The graded six-term identity (supercommutativity plus the signed Jordan
identity on homogeneous elements) is checked on all (m+n)^4 basis tuples;
multilinearity makes that sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import itertools
import random

from .exact import Poly, RatFun, QQ0, QQ1
from . import linear


def _freeze3(t):
    return tuple(tuple(tuple(x for x in row) for row in plane) for plane in t)


def zero_tensor(a: int, b: int, c: int, zero=QQ0):
    return tuple(tuple(tuple(zero for _ in range(c)) for _ in range(b))
                 for _ in range(a))


@dataclass(frozen=True)
class SuperAlgebra:
    m: int
    n: int
    alpha: tuple
    beta: tuple
    beta_prime: tuple
    gamma: tuple

    @staticmethod
    def build(m, n, alpha=None, beta=None, beta_prime=None, gamma=None):
        return SuperAlgebra(
            m, n,
            _freeze3(alpha) if alpha is not None else zero_tensor(m, m, m),
            _freeze3(beta) if beta is not None else zero_tensor(m, n, n),
            _freeze3(beta_prime) if beta_prime is not None else zero_tensor(n, m, n),
            _freeze3(gamma) if gamma is not None else zero_tensor(n, n, m),
        )

    @property
    def dim(self) -> int:
        return self.m + self.n

    def parity(self, p: int) -> int:
        return 0 if p < self.m else 1

    def tensors(self):
        return self.alpha, self.beta, self.beta_prime, self.gamma

    def basis_name(self, p: int) -> str:
        return f"e{p + 1}" if p < self.m else f"f{p - self.m + 1}"


@dataclass(frozen=True)
class GradedElement:
    even: tuple
    odd: tuple

    @staticmethod
    def zero(m, n):
        return GradedElement((QQ0,) * m, (QQ0,) * n)

    @staticmethod
    def basis(m, n, p):
        e = [QQ0] * m
        o = [QQ0] * n
        if p < m:
            e[p] = QQ1
        else:
            o[p - m] = QQ1
        return GradedElement(tuple(e), tuple(o))

    def coords(self):
        return self.even + self.odd

    def is_homogeneous(self):
        return not any(self.even) or not any(self.odd)

    def __add__(self, other):
        return GradedElement(tuple(a + b for a, b in zip(self.even, other.even)),
                             tuple(a + b for a, b in zip(self.odd, other.odd)))

    def scale(self, c):
        return GradedElement(tuple(c * a for a in self.even),
                             tuple(c * a for a in self.odd))


class DimensionMismatch(ValueError):
    pass


def _struct(A: SuperAlgebra):
    """Flat structure constants: C[p][q] = coordinate tuple of b_p b_q.

    Cached on the instance (hashing the full Fraction tensors on every
    lookup is far more expensive than the products themselves).
    """
    cached = A.__dict__.get("_struct_table")
    if cached is not None:
        return cached
    m, n, d = A.m, A.n, A.dim
    table = []
    for p in range(d):
        row = []
        for q in range(d):
            vec = [QQ0] * d
            if p < m and q < m:
                for k in range(m):
                    vec[k] = A.alpha[p][q][k]
            elif p < m:
                for k in range(n):
                    vec[m + k] = A.beta[p][q - m][k]
            elif q < m:
                for k in range(n):
                    vec[m + k] = A.beta_prime[p - m][q][k]
            else:
                for k in range(m):
                    vec[k] = A.gamma[p - m][q - m][k]
            row.append(tuple(vec))
        table.append(tuple(row))
    table = tuple(table)
    object.__setattr__(A, "_struct_table", table)
    return table


def mul_coords(A: SuperAlgebra, u, v):
    """Bilinear product of two flat coordinate vectors."""
    d = A.dim
    C = _struct(A)
    out = [QQ0] * d
    for p in range(d):
        a = u[p]
        if not a:
            continue
        for q in range(d):
            b = v[q]
            if not b:
                continue
            c = a * b
            for k, s in enumerate(C[p][q]):
                if s:
                    out[k] += c * s
    return tuple(out)


def multiply(A: SuperAlgebra, x: GradedElement, y: GradedElement) -> GradedElement:
    if len(x.even) != A.m or len(x.odd) != A.n or len(y.even) != A.m or len(y.odd) != A.n:
        raise DimensionMismatch("element does not match algebra type")
    w = mul_coords(A, x.coords(), y.coords())
    return GradedElement(w[: A.m], w[A.m:])


def check_supercommutativity(A: SuperAlgebra):
    """Coordinate supercommutativity; returns (ok, witness or None)."""
    for i in range(A.m):
        for j in range(A.m):
            for k in range(A.m):
                if A.alpha[i][j][k] != A.alpha[j][i][k]:
                    return False, ("alpha", i, j, k)
    for i in range(A.m):
        for j in range(A.n):
            for k in range(A.n):
                if A.beta[i][j][k] != A.beta_prime[j][i][k]:
                    return False, ("beta/beta_prime", i, j, k)
    for i in range(A.n):
        for j in range(A.n):
            for k in range(A.m):
                if A.gamma[i][j][k] != -A.gamma[j][i][k]:
                    return False, ("gamma", i, j, k)
    return True, None


def superidentity_residual(A: SuperAlgebra, w: int, x: int, y: int, z: int):
    """The six-term graded identity evaluated on basis indices (w,x,y,z)."""
    C = _struct(A)
    pw, px, py, pz = (A.parity(p) for p in (w, x, y, z))

    def sgn(e):
        return -QQ1 if e % 2 else QQ1

    def mul(u, v):
        return mul_coords(A, u, v)

    bw, bx, by, bz = (C[w], C[x], C[y], C[z])  # rows; basis vecs as products
    d = A.dim
    ew = tuple(QQ1 if i == w else QQ0 for i in range(d))
    ex = tuple(QQ1 if i == x else QQ0 for i in range(d))
    ey = tuple(QQ1 if i == y else QQ0 for i in range(d))
    ez = tuple(QQ1 if i == z else QQ0 for i in range(d))

    wx, yz = C[w][x], C[y][z]
    wy, xz = C[w][y], C[x][z]
    wz, xy = C[w][z], C[x][y]
    total = [QQ0] * d
    for vec, s in (
        (mul(wx, yz), QQ1),
        (mul(wy, xz), sgn(px * py)),
        (mul(wz, xy), sgn((px + py) * pz)),
        (mul(ex, mul(ew, yz)), -sgn(pw * px)),
        (mul(ey, mul(ew, xz)), -sgn(py * (pw + px))),
        (mul(ez, mul(ew, xy)), -sgn(pz * (pw + px + py))),
    ):
        for k in range(d):
            if vec[k]:
                total[k] += s * vec[k]
    return tuple(total)


def check_jordan_superidentity(A: SuperAlgebra):
    """All (m+n)^4 homogeneous tuples; (ok, (tuple, residual) or None)."""
    d = A.dim
    for w, x, y, z in itertools.product(range(d), repeat=4):
        res = superidentity_residual(A, w, x, y, z)
        if any(res):
            return False, ((w, x, y, z), res)
    return True, None


def check_associativity(A: SuperAlgebra):
    d = A.dim
    C = _struct(A)
    for x, y, z in itertools.product(range(d), repeat=3):
        left = mul_coords(A, C[x][y], tuple(QQ1 if i == z else QQ0 for i in range(d)))
        right = mul_coords(A, tuple(QQ1 if i == x else QQ0 for i in range(d)), C[y][z])
        if left != right:
            return False, (x, y, z)
    return True, None


# --- powers and nilpotency ---------------------------------------------------

def _graded_split(A, vectors):
    ev = [v for v in vectors if not any(v[A.m:])]
    od = [v for v in vectors if any(v[A.m:])]
    return linear.echelon_basis(ev), linear.echelon_basis(od)


def power_spans(A: SuperAlgebra, rmax: int):
    """Echelonized graded spanning sets of A^r for r = 1..rmax."""
    d = A.dim
    basis = [tuple(QQ1 if i == p else QQ0 for i in range(d)) for p in range(d)]
    spans = [None, _graded_split(A, basis)]
    for r in range(2, rmax + 1):
        prods = []
        for s in range(1, r):
            lo_e, lo_o = spans[s]
            hi_e, hi_o = spans[r - s]
            for u in lo_e + lo_o:
                for v in hi_e + hi_o:
                    w = mul_coords(A, u, v)
                    if any(w):
                        prods.append(w)
        spans.append(_graded_split(A, prods))
    return spans


def power_dims(A: SuperAlgebra, r: int):
    """Graded dimensions (even, odd) of A^r."""
    if r < 1:
        raise ValueError("power index must be >= 1")
    spans = power_spans(A, r)
    ev, od = spans[r]
    return len(ev), len(od)


def power_dims_sequence(A: SuperAlgebra, rmax: int):
    spans = power_spans(A, rmax)
    return [(len(ev), len(od)) for ev, od in spans[1:]]


def is_nilpotent(A: SuperAlgebra):
    """(nilpotent?, smallest r with A^r = 0).  Bound r <= m+n+1 suffices:
    the power chain of a nilpotent algebra strictly descends."""
    bound = A.dim + 1
    for r, (de, do) in enumerate(power_dims_sequence(A, bound), start=1):
        if de == 0 and do == 0:
            return True, r
    return False, None


# --- derived algebras --------------------------------------------------------

def even_part(A: SuperAlgebra) -> SuperAlgebra:
    return SuperAlgebra.build(A.m, 0, alpha=A.alpha)


def ab(A: SuperAlgebra) -> SuperAlgebra:
    """Keep only the odd-odd products (structure constants (0,0,0,gamma))."""
    return SuperAlgebra.build(A.m, A.n, gamma=A.gamma)


def forget(A: SuperAlgebra) -> SuperAlgebra:
    """Drop the odd-odd products (structure constants (a,b,b',0))."""
    return SuperAlgebra.build(A.m, A.n, alpha=A.alpha, beta=A.beta,
                              beta_prime=A.beta_prime)


def odd_action_matrix(A: SuperAlgebra, i: int):
    """Matrix of f_j -> e_i f_j on the odd part (column j = image of f_j)."""
    return tuple(tuple(A.beta[i][j][k] for j in range(A.n)) for k in range(A.n))


def scalar_odd_action(A: SuperAlgebra) -> bool:
    """True iff every even basis element acts on the odd part as a scalar
    multiple of the identity.  The condition is linear and closed, and it is
    invariant under block change of basis, so it obstructs degenerations."""
    for i in range(A.m):
        mat = odd_action_matrix(A, i)
        lam = mat[0][0] if A.n else QQ0
        for k in range(A.n):
            for j in range(A.n):
                want = lam if j == k else QQ0
                if mat[k][j] != want:
                    return False
    return True


# --- change of basis ---------------------------------------------------------

def transform_tensors(m, n, alpha, beta, beta_prime, gamma, P, Q):
    """Structure constants after the block change of basis (P, Q).

    Column convention: column j of P holds the old-basis coordinates of the
    j-th new even vector (same for Q on the odd side).  Works over any exact
    field (Fraction or RatFun entries); raises LinearError if a block is
    singular.
    """
    Pinv = linear.mat_inv([list(r) for r in P])
    Qinv = linear.mat_inv([list(r) for r in Q]) if n else []
    zero = P[0][0] * 0

    def new_even_vec(vec):
        return [sum((Pinv[s][k] * vec[k] for k in range(m)), start=zero)
                for s in range(m)]

    def new_odd_vec(vec):
        return [sum((Qinv[s][k] * vec[k] for k in range(n)), start=zero)
                for s in range(n)]

    na = [[[zero] * m for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            w = [zero] * m
            for k in range(m):
                if not P[k][i]:
                    continue
                for l in range(m):
                    c = P[k][i] * P[l][j]
                    if not c:
                        continue
                    for s in range(m):
                        if alpha[k][l][s]:
                            w[s] = w[s] + c * alpha[k][l][s]
            nw = new_even_vec(w)
            for s in range(m):
                na[i][j][s] = nw[s]
    nb = [[[zero] * n for _ in range(n)] for _ in range(m)]
    nbp = [[[zero] * n for _ in range(m)] for _ in range(n)]
    ng = [[[zero] * m for _ in range(n)] for _ in range(n)]
    for i in range(m):
        for j in range(n):
            w = [zero] * n
            for k in range(m):
                if not P[k][i]:
                    continue
                for l in range(n):
                    c = P[k][i] * Q[l][j]
                    if not c:
                        continue
                    for s in range(n):
                        if beta[k][l][s]:
                            w[s] = w[s] + c * beta[k][l][s]
            nw = new_odd_vec(w)
            for s in range(n):
                nb[i][j][s] = nw[s]
    for i in range(n):
        for j in range(m):
            w = [zero] * n
            for k in range(n):
                if not Q[k][i]:
                    continue
                for l in range(m):
                    c = Q[k][i] * P[l][j]
                    if not c:
                        continue
                    for s in range(n):
                        if beta_prime[k][l][s]:
                            w[s] = w[s] + c * beta_prime[k][l][s]
            nw = new_odd_vec(w)
            for s in range(n):
                nbp[i][j][s] = nw[s]
    for i in range(n):
        for j in range(n):
            w = [zero] * m
            for k in range(n):
                if not Q[k][i]:
                    continue
                for l in range(n):
                    c = Q[k][i] * Q[l][j]
                    if not c:
                        continue
                    for s in range(m):
                        if gamma[k][l][s]:
                            w[s] = w[s] + c * gamma[k][l][s]
            nw = new_even_vec(w)
            for s in range(m):
                ng[i][j][s] = nw[s]
    return _freeze3(na), _freeze3(nb), _freeze3(nbp), _freeze3(ng)


def apply_basis_change(A: SuperAlgebra, P, Q) -> SuperAlgebra:
    """Isomorphic copy of A in the basis given by the invertible blocks."""
    na, nb, nbp, ng = transform_tensors(A.m, A.n, A.alpha, A.beta,
                                        A.beta_prime, A.gamma, P, Q)
    return SuperAlgebra(A.m, A.n, na, nb, nbp, ng)


def random_basis_change(A: SuperAlgebra, rng: random.Random):
    """A random invertible block pair with small integer entries."""
    def block(k):
        while True:
            mat = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(k)]
            if k == 0 or linear.det(mat):
                return mat
    return block(A.m), block(A.n)


def set_constant(A: SuperAlgebra, tensor: str, i: int, j: int, k: int,
                 value: Fraction) -> SuperAlgebra:
    """Single-constant mutation, completed so coordinate supercommutativity
    still holds (the counterpart entry is updated alongside)."""
    a = [[list(r) for r in pl] for pl in A.alpha]
    b = [[list(r) for r in pl] for pl in A.beta]
    bp = [[list(r) for r in pl] for pl in A.beta_prime]
    g = [[list(r) for r in pl] for pl in A.gamma]
    if tensor == "alpha":
        a[i][j][k] = value
        a[j][i][k] = value
    elif tensor == "beta":
        b[i][j][k] = value
        bp[j][i][k] = value
    elif tensor == "gamma":
        if i == j:
            raise ValueError("gamma is alternating; the diagonal stays zero")
        g[i][j][k] = value
        g[j][i][k] = -value
    else:
        raise ValueError(f"unknown tensor {tensor!r}")
    return SuperAlgebra(A.m, A.n, _freeze3(a), _freeze3(b), _freeze3(bp), _freeze3(g))


# --- Grassmann envelope ------------------------------------------------------

def grassmann_sign(s_mask: int, t_mask: int) -> int:
    """Sign of merging two disjoint increasing generator words: parity of
    the number of pairs (s in S, t in T) with s > t."""
    inversions = 0
    t_seen = 0
    bit = 0
    mask = s_mask | t_mask
    while mask >> bit:
        b = 1 << bit
        if t_mask & b:
            t_seen += 1
        elif s_mask & b:
            inversions += t_seen
        bit += 1
    # counted pairs (s, t) with t < s by scanning upward
    return -1 if inversions % 2 else 1


def grassmann_product(N, s_mask, t_mask):
    """(sign, union) for e_S e_T in the N-generator algebra, or (0, 0)."""
    if s_mask & t_mask:
        return 0, 0
    return grassmann_sign(s_mask, t_mask), s_mask | t_mask


def grassmann_envelope_check(A: SuperAlgebra, N: int = 3):
    """Check commutativity and the ungraded Jordan identity of the envelope
    built over the Grassmann algebra on N generators.

    The envelope takes even generator words with even-part vectors and odd
    words with odd-part vectors.  Tuples are restricted to total word length
    <= N so that no product dies purely by running out of generators.
    Returns (ok, witness or None).
    """
    if N < 3:
        raise ValueError("need at least 3 Grassmann generators")
    m, n, d = A.m, A.n, A.dim
    C = _struct(A)
    basis = []
    for mask in range(1 << N):
        w = bin(mask).count("1")
        if w % 2 == 0:
            basis.extend((mask, i, w) for i in range(m))
        else:
            basis.extend((mask, i, w) for i in range(m, d))

    def mul(x, y):
        # x, y: dict (mask, idx) -> Fraction
        out = {}
        for (ms, i), ci in x.items():
            for (mt, j), cj in y.items():
                s, u = grassmann_product(N, ms, mt)
                if not s:
                    continue
                coeff = ci * cj * s
                for k, c in enumerate(C[i][j]):
                    if c:
                        key = (u, k)
                        out[key] = out.get(key, QQ0) + coeff * c
        return {k: v for k, v in out.items() if v}

    def unit(b):
        return {(b[0], b[1]): QQ1}

    # commutativity
    for a in basis:
        for b in basis:
            if a[2] + b[2] > N:
                continue
            if mul(unit(a), unit(b)) != mul(unit(b), unit(a)):
                return False, ("commutativity", a[:2], b[:2])
    # Jordan identity (wx)(yz)+(wy)(xz)+(wz)(xy) = x(w(yz))+y(w(xz))+z(w(xy))
    for w, x, y, z in itertools.product(basis, repeat=4):
        if w[2] + x[2] + y[2] + z[2] > N:
            continue
        uw, ux, uy, uz = unit(w), unit(x), unit(y), unit(z)
        lhs = {}
        rhs = {}
        for term, acc in (
            (mul(mul(uw, ux), mul(uy, uz)), lhs),
            (mul(mul(uw, uy), mul(ux, uz)), lhs),
            (mul(mul(uw, uz), mul(ux, uy)), lhs),
            (mul(ux, mul(uw, mul(uy, uz))), rhs),
            (mul(uy, mul(uw, mul(ux, uz))), rhs),
            (mul(uz, mul(uw, mul(ux, uy))), rhs),
        ):
            for k, v in term.items():
                acc[k] = acc.get(k, QQ0) + v
        diff = {k: lhs.get(k, QQ0) - rhs.get(k, QQ0)
                for k in set(lhs) | set(rhs)}
        if any(diff.values()):
            return False, ("jordan", w[:2], x[:2], y[:2], z[:2])
    return True, None


# --- one-parameter families --------------------------------------------------

@dataclass(frozen=True)
class ParamFamily:
    """A superalgebra whose structure constants are polynomials in one
    formal parameter (the catalog uses the symbol ``g``)."""

    m: int
    n: int
    alpha: tuple
    beta: tuple
    beta_prime: tuple
    gamma: tuple
    param: str = "g"

    @staticmethod
    def build(m, n, alpha=None, beta=None, beta_prime=None, gamma=None, param="g"):
        zp = Poly()

        def fill(t, a, b, c):
            return _freeze3(t) if t is not None else zero_tensor(a, b, c, zero=zp)

        return ParamFamily(m, n, fill(alpha, m, m, m), fill(beta, m, n, n),
                           fill(beta_prime, n, m, n), fill(gamma, n, n, m), param)

    @property
    def dim(self):
        return self.m + self.n

    def _map(self, fn):
        def apply(t):
            return _freeze3([[[fn(x) for x in row] for row in plane] for plane in t])
        return apply(self.alpha), apply(self.beta), apply(self.beta_prime), apply(self.gamma)

    def specialize(self, value: Fraction) -> SuperAlgebra:
        a, b, bp, g = self._map(lambda p: p.eval(Fraction(value)))
        return SuperAlgebra(self.m, self.n, a, b, bp, g)

    def substitute(self, gamma_of_t: RatFun):
        """Tensors over RatFun in t after the substitution param := gamma(t)."""
        return self._map(lambda p: p.eval(gamma_of_t))

    def matches_specialization(self, B: SuperAlgebra):
        """The parameter value c with specialize(c) == B, or None."""
        constraints = []
        for mine, theirs in zip(self._tensor_list(), B.tensors()):
            for pl_a, pl_b in zip(mine, theirs):
                for row_a, row_b in zip(pl_a, pl_b):
                    for p, v in zip(row_a, row_b):
                        constraints.append((p, v))
        candidate = None
        for p, v in constraints:
            if p.degree >= 1:
                if p.degree > 1:
                    raise NotImplementedError("family entries are affine in the parameter")
                c = (v - p.coeffs[0]) / p.coeffs[1]
                if candidate is None:
                    candidate = c
                elif candidate != c:
                    return None
        if candidate is None:
            return None
        for p, v in constraints:
            if p.eval(candidate) != v:
                return None
        return candidate

    def _tensor_list(self):
        return (self.alpha, self.beta, self.beta_prime, self.gamma)
