"""Exact dense linear algebra over the rationals (and any exact field).

Gaussian elimination with no rounding, ever.  The routines are generic over
the entry type: anything supporting +, -, *, / and truthiness-as-nonzero
works, so the same elimination serves Fraction matrices and matrices of
rational functions in t.  For Fraction entries the pivot is chosen by the
magnitude of the numerator*denominator product, which keeps intermediate
entries small; for other fields the first nonzero candidate is taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class LinearError(ValueError):
    pass


def _pivot_row(rows, col, start):
    """Index of the pivot row for `col`, or None if the column is clear."""
    best = None
    best_key = None
    for i in range(start, len(rows)):
        x = rows[i][col]
        if not x:
            continue
        if not isinstance(x, Fraction):
            return i
        key = abs(x.numerator * x.denominator)
        if best is None or key > best_key:
            best, best_key = i, key
    return best


def _echelon(rows):
    """Reduce in place to row echelon form; returns the pivot column list."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        if r >= len(rows):
            break
        p = _pivot_row(rows, c, r)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(rows) -> int:
    """Pivot count after exact elimination."""
    work = [list(row) for row in rows if any(row)]
    if not work:
        return 0
    return len(_echelon(work))


def nullspace(rows, ncols=None):
    """Basis of the right kernel, exactly cols - rank vectors with M v = 0."""
    if ncols is None:
        if not rows:
            raise LinearError("nullspace of empty matrix needs ncols")
        ncols = len(rows[0])
    work = [list(row) for row in rows if any(row)]
    pivots = _echelon(work) if work else []
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        # Echelon rows are normalized, so pivot value is 1.
        for r, pc in enumerate(pivots):
            v[pc] = -work[r][fc]
        basis.append(tuple(v))
    return basis


def span_dim(vectors) -> int:
    """Dimension of the span of the given equal-length vectors."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return 0
    length = len(vecs[0])
    for v in vecs:
        if len(v) != length:
            raise LinearError("mismatched vector lengths")
    return rank(vecs)


def echelon_basis(vectors):
    """Reduced, deduplicated spanning set (rows of the echelon form)."""
    vecs = [list(v) for v in vectors if any(v)]
    if not vecs:
        return []
    _echelon(vecs)
    return [tuple(v) for v in vecs if any(v)]


def in_span(vectors, v) -> bool:
    return span_dim(list(vectors) + [v]) == span_dim(vectors)


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for s in range(1, k):
                acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(row)
    return out


def mat_inv(rows):
    """Inverse of a square matrix over any exact field; raises if singular."""
    n = len(rows)
    work = [list(r) + [x * 0 for x in r] for r in rows]
    one = None
    for i in range(n):
        if len(rows[i]) != n:
            raise LinearError("matrix not square")
        # Field-agnostic 1: divide a nonzero entry by itself lazily below.
    for i in range(n):
        for j in range(n):
            if rows[i][j]:
                one = rows[i][j] / rows[i][j]
                break
        if one is not None:
            break
    if one is None:
        raise LinearError("singular matrix")
    zero = one - one
    for i in range(n):
        for j in range(n):
            work[i][n + j] = one if i == j else zero
    r = 0
    for c in range(n):
        p = _pivot_row([w[: n] for w in work], c, r)
        if p is None:
            raise LinearError("singular matrix")
        work[r], work[p] = work[p], work[r]
        inv = work[r][c]
        work[r] = [x / inv for x in work[r]]
        for i in range(n):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
    return [row[n:] for row in work]


def det(rows):
    """Determinant over any exact field (fraction-free is unnecessary here)."""
    n = len(rows)
    work = [list(r) for r in rows]
    if n == 0:
        raise LinearError("empty matrix")
    acc = None
    sign_flip = False
    r = 0
    for c in range(n):
        p = _pivot_row(work, c, r)
        if p is None:
            return work[0][0] * 0
        if p != r:
            work[r], work[p] = work[p], work[r]
            sign_flip = not sign_flip
        piv = work[r][c]
        acc = piv if acc is None else acc * piv
        for i in range(r + 1, n):
            if work[i][c]:
                f = work[i][c] / piv
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
    if sign_flip:
        acc = -acc
    return acc


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; a thin wrapper over the routines above."""

    entries: tuple

    @staticmethod
    def from_rows(rows) -> "Matrix":
        return Matrix(tuple(tuple(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def rank(self) -> int:
        return rank(self.entries)

    def nullspace(self):
        return nullspace(self.entries, self.cols)

    def mul_vec(self, v):
        return tuple(sum((row[j] * v[j] for j in range(len(v))),
                         start=Fraction(0)) for row in self.entries)
