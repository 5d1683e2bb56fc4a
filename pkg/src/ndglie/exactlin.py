"""Exact dense linear algebra over Q or K.

Matrices are plain lists of rows.  Entries may be ``int``, ``Fraction`` or
``FieldElement``; nothing here ever rounds.  Elimination runs on sparse row
dictionaries because almost every matrix in this package (tensor actions,
cochain differentials) is mostly zeros.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .scalars import DomainError, Scalar, bit_size, is_real, sign, simplify

Matrix = List[List[Scalar]]
Vector = List[Scalar]


# construction ---------------------------------------------------------------

def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def diag(values: Sequence[Scalar]) -> Matrix:
    m = zeros(len(values), len(values))
    for i, v in enumerate(values):
        m[i][i] = v
    return m


def from_columns(cols: Sequence[Sequence[Scalar]], nrows: Optional[int] = None) -> Matrix:
    if not cols:
        return [[] for _ in range(nrows or 0)]
    n = len(cols[0])
    return [[c[i] for c in cols] for i in range(n)]


def columns(m: Matrix) -> List[Vector]:
    if not m:
        return []
    return [[row[j] for row in m] for j in range(len(m[0]))]


def shape(m: Matrix) -> Tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


# arithmetic ------------------------------------------------------------------

def transpose(m: Matrix) -> Matrix:
    return [list(r) for r in zip(*m)] if m else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, v) for k, v in enumerate(row) if v != 0]
        out.append([_dot_sparse(nz, col) for col in bt])
    return out


def _dot_sparse(nz, col):
    s = Fraction(0)
    for k, v in nz:
        w = col[k]
        if w != 0:
            s = s + v * w
    return s


def matvec(a: Matrix, v: Sequence[Scalar]) -> Vector:
    nz = [(k, x) for k, x in enumerate(v) if x != 0]
    return [_dot_sparse(nz, row) for row in a]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(m: Matrix, c: Scalar) -> Matrix:
    return [[c * x for x in row] for row in m]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return sub(matmul(a, b), matmul(b, a))


def kron(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i][j]
            if x == 0:
                continue
            for k in range(rb):
                row = out[i * rb + k]
                for l in range(cb):
                    y = b[k][l]
                    if y != 0:
                        row[j * cb + l] = x * y
    return out


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


def is_zero(m: Matrix) -> bool:
    return all(v == 0 for row in m for v in row)


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def trace(m: Matrix) -> Scalar:
    s = Fraction(0)
    for i in range(len(m)):
        s = s + m[i][i]
    return s


def simplify_matrix(m: Matrix) -> Matrix:
    return [[simplify(v) for v in row] for row in m]


def linear_combination(coeffs: Sequence[Scalar], mats: Sequence[Matrix]) -> Matrix:
    r, c = shape(mats[0])
    out = zeros(r, c)
    for a, m in zip(coeffs, mats):
        if a == 0:
            continue
        for i in range(r):
            oi, mi = out[i], m[i]
            for j in range(c):
                if mi[j] != 0:
                    oi[j] = oi[j] + a * mi[j]
    return out


def flatten(m: Matrix) -> Vector:
    return [v for row in m for v in row]


def unflatten(v: Sequence[Scalar], rows: int, cols: int) -> Matrix:
    return [list(v[i * cols:(i + 1) * cols]) for i in range(rows)]


# elimination -----------------------------------------------------------------

def _to_sparse(m: Matrix) -> List[Dict[int, Scalar]]:
    return [{j: v for j, v in enumerate(row) if v} for row in m]


def _sparse_rref(rows: List[Dict[int, Scalar]], ncols: int):
    """Gauss-Jordan on sparse rows; returns (pivot_rows, pivots)."""
    pending = [r for r in rows if r]
    done: List[Dict[int, Scalar]] = []
    pivots: List[int] = []
    for c in range(ncols):
        cands = [i for i, r in enumerate(pending) if c in r]
        if not cands:
            continue
        best = min(cands, key=lambda i: (bit_size(pending[i][c]), len(pending[i])))
        prow = pending.pop(best)
        p = prow[c]
        if p != 1:
            inv = 1 / p
            prow = {k: simplify(v * inv) for k, v in prow.items()}
        for group in (pending, done):
            for r in group:
                f = r.get(c)
                if f is None:
                    continue
                for k, v in prow.items():
                    nv = r.get(k, 0) - f * v
                    if nv == 0:
                        r.pop(k, None)
                    else:
                        r[k] = nv
        pending = [r for r in pending if r]
        done.append(prow)
        pivots.append(c)
        if not pending:
            break
    return done, pivots


def rref(m: Matrix) -> Tuple[Matrix, int, List[int]]:
    """Reduced row echelon form; returns (R, rank, pivot columns)."""
    nrows, ncols = shape(m)
    prow, pivots = _sparse_rref(_to_sparse(m), ncols)
    out = []
    for r in prow:
        out.append([simplify(r.get(j, Fraction(0))) for j in range(ncols)])
    for _ in range(nrows - len(out)):
        out.append([Fraction(0)] * ncols)
    return out, len(pivots), pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(_sparse_rref(_to_sparse(m), len(m[0]))[1])


def kernel_basis(m: Matrix, ncols: Optional[int] = None) -> List[Vector]:
    """Basis of the right null space, one vector per free column."""
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    prow, pivots = _sparse_rref(_to_sparse(m), n)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, p in zip(prow, pivots):
            x = r.get(f)
            if x is not None:
                v[p] = simplify(-x)
        basis.append(v)
    return basis


def solve(m: Matrix, b: Sequence[Scalar]) -> Optional[Vector]:
    """One solution x of m x = b, or None if inconsistent."""
    nrows, ncols = shape(m)
    aug = [dict(r) for r in _to_sparse(m)]
    for i, v in enumerate(b):
        if v != 0:
            aug[i][ncols] = v
    prow, pivots = _sparse_rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, p in zip(prow, pivots):
        x[p] = simplify(r.get(ncols, Fraction(0)))
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    prow, pivots = _sparse_rref(_to_sparse(aug), 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [[simplify(r.get(n + j, Fraction(0))) for j in range(n)] for r in prow[:n]]


def det(m: Matrix) -> Scalar:
    n = len(m)
    a = [list(r) for r in m]
    d: Scalar = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        p = a[c][c]
        d = d * p
        inv = 1 / p
        for r in range(c + 1, n):
            f = a[r][c]
            if f == 0:
                continue
            f = f * inv
            row, prow = a[r], a[c]
            for k in range(c, n):
                if prow[k] != 0:
                    row[k] = row[k] - f * prow[k]
    return simplify(d)


def is_invertible(m: Matrix) -> bool:
    return len(m) == (len(m[0]) if m else 0) and rank(m) == len(m)


# subspaces -------------------------------------------------------------------

def span_basis(vectors: Sequence[Sequence[Scalar]]) -> List[Vector]:
    """Row-reduced basis of the span of the given vectors."""
    if not vectors:
        return []
    r, k, _ = rref([list(v) for v in vectors])
    return r[:k]


def in_span(v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]]) -> bool:
    if not basis:
        return all(x == 0 for x in v)
    return rank([list(b) for b in basis] + [list(v)]) == rank([list(b) for b in basis])


def coordinates(v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]]) -> Optional[Vector]:
    """Coefficients c with sum c_i basis_i = v, or None."""
    return solve(from_columns(basis), v)


def complete_basis(basis: Sequence[Sequence[Scalar]], n: int) -> List[Vector]:
    """Standard basis vectors completing ``basis`` to a basis of K^n."""
    cur = [list(b) for b in basis]
    r = rank(cur) if cur else 0
    extra = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        if rank(cur + [e]) > r:
            cur.append(e)
            extra.append(e)
            r += 1
        if r == n:
            break
    return extra


class EchelonBasis:
    """Incrementally grown basis kept in reduced echelon form."""

    def __init__(self, vectors: Sequence[Sequence[Scalar]] = ()):
        self.rows: List[Dict[int, Scalar]] = []
        self.pivots: List[int] = []
        for v in vectors:
            self.add(v)

    def reduce(self, v: Sequence[Scalar]) -> Dict[int, Scalar]:
        r = {j: x for j, x in enumerate(v) if x}
        for row, p in zip(self.rows, self.pivots):
            f = r.get(p)
            if f is None:
                continue
            for k, x in row.items():
                nv = r.get(k, 0) - f * x
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, v: Sequence[Scalar]) -> bool:
        """Add v; returns False if it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: simplify(x * inv) for k, x in r.items()}
        for row in self.rows:
            f = row.get(p)
            if f is None:
                continue
            for k, x in r.items():
                nv = row.get(k, 0) - f * x
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        self.rows.append(r)
        self.pivots.append(p)
        return True

    def contains(self, v: Sequence[Scalar]) -> bool:
        return not self.reduce(v)

    def __len__(self):
        return len(self.rows)


def intersect_spans(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> List[Vector]:
    if not a or not b:
        return []
    m = from_columns(list(a) + [[-x for x in v] for v in b])
    out = []
    for k in kernel_basis(m):
        coeffs = k[: len(a)]
        out.append([simplify(sum((c * v[i] for c, v in zip(coeffs, a)), Fraction(0)))
                    for i in range(len(a[0]))])
    return span_basis(out)


# signature -------------------------------------------------------------------

def signature(m: Matrix) -> Tuple[int, int, int]:
    """(positives, negatives, nullity) of a real symmetric matrix, by congruence."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise DomainError("signature needs a square matrix")
    if not all(is_real(v) for row in m for v in row):
        raise DomainError("signature needs real entries")
    if not is_symmetric(m):
        raise DomainError("signature needs a symmetric matrix")
    a = [list(r) for r in m]
    idx = list(range(n))
    p = q = 0
    while idx:
        diag_c = [i for i in idx if a[i][i] != 0]
        if diag_c:
            i = min(diag_c, key=lambda t: bit_size(a[t][t]))
            piv = a[i][i]
            s = sign(piv)
            p += s > 0
            q += s < 0
            idx.remove(i)
            inv = 1 / piv
            for j in idx:
                f = a[j][i]
                if f == 0:
                    continue
                f = f * inv
                for k in idx:
                    if a[i][k] != 0:
                        a[j][k] = simplify(a[j][k] - f * a[i][k])
            continue
        off = [(i, j) for i in idx for j in idx if i < j and a[i][j] != 0]
        if not off:
            break
        i, j = off[0]
        b = a[i][j]
        # 2x2 block [[0,b],[b,0]] is hyperbolic; its inverse is [[0,1/b],[1/b,0]]
        p += 1
        q += 1
        idx.remove(i)
        idx.remove(j)
        inv = 1 / b
        rest = list(idx)
        ci = {r: a[r][i] for r in rest}
        cj = {r: a[r][j] for r in rest}
        for r in rest:
            for k in rest:
                corr = (ci[r] * cj[k] + cj[r] * ci[k]) * inv
                if corr != 0:
                    a[r][k] = simplify(a[r][k] - corr)
    return p, q, n - p - q
