"""Lie algebras by structure constants, embeddings, representations and
homogeneous-space setups g = h + m.

Structure constants are kept sparse: ``brackets[(i, j)] = {k: c}`` for i < j
means [e_i, e_j] = sum_k c e_k.  Vectors are coordinate lists in the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import exactlin as el
from .exactlin import Matrix, Vector
from .scalars import Scalar, simplify


class InvariantError(ValueError):
    """A claimed structural invariant does not hold."""


@dataclass
class LieAlgebra:
    name: str
    dim: int
    brackets: Dict[Tuple[int, int], Dict[int, Scalar]] = field(default_factory=dict)
    labels: Optional[List[str]] = None

    def __post_init__(self):
        if self.labels is None:
            self.labels = [f"e{i}" for i in range(self.dim)]
        clean = {}
        for (i, j), vec in self.brackets.items():
            if i == j:
                raise InvariantError("bracket of a basis element with itself must vanish")
            vec = {k: simplify(c) for k, c in vec.items() if c != 0}
            if i > j:
                i, j = j, i
                vec = {k: -c for k, c in vec.items()}
            if vec:
                clean[(i, j)] = vec
        self.brackets = clean

    def structure_constant(self, i: int, j: int, k: int) -> Scalar:
        if i == j:
            return Fraction(0)
        if i < j:
            return self.brackets.get((i, j), {}).get(k, Fraction(0))
        return -self.brackets.get((j, i), {}).get(k, Fraction(0))

    def basis_bracket(self, i: int, j: int) -> Vector:
        out = [Fraction(0)] * self.dim
        if i == j:
            return out
        sgn = 1 if i < j else -1
        for k, c in self.brackets.get((min(i, j), max(i, j)), {}).items():
            out[k] = sgn * c
        return out

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        out = [Fraction(0)] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a != 0]
        ys = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in xs:
            for j, b in ys:
                if i == j:
                    continue
                sgn = 1 if i < j else -1
                for k, c in self.brackets.get((min(i, j), max(i, j)), {}).items():
                    out[k] = out[k] + sgn * a * b * c
        return [simplify(v) for v in out]

    def ad(self, x: Sequence[Scalar]) -> Matrix:
        cols = [self.bracket(x, basis_vector(self.dim, j)) for j in range(self.dim)]
        return el.from_columns(cols)

    def ad_basis(self) -> List[Matrix]:
        return [self.ad(basis_vector(self.dim, i)) for i in range(self.dim)]

    def killing_form(self) -> Matrix:
        ads = self.ad_basis()
        return [[el.trace(el.matmul(a, b)) for b in ads] for a in ads]

    def killing_norm(self, x: Sequence[Scalar]) -> Scalar:
        a = self.ad(x)
        return el.trace(el.matmul(a, a))

    def is_rational(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for v in self.brackets.values() for c in v.values())

    def derived_algebra(self) -> List[Vector]:
        return el.span_basis([self.basis_bracket(i, j) for i, j in combinations(range(self.dim), 2)])

    def subalgebra_closed(self, vectors: Sequence[Sequence[Scalar]]) -> bool:
        basis = el.span_basis(vectors)
        return all(el.in_span(self.bracket(x, y), basis) for x, y in combinations(basis, 2))

    @classmethod
    def from_matrices(cls, name: str, mats: Sequence[Matrix], labels=None) -> "LieAlgebra":
        """Structure constants of the matrix Lie algebra spanned by ``mats``."""
        coords = CoordinateMap([el.flatten(m) for m in mats])
        brackets = {}
        for i, j in combinations(range(len(mats)), 2):
            c = coords(el.flatten(el.commutator(mats[i], mats[j])))
            if c is None:
                raise InvariantError(f"{name}: span of matrices is not closed under [,]")
            brackets[(i, j)] = {k: v for k, v in enumerate(c) if v != 0}
        return cls(name, len(mats), brackets, list(labels) if labels else None)


def basis_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


class CoordinateMap:
    """Coordinates of vectors with respect to a fixed independent family."""

    def __init__(self, basis: Sequence[Sequence[Scalar]]):
        self.basis = [list(b) for b in basis]
        if not self.basis:
            self.rows, self.inv = [], []
            return
        # rows of the (n x d) column matrix giving an invertible d x d block
        cols = el.from_columns(self.basis)
        _, r, piv = el.rref(el.transpose(cols))
        if r != len(self.basis):
            raise InvariantError("basis vectors are linearly dependent")
        self.rows = piv
        self.inv = el.inverse([cols[i] for i in piv])

    def __call__(self, v: Sequence[Scalar]) -> Optional[Vector]:
        if not self.basis:
            return [] if all(x == 0 for x in v) else None
        c = el.matvec(self.inv, [v[i] for i in self.rows])
        c = [simplify(x) for x in c]
        recon = [sum((a * b[i] for a, b in zip(c, self.basis) if a != 0), Fraction(0))
                 for i in range(len(v))]
        if any(x != y for x, y in zip(recon, v)):
            return None
        return c


def check_jacobi(g: LieAlgebra) -> bool:
    return not jacobi_violations(g, limit=1)


def jacobi_violations(g: LieAlgebra, limit: Optional[int] = None) -> List[Tuple[int, int, int]]:
    bad = []
    n = g.dim
    for i, j, k in combinations(range(n), 3):
        ei, ej, ek = (basis_vector(n, t) for t in (i, j, k))
        s = g.bracket(g.basis_bracket(i, j), ek)
        for x, y in ((g.basis_bracket(j, k), ei), (g.basis_bracket(k, i), ej)):
            s = [a + b for a, b in zip(s, g.bracket(x, y))]
        if any(v != 0 for v in s):
            bad.append((i, j, k))
            if limit and len(bad) >= limit:
                break
    return bad


@dataclass
class Embedding:
    sub: LieAlgebra
    amb: LieAlgebra
    inc: Matrix  # amb.dim x sub.dim

    def image(self, x: Sequence[Scalar]) -> Vector:
        return el.matvec(self.inc, x)

    def image_basis(self) -> List[Vector]:
        return el.columns(self.inc)

    def verify(self) -> None:
        if el.rank(self.inc) != self.sub.dim:
            raise InvariantError(f"{self.sub.name} -> {self.amb.name}: inclusion not injective")
        cols = self.image_basis()
        for i, j in combinations(range(self.sub.dim), 2):
            lhs = self.image(self.sub.basis_bracket(i, j))
            rhs = self.amb.bracket(cols[i], cols[j])
            if lhs != rhs:
                raise InvariantError(
                    f"{self.sub.name} -> {self.amb.name}: bracket mismatch on ({i},{j})"
                )


@dataclass
class Representation:
    alg: LieAlgebra
    dim: int
    rho: List[Matrix]
    name: str = ""

    def act(self, x: Sequence[Scalar]) -> Matrix:
        return el.linear_combination(x, self.rho) if self.rho else []

    def violations(self) -> List[Tuple[int, int]]:
        bad = []
        for i, j in combinations(range(self.alg.dim), 2):
            lhs = self.act(self.alg.basis_bracket(i, j))
            rhs = el.commutator(self.rho[i], self.rho[j])
            if lhs != rhs:
                bad.append((i, j))
        return bad

    def verify(self) -> None:
        if len(self.rho) != self.alg.dim:
            raise InvariantError("one action matrix per basis element is required")
        if any(el.shape(m) != (self.dim, self.dim) for m in self.rho):
            raise InvariantError("action matrices have the wrong shape")
        bad = self.violations()
        if bad:
            raise InvariantError(f"representation {self.name}: rho([x,y]) != [rho x, rho y] on {bad[:3]}")

    def restrict_algebra(self, emb: Embedding) -> "Representation":
        """Pull back along an embedding sub -> alg."""
        mats = [self.act(c) for c in emb.image_basis()]
        return Representation(emb.sub, self.dim, mats, f"{self.name}|{emb.sub.name}")


def adjoint_rep(g: LieAlgebra) -> Representation:
    return Representation(g, g.dim, g.ad_basis(), f"ad({g.name})")


@dataclass
class QuotientSetup:
    """g = h + m with m spanned by the columns of ``complement``.

    ``mu`` optionally stores the h-component of [h, m]: mu[a][b][c] is the
    e_c coefficient of [h_a, m_b] projected to h.
    """

    emb: Embedding
    complement: Matrix  # amb.dim x (amb.dim - sub.dim)
    mu: Optional[List[List[List[Scalar]]]] = None
    name: str = ""

    def __post_init__(self):
        h_cols = self.emb.image_basis()
        m_cols = el.columns(self.complement)
        if len(h_cols) + len(m_cols) != self.emb.amb.dim:
            raise InvariantError("h and m dimensions do not add up to dim g")
        full = h_cols + m_cols
        if el.rank(el.from_columns(full)) != self.emb.amb.dim:
            raise InvariantError("complement is not transverse to h")
        self._coords = CoordinateMap(full)
        self.h_dim = len(h_cols)
        self.m_dim = len(m_cols)
        self.m_cols = m_cols
        self.h_cols = h_cols

    @property
    def g(self) -> LieAlgebra:
        return self.emb.amb

    @property
    def h(self) -> LieAlgebra:
        return self.emb.sub

    def split(self, v: Sequence[Scalar]) -> Tuple[Vector, Vector]:
        c = self._coords(v)
        return c[: self.h_dim], c[self.h_dim:]

    def proj_h(self, v):
        return self.split(v)[0]

    def proj_m(self, v):
        return self.split(v)[1]

    def m_vector(self, c: Sequence[Scalar]) -> Vector:
        """Element of g with coordinates c in the m basis."""
        return el.matvec(self.complement, c)

    def bracket_m(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Tuple[Vector, Vector]:
        """[x, y] for x, y in m (m-coordinates), split into (h, m) parts."""
        return self.split(self.g.bracket(self.m_vector(x), self.m_vector(y)))

    def is_reductive(self) -> bool:
        for hc in self.h_cols:
            for mc in self.m_cols:
                if any(v != 0 for v in self.proj_h(self.g.bracket(hc, mc))):
                    return False
        return True


def quotient_rep(q: QuotientSetup) -> Representation:
    """Action of h on m = g/h: h.m = proj_m([h, m])."""
    mats = []
    for hc in q.h_cols:
        cols = [q.proj_m(q.g.bracket(hc, mc)) for mc in q.m_cols]
        mats.append(el.from_columns(cols) if cols else [])
    rep = Representation(q.h, q.m_dim, mats, f"{q.g.name}/{q.h.name}")
    if q.m_dim:
        rep.verify()
    return rep


def invariant_subspace_check(rep: Representation, sub: Sequence[Sequence[Scalar]]) -> bool:
    basis = el.span_basis(sub)
    return all(el.in_span(el.matvec(a, v), basis) for a in rep.rho for v in basis)


def restrict_rep(rep: Representation, sub: Sequence[Sequence[Scalar]]) -> Representation:
    """Action on an invariant subspace, in the given basis of it."""
    cm = CoordinateMap(sub)
    mats = []
    for a in rep.rho:
        cols = []
        for v in sub:
            c = cm(el.matvec(a, v))
            if c is None:
                raise InvariantError("subspace is not invariant")
            cols.append(c)
        mats.append(el.from_columns(cols))
    return Representation(rep.alg, len(sub), mats, f"{rep.name}|sub{len(sub)}")


def quotient_module(rep: Representation, sub: Sequence[Sequence[Scalar]]):
    """Action on V/sub, with V/sub identified with a coordinate complement.

    Returns (representation, complement basis).
    """
    if not invariant_subspace_check(rep, sub):
        raise InvariantError("subspace is not invariant")
    comp = el.complete_basis(sub, rep.dim)
    cm = CoordinateMap(list(sub) + comp)
    k = len(sub)
    mats = []
    for a in rep.rho:
        cols = [cm(el.matvec(a, v))[k:] for v in comp]
        mats.append(el.from_columns(cols) if cols else [])
    return Representation(rep.alg, len(comp), mats, f"{rep.name}/sub{k}"), comp


def grading_element_action(rep: Representation, s: Sequence[Scalar],
                           sub: Sequence[Sequence[Scalar]]) -> Matrix:
    """Matrix of s acting on the quotient m/t of the module by an invariant t."""
    qrep, _ = quotient_module(rep, sub)
    return qrep.act(s) if qrep.dim else []


def semidirect_abelian(h: LieAlgebra, rep: Representation, name: str) -> QuotientSetup:
    """g = h x| m with [m, m] = 0, as a quotient setup with m the coordinate block."""
    n, d = h.dim, rep.dim
    brackets: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for (i, j), v in h.brackets.items():
        brackets[(i, j)] = dict(v)
    for a in range(n):
        for b in range(d):
            col = {n + k: rep.rho[a][k][b] for k in range(d) if rep.rho[a][k][b] != 0}
            if col:
                brackets[(a, n + b)] = col
    labels = list(h.labels) + [f"m{b}" for b in range(d)]
    g = LieAlgebra(name, n + d, brackets, labels)
    inc = [[Fraction(int(i == j)) for j in range(n)] for i in range(n + d)]
    comp = [[Fraction(int(i == n + j)) for j in range(d)] for i in range(n + d)]
    return QuotientSetup(Embedding(h, g, inc), comp, name=name)


def grading_ok(g: LieAlgebra, degrees: Sequence[int]) -> bool:
    """[g_i, g_j] lies in g_{i+j} for a basis-diagonal grading."""
    for (i, j), vec in g.brackets.items():
        for k in vec:
            if degrees[k] != degrees[i] + degrees[j]:
                return False
    return True


def realify(cmat: Sequence[Sequence[Scalar]]) -> Matrix:
    """Real 2n x 2n matrix of a complex n x n matrix in the frame (X1, iX1, X2, iX2, ...)."""
    from .scalars import imag_part, real_part

    n = len(cmat)
    out = el.zeros(2 * n, 2 * n)
    for r in range(n):
        for c in range(n):
            z = cmat[r][c]
            if z == 0:
                continue
            a, b = real_part(z), imag_part(z)
            out[2 * r][2 * c] = a
            out[2 * r][2 * c + 1] = -b
            out[2 * r + 1][2 * c] = b
            out[2 * r + 1][2 * c + 1] = a
    return out
