"""Invariant tensors, equivariant maps and first cohomology.

Tensor spaces are described by small expression objects (``Module``, ``Dual``,
``Tensor``, ``Wedge2``, ``Sym2``, ``DirectSum``) which know how to produce the
induced action matrices.  Basis conventions:

* Tensor(A, B): index a * dim B + b.
* Dual(A): dual basis, action -rho^T.
* Wedge2(A): e_i ^ e_j, i < j, lexicographic.
* Sym2(A): e_i e_j, i <= j, lexicographic.
* Hom(A, B) = Tensor(Dual(A), B): the element with index i * dim B + k sends
  e_i to f_k, i.e. it is the matrix entry (k, i).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

from . import exactlin as el
from .exactlin import Matrix, Vector
from .liealg import CoordinateMap, LieAlgebra, Representation


class BudgetExceeded(Exception):
    """A computation was stopped by an explicit size or step budget."""


# tensor space expressions ---------------------------------------------------------

class TensorSpaceSpec:
    def rep(self) -> Representation:
        raise NotImplementedError

    def __str__(self):
        return self.describe()


@dataclass
class Module(TensorSpaceSpec):
    base: Representation
    symbol: str = "V"

    def rep(self):
        return self.base

    def describe(self):
        return self.symbol


@dataclass
class Dual(TensorSpaceSpec):
    inner: TensorSpaceSpec

    def rep(self):
        return dual(self.inner.rep())

    def describe(self):
        return f"({self.inner.describe()})*"


@dataclass
class Tensor(TensorSpaceSpec):
    left: TensorSpaceSpec
    right: TensorSpaceSpec

    def rep(self):
        return tensor(self.left.rep(), self.right.rep())

    def describe(self):
        return f"{self.left.describe()}⊗{self.right.describe()}"


@dataclass
class Wedge2(TensorSpaceSpec):
    inner: TensorSpaceSpec

    def rep(self):
        return wedge2(self.inner.rep())

    def describe(self):
        return f"Λ²{self.inner.describe()}"


@dataclass
class Sym2(TensorSpaceSpec):
    inner: TensorSpaceSpec

    def rep(self):
        return sym2(self.inner.rep())

    def describe(self):
        return f"S²{self.inner.describe()}"


@dataclass
class DirectSum(TensorSpaceSpec):
    parts: Tuple[TensorSpaceSpec, ...]

    def rep(self):
        return direct_sum(*[p.rep() for p in self.parts])

    def describe(self):
        return "⊕".join(p.describe() for p in self.parts)


def Hom(a: TensorSpaceSpec, b: TensorSpaceSpec) -> TensorSpaceSpec:
    return Tensor(Dual(a), b)


# induced actions --------------------------------------------------------------

def dual(r: Representation) -> Representation:
    return Representation(r.alg, r.dim, [el.scale(el.transpose(m), -1) for m in r.rho], f"{r.name}*")


def tensor(a: Representation, b: Representation) -> Representation:
    ia, ib = el.identity(a.dim), el.identity(b.dim)
    mats = [el.add(el.kron(x, ib), el.kron(ia, y)) for x, y in zip(a.rho, b.rho)]
    return Representation(a.alg, a.dim * b.dim, mats, f"{a.name}⊗{b.name}")


def wedge2(r: Representation) -> Representation:
    pairs = list(combinations(range(r.dim), 2))
    index = {p: k for k, p in enumerate(pairs)}
    mats = []
    for m in r.rho:
        out = el.zeros(len(pairs), len(pairs))
        for col, (i, j) in enumerate(pairs):
            # rho(e_i ^ e_j) = rho e_i ^ e_j + e_i ^ rho e_j
            for k in range(r.dim):
                for coeff, a, b in ((m[k][i], k, j), (m[k][j], i, k)):
                    if coeff == 0 or a == b:
                        continue
                    if a < b:
                        out[index[(a, b)]][col] += coeff
                    else:
                        out[index[(b, a)]][col] -= coeff
        mats.append(out)
    return Representation(r.alg, len(pairs), mats, f"Λ²{r.name}")


def sym2(r: Representation) -> Representation:
    pairs = list(combinations_with_replacement(range(r.dim), 2))
    index = {p: k for k, p in enumerate(pairs)}
    mats = []
    for m in r.rho:
        out = el.zeros(len(pairs), len(pairs))
        for col, (i, j) in enumerate(pairs):
            for k in range(r.dim):
                for coeff, a, b in ((m[k][i], k, j), (m[k][j], i, k)):
                    if coeff == 0:
                        continue
                    out[index[(min(a, b), max(a, b))]][col] += coeff
        mats.append(out)
    return Representation(r.alg, len(pairs), mats, f"S²{r.name}")


def direct_sum(*reps: Representation) -> Representation:
    mats = [el.block_diag(*ms) for ms in zip(*[r.rho for r in reps])]
    return Representation(reps[0].alg, sum(r.dim for r in reps), mats,
                          "⊕".join(r.name for r in reps))


def hom_rep(a: Representation, b: Representation) -> Representation:
    return tensor(dual(a), b)


def hom_vector_to_matrix(v: Sequence, dim_a: int, dim_b: int) -> Matrix:
    """Element of Hom(A, B) (tensor basis) as a dim_b x dim_a matrix."""
    return [[v[i * dim_b + k] for i in range(dim_a)] for k in range(dim_b)]


def sym2_vector_to_matrix(v: Sequence, n: int) -> Matrix:
    """Element of S^2 V* (i <= j basis) as a symmetric bilinear form matrix.

    The coefficient of e^i e^j (i < j) is split evenly over (i, j) and (j, i).
    """
    pairs = list(combinations_with_replacement(range(n), 2))
    out = el.zeros(n, n)
    for c, (i, j) in zip(v, pairs):
        if i == j:
            out[i][i] = c
        else:
            out[i][j] = out[j][i] = c / 2
    return out


# invariants ------------------------------------------------------------------

def invariant_space(rep: Representation) -> List[Vector]:
    """Basis of the common kernel of all action matrices."""
    if rep.dim == 0:
        return []
    rows = [row for m in rep.rho for row in m if any(v != 0 for v in row)]
    basis = el.kernel_basis(rows, rep.dim)
    for v in basis:
        for m in rep.rho:
            if any(x != 0 for x in el.matvec(m, v)):
                raise AssertionError("invariant vector is not annihilated")
    return basis


@dataclass
class Cohomology:
    dim: int
    cocycles: List[Vector]   # representatives, in C^1 = Hom(h, W) coordinates
    dim_z1: int
    dim_b1: int
    d0: Matrix
    d1: Matrix


def cochain_differentials(h: LieAlgebra, w: Representation) -> Tuple[Matrix, Matrix]:
    """d0: W -> C^1, d1: C^1 -> C^2 for the Chevalley-Eilenberg complex.

    C^1 index: a * dim W + i (value of phi(x_a) at coordinate i).
    C^2 index: pair (a < b) * dim W + i.
    """
    n, d = h.dim, w.dim
    d0 = [list(w.rho[a][i]) for a in range(n) for i in range(d)]
    pairs = list(combinations(range(n), 2))
    d1 = el.zeros(len(pairs) * d, n * d)
    for p, (a, b) in enumerate(pairs):
        ra, rb = w.rho[a], w.rho[b]
        br = h.basis_bracket(a, b)
        for i in range(d):
            row = d1[p * d + i]
            for k in range(d):
                # x_a . phi(x_b) - x_b . phi(x_a)
                if ra[i][k] != 0:
                    row[b * d + k] += ra[i][k]
                if rb[i][k] != 0:
                    row[a * d + k] -= rb[i][k]
            for c, coeff in enumerate(br):
                if coeff != 0:
                    row[c * d + i] -= coeff
    return d0, d1


def h1(h: LieAlgebra, w: Representation) -> Cohomology:
    d0, d1 = cochain_differentials(h, w)
    ncols = h.dim * w.dim
    z1 = el.kernel_basis(d1, ncols) if d1 else [
        [Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    b1 = el.span_basis(el.columns(d0)) if w.dim else []
    # extend the image basis by cocycles, keeping those that raise the rank
    ech = el.EchelonBasis(b1)
    reps: List[Vector] = [z for z in z1 if ech.add(z)]
    return Cohomology(len(z1) - len(b1), reps, len(z1), len(b1), d0, d1)


def h1_dim(h: LieAlgebra, w: Representation) -> int:
    return h1(h, w).dim


def commutant(rep: Representation) -> List[Matrix]:
    """Basis of {A : A rho(x) = rho(x) A for all x}."""
    n = rep.dim
    rows = []
    for m in rep.rho:
        for i in range(n):
            for j in range(n):
                # (A m - m A)[i][j] = sum_k A[i][k] m[k][j] - m[i][k] A[k][j]
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    if m[k][j] != 0:
                        row[i * n + k] += m[k][j]
                    if m[i][k] != 0:
                        row[k * n + j] -= m[i][k]
                if any(v != 0 for v in row):
                    rows.append(row)
    basis = el.kernel_basis(rows, n * n) if rows else [
        [Fraction(int(t == s)) for t in range(n * n)] for s in range(n * n)]
    return [el.unflatten(v, n, n) for v in basis]


def module_hom_space(a: Representation, b: Representation) -> List[Matrix]:
    """Basis of h-equivariant maps A -> B as dim_b x dim_a matrices."""
    inv = invariant_space(hom_rep(a, b))
    return [hom_vector_to_matrix(v, a.dim, b.dim) for v in inv]


@dataclass
class IsomorphismResult:
    isomorphic: bool
    witness: Optional[Matrix]
    hom_dim: int
    method: str


def is_isomorphic(a: Representation, b: Representation, seed: int = 0,
                  samples: int = 8) -> IsomorphismResult:
    basis = module_hom_space(a, b)
    if a.dim != b.dim or not basis:
        return IsomorphismResult(a.dim == b.dim == 0, None, len(basis), "dimension")
    rng = random.Random(seed)
    for _ in range(samples):
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in basis]
        m = el.linear_combination(coeffs, basis)
        if el.is_invertible(m):
            return IsomorphismResult(True, el.simplify_matrix(m), len(basis), "random")
    # Exhaustive: some element is invertible iff det(sum x_i B_i) is a nonzero polynomial.
    from .poly import MultiPoly, poly_det

    names = [f"x{i}" for i in range(len(basis))]
    xs = [MultiPoly.var(n, names) for n in names]
    pm = [[sum((x * B[i][j] for x, B in zip(xs, basis)), MultiPoly.zero(names))
           for j in range(a.dim)] for i in range(a.dim)]
    det = poly_det(pm)
    return IsomorphismResult(not det.is_zero(), None, len(basis), "determinant polynomial")


def verify_invariants(rep: Representation, vectors: Sequence[Vector]) -> bool:
    return all(all(x == 0 for x in el.matvec(m, v)) for v in vectors for m in rep.rho)


# spectra and obstructions to invariant complex structures -----------------------

def _sympy_matrix(m: Matrix):
    import sympy

    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in m])


def real_spectrum(m: Matrix) -> List[Tuple[object, int]]:
    """Real eigenvalues (sympy exact numbers) with algebraic multiplicities."""
    import sympy

    lam = sympy.Symbol("lam")
    p = sympy.Poly(_sympy_matrix(m).charpoly(lam).as_expr(), lam)
    counts: dict = {}
    for r in p.real_roots():
        counts[r] = counts.get(r, 0) + 1
    return sorted(counts.items(), key=lambda rm: float(rm[0]))


def has_simple_real_spectrum(m: Matrix) -> bool:
    spec = real_spectrum(m)
    return sum(k for _, k in spec) == len(m) and all(k == 1 for _, k in spec)


def spectrum_obstruction(rep: Representation) -> Optional[str]:
    """A reason no invariant J exists, read off from real eigenvalue multiplicities.

    A commuting J preserves each generalized eigenspace of rho(x) for a real
    eigenvalue, so these must all be even-dimensional.
    """
    if rep.dim % 2:
        return "odd dimension"
    for k, m in enumerate(rep.rho):
        for root, mult in real_spectrum(m):
            if mult % 2:
                return f"basis element {k} has real eigenvalue {root} of odd multiplicity {mult}"
    return None


def nilpotent_obstruction(ops: Sequence[Matrix], plane: Sequence[Vector]) -> Optional[str]:
    """For a 2-plane preserved by the operators: one acting as a nonzero nilpotent.

    If J preserves the plane and commutes with the operators, their restrictions lie
    in End_C(C) = C, which has no nonzero nilpotents; so no such J exists.
    """
    if len(plane) != 2:
        raise ValueError("plane must be 2-dimensional")
    cm = CoordinateMap(plane)
    for k, m in enumerate(ops):
        cols = [cm(el.matvec(m, v)) for v in plane]
        if any(c is None for c in cols):
            raise ValueError(f"operator {k} does not preserve the plane")
        r = el.from_columns(cols)
        if not el.is_zero(r) and el.is_zero(el.matmul(r, r)):
            return f"operator {k} acts as a nonzero nilpotent"
    return None


def eigenspaces(m: Matrix) -> List[Tuple[Fraction, List[Vector]]]:
    """Rational eigenvalues with their eigenspaces."""
    out = []
    for root, _ in real_spectrum(m):
        if not root.is_Rational:
            continue
        lam = Fraction(int(root.p), int(root.q))
        shifted = el.sub(m, el.scale(el.identity(len(m)), lam))
        out.append((lam, el.kernel_basis(shifted, len(m))))
    return out


@dataclass
class ComplexStructureSearch:
    status: str                  # none | finite | family | budget_exceeded
    structures: List[Matrix]
    commutant_dim: int
    reason: str = ""
    irrational_real: int = 0
    family_dim: int = 0

    @property
    def exists(self) -> Optional[bool]:
        if self.status == "budget_exceeded":
            return None
        return self.status != "none"


def invariant_complex_structures(rep: Representation, max_commutant: int = 4) -> ComplexStructureSearch:
    """All J in the commutant with J^2 = -1, by a Groebner basis of the quadratic system."""
    from .poly import MultiPoly, buchberger, real_points

    obstruction = spectrum_obstruction(rep)
    if obstruction:
        return ComplexStructureSearch("none", [], -1, obstruction)
    comm = commutant(rep)
    if len(comm) > max_commutant:
        return ComplexStructureSearch("budget_exceeded", [], len(comm),
                                      f"commutant dimension {len(comm)} > {max_commutant}")
    n = rep.dim
    names = tuple(f"x{i}" for i in range(len(comm)))
    xs = MultiPoly.gens(names)
    jpoly = [[sum((x * c[i][j] for x, c in zip(xs, comm) if c[i][j] != 0), MultiPoly.zero(names))
              for j in range(n)] for i in range(n)]
    eqs = []
    for i in range(n):
        for j in range(n):
            e = sum((jpoly[i][k] * jpoly[k][j] for k in range(n)), MultiPoly.zero(names))
            if i == j:
                e = e + 1
            if not e.is_zero():
                eqs.append(e)
    gb = buchberger(eqs)
    if not gb.complete:
        return ComplexStructureSearch("budget_exceeded", [], len(comm), gb.reason)
    if gb.is_unit():
        return ComplexStructureSearch("none", [], len(comm), "J^2 = -1 has no solution in the commutant")
    if not gb.is_zero_dimensional():
        return ComplexStructureSearch("family", [], len(comm), "positive-dimensional solution set",
                                      family_dim=gb.dimension())
    pts = real_points(eqs)
    mats = [el.simplify_matrix(el.linear_combination(list(p), comm)) for p in pts.points]
    for m in mats:
        if el.matmul(m, m) != el.scale(el.identity(n), -1):
            raise AssertionError("solution is not a complex structure")
        if any(el.commutator(m, r) != el.zeros(n, n) for r in rep.rho):
            raise AssertionError("solution is not invariant")
    status = "finite" if mats or pts.irrational_real else "none"
    return ComplexStructureSearch(status, mats, len(comm), "", pts.irrational_real)


# submodules ----------------------------------------------------------------------

def generated_submodule(rep: Representation, vectors: Sequence[Vector]) -> List[Vector]:
    """Smallest invariant subspace containing the given vectors."""
    ech = el.EchelonBasis()
    queue = [list(v) for v in vectors]
    basis: List[Vector] = []
    while queue:
        v = queue.pop()
        if ech.add(v):
            basis.append(v)
            queue.extend(el.matvec(m, v) for m in rep.rho)
    return basis


def image_submodule(rep: Representation, elements: Optional[Sequence[int]] = None) -> List[Vector]:
    """The submodule generated by the images of the chosen action matrices."""
    idx = range(len(rep.rho)) if elements is None else elements
    cols = [c for k in idx for c in el.columns(rep.rho[k])]
    return generated_submodule(rep, el.span_basis(cols))


@dataclass
class SubmoduleCell:
    pivots: Tuple[int, ...]
    status: str                     # none | points | family
    bases: List[List[Vector]]
    irrational_real: int = 0
    family_dim: int = 0


@dataclass
class SubmoduleSearch:
    dim: int
    cells: List[SubmoduleCell]

    @property
    def found(self) -> List[List[Vector]]:
        return [b for c in self.cells for b in c.bases]

    @property
    def complete(self) -> bool:
        """True when every submodule is among ``found`` (no families or irrational points)."""
        return all(c.status != "family" and not c.irrational_real for c in self.cells)

    @property
    def count(self) -> Optional[int]:
        return len(self.found) if self.complete else None


def submodules(rep: Representation, k: int) -> SubmoduleSearch:
    """Invariant k-dimensional subspaces, one polynomial system per Schubert cell.

    In the cell with pivot columns P, the subspace has a unique reduced row-echelon
    basis; the entries right of each pivot (off P) are unknowns, and invariance is
    rho(x) b_l = sum_m (rho(x) b_l)[P_m] b_m.
    """
    from .poly import MultiPoly, buchberger, real_points

    n = rep.dim
    cells = []
    for piv in combinations(range(n), k):
        free = [(l, j) for l, p in enumerate(piv) for j in range(p + 1, n) if j not in piv]
        names = tuple(f"y{l}_{j}" for l, j in free) or ("y",)
        zero = MultiPoly.zero(names)
        rows = []
        for l, p in enumerate(piv):
            row = [zero] * n
            row[p] = MultiPoly.const(1, names)
            rows.append(row)
        for (l, j), name in zip(free, names):
            rows[l][j] = MultiPoly.var(name, names)
        eqs = []
        for m in rep.rho:
            for row in rows:
                img = [sum((row[c] * m[r][c] for c in range(n) if m[r][c] != 0), zero) for r in range(n)]
                resid = list(img)
                for l, p in enumerate(piv):
                    coef = img[p]
                    if coef.is_zero():
                        continue
                    resid = [a - coef * b for a, b in zip(resid, rows[l])]
                eqs.extend(e for e in resid if not e.is_zero())
        if not free:
            if eqs:
                cells.append(SubmoduleCell(piv, "none", []))
            else:
                basis = [[Fraction(v.evaluate([0])) for v in row] for row in rows]
                cells.append(SubmoduleCell(piv, "points", [basis]))
            continue
        if not eqs:
            cells.append(SubmoduleCell(piv, "family", [], family_dim=len(free)))
            continue
        gb = buchberger(eqs)
        if not gb.complete:
            raise BudgetExceeded(gb.reason)
        if gb.is_unit():
            cells.append(SubmoduleCell(piv, "none", []))
            continue
        if not gb.is_zero_dimensional():
            cells.append(SubmoduleCell(piv, "family", [], family_dim=gb.dimension()))
            continue
        pts = real_points(eqs)
        bases = []
        for pt in pts.points:
            basis = [[Fraction(v.evaluate(pt)) for v in row] for row in rows]
            if not _is_invariant(rep, basis):
                raise AssertionError("submodule solution is not invariant")
            bases.append(basis)
        status = "points" if bases or pts.irrational_real else "none"
        cells.append(SubmoduleCell(piv, status, bases, pts.irrational_real))
    return SubmoduleSearch(k, cells)


def _is_invariant(rep: Representation, basis: Sequence[Vector]) -> bool:
    return all(el.in_span(el.matvec(m, b), basis) for m in rep.rho for b in basis)


def antilinear_two_forms(rep: Representation, J: Matrix) -> List[Vector]:
    """Invariant elements of Lambda^2 L* (x) L that are C-antilinear in each slot for J."""
    inv = invariant_space(hom_rep(wedge2(rep), rep))
    n = rep.dim
    pairs = list(combinations(range(n), 2))
    pindex = {p: i for i, p in enumerate(pairs)}
    if not inv:
        return []

    def as_tensor(v):
        mat = hom_vector_to_matrix(v, len(pairs), n)

        def value(i, j):
            if i == j:
                return [Fraction(0)] * n
            if i < j:
                return [mat[k][pindex[(i, j)]] for k in range(n)]
            return [-mat[k][pindex[(j, i)]] for k in range(n)]
        return value

    # coefficients of N(J e_i, e_j) + J N(e_i, e_j) as linear functions of the invariant basis
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = []
                for v in inv:
                    val = as_tensor(v)
                    lhs = sum((J[a][i] * val(a, j)[k] for a in range(n) if J[a][i] != 0), Fraction(0))
                    rhs = sum((J[k][a] * val(i, j)[a] for a in range(n) if J[k][a] != 0), Fraction(0))
                    row.append(lhs + rhs)
                rows.append(row)
    coeffs = el.kernel_basis(rows, len(inv))
    return [[sum((c[t] * inv[t][s] for t in range(len(inv))), Fraction(0)) for s in range(len(inv[0]))]
            for c in coeffs]
