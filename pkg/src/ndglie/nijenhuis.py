"""Almost complex structures with their Nijenhuis tensors on a 6-dim real space.

The real frame of a normal form is (X1, JX1, X2, JX2, X3, JX3).  A tensor is
stored as ``values[i][j]``: the vector N(e_i, e_j) in that frame.  The
convention is N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY] (no factor 1/4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, List, Optional, Sequence, Tuple

from . import exactlin as el
from .exactlin import Matrix, Vector
from .liealg import InvariantError, QuotientSetup, realify
from .scalars import (
    SQRT2,
    DomainError,
    FieldElement,
    I,
    Scalar,
    exp_i,
    imag_part,
    is_real,
    real_part,
    simplify,
)

F = Fraction


def _lin(m: Matrix, v: Sequence) -> list:
    """m v for vectors whose entries may be polynomials."""
    out = []
    for row in m:
        s = 0
        for a, x in zip(row, v):
            if a != 0:
                s = s + a * x
        out.append(s)
    return out


@dataclass
class ComplexStructureJ:
    J: Matrix

    def __post_init__(self):
        n = len(self.J)
        if el.matmul(self.J, self.J) != el.scale(el.identity(n), -1):
            raise InvariantError("J^2 != -1")
        if not all(is_real(v) for row in self.J for v in row):
            raise InvariantError("J must have real entries")

    @property
    def dim(self) -> int:
        return len(self.J)

    def __neg__(self):
        return ComplexStructureJ(el.scale(self.J, -1))

    def apply(self, v):
        return _lin(self.J, v)

    def complex_frame(self) -> List[Vector]:
        """Vectors X1..Xk with (X1, JX1, ..., Xk, JXk) a real basis (greedy from e_i)."""
        n = self.dim
        ech = el.EchelonBasis()
        frame = []
        for i in range(n):
            e = [F(int(k == i)) for k in range(n)]
            if ech.contains(e):
                continue
            ech.add(e)
            ech.add(el.matvec(self.J, e))
            frame.append(e)
        return frame


STANDARD_J = ComplexStructureJ(realify(el.scale(el.identity(3), I)))


@dataclass
class NijenhuisTensor:
    values: List[List[list]]
    J: ComplexStructureJ

    @property
    def dim(self) -> int:
        return len(self.values)

    def __call__(self, x: Sequence, y: Sequence) -> list:
        n = self.dim
        out = [0] * n
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0 or i == j:
                    continue
                v = self.values[i][j]
                ab = a * b
                for k in range(n):
                    if v[k] != 0:
                        out[k] = out[k] + ab * v[k]
        return [simplify(v) if not hasattr(v, "terms") else v for v in out]

    def scaled(self, c) -> "NijenhuisTensor":
        return NijenhuisTensor([[[c * v for v in vec] for vec in row] for row in self.values], self.J)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.values for vec in row for v in vec)

    def antisymmetry_violations(self) -> int:
        n = self.dim
        return sum(1 for i in range(n) for j in range(n)
                   if any(a + b != 0 for a, b in zip(self.values[i][j], self.values[j][i])))

    def antilinearity_violations(self) -> int:
        """Count basis pairs where N(Jx, y) != -J N(x, y)."""
        n = self.dim
        bad = 0
        for i in range(n):
            jx = [self.J.J[k][i] for k in range(n)]
            for j in range(n):
                y = [F(int(k == j)) for k in range(n)]
                lhs = self(jx, y)
                rhs = [-v for v in self.J.apply(self.values[i][j])]
                if any(simplify(a - b) != 0 for a, b in zip(lhs, rhs)):
                    bad += 1
        return bad

    def check(self) -> None:
        if self.antisymmetry_violations():
            raise InvariantError("N is not antisymmetric")
        if self.antilinearity_violations():
            raise InvariantError("N is not C-antilinear")


# normal forms -------------------------------------------------------------------

def _complex_to_real(c: Sequence[Scalar]) -> Vector:
    out = []
    for z in c:
        out.extend((real_part(z), imag_part(z)))
    return out


def from_complex_relations(rel12, rel13, rel23, J: ComplexStructureJ = STANDARD_J) -> NijenhuisTensor:
    """Extend N(X1,X2), N(X1,X3), N(X2,X3) (complex coordinate triples) to the real
    frame by antisymmetry and C-antilinearity in each slot."""
    n = 6
    vals = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
    for (a, b), rel in zip(((0, 1), (0, 2), (1, 2)), (rel12, rel13, rel23)):
        v = _complex_to_real(rel)
        jv = J.apply(v)
        blocks = {
            (2 * a, 2 * b): v,                       # N(Xa, Xb)
            (2 * a + 1, 2 * b): [-x for x in jv],    # N(JXa, Xb) = -J N
            (2 * a, 2 * b + 1): [-x for x in jv],    # N(Xa, JXb) = -J N
            (2 * a + 1, 2 * b + 1): [-x for x in v],  # N(JXa, JXb) = J^2 N
        }
        for (i, j), vec in blocks.items():
            vals[i][j] = [simplify(x) for x in vec]
            vals[j][i] = [simplify(-x) for x in vec]
    return NijenhuisTensor(vals, J)


def ndg_normal_form(kind: int, lam: Scalar = 1, phi_k: int = 0, psi_k: int = 0) -> NijenhuisTensor:
    """Normal forms NDG(1)-(4); angles are phi_k * pi/12 and psi_k * pi/12."""
    if not isinstance(phi_k, int) or not isinstance(psi_k, int):
        raise DomainError("angles must be integer multiples of pi/12")
    z = F(0)
    one = F(1)
    eph = simplify(exp_i(phi_k))
    if kind == 1:
        rels = ((z, one, z), (z, z, lam), (eph, z, z))
    elif kind == 2:
        rels = ((z, one, z), (z, one, one), (eph, z, z))
    elif kind == 3:
        rels = ((z, z, simplify(exp_i(-psi_k))), (z, simplify(-exp_i(psi_k)), z), (eph, z, z))
    elif kind == 4:
        rels = ((one, z, z), (z, one, z), (z, one, one))
    else:
        raise DomainError("normal form type must be 1..4")
    return from_complex_relations(*rels)


def strong_degeneration(eps1: int, eps2: int) -> NijenhuisTensor:
    """NDG(3) at psi = eps1 pi/4, phi = eps2 pi/2 - eps1 pi/4 written with 1/sqrt2 factors."""
    if eps1 not in (1, -1) or eps2 not in (1, -1):
        raise DomainError("eps1, eps2 must be +-1")
    r = SQRT2 / 2
    return from_complex_relations(
        (F(0), F(0), simplify(r * (1 - eps1 * I))),
        (F(0), simplify(-r * (1 + eps1 * I)), F(0)),
        (simplify(r * (eps1 * eps2 + eps2 * I)), F(0), F(0)),
    )


def strong_degeneration_angles(eps1: int, eps2: int) -> Tuple[int, int]:
    """(psi_k, phi_k) of the strong degeneration in units of pi/12."""
    return 3 * eps1, 6 * eps2 - 3 * eps1


# non-degeneracy -----------------------------------------------------------------

def nondegeneracy_matrix(N: NijenhuisTensor) -> Matrix:
    """Real matrix of Lambda^2_C m -> m: columns N(Xa,Xb), -J N(Xa,Xb) for a complex frame."""
    frame = N.J.complex_frame()
    cols = []
    for a, b in combinations(range(len(frame)), 2):
        v = N(frame[a], frame[b])
        cols.append(v)
        cols.append([-x for x in N.J.apply(v)])
    return el.from_columns(cols)


def is_nondegenerate(N: NijenhuisTensor) -> bool:
    return el.det(nondegeneracy_matrix(N)) != 0


# h and zeta --------------------------------------------------------------------

@dataclass
class HermitianForm:
    h: Matrix
    signature: Tuple[int, int, int]
    kernel: List[Vector]


def hermitian_form(N: NijenhuisTensor) -> HermitianForm:
    n = N.dim
    vals = N.values
    # T[i][j] = Tr(u -> N(e_i, N(e_j, u))) = sum_k sum_l N[j][k][l] N[i][l][k]
    t = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = F(0)
            for k in range(n):
                njk = vals[j][k]
                for l in range(n):
                    if njk[l] != 0 and vals[i][l][k] != 0:
                        s = s + njk[l] * vals[i][l][k]
            t[i][j] = s
    h = [[simplify(t[i][j] + t[j][i]) for j in range(n)] for i in range(n)]
    return HermitianForm(h, el.signature(h), el.kernel_basis(h, n))


def _bilinear(h: Matrix, x, y):
    return simplify(sum((x[i] * h[i][j] * y[j] for i in range(len(x)) for j in range(len(y))
                         if x[i] != 0 and y[j] != 0 and h[i][j] != 0), F(0)))


@dataclass
class ThreeForm:
    frame_value: Scalar          # zeta(X1, X2, X3)
    sigma: int                   # zeta(Ju, v, w) = sigma * i * zeta(u, v, w)
    frame: List[Vector]

    @property
    def is_volume(self) -> bool:
        return self.frame_value != 0


def zeta(N: NijenhuisTensor, h: Matrix, u, v, w) -> Scalar:
    """alt[h(N(u,v), w) - i h(N(u,v), Jw)], with alt the plain signed sum over S_3."""
    vecs = (u, v, w)
    total = F(0)
    for perm in permutations(range(3)):
        a, b, c = (vecs[p] for p in perm)
        sgn = _perm_sign(perm)
        nab = N(a, b)
        term = _bilinear(h, nab, c) - I * _bilinear(h, nab, N.J.apply(c))
        total = total + sgn * term
    return simplify(total)


def _perm_sign(p) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def three_form(N: NijenhuisTensor, h: Optional[HermitianForm] = None) -> ThreeForm:
    hf = h or hermitian_form(N)
    frame = N.J.complex_frame()
    val = zeta(N, hf.h, *frame)
    sigma = 1
    jx = N.J.apply(frame[0])
    lhs = zeta(N, hf.h, jx, frame[1], frame[2])
    if val != 0:
        if simplify(lhs - I * val) == 0:
            sigma = 1
        elif simplify(lhs + I * val) == 0:
            sigma = -1
        else:
            raise InvariantError("zeta is not of type (3,0)")
    return ThreeForm(val, sigma, frame)


# stabilizer ------------------------------------------------------------------------

def stabilizer(N: NijenhuisTensor) -> List[Matrix]:
    """Basis of {A : AJ = JA, A N(x,y) = N(Ax,y) + N(x,Ay)}."""
    n = N.dim
    J = N.J.J
    vals = N.values
    rows = []

    def idx(r, c):
        return r * n + c

    for i in range(n):
        for j in range(n):
            row = [F(0)] * (n * n)
            for k in range(n):
                # (AJ - JA)[i][j] = sum_k A[i][k] J[k][j] - J[i][k] A[k][j]
                if J[k][j] != 0:
                    row[idx(i, k)] += J[k][j]
                if J[i][k] != 0:
                    row[idx(k, j)] -= J[i][k]
            rows.append(row)
    for i, j in combinations(range(n), 2):
        nij = vals[i][j]
        for m in range(n):
            row = [0] * (n * n)
            for k in range(n):
                if nij[k] != 0:
                    row[idx(m, k)] = row[idx(m, k)] + nij[k]
                # - N(A e_i, e_j)_m = - sum_k A[k][i] N[k][j][m]
                if vals[k][j][m] != 0:
                    row[idx(k, i)] = row[idx(k, i)] - vals[k][j][m]
                if vals[i][k][m] != 0:
                    row[idx(k, j)] = row[idx(k, j)] - vals[i][k][m]
            rows.append([simplify(x) for x in row])
    basis = [el.unflatten(v, n, n) for v in el.kernel_basis(rows, n * n)]
    for a, b in combinations(basis, 2):
        if not el.in_span(el.flatten(el.commutator(a, b)), [el.flatten(x) for x in basis]):
            raise InvariantError("stabilizer is not closed under commutators")
    return basis


def annihilates_forms(N: NijenhuisTensor, A: Matrix, hf: HermitianForm) -> bool:
    """A acts as a derivation killing h (h(Ax,y) + h(x,Ay) = 0) and zeta."""
    h = hf.h
    if not el.is_zero(el.simplify_matrix(el.add(el.matmul(el.transpose(A), h), el.matmul(h, A)))):
        return False
    frame = N.J.complex_frame()
    total = F(0)
    for slot in range(3):
        args = list(frame)
        args[slot] = el.matvec(A, frame[slot])
        total = total + zeta(N, h, *args)
    return simplify(total) == 0


# the map Phi of CP^2 ---------------------------------------------------------------

def _to_complex(v: Sequence[Scalar]) -> List[Scalar]:
    return [simplify(v[2 * k] + I * v[2 * k + 1]) for k in range(len(v) // 2)]


def _to_real(c: Sequence[Scalar]) -> Vector:
    return _complex_to_real(c)


def phi_image(N: NijenhuisTensor, x: Sequence[Scalar]) -> List[Scalar]:
    """Complex representative of Phi(<x>) = C N(Y, Z) with <Y,Z>_C = Im N(x, .)."""
    xr = _to_real(x)
    n = N.dim
    img = el.span_basis([N(xr, [F(int(k == i)) for k in range(n)]) for i in range(n)])
    if len(img) != 4:
        raise DomainError("Im N(x, .) is not a complex plane; N is degenerate")
    y = img[0]
    z = next(v for v in img[1:] if not el.in_span(v, [y, N.J.apply(y)]))
    return _to_complex(N(y, z))


@dataclass
class PhiMap:
    matrix: Matrix                 # complex 3x3, up to scale
    discriminant: Scalar
    fixed_lines: Optional[List[List[Scalar]]]   # None when eigenvalues repeat
    coordinate_lines_fixed: bool
    eigen_report: str


def _proportional(a: Sequence[Scalar], b: Sequence[Scalar]) -> bool:
    k = next((i for i, v in enumerate(a) if v != 0), None)
    if k is None or b[k] == 0:
        return False
    c = b[k] / a[k]
    return all(simplify(c * x - y) == 0 for x, y in zip(a, b))


def _charpoly3(m: Matrix):
    tr = simplify(el.trace(m))
    m2 = el.matmul(m, m)
    c2 = simplify((tr * tr - el.trace(m2)) / 2)
    d = el.det(m)
    return tr, c2, d  # x^3 - tr x^2 + c2 x - d


def phi_map(N: NijenhuisTensor) -> PhiMap:
    if not is_nondegenerate(N):
        raise DomainError("phi_map needs a non-degenerate Nijenhuis tensor")
    one, z = F(1), F(0)
    base = [[one, z, z], [z, one, z], [z, z, one]]
    for shift in ([one, one, one], [one, F(2), F(3)], [one, I, F(-1)]):
        qs = [phi_image(N, p) for p in base + [shift]]
        m = el.from_columns(qs[:3])
        if el.det(m) == 0:
            continue
        lam = el.solve(m, qs[3])
        sol = el.solve(el.from_columns(base), shift)
        # M = Q diag(lam) diag(sol)^-1 maps base_k to lam_k q_k and shift to q_4
        cols = [[simplify(lam[k] / sol[k] * v) for v in qs[k]] for k in range(3)]
        M = el.from_columns(cols)
        break
    else:
        raise DomainError("no general-position point set found")
    # round-trip: Phi must agree with M on an extra point
    probe = [one, F(-2), I]
    if not _proportional(el.matvec(M, probe), phi_image(N, probe)):
        raise InvariantError("Phi is not projective-linear on the probe point")
    a, b, c = _charpoly3(M)
    # discriminant of x^3 + p2 x^2 + p1 x + p0 with p2=-a, p1=b, p0=-c
    p2, p1, p0 = -a, b, -c
    disc = simplify(18 * p2 * p1 * p0 - 4 * p2 ** 3 * p0 + p2 ** 2 * p1 ** 2 - 4 * p1 ** 3 - 27 * p0 ** 2)
    coord_fixed = all(_proportional(e, el.matvec(M, e)) for e in base)
    if disc != 0:
        lines = None
        if coord_fixed:
            lines = [list(e) for e in base]
        report = "three distinct eigenvalues: exactly three fixed lines"
        return PhiMap(M, disc, lines, coord_fixed, report)
    diag = all(M[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    if diag:
        groups = {}
        for k in range(3):
            groups.setdefault(M[k][k], []).append(k)
        sizes = sorted(len(g) for g in groups.values())
        report = f"repeated eigenvalue, diagonal: eigenspace dimensions {sizes} (infinitely many fixed lines)"
    else:
        report = "repeated eigenvalue: infinite or defective fixed-point set"
    return PhiMap(M, disc, None, coord_fixed, report)


# homogeneous models ---------------------------------------------------------------

def nijenhuis_from_bracket(bracket_m: Callable[[int, int], list], J: ComplexStructureJ) -> NijenhuisTensor:
    """N on m from the m-part of the bracket of m-basis vectors.

    ``bracket_m(i, j)`` returns [e_i, e_j]_m; entries may be numbers or polynomials.
    """
    n = J.dim
    cache = {}

    def br(x, y):
        out = [0] * n
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0 or i == j:
                    continue
                key = (min(i, j), max(i, j))
                if key not in cache:
                    cache[key] = bracket_m(*key)
                v = cache[key]
                s = a * b if i < j else -(a * b)
                for k in range(n):
                    if not _is_zero(v[k]):
                        out[k] = out[k] + s * v[k]
        return out

    vals = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = [F(int(k == i)) for k in range(n)]
            y = [F(int(k == j)) for k in range(n)]
            jx, jy = J.apply(x), J.apply(y)
            t1 = br(jx, jy)
            t2 = br(x, y)
            t3 = J.apply(br(jx, y))
            t4 = J.apply(br(x, jy))
            v = [a - b - c - d for a, b, c, d in zip(t1, t2, t3, t4)]
            vals[i][j] = v
            vals[j][i] = [-a for a in v]
    return NijenhuisTensor(vals, J)


def _is_zero(v) -> bool:
    if hasattr(v, "is_zero") and not isinstance(v, FieldElement):
        return v.is_zero()
    return v == 0


def nijenhuis_of_model(q: QuotientSetup, J: ComplexStructureJ) -> NijenhuisTensor:
    rep_mats = _isotropy_matrices(q)
    for a in rep_mats:
        if el.commutator(a, J.J) != el.zeros(len(a), len(a)):
            raise InvariantError("J is not invariant under the isotropy action")
    N = nijenhuis_from_bracket(lambda i, j: q.bracket_m(_unit(q.m_dim, i), _unit(q.m_dim, j))[1], J)
    N.check()
    return N


def _unit(n, i):
    return [F(int(k == i)) for k in range(n)]


def _isotropy_matrices(q: QuotientSetup) -> List[Matrix]:
    from .liealg import quotient_rep

    return quotient_rep(q).rho


# nearly Kaehler test -----------------------------------------------------------------

def nabla_omega_map(q: QuotientSetup, J: ComplexStructureJ):
    """The linear map g -> (X,Y,Z) -> (nabla_X omega)(Y,Z) for J-Hermitian invariant g.

    Uses the Levi-Civita Nomizu map L(X)Y = 1/2 [X,Y]_m + U(X,Y),
    2 g(U(X,Y), Z) = g([Z,X]_m, Y) + g(X, [Z,Y]_m), and
    (nabla_X omega)(Y,Z) = g((L(X)J - J L(X)) Y, Z).
    Returns a function of g producing the n x n x n array.
    """
    n = q.m_dim
    brm = [[q.bracket_m(_unit(n, i), _unit(n, j))[1] for j in range(n)] for i in range(n)]

    def bracket(x, y):
        out = [F(0)] * n
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                for k, c in enumerate(brm[i][j]):
                    if c != 0:
                        out[k] += a * b * c
        return out

    Jm = J.J
    units = [_unit(n, i) for i in range(n)]
    jcols = [el.matvec(Jm, u) for u in units]

    def compute(g: Matrix):
        def gf(x, y):
            return _bilinear(g, x, y)

        out = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
        for x in range(n):
            X = units[x]
            for y in range(n):
                Y, JY = units[y], jcols[y]
                for z in range(n):
                    Z, JZ = units[z], jcols[z]
                    # g(L(X) J Y, Z) - g(J L(X) Y, Z) = g(L(X) JY, Z) + g(L(X) Y, JZ)
                    val = F(1, 2) * (gf(bracket(X, JY), Z) + gf(bracket(X, Y), JZ))
                    # g(U(X, W), Z) = 1/2 [g([Z,X]_m, W) + g(X, [Z,W]_m)]
                    val += F(1, 2) * (gf(bracket(Z, X), JY) + gf(X, bracket(Z, JY)))
                    val += F(1, 2) * (gf(bracket(JZ, X), Y) + gf(X, bracket(JZ, Y)))
                    out[x][y][z] = simplify(val)
        return out

    return compute


def is_hermitian(g: Matrix, J: ComplexStructureJ) -> bool:
    jt = el.transpose(J.J)
    return el.matmul(el.matmul(jt, g), J.J) == g


def isotropy_invariant_form(q: QuotientSetup, g: Matrix) -> bool:
    for a in _isotropy_matrices(q):
        if not el.is_zero(el.add(el.matmul(el.transpose(a), g), el.matmul(g, a))):
            return False
    return True


def classify_nabla_omega(t) -> str:
    n = len(t)
    if all(v == 0 for a in t for b in a for v in b):
        return "kahler"
    for x in range(n):
        for y in range(n):
            for z in range(n):
                v = t[x][y][z]
                if v != -t[y][x][z] or v != -t[x][z][y]:
                    return "neither"
    return "strict_nk"


def nearly_kahler_check(q: QuotientSetup, J: ComplexStructureJ, g: Matrix) -> str:
    """'kahler', 'strict_nk' or 'neither' for an invariant Hermitian metric g."""
    if not el.is_symmetric(g) or el.det(g) == 0:
        raise InvariantError("g must be a non-degenerate symmetric form")
    if not is_hermitian(g, J):
        raise InvariantError("g is not J-Hermitian")
    if not isotropy_invariant_form(q, g):
        raise InvariantError("g is not invariant under the isotropy")
    return classify_nabla_omega(nabla_omega_map(q, J)(g))
