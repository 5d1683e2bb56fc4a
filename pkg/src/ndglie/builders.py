"""Explicit matrix realizations of every algebra, subalgebra and homogeneous
setup used by the verification suites.

Conventions
-----------
* Complex 3x3 matrices act on C^3, realified in the frame
  (Re z1, Im z1, Re z2, Im z2, Re z3, Im z3); J0 is multiplication by i.
* su(1,2) is realized for the form diag(1, 1, -1).  Its parabolic and the
  parabolic's subalgebras are written in the null frame where the form is
  antidiag(1, 1, 1); the rational change of frame ``NULL_FRAME`` relates them.
* Real forms of B2 are so(G) = {X : X^T G + G X = 0} for a symmetric G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import exactlin as el
from .exactlin import Matrix
from .liealg import (
    CoordinateMap,
    Embedding,
    InvariantError,
    LieAlgebra,
    QuotientSetup,
    Representation,
    realify,
    semidirect_abelian,
)
from .scalars import I, Scalar

F = Fraction


def E(n: int, i: int, j: int, c: Scalar = 1) -> Matrix:
    m = el.zeros(n, n)
    m[i][j] = c if not isinstance(c, int) else F(c)
    return m


def msum(*mats: Matrix) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = el.add(out, m)
    return el.simplify_matrix(out)


def J0(n: int = 3) -> Matrix:
    return realify(el.scale(el.identity(n), I))


# unitary algebras -------------------------------------------------------------

def u_basis(eta: Sequence[int]) -> List[Matrix]:
    """Basis of u(F) for F = diag(eta): X* F + F X = 0."""
    n = len(eta)
    out = [E(n, k, k, I) for k in range(n)]
    for k in range(n):
        for l in range(k + 1, n):
            c = -eta[k] * eta[l]
            out.append(msum(E(n, k, l), E(n, l, k, c)))
            out.append(msum(E(n, k, l, I), E(n, l, k, I * (eta[k] * eta[l]))))
    return out


def su_basis(eta: Sequence[int]) -> List[Matrix]:
    n = len(eta)
    out = [msum(E(n, k, k, I), E(n, k + 1, k + 1, -I)) for k in range(n - 1)]
    return out + u_basis(eta)[n:]


def embed_block(m: Matrix, n: int, offset: int) -> Matrix:
    out = el.zeros(n, n)
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            out[offset + i][offset + j] = v
    return out


def _trace_compensate(block: Matrix, n: int, offset: int, free: int) -> Matrix:
    """Embed a k x k block and put minus its trace on the free diagonal slot."""
    m = embed_block(block, n, offset)
    m[free][free] = m[free][free] - el.trace(block)
    return el.simplify_matrix(m)


# NULL_FRAME maps null-frame coordinates to diag(1,1,-1)-frame coordinates:
# f1 = e1 + e3, f2 = e2, f3 = (e1 - e3)/2.
NULL_FRAME: Matrix = [[F(1), F(0), F(1, 2)], [F(0), F(1), F(0)], [F(1), F(0), F(-1, 2)]]
NULL_FORM: Matrix = [[F(0), F(0), F(1)], [F(0), F(1), F(0)], [F(1), F(0), F(0)]]


def to_diag_frame(x: Matrix) -> Matrix:
    return el.simplify_matrix(el.matmul(el.matmul(NULL_FRAME, x), el.inverse(NULL_FRAME)))


def parabolic_basis() -> Dict[str, Matrix]:
    """Graded basis of the parabolic of su(1,2), complex 3x3 in the null frame.

    s is the grading element (degrees 0,0,1,1,2 for s,u,p1a,p1b,p2).
    """
    n = 3
    return {
        "s": msum(E(n, 0, 0), E(n, 2, 2, -1)),
        "u": msum(E(n, 0, 0, I), E(n, 1, 1, -2 * I), E(n, 2, 2, I)),
        "p1a": msum(E(n, 0, 1), E(n, 1, 2, -1)),
        "p1b": msum(E(n, 0, 1, I), E(n, 1, 2, I)),
        "p2": E(n, 0, 2, I),
    }


PARABOLIC_DEGREES = {"s": 0, "u": 0, "p1a": 1, "p1b": 1, "p2": 2}

SOLVABLE_ISOTROPY = {
    "p_su12": ["s", "u", "p1a", "p1b", "p2"],
    "r_s": ["s", "p1a", "p1b", "p2"],
    "r_u": ["u", "p1a", "p1b", "p2"],
    "r_gen": ["s+u", "p1a", "p1b", "p2"],
    "l0": ["p1a", "p1b", "p2"],
    "l1": ["s", "p1a", "p2"],
    "l2": ["s", "u", "p2"],
}


def _parabolic_element(name: str) -> Matrix:
    pb = parabolic_basis()
    return msum(*[pb[t] for t in name.split("+")])


def complex_isotropy(name: str) -> Tuple[List[str], List[Matrix], str]:
    """(labels, complex 3x3 matrices, ambient) for every isotropy candidate on C^3."""
    if name in SOLVABLE_ISOTROPY:
        labels = SOLVABLE_ISOTROPY[name]
        return labels, [_parabolic_element(t) for t in labels], "su12"
    if name in ("u2_su3", "u2_su12"):
        eta = (1, 1) if name == "u2_su3" else (1, 1)
        mats = [_trace_compensate(b, 3, 0, 2) for b in u_basis(eta)]
        return [f"u{k}" for k in range(4)], mats, name.split("_")[1]
    if name in ("su2_su3", "su2_su12"):
        mats = [embed_block(b, 3, 0) for b in su_basis((1, 1))]
        return [f"su{k}" for k in range(3)], mats, name.split("_")[1]
    if name == "u11_su12":
        mats = [_trace_compensate(b, 3, 1, 0) for b in u_basis((1, -1))]
        return [f"u{k}" for k in range(4)], mats, "su12"
    if name == "su11_su12":
        mats = [embed_block(b, 3, 1) for b in su_basis((1, -1))]
        return [f"su{k}" for k in range(3)], mats, "su12"
    if name == "su3":
        mats = su_basis((1, 1, 1))
        return [f"x{k}" for k in range(8)], mats, "su3"
    if name == "su12":
        mats = su_basis((1, 1, -1))
        return [f"x{k}" for k in range(8)], mats, "su12"
    raise KeyError(name)


REDUCTIVE_ISOTROPY = ["u2_su3", "u2_su12", "u11_su12", "su2_su3", "su2_su12", "su11_su12", "su3", "su12"]


def ambient_unitary(name: str) -> LieAlgebra:
    eta = (1, 1, 1) if name == "su3" else (1, 1, -1)
    mats = [realify(m) for m in su_basis(eta)]
    return LieAlgebra.from_matrices(name, mats, [f"x{k}" for k in range(8)])


def isotropy_setup(name: str) -> Tuple[LieAlgebra, Representation, Embedding]:
    """Isotropy algebra h on m = C^3 and its embedding into su(3) or su(1,2)."""
    labels, cmats, amb_name = complex_isotropy(name)
    diag_frame = [to_diag_frame(m) for m in cmats] if name in SOLVABLE_ISOTROPY else cmats
    rmats = [realify(m) for m in cmats]
    h = LieAlgebra.from_matrices(name, rmats, labels)
    rep = Representation(h, 6, rmats, f"C3|{name}")
    amb = ambient_unitary(amb_name)
    amb_mats = [realify(m) for m in su_basis((1, 1, 1) if amb_name == "su3" else (1, 1, -1))]
    cm = CoordinateMap([el.flatten(m) for m in amb_mats])
    cols = [cm(el.flatten(realify(m))) for m in diag_frame]
    if any(c is None for c in cols):
        raise InvariantError(f"{name} is not inside {amb_name}")
    return h, rep, Embedding(h, amb, el.from_columns(cols))


def split_setup(name: str) -> QuotientSetup:
    """g = h + m with [m, m] = 0: the base bracket theta for the Jacobi analysis."""
    h, rep, _ = isotropy_setup(name)
    return semidirect_abelian(h, rep, f"{name}_split")


# orthogonal algebras ----------------------------------------------------------

def so_basis(g: Matrix) -> Tuple[List[Matrix], List[str]]:
    """Basis G^{-1}(E_ij - E_ji), i < j, of so(G)."""
    n = len(g)
    ginv = el.inverse(g)
    mats, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(el.simplify_matrix(el.matmul(ginv, el.sub(E(n, i, j), E(n, j, i)))))
            labels.append(f"M{i}{j}")
    return mats, labels


def in_so(x: Matrix, g: Matrix) -> bool:
    return el.is_zero(el.add(el.matmul(el.transpose(x), g), el.matmul(g, x)))


@dataclass
class MatrixAlgebra:
    """A matrix Lie algebra with a fixed basis, used to build embeddings."""

    name: str
    mats: List[Matrix]
    labels: List[str]
    form: Optional[Matrix] = None
    alg: LieAlgebra = field(init=False)

    def __post_init__(self):
        self.alg = LieAlgebra.from_matrices(self.name, self.mats, self.labels)
        self._coords = CoordinateMap([el.flatten(m) for m in self.mats])

    def coords(self, x: Matrix):
        c = self._coords(el.flatten(x))
        if c is None:
            raise InvariantError(f"matrix is not in {self.name}")
        return c

    def embedding(self, sub: "MatrixAlgebra") -> Embedding:
        inc = el.from_columns([self.coords(m) for m in sub.mats])
        return Embedding(sub.alg, self.alg, inc)

    def trace_complement(self, sub: "MatrixAlgebra") -> Matrix:
        """Columns spanning the trace-form orthogonal complement of sub."""
        rows = [[el.trace(el.matmul(x, b)) for b in self.mats] for x in sub.mats]
        return el.from_columns(el.kernel_basis(rows, len(self.mats)))

    def coordinate_complement(self, sub: "MatrixAlgebra") -> Matrix:
        cols = [self.coords(m) for m in sub.mats]
        return el.from_columns(el.complete_basis(cols, len(self.mats)))


def so_algebra(name: str, g: Matrix) -> MatrixAlgebra:
    mats, labels = so_basis(g)
    return MatrixAlgebra(name, mats, labels, g)


MODEL_FORMS = {
    "so5": [1, 1, 1, 1, 1],
    "so14": [-1, 1, 1, 1, 1],
    "so23": [-1, 1, 1, -1, -1],
}
MODEL_HERMITIAN = {"so5": (1, 1), "so14": (1, 1), "so23": (1, -1)}
MODELS = {"so5_u2": "so5", "so14_u2": "so14", "so23_u11": "so23"}


def model_isotropy(amb: str) -> MatrixAlgebra:
    """u(2) or u(1,1) acting on R + V, V = C^2, inside so(G)."""
    eta = MODEL_HERMITIAN[amb]
    mats = [embed_block(realify(b), 5, 1) for b in u_basis(eta)]
    name = "u2" if eta == (1, 1) else "u11"
    return MatrixAlgebra(name, mats, ["c", "d", "re", "im"])


def model_setup(name: str) -> QuotientSetup:
    amb_name = MODELS[name]
    g = so_algebra(amb_name, el.diag([F(v) for v in MODEL_FORMS[amb_name]]))
    h = model_isotropy(amb_name)
    emb = g.embedding(h)
    return QuotientSetup(emb, g.trace_complement(h), name=name)


def model_reference_module(name: str) -> Representation:
    """V + C with h acting on C through the complex trace."""
    amb_name = MODELS[name]
    eta = MODEL_HERMITIAN[amb_name]
    h = model_isotropy(amb_name)
    mats = []
    for b in u_basis(eta):
        tr = el.trace(b)
        mats.append(el.block_diag(realify(b), realify([[tr]])))
    return Representation(h.alg, 6, mats, f"V+C|{h.name}")


# sp(4,R) = so(3,2) and sp(1,1) = so(4,1) ------------------------------------

SP4R_FORM = [[F(int(i + j == 4)) for j in range(5)] for i in range(5)]
SP11_FORM = [[F(int((i, j) in ((0, 4), (4, 0)) or (i == j and 0 < i < 4))) for j in range(5)]
             for i in range(5)]


def root_vector(k: int, l: int) -> Matrix:
    """Root vector of so(3,2) in the null basis (b1, b2, b0, b2', b1')."""
    return el.sub(E(5, k, l), E(5, 4 - l, 4 - k))


def _scale_to(x: Matrix, target: Matrix) -> Scalar:
    """c with c * x == target, or error."""
    fx, ft = el.flatten(x), el.flatten(target)
    k = next(i for i, v in enumerate(fx) if v != 0)
    c = ft[k] / fx[k]
    if el.flatten(el.scale(x, c)) != ft:
        raise InvariantError("matrices are not proportional")
    return c


def sp4r_elements() -> Dict[str, Matrix]:
    """Named elements of so(3,2): Cartan diag(a, b, 0, -b, -a).

    sl2 on the roots +-b: e, h0, f with [e,f]=h0, [h0,e]=e, [h0,f]=-f.
    sl2' on the roots +-(a-b): e', h', f'.  s2 grades p2 (|1|), s1 = h0 + s2 grades p1 (|2|).
    ad(sl2) is the s2-degree-one part, identified with sl2 by f -> f1, h -> h1 = [e, f1],
    e -> e1 = -[e, h1].
    """
    d = lambda *v: el.diag([F(x) for x in v])
    out = {
        "s2": d(1, 0, 0, 0, -1),
        "h0": d(0, 1, 0, -1, 0),
        "s1": d(1, 1, 0, -1, -1),
        "hp": d(F(1, 2), F(-1, 2), 0, F(1, 2), F(-1, 2)),
        "e": root_vector(1, 2),
        "ep": root_vector(0, 1),
        "Ra": root_vector(0, 2),
        "Rb": root_vector(1, 2),
        "Rab": root_vector(0, 3),
        "Ramb": root_vector(0, 1),
    }
    f = root_vector(2, 1)
    out["f"] = el.scale(f, _scale_to(el.commutator(out["e"], f), out["h0"]))
    fp = root_vector(1, 0)
    out["fp"] = el.scale(fp, _scale_to(el.commutator(out["ep"], fp), out["hp"]))
    out["f1"] = root_vector(0, 1)
    out["h1"] = el.commutator(out["e"], out["f1"])
    out["e1"] = el.scale(el.commutator(out["e"], out["h1"]), -1)
    out["t"] = el.sub(out["e"], out["f"])
    out["tp"] = el.sub(out["ep"], out["fp"])
    return {k: el.simplify_matrix(v) for k, v in out.items()}


def sp11_elements() -> Dict[str, Matrix]:
    """so(4,1) in the null basis (b1, c1, c2, c3, b1'): s grades p2, r_ij rotate c's."""
    out = {"s": el.diag([F(1), F(0), F(0), F(0), F(-1)])}
    for c in (1, 2, 3):
        out[f"x{c}"] = el.sub(E(5, 0, c), E(5, c, 4))
    for a, b in ((1, 2), (1, 3), (2, 3)):
        out[f"r{a}{b}"] = el.sub(E(5, a, b), E(5, b, a))
    out["t"] = out["r12"]
    return out


def lambda_label(lam: Fraction) -> str:
    lam = F(lam)
    body = str(lam).replace("/", "_").replace("-", "m")
    return f"s2_ad_sl2_lam{body}"


S2_FAMILY_SAMPLES = [F(-1), F(0), F(1, 2), F(3), F(5)]


def orbit_subalgebras() -> Dict[str, Tuple[str, List[str]]]:
    """name -> (ambient, element names); '+' and '*' build combinations."""
    table = {
        "p2_sp4r": ("sp4r", ["s2", "h0", "e", "f", "f1", "h1", "e1"]),
        "p1_sp4r": ("sp4r", ["s1", "hp", "ep", "fp", "Ra", "Rb", "Rab"]),
        "sl2_ad_sl2": ("sp4r", ["e", "h0", "f", "f1", "h1", "e1"]),
        "sl2_heis3": ("sp4r", ["ep", "hp", "fp", "Ra", "Rb", "Rab"]),
        "p12_sp4r": ("sp4r", ["s2", "h0", "e", "f1", "h1", "e1"]),
        "t_s2_ad": ("sp4r", ["t", "s2", "f1", "h1", "e1"]),
        "k_s2_ad_hyp": ("sp4r", ["h0", "s2", "f1", "h1", "e1"]),
        "k_s2_ad_nil": ("sp4r", ["e", "s2", "f1", "h1", "e1"]),
        "b2_s2_adb2": ("sp4r", ["e", "h0", "s2", "e1", "h1"]),
        "gl2_r": ("sp4r", ["s1", "hp", "ep", "fp", "Rab"]),
        "t_s1_heis": ("sp4r", ["tp", "s1", "Ra", "Rb", "Rab"]),
        "k_s1_heis_hyp": ("sp4r", ["hp", "s1", "Ra", "Rb", "Rab"]),
        "k_s1_heis_nil": ("sp4r", ["ep", "s1", "Ra", "Rb", "Rab"]),
        "p2_sp11": ("sp11", ["s", "r12", "r13", "r23", "x1", "x2", "x3"]),
        "su2_r3": ("sp11", ["r12", "r13", "r23", "x1", "x2", "x3"]),
        "t_s_r3": ("sp11", ["t", "s", "x1", "x2", "x3"]),
    }
    for lam in S2_FAMILY_SAMPLES:
        table[lambda_label(lam)] = ("sp4r", ["e", f"h0+{lam}*s2", "e1", "h1", "f1"])
    return table


# Killing-norm markers of the distinguished element (first basis element).
KILLING_MARKERS = {
    "t_s2_ad": -1, "k_s2_ad_hyp": 1, "k_s2_ad_nil": 0,
    "t_s1_heis": -1, "k_s1_heis_hyp": 1, "k_s1_heis_nil": 0, "t_s_r3": -1,
}


def _element(elements: Dict[str, Matrix], expr: str) -> Matrix:
    total = None
    for term in expr.split("+"):
        if "*" in term:
            c, nm = term.split("*")
            m = el.scale(elements[nm], F(c))
        else:
            m = elements[term]
        total = m if total is None else el.add(total, m)
    return el.simplify_matrix(total)


def orbit_ambient(name: str) -> MatrixAlgebra:
    if name == "sp4r":
        return so_algebra("sp4r", SP4R_FORM)
    if name == "sp11":
        return so_algebra("sp11", SP11_FORM)
    raise KeyError(name)


def orbit_setup(name: str) -> QuotientSetup:
    amb_name, exprs = orbit_subalgebras()[name]
    amb = orbit_ambient(amb_name)
    elements = sp4r_elements() if amb_name == "sp4r" else sp11_elements()
    mats = [_element(elements, x) for x in exprs]
    sub = MatrixAlgebra(name, mats, exprs)
    return QuotientSetup(amb.embedding(sub), amb.coordinate_complement(sub), name=name)


# maximal semi-simple subalgebras ---------------------------------------------

# R^4 = M_2(R) with quadratic form det, written in coordinates y where the
# form is diag(-1, 1, 1, -1); together with a trivial negative line this is so(2,3).
_M2_TO_Y = [  # y = P m, m = (m11, m12, m21, m22)
    [F(1, 2), F(0), F(0), F(-1, 2)],
    [F(1, 2), F(0), F(0), F(1, 2)],
    [F(0), F(1, 2), F(-1, 2), F(0)],
    [F(0), F(1, 2), F(1, 2), F(0)],
]


def _m2_action(a: Matrix, b: Matrix) -> Matrix:
    """Matrix of M -> A M - M B on M_2(R) in the coordinates (m11, m12, m21, m22)."""
    cols = []
    for k in range(4):
        m = [[F(int(k == 0)), F(int(k == 1))], [F(int(k == 2)), F(int(k == 3))]]
        r = el.sub(el.matmul(a, m), el.matmul(m, b))
        cols.append([r[0][0], r[0][1], r[1][0], r[1][1]])
    return el.from_columns(cols)


def _so22_in_so23(a: Matrix, b: Matrix) -> Matrix:
    p = _M2_TO_Y
    x = el.matmul(el.matmul(p, _m2_action(a, b)), el.inverse(p))
    return el.simplify_matrix(embed_block(x, 5, 0))


def _sl2_basis() -> List[Matrix]:
    return [[[F(0), F(1)], [F(0), F(0)]], [[F(1, 2), F(0)], [F(0), F(-1, 2)]],
            [[F(0), F(0)], [F(1), F(0)]]]


SEMISIMPLE = {
    "so4_so5": ("so5", [1, 1, 1, 1, 1]),
    "so13_so14": ("so14", [-1, 1, 1, 1, 1]),
    "so22_so23": ("so23", [-1, 1, 1, -1, -1]),
    "p1_so22": ("so23", [-1, 1, 1, -1, -1]),
}


def semisimple_setup(name: str) -> QuotientSetup:
    amb_name, form = SEMISIMPLE[name]
    g = so_algebra(amb_name, el.diag([F(v) for v in form]))
    z = el.zeros(2, 2)
    if name in ("so4_so5", "so13_so14"):
        mats = [embed_block(m, 5, 0) for m in so_basis(el.diag([F(v) for v in form[:4]]))[0]]
        sub = MatrixAlgebra(name, mats, so_basis(el.identity(4))[1])
        return QuotientSetup(g.embedding(sub), g.trace_complement(sub), name=name)
    sl2 = _sl2_basis()
    if name == "so22_so23":
        mats = [_so22_in_so23(a, z) for a in sl2] + [_so22_in_so23(z, b) for b in sl2]
        labels = ["eL", "hL", "fL", "eR", "hR", "fR"]
    else:
        mats = [_so22_in_so23(a, z) for a in sl2[:2]] + [_so22_in_so23(z, b) for b in sl2]
        labels = ["eL", "hL", "eR", "hR", "fR"]
    for m in mats:
        if not in_so(m, g.form):
            raise InvariantError("M_2 action is not orthogonal")
    sub = MatrixAlgebra(name, mats, labels)
    comp = g.trace_complement(sub) if name == "so22_so23" else g.coordinate_complement(sub)
    return QuotientSetup(g.embedding(sub), comp, name=name)


def sl2c_spinor() -> Representation:
    """sl2(C) as a real 6-dim algebra acting on C^2 = R^4."""
    mats = []
    for b in _sl2_basis():
        mats.append(realify(b))
        mats.append(realify(el.scale(b, I)))
    alg = LieAlgebra.from_matrices("sl2c", mats, ["e", "h", "f", "ie", "ih", "if"])
    return Representation(alg, 4, mats, "C2|sl2c")


def sl2_su2_rep(parts: Sequence[Tuple[str, int]]) -> Representation:
    """sl2(R) + su(2) acting on a direct sum of (factor, dim) irreducible pieces.

    Pieces: ("sl2", 2) standard, ("su2", 3) adjoint, ("triv", 1) trivial.
    """
    sl2 = _sl2_basis()
    su2 = [[[F(0), F(0), F(0)], [F(0), F(0), F(-1)], [F(0), F(1), F(0)]],
           [[F(0), F(0), F(1)], [F(0), F(0), F(0)], [F(-1), F(0), F(0)]],
           [[F(0), F(-1), F(0)], [F(1), F(0), F(0)], [F(0), F(0), F(0)]]]
    gens = []
    for k in range(6):
        blocks = []
        for kind, dim in parts:
            if kind == "sl2" and k < 3:
                blocks.append(sl2[k])
            elif kind == "su2" and k >= 3:
                blocks.append(su2[k - 3])
            else:
                blocks.append(el.zeros(dim, dim))
        gens.append(el.block_diag(*blocks))
    alg = LieAlgebra.from_matrices(
        "sl2+su2",
        [el.block_diag(sl2[k], el.zeros(3, 3)) if k < 3 else el.block_diag(el.zeros(2, 2), su2[k - 3])
         for k in range(6)],
        ["e", "h", "f", "r1", "r2", "r3"],
    )
    return Representation(alg, sum(d for _, d in parts), gens, "+".join(k for k, _ in parts))
