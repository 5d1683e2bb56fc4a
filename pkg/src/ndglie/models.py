"""The three homogeneous models and the orbit exclusion checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import builders as b
from . import exactlin as el
from .exactlin import Matrix
from .invariants import (
    antilinear_two_forms,
    dual,
    eigenspaces,
    generated_submodule,
    has_simple_real_spectrum,
    hom_rep,
    invariant_complex_structures,
    invariant_space,
    is_isomorphic,
    nilpotent_obstruction,
    real_spectrum,
    submodules,
    sym2,
    sym2_vector_to_matrix,
    wedge2,
)
from .liealg import QuotientSetup, Representation, quotient_module, quotient_rep, restrict_rep
from .nijenhuis import (
    ComplexStructureJ,
    is_hermitian,
    is_nondegenerate,
    nabla_omega_map,
    nijenhuis_of_model,
)
from .report import VerificationReport

F = Fraction

EXPECTED_SIGNATURE = {"so5_u2": (6, 0, 0), "so14_u2": (4, 2, 0), "so23_u11": (4, 2, 0)}
AMBIENT_SIGNATURE = {"so5_u2": (5, 0, 0), "so14_u2": (4, 1, 0), "so23_u11": (2, 3, 0)}


def build_model(name: str) -> QuotientSetup:
    q = b.model_setup(name)
    if q.g.dim - q.h.dim != 6:
        raise AssertionError("model quotient is not 6-dimensional")
    if not is_isomorphic(quotient_rep(q), b.model_reference_module(name)).isomorphic:
        raise AssertionError(f"{name}: isotropy module is not V + C")
    return q


def enumerate_invariant_acs(q: QuotientSetup) -> List[ComplexStructureJ]:
    res = invariant_complex_structures(quotient_rep(q))
    if res.status != "finite" or res.irrational_real:
        raise ValueError(f"unexpected complex structure search result: {res.status}")
    return [ComplexStructureJ(m) for m in res.structures]


def invariant_metrics(q: QuotientSetup) -> List[Matrix]:
    """Basis of the invariant symmetric bilinear forms on m."""
    rep = quotient_rep(q)
    return [sym2_vector_to_matrix(v, rep.dim) for v in invariant_space(sym2(dual(rep)))]


def normalize_sign(g: Matrix) -> Matrix:
    """Overall sign making the positive index at least the negative one."""
    p, n, _ = el.signature(g)
    return el.scale(g, -1) if n > p else g


@dataclass
class HermitianMetricLines:
    kahler: List[Matrix]        # g with nabla omega = 0
    nearly_kahler: List[Matrix]  # g with nabla omega totally skew


def special_metrics(q: QuotientSetup, J: ComplexStructureJ) -> HermitianMetricLines:
    """Invariant J-Hermitian metrics that are Kaehler or nearly Kaehler.

    nabla omega is linear in g, so both conditions are linear on the space of
    invariant Hermitian forms.
    """
    herm = [g for g in invariant_metrics(q) if is_hermitian(g, J)]
    if not herm:
        return HermitianMetricLines([], [])
    T = nabla_omega_map(q, J)
    ts = [T(g) for g in herm]
    n = q.m_dim
    idx = [(x, y, z) for x in range(n) for y in range(n) for z in range(n)]
    kah = [[t[x][y][z] for t in ts] for x, y, z in idx]
    nk = [[t[x][y][z] + t[y][x][z] for t in ts] for x, y, z in idx]

    def lines(rows):
        out = []
        for c in el.kernel_basis(rows, len(herm)):
            g = el.simplify_matrix(el.linear_combination(c, herm))
            if el.det(g) != 0:
                out.append(normalize_sign(g))
        return out

    return HermitianMetricLines(lines(kah), lines(nk))


@dataclass
class StructureSummary:
    J: ComplexStructureJ
    n_zero: bool
    nondegenerate: bool
    kind: str
    signature: Optional[Tuple[int, int, int]]


def analyse_structure(q: QuotientSetup, J: ComplexStructureJ) -> StructureSummary:
    from .nijenhuis import nearly_kahler_check

    N = nijenhuis_of_model(q, J)
    lines = special_metrics(q, J)
    found = lines.kahler or lines.nearly_kahler
    if not found:
        return StructureSummary(J, N.is_zero(), is_nondegenerate(N), "neither", None)
    g = found[0]
    return StructureSummary(J, N.is_zero(), is_nondegenerate(N), nearly_kahler_check(q, J, g),
                            el.signature(g))


def verify_model(name: str) -> VerificationReport:
    rep = VerificationReport()
    q = build_model(name)
    amb = b.MODELS[name]
    form = el.diag([F(v) for v in b.MODEL_FORMS[amb]])
    sig = el.signature(form)
    rep.add(f"models/{name}/ambient-signature", "signature of the defining form",
            AMBIENT_SIGNATURE[name], sig)
    rep.add(f"models/{name}/dims", "dim g, dim h, dim m", (10, 4, 6), (q.g.dim, q.h.dim, q.m_dim))
    structures = enumerate_invariant_acs(q)
    rep.add(f"models/{name}/acs-count", "invariant almost complex structures", 4, len(structures))
    closed = all(any(el.scale(J.J, -1) == K.J for K in structures) for J in structures)
    rep.add(f"models/{name}/acs-sign-symmetry", "J -> -J preserves the set", True, closed)
    summaries = [analyse_structure(q, J) for J in structures]
    kahler = [s for s in summaries if s.kind == "kahler"]
    snk = [s for s in summaries if s.kind == "strict_nk"]
    rep.add(f"models/{name}/kahler-pair", "one +- pair is Kaehler with N = 0",
            2, len([s for s in kahler if s.n_zero]))
    rep.add(f"models/{name}/snk-pair", "one +- pair is strictly nearly Kaehler with non-degenerate N",
            2, len([s for s in snk if s.nondegenerate]))
    sigs = sorted({s.signature for s in summaries if s.signature})
    rep.add(f"models/{name}/metric-signature", "signature of the nearly Kaehler metric",
            EXPECTED_SIGNATURE[name], snk[0].signature if snk else None)
    rep.add(f"models/{name}/same-signature", "Kaehler and nearly Kaehler metrics share the signature",
            [EXPECTED_SIGNATURE[name]], sigs)
    return rep


# orbit exclusions ------------------------------------------------------------------

def _isotropy_rep(name: str) -> Representation:
    return b.isotropy_setup(name)[1]


def _grading_index(rep: Representation, label: str) -> int:
    return list(rep.alg.labels).index(label)


def intransitive_checks(report: VerificationReport) -> None:
    """Codimension-one/two orbit candidates: the grading element moves m/t."""
    for name, tdim in (("p_su12", 4), ("r_s", 5)):
        rep = _isotropy_rep(name)
        s = rep.rho[_grading_index(rep, "s")]
        # s acts trivially on m/t iff im(s) is inside t, iff the submodule it generates is
        gen = generated_submodule(rep, el.span_basis(el.columns(s)))
        report.add(f"orbits/intransitive/{name}/t{tdim}",
                   "grading element acts non-trivially on m/t for every submodule t of this dimension",
                   f"> {tdim}", len(gen), ok=len(gen) > tdim)
        search = submodules(rep, tdim)
        actions = []
        for t in search.found:
            qrep, _ = quotient_module(rep, t)
            actions.append(not el.is_zero(qrep.rho[_grading_index(rep, "s")]))
        report.add(f"orbits/intransitive/{name}/t{tdim}-examples",
                   "explicit submodules of this dimension exist and s acts non-trivially on each quotient",
                   True, bool(actions) and all(actions))


TOTALLY_REAL = ("p2_sp11", "p2_sp4r", "p1_sp4r")


def totally_real_checks(report: VerificationReport) -> None:
    for name in TOTALLY_REAL:
        r = quotient_rep(b.orbit_setup(name))
        dim = len(invariant_space(hom_rep(wedge2(r), r)))
        report.add(f"orbits/totally-real/{name}", "invariant maps Lambda^2 t -> t on the 3D isotropy module",
                   0, dim)


def _no_j_on_submodules(rep: Representation, k: int):
    """(number of k-dim submodules, how many carry an invariant J, search complete)."""
    search = submodules(rep, k)
    with_j = 0
    for L in search.found:
        if invariant_complex_structures(restrict_rep(rep, L)).exists:
            with_j += 1
    return len(search.found), with_j, search.complete


COMPLEX_DISTRIBUTION_CASES = {
    # name: (dimension of the complex distribution L, expected to carry a J)
    "p2_sp11": (2, False), "p2_sp4r": (2, False), "p1_sp4r": (2, False),
    "sl2_ad_sl2": (2, False), "su2_r3": (2, False), "sl2_heis3": (2, False), "p12_sp4r": (2, False),
    "k_s2_ad_hyp": (4, False), "k_s2_ad_nil": (4, False), "b2_s2_adb2": (4, False), "gl2_r": (4, False),
    "k_s1_heis_hyp": (4, False), "k_s1_heis_nil": (4, False),
    "t_s2_ad": (4, True), "t_s1_heis": (4, True), "t_s_r3": (4, True),
}
CARTAN_CASES = {"p12_sp4r": ("h0", "s2"), "k_s2_ad_hyp": ("h0", "s2"),
                "b2_s2_adb2": ("h0", "s2"), "gl2_r": ("s1", "hp")}
NILPOTENT_CASES = {"k_s2_ad_nil": ("s2", "e"), "k_s1_heis_nil": ("s1", "ep")}
SIMPLE_SPECTRUM_CASES = {"k_s1_heis_hyp": "hp"}


def _labels(name: str) -> List[str]:
    return b.orbit_subalgebras()[name][1]


def complex_distribution_checks(report: VerificationReport) -> None:
    cases = dict(COMPLEX_DISTRIBUTION_CASES)
    for lam in b.S2_FAMILY_SAMPLES:
        cases[b.lambda_label(lam)] = (4, False)
    for name, (k, has_j) in cases.items():
        rep = quotient_rep(b.orbit_setup(name))
        count, with_j, complete = _no_j_on_submodules(rep, k)
        expected = "some" if has_j else 0
        ok = complete and ((with_j > 0) if has_j else with_j == 0)
        report.add(f"orbits/complex-distribution/{name}",
                   f"{k}D submodules of the isotropy module carrying an invariant complex structure",
                   expected, f"{with_j} of {count}", ok=ok)
    for name, (x, y) in CARTAN_CASES.items():
        rep = quotient_rep(b.orbit_setup(name))
        labels = _labels(name)
        found = _simple_cartan_element(rep, labels.index(x), labels.index(y))
        report.add(f"orbits/cartan-spectrum/{name}",
                   "a Cartan element of h has simple real spectrum on the isotropy module",
                   True, found is not None)
    for name, (grading, nil) in NILPOTENT_CASES.items():
        rep = quotient_rep(b.orbit_setup(name))
        labels = _labels(name)
        L = submodules(rep, 4).found
        reasons = []
        if len(L) == 1:
            sub = restrict_rep(rep, L[0])
            s = sub.rho[labels.index(grading)]
            k = sub.rho[labels.index(nil)]
            spaces = [v for _, v in eigenspaces(s)]
            if [len(v) for v in spaces] == [2, 2]:
                reasons = [nilpotent_obstruction([k], v) for v in spaces]
        report.add(f"orbits/nilpotent/{name}",
                   "the unique 4D submodule splits into two grading eigenplanes with k nilpotent on one",
                   True, bool(reasons) and any(r is not None for r in reasons))
    for name, elem in SIMPLE_SPECTRUM_CASES.items():
        rep = quotient_rep(b.orbit_setup(name))
        L = submodules(rep, 4).found
        ok = len(L) == 1 and has_simple_real_spectrum(restrict_rep(rep, L[0]).rho[_labels(name).index(elem)])
        report.add(f"orbits/simple-spectrum/{name}", "k has simple real spectrum on the unique 4D submodule",
                   True, ok)
    for lam in b.S2_FAMILY_SAMPLES:
        name = b.lambda_label(lam)
        rep = quotient_rep(b.orbit_setup(name))
        L = submodules(rep, 4).found
        # at lambda = 0 the spectrum is not simple, but a simple real eigenvalue remains
        ok = len(L) == 1 and _odd_real_eigenvalue(restrict_rep(rep, L[0]).rho[1])
        report.add(f"orbits/odd-eigenvalue/{name}",
                   "h0 + lambda s2 has a real eigenvalue of odd multiplicity on the unique 4D submodule",
                   True, ok)
    for name in ("t_s2_ad", "t_s1_heis", "t_s_r3"):
        rep = quotient_rep(b.orbit_setup(name))
        L = submodules(rep, 4).found
        dim = None
        if len(L) == 1:
            sub = restrict_rep(rep, L[0])
            dim = len(invariant_space(hom_rep(wedge2(sub), sub)))
        report.add(f"orbits/two-forms/{name}", "invariant L-valued 2-forms on the unique 4D submodule L",
                   0, dim)
        lines = submodules(rep, 1)
        report.add(f"orbits/transversal/{name}", "invariant lines in the 5D isotropy module",
                   0, lines.count)


def _odd_real_eigenvalue(m) -> bool:
    return any(mult % 2 for _, mult in real_spectrum(m))


def _simple_cartan_element(rep: Representation, i: int, j: int) -> Optional[Tuple[int, int]]:
    for a in range(1, 4):
        for c in range(-3, 4):
            m = el.add(el.scale(rep.rho[i], a), el.scale(rep.rho[j], c))
            if has_simple_real_spectrum(m):
                return a, c
    return None


def semisimple_checks(report: VerificationReport) -> None:
    for name in ("so4_so5", "so22_so23", "so13_so14"):
        rep = quotient_rep(b.semisimple_setup(name))
        res = invariant_complex_structures(rep)
        report.add(f"orbits/semisimple/{name}/acs", "invariant complex structures on the 4D isotropy module",
                   "none", res.status)
    spinor = b.sl2c_spinor()
    res = invariant_complex_structures(spinor)
    report.add("orbits/semisimple/sl2c-spinor/acs", "sl2(C) on C^2 preserves a complex structure",
               True, bool(res.structures))
    subs = [submodules(spinor, k).count for k in (1, 2, 3)]
    report.add("orbits/semisimple/sl2c-spinor/irreducible", "proper submodules of C^2 as a real module",
               [0, 0, 0], subs)
    forms = [len(antilinear_two_forms(spinor, J)) for J in res.structures]
    report.add("orbits/semisimple/sl2c-spinor/nijenhuis-like",
               "invariant antilinear maps Lambda^2 L -> L for each invariant J", [0] * len(forms), forms)
    rep = quotient_rep(b.semisimple_setup("p1_so22"))
    L = submodules(rep, 4).found
    status = invariant_complex_structures(restrict_rep(rep, L[0])).status if len(L) == 1 else "no unique R^4"
    report.add("orbits/semisimple/p1_so22/acs", "invariant complex structures on the R^4 summand",
               "none", status)
    five = b.sl2_su2_rep([("sl2", 2), ("su2", 3)])
    forms = [sym2_vector_to_matrix(v, 5) for v in invariant_space(sym2(dual(five)))]
    nondeg = _span_has_nondegenerate(forms) if forms else False
    report.add("orbits/semisimple/sl2-su2-5d", "non-degenerate invariant metric on R^2 + R^3",
               False, nondeg)


def _span_has_nondegenerate(forms: List[Matrix]) -> bool:
    from .poly import MultiPoly, poly_det

    names = tuple(f"x{i}" for i in range(len(forms)))
    xs = MultiPoly.gens(names)
    n = len(forms[0])
    pm = [[sum((x * f[i][j] for x, f in zip(xs, forms)), MultiPoly.zero(names)) for j in range(n)]
          for i in range(n)]
    return not poly_det(pm).is_zero()


def run_orbit_exclusions() -> VerificationReport:
    report = VerificationReport()
    intransitive_checks(report)
    totally_real_checks(report)
    complex_distribution_checks(report)
    semisimple_checks(report)
    return report
