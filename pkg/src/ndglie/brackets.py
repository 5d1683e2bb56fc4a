"""Bracket spaces, split certificates and degeneracy certificates for solvable isotropy."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import builders as b
from . import exactlin as el
from .invariants import commutant, invariant_complex_structures
from .jacobi import BracketCandidate, MuObstruction, candidate, instantiate, jacobi_system, mu_obstruction
from .liealg import check_jacobi
from .nijenhuis import ComplexStructureJ, nijenhuis_from_bracket, nondegeneracy_matrix
from .poly import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_TERMS,
    MultiPoly,
    buchberger,
    ideal_member,
    poly_det,
    radical_member,
)

F = Fraction

SOLVABLE_CASES = {"p": "p_su12", "r": "r_s", "r_u": "r_u", "r_gen": "r_gen",
                  "l0": "l0", "l1": "l1", "l2": "l2"}
NONZERO_COHOMOLOGY = ("r", "l0", "l1")


def _resolve(h_name: str) -> str:
    if h_name in SOLVABLE_CASES:
        return SOLVABLE_CASES[h_name]
    if h_name in SOLVABLE_CASES.values():
        return h_name
    raise KeyError(f"unknown solvable isotropy {h_name!r}")


def build_candidate(h_name: str, with_mu: bool = False) -> BracketCandidate:
    name = _resolve(h_name)
    q = b.split_setup(name)
    _, rep, _ = b.isotropy_setup(name)
    return candidate(q, rep, with_mu=with_mu)


def bracket_space_dim(h_name: str) -> int:
    return len(build_candidate(h_name).basis)


def certify_split(h_name: str, **budget) -> MuObstruction:
    return mu_obstruction(build_candidate(h_name, with_mu=True), **budget)


# degeneracy -------------------------------------------------------------------

def nijenhuis_polynomial(c: BracketCandidate, J: ComplexStructureJ):
    """N_J with polynomial entries in the bracket parameters."""
    q = c.setup
    nh, nm, n = q.h_dim, q.m_dim, c.dim
    names = c.names
    zero = MultiPoly.zero(names)
    ts = [MultiPoly.var(t, names) for t in c.params]
    pair = lambda i, j: i * nm - i * (i + 1) // 2 + (j - i - 1)

    def bracket_m(i, j):
        p = pair(i, j)
        out = [zero] * nm
        for t, phi in zip(ts, c.basis):
            for k in range(nm):
                v = phi[p * n + nh + k]
                if v:
                    out[k] = out[k] + t * v
        return out

    return nijenhuis_from_bracket(bracket_m, J)


def degeneracy_polynomial(c: BracketCandidate, J: ComplexStructureJ) -> MultiPoly:
    N = nijenhuis_polynomial(c, J)
    mat = nondegeneracy_matrix(N)
    names = c.names
    pm = [[x if isinstance(x, MultiPoly) else MultiPoly.const(x, names) for x in row] for row in mat]
    return poly_det(pm)


def invariant_structures(h_name: str, samples: int = 0, seed: int = 0) -> List[ComplexStructureJ]:
    """Invariant J on m.

    When the structures come in a family (or the search is over budget) this
    returns J0 together with ``samples`` conjugates P J0 P^-1 by random
    invertible P in the commutant, which are again invariant.
    """
    name = _resolve(h_name)
    _, rep, _ = b.isotropy_setup(name)
    res = invariant_complex_structures(rep)
    if res.status == "finite" and not res.irrational_real:
        return [ComplexStructureJ(m) for m in res.structures]
    if res.status in ("budget_exceeded", "family"):
        J0 = b.J0(3)
        out = [ComplexStructureJ(J0)]
        comm = commutant(rep)
        rng = random.Random(seed)
        while len(out) < samples + 1:
            P = el.linear_combination([F(rng.randint(-3, 3)) for _ in comm], comm)
            if el.det(P) == 0:
                continue
            J = ComplexStructureJ(el.matmul(el.matmul(P, J0), el.inverse(P)))
            if all(J.J != K.J for K in out):
                out.append(J)
        return out
    raise ValueError(f"{name}: no usable invariant complex structures ({res.status})")


@dataclass
class DegeneracyCheck:
    J: List[List[Fraction]]
    method: str                 # identically-zero | sub-ideal | ideal | radical | witnesses
    certified: Optional[bool]   # None: budget exceeded with no witness data
    detail: str = ""


@dataclass
class DegeneracyCertificate:
    h_name: str
    checks: List[DegeneracyCheck] = field(default_factory=list)
    n_params: int = 0
    n_equations: int = 0
    witnesses_checked: int = 0

    @property
    def certified(self) -> Optional[bool]:
        vals = [c.certified for c in self.checks]
        if any(v is False for v in vals):
            return False
        if any(v is None for v in vals):
            return None
        return True


def certify_degenerate(h_name: str, witnesses: Optional[Sequence[Dict[str, Fraction]]] = None,
                       max_pairs: int = DEFAULT_MAX_PAIRS, max_terms: int = DEFAULT_MAX_TERMS,
                       family_samples: int = 3, seed: int = 0) -> DegeneracyCertificate:
    """det of the non-degeneracy matrix vanishes on the Jacobi variety, per invariant J."""
    c = build_candidate(h_name)
    eqs = jacobi_system(c)
    cert = DegeneracyCertificate(h_name, n_params=len(c.params), n_equations=len(eqs))
    gb = None
    for J in invariant_structures(h_name, family_samples, seed):
        d = degeneracy_polynomial(c, J)
        if d.is_zero():
            cert.checks.append(DegeneracyCheck(J.J, "identically-zero", True))
            continue
        local = _local_membership(d, eqs, max_pairs, max_terms)
        if local:
            cert.checks.append(DegeneracyCheck(J.J, local, True))
            continue
        if gb is None and eqs:
            gb = buchberger(eqs, max_pairs=max_pairs, max_terms=max_terms)
        if gb is not None and gb.complete:
            if ideal_member(d, gb):
                cert.checks.append(DegeneracyCheck(J.J, "ideal", True))
                continue
            rad = radical_member(d, eqs, max_pairs=max_pairs, max_terms=max_terms)
            if rad is not None:
                cert.checks.append(DegeneracyCheck(J.J, "radical", rad))
                continue
        if witnesses:
            ok = all(_vanishes_at(c, d, w) for w in witnesses)
            cert.witnesses_checked = len(witnesses)
            cert.checks.append(DegeneracyCheck(J.J, "witnesses", ok, f"{len(witnesses)} points"))
        else:
            cert.checks.append(DegeneracyCheck(J.J, "budget exceeded", None,
                                               gb.reason if gb is not None else ""))
    return cert


def _local_membership(d: MultiPoly, eqs, max_pairs: int, max_terms: int) -> Optional[str]:
    """Membership in the sub-ideal of equations using only the variables of d.

    Lying in a sub-ideal (or its radical) implies lying in the full one, and the
    sub-ideal is usually far smaller.
    """
    used = lambda p: {k for e in p.terms for k, x in enumerate(e) if x}
    vars_d = used(d)
    local = [e for e in eqs if used(e) <= vars_d]
    if not local:
        return None
    gb = buchberger(local, max_pairs=max_pairs, max_terms=max_terms)
    if not gb.complete:
        return None
    if ideal_member(d, gb):
        return "sub-ideal"
    if radical_member(d, local, max_pairs=max_pairs, max_terms=max_terms):
        return "sub-ideal radical"
    return None


def _vanishes_at(c: BracketCandidate, d: MultiPoly, point: Dict[str, Fraction]) -> bool:
    vals = [point.get(v, F(0)) for v in c.names]
    return d.evaluate(vals) == 0


# witness points --------------------------------------------------------------

def is_solution(c: BracketCandidate, point: Dict[str, Fraction], eqs=None) -> bool:
    vals = [point.get(v, F(0)) for v in c.names]
    return all(e.evaluate(vals) == 0 for e in (eqs if eqs is not None else jacobi_system(c)))


def sample_witnesses(c: BracketCandidate, supports: Sequence[Sequence[str]], per_support: int = 3,
                     seed: int = 0, max_pairs: int = 2000) -> List[Dict[str, Fraction]]:
    """Rational Jacobi solutions supported on the given parameter subsets.

    On each support the system is restricted (other parameters zero), then the
    variables are fixed one at a time to random rationals or to rational roots of
    the univariate eliminant, keeping only exact solutions.
    """
    from .poly import minimal_polynomial, univariate_real_roots

    rng = random.Random(seed)
    eqs = jacobi_system(c)
    out: List[Dict[str, Fraction]] = []
    for support in supports:
        sub_names = tuple(support)
        zero_pt = {v: MultiPoly.const(0, sub_names) for v in c.names}
        for v in sub_names:
            zero_pt[v] = MultiPoly.var(v, sub_names)
        restricted = []
        for e in eqs:
            r = _substitute(e, c.names, zero_pt, sub_names)
            if not r.is_zero():
                restricted.append(r)
        for _ in range(per_support):
            pt = _random_point(restricted, sub_names, rng, max_pairs, minimal_polynomial, univariate_real_roots)
            if pt is None:
                continue
            full = {v: pt.get(v, F(0)) for v in c.names}
            if is_solution(c, full, eqs) and full not in out:
                out.append(full)
    return out


def _substitute(p: MultiPoly, names, values: Dict[str, MultiPoly], target) -> MultiPoly:
    total = MultiPoly.zero(target)
    for e, coef in p.terms.items():
        term = MultiPoly.const(coef, target)
        for k, x in enumerate(e):
            if x:
                term = term * (values[names[k]] ** x)
                if term.is_zero():
                    break
        total = total + term
    return total


def _random_point(eqs, names, rng, max_pairs, minimal_polynomial, univariate_real_roots):
    fixed: Dict[str, Fraction] = {}
    current = list(eqs)
    for k, v in enumerate(names):
        if not current:
            fixed[v] = F(rng.randint(-5, 5), rng.randint(1, 3))
            continue
        gb = buchberger(current, max_pairs=max_pairs)
        if not gb.complete or gb.is_unit():
            return None
        var_idx = names.index(v)
        mp = minimal_polynomial(gb, var_idx, max_degree=8) if gb.is_zero_dimensional() else None
        if mp is not None:
            roots, _ = univariate_real_roots(mp)
            if not roots:
                return None
            val = rng.choice(roots)
        else:
            val = F(rng.randint(-5, 5), rng.randint(1, 3))
        fixed[v] = val
        lin = MultiPoly.var(v, names) - val
        trial = current + [lin]
        gbt = buchberger(trial, max_pairs=max_pairs)
        if not gbt.complete or gbt.is_unit():
            # the free choice was not admissible; try the eliminant of this variable
            mp = minimal_polynomial(gb, var_idx, max_degree=8)
            if mp is None:
                return None
            roots, _ = univariate_real_roots(mp)
            if not roots:
                return None
            fixed[v] = val = rng.choice(roots)
            trial = current + [MultiPoly.var(v, names) - val]
        current = [g for g in buchberger(trial, max_pairs=max_pairs).polys]
    return fixed


def solution_algebra_ok(c: BracketCandidate, point: Dict[str, Fraction]) -> bool:
    """Round trip: a Jacobi solution assembles into a Lie algebra."""
    return check_jacobi(instantiate(c, point))


def witness_degeneracy(h_name: str, family_samples: int = 3, seed: int = 0):
    """(points checked, all degenerate and Lie) over the catalog witnesses of a case."""
    from .catalog import witnesses

    name = _resolve(h_name)
    points = witnesses(name)
    if not points:
        return 0, True
    c = build_candidate(name)
    dets = [degeneracy_polynomial(c, J) for J in invariant_structures(name, family_samples, seed)]
    ok = all(_vanishes_at(c, d, p) for p in points for d in dets)
    ok = ok and all(solution_algebra_ok(c, p) for p in points)
    return len(points), ok
