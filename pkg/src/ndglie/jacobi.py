"""Parameterized brackets on g = h + m and their Jacobi systems.

The bracket on m is a combination sum_a t_a phi_a of a basis of the equivariant
bracket space (Lambda^2 m* (x) g)^h, computed for the split module g = h + m.
Optionally the h-component of [h, m] is deformed by sum_r c_r mu_r, with mu_r
cocycle representatives of H^1(h, Hom(m, h)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import exactlin as el
from .exactlin import Vector
from .invariants import dual, h1, hom_rep, invariant_space, tensor, wedge2
from .liealg import InvariantError, LieAlgebra, QuotientSetup, Representation, adjoint_rep
from .poly import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_TERMS,
    MultiPoly,
    buchberger,
    ideal_member,
    radical_member,
)

F = Fraction


def module_rep(q: QuotientSetup) -> Representation:
    """g = h + m as an h-module (adjoint action restricted to h)."""
    g = q.g
    mats = [g.ad(hc) for hc in q.h_cols]
    return Representation(q.h, g.dim, mats, f"{g.name}|{q.h.name}")


def bracket_space(q: QuotientSetup, rep: Representation) -> List[Vector]:
    """Basis of (Lambda^2 m* (x) g)^h; index pair(i<j) * dim g + k."""
    return invariant_space(tensor(wedge2(dual(rep)), module_rep(q)))


@dataclass
class BracketCandidate:
    setup: QuotientSetup            # split g = h + m; h occupies the first coordinates
    rep: Representation             # h on m
    basis: List[Vector]
    params: List[str]
    mu_basis: List[Vector] = field(default_factory=list)   # C^1(h, Hom(m, h)) vectors
    mu_params: List[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.params) != len(self.basis) or len(self.mu_params) != len(self.mu_basis):
            raise ValueError("parameter names do not match the bases")
        if not self.setup.is_reductive():
            raise InvariantError("base bracket must be the split module")
        for v in self.basis:
            for c in v:
                if not isinstance(c, (int, Fraction)):
                    raise InvariantError("bracket coefficients must be rational")

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.params) + tuple(self.mu_params)

    @property
    def dim(self) -> int:
        return self.setup.g.dim


def candidate(q: QuotientSetup, rep: Representation, with_mu: bool = False) -> BracketCandidate:
    basis = bracket_space(q, rep)
    mu = []
    if with_mu:
        mu = h1(q.h, hom_rep(rep, adjoint_rep(q.h))).cocycles
    return BracketCandidate(q, rep, basis, [f"t{a}" for a in range(len(basis))],
                            mu, [f"c{r}" for r in range(len(mu))])


def structure_polys(c: BracketCandidate) -> Dict[Tuple[int, int], List[MultiPoly]]:
    """[x_i, x_j] for i < j as polynomial coordinate vectors on g."""
    q, names = c.setup, c.names
    n, nh, nm = c.dim, q.h_dim, q.m_dim
    zero = MultiPoly.zero(names)
    ts = [MultiPoly.var(t, names) for t in c.params]
    cs = [MultiPoly.var(x, names) for x in c.mu_params]
    out: Dict[Tuple[int, int], List[MultiPoly]] = {}
    g = q.g
    for i in range(n):
        for j in range(i + 1, n):
            vec = [MultiPoly.const(v, names) if v else zero for v in g.basis_bracket(i, j)]
            if i >= nh:
                p = _pair_index(i - nh, j - nh, nm)
                for t, phi in zip(ts, c.basis):
                    for k in range(n):
                        v = phi[p * n + k]
                        if v:
                            vec[k] = vec[k] + t * v
            elif j >= nh:
                # mu(h_i)(m_{j-nh}) in h: C^1 index a * dim W + (m_index * nh + k)
                dw = nm * nh
                for cr, mu in zip(cs, c.mu_basis):
                    for k in range(nh):
                        v = mu[i * dw + (j - nh) * nh + k]
                        if v:
                            vec[k] = vec[k] + cr * v
            out[(i, j)] = vec
    return out


def _pair_index(i: int, j: int, n: int) -> int:
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _bracket_vec(table, vec: Sequence[MultiPoly], k: int, n: int, zero: MultiPoly) -> List[MultiPoly]:
    """[vec, x_k] with vec a polynomial coordinate vector."""
    out = [zero] * n
    for l, a in enumerate(vec):
        if a.is_zero() or l == k:
            continue
        if l < k:
            b, sgn = table[(l, k)], 1
        else:
            b, sgn = table[(k, l)], -1
        for r in range(n):
            if not b[r].is_zero():
                term = a * b[r]
                out[r] = out[r] + term if sgn > 0 else out[r] - term
    return out


def jacobi_system(c: BracketCandidate, triples: str = "m") -> List[MultiPoly]:
    """Cyclic Jacobi sums, one polynomial per triple and coordinate.

    ``triples='m'`` uses only triples from m (enough when mu = 0); ``'all'``
    includes those meeting h, which is needed when mu is present.
    """
    table = structure_polys(c)
    n, nh = c.dim, c.setup.h_dim
    zero = MultiPoly.zero(c.names)
    start = nh if triples == "m" else 0
    seen = set()
    eqs: List[MultiPoly] = []
    for i, j, k in combinations(range(start, n), 3):
        total = [zero] * n
        for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
            ab = table[(a, b)] if a < b else [-x for x in table[(b, a)]]
            total = [x + y for x, y in zip(total, _bracket_vec(table, ab, d, n, zero))]
        for p in total:
            if not p.is_zero():
                key = p.monic()
                if key not in seen:
                    seen.add(key)
                    eqs.append(p)
    return eqs


def instantiate(c: BracketCandidate, point: Dict[str, Fraction], name: str = "") -> LieAlgebra:
    """Structure constants at a parameter point (unset parameters are zero)."""
    table = structure_polys(c)
    vals = [point.get(v, F(0)) for v in c.names]
    brackets = {}
    for key, vec in table.items():
        col = {k: F(p.evaluate(vals)) for k, p in enumerate(vec) if not p.is_zero()}
        col = {k: v for k, v in col.items() if v != 0}
        if col:
            brackets[key] = col
    return LieAlgebra(name or f"{c.setup.name}@point", c.dim, brackets, list(c.setup.g.labels))


@dataclass
class MuObstruction:
    forced: Optional[bool]          # None: budget exceeded
    method: str
    linear_rank: int
    n_mu: int
    detail: str = ""


def mu_obstruction(c: BracketCandidate, max_pairs: int = DEFAULT_MAX_PAIRS,
                   max_terms: int = DEFAULT_MAX_TERMS) -> MuObstruction:
    """Does the Jacobi identity force every mu parameter to vanish?

    First the equations that are linear in the mu parameters alone, then the
    ideal of all equations free of bracket parameters, and finally radical
    membership of each c_r in the whole Jacobi ideal.
    """
    nmu = len(c.mu_params)
    if nmu == 0:
        return MuObstruction(True, "no cohomology parameters", 0, 0)
    eqs = jacobi_system(c, triples="all")
    names = c.names
    nt = len(c.params)
    rows = []
    for p in eqs:
        if all(sum(e) == 1 and not any(e[:nt]) for e in p.terms):
            row = [F(0)] * nmu
            for e, coef in p.terms.items():
                row[e.index(1) - nt] = coef
            rows.append(row)
    rank = el.rank(rows) if rows else 0
    if rank == nmu:
        return MuObstruction(True, "linear equations in mu", rank, nmu)
    gens = MultiPoly.gens(names)[nt:]
    # the equations free of bracket parameters often already cut mu down to 0
    mu_only = [p for p in eqs if all(not any(e[:nt]) for e in p.terms)]
    if mu_only:
        gb_mu = buchberger(mu_only, max_pairs=max_pairs, max_terms=max_terms)
        if gb_mu.complete and all(ideal_member(x, gb_mu) for x in gens):
            return MuObstruction(True, "ideal of the mu-only equations", rank, nmu,
                                 f"{len(mu_only)} equations")
    gb = buchberger(eqs, max_pairs=max_pairs, max_terms=max_terms)
    if not gb.complete:
        return MuObstruction(None, "budget exceeded", rank, nmu, gb.reason)
    if all(ideal_member(x, gb) for x in gens):
        return MuObstruction(True, "ideal membership", rank, nmu)
    results = [radical_member(x, eqs, max_pairs=max_pairs, max_terms=max_terms) for x in gens]
    if any(r is None for r in results):
        return MuObstruction(None, "budget exceeded", rank, nmu, "radical membership")
    if all(results):
        return MuObstruction(True, "radical membership", rank, nmu)
    free = [n for n, r in zip(c.mu_params, results) if not r]
    return MuObstruction(False, "radical membership", rank, nmu, f"not forced: {free}")
