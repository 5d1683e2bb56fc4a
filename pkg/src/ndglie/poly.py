"""Multivariate polynomials over Q and a budgeted Buchberger engine.

Monomial order is degrevlex throughout.  A polynomial is a dict from exponent
tuples to nonzero ``Fraction`` coefficients together with the tuple of
variable names; arithmetic requires identical variable tuples.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import exactlin as el
from .scalars import FieldElement

Exp = Tuple[int, ...]

DEFAULT_MAX_PAIRS = 10 ** 5
DEFAULT_MAX_TERMS = 10 ** 6


def _key(e: Exp):
    return (sum(e),) + tuple(-x for x in reversed(e))


def _heap_key(e: Exp):
    return (-sum(e),) + tuple(reversed(e))


def _rational(c) -> Fraction:
    if isinstance(c, FieldElement):
        if not c.is_rational():
            raise ValueError("polynomial coefficients must be rational")
        return c.re[0]
    return Fraction(c)


class MultiPoly:
    __slots__ = ("names", "terms")

    def __init__(self, terms: Dict[Exp, Fraction], names: Sequence[str]):
        self.names = tuple(names)
        self.terms = {e: c for e, c in terms.items() if c}

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, names) -> "MultiPoly":
        return cls({}, names)

    @classmethod
    def const(cls, c, names) -> "MultiPoly":
        c = _rational(c)
        return cls({(0,) * len(names): c} if c else {}, names)

    @classmethod
    def var(cls, name: str, names) -> "MultiPoly":
        names = tuple(names)
        e = tuple(int(n == name) for n in names)
        return cls({e: Fraction(1)}, names)

    @classmethod
    def gens(cls, names) -> List["MultiPoly"]:
        return [cls.var(n, names) for n in names]

    # basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def lm(self) -> Exp:
        return max(self.terms, key=_key)

    def lc(self) -> Fraction:
        return self.terms[self.lm()]

    def sorted_terms(self) -> List[Tuple[Exp, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _key(t[0]), reverse=True)

    def variables(self) -> List[int]:
        return sorted({i for e in self.terms for i, x in enumerate(e) if x})

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        inv = 1 / self.lc()
        return MultiPoly({e: c * inv for e, c in self.terms.items()}, self.names)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise ValueError("polynomials live in different rings")
            return other
        return MultiPoly.const(other, self.names)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _rational(other)
            return MultiPoly({e: v * c for e, v in self.terms.items()}, self.names)
        o = self._coerce(other)
        out: Dict[Exp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiPoly.const(1, self.names)
        for _ in range(n):
            out = out * self
        return out

    def mul_term(self, e: Exp, c: Fraction) -> "MultiPoly":
        return MultiPoly({tuple(a + b for a, b in zip(x, e)): v * c for x, v in self.terms.items()},
                         self.names)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(other, self.names)
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    # evaluation -----------------------------------------------------------
    def evaluate(self, point: Sequence) -> object:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def substitute(self, values: Dict[str, object]) -> "MultiPoly":
        """Substitute rational values for some variables (the ring is kept)."""
        idx = {self.names.index(n): Fraction(v) for n, v in values.items()}
        out: Dict[Exp, Fraction] = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i, v in idx.items():
                if ne[i]:
                    c = c * v ** ne[i]
                    ne[i] = 0
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
        return MultiPoly(out, self.names)

    def extend(self, names: Sequence[str]) -> "MultiPoly":
        """Embed into a ring whose variables contain ours."""
        pos = [tuple(names).index(n) for n in self.names]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(names)
            for p, k in zip(pos, e):
                ne[p] = k
            out[tuple(ne)] = c
        return MultiPoly(out, names)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


# text format -------------------------------------------------------------------

def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: MultiPoly) -> str:
    """Canonical text: terms in decreasing degrevlex order, `c * x^a y`."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        mono = " ".join(n if k == 1 else f"{n}^{k}" for n, k in zip(p.names, e) if k)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _fmt_rat(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_rat(a)} * {mono}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, names: Sequence[str]) -> MultiPoly:
    names = tuple(names)
    text = text.strip()
    if text == "0":
        return MultiPoly.zero(names)
    out: Dict[Exp, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        coeff = Fraction(1)
        if "*" in body:
            c, body = body.split("*", 1)
            coeff = Fraction(c.strip())
            body = body.strip()
        elif body and (body[0].isdigit()):
            coeff = Fraction(body)
            body = ""
        e = [0] * len(names)
        for tok in body.split():
            v, _, k = tok.partition("^")
            if v not in names:
                raise ValueError(f"unknown variable {v!r}")
            e[names.index(v)] += int(k) if k else 1
        e = tuple(e)
        out[e] = out.get(e, 0) + sign * coeff
    return MultiPoly(out, names)


# Groebner bases ----------------------------------------------------------------

def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _disjoint(a: Exp, b: Exp) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class _Budget:
    def __init__(self, max_pairs, max_terms):
        self.max_pairs = max_pairs
        self.max_terms = max_terms
        self.pairs = 0

    def check_terms(self, n):
        if n > self.max_terms:
            raise _Stop(f"term budget {self.max_terms} exceeded")


class _Stop(Exception):
    pass


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly], budget: Optional[_Budget] = None) -> MultiPoly:
    """Full reduction of f modulo basis (remainder of multivariate division)."""
    if f.is_zero() or not basis:
        return f
    lead = [(g.lm(), g.lc(), [(e, c) for e, c in g.terms.items() if e != g.lm()]) for g in basis]
    lead.sort(key=lambda t: len(t[2]))
    p = dict(f.terms)
    heap = [(_heap_key(e), e) for e in p]
    heapq.heapify(heap)
    rem: Dict[Exp, Fraction] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for lm, lc, tail in lead:
            if _divides(lm, e):
                q = c / lc
                shift = tuple(a - b for a, b in zip(e, lm))
                for te, tc in tail:
                    ne = tuple(a + b for a, b in zip(te, shift))
                    old = p.get(ne)
                    nv = (old or 0) - q * tc
                    if nv:
                        if old is None:
                            heapq.heappush(heap, (_heap_key(ne), ne))
                        p[ne] = nv
                    elif old is not None:
                        del p[ne]
                if budget is not None:
                    budget.check_terms(len(p) + len(rem))
                break
        else:
            rem[e] = c
    return MultiPoly(rem, f.names)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lf, lg = f.lm(), g.lm()
    l = _lcm(lf, lg)
    a = f.mul_term(tuple(x - y for x, y in zip(l, lf)), 1 / f.lc())
    b = g.mul_term(tuple(x - y for x, y in zip(l, lg)), 1 / g.lc())
    return a - b


@dataclass
class GroebnerBasis:
    polys: List[MultiPoly]
    names: Tuple[str, ...]
    complete: bool = True
    reason: str = ""
    pairs_reduced: int = 0

    @property
    def budget_exceeded(self) -> bool:
        return not self.complete

    def is_unit(self) -> bool:
        return self.complete and len(self.polys) == 1 and self.polys[0].is_constant()

    def leading_monomials(self) -> List[Exp]:
        return [g.lm() for g in self.polys]

    def is_zero_dimensional(self) -> bool:
        lms = self.leading_monomials()
        for i in range(len(self.names)):
            if not any(e[i] > 0 and sum(e) == e[i] for e in lms):
                return False
        return True

    def dimension(self) -> int:
        """Krull dimension via maximal sets of variables free of leading monomials."""
        if self.is_unit():
            return -1
        lms = self.leading_monomials()
        n = len(self.names)
        for k in range(n, -1, -1):
            for s in combinations(range(n), k):
                ss = set(s)
                if not any(all(i in ss for i, x in enumerate(e) if x) for e in lms):
                    return k
        return 0

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self.polys)

    def __str__(self):
        return "\n".join(format_poly(g) for g in self.polys)


def _update(polys, active, pairs, k):
    """Gebauer-Moeller update after adding polys[k]."""
    h = polys[k]
    lh = h.lm()
    cands = [(k, g) for g in active]
    lcms = {g: _lcm(lh, polys[g].lm()) for g in active}
    d = []
    for idx, (_, g1) in enumerate(cands):
        l1 = lcms[g1]
        if _disjoint(lh, polys[g1].lm()):
            d.append(g1)
            continue
        others = [g2 for _, g2 in cands[idx + 1:]] + d
        if not any(_divides(lcms[g2], l1) for g2 in others if g2 != g1):
            d.append(g1)
    new_pairs = [(g, k) for g in d if not _disjoint(lh, polys[g].lm())]
    kept = []
    for (a, b) in pairs:
        l = _lcm(polys[a].lm(), polys[b].lm())
        if (_divides(lh, l) and _lcm(polys[a].lm(), lh) != l and _lcm(lh, polys[b].lm()) != l):
            continue
        kept.append((a, b))
    new_active = [g for g in active if not _divides(lh, polys[g].lm())] + [k]
    return new_active, kept + new_pairs


def buchberger(gens: Iterable[MultiPoly], max_pairs: int = DEFAULT_MAX_PAIRS,
               max_terms: int = DEFAULT_MAX_TERMS) -> GroebnerBasis:
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis([], (), True)
    names = gens[0].names
    budget = _Budget(max_pairs, max_terms)
    polys: List[MultiPoly] = []
    active: List[int] = []
    pairs: List[Tuple[int, int]] = []
    try:
        for g in sorted(gens, key=lambda p: _key(p.lm())):
            r = normal_form(g, [polys[i] for i in active], budget)
            if r.is_zero():
                continue
            polys.append(r.monic())
            active, pairs = _update(polys, active, pairs, len(polys) - 1)
            if polys[-1].is_constant():
                return GroebnerBasis([MultiPoly.const(1, names)], names, True)
        while pairs:
            # normal strategy: smallest lcm first, ties broken deterministically
            best = min(range(len(pairs)), key=lambda i: (
                _key(_lcm(polys[pairs[i][0]].lm(), polys[pairs[i][1]].lm())), pairs[i]))
            a, b = pairs.pop(best)
            budget.pairs += 1
            if budget.pairs > budget.max_pairs:
                raise _Stop(f"S-pair budget {budget.max_pairs} exceeded")
            r = normal_form(s_polynomial(polys[a], polys[b]), [polys[i] for i in active], budget)
            if r.is_zero():
                continue
            polys.append(r.monic())
            if polys[-1].is_constant():
                return GroebnerBasis([MultiPoly.const(1, names)], names, True, pairs_reduced=budget.pairs)
            active, pairs = _update(polys, active, pairs, len(polys) - 1)
            budget.check_terms(sum(len(polys[i].terms) for i in active))
    except _Stop as stop:
        return GroebnerBasis([polys[i] for i in active], names, False, str(stop), budget.pairs)
    return GroebnerBasis(_reduce_basis([polys[i] for i in active]), names, True,
                         pairs_reduced=budget.pairs)


def _reduce_basis(basis: List[MultiPoly]) -> List[MultiPoly]:
    basis = sorted(basis, key=lambda p: _key(p.lm()))
    minimal = []
    for i, g in enumerate(basis):
        if not any(_divides(h.lm(), g.lm()) for j, h in enumerate(basis) if j != i
                   and (h.lm() != g.lm() or j < i)):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = [h for j, h in enumerate(minimal) if j != i]
        out.append(normal_form(g, others).monic())
    return sorted(out, key=lambda p: _key(p.lm()), reverse=True)


def ideal_member(f: MultiPoly, gb: GroebnerBasis) -> bool:
    if not gb.complete:
        raise ValueError("ideal membership needs a complete Groebner basis")
    return normal_form(f, gb.polys).is_zero()


def radical_member(f: MultiPoly, gens: Sequence[MultiPoly], **budget) -> Optional[bool]:
    """f vanishes on the complex variety of gens (Rabinowitsch); None if over budget."""
    names = tuple(gens[0].names if gens else f.names)
    y = "_rab"
    while y in names:
        y += "_"
    ext = names + (y,)
    lifted = [g.extend(ext) for g in gens]
    lifted.append(MultiPoly.const(1, ext) - MultiPoly.var(y, ext) * f.extend(ext))
    gb = buchberger(lifted, **budget)
    if not gb.complete:
        return None
    return gb.is_unit()


def poly_det(m: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant by Laplace expansion over column subsets (memoized)."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    names = m[0][0].names
    memo: Dict[Tuple[int, ...], MultiPoly] = {}

    def minor(row: int, cols: Tuple[int, ...]) -> MultiPoly:
        if row == n:
            return MultiPoly.const(1, names)
        if cols in memo:
            return memo[cols]
        total = MultiPoly.zero(names)
        for k, c in enumerate(cols):
            entry = m[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            term = entry * sub
            total = total - term if k % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


# zero-dimensional solving -----------------------------------------------------------

def minimal_polynomial(gb: GroebnerBasis, var: int, max_degree: int = 64) -> Optional[List[Fraction]]:
    """Coefficients (low to high) of the monic univariate polynomial of smallest
    degree in the ideal, in the given variable; None if none up to max_degree."""
    names = gb.names
    x = MultiPoly.var(names[var], names)
    power = MultiPoly.const(1, names)
    remainders: List[MultiPoly] = []
    for d in range(max_degree + 1):
        remainders.append(normal_form(power, gb.polys))
        monos = sorted({e for r in remainders for e in r.terms}, key=_key)
        cols = [[r.terms.get(e, Fraction(0)) for e in monos] for r in remainders]
        ker = el.kernel_basis(el.from_columns(cols), len(remainders)) if monos else [[Fraction(1)]]
        if ker:
            v = ker[0]
            top = v[-1]
            return [c / top for c in v]
        power = power * x
    return None


def univariate_real_roots(coeffs: Sequence[Fraction]):
    """(rational real roots, number of irrational real roots) of a univariate polynomial."""
    import sympy

    t = sympy.Symbol("t")
    p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], t)
    rational, irrational = [], 0
    for r in sorted(set(p.real_roots())):
        if r.is_Rational:
            rational.append(Fraction(int(r.p), int(r.q)))
        else:
            irrational += 1
    return rational, irrational


@dataclass
class PointSet:
    points: List[Tuple[Fraction, ...]] = field(default_factory=list)
    irrational_real: int = 0
    positive_dimensional: bool = False


def real_points(gens: Sequence[MultiPoly], **budget) -> PointSet:
    """Real points of a zero-dimensional system, exactly when they are rational.

    Irrational real coordinates are counted but not represented.
    """
    gb = buchberger(gens, **budget)
    if not gb.complete:
        raise ValueError(gb.reason)
    out = PointSet()
    if gb.is_unit():
        return out
    if not gb.is_zero_dimensional():
        out.positive_dimensional = True
        return out
    names = gb.names
    _solve_rec(gb, names, 0, {}, out, budget)
    return out


def _solve_rec(gb, names, var, fixed, out: PointSet, budget):
    if var == len(names):
        out.points.append(tuple(fixed[n] for n in names))
        return
    mp = minimal_polynomial(gb, var)
    roots, irr = univariate_real_roots(mp)
    out.irrational_real += irr
    for r in roots:
        sub = buchberger(list(gb.polys) + [MultiPoly.var(names[var], names) - r], **budget)
        if sub.is_unit():
            continue
        _solve_rec(sub, names, var + 1, {**fixed, names[var]: r}, out, budget)
