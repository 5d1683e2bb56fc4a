from fractions import Fraction

import pytest

from ndglie import builders as b
from ndglie import exactlin as el
from ndglie.catalog import load_default
from ndglie.invariants import (
    cochain_differentials, commutant, dual, eigenspaces, generated_submodule, h1_dim, hom_rep,
    invariant_complex_structures, invariant_space, is_isomorphic, nilpotent_obstruction,
    spectrum_obstruction, submodules, sym2, tensor, wedge2,
)
from ndglie.liealg import Representation, adjoint_rep, quotient_rep

F = Fraction


@pytest.mark.parametrize("name,expected", [
    ("p_su12", 0), ("r_s", 6), ("r_u", 0), ("r_gen", 0), ("l0", 10), ("l1", 4), ("l2", 0),
] + [(n, 0) for n in b.REDUCTIVE_ISOTROPY])
def test_h1_of_isotropy(name, expected):
    h, m, _ = b.isotropy_setup(name)
    assert h1_dim(h, hom_rep(m, adjoint_rep(h))) == expected


def _catalog_pairs():
    cat = load_default()
    for name, q in sorted(cat.quotients.items()):
        yield name, q.emb.sub, quotient_rep(q)


@pytest.mark.parametrize("name,h,w", list(_catalog_pairs()), ids=lambda v: v if isinstance(v, str) else "")
def test_d1_after_d0_vanishes(name, h, w):
    d0, d1 = cochain_differentials(h, w)
    if d0 and d1:
        assert el.is_zero(el.matmul(d1, d0))


def test_invariant_metric_on_compact_model():
    r = quotient_rep(b.model_setup("so5_u2"))
    metrics = invariant_space(sym2(dual(r)))
    assert len(metrics) == 2   # one per summand of V + C


def test_sl2c_spinor_structures():
    rep = b.sl2c_spinor()
    assert len(commutant(rep)) == 2
    res = invariant_complex_structures(rep)
    assert res.status == "finite" and len(res.structures) == 2
    for J in res.structures:
        assert el.matmul(J, J) == el.scale(el.identity(4), -1)
        assert all(el.matmul(J, a) == el.matmul(a, J) for a in rep.rho)


def test_spectrum_obstruction():
    h = load_default().algebras["heis3"]
    diag = Representation(h, 2, [el.zeros(2, 2)] * 3)
    assert spectrum_obstruction(diag) is None
    from ndglie.liealg import LieAlgebra
    line = LieAlgebra("r", 1, {})
    assert spectrum_obstruction(Representation(line, 2, [el.diag([F(1), F(2)])])) is not None
    assert invariant_complex_structures(Representation(line, 2, [el.diag([F(1), F(2)])])).status == "none"


def test_nilpotent_obstruction():
    k = [[F(0), F(1)], [F(0), F(0)]]
    plane = [[F(1), F(0)], [F(0), F(1)]]
    assert nilpotent_obstruction([k], plane) is not None
    assert nilpotent_obstruction([el.identity(2)], plane) is None


def test_eigenspaces():
    m = el.diag([F(1), F(1), F(-2)])
    spaces = dict((v, len(b_)) for v, b_ in eigenspaces(m))
    assert spaces == {1: 2, -2: 1}


def test_submodules_of_a_direct_sum():
    rep = b.sl2_su2_rep([("sl2", 2), ("su2", 3)])
    assert submodules(rep, 2).count == 1
    assert submodules(rep, 3).count == 1
    assert submodules(rep, 1).count == 0
    gen = generated_submodule(rep, [[F(1), F(0), F(0), F(0), F(0)]])
    assert len(gen) == 2


def test_wedge_and_tensor_dimensions():
    r = b.sl2c_spinor()
    assert wedge2(r).dim == 6 and sym2(r).dim == 10 and tensor(r, r).dim == 16


def test_isomorphism_to_reference_module():
    for name in b.MODELS:
        assert is_isomorphic(quotient_rep(b.model_setup(name)), b.model_reference_module(name)).isomorphic


@pytest.mark.parametrize("name", list(b.SOLVABLE_ISOTROPY) + list(b.REDUCTIVE_ISOTROPY))
def test_d1_after_d0_vanishes_on_hom_coefficients(name):
    h, m, _ = b.isotropy_setup(name)
    d0, d1 = cochain_differentials(h, hom_rep(m, adjoint_rep(h)))
    assert el.is_zero(el.matmul(d1, d0))
