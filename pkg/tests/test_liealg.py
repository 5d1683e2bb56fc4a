from fractions import Fraction

import pytest

from ndglie import builders as b
from ndglie import exactlin as el
from ndglie.catalog import catalog, heisenberg3, load_default
from ndglie.liealg import (
    InvariantError, LieAlgebra, QuotientSetup, check_jacobi, grading_element_action, grading_ok,
    jacobi_violations, quotient_module, quotient_rep,
)

F = Fraction


def su2() -> LieAlgebra:
    return LieAlgebra("su2", 3, {(0, 1): {2: F(1)}, (1, 2): {0: F(1)}, (0, 2): {1: F(-1)}})


def test_small_algebras():
    assert check_jacobi(LieAlgebra("ab", 3, {}))
    assert check_jacobi(heisenberg3())
    assert check_jacobi(su2())


def test_rescaled_su2_is_still_lie():
    # every bracket [e_i, e_j] = c e_k on a 3D space satisfies Jacobi
    g = su2()
    g.brackets[(0, 1)] = {2: F(2)}
    assert check_jacobi(g)


def test_perturbed_su2_breaks_jacobi():
    g = su2()
    g.brackets[(0, 1)] = {2: F(1), 0: F(1)}
    assert not check_jacobi(g)
    assert jacobi_violations(g)


def test_catalog_entries_are_lie_algebras():
    cat = load_default()
    assert len(cat.algebras) > 40
    for g in cat.algebras.values():
        assert check_jacobi(g), g.name
    for e in cat.embeddings.values():
        e.verify()


def test_catalog_dimensions():
    assert catalog("p_su12").dim == 5
    assert catalog("p2_sp11").dim == 7
    assert catalog("su12").dim == 8
    l0 = catalog("l0")
    assert l0.dim == 3
    # the derived algebra is the degree-2 line
    assert el.rank(l0.derived_algebra()) == 1
    assert l0.basis_bracket(0, 1)[2] != 0


def test_parabolic_grading():
    p = catalog("p_su12")
    degrees = [b.PARABOLIC_DEGREES[x] for x in p.labels]
    assert grading_ok(p, degrees)
    assert [degrees.count(k) for k in (0, 1, 2)] == [2, 2, 1]


def test_quotient_rep_is_a_representation():
    for name in ("so5_u2", "p2_sp4r", "so22_so23"):
        q = catalog(name, kind="quotient")
        r = quotient_rep(q)
        h = q.emb.sub
        for i in range(h.dim):
            for j in range(i + 1, h.dim):
                lhs = r.act(h.basis_bracket(i, j))
                rhs = el.commutator(r.rho[i], r.rho[j])
                assert lhs == rhs


def test_full_quotient_is_zero_dimensional():
    g = b.ambient_unitary("su12")
    emb = b.isotropy_setup("su12")[2]
    q = QuotientSetup(emb, el.zeros(g.dim, 0))
    assert quotient_rep(q).dim == 0


def test_non_transverse_complement_rejected():
    q = catalog("so5_u2", kind="quotient")
    bad = el.from_columns([q.emb.image_basis()[0]] + el.columns(q.complement)[1:])
    with pytest.raises(InvariantError):
        QuotientSetup(q.emb, bad)


def test_grading_element_action():
    _, rep, _ = b.isotropy_setup("p_su12")
    from ndglie.invariants import submodules

    s = [F(int(x == "s")) for x in catalog("p_su12").labels]
    found = submodules(rep, 4).found
    assert found
    t = found[0]
    assert not el.is_zero(grading_element_action(rep, s, t))
    qrep, comp = quotient_module(rep, t)
    assert qrep.dim == 2 and len(comp) == 2


def test_central_element_acts_trivially():
    from ndglie.liealg import adjoint_rep

    h = catalog("u2")
    adj = adjoint_rep(h)
    (z,) = el.kernel_basis([row for m in adj.rho for row in m], h.dim)
    derived = el.span_basis(h.derived_algebra())
    assert len(derived) == 3
    assert el.is_zero(grading_element_action(adj, z, derived))
