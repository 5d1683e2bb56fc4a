from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from ndglie import exactlin as el
from ndglie.liealg import InvariantError
from ndglie.nijenhuis import (
    ComplexStructureJ, annihilates_forms, hermitian_form, is_nondegenerate, ndg_normal_form,
    phi_map, stabilizer, strong_degeneration, strong_degeneration_angles, three_form,
)

F = Fraction
angles = st.integers(min_value=0, max_value=23)


@st.composite
def normal_forms(draw):
    kind = draw(st.sampled_from([1, 2, 3, 4]))
    if kind == 1:
        return ndg_normal_form(1, F(draw(st.integers(1, 4))), draw(angles))
    if kind == 2:
        return ndg_normal_form(2, 1, draw(angles))
    if kind == 3:
        return ndg_normal_form(3, 1, draw(angles), draw(angles))
    return ndg_normal_form(4)


@given(normal_forms())
def test_normal_forms_are_antisymmetric_and_antilinear(N):
    assert N.antisymmetry_violations() == 0
    assert N.antilinearity_violations() == 0
    assert is_nondegenerate(N)


@given(normal_forms())
def test_h_is_of_type_1_1(N):
    h = hermitian_form(N).h
    J = N.J.J
    assert el.is_symmetric(h)
    assert el.matmul(el.transpose(J), el.matmul(h, J)) == h


@given(normal_forms(), st.integers(min_value=-3, max_value=3).filter(bool))
def test_h_scales_quadratically(N, c):
    assert hermitian_form(N.scaled(c)).h == el.scale(hermitian_form(N).h, c * c)


@given(normal_forms())
def test_zeta_has_type_3_0(N):
    z = three_form(N)
    assert z.sigma == 1


def test_wrong_j_rejected():
    with pytest.raises(InvariantError):
        ComplexStructureJ(el.identity(2))


def test_ndg1_exceptional():
    N = ndg_normal_form(1, F(1), 0)
    assert len(hermitian_form(N).kernel) == 4
    assert len(stabilizer(N)) == 4


@pytest.mark.parametrize("lam,phi", [(F(2), 6), (F(3), 4), (F(1, 2), 1)])
def test_ndg1_generic_signature(lam, phi):
    assert hermitian_form(ndg_normal_form(1, lam, phi)).signature == (4, 2, 0)


def test_ndg4_signature():
    assert hermitian_form(ndg_normal_form(4)).signature == (4, 2, 0)


@pytest.mark.parametrize("phi", [0, 12])
def test_ndg2_exceptional_stabilizer(phi):
    assert len(stabilizer(ndg_normal_form(2, 1, phi))) == 2


@pytest.mark.parametrize("psi,phi,pos", [(3, 0, 0), (2, 4, 1), (2, 8, 2)])
def test_generic_exceptional_kernel_positions(psi, phi, pos):
    N = ndg_normal_form(3, 1, phi, psi)
    ker = hermitian_form(N).kernel
    assert len(ker) == 2
    # the kernel is the complex line of X_pos
    span = el.span_basis(ker)
    assert all(v[2 * k] == 0 and v[2 * k + 1] == 0 for v in span for k in range(3) if k != pos)
    assert len(stabilizer(N)) == 2


@pytest.mark.parametrize("e1", [1, -1])
@pytest.mark.parametrize("e2", [1, -1])
def test_strong_degeneration(e1, e2):
    psi, phi = strong_degeneration_angles(e1, e2)
    N = strong_degeneration(e1, e2)
    assert N.values == ndg_normal_form(3, 1, phi, psi).values
    assert len(hermitian_form(N).kernel) == 4
    assert len(stabilizer(N)) == 4


@pytest.mark.parametrize("psi,phi", [(4, 0), (2, 6), (-2, 6), (4, 12), (-4, 0), (2, -6)])
def test_second_kind(psi, phi):
    N = ndg_normal_form(3, 1, phi, psi)
    assert not three_form(N).is_volume
    assert len(stabilizer(N)) == 2
    pm = phi_map(N)
    assert pm.fixed_lines is not None and len(pm.fixed_lines) == 3
    assert pm.coordinate_lines_fixed


def test_phi_with_repeated_eigenvalue():
    pm = phi_map(ndg_normal_form(3, 1, 2, 2))
    assert pm.discriminant == 0 and pm.fixed_lines is None


def test_zero_angles_have_large_stabilizer():
    assert len(stabilizer(ndg_normal_form(3, 1, 0, 0))) == 8


@given(normal_forms())
def test_stabilizer_elements_are_derivations_of_n(N):
    hf = hermitian_form(N)
    n = N.dim
    units = [[F(int(k == i)) for k in range(n)] for i in range(n)]
    for A in stabilizer(N):
        assert el.matmul(A, N.J.J) == el.matmul(N.J.J, A)
        for i in range(n):
            for j in range(i + 1, n):
                lhs = el.matvec(A, N(units[i], units[j]))
                rhs = [a + b for a, b in zip(N(el.matvec(A, units[i]), units[j]),
                                             N(units[i], el.matvec(A, units[j])))]
                assert all(a - b == 0 for a, b in zip(lhs, rhs))
        assert annihilates_forms(N, A, hf)
