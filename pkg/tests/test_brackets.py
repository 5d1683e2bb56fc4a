from fractions import Fraction

import pytest

from ndglie.brackets import (
    SOLVABLE_CASES, bracket_space_dim, build_candidate, certify_degenerate, certify_split,
    degeneracy_polynomial, invariant_structures, is_solution, solution_algebra_ok,
    witness_degeneracy,
)
from ndglie.catalog import witnesses
from ndglie.jacobi import instantiate, jacobi_system
from ndglie.liealg import check_jacobi

F = Fraction


@pytest.mark.parametrize("case,expected", [("p", 2), ("r", 2), ("l0", 24), ("l1", 2), ("l2", 6)])
def test_bracket_space_dims(case, expected):
    assert bracket_space_dim(case) == expected


def test_unknown_case():
    with pytest.raises(KeyError):
        bracket_space_dim("q")


@pytest.mark.parametrize("case", ["r", "l1", "l0"])
def test_cohomology_deformation_is_forced_to_vanish(case):
    res = certify_split(case)
    assert res.forced is True
    assert res.n_mu > 0


def test_vacuous_split_without_cohomology():
    res = certify_split("p")
    assert res.forced is True and res.n_mu == 0


@pytest.mark.parametrize("case", list(SOLVABLE_CASES))
def test_degeneracy_certificate(case):
    cert = certify_degenerate(case)
    assert cert.certified is True
    assert cert.checks


def test_zero_point_is_the_split_algebra():
    c = build_candidate("l2")
    assert is_solution(c, {})
    assert solution_algebra_ok(c, {})


@pytest.mark.parametrize("case", ["l0", "l2", "r_u"])
def test_witnesses_round_trip(case):
    c = build_candidate(case)
    eqs = jacobi_system(c)
    pts = witnesses(case)
    assert pts
    for p in pts:
        assert is_solution(c, p, eqs)
        assert check_jacobi(instantiate(c, p))


def test_witnesses_are_degenerate_pointwise():
    c = build_candidate("l0")
    structures = invariant_structures("l0", samples=2)
    for p in witnesses("l0")[:10]:
        for J in structures:
            vals = [p.get(v, F(0)) for v in c.names]
            assert degeneracy_polynomial(c, J).evaluate(vals) == 0
    n, ok = witness_degeneracy("l0")
    assert n >= 20 and ok


def test_nonsolution_detected():
    c = build_candidate("l0")
    eqs = jacobi_system(c)
    # t13^2 + t14^2 appears in the system, so t13 = 1 alone is not a solution
    assert not is_solution(c, {"t13": F(1)}, eqs)
