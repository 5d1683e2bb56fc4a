import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from ndglie import exactlin as el
from ndglie.scalars import SQRT2, SQRT3, DomainError
from strategies import rational_matrix, square_matrix

F = Fraction


@given(rational_matrix(4, 6))
def test_rank_nullity(m):
    ker = el.kernel_basis(m, 6)
    assert el.rank(m) + len(ker) == 6
    for v in ker:
        assert el.matvec(m, v) == [0] * 4


@given(square_matrix(4))
def test_inverse_and_det(m):
    if el.det(m) == 0:
        assert not el.is_invertible(m)
    else:
        inv = el.inverse(m)
        assert el.matmul(m, inv) == el.identity(4)
        assert el.det(inv) == 1 / el.det(m)


@given(square_matrix(3), square_matrix(3))
def test_det_is_multiplicative(a, b):
    assert el.det(el.matmul(a, b)) == el.det(a) * el.det(b)


@given(rational_matrix(3, 4), st.lists(st.fractions(max_denominator=5), min_size=3, max_size=3))
def test_solve(m, b):
    x = el.solve(m, b)
    if x is None:
        aug = [row + [v] for row, v in zip(m, b)]
        assert el.rank(aug) > el.rank(m)
    else:
        assert el.matvec(m, x) == list(b)


def test_kernel_over_the_field_tower():
    m = [[SQRT2, F(1)], [F(2), SQRT2]]
    (v,) = el.kernel_basis(m, 2)
    assert el.matvec(m, v) == [0, 0]
    assert el.det([[SQRT3, SQRT2], [SQRT2, SQRT3]]) == 1


def test_span_tools():
    a = [[F(1), F(0), F(0)], [F(0), F(1), F(0)]]
    b = [[F(0), F(1), F(0)], [F(0), F(0), F(1)]]
    (w,) = el.intersect_spans(a, b)
    assert el.in_span(w, a) and el.in_span(w, b) and any(w)
    assert len(el.complete_basis(a, 3)) == 1
    assert el.coordinates([F(2), F(3), F(0)], a) == [2, 3]


def _random_invertible(rng, n):
    while True:
        p = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if el.det(p) != 0:
            return p


@pytest.mark.parametrize("form", [
    [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
    [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 1], [0, 0, 1, 2]],
    [[-1, 2, 0, 0, 0], [2, 0, 1, 0, 0], [0, 1, 3, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, -5]],
])
def test_signature_is_congruence_invariant(form):
    g = [[F(v) for v in row] for row in form]
    sig = el.signature(g)
    rng = random.Random(7)
    for _ in range(100):
        p = _random_invertible(rng, len(g))
        assert el.signature(el.matmul(el.transpose(p), el.matmul(g, p))) == sig


def test_signature_values():
    assert el.signature(el.diag([F(1), F(-1), F(0), F(3)])) == (2, 1, 1)
    assert el.signature([[F(0), F(1)], [F(1), F(0)]]) == (1, 1, 0)
    with pytest.raises(DomainError):
        el.signature([[F(0), F(1)], [F(2), F(0)]])
