from fractions import Fraction

from hypothesis import given
import hypothesis.strategies as st

from ndglie.poly import (
    MultiPoly, buchberger, format_poly, ideal_member, minimal_polynomial, parse_poly, poly_det,
    radical_member, real_points, univariate_real_roots,
)

F = Fraction
NAMES = ("x", "y", "z")
x, y, z = MultiPoly.gens(NAMES)


@st.composite
def polys(draw, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, 2)) for _ in NAMES)
        terms[e] = F(draw(st.integers(-5, 5)), draw(st.integers(1, 3)))
    return MultiPoly({e: c for e, c in terms.items() if c}, NAMES)


points = st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=4)] * 3)


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == MultiPoly.zero(NAMES)


@given(polys(), polys(), points)
def test_evaluation_is_a_homomorphism(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@given(polys())
def test_text_round_trip(a):
    assert parse_poly(format_poly(a), NAMES) == a


@given(polys(), polys(), polys())
def test_combinations_lie_in_the_ideal(a, b, c):
    gens = [x * x - y, x * y - z]
    gb = buchberger(gens)
    assert gb.complete
    assert ideal_member(a * gens[0] + b * gens[1], gb)


def test_twisted_cubic():
    gb = buchberger([x * x - y, x * y - z])
    assert gb.dimension() == 1
    assert not ideal_member(x, gb)
    assert ideal_member(y * y - x * z, gb)


def test_unit_and_radical():
    assert buchberger([x, x - 1]).is_unit()
    assert radical_member(x, [x ** 3])
    assert not ideal_member(x, buchberger([x ** 3]))
    # radical membership is over C: x^2 + y^2 does not force y = 0
    assert radical_member(y, [x * x + y * y]) is False


def test_budget_is_reported():
    gens = [x ** 3 * y - z ** 2 + x, y ** 3 - x * z + 1, z ** 3 - x * y * y]
    gb = buchberger(gens, max_pairs=1)
    assert not gb.complete and gb.reason


def test_zero_dimensional_points():
    pts = real_points([x * x - 1, y - x, z])
    assert sorted(pts.points) == [(-1, -1, 0), (1, 1, 0)]
    irr = real_points([x * x - 2, y, z])
    assert irr.points == [] and irr.irrational_real == 2


def test_minimal_polynomial_and_roots():
    gb = buchberger([x * x - 3 * x + 2, y - x, z])
    mp = minimal_polynomial(gb, 0)
    roots, irrational = univariate_real_roots(mp)
    assert sorted(roots) == [1, 2] and irrational == 0


def test_poly_det():
    m = [[x, y], [z, x]]
    assert poly_det(m) == x * x - y * z
    one = MultiPoly.const(1, NAMES)
    zero = MultiPoly.zero(NAMES)
    assert poly_det([[one, zero, zero], [zero, x, zero], [zero, zero, y]]) == x * y
