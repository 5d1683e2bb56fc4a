from fractions import Fraction

import hypothesis.strategies as st

from ndglie.scalars import FieldElement

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def field_elements(draw):
    return FieldElement.from_coords([draw(rationals) for _ in range(8)])


@st.composite
def real_field_elements(draw):
    c = [draw(rationals) for _ in range(4)]
    return FieldElement.from_coords([c[0], 0, c[1], 0, c[2], 0, c[3], 0])


def rational_matrix(rows, cols):
    return st.lists(st.lists(rationals, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def square_matrix(n, elements=small_ints):
    return st.lists(st.lists(elements.map(Fraction), min_size=n, max_size=n), min_size=n, max_size=n)
