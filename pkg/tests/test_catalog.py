from fractions import Fraction

import pytest

from ndglie.catalog import build_catalog, catalog, dumps, load_default, loads
from ndglie.liealg import Embedding, InvariantError, LieAlgebra, QuotientSetup
from ndglie.scalars import SQRT2

F = Fraction


def test_shipped_file_round_trips():
    text = dumps(load_default())
    assert dumps(loads(text)) == text


def test_shipped_file_matches_constructors():
    fresh = build_catalog(load_default().witnesses)
    assert dumps(fresh) == dumps(load_default())


def test_lookup_kinds():
    assert isinstance(catalog("l0"), LieAlgebra)
    assert isinstance(catalog("so5_u2"), QuotientSetup)
    assert isinstance(catalog("p2_sp11", kind="quotient"), QuotientSetup)
    assert isinstance(catalog("so4_so5", kind="embedding"), Embedding)
    with pytest.raises(KeyError):
        catalog("nonexistent")


def test_irrational_constants_round_trip():
    g = LieAlgebra("tw", 3, {(0, 1): {2: SQRT2}}, ["a", "b", "c"])
    text = "algebra tw dim 3\nlabels a b c\nbracket 0 1 2 0 0 1 0 0 0 0 0\n"
    cat = loads(text)
    assert cat.algebras["tw"].brackets == g.brackets


def test_broken_algebra_rejected():
    text = "\n".join([
        "algebra bad dim 3",
        "bracket 0 1 0 1 0 0 0 0 0 0 0",
        "bracket 0 1 2 1 0 0 0 0 0 0 0",
        "bracket 1 2 0 1 0 0 0 0 0 0 0",
        "bracket 0 2 1 -1 0 0 0 0 0 0 0",
    ])
    with pytest.raises(InvariantError):
        loads(text)


def test_malformed_literal_rejected():
    with pytest.raises(ValueError):
        loads("algebra x dim 2\nbracket 0 1 0 1 0 0\n")
