from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistcat.abgroup import FinAbGroup
from twistcat.errors import StructuralError
from twistcat.unitscalar import ONE

small_factor_lists = st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=3)


def test_elt_add_examples():
    assert FinAbGroup((2,)).add((1,), (1,)) == (0,)
    assert FinAbGroup((4,)).add((3,), (2,)) == (1,)
    assert FinAbGroup((2, 3)).add((1, 2), (1, 2)) == (0, 1)


def test_shape_mismatch_is_structural():
    g = FinAbGroup((2, 3))
    with pytest.raises(StructuralError):
        g.add((1,), (1, 2))
    with pytest.raises(StructuralError):
        g.check((1, 5))


def test_pairing_examples():
    z2 = FinAbGroup((2,))
    assert z2.pairing_exponent((1,), (1,)) == Fraction(1, 2)
    assert z2.pairing((0,), (1,)) == ONE
    z4 = FinAbGroup((4,))
    assert z4.pairing_exponent((1,), (3,)) == Fraction(3, 4)


def test_pairing_bimultiplicative_exhaustive():
    for factors in [(2,), (4,), (2, 3), (2, 2, 2), (6, 2), (4, 4)]:
        g = FinAbGroup(factors)
        assert g.order <= 64
        for chi, a, b in product(g.elements(), g.elements(), g.elements()):
            assert g.pairing(chi, g.add(a, b)) == g.pairing(chi, a) * g.pairing(chi, b)
            assert g.pairing(g.add(chi, a), b) == g.pairing(chi, b) * g.pairing(a, b)


def test_pairing_nondegenerate():
    for factors in [(2,), (5,), (2, 4), (3, 3)]:
        g = FinAbGroup(factors)
        for a in g.elements():
            if a == g.zero:
                continue
            assert any(g.pairing(chi, a) != ONE for chi in g.elements())


@given(small_factor_lists, st.data())
def test_index_round_trip(factors, data):
    g = FinAbGroup(tuple(factors))
    idx = data.draw(st.integers(min_value=0, max_value=g.order - 1))
    assert g.index(g.element_at(idx)) == idx


@given(small_factor_lists, st.data())
def test_neg_is_inverse(factors, data):
    g = FinAbGroup(tuple(factors))
    a = g.element_at(data.draw(st.integers(min_value=0, max_value=g.order - 1)))
    assert g.add(a, g.neg(a)) == g.zero


def test_add_index_table_matches_elementwise():
    g = FinAbGroup((3, 2))
    for a in g.elements():
        for b in g.elements():
            assert g.add_index_table[g.index(a), g.index(b)] == g.index(g.add(a, b))


def test_invalid_factors_rejected():
    with pytest.raises(StructuralError):
        FinAbGroup((0,))
    with pytest.raises(StructuralError):
        FinAbGroup(())


def test_dual_generators_and_exponent():
    g = FinAbGroup((4, 2))
    assert g.dual_generators() == [(1, 0), (0, 1)]
    assert g.exponent == 4
    assert FinAbGroup((1,)).dual_generators() == [(0,)]
