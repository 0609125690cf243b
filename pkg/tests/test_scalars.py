from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from spinor_forge.scalars import GR_I, GR_ONE, GaussianRational, gr

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_unit_products():
    assert gr(1, 1) * gr(1, -1) == gr(2)
    assert GR_I * GR_I == gr(-1)


def test_division_cross_check():
    # (1/2) / i = -i/2, because (-i/2) * i = 1/2
    q = gr(F(1, 2)) / GR_I
    assert q == gr(0, F(-1, 2))
    assert q * GR_I == gr(F(1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GR_ONE / gr(0)


def test_conj_examples():
    assert gr(1, 1).conj() == gr(1, -1)
    assert gr(0).conj() == gr(0)
    a, b = gr(2, 3), gr(-1, 1)
    assert (a * b).conj() == a.conj() * b.conj()


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if a:
        assert (GR_ONE / a) * a == GR_ONE
    assert a + (-a) == gr(0)


@given(gaussians, gaussians)
def test_conj_is_involutive_ring_automorphism(a, b):
    assert a.conj().conj() == a
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()


@given(gaussians)
def test_norm2_is_conj_product(a):
    assert gr(a.norm2()) == a * a.conj()


def test_string_forms():
    assert str(gr(F(1, 2))) == "1/2"
    assert str(gr(0, -1)) == "-1i"
    assert str(gr(1, F(3, 4))) == "1+3/4i"
