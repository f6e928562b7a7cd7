from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from gauge3.exactnum import (
    CycloNum,
    FieldMismatch,
    coerce,
    cyclo_field,
    cyclotomic_polynomial,
    rational,
    sqrt3,
    imag_unit,
    zeta,
    zeta3,
)


def _naive_poly_div(num, den):
    # independent oracle: long division over Q, low degree first
    num = [Fraction(c) for c in num]
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert all(c == 0 for c in num)
    return q


def test_phi_1_is_x_minus_1():
    assert cyclotomic_polynomial(1) == (Fraction(-1), Fraction(1))


def test_phi_4_by_division_oracle():
    # divide x^4 - 1 by (x-1)(x+1) = x^2 - 1
    q = _naive_poly_div([-1, 0, 0, 0, 1], [Fraction(-1), Fraction(0), Fraction(1)])
    assert tuple(q) == cyclotomic_polynomial(4) == (Fraction(1), Fraction(0), Fraction(1))


def test_phi_12_by_division_oracle():
    # x^12 - 1 divided by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6
    den = [Fraction(1)]
    for d in (1, 2, 3, 4, 6):
        phi = cyclotomic_polynomial(d)
        new = [Fraction(0)] * (len(den) + len(phi) - 1)
        for i, a in enumerate(den):
            for j, b in enumerate(phi):
                new[i + j] += a * b
        den = new
    num = [Fraction(0)] * 13
    num[0], num[12] = Fraction(-1), Fraction(1)
    q = _naive_poly_div(num, den)
    assert tuple(q) == cyclotomic_polynomial(12)
    assert cyclotomic_polynomial(12) == (Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(1))


@pytest.mark.parametrize("n", range(1, 61))
def test_phi_n_annihilates_zeta_n(n):
    f = cyclo_field(n)
    z = f.zeta_power(1)
    acc = f.zero()
    for c in reversed(f.min_poly):
        acc = acc * z + c
    assert acc.is_zero()


def test_root_of_unity_products():
    assert zeta(12, 1) * zeta(12, 11) == 1
    f4 = cyclo_field(4)
    i = f4.zeta_power(1)
    assert (1 + i) * (1 - i) == 2
    assert zeta(12, 4).inv() == zeta(12, 8)


def test_coerce_examples():
    f12 = cyclo_field(12)
    half = rational(Fraction(1, 2))
    assert coerce(half, f12) == f12.from_rational(Fraction(1, 2))
    z3 = cyclo_field(3).zeta_power(1)
    assert coerce(z3, f12) == zeta(12, 4)
    i4 = cyclo_field(4).zeta_power(1)
    i12 = coerce(i4, f12)
    assert i12 == zeta(12, 3)
    assert i12 * i12 == -1


def test_coerce_requires_divisibility():
    with pytest.raises(FieldMismatch):
        coerce(cyclo_field(5).zeta_power(1), cyclo_field(12))


def test_cross_field_operations_rejected():
    with pytest.raises(FieldMismatch):
        zeta(3) + zeta(4)


def test_embed_examples():
    with mpmath.workdps(40):
        assert abs(imag_unit().embed(30) - mpmath.mpc(0, 1)) < mpmath.mpf(10) ** -30
        s3 = sqrt3().embed(30)
        assert abs(s3 - mpmath.sqrt(3)) < mpmath.mpf(10) ** -30
        w = zeta3().embed(30)
        assert abs(w - mpmath.mpc(-0.5, mpmath.sqrt(3) / 2)) < mpmath.mpf(10) ** -30


def _elements(field, rng_ints):
    coords = [Fraction(a, b) for a, b in rng_ints]
    coords = coords[: field.degree] + [Fraction(0)] * max(0, field.degree - len(coords))
    return CycloNum(field, coords[: field.degree])


small_fracs = st.tuples(st.integers(-4, 4), st.integers(1, 3))


@settings(max_examples=40, deadline=None)
@given(st.lists(small_fracs, min_size=4, max_size=4), st.lists(small_fracs, min_size=4, max_size=4))
def test_field_axioms_q12(ca, cb):
    f = cyclo_field(12)
    a = _elements(f, ca)
    b = _elements(f, cb)
    assert a.conj().conj() == a
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()
    if not a.is_zero():
        assert a * a.inv() == 1


@settings(max_examples=25, deadline=None)
@given(st.lists(small_fracs, min_size=4, max_size=4), st.lists(small_fracs, min_size=4, max_size=4))
def test_embed_is_ring_hom(ca, cb):
    f = cyclo_field(12)
    a = _elements(f, ca)
    b = _elements(f, cb)
    with mpmath.workdps(35):
        lhs = (a * b).embed(25)
        rhs = a.embed(25) * b.embed(25)
        assert abs(lhs - rhs) < mpmath.mpf(10) ** -20


def test_real_iff_conj_fixed():
    s = sqrt3()
    assert s.conj() == s
    i = imag_unit()
    assert i.conj() == -i
    assert i.conj() != i


def test_rational_detection():
    x = zeta(12, 1) + zeta(12, 11)   # sqrt(3)
    sq = x * x
    assert sq.is_rational() and sq.as_rational() == 3
