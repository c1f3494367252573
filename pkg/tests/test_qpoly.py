from __future__ import annotations

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlat.qpoly import ONE, QPoly, QRat, gauss_multinomial, poch_q2, poly_gcd, q2_binomial
from oracles import q, qrat_to_sympy, to_sympy

polys = st.builds(
    QPoly,
    st.lists(st.integers(-5, 5), min_size=0, max_size=5),
    st.integers(-3, 3),
)
nonzero = polys.filter(lambda p: not p.is_zero())


def P(*coeffs, low=0):
    return QPoly(coeffs, low)


def test_trim_and_shift():
    p = QPoly([0, 0, 3, 0, 0], low=-1)
    assert p.low == 1 and p.coeffs == (3,)
    assert p.shift(2) == QPoly.monomial(3, 3)
    assert QPoly([0, 0]).is_zero()


def test_poch_examples():
    assert poch_q2(0) == ONE
    assert poch_q2(1) == P(1, 0, -1)
    assert poch_q2(2) == P(1, 0, -1, 0, -1, 0, 1)


@pytest.mark.parametrize("d", range(7))
def test_poch_degree(d):
    assert poch_q2(d).high == d * (d + 1)


def test_gauss_multinomial_examples():
    assert gauss_multinomial(2, (1, 1)) == P(1, 0, 1)
    assert gauss_multinomial(3, (3,)) == ONE
    assert gauss_multinomial(3, (2, 1)) == P(1, 0, 1, 0, 1)
    assert gauss_multinomial(3, (1, 2)) == gauss_multinomial(3, (2, 1))


def test_gauss_multinomial_rejects_bad_composition():
    with pytest.raises(ValueError):
        gauss_multinomial(3, (1, 1))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(6) for k in range(n + 1)])
def test_q2_binomial_against_sympy(n, k):
    ref = sp.cancel(sp.prod([1 - q ** (2 * i) for i in range(1, n + 1)])
                    / sp.prod([1 - q ** (2 * i) for i in range(1, k + 1)])
                    / sp.prod([1 - q ** (2 * i) for i in range(1, n - k + 1)]))
    assert sp.expand(to_sympy(q2_binomial(n, k)) - ref) == 0


@given(polys, polys)
def test_ring_ops_match_sympy(f, g):
    assert sp.expand(to_sympy(f + g) - (to_sympy(f) + to_sympy(g))) == 0
    assert sp.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sp.expand(to_sympy(f - g) - (to_sympy(f) - to_sympy(g))) == 0


@given(polys, nonzero)
def test_exact_div_roundtrip(f, g):
    assert (f * g).exact_div(g) == f


def test_exact_div_remainder_raises():
    with pytest.raises(ArithmeticError):
        P(1, 0, 1).exact_div(P(1, 1))


@given(nonzero.filter(lambda p: p.is_polynomial()), nonzero.filter(lambda p: p.is_polynomial()))
@settings(max_examples=60)
def test_gcd_matches_sympy(f, g):
    ours = to_sympy(poly_gcd(f, g))
    ref = sp.gcd(to_sympy(f), to_sympy(g))
    assert sp.cancel(ours / ref).is_number


def test_div_q_minus_one():
    assert P(-1, 0, 1).div_q_minus_one() == P(1, 1)
    with pytest.raises(ArithmeticError):
        P(1, 1).div_q_minus_one()


def test_qrat_reduces():
    r = QRat(P(-1, 0, 1), P(-1, 1))
    assert r.den == ONE and r.num == P(1, 1)
    assert r.is_laurent()


def test_qrat_denominator_positive_leading():
    r = QRat(ONE, P(1, -1))
    assert r.den.leading() > 0


def test_qrat_monomials_move_to_numerator():
    r = QRat(ONE, QPoly.monomial(2) * P(1, 1))
    assert r.den == P(1, 1) and r.num == QPoly.monomial(-2)


@given(polys, nonzero.filter(lambda p: p.is_polynomial()), polys, nonzero.filter(lambda p: p.is_polynomial()))
@settings(max_examples=60)
def test_qrat_field_ops_match_sympy(n1, d1, n2, d2):
    r1, r2 = QRat(n1, d1), QRat(n2, d2)
    s1, s2 = to_sympy(n1) / to_sympy(d1), to_sympy(n2) / to_sympy(d2)
    assert sp.cancel(qrat_to_sympy(r1 + r2) - (s1 + s2)) == 0
    assert sp.cancel(qrat_to_sympy(r1 * r2) - s1 * s2) == 0
    if not n2.is_zero():
        assert sp.cancel(qrat_to_sympy(r1 / r2) - s1 / s2) == 0


def test_qrat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        QRat(ONE, QPoly())
