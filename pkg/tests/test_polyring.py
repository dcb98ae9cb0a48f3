from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linklab.errors import DimensionError, ZeroPolynomialError
from linklab.polyring import (
    RingDescriptor,
    compare_monomials,
    is_prime,
    order_key,
)

from conftest import exponents, polynomials

R3 = RingDescriptor(3, 7)
Q3 = RingDescriptor(3, 0)


# brute-force order definitions, written independently of the engine's keys
def _lex_cmp(a, b):
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def _oracle_cmp(a, b, order):
    if order == "lex":
        return _lex_cmp(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    if order == "glex":
        return _lex_cmp(a, b)
    for x, y in zip(reversed(a), reversed(b)):  # grevlex: last differing variable
        if x != y:
            return 1 if x < y else -1
    return 0


def test_grevlex_degree_two_chain():
    assert compare_monomials((2, 0), (1, 1)) == 1
    assert compare_monomials((1, 1), (0, 2)) == 1


def test_orders_disagree_where_expected():
    a, b = (1, 0, 2), (0, 3, 0)  # x0*x2^2 vs x1^3
    assert compare_monomials(a, b, "lex") == 1
    assert compare_monomials(a, b, "grevlex") == -1
    assert compare_monomials(a, b, "glex") == 1


@pytest.mark.parametrize("order", ["lex", "glex", "grevlex"])
def test_order_matches_brute_force(order):
    monos = list(product(range(3), repeat=3))
    for a in monos:
        for b in monos:
            assert compare_monomials(a, b, order) == _oracle_cmp(a, b, order)


@pytest.mark.parametrize("order", ["lex", "glex", "grevlex"])
@given(a=exponents(3), b=exponents(3), c=exponents(3))
def test_order_is_multiplicative(order, a, b, c):
    ac = tuple(x + z for x, z in zip(a, c))
    bc = tuple(y + z for y, z in zip(b, c))
    assert compare_monomials(a, b, order) == compare_monomials(ac, bc, order)


def test_order_key_sorts_descending():
    key = order_key("grevlex", 2)
    monos = [(0, 2), (2, 0), (1, 1), (0, 0)]
    assert sorted(monos, key=key) == [(2, 0), (1, 1), (0, 2), (0, 0)]


def test_is_prime_against_trial_division():
    def slow(n):
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))

    assert [n for n in range(200) if is_prime(n)] == [n for n in range(200) if slow(n)]
    assert is_prime(32003)


def test_ring_validation():
    with pytest.raises(ValueError):
        RingDescriptor(2, 4)
    with pytest.raises(ValueError):
        RingDescriptor(0)
    with pytest.raises(ValueError):
        RingDescriptor(2, 5, "revlex")
    with pytest.raises(DimensionError):
        RingDescriptor(2).monomial((1, 2, 3))


@given(f=polynomials(R3), g=polynomials(R3), h=polynomials(R3))
def test_ring_axioms_mod_p(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == R3.zero
    assert f * R3.one == f


@given(f=polynomials(Q3), g=polynomials(Q3))
def test_ring_axioms_over_q(f, g):
    assert (f + g) * (f - g) == f * f - g * g
    if f and g:
        assert (f * g).degree() == f.degree() + g.degree()


@given(f=polynomials(Q3), g=polynomials(Q3))
def test_reduction_mod_p_is_a_homomorphism(f, g):
    def mod7(u):  # integer coefficients only, so the reduction is termwise
        return R3.poly({m: int(c) for c, m in u.terms})

    assert mod7(f * g) == mod7(f) * mod7(g)
    assert mod7(f + g) == mod7(f) + mod7(g)


@given(f=polynomials(RingDescriptor(3, 3), max_terms=3, max_exp=2))
def test_frobenius_is_the_pth_power(f):
    assert f.frobenius(3) == f**3
    assert f.frobenius(9) == (f**3) ** 3


@given(f=polynomials(R3), g=polynomials(R3), pt=st.tuples(*[st.integers(0, 6)] * 3))
def test_evaluation_is_a_homomorphism(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt) % 7
    assert (f + g).evaluate(pt) == (f.evaluate(pt) + g.evaluate(pt)) % 7


@given(f=polynomials(R3))
def test_str_parse_round_trip(f):
    assert R3.parse(str(f)) == f


def test_leading_term_and_monic():
    R = RingDescriptor(4)
    f = R.parse("3*x1^3 - x0^2*x2 + x0*x3")
    c, m = f.leading_term()
    assert m == (0, 3, 0, 0)  # grevlex: x0^2*x2 loses on the last variable
    assert c == 3
    assert f.monic().leading_term()[0] == 1
    with pytest.raises(ZeroPolynomialError):
        R.zero.leading_term()


def test_homogeneity_and_degree():
    R = RingDescriptor(4)
    assert R.parse("x0*x3 - x1*x2").is_homogeneous()
    assert not R.parse("x0 + x1^2").is_homogeneous()
    assert R.parse("x0 + x1^2").degree() == 2


def test_symmetric_representatives_in_output():
    R = RingDescriptor(2, 7)
    assert str(R.parse("6*x0")) == "-x0"
