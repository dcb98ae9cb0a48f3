import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from linklab.library import load
from linklab.polyring import RingDescriptor

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("thorough", deadline=None, max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

P = 32003


@pytest.fixture
def skew_lines():
    return load("skew_lines")


@pytest.fixture
def quartic():
    return load("twisted_quartic")


@pytest.fixture
def link_ci():
    return load("quartic_link_ci")


def exponents(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def polynomials(draw, ring, max_terms=4, max_exp=3, coeff_range=20):
    terms = draw(st.dictionaries(exponents(ring.num_vars, max_exp),
                                 st.integers(-coeff_range, coeff_range), max_size=max_terms))
    return ring.poly(terms)


@st.composite
def homogeneous_polynomials(draw, ring, degree, max_terms=3):
    n = ring.num_vars
    monos = []
    for _ in range(draw(st.integers(1, max_terms))):
        cuts = sorted(draw(st.lists(st.integers(0, degree), min_size=n - 1, max_size=n - 1)))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
        monos.append(tuple(parts))
    coeffs = draw(st.lists(st.integers(1, 50), min_size=len(monos), max_size=len(monos)))
    return ring.poly(dict(zip(monos, coeffs)))


@st.composite
def squarefree_supports(draw, n, max_gens=5):
    """Nonempty supports as bitmasks, so the ideal is proper and nonzero."""
    return draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_gens))


def monomial_ideal_from(ring, exps_list):
    from linklab.groebner import Ideal

    return Ideal(ring, [ring.monomial(e) for e in exps_list])


def ring(n, p=P, order="grevlex"):
    return RingDescriptor(n, p, order)
