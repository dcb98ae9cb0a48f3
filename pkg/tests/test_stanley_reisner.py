from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linklab.errors import NotSquarefreeError
from linklab.groebner import Ideal
from linklab.polyring import RingDescriptor
from linklab.resolution import depth_and_pd, minimal_free_resolution
from linklab.stanley_reisner import (
    HOCHSTER_MAX_VARS,
    SimplicialComplex,
    complex_of_ideal,
    hochster_betti,
    hochster_graded_betti,
    ideal_of_complex,
    is_squarefree_monomial,
    matrix_rank,
    reduced_homology_dims,
    sqf_invariants,
)

from conftest import squarefree_supports

# six-vertex triangulation of the real projective plane
RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
       (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]


def _ideal(n, masks, p=32003):
    R = RingDescriptor(n, p)
    return Ideal(R, [R.monomial([(m >> i) & 1 for i in range(n)]) for m in masks])


def _faces_oracle(n, masks):
    """Every subset containing no generator support, by enumeration."""
    out = set()
    for k in range(n + 1):
        for S in combinations(range(n), k):
            m = sum(1 << i for i in S)
            if not any((m & g) == g for g in masks):
                out.add(m)
    return out


def _all_faces(delta):
    out = set()
    for d in range(-1, delta.dimension + 1):
        out.update(delta.faces(d) if d >= 0 else [0])
    return out


@given(masks=squarefree_supports(5))
def test_complex_of_ideal_matches_subset_enumeration(masks):
    delta = complex_of_ideal(_ideal(5, masks))
    assert _all_faces(delta) == _faces_oracle(5, masks)


@given(masks=squarefree_supports(5))
def test_ideal_complex_round_trip(masks):
    I = _ideal(5, masks)
    delta = complex_of_ideal(I)
    assert ideal_of_complex(delta, I.ring) == I
    assert complex_of_ideal(ideal_of_complex(delta, I.ring)) == delta


def test_skew_lines_complex(skew_lines):
    delta = complex_of_ideal(skew_lines)
    assert sorted(map(sorted, delta.facet_sets())) == [[0, 1], [2, 3]]
    assert delta.is_pure() and delta.dimension == 1


@pytest.mark.parametrize("facets, n, expected", [
    ([(0, 1), (1, 2), (0, 2)], 3, [0, 0, 1]),  # circle
    ([(0,)], 1, [0, 0]),  # point
    ([(0,), (1,)], 2, [0, 1]),  # two points
    ([()], 3, [1]),  # only the empty face
    ([(0, 1, 2, 3)], 4, [0, 0, 0, 0, 0]),  # simplex
])
def test_reduced_homology_of_small_complexes(facets, n, expected):
    assert reduced_homology_dims(SimplicialComplex.from_facets(n, facets)) == expected


def test_void_complex_has_no_homology():
    assert reduced_homology_dims(SimplicialComplex(3, ())) == []


def test_projective_plane_homology_depends_on_the_field():
    delta = SimplicialComplex.from_facets(6, RP2)
    assert reduced_homology_dims(delta, 2) == [0, 0, 1, 1]
    assert reduced_homology_dims(delta, 0) == [0, 0, 0, 0]
    # so R/I is CM in characteristic 0 (and large p) but not over F_2
    I2 = ideal_of_complex(delta, RingDescriptor(6, 2))
    Ip = ideal_of_complex(delta, RingDescriptor(6, 32003))
    assert sqf_invariants(I2).depth == 2
    assert sqf_invariants(Ip).depth == 3
    for I in (I2, Ip):
        assert hochster_graded_betti(I) == minimal_free_resolution(I).betti()


@settings(max_examples=30)
@given(masks=squarefree_supports(5))
def test_euler_characteristic(masks):
    delta = complex_of_ideal(_ideal(5, masks))
    h = reduced_homology_dims(delta)
    f = [1] + [len(delta.faces(d)) for d in range(delta.dimension + 1)]
    assert sum((-1) ** k * x for k, x in enumerate(h)) == sum((-1) ** k * x for k, x in enumerate(f))


@settings(max_examples=30)
@given(masks=squarefree_supports(5))
def test_hochster_matches_resolution(masks):
    I = _ideal(5, masks)
    res = minimal_free_resolution(I)
    assert hochster_graded_betti(I) == res.betti()
    sq = sqf_invariants(I)
    assert (sq.pd, sq.depth) == depth_and_pd(I, res)


def test_multigraded_betti_of_skew_lines(skew_lines):
    table = hochster_betti(skew_lines)
    # the last syzygy sits in multidegree x0x1x2x3
    assert table[(3, 0b1111)] == 1
    assert sum(v for (i, _), v in table.items() if i == 1) == 4


def test_sqf_invariants(skew_lines):
    inv = sqf_invariants(skew_lines)
    assert (inv.cd, inv.depth, inv.fgrade, inv.dim, inv.height, inv.pure) == (3, 1, 1, 2, 2, True)


def test_zero_and_unit_edge_cases():
    R = RingDescriptor(3)
    zero = sqf_invariants(Ideal(R, []))
    assert (zero.depth, zero.cd) == (3, 0)
    with pytest.raises(ValueError):
        sqf_invariants(Ideal(R, ["1"]))


def test_rejects_non_squarefree():
    R = RingDescriptor(3)
    assert not is_squarefree_monomial(Ideal(R, ["x0^2"]))
    assert not is_squarefree_monomial(Ideal(R, ["x0 + x1"]))
    with pytest.raises(NotSquarefreeError):
        complex_of_ideal(Ideal(R, ["x0*x1", "x2^2"]))


def test_variable_cap():
    R = RingDescriptor(HOCHSTER_MAX_VARS + 1)
    with pytest.raises(ValueError):
        hochster_betti(Ideal(R, [R.var(0)]))


@given(rows=st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_over_q_bounds_rank_mod_p(rows):
    assert matrix_rank(rows, 2) <= matrix_rank(rows, 0) <= 3
