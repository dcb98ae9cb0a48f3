import pytest

from linklab.errors import DegenerateLinkError, LinkageError, RingMismatchError
from linklab.groebner import Ideal
from linklab.ideal_ops import colon
from linklab.linkage import (
    Snapshot,
    canonical_depth,
    even_link_chain,
    find_ci_link,
    link,
    verify_link,
)
from linklab.library import load
from linklab.polyring import RingDescriptor

R4 = RingDescriptor(4)


def test_concrete_link(skew_lines, quartic, link_ci):
    rec = link(skew_lines, link_ci)
    assert rec.verified
    assert rec.b == quartic
    assert "pure" in rec.unmixed
    assert rec.invariants_of_a == Snapshot(depth=1, dim=2, height=2, pd=3)
    assert rec.invariants_of_b.depth == 1


def test_verify_link_is_symmetric(skew_lines, quartic, link_ci):
    assert verify_link(skew_lines, quartic, link_ci)
    assert verify_link(quartic, skew_lines, link_ci)
    bad = verify_link(skew_lines, skew_lines, link_ci)
    assert not bad and bad.reasons


def test_printed_generators_do_not_link(skew_lines, link_ci):
    printed = load("twisted_quartic_printed")
    verdict = verify_link(skew_lines, printed, link_ci)
    assert not verdict
    assert "c is not contained in b" in verdict.reasons


def test_self_link_is_degenerate():
    a = Ideal(R4, ["x0"])
    with pytest.raises(DegenerateLinkError):
        link(a, a)


@pytest.mark.parametrize("c, hypothesis", [
    (["x0*x3 - x1*x2"], "height"),
    (["x0*x2", "x0*x3", "x1*x2"], "complete-intersection"),
    (["x0", "x3"], "c-in-a"),
])
def test_precondition_errors_name_the_hypothesis(skew_lines, c, hypothesis):
    with pytest.raises(LinkageError) as info:
        link(skew_lines, Ideal(R4, c))
    assert info.value.hypothesis == hypothesis


def test_mixed_input_is_rejected():
    a = Ideal(R4, ["x0*x1", "x0*x2"])  # (x0) ∩ (x1, x2): components of heights 1 and 2
    with pytest.raises(LinkageError) as info:
        link(a, Ideal(R4, ["x0*x1"]))
    assert info.value.hypothesis == "unmixed"
    q = load("twisted_quartic")
    with pytest.raises(LinkageError):
        link(q, load("quartic_link_ci"), assume_unmixed=False)


def test_ring_mismatch(skew_lines):
    with pytest.raises(RingMismatchError):
        link(skew_lines, load("quartic_link_ci", 2))


def test_monomial_link_of_skew_lines(skew_lines):
    c = Ideal(R4, ["x0*x2", "x1*x3"])
    rec = link(skew_lines, c)
    assert rec.verified
    assert colon(c, rec.b) == skew_lines
    # c = (x0,x1)∩(x0,x3)∩(x1,x2)∩(x2,x3); removing a's two components leaves the others
    assert rec.b == Ideal(R4, ["x0*x1", "x0*x2", "x1*x3", "x2*x3"])


def test_find_link_is_reproducible(skew_lines):
    r1 = find_ci_link(skew_lines, seed=11)
    r2 = find_ci_link(skew_lines, seed=11)
    assert r1.verified and r1.b == r2.b and r1.c == r2.c


def test_find_link_on_the_quartic(quartic):
    rec = find_ci_link(quartic, seed=0, assume_unmixed=True)
    assert rec.verified
    assert rec.unmixed == "asserted by caller"
    assert rec.invariants_of_a.height == rec.invariants_of_b.height == 2


def test_find_link_on_a_complete_intersection():
    a = Ideal(R4, ["x0*x1", "x2*x3"])
    rec = find_ci_link(a, seed=3, assume_unmixed=True)
    assert rec.verified
    assert rec.c != a
    assert any("complete intersection" in note for note in rec.notes)
    assert rec.invariants_of_b.cohen_macaulay


def test_canonical_depth(skew_lines, quartic, link_ci):
    rec = link(skew_lines, link_ci)
    assert canonical_depth(skew_lines, rec) == 2 == rec.invariants_of_b.depth + 1
    assert canonical_depth(quartic, rec) == 2 == rec.invariants_of_a.depth + 1
    with pytest.raises(LinkageError):
        canonical_depth(Ideal(R4, ["x0"]), rec)


def test_canonical_module_of_a_cm_ideal_is_maximal_cm():
    a = Ideal(R4, ["x0*x1", "x2*x3"])
    rec = find_ci_link(a, seed=1)
    assert canonical_depth(a, rec) == rec.invariants_of_a.dim == 2


def test_chains(skew_lines):
    chain = even_link_chain(skew_lines, 2, seed=4)
    assert chain.complete
    assert len(chain.ideals) == 3
    assert chain.depths[0] == chain.depths[-1] == 1
    assert even_link_chain(skew_lines, 2, seed=4).ideals[-1] == chain.ideals[-1]
    trivial = even_link_chain(skew_lines, 0)
    assert trivial.ideals == [skew_lines] and trivial.depths == [1]
    with pytest.raises(ValueError):
        even_link_chain(skew_lines, 3)


def test_chain_from_a_complete_intersection_stays_cm():
    a = Ideal(R4, ["x0*x1", "x2*x3"])
    chain = even_link_chain(a, 4, seed=2)
    assert chain.complete
    assert all(r.invariants_of_b.cohen_macaulay for r in chain.records)
