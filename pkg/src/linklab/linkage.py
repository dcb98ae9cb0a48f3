"""Linkage by complete intersections: construction, verification, chains."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateLinkError,
    LinkageError,
    LinklabError,
    RingMismatchError,
    ZeroModuleError,
)
from .groebner import Ideal
from .ideal_ops import (
    colon,
    find_regular_sequence_in,
    height,
    is_complete_intersection,
    krull_dimension,
)
from .resolution import depth_and_pd, minimal_free_resolution, quotient_presentation
from .stanley_reisner import complex_of_ideal, is_squarefree_monomial


@dataclass(frozen=True)
class Snapshot:
    """depth/dim/height of R/I at the time a link was recorded."""

    depth: int
    dim: int
    height: int
    pd: int

    @property
    def cohen_macaulay(self) -> bool:
        return self.depth == self.dim

    @classmethod
    def of(cls, I: Ideal) -> "Snapshot":
        rep = krull_dimension(I)
        pd, depth = depth_and_pd(I, minimal_free_resolution(I))
        return cls(depth=depth, dim=rep.krull_dim, height=rep.height, pd=pd)


@dataclass
class LinkVerdict:
    ok: bool
    reasons: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


@dataclass
class LinkageRecord:
    a: Ideal
    c: Ideal
    b: Ideal
    verified: bool
    invariants_of_a: Snapshot
    invariants_of_b: Snapshot
    unmixed: str  # how unmixedness of a is known
    notes: list[str] = field(default_factory=list)


def unmixed_status(a: Ideal, assume_unmixed: bool | None) -> str:
    if is_squarefree_monomial(a):
        if complex_of_ideal(a).is_pure():
            return "verified (pure Stanley-Reisner complex)"
        raise LinkageError("unmixed", "squarefree ideal has a non-pure complex")
    if assume_unmixed is False:
        raise LinkageError("unmixed", "caller declared the ideal mixed")
    if assume_unmixed:
        return "asserted by caller"
    return "unknown (not squarefree, not asserted)"


def verify_link(a: Ideal, b: Ideal, c: Ideal) -> LinkVerdict:
    """Check b = c:a, a = c:b, c ⊆ a ∩ b, c a CI of the common height."""
    if not (a.ring == b.ring == c.ring):
        raise RingMismatchError("ideals of a link must share a ring")
    reasons = []
    if not a.contains_ideal(c):
        reasons.append("c is not contained in a")
    if not b.contains_ideal(c):
        reasons.append("c is not contained in b")
    if reasons:
        return LinkVerdict(False, reasons)
    if not is_complete_intersection(c):
        reasons.append("c is not a complete intersection")
    hc, ha, hb = height(c), height(a), height(b)
    if not hc == ha == hb:
        reasons.append(f"heights differ: ht c={hc}, ht a={ha}, ht b={hb}")
    if colon(c, a) != b:
        reasons.append("c : a differs from b")
    if colon(c, b) != a:
        reasons.append("c : b differs from a")
    return LinkVerdict(not reasons, reasons)


def link(a: Ideal, c: Ideal, assume_unmixed: bool | None = None) -> LinkageRecord:
    """Link ``a`` by the complete intersection ``c``: b = c : a, then verify."""
    if a.ring != c.ring:
        raise RingMismatchError("a and c live in different rings")
    if not a.contains_ideal(c):
        raise LinkageError("c-in-a", "c is not contained in a")
    if not is_complete_intersection(c):
        raise LinkageError("complete-intersection", "c is not a complete intersection")
    hc, ha = height(c), height(a)
    if hc != ha:
        raise LinkageError("height", f"ht c = {hc} but ht a = {ha}")
    how = unmixed_status(a, assume_unmixed)
    b = colon(c, a)
    if b.is_unit():
        raise DegenerateLinkError()
    b = Ideal(a.ring, b.groebner_basis())
    verdict = verify_link(a, b, c)
    rec = LinkageRecord(
        a=a, c=c, b=b, verified=verdict.ok,
        invariants_of_a=Snapshot.of(a), invariants_of_b=Snapshot.of(b),
        unmixed=how, notes=list(verdict.reasons),
    )
    return rec


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def find_ci_link(a: Ideal, seed=0, assume_unmixed: bool | None = None,
                 max_attempts: int = 4) -> LinkageRecord:
    """Link ``a`` by a complete intersection found inside it.

    When ``a`` is itself a complete intersection the first candidate is often
    ``a`` itself; the search then moves to random combinations one degree up.
    """
    rng = _rng(seed)
    h = height(a)
    degree = None
    notes = []
    for _ in range(max_attempts):
        seq = find_regular_sequence_in(a, h, seed=rng, degree=degree)
        c = Ideal(a.ring, seq)
        try:
            rec = link(a, c, assume_unmixed)
        except DegenerateLinkError:
            notes.append("a is a complete intersection; raised the degree of the linking CI")
            base = max(g.degree() for g in a.generators if g)
            degree = base + 1 if degree is None else degree + 1
            continue
        rec.notes.extend(notes)
        return rec
    raise DegenerateLinkError("no proper link found: every candidate CI equals a")


def canonical_depth(a: Ideal, record: LinkageRecord) -> int:
    """depth of K_{R/a}, computed as the module (c:a)/c."""
    if not record.verified:
        raise LinkageError("verified", "canonical depth needs a verified link")
    if a is record.a or a == record.a:
        other = record.b
    elif a == record.b:
        other = record.a
    else:
        raise LinkageError("member", "ideal is not an end of this link")
    M = quotient_presentation(other, record.c)
    if not M.degrees:
        raise ZeroModuleError("canonical module presented as the zero module")
    _, depth = depth_and_pd(M)
    return depth


@dataclass
class LinkChain:
    ideals: list[Ideal]
    records: list[LinkageRecord]
    error: str | None = None

    @property
    def depths(self) -> list[int]:
        if not self.records:
            return [Snapshot.of(self.ideals[0]).depth] if self.ideals else []
        out = [self.records[0].invariants_of_a.depth]
        out.extend(r.invariants_of_b.depth for r in self.records)
        return out

    @property
    def complete(self) -> bool:
        return self.error is None


def even_link_chain(a: Ideal, steps: int, seed=0, assume_unmixed: bool | None = None) -> LinkChain:
    """a = I_0 ~ I_1 ~ ... ~ I_steps with a fresh complete intersection per step."""
    if steps < 0 or steps % 2:
        raise ValueError("steps must be a non-negative even integer")
    children = np.random.SeedSequence(seed).spawn(steps)
    chain = LinkChain([a], [])
    current = a
    for k in range(steps):
        try:
            rec = find_ci_link(current, np.random.default_rng(children[k]),
                               assume_unmixed if k == 0 else True)
        except LinklabError as exc:
            chain.error = f"stage {k + 1}: {exc}"
            return chain
        if k > 0:
            rec.unmixed = "linked ideal (unmixed by linkage)"
        chain.records.append(rec)
        chain.ideals.append(rec.b)
        if not rec.verified:
            chain.error = f"stage {k + 1}: link failed verification: {rec.notes}"
            return chain
        current = rec.b
    return chain
