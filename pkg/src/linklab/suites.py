"""Verification suites: the fixed examples, the Hochster oracle, random linkage properties.

Each suite returns a plain report object whose text form is deterministic for
a given seed, so two runs can be compared byte for byte.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DegenerateLinkError, LinklabError
from .groebner import Ideal
from .ideal_ops import (
    colon,
    find_regular_sequence_in,
    height,
    intersect,
    is_complete_intersection,
    krull_dimension,
    variables_ideal,
)
from .library import determinantal_example, load
from .linkage import Snapshot, canonical_depth, even_link_chain, link
from .polyring import RingDescriptor
from .resolution import cd_bounds_char_p, depth_and_pd, minimal_free_resolution
from .stanley_reisner import (
    SimplicialComplex,
    complex_of_ideal,
    hochster_graded_betti,
    ideal_of_complex,
    is_squarefree_monomial,
    sqf_invariants,
)

PASS, FAIL, SKIPPED, NOT_REPRODUCED, NOTE = "PASS", "FAIL", "SKIPPED", "NOT-REPRODUCED", "NOTE"


@dataclass
class Check:
    name: str
    status: str
    expected: str = ""
    actual: str = ""
    detail: str = ""

    def line(self) -> str:
        s = f"{self.status:<14} {self.name}"
        if self.expected or self.actual:
            s += f"  (expected {self.expected}, got {self.actual})"
        if self.detail:
            s += f"  -- {self.detail}"
        return s


@dataclass
class Ledger:
    title: str
    entries: list[Check] = field(default_factory=list)

    def expect(self, name, expected, actual, detail="") -> bool:
        ok = expected == actual
        self.entries.append(Check(name, PASS if ok else FAIL, str(expected), str(actual), detail))
        return ok

    def add(self, name, status, detail="", expected="", actual=""):
        self.entries.append(Check(name, status, str(expected), str(actual), detail))

    @property
    def ok(self) -> bool:
        return all(e.status != FAIL for e in self.entries)

    def status_of(self, name: str) -> str:
        for e in self.entries:
            if e.name == name:
                return e.status
        raise KeyError(name)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.entries:
            out[e.status] = out.get(e.status, 0) + 1
        return out

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        lines.extend(e.line() for e in self.entries)
        counts = ", ".join(f"{k} {v}" for k, v in sorted(self.counts().items()))
        lines.append(f"summary: {counts}; overall {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


# -- fixed examples ----------------------------------------------------------------


def _concrete_example(ledger: Ledger, characteristic: int):
    tag = f"[char {characteristic}]"
    a = load("skew_lines", characteristic)
    b = load("twisted_quartic", characteristic)
    c = load("quartic_link_ci", characteristic)
    inter = intersect(a, b)
    ledger.expect(f"a ∩ b equals the two-generator ideal {tag}", True, inter == c)
    ledger.expect(f"a ∩ b is a complete intersection {tag}", True, is_complete_intersection(inter))
    ledger.expect(f"(a ∩ b) : a = b {tag}", True, colon(c, a) == b)
    ledger.expect(f"(a ∩ b) : b = a {tag}", True, colon(c, b) == a)
    _, da = depth_and_pd(a)
    _, db = depth_and_pd(b)
    ledger.expect(f"depth R/a {tag}", 1, da)
    ledger.expect(f"depth R/b {tag}", 1, db)
    return a, b, c


def verify_paper_suite(heavy: bool = False, heavy_budget_s: float = 1800.0) -> Ledger:
    """Deterministic ledger for the skew-lines/quartic link and, optionally, the
    determinantal link in 12 variables."""
    ledger = Ledger("fixed-example verification")
    p = 32003
    a, b, c = _concrete_example(ledger, p)
    _concrete_example(ledger, 0)

    sq = sqf_invariants(a)
    ledger.expect("cd(a) via the squarefree route", 3, sq.cd)
    ledger.expect("fgrade(a) = n - cd(a)", 1, sq.fgrade)
    res_a = minimal_free_resolution(a)
    ledger.expect("Hochster Betti table of a equals the resolution table", True,
                  hochster_graded_betti(a) == res_a.betti())

    # cd(b) over F_2 by the Frobenius probe
    b2 = load("twisted_quartic", 2)
    bounds = cd_bounds_char_p(b2, e_max=3)
    ledger.expect("cd(b) bounds before probing over F_2", (2, 3), bounds.start)
    pr = bounds.probe.get(3)
    confirmed = pr is not None and pr.confirmed and pr.stage is not None and pr.stage <= 3
    if confirmed:
        ledger.expect("H^3_b(R) = 0 confirmed over F_2 at some e <= 3", True, True,
                      f"stage e = {pr.stage}")
        ledger.expect("cd(b) over F_2", 2, bounds.exact)
    else:
        # never claim cd(b) = 3: report the open bounds instead
        ledger.add("cd(b) over F_2", FAIL, f"probe {pr}; bounds [{bounds.lower}, {bounds.upper}] "
                   "left open (NotConfirmed)", expected="2", actual="not confirmed")
    ledger.expect("cd differs across the link: cd(a) != cd(b)", True, sq.cd != bounds.exact)

    rec = link(a, c)
    ledger.expect("link of a by a ∩ b verified", True, rec.verified)
    ledger.expect("linked ideal c : a equals b", True, rec.b == b)
    ka = canonical_depth(a, rec)
    _, db = depth_and_pd(b)
    ledger.expect("depth K_{R/a} = depth(R/b) + 1", (2, 2), (ka, db + 1))
    kb = canonical_depth(b, rec)
    _, da = depth_and_pd(a)
    ledger.expect("depth K_{R/b} = depth(R/a) + 1", (2, 2), (kb, da + 1))
    dim_a = krull_dimension(a).krull_dim
    ledger.expect("dim-2 non-CM link has depth 1 on both sides", (2, False, 1, 1),
                  (dim_a, da == dim_a, da, db))

    printed = load("twisted_quartic_printed", p)
    missing = "x0*x2^2 - x1^2*x3"
    ledger.add("printed generator list differs from the quartic's ideal", NOTE,
               f"printed list == b: {printed == b}; printed list contains {missing}: "
               f"{printed.contains(printed.ring.parse(missing))}; the corrected four-generator "
               "ideal is used throughout")

    for n in range(2, 6):
        m = variables_ideal(RingDescriptor(n, p))
        cd_sq = sqf_invariants(m).cd
        bd = cd_bounds_char_p(m, e_max=0)
        ledger.expect(f"cd of the maximal ideal, n = {n}", (n, n), (cd_sq, bd.exact))

    if heavy:
        _determinantal(ledger, heavy_budget_s)
    else:
        ledger.add("determinantal link in 12 variables", SKIPPED, "heavy checks not requested")
    return ledger


def _determinantal(ledger: Ledger, budget_s: float):
    start = time.perf_counter()
    names = ["height of the maximal minors", "height of the 2-minors", "maximal minors are CM",
             "2-minors are CM", "determinantal link verified",
             "char-p cd of the maximal minors", "char-p cd of the 2-minors"]
    done = set()

    def over():
        return time.perf_counter() - start > budget_s

    try:
        a, b, c = determinantal_example(32003)
        sa, sb = Snapshot.of(a), Snapshot.of(b)
        for name, exp, act in ((names[0], 2, sa.height), (names[1], 2, sb.height),
                               (names[2], True, sa.cohen_macaulay),
                               (names[3], True, sb.cohen_macaulay)):
            ledger.expect(name, exp, act)
            done.add(name)
        if not over():
            rec = link(a, c, assume_unmixed=True)
            ledger.expect(names[4], True, rec.verified and rec.b == b)
            done.add(names[4])
        if not over():
            ca, cb = cd_bounds_char_p(a).exact, cd_bounds_char_p(b).exact
            ledger.expect(names[5], 2, ca)
            ledger.expect(names[6], 2, cb)
            done.update(names[5:])
    except LinklabError as exc:
        for name in names:
            if name not in done:
                ledger.add(name, SKIPPED, f"computation aborted: {exc}")
                done.add(name)
    for name in names:
        if name not in done:
            ledger.add(name, SKIPPED, f"time budget of {budget_s:.0f} s exhausted")
    ledger.add("characteristic-0 cd of the maximal minors is 4", NOT_REPRODUCED,
               "needs characteristic-0 local cohomology (D-module methods), out of scope; "
               "char-p value is 2")
    ledger.add("characteristic-0 cd of the 2-minors is 3", NOT_REPRODUCED,
               "needs characteristic-0 local cohomology (D-module methods), out of scope; "
               "char-p value is 2")


# -- random squarefree input -------------------------------------------------------


def trial_rngs(seed: int, trials: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(trials)]


def random_squarefree_ideal(ring: RingDescriptor, rng: np.random.Generator,
                            max_gens: int = 6) -> Ideal:
    """Random proper nonzero squarefree monomial ideal."""
    n = ring.num_vars
    k = int(rng.integers(1, max_gens + 1))
    gens = []
    for _ in range(k):
        size = int(rng.integers(1, n + 1))
        support = sorted(int(v) for v in rng.choice(n, size=size, replace=False))
        gens.append(ring.monomial([1 if i in support else 0 for i in range(n)]))
    return Ideal(ring, gens)


def random_pure_complex(n: int, rng: np.random.Generator, max_facets: int = 4) -> SimplicialComplex:
    """Random pure complex on n vertices with a missing vertex set or face, so the
    Stanley-Reisner ideal is proper and nonzero."""
    dim = int(rng.integers(0, n - 1))  # facets have dim+1 <= n-1 vertices
    all_faces = list(combinations(range(n), dim + 1))
    k = int(rng.integers(1, min(max_facets, len(all_faces)) + 1))
    picks = rng.choice(len(all_faces), size=k, replace=False)
    return SimplicialComplex.from_facets(n, [all_faces[int(i)] for i in sorted(picks)])


@dataclass
class SuiteReport:
    name: str
    params: dict
    counts: dict = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    stage_failures: list[str] = field(default_factory=list)

    def bump(self, key: str, by: int = 1):
        self.counts[key] = self.counts.get(key, 0) + by

    def violate(self, trial: int, what: str):
        self.violations.append(f"trial {trial}: {what}")
        self.bump("violations")

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"== {self.name} ({params}) =="]
        for k in sorted(self.counts):
            lines.append(f"{k}: {self.counts[k]}")
        lines.append(f"violations: {len(self.violations)}")
        lines.extend(f"  {v}" for v in self.violations)
        lines.append(f"stage failures: {len(self.stage_failures)}")
        lines.extend(f"  {s}" for s in self.stage_failures)
        lines.append(f"overall {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def betti_oracle_suite(trials: int = 200, seed: int = 0, max_vars: int = 6,
                       characteristic: int = 32003) -> SuiteReport:
    """Hochster Betti tables against resolution Betti tables on random squarefree ideals."""
    rep = SuiteReport("Hochster vs resolution", {"trials": trials, "seed": seed,
                                                  "max_vars": max_vars, "char": characteristic})
    rep.counts["checked"] = 0
    for t, rng in enumerate(trial_rngs(seed, trials)):
        n = int(rng.integers(2, max_vars + 1))
        I = random_squarefree_ideal(RingDescriptor(n, characteristic), rng)
        res = minimal_free_resolution(I)
        pd, depth = depth_and_pd(I, res)
        hb = hochster_graded_betti(I)
        sq = sqf_invariants(I)
        rep.bump("checked")
        if hb != res.betti():
            rep.violate(t, f"Betti tables differ for {I}")
        if depth + pd != n or sq.depth + sq.pd != n:
            rep.violate(t, f"depth + pd != n for {I}")
        if (sq.depth, sq.pd) != (depth, pd):
            rep.violate(t, f"squarefree and resolution depth differ for {I}")
        if sq.dim != krull_dimension(I).krull_dim:
            rep.violate(t, f"complex dimension and Krull dimension differ for {I}")
    return rep


def _sqf_cross_check(rep: SuiteReport, t: int, I: Ideal, snap: Snapshot, label: str):
    """Squarefree and resolution routes must agree wherever both apply."""
    if not is_squarefree_monomial(I):
        return None
    sq = sqf_invariants(I)
    rep.bump("squarefree cross-checks")
    if hochster_graded_betti(I) != minimal_free_resolution(I).betti():
        rep.violate(t, f"{label}: Hochster and resolution Betti tables differ")
    if sq.depth != snap.depth or sq.cd != rep.params["n"] - snap.depth:
        rep.violate(t, f"{label}: cd = n - depth fails on the squarefree route")
    return sq


def _random_link(a: Ideal, t: int, rng: np.random.Generator):
    h = height(a)
    top = max(g.degree() for g in a.generators)
    degree = None if t % 2 == 0 else top
    for _ in range(3):
        c = Ideal(a.ring, find_regular_sequence_in(a, h, seed=rng, degree=degree))
        try:
            return c, link(a, c)
        except DegenerateLinkError:  # c = a, so a is a CI; go one degree up
            degree = top + 1 if degree is None else degree + 1
    raise DegenerateLinkError("every candidate CI equals a")


def random_property_suite(trials: int = 50, seed: int = 7, n: int = 5,
                          p: int = 32003, chain_steps: int = 2) -> SuiteReport:
    """Random links of unmixed squarefree ideals by complete intersections.

    Even trials link by a CI of generators (monomial), odd trials by random
    combinations of generators.  Every verified link is checked for the
    double-colon involution, CM preservation, the canonical-module depth
    identity, the dim-2 depth statement and the CM-CM cd equality; a 2-step
    chain from the same ideal is checked for equal depth at its ends.
    """
    if n > 6:
        raise ValueError("random_property_suite is capped at 6 variables")
    rep = SuiteReport("random linkage properties", {"trials": trials, "seed": seed, "n": n,
                                                     "p": p})
    if trials == 0:
        return rep
    ring = RingDescriptor(n, p)
    for t, rng in enumerate(trial_rngs(seed, trials)):
        delta = random_pure_complex(n, rng)
        a = ideal_of_complex(delta, ring)
        rep.bump("trials run")
        try:
            c, rec = _random_link(a, t, rng)
        except LinklabError as exc:
            rep.stage_failures.append(f"trial {t}: link: {type(exc).__name__}: {exc}")
            continue
        rep.bump("links attempted")
        if not rec.verified:
            rep.violate(t, f"double colon failed: {rec.notes}")
            continue
        rep.bump("links verified")
        b = rec.b
        sa, sb = rec.invariants_of_a, rec.invariants_of_b
        if colon(c, b) != a:
            rep.violate(t, "c : (c : a) != a")
        sq_a = _sqf_cross_check(rep, t, a, sa, "a")
        sq_b = _sqf_cross_check(rep, t, b, sb, "b")
        if sq_a is not None and sq_b is not None:
            if (sq_a.cd == sq_b.cd) != (sa.depth == sb.depth):
                rep.violate(t, "cd(a) = cd(b) iff depths agree fails")
        if sa.cohen_macaulay:
            rep.bump("CM links")
            if not sb.cohen_macaulay:
                rep.violate(t, "a is CM but b is not")
            ba, bb = cd_bounds_char_p(a), cd_bounds_char_p(b)
            if not (ba.exact is not None and ba.exact == bb.exact == sa.height):
                rep.violate(t, f"CM-CM cd: [{ba.lower},{ba.upper}] vs [{bb.lower},{bb.upper}], "
                               f"height {sa.height}")
            else:
                rep.bump("CM-CM cd exact and equal")
            if sq_a is not None and sq_a.cd != ba.exact:
                rep.violate(t, "squarefree cd and char-p cd of a differ")
        else:
            rep.bump("non-CM links")
            kd = canonical_depth(a, rec)
            if sb.depth != kd - 1:
                rep.violate(t, f"depth R/b = {sb.depth} but depth K = {kd}")
            if sa.dim == 2:
                rep.bump("dim-2 non-CM links")
                if not (sa.depth == sb.depth == 1):
                    rep.violate(t, f"dim 2 non-CM with depths {sa.depth}, {sb.depth}")
        if sa.dim != sb.dim or sa.height != sb.height:
            rep.violate(t, "linked ideals have different heights")
        try:
            chain = even_link_chain(a, chain_steps, seed=int(rng.integers(0, 2**63 - 1)))
        except LinklabError as exc:
            rep.stage_failures.append(f"trial {t}: chain: {type(exc).__name__}: {exc}")
            continue
        if not chain.complete:
            rep.stage_failures.append(f"trial {t}: chain: {chain.error}")
            continue
        rep.bump("chains completed")
        depths = chain.depths
        if depths[0] != depths[-1]:
            rep.violate(t, f"chain depths {depths}")
        end = chain.ideals[-1]
        if is_squarefree_monomial(end):
            rep.bump("chains with squarefree ends")
            if sqf_invariants(end).cd != sqf_invariants(a).cd:
                rep.violate(t, "squarefree cd differs at the ends of an even chain")
    return rep
