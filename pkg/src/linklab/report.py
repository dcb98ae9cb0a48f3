"""Invariant reports for a single ideal, with JSON round-tripping."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .errors import LinklabError
from .groebner import Ideal
from .ideal_ops import krull_dimension, minimal_generators
from .resolution import cd_bounds_char_p, depth_and_pd, minimal_free_resolution
from .stanley_reisner import (
    HOCHSTER_MAX_VARS,
    complex_of_ideal,
    hochster_graded_betti,
    is_squarefree_monomial,
    sqf_invariants,
)

SCHEMA_VERSION = 1


@dataclass
class InvariantReport:
    num_vars: int
    characteristic: int
    order: str
    generators: list[str]
    dim: int | None = None
    height: int | None = None
    depth: int | None = None
    pd: int | None = None
    betti: list[list[int]] = field(default_factory=list)  # [i, degree, count]
    cd: int | None = None
    cd_lower: int | None = None
    cd_upper: int | None = None
    fgrade: int | None = None
    cohen_macaulay: bool | None = None
    squarefree: bool = False
    homogeneous: bool = True
    unmixed: bool | None = None
    provenance: dict[str, str] = field(default_factory=dict)
    reasons: dict[str, str] = field(default_factory=dict)
    schema: int = SCHEMA_VERSION

    def check(self) -> list[str]:
        """Internal-consistency problems; empty when the report is sound."""
        problems = []
        n = self.num_vars
        if self.depth is not None and self.pd is not None and self.depth + self.pd != n:
            problems.append(f"depth {self.depth} + pd {self.pd} != {n}")
        if self.cd is not None:
            if self.cd_lower is not None and self.cd < self.cd_lower:
                problems.append("cd below its lower bound")
            if self.cd_upper is not None and self.cd > self.cd_upper:
                problems.append("cd above its upper bound")
            if self.fgrade is not None and self.fgrade != n - self.cd:
                problems.append("fgrade != n - cd")
        if self.depth is not None and self.dim is not None and self.depth > self.dim:
            problems.append("depth exceeds dimension")
        for name in ("dim", "depth", "pd", "cd", "fgrade"):
            if getattr(self, name) is None and name not in self.reasons:
                problems.append(f"{name} is null without a reason")
        return problems

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(asdict(self), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "InvariantReport":
        data = json.loads(text)
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)

    def summary(self) -> str:
        k = f"F_{self.characteristic}" if self.characteristic else "Q"
        lines = [f"ring: {self.num_vars} variables over {k}, {self.order}"]
        for name in ("dim", "height", "depth", "pd", "cd", "fgrade"):
            value = getattr(self, name)
            shown = value if value is not None else "unavailable"
            route = self.provenance.get(name) or self.reasons.get(name, "")
            lines.append(f"{name:>7}: {shown}  [{route}]")
        if self.cd is None and self.cd_lower is not None:
            lines.append(f"cd bounds: [{self.cd_lower}, {self.cd_upper}]")
        totals = {}
        for i, _, v in self.betti:
            totals[i] = totals.get(i, 0) + v
        lines.append("betti: " + " ".join(str(totals[i]) for i in sorted(totals)))
        flags = [f"CM={self.cohen_macaulay}", f"squarefree={self.squarefree}",
                 f"homogeneous={self.homogeneous}", f"unmixed={self.unmixed}"]
        lines.append("flags: " + ", ".join(flags))
        return "\n".join(lines)


def invariant_report(I: Ideal, e_max: int = 3, max_q: int = 64) -> InvariantReport:
    """Collect dim, height, depth, pd, Betti numbers, cd and fgrade of R/I."""
    ring = I.ring
    n = ring.num_vars
    rep = InvariantReport(num_vars=n, characteristic=ring.characteristic, order=ring.order,
                          generators=[str(g) for g in I.generators], homogeneous=I.homogeneous)
    if not I.homogeneous:
        for name in ("dim", "depth", "pd", "cd", "fgrade"):
            rep.reasons[name] = "inhomogeneous input is not supported"
        return rep
    d = krull_dimension(I)
    if d.is_unit:
        for name in ("dim", "depth", "pd", "cd", "fgrade"):
            rep.reasons[name] = "unit ideal: R/I is the zero ring"
        return rep
    rep.dim, rep.height = d.krull_dim, d.height
    rep.provenance["dim"] = "independent sets of the initial ideal"
    rep.provenance["height"] = "n - dim"
    res = minimal_free_resolution(I)
    rep.pd, rep.depth = depth_and_pd(I, res)
    rep.provenance["pd"] = "minimal free resolution"
    rep.provenance["depth"] = "n - pd (Auslander-Buchsbaum)"
    rep.betti = [[i, j, v] for (i, j), v in sorted(res.betti().items())]
    rep.cohen_macaulay = rep.depth == rep.dim
    rep.squarefree = is_squarefree_monomial(I)
    if rep.cohen_macaulay:
        rep.unmixed = True  # CM quotients of a polynomial ring are unmixed
    if rep.squarefree and n > HOCHSTER_MAX_VARS:
        rep.cd = rep.cd_lower = rep.cd_upper = rep.pd
        rep.provenance["cd"] = "squarefree: cd = pd(R/I) (resolution route; too many variables for Hochster)"
        rep.unmixed = complex_of_ideal(I).is_pure()
    elif rep.squarefree:
        sq = sqf_invariants(I)
        hb = hochster_graded_betti(I)
        if hb != res.betti() or sq.depth != rep.depth or sq.pd != rep.pd:
            raise AssertionError("Hochster route disagrees with the resolution route")
        rep.cd = rep.cd_lower = rep.cd_upper = sq.cd
        rep.provenance["cd"] = "squarefree: cd = pd(R/I) (Hochster Betti table, cross-checked)"
        rep.unmixed = complex_of_ideal(I).is_pure()
    elif ring.characteristic:
        try:
            bounds = cd_bounds_char_p(I, e_max=e_max, resolution=res, max_q=max_q)
        except LinklabError as exc:
            rep.reasons["cd"] = f"char-p bounds failed: {exc}"
        else:
            rep.cd_lower, rep.cd_upper = bounds.lower, bounds.upper
            if bounds.exact is not None:
                rep.cd = bounds.exact
                rep.provenance["cd"] = "char p: height <= cd <= n - depth, Frobenius probe; " + "; ".join(bounds.notes)
            else:
                rep.reasons["cd"] = "char p bounds not tight: " + "; ".join(bounds.notes)
    else:
        # cd(I) <= number of generators holds over any field
        lower = d.height
        upper = min(n, len(minimal_generators(I)))
        rep.cd_lower, rep.cd_upper = lower, upper
        if lower == upper:
            rep.cd = lower
            rep.provenance["cd"] = "height = number of minimal generators"
        else:
            rep.reasons["cd"] = ("characteristic 0: local cohomology vanishing needs "
                                 "D-module methods, which are not implemented")
    if rep.cd is not None:
        rep.fgrade = n - rep.cd
        rep.provenance["fgrade"] = "n - cd"
    else:
        rep.reasons["fgrade"] = "needs an exact cd"
    problems = rep.check()
    if problems:
        raise AssertionError("inconsistent report: " + "; ".join(problems))
    return rep
