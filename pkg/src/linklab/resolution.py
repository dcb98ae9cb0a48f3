"""Syzygies, minimal graded free resolutions, Ext, and the Frobenius probe.

Module elements are sparse dicts as in :mod:`linklab._engine`: keys are
exponent tuples with the basis index appended.  A matrix is a list of columns.
Lifting and syzygies both come from one Groebner basis of the augmented
vectors ``(v_j, e_j)`` under an order where the original coordinates dominate
the tracking coordinates: reducing ``(w, 0)`` to ``(0, -u)`` exhibits
``w = sum u_j v_j``, and basis elements living purely in the tracking block
generate the syzygies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import add
from typing import Sequence

from . import _engine
from .errors import (
    ContainmentError,
    NotHomogeneousError,
    UnsupportedFieldError,
    ZeroModuleError,
    BudgetExceeded,
)
from .groebner import Ideal
from .ideal_ops import height, krull_dimension, minimal_generators
from .polyring import Polynomial, RingDescriptor

# -- sparse vector helpers ----------------------------------------------------


def vec_from_polys(polys: Sequence[Polynomial]) -> dict:
    out = {}
    for pos, f in enumerate(polys):
        for m, c in f._terms.items():
            out[m + (pos,)] = c
    return out


def vec_to_polys(ring: RingDescriptor, vec: dict, rank: int) -> list[Polynomial]:
    parts = [dict() for _ in range(rank)]
    for m, c in vec.items():
        parts[m[-1]][m[:-1]] = c
    return [Polynomial(ring, d, _trusted=True) for d in parts]


def _addmul(target: dict, vec: dict, mono, coef, p: int, pos=None):
    """target += coef * x^mono * vec (optionally forcing every term to ``pos``)."""
    get = target.get
    for m, c in vec.items():
        nm = tuple(map(add, m, mono))
        if pos is not None:
            nm = nm[:-1] + (pos,)
        v = get(nm, 0) + coef * c
        if p:
            v %= p
        if v:
            target[nm] = v
        else:
            target.pop(nm, None)


def matvec(cols: Sequence[dict], vec: dict, p: int) -> dict:
    """Apply the matrix with the given columns to ``vec``."""
    out: dict = {}
    for m, c in vec.items():
        mono = m[:-1] + (0,)
        _addmul(out, cols[m[-1]], mono, c, p)
    return out


def transpose(cols: Sequence[dict], nrows: int) -> list[dict]:
    """Columns of the transpose, i.e. the rows of the matrix as vectors."""
    rows = [dict() for _ in range(nrows)]
    for j, col in enumerate(cols):
        for m, c in col.items():
            rows[m[-1]][m[:-1] + (j,)] = c
    return rows


def vec_degree(vec: dict, degrees) -> int | None:
    """Degree of a homogeneous vector; None for zero, raises if inhomogeneous."""
    degs = {sum(m) - m[-1] + degrees[m[-1]] for m in vec}
    if not degs:
        return None
    if len(degs) > 1:
        raise NotHomogeneousError("vector is not homogeneous")
    return degs.pop()


def frobenius_vec(vec: dict, q: int) -> dict:
    return {tuple(e * q for e in m[:-1]) + (m[-1],): c for m, c in vec.items()}


# -- submodules of free modules --------------------------------------------------


class Submodule:
    """Submodule of the graded free module ⊕ R(-degrees[i]) spanned by ``gens``."""

    def __init__(self, ring: RingDescriptor, degrees: Sequence[int], gens: Sequence[dict]):
        self.ring = ring
        self.degrees = list(degrees)
        self.rank = len(self.degrees)
        self.gens = list(gens)
        self.gen_degrees = [vec_degree(g, self.degrees) for g in self.gens]
        self._gb = None
        self._aug = None

    @property
    def p(self):
        return self.ring.characteristic

    def _context(self, shifts, blocks=None):
        key = _engine.make_key(self.ring.num_vars, self.ring.order, shifts=shifts, blocks=blocks)
        return _engine.Context(self.ring.num_vars, self.p, key, shifts=shifts,
                               product_criterion=False)

    def groebner(self):
        if self._gb is None:
            ctx = self._context(self.degrees)
            res = _engine.buchberger(ctx, [g for g in self.gens if g], homogeneous=True)
            self._gb = (ctx, res.basis, res.mingens)
        return self._gb

    def contains(self, vec: dict) -> bool:
        if not vec:
            return True
        ctx, basis, _ = self.groebner()
        return not _engine.reduce(ctx, vec, basis, full=False)

    def minimal_generator_indices(self) -> list[int]:
        nonzero = [i for i, g in enumerate(self.gens) if g]
        _, _, mingens = self.groebner()
        return sorted(nonzero[i] for i in mingens)

    def _augmented(self):
        if self._aug is None:
            s, k = self.rank, len(self.gens)
            track = [d if d is not None else 0 for d in self.gen_degrees]
            shifts = self.degrees + track
            ctx = self._context(shifts, blocks=[0] * s + [1] * k)
            inputs = []
            for j, g in enumerate(self.gens):
                v = dict(g)
                v[(0,) * self.ring.num_vars + (s + j,)] = self.ring.field.one
                inputs.append(v)
            res = _engine.buchberger(ctx, inputs, homogeneous=True)
            self._aug = (ctx, res.basis)
        return self._aug

    def lift(self, vec: dict) -> dict | None:
        """Coefficients u (a vector in R^k) with sum u_j gens[j] == vec, or None."""
        s = self.rank
        if not vec:
            return {}
        ctx, basis = self._augmented()
        r = _engine.reduce(ctx, vec, basis, full=True, stop_pos=s)
        p = self.p
        out = {}
        for m, c in r.items():
            if m[-1] < s:
                return None
            out[m[:-1] + (m[-1] - s,)] = (-c) % p if p else -c
        return out

    def syzygies(self) -> list[dict]:
        """Generators of the kernel of R^k -> R^s, e_j -> gens[j]."""
        s = self.rank
        ctx, basis = self._augmented()
        out = []
        for g in basis:
            if g.lm[-1] >= s:
                out.append({m[:-1] + (m[-1] - s,): c for m, c in g.terms})
        return out


def minimal_syzygies(ring, degrees, gens) -> tuple[list[dict], list[int]]:
    """Minimal generators of the syzygy module of ``gens`` and their degrees."""
    sub = Submodule(ring, degrees, gens)
    syz = sub.syzygies()
    if not syz:
        return [], []
    track = [d if d is not None else 0 for d in sub.gen_degrees]
    syzmod = Submodule(ring, track, syz)
    keep = syzmod.minimal_generator_indices()
    out = [syz[i] for i in keep]
    return out, [syzmod.gen_degrees[i] for i in keep]


# -- presented modules and resolutions -------------------------------------------


@dataclass
class PresentedModule:
    """coker(R^r -> ⊕ R(-degrees[i])) with the given relation columns."""

    ring: RingDescriptor
    degrees: list[int]
    relations: list[dict] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @classmethod
    def quotient_ring(cls, I: Ideal) -> "PresentedModule":
        return cls(I.ring, [0], [{m + (0,): c for m, c in g._terms.items()} for g in I.generators if g])

    @classmethod
    def from_polys(cls, ring, relations: Sequence[Sequence[Polynomial]], degrees=None):
        rels = [vec_from_polys(r) for r in relations]
        rank = len(relations[0]) if relations else len(degrees or [])
        return cls(ring, list(degrees) if degrees is not None else [0] * rank, rels)

    def is_graded(self) -> bool:
        try:
            for r in self.relations:
                vec_degree(r, self.degrees)
        except NotHomogeneousError:
            return False
        return True

    def relation_polys(self) -> list[list[Polynomial]]:
        return [vec_to_polys(self.ring, r, self.rank) for r in self.relations]

    def pruned(self) -> "PresentedModule":
        """Equivalent presentation with no unit entries in the relations."""
        p = self.ring.characteristic
        F = self.ring.field
        n = self.ring.num_vars
        rels = [dict(r) for r in self.relations if r]
        degrees = list(self.degrees)
        zero = (0,) * n
        while True:
            hit = None
            for ri, r in enumerate(rels):
                for j in range(len(degrees)):
                    c = r.get(zero + (j,))
                    if c:
                        hit = (ri, j, c)
                        break
                if hit:
                    break
            if hit is None:
                break
            ri, j, c = hit
            pivot = rels.pop(ri)
            inv = F.inv(c)
            new = []
            for r in rels:
                entry = [(m, v) for m, v in r.items() if m[-1] == j]
                for m, v in entry:
                    _addmul(r, pivot, m[:-1] + (0,), (-v * inv) % p if p else -v * inv, p)
                new.append(r)
            # drop basis vector j and renumber
            rels = []
            for r in new:
                if any(m[-1] == j for m in r):
                    raise AssertionError("pruning left an entry in the eliminated slot")
                r2 = {m[:-1] + (m[-1] - (m[-1] > j),): v for m, v in r.items()}
                if r2:
                    rels.append(r2)
            degrees.pop(j)
        return PresentedModule(self.ring, degrees, rels)

    def is_zero(self) -> bool:
        return self.pruned().rank == 0


@dataclass
class FreeResolution:
    """F_0 <- F_1 <- ... with ``maps[i]`` the columns of d_{i+1}: F_{i+1} -> F_i."""

    ring: RingDescriptor
    degrees: list[list[int]]
    maps: list[list[dict]]
    minimal: bool = True

    @property
    def ranks(self) -> list[int]:
        return [len(d) for d in self.degrees]

    @property
    def length(self) -> int:
        return len(self.maps)

    def differential(self, i: int) -> list[dict]:
        """Columns of d_i: F_i -> F_{i-1} (1-based like the usual notation)."""
        return self.maps[i - 1]

    def matrix(self, i: int) -> list[list[Polynomial]]:
        """d_i as a row-major matrix of polynomials."""
        cols = self.differential(i)
        nrows = len(self.degrees[i - 1])
        colpolys = [vec_to_polys(self.ring, c, nrows) for c in cols]
        return [[colpolys[j][r] for j in range(len(cols))] for r in range(nrows)]

    def betti(self) -> dict[tuple[int, int], int]:
        table: dict = {}
        for i, degs in enumerate(self.degrees):
            for d in degs:
                table[(i, d)] = table.get((i, d), 0) + 1
        return table

    def total_betti(self) -> list[int]:
        return self.ranks

    def check_complex(self) -> bool:
        """d_i ∘ d_{i+1} == 0 for every i."""
        p = self.ring.characteristic
        for i in range(1, len(self.maps)):
            for col in self.maps[i]:
                if matvec(self.maps[i - 1], col, p):
                    return False
        return True

    def has_unit_entries(self) -> bool:
        for cols in self.maps:
            for col in cols:
                if any(not any(m[:-1]) for m in col):
                    return True
        return False


def _resolution_input(M) -> PresentedModule:
    if isinstance(M, Ideal):
        return PresentedModule.quotient_ring(M)
    return M


def minimal_free_resolution(M) -> FreeResolution:
    """Minimal graded free resolution of a presented module or of R/I."""
    M = _resolution_input(M)
    if not M.is_graded():
        raise NotHomogeneousError("minimal resolutions need graded input")
    M = M.pruned()
    ring = M.ring
    n = ring.num_vars
    degrees = [list(M.degrees)]
    maps = []
    if not M.degrees:
        return FreeResolution(ring, [[]], [])
    rel = Submodule(ring, M.degrees, M.relations)
    keep = rel.minimal_generator_indices() if M.relations else []
    cols = [M.relations[i] for i in keep]
    cur_degrees = [rel.gen_degrees[i] for i in keep]
    while cols:
        maps.append(cols)
        degrees.append(cur_degrees)
        if len(maps) > n:
            raise AssertionError("resolution longer than the number of variables")
        cols, cur_degrees = minimal_syzygies(ring, degrees[-2], cols)
    res = FreeResolution(ring, degrees, maps)
    return res


def graded_betti(M) -> dict[tuple[int, int], int]:
    return minimal_free_resolution(M).betti()


def depth_and_pd(M, resolution: FreeResolution | None = None) -> tuple[int, int]:
    """(pd, depth) with depth = n - pd (Auslander-Buchsbaum)."""
    res = resolution or minimal_free_resolution(M)
    if not res.degrees[0]:
        raise ZeroModuleError("depth of the zero module is undefined")
    pd = res.length
    depth = res.ring.num_vars - pd
    if isinstance(M, Ideal):
        dim = krull_dimension(M).krull_dim
        if depth > dim:
            raise AssertionError(f"depth {depth} exceeds dim {dim}")
    return pd, depth


def quotient_presentation(b: Ideal, c: Ideal) -> PresentedModule:
    """Presentation of b/c.  Zero module (rank 0) when b ⊆ c."""
    if not b.contains_ideal(c):
        raise ContainmentError("c is not contained in b")
    ring = b.ring
    gens = [g for g in minimal_generators(b) if not c.contains(g)]
    if not gens:
        return PresentedModule(ring, [], [])
    cg = [g for g in c.generators if g]
    allg = gens + cg
    m = len(gens)
    vecs = [{mono + (0,): v for mono, v in g._terms.items()} for g in allg]
    syz = Submodule(ring, [0], vecs).syzygies()
    rels = []
    for z in syz:
        proj = {mono: v for mono, v in z.items() if mono[-1] < m}
        if proj:
            rels.append(proj)
    return PresentedModule(ring, [g.degree() for g in gens], rels)


# -- Ext and local cohomology in characteristic p -----------------------------------


def _dual_data(res: FreeResolution, i: int):
    """Kernel generators of d_{i+1}^T and the image submodule of d_i^T in F_i^*."""
    ring = res.ring
    dual_deg = [-d for d in res.degrees[i]]
    if i < res.length:
        nxt = res.maps[i]  # d_{i+1}: columns in F_i
        rows = transpose(nxt, len(res.degrees[i]))  # columns of d_{i+1}^T, in F_{i+1}^*
        ker, _ = minimal_syzygies(ring, [-d for d in res.degrees[i + 1]], rows)
    else:
        one = ring.field.one
        zero = (0,) * ring.num_vars
        ker = [{zero + (j,): one} for j in range(len(res.degrees[i]))]
    if i == 0:
        image_gens = []
    else:
        image_gens = transpose(res.maps[i - 1], len(res.degrees[i - 1]))
    return ker, Submodule(ring, dual_deg, image_gens)


def ext_nonvanishing(I: Ideal, i: int, resolution: FreeResolution | None = None) -> bool:
    """True iff Ext^i_R(R/I, R) != 0."""
    if i < 0:
        raise ValueError("negative Ext index")
    res = resolution or minimal_free_resolution(I)
    if i > res.length or i >= len(res.degrees):
        return False
    ker, image = _dual_data(res, i)
    return any(not image.contains(k) for k in ker)


@dataclass
class ProbeResult:
    """Outcome of the Frobenius probe.  Only vanishing is ever certified."""

    confirmed: bool
    stage: int | None = None
    budget_exceeded: bool = False
    notes: list[str] = field(default_factory=list)

    def __str__(self):
        if self.confirmed:
            return f"ConfirmedVanishing(stage {self.stage})"
        flag = " [budget exceeded]" if self.budget_exceeded else ""
        return "NotConfirmed" + flag


def comparison_maps(res: FreeResolution, q: int, upto: int) -> list[list[dict]]:
    """Chain map phi: F^[q] -> F lifting R/I^[q] -> R/I, for degrees 0..upto.

    F^[q] (entries raised to the q-th power) resolves R/I^[q] because
    Frobenius is flat on a polynomial ring.  ``phi[i][j]`` is the image of the
    j-th basis vector of F_i^[q] in F_i.
    """
    ring = res.ring
    p = ring.characteristic
    one = ring.field.one
    zero = (0,) * ring.num_vars
    phi = [[{zero + (j,): one} for j in range(len(res.degrees[0]))]]
    for i in range(1, upto + 1):
        sub = Submodule(ring, res.degrees[i - 1], res.maps[i - 1])
        cols = []
        for col in res.maps[i - 1]:
            target = matvec(phi[i - 1], frobenius_vec(col, q), p)
            u = sub.lift(target)
            if u is None:
                raise AssertionError("comparison map does not lift; resolution is broken")
            cols.append(u)
        phi.append(cols)
    return phi


def frobenius_vanishing_probe(I: Ideal, i: int, e_max: int = 3,
                              resolution: FreeResolution | None = None,
                              max_q: int = 64) -> ProbeResult:
    """Try to certify H^i_I(R) = 0 over F_p.

    H^i_I(R) is the direct limit of Ext^i(R/I^[p^e], R).  Ext^i(R/I, R) is
    finitely generated, so H^i_I(R) = 0 iff the natural map
    Ext^i(R/I, R) -> Ext^i(R/I^[p^e], R) is zero for some e.  Stages are tried
    for e = 0..e_max; stages with p^e > ``max_q`` are skipped.
    """
    ring = I.ring
    p = ring.characteristic
    if not p:
        raise UnsupportedFieldError("the Frobenius probe needs a finite field")
    if i < 0:
        raise ValueError("negative cohomological index")
    out = ProbeResult(confirmed=False)
    try:
        res = resolution or minimal_free_resolution(I)
        if i > res.length:
            out.confirmed, out.stage = True, 0
            out.notes.append(f"Ext^{i} = 0 beyond projective dimension {res.length}")
            return out
        ker, image = _dual_data(res, i)
        if all(image.contains(k) for k in ker):
            out.confirmed, out.stage = True, 0
            out.notes.append(f"Ext^{i}(R/I, R) = 0")
            return out
        for e in range(1, e_max + 1):
            q = p**e
            if q > max_q:
                out.notes.append(f"stage {e} skipped: p^e = {q} exceeds {max_q}")
                break
            phi = comparison_maps(res, q, i)[i]
            br_rows = transpose([frobenius_vec(c, q) for c in res.maps[i - 1]],
                                len(res.degrees[i - 1]))
            br_image = Submodule(ring, [-q * d for d in res.degrees[i]], br_rows)
            images = []
            for k in ker:
                # (phi^T k)_j = <column j of phi, k>
                v = {}
                for j, col in enumerate(phi):
                    for m, c in col.items():
                        for mk, ck in k.items():
                            if mk[-1] == m[-1]:
                                nm = tuple(map(add, m[:-1], mk[:-1])) + (j,)
                                val = v.get(nm, 0) + c * ck
                                val %= p
                                if val:
                                    v[nm] = val
                                else:
                                    v.pop(nm, None)
                images.append(v)
            if all(br_image.contains(v) for v in images):
                out.confirmed, out.stage = True, e
                out.notes.append(f"Ext^{i}(R/I,R) -> Ext^{i}(R/I^[{q}],R) is zero")
                return out
            out.notes.append(f"stage {e}: map nonzero")
    except BudgetExceeded as exc:
        out.budget_exceeded = True
        out.notes.append(str(exc))
    return out


@dataclass
class CdBounds:
    lower: int
    upper: int
    exact: int | None = None
    notes: list[str] = field(default_factory=list)
    probe: dict = field(default_factory=dict)  # index -> ProbeResult
    start: tuple[int, int] | None = None  # bounds before probing

    def __post_init__(self):
        if self.start is None:
            self.start = (self.lower, self.upper)
        self._settle()

    def _settle(self):
        if self.lower == self.upper:
            self.exact = self.lower

    @property
    def not_confirmed(self) -> bool:
        return self.exact is None


def cd_bounds_char_p(I: Ideal, e_max: int = 3, resolution: FreeResolution | None = None,
                     max_q: int = 64) -> CdBounds:
    """Bounds height(I) <= cd(I) <= n - depth(R/I), sharpened by the probe."""
    ring = I.ring
    if not ring.characteristic:
        raise UnsupportedFieldError("cd bounds by Frobenius need a finite field")
    if I.is_unit():
        raise ValueError("cd of the unit ideal is not defined")
    res = resolution or minimal_free_resolution(I)
    _, depth = depth_and_pd(I, res)
    lower = height(I)
    upper = ring.num_vars - depth
    bounds = CdBounds(lower, upper)
    bounds.notes.append(f"lower bound: height {lower}")
    bounds.notes.append(f"upper bound: n - depth = {upper}")
    i = upper
    while i > bounds.lower:
        pr = frobenius_vanishing_probe(I, i, e_max, resolution=res, max_q=max_q)
        bounds.probe[i] = pr
        if not pr.confirmed:
            bounds.notes.append(f"H^{i} vanishing not confirmed ({pr})")
            break
        bounds.notes.append(f"H^{i} = 0 confirmed at stage {pr.stage}")
        bounds.upper = i - 1
        i -= 1
    bounds._settle()
    return bounds
