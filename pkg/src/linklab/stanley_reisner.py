"""Squarefree monomial ideals as simplicial complexes; Hochster's formula.

Faces are stored as bitmasks over the vertex set {0..n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import NotSquarefreeError
from .groebner import Ideal
from .polyring import RingDescriptor

HOCHSTER_MAX_VARS = 24


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on ``n`` vertices given by its facets (bitmasks)."""

    n: int
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, n: int, facets) -> "SimplicialComplex":
        masks = {_mask(f) if not isinstance(f, int) else f for f in facets}
        maximal = [f for f in masks if not any(g != f and (f & g) == f for g in masks)]
        return cls(n, tuple(sorted(maximal)))

    def facet_sets(self) -> list[frozenset]:
        return [frozenset(_bits(f)) for f in self.facets]

    def is_void(self) -> bool:
        """The void complex (no faces at all), i.e. the unit ideal."""
        return not self.facets

    def contains(self, face: int) -> bool:
        return any((face & f) == face for f in self.facets)

    def faces(self, dim: int) -> list[int]:
        """All faces with ``dim + 1`` vertices, sorted."""
        k = dim + 1
        out = set()
        for f in self.facets:
            verts = _bits(f)
            if len(verts) >= k:
                for combo in combinations(verts, k):
                    out.add(_mask(combo))
        return sorted(out)

    @property
    def dimension(self) -> int:
        if not self.facets:
            return -2
        return max(bin(f).count("1") for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({bin(f).count("1") for f in self.facets}) <= 1

    def restrict(self, sigma: int) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(self.n, [f & sigma for f in self.facets])


def squarefree_support(I: Ideal) -> list[int]:
    """Supports (bitmasks) of the generators; rejects non-squarefree input."""
    out = []
    for g in I.generators:
        if not g:
            continue
        if not g.is_monomial():
            raise NotSquarefreeError(f"{g} is not a monomial")
        (m,) = g._terms
        if any(e > 1 for e in m):
            raise NotSquarefreeError(f"{g} is not squarefree")
        out.append(_mask(i for i, e in enumerate(m) if e))
    return out


def is_squarefree_monomial(I: Ideal) -> bool:
    try:
        squarefree_support(I)
    except NotSquarefreeError:
        return False
    return True


def minimal_transversals(n: int, edges) -> list[int]:
    """Minimal vertex sets meeting every edge (bitmasks), built one edge at a time."""
    covers = [0]
    for e in sorted(set(edges)):
        nxt = set()
        for t in covers:
            if t & e:
                nxt.add(t)
            else:
                for v in _bits(e):
                    nxt.add(t | (1 << v))
        covers = [t for t in nxt if not any(u != t and (u & t) == u for u in nxt)]
    return sorted(covers)


def complex_of_ideal(I: Ideal) -> SimplicialComplex:
    """Stanley-Reisner complex: the supports containing no generator support.

    Facets are the complements of the minimal vertex covers of the supports.
    """
    n = I.ring.num_vars
    supports = squarefree_support(I)
    if any(s == 0 for s in supports):
        return SimplicialComplex(n, ())
    full = (1 << n) - 1
    return SimplicialComplex.from_facets(n, [full & ~t for t in minimal_transversals(n, supports)])


def ideal_of_complex(delta: SimplicialComplex, ring: RingDescriptor) -> Ideal:
    """Ideal generated by the minimal non-faces."""
    n = delta.n
    nonfaces = []
    for size in range(0, n + 1):
        for combo in combinations(range(n), size):
            m = _mask(combo)
            if delta.contains(m):
                continue
            if any((m & g) == g for g in nonfaces):
                continue
            nonfaces.append(m)
    gens = []
    for m in nonfaces:
        e = [0] * ring.num_vars
        for v in _bits(m):
            e[v] = 1
        gens.append(ring.monomial(e))
    return Ideal(ring, gens)


def matrix_rank(rows, p: int) -> int:
    """Rank of an integer matrix over F_p (p > 0) or Q (p == 0)."""
    if p:
        A = [[x % p for x in r] for r in rows]
    else:
        A = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(A)) if A[r][col]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][col], -1, p) if p else 1 / A[rank][col]
        prow = A[rank]
        for r in range(len(A)):
            if r != rank and A[r][col]:
                f = A[r][col] * inv
                if p:
                    A[r] = [(x - f * y) % p for x, y in zip(A[r], prow)]
                else:
                    A[r] = [x - f * y for x, y in zip(A[r], prow)]
        rank += 1
    return rank


def _boundary_rank(delta: SimplicialComplex, k: int, p: int) -> int:
    """Rank of the boundary map from k-faces to (k-1)-faces (k >= 0; the
    (-1)-face is the empty set, so k = 0 is the augmentation)."""
    upper = delta.faces(k)
    lower = delta.faces(k - 1) if k > 0 else [0]
    if not upper or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for f in upper:
        row = [0] * len(lower)
        verts = _bits(f)
        if k == 0:
            row[0] = 1
        else:
            for j, v in enumerate(verts):
                row[index[f & ~(1 << v)]] = -1 if j % 2 else 1
        rows.append(row)
    return matrix_rank(rows, p)


def reduced_homology_dims(delta: SimplicialComplex, p: int = 0) -> list[int]:
    """dim H~_k(delta; k) for k = -1 .. dim(delta); field F_p or Q (p == 0)."""
    if delta.is_void():
        return []
    top = delta.dimension
    counts = {k: len(delta.faces(k)) for k in range(0, top + 1)}
    counts[-1] = 1
    ranks = {k: _boundary_rank(delta, k, p) for k in range(0, top + 1)}
    ranks[top + 1] = 0
    out = []
    for k in range(-1, top + 1):
        rk_out = ranks.get(k, 0) if k >= 0 else 0
        out.append(counts[k] - rk_out - ranks[k + 1])
    return out


def hochster_betti(I: Ideal, p: int | None = None) -> dict[tuple[int, int], int]:
    """Multigraded Betti numbers beta_{i,sigma}(R/I) keyed by (i, sigma bitmask)."""
    n = I.ring.num_vars
    if n > HOCHSTER_MAX_VARS:
        raise ValueError(f"Hochster route capped at {HOCHSTER_MAX_VARS} variables")
    if p is None:
        p = I.ring.characteristic
    delta = complex_of_ideal(I)
    if delta.is_void():
        return {}
    table = {}
    for sigma in range(1 << n):
        h = reduced_homology_dims(delta.restrict(sigma), p)
        size = bin(sigma).count("1")
        for k, dim in enumerate(h, start=-1):
            if dim:
                i = size - k - 1
                table[(i, sigma)] = dim
    return table


def hochster_graded_betti(I: Ideal, p: int | None = None) -> dict[tuple[int, int], int]:
    out: dict = {}
    for (i, sigma), v in hochster_betti(I, p).items():
        key = (i, bin(sigma).count("1"))
        out[key] = out.get(key, 0) + v
    return out


@dataclass(frozen=True)
class SqfInvariants:
    n: int
    depth: int
    pd: int
    cd: int
    fgrade: int
    dim: int
    height: int
    pure: bool
    field: int  # characteristic of the homology coefficients

    def check(self):
        assert self.cd == self.pd == self.n - self.depth
        assert self.fgrade == self.n - self.cd == self.depth
        assert self.height <= self.cd
        assert self.depth <= self.dim


def sqf_invariants(I: Ideal, p: int | None = None) -> SqfInvariants:
    """depth, pd, cd, fgrade, dim and purity of R/I for squarefree monomial I.

    On this class cd(I) = pd(R/I) and fgrade(I) = depth(R/I).
    """
    n = I.ring.num_vars
    if p is None:
        p = I.ring.characteristic
    delta = complex_of_ideal(I)
    if delta.is_void():
        raise ValueError("invariants of the unit ideal are not defined")
    betti = hochster_betti(I, p)
    pd = max(i for i, _ in betti)
    dim = delta.dimension + 1
    inv = SqfInvariants(n=n, depth=n - pd, pd=pd, cd=pd, fgrade=n - pd, dim=dim,
                        height=n - dim, pure=delta.is_pure(), field=p)
    inv.check()
    return inv
