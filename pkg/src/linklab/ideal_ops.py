"""Intersection, colon, dimension, regular sequences and complete intersections."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _engine
from .errors import (
    NotHomogeneousError,
    RegularSequenceNotFound,
    RingMismatchError,
    ZeroPolynomialError,
)
from .groebner import Ideal, from_vec, ring_context, to_vec
from .polyring import Polynomial, RingDescriptor


@dataclass(frozen=True)
class DimensionReport:
    krull_dim: int  # dim R/I, -1 for the unit ideal
    height: int  # n - krull_dim
    is_unit: bool


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    if I.is_unit():
        return Ideal(ring, J.generators)
    if J.is_unit():
        return Ideal(ring, I.generators)
    n = ring.num_vars
    p = ring.characteristic
    minus_one = p - 1 if p else -1
    vecs = []
    for f in I.generators:
        if f:
            vecs.append({m + (1, 0): c for m, c in f._terms.items()})
    for g in J.generators:
        if g:
            d = {m + (0, 0): c for m, c in g._terms.items()}
            for m, c in g._terms.items():
                d[m + (1, 0)] = c * minus_one % p if p else c * minus_one
            vecs.append(d)
    key = _engine.make_key(n + 1, ring.order, elim=1)
    ctx = _engine.Context(n + 1, p, key)
    res = _engine.buchberger(ctx, vecs)
    basis = _engine.interreduce(ctx, res.basis)
    gens = []
    for g in basis:
        if g.lm[n] == 0:
            gens.append(Polynomial(ring, {m[:n]: c for m, c in g.terms}, _trusted=True))
    return Ideal(ring, gens)


def exact_divide(h: Polynomial, g: Polynomial) -> Polynomial:
    """h / g, assuming g divides h."""
    if not g:
        raise ZeroPolynomialError("division by zero polynomial")
    ring = h.ring
    ctx = ring_context(ring)
    gel = ctx.make_elt(to_vec(g), monic=False)
    inv = ctx.inv(gel.lc)
    p = ring.characteristic
    rem = to_vec(h)
    quot = {}
    while rem:
        m = ctx.leading(rem)
        c = rem[m] * inv
        if p:
            c %= p
        if not all(a >= b for a, b in zip(m, gel.lm)):
            raise ValueError("g does not divide h")
        q = tuple(a - b for a, b in zip(m, gel.lm))
        quot[q] = c
        for gm, gc in gel.terms:
            nm = tuple(a + b for a, b in zip(gm, q))
            v = rem.get(nm, 0) - c * gc
            if p:
                v %= p
            if v:
                rem[nm] = v
            else:
                rem.pop(nm, None)
    return from_vec(ring, quot)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J = {f : f J ⊆ I}, intersected over the generators of J."""
    _same_ring(I, J)
    gens = [g for g in J.generators if g]
    if not gens:
        raise ValueError("colon by the zero ideal is rejected")
    ring = I.ring
    result = None
    for g in gens:
        if I.contains(g):
            continue
        inter = intersect(I, Ideal(ring, [g]))
        quotient = Ideal(ring, [exact_divide(h, g) for h in inter.groebner_basis()])
        result = quotient if result is None else intersect(result, quotient)
    if result is None:
        return Ideal(ring, [ring.one])
    return result


def _max_independent_size(n: int, supports) -> int:
    """Largest set of variables containing no support in ``supports`` (bitmasks)."""
    supports = sorted(set(supports))
    if any(s == 0 for s in supports):
        return -1
    # drop non-minimal supports
    minimal = [s for s in supports if not any(t != s and (t & s) == t for t in supports)]
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all((s & mask) != s for s in minimal):
                return size
    return 0


def krull_dimension(I: Ideal) -> DimensionReport:
    """dim R/I from the independent sets of the initial ideal."""
    n = I.ring.num_vars
    supports = []
    for m in I.leading_monomials():
        mask = 0
        for i, e in enumerate(m):
            if e:
                mask |= 1 << i
        supports.append(mask)
    d = _max_independent_size(n, supports)
    return DimensionReport(krull_dim=d, height=n - d, is_unit=d == -1)


def height(I: Ideal) -> int:
    return krull_dimension(I).height


def _check_homogeneous(fs):
    for f in fs:
        if not f.is_homogeneous():
            raise NotHomogeneousError(f"{f} is not homogeneous")


def is_regular_sequence(fs) -> bool:
    """Homogeneous nonconstant f1..fs are regular iff ht(f1..fi) = i for each i."""
    fs = list(fs)
    _check_homogeneous(fs)
    if not fs:
        return True
    ring = fs[0].ring
    for f in fs:
        if f.ring != ring:
            raise RingMismatchError(f"{f.ring} vs {ring}")
        if not f or f.is_constant():
            return False
    for i in range(1, len(fs) + 1):
        if height(Ideal(ring, fs[:i])) != i:
            return False
    return True


def minimal_generators(I: Ideal) -> list[Polynomial]:
    """Minimal generating set of a homogeneous ideal, chosen among its generators."""
    _check_homogeneous(I.generators)
    gens = [g for g in I.generators if g]
    if not gens:
        return []
    ctx = ring_context(I.ring)
    res = _engine.buchberger(ctx, [to_vec(g) for g in gens], homogeneous=True)
    return [gens[i] for i in sorted(res.mingens)]


def is_complete_intersection(c: Ideal) -> bool:
    _check_homogeneous(c.generators)
    rep = krull_dimension(c)
    if rep.is_unit:
        return False
    return len(minimal_generators(c)) == rep.height


def random_combination(I: Ideal, degree: int, rng: np.random.Generator) -> Polynomial:
    """Random homogeneous element of I of the given degree.

    Each generator of degree <= ``degree`` is lifted to ``degree`` by a power
    of a random variable and weighted by a random coefficient.
    """
    ring = I.ring
    p = ring.characteristic
    n = ring.num_vars
    f = ring.zero
    for g in I.generators:
        if not g:
            continue
        d = g.degree()
        if d > degree:
            continue
        c = int(rng.integers(0, p)) if p else int(rng.integers(-3, 4))
        if not c:
            continue
        e = [0] * n
        e[int(rng.integers(0, n))] = degree - d
        f = f + g.mul_monomial(e, c)
    return f


def find_regular_sequence_in(I: Ideal, s: int, seed=0, degree: int | None = None,
                             max_tries: int = 50) -> list[Polynomial]:
    """``s`` homogeneous elements of I forming a regular sequence.

    Without ``degree``, the generators are tried greedily in order of degree.
    If that falls short, random combinations of a common degree are
    drawn from a generator seeded by ``seed``.  ``degree`` forces the degree of
    the random combinations (default: the largest generator degree).
    """
    _check_homogeneous(I.generators)
    if s == 0:
        return []
    ring = I.ring
    gens = [g for g in I.generators if g and not g.is_constant()]
    if not gens:
        raise RegularSequenceNotFound("ideal has no nonconstant generators")
    if degree is None:
        seq = []
        for g in sorted(gens, key=lambda g: g.degree()):
            if height(Ideal(ring, seq + [g])) == len(seq) + 1:
                seq.append(g)
                if len(seq) == s:
                    return seq
        degree = max(g.degree() for g in gens)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(max_tries):
        seq = []
        for _ in range(s):
            for _ in range(max_tries):
                f = random_combination(I, degree, rng)
                if f and height(Ideal(ring, seq + [f])) == len(seq) + 1:
                    seq.append(f)
                    break
            else:
                break
        if len(seq) == s:
            return seq
    raise RegularSequenceNotFound(
        f"no regular sequence of length {s} found in degree {degree} after {max_tries} tries"
    )


def variables_ideal(ring: RingDescriptor) -> Ideal:
    return Ideal(ring, ring.gens())
