"""Ideals, reduced Groebner bases, normal forms and ideal membership."""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _engine
from .errors import RingMismatchError, ZeroPolynomialError
from .polyring import Polynomial, RingDescriptor


def to_vec(f: Polynomial, pos: int = 0) -> dict:
    return {m + (pos,): c for m, c in f._terms.items()}


def from_vec(ring: RingDescriptor, d: dict) -> Polynomial:
    return Polynomial(ring, {m[:-1]: c for m, c in d.items()}, _trusted=True)


def ring_context(ring: RingDescriptor, budget=None) -> _engine.Context:
    key = _engine.make_key(ring.num_vars, ring.order)
    return _engine.Context(ring.num_vars, ring.characteristic, key, budget=budget)


class Ideal:
    """An ideal given by generators, with a lazily computed reduced GB."""

    def __init__(self, ring: RingDescriptor, generators: Iterable[Polynomial | str] = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {ring}")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self._gb_elts = None
        self._gb = None

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def _elts(self):
        if self._gb_elts is None:
            ctx = ring_context(self.ring)
            vecs = [to_vec(g) for g in self.generators if g]
            res = _engine.buchberger(ctx, vecs, homogeneous=self.homogeneous)
            self._gb_elts = _engine.interreduce(ctx, res.basis)
        return self._gb_elts

    def groebner_basis(self) -> list[Polynomial]:
        if self._gb is None:
            self._gb = [from_vec(self.ring, g.as_dict()) for g in self._elts()]
        return list(self._gb)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        ctx = ring_context(self.ring)
        return from_vec(self.ring, _engine.reduce(ctx, to_vec(f), self._elts()))

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def is_unit(self) -> bool:
        gb = self._elts()
        return len(gb) == 1 and not any(gb[0].lm[:-1])

    def is_zero(self) -> bool:
        return not self._elts()

    def leading_monomials(self) -> list[tuple]:
        return [g.lm[:-1] for g in self._elts()]

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideals_equal(self, other)

    __hash__ = None

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def frobenius_bracket(self, q: int) -> "Ideal":
        """I^[q]: the ideal generated by the q-th powers of the generators."""
        return Ideal(self.ring, [g.frobenius(q) for g in self.generators])


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on multivariate division by ``G`` (tried in list order)."""
    for g in G:
        if g.ring != f.ring:
            raise RingMismatchError(f"{g.ring} vs {f.ring}")
        if not g:
            raise ZeroPolynomialError("zero divisor in normal_form")
    ctx = ring_context(f.ring)
    basis = [ctx.make_elt(to_vec(g), monic=False) for g in G]
    return from_vec(f.ring, _engine.reduce(ctx, to_vec(f), basis))


def reduced_groebner_basis(I: Ideal) -> list[Polynomial]:
    return I.groebner_basis()


def contains(I: Ideal, f: Polynomial) -> bool:
    return I.contains(f)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")
    return I.groebner_basis() == J.groebner_basis()


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    cf, mf = f.leading_term()
    cg, mg = g.leading_term()
    lcm = tuple(map(max, mf, mg))
    F = f.ring.field
    u = f.mul_monomial(tuple(a - b for a, b in zip(lcm, mf)), F.inv(cf))
    v = g.mul_monomial(tuple(a - b for a, b in zip(lcm, mg)), F.inv(cg))
    return u - v


def is_groebner_basis(G: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion checked over every pair, no shortcuts."""
    G = [g for g in G if g]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if normal_form(s_polynomial(G[i], G[j]), G):
                return False
    return True
