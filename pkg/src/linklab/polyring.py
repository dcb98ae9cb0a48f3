"""Exact multivariate polynomials over F_p or Q.

Monomials are plain tuples of exponents.  Monomial orders are expressed as
*descending keys*: a key function maps an exponent tuple to a tuple that sorts
ascending exactly when the monomials sort descending in the order.  Everything
downstream (sorting terms, heaps in the reduction loop) uses these keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from operator import add
from typing import Iterable, Mapping

from .errors import DimensionError, RingMismatchError, ZeroPolynomialError

ORDERS = ("grevlex", "lex", "glex")
DEFAULT_PRIME = 32003

Monomial = tuple  # tuple[int, ...] of length num_vars


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit integers."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def order_key(order: str, n: int):
    """Descending sort key for exponent tuples of length ``n``."""
    if order == "grevlex":
        return lambda e: (-sum(e),) + e[::-1]
    if order == "glex":
        return lambda e: (-sum(e),) + tuple(-x for x in e)
    if order == "lex":
        return lambda e: tuple(-x for x in e)
    raise ValueError(f"unknown monomial order {order!r}")


def compare_monomials(a: Monomial, b: Monomial, order: str = "grevlex") -> int:
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or less than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"monomials of length {len(a)} and {len(b)}")
    key = order_key(order, len(a))
    ka, kb = key(tuple(a)), key(tuple(b))
    if ka == kb:
        return 0
    return 1 if ka < kb else -1


class Field:
    """Coefficient arithmetic for F_p (``p`` prime) or Q (``p == 0``)."""

    def __init__(self, p: int = 0):
        self.p = p

    def __repr__(self):
        return f"Field({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __call__(self, x):
        p = self.p
        if p:
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
                return x.numerator * pow(x.denominator, -1, p) % p
            return int(x) % p
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    @property
    def one(self):
        return 1 if self.p else Fraction(1)


@dataclass(frozen=True)
class RingDescriptor:
    """k[x0..x{n-1}] with k = F_p (``characteristic = p``) or Q (``0``)."""

    num_vars: int
    characteristic: int = DEFAULT_PRIME
    order: str = "grevlex"

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        if self.characteristic and not is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @cached_property
    def field(self) -> Field:
        return Field(self.characteristic)

    @cached_property
    def key(self):
        return order_key(self.order, self.num_vars)

    @property
    def variable_names(self):
        return [f"x{i}" for i in range(self.num_vars)]

    def with_(self, **changes) -> "RingDescriptor":
        fields = dict(num_vars=self.num_vars, characteristic=self.characteristic, order=self.order)
        fields.update(changes)
        return RingDescriptor(**fields)

    # construction helpers

    def poly(self, terms: Mapping | Iterable = ()) -> "Polynomial":
        return Polynomial(self, terms)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.num_vars: c})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.num_vars:
            raise DimensionError(f"exponent vector of length {len(exps)} in {self.num_vars} variables")
        return Polynomial(self, {exps: coeff})

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.num_vars
        e[i] = 1
        return self.monomial(e)

    def gens(self):
        return [self.var(i) for i in range(self.num_vars)]

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def parse(self, text: str) -> "Polynomial":
        from .textformat import parse_polynomial

        return parse_polynomial(self, text)

    def __str__(self):
        k = f"F_{self.characteristic}" if self.characteristic else "Q"
        return f"{k}[x0..x{self.num_vars - 1}] ({self.order})"


class Polynomial:
    """Immutable polynomial: a dict from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Mapping | Iterable = (), _trusted=False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        F = ring.field
        n = ring.num_vars
        out = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != n:
                raise DimensionError(f"exponent vector of length {len(m)} in {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = F(c)
            if m in out:
                c = F(out[m] + c)
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        self._terms = out

    # -- basic accessors

    @property
    def terms(self):
        """List of ``(coefficient, exponents)`` pairs, largest monomial first."""
        key = self.ring.key
        return [(c, m) for m, c in sorted(self._terms.items(), key=lambda t: key(t[0]))]

    def as_dict(self) -> dict:
        return dict(self._terms)

    def monomials(self):
        return [m for _, m in self.terms]

    def coefficient(self, exps) -> object:
        return self._terms.get(tuple(exps), self.ring.field(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def support(self) -> frozenset:
        """Indices of variables occurring in some term."""
        return frozenset(i for m in self._terms for i, e in enumerate(m) if e)

    def leading_term(self):
        """``(coefficient, exponents)`` of the largest term under the ring's order."""
        if not self._terms:
            raise ZeroPolynomialError("leading term of the zero polynomial")
        m = min(self._terms, key=self.ring.key)
        return self._terms[m], m

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[1]

    def leading_coefficient(self):
        return self.leading_term()[0]

    def monic(self) -> "Polynomial":
        c = self.leading_coefficient()
        return self * self.ring.field.inv(c)

    # -- arithmetic

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return Polynomial(self.ring, {m: p - c for m, c in self._terms.items()}, _trusted=True)
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            p = self.ring.characteristic
            if p:
                return Polynomial(self.ring, {m: v * c % p for m, v in self._terms.items()}, _trusted=True)
            return Polynomial(self.ring, {m: v * c for m, v in self._terms.items()}, _trusted=True)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        p = self.ring.characteristic
        out: dict = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(map(add, m1, m2))
                out[m] = get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exps, coeff=1) -> "Polynomial":
        exps = tuple(exps)
        c = self.ring.field(coeff)
        p = self.ring.characteristic
        out = {}
        for m, v in self._terms.items():
            w = v * c
            if p:
                w %= p
            if w:
                out[tuple(map(add, m, exps))] = w
        return Polynomial(self.ring, out, _trusted=True)

    def frobenius(self, q: int) -> "Polynomial":
        """``f**q`` for ``q`` a power of the characteristic, computed termwise."""
        p = self.ring.characteristic
        if not p:
            raise ValueError("Frobenius needs positive characteristic")
        r = q
        while r % p == 0:
            r //= p
        if r != 1:
            raise ValueError(f"{q} is not a power of {p}")
        # c**q == c in F_p
        return Polynomial(self.ring, {tuple(e * q for e in m): c for m, c in self._terms.items()}, _trusted=True)

    def evaluate(self, point) -> object:
        F = self.ring.field
        total = F(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * F(x) ** e
            total = total + v
        return F(total)

    # -- comparison, hashing, printing

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        p = self.ring.characteristic
        pieces = []
        for c, m in self.terms:
            if p and c > p // 2:
                c = c - p
            neg = c < 0
            c = -c if neg else c
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m) if e
            )
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)


def leading_term(f: Polynomial):
    """Module-level spelling of :meth:`Polynomial.leading_term`."""
    return f.leading_term()
