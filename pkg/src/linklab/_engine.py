"""Buchberger's algorithm on sparse vectors of a free module R^s.

A vector is a dict ``{mono: coeff}`` where ``mono`` is an exponent tuple with
the component index appended, ``(e0, ..., e_{n-1}, pos)``.  Ideals are the
special case where every term has ``pos == 0``.  Keeping the position inside
the tuple means multiplying by a monomial (whose last entry is 0) is a plain
elementwise sum, and one reduction loop serves ideals and modules alike.

Orders are descending keys (see :mod:`linklab.polyring`): the term with the
smallest key is the leading term.
"""

from __future__ import annotations

import heapq
import os
from operator import add, le, sub

from .errors import BudgetExceeded

DEFAULT_PAIR_BUDGET = 10**6


def pair_budget() -> int:
    value = os.environ.get("LINKLAB_PAIR_BUDGET")
    return int(value) if value else DEFAULT_PAIR_BUDGET


def make_key(n: int, order: str = "grevlex", shifts=None, blocks=None, elim: int = 0):
    """Build a descending key for module monomials ``(e0..e_{n-1}, pos)``.

    ``shifts[pos]`` is the degree of the basis vector at ``pos`` (graded orders
    compare shifted total degree).  ``blocks[pos]`` groups positions; a smaller
    block index always wins (position-over-term between blocks, term-over-
    position inside a block).  ``elim`` > 0 makes the last ``elim`` variables
    an elimination block that dominates everything else.
    """
    if elim:
        base = make_key(n - elim, order, shifts, blocks)

        def key(m):
            return (-sum(m[n - elim:n]),) + base(m[: n - elim] + m[n:])

        return key
    plain = shifts is None and blocks is None
    if plain:
        if order == "grevlex":
            return lambda m: (m[-1] - sum(m),) + m[-2::-1]
        if order == "glex":
            return lambda m: (m[-1] - sum(m),) + tuple(-x for x in m[:-1]) + (m[-1],)
        if order == "lex":
            return lambda m: tuple(-x for x in m)
        raise ValueError(order)
    sh = list(shifts) if shifts is not None else None
    bl = list(blocks) if blocks is not None else None
    if order == "grevlex":
        if bl is None:
            return lambda m: (m[-1] - sum(m) - sh[m[-1]],) + m[-2::-1]
        if sh is None:
            return lambda m: (bl[m[-1]], m[-1] - sum(m)) + m[-2::-1]
        return lambda m: (bl[m[-1]], m[-1] - sum(m) - sh[m[-1]]) + m[-2::-1]
    if order == "glex":
        def key(m):
            pos = m[-1]
            d = sum(m) - pos + (sh[pos] if sh else 0)
            head = (bl[pos], -d) if bl else (-d,)
            return head + tuple(-x for x in m[:-1]) + (pos,)

        return key
    if order == "lex":
        def key(m):
            pos = m[-1]
            head = (bl[pos],) if bl else ()
            return head + tuple(-x for x in m[:-1]) + (pos,)

        return key
    raise ValueError(order)


class Elt:
    """A basis vector: terms sorted by key, leading data cached."""

    __slots__ = ("terms", "lm", "lc", "mask", "tail", "deg")

    def __init__(self, terms, deg):
        self.terms = terms
        self.lm, self.lc = terms[0]
        self.tail = terms[1:]
        self.mask = _mask(self.lm)
        self.deg = deg

    def as_dict(self):
        return dict(self.terms)


def _mask(m):
    mask = 0
    for i in range(len(m) - 1):
        if m[i]:
            mask |= 1 << i
    return mask


def _divides(a, b):
    return a[-1] == b[-1] and all(map(le, a, b))


def _lcm(a, b):
    return tuple(map(max, a, b))


class Context:
    """Ring data needed by the engine: variable count, field, order, grading."""

    def __init__(self, n, p, key, shifts=None, product_criterion=True, budget=None):
        self.n = n
        self.p = p
        self.key = key
        self.shifts = list(shifts) if shifts is not None else [0]
        self.product_criterion = product_criterion
        self.budget = pair_budget() if budget is None else budget
        self.pairs_done = 0

    def inv(self, c):
        return pow(c, -1, self.p) if self.p else 1 / c

    def degree(self, m):
        pos = m[-1]
        return sum(m) - pos + self.shifts[pos]

    def sort_terms(self, d):
        key = self.key
        return sorted(d.items(), key=lambda t: key(t[0]))

    def make_elt(self, d, monic=True):
        terms = self.sort_terms(d)
        if monic:
            lc = terms[0][1]
            if lc != 1:
                inv = self.inv(lc)
                p = self.p
                if p:
                    terms = [(m, c * inv % p) for m, c in terms]
                else:
                    terms = [(m, c * inv) for m, c in terms]
        return Elt(terms, self.degree(terms[0][0]))

    def is_homogeneous(self, d):
        return len({self.degree(m) for m in d}) <= 1

    def leading(self, d):
        return min(d, key=self.key)


def reduce(ctx: Context, f: dict, basis, full=True, stop_pos=None) -> dict:
    """Normal form of ``f`` modulo ``basis`` (a sequence of :class:`Elt`).

    Divisors are tried in list order.  With ``full=False`` only the leading
    term is reduced.  With ``stop_pos`` set, reduction stops at the first
    leading term whose position is ``>= stop_pos``; the rest is returned as is.
    """
    key = ctx.key
    p = ctx.p
    f = dict(f)
    heap = [(key(m), m) for m in f]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    out = {}
    divisors = [(g.lm, g.mask, g.lm[-1], g) for g in basis]
    while heap:
        _, m = pop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        pos = m[-1]
        if stop_pos is not None and pos >= stop_pos:
            out[m] = c
            out.update(f)
            return out
        mmask = 0
        for i in range(len(m) - 1):
            if m[i]:
                mmask |= 1 << i
        for glm, gmask, gpos, g in divisors:
            if gpos == pos and not (gmask & ~mmask) and all(map(le, glm, m)):
                break
        else:
            out[m] = c
            if not full:
                out.update(f)
                return out
            continue
        mult = tuple(map(sub, m, glm))
        if g.lc != 1:
            c = c * ctx.inv(g.lc)
            if p:
                c %= p
        get = f.get
        if p:
            for gm, gc in g.tail:
                nm = tuple(map(add, gm, mult))
                v = get(nm)
                if v is None:
                    f[nm] = -c * gc % p
                    push(heap, (key(nm), nm))
                else:
                    v = (v - c * gc) % p
                    if v:
                        f[nm] = v
                    else:
                        del f[nm]
        else:
            for gm, gc in g.tail:
                nm = tuple(map(add, gm, mult))
                v = get(nm)
                if v is None:
                    f[nm] = -c * gc
                    push(heap, (key(nm), nm))
                else:
                    v = v - c * gc
                    if v:
                        f[nm] = v
                    else:
                        del f[nm]
    return out


class GBResult:
    """Output of :func:`buchberger`: a minimal GB plus, for graded input,
    the indices of the inputs that form a minimal generating set."""

    def __init__(self, basis, mingens, pairs):
        self.basis = basis
        self.mingens = mingens
        self.pairs = pairs


class _Buchberger:
    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.elts = []
        self.G = []  # indices, ascending
        self.B = {}  # (i, j) -> lcm
        self.heap = []

    def coprime(self, a, b):
        return self.ctx.product_criterion and not (a.mask & b.mask)

    def add(self, d):
        ctx = self.ctx
        elt = ctx.make_elt(d)
        ih = len(self.elts)
        self.elts.append(elt)
        elts = self.elts
        mh = elt.lm
        pos = mh[-1]
        C = [ig for ig in self.G if elts[ig].lm[-1] == pos]
        lcms = {ig: _lcm(mh, elts[ig].lm) for ig in C}
        D = []
        while C:
            ig = C.pop()
            L = lcms[ig]
            if self.coprime(elt, elts[ig]) or (
                not any(_divides(lcms[x], L) for x in C)
                and not any(_divides(lcms[x], L) for x in D)
            ):
                D.append(ig)
        E = [ig for ig in D if not self.coprime(elt, elts[ig])]
        B = {}
        for (i, j), L in self.B.items():
            if (
                not _divides(mh, L)
                or _lcm(elts[i].lm, mh) == L
                or _lcm(elts[j].lm, mh) == L
            ):
                B[(i, j)] = L
        key = ctx.key
        for ig in sorted(E):
            L = lcms[ig]
            B[(ig, ih)] = L
            heapq.heappush(self.heap, (ctx.degree(L), key(L), ig, ih))
        self.B = B
        self.G = [ig for ig in self.G if not _divides(mh, elts[ig].lm)] + [ih]
        return ih

    def basis(self):
        return [self.elts[i] for i in self.G]

    def next_pair_degree(self):
        heap = self.heap
        while heap and (heap[0][2], heap[0][3]) not in self.B:
            heapq.heappop(heap)
        return heap[0][0] if heap else None

    def process_pair(self):
        ctx = self.ctx
        _, _, i, j = heapq.heappop(self.heap)
        L = self.B.pop((i, j))
        ctx.pairs_done += 1
        if ctx.pairs_done > ctx.budget:
            raise BudgetExceeded(ctx.budget)
        f, g = self.elts[i], self.elts[j]
        mf = tuple(map(sub, L, f.lm))
        mg = tuple(map(sub, L, g.lm))
        p = ctx.p
        d = {tuple(map(add, m, mf)): c for m, c in f.tail}
        for m, c in g.tail:
            nm = tuple(map(add, m, mg))
            v = d.get(nm, 0) - c
            if p:
                v %= p
            if v:
                d[nm] = v
            else:
                d.pop(nm, None)
        if not d:
            return
        r = reduce(ctx, d, self.basis())
        if r:
            self.add(r)


def buchberger(ctx: Context, inputs, homogeneous=False) -> GBResult:
    """Minimal Groebner basis of the submodule spanned by ``inputs``.

    Pairs are taken smallest lcm degree first (ties by the term order) and
    filtered with the Gebauer-Moeller criteria.  For graded input the inputs
    are fed in degree by degree, after all pairs of that degree, so the inputs
    that survive reduction form a minimal generating set.
    """
    bb = _Buchberger(ctx)
    start = ctx.pairs_done
    mingens = None
    if homogeneous:
        mingens = []
        pending = [(ctx.degree(next(iter(d))), i) for i, d in enumerate(inputs) if d]
        pending.sort()
        pending.reverse()
        while pending or bb.B:
            pd = bb.next_pair_degree()
            if pending and (pd is None or pending[-1][0] < pd):
                _, i = pending.pop()
                r = reduce(ctx, inputs[i], bb.basis())
                if r:
                    mingens.append(i)
                    bb.add(r)
            else:
                bb.process_pair()
    else:
        for d in inputs:
            if d:
                r = reduce(ctx, d, bb.basis())
                if r:
                    bb.add(r)
        while bb.B:
            if bb.next_pair_degree() is None:
                break
            bb.process_pair()
    return GBResult(bb.basis(), mingens, ctx.pairs_done - start)


def interreduce(ctx: Context, basis):
    """Reduced GB from a minimal one: tails fully reduced, monic, sorted."""
    key = ctx.key
    basis = sorted(basis, key=lambda g: key(g.lm))
    out = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = reduce(ctx, g.as_dict(), others)
        out.append(ctx.make_elt(r))
    return out
