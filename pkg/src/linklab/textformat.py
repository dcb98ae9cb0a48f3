"""The plain-text ideal format.

    # comment
    ring n=4 char=32003 order=grevlex
    x0*x3 - x1*x2
    x1^3 - x0^2*x2

First non-comment line declares the ring, every further nonempty line is one
generator.  ``*`` between factors is optional.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .groebner import Ideal
from .polyring import Polynomial, RingDescriptor

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^])|(?P<bad>\S))")


def _tokens(text, line):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        col = m.start(m.lastgroup) + 1
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group('bad')!r}", line, col)
        out.append((m.lastgroup, m.group(m.lastgroup), col))
        pos = m.end()
    return out


def parse_polynomial(ring: RingDescriptor, text: str, line: int = 1) -> Polynomial:
    toks = _tokens(text, line)
    if not toks:
        raise ParseError("empty polynomial", line, 1)
    n = ring.num_vars
    F = ring.field
    terms: dict = {}
    i = 0

    def err(msg, j):
        col = toks[j][2] if j < len(toks) else len(text) + 1
        raise ParseError(msg, line, col)

    while i < len(toks):
        sign = 1
        if toks[i][0] == "op" and toks[i][1] in "+-":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif terms or i > 0:
            err("expected '+' or '-'", i)
        coeff = sign
        exps = [0] * n
        nfactors = 0
        while i < len(toks):
            kind, val, col = toks[i]
            if kind == "op" and val == "*":
                if nfactors == 0:
                    err("'*' without a left factor", i)
                i += 1
                if i >= len(toks) or toks[i][0] not in ("int", "var"):
                    err("expected a factor after '*'", i)
                continue
            if kind == "int":
                coeff *= int(val)
                i += 1
            elif kind == "var":
                k = int(val[1:])
                if k >= n:
                    raise ParseError(f"unknown variable {val} in a ring with {n} variables", line, col)
                e = 1
                i += 1
                if i < len(toks) and toks[i][1] == "^":
                    i += 1
                    if i >= len(toks) or toks[i][0] != "int":
                        err("malformed exponent", i - 1)
                    e = int(toks[i][1])
                    i += 1
                exps[k] += e
            elif val == "^":
                err("malformed exponent", i)
            else:
                break
            nfactors += 1
        if nfactors == 0:
            err("expected a term", i)
        m = tuple(exps)
        terms[m] = F(terms.get(m, 0) + coeff)
    return Polynomial(ring, terms)


def parse_ring_line(text: str, line: int = 1) -> RingDescriptor:
    text = text.strip()
    if not text.startswith("ring"):
        raise ParseError("first line must be 'ring n=<int> char=<0|p> order=<...>'", line, 1)
    fields = {}
    for m in re.finditer(r"(\w+)=(\S+)", text):
        fields[m.group(1)] = (m.group(2), m.start() + 1)
    if "n" not in fields:
        raise ParseError("ring line is missing n=<int>", line, 1)
    try:
        n = int(fields["n"][0])
        char = int(fields.get("char", ("32003", 0))[0])
    except ValueError as exc:
        raise ParseError(f"bad ring parameter: {exc}", line, 1) from None
    order = fields.get("order", ("grevlex", 0))[0]
    unknown = set(fields) - {"n", "char", "order"}
    if unknown:
        name = sorted(unknown)[0]
        raise ParseError(f"unknown ring parameter {name!r}", line, fields[name][1])
    try:
        return RingDescriptor(n, char, order)
    except ValueError as exc:
        raise ParseError(str(exc), line, 1) from None


def parse_ideal_text(text: str, ring: RingDescriptor | None = None) -> Ideal:
    """Parse the ideal format.  If ``ring`` is given the ring line is optional."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ring is None:
            ring = parse_ring_line(body, lineno)
            continue
        if body.strip().startswith("ring"):
            if gens:
                raise ParseError("ring line after generators", lineno, 1)
            ring = parse_ring_line(body, lineno)
            continue
        gens.append(parse_polynomial(ring, body, lineno))
    if ring is None:
        raise ParseError("empty ideal file", 1, 1)
    return Ideal(ring, gens)


def parse_ideal_file(path) -> Ideal:
    text = Path(path).read_text()
    if not text.strip():
        raise ParseError(f"empty ideal file {path}", 1, 1)
    return parse_ideal_text(text)


def format_ideal(I: Ideal, comment: str | None = None) -> str:
    r = I.ring
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"ring n={r.num_vars} char={r.characteristic} order={r.order}")
    lines.extend(str(g) for g in I.generators)
    return "\n".join(lines) + "\n"
