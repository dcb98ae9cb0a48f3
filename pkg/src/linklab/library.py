"""Bundled example ideals and the determinantal family."""

from __future__ import annotations

import re
from importlib import resources
from itertools import combinations

from .groebner import Ideal
from .polyring import Polynomial, RingDescriptor
from .textformat import parse_ideal_text

NAMES = ("skew_lines", "twisted_quartic", "twisted_quartic_printed", "quartic_link_ci")


def corpus_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown corpus entry {name!r}; known: {', '.join(NAMES)}")
    return resources.files("linklab").joinpath("corpus").joinpath(f"{name}.ideal").read_text()


def load(name: str, characteristic: int | None = None) -> Ideal:
    """Corpus ideal ``name``, optionally re-read over another prime field (or Q for 0)."""
    text = corpus_text(name)
    if characteristic is not None:
        text = re.sub(r"char=\d+", f"char={characteristic}", text, count=1)
    return parse_ideal_text(text)


def determinant(rows: list[list[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row; fine for the small sizes used here."""
    k = len(rows)
    if k == 1:
        return rows[0][0]
    out = rows[0][0].ring.zero
    for j in range(k):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * determinant(minor)
        out = out - term if j % 2 else out + term
    return out


def generic_matrix(ring: RingDescriptor, nrows: int, ncols: int, offset: int = 0):
    """Matrix of distinct variables, entry (i, j) = x_{offset + ncols*i + j}."""
    return [[ring.var(offset + ncols * i + j) for j in range(ncols)] for i in range(nrows)]


def minors_ideal(matrix, size: int, row_subset=None) -> Ideal:
    rows = list(range(len(matrix))) if row_subset is None else list(row_subset)
    ncols = len(matrix[0])
    ring = matrix[0][0].ring
    gens = []
    for rs in combinations(rows, size):
        for cs in combinations(range(ncols), size):
            gens.append(determinant([[matrix[r][c] for c in cs] for r in rs]))
    return Ideal(ring, gens)


def determinantal_example(characteristic: int = 32003):
    """(a, b, c) for the generic 4x3 matrix X in 12 variables.

    a = maximal minors of X, b = 2-minors of the last two rows, and
    c = the two maximal minors on rows {0,2,3} and {1,2,3}, a complete
    intersection inside both.
    """
    ring = RingDescriptor(12, characteristic)
    X = generic_matrix(ring, 4, 3)
    a = minors_ideal(X, 3)
    b = minors_ideal(X, 2, row_subset=(2, 3))
    c = Ideal(ring, [determinant([X[r] for r in rows]) for rows in ((0, 2, 3), (1, 2, 3))])
    return a, b, c
