"""Shared helpers for tests: deterministic RNG-built exact objects."""

import random
from fractions import Fraction

from ainfcheck.core import (GradedSpace, GradedMap, Matrix, Complex, compose)


def rng(seed):
    return random.Random(seed)


def random_matrix(r, ring, rows, cols, span=3):
    return Matrix(ring, [[ring.of(r.randint(-span, span)) for _ in range(cols)]
                         for _ in range(rows)], rows, cols)


def random_invertible(r, ring, n, span=2):
    while True:
        m = random_matrix(r, ring, n, n, span)
        from ainfcheck.core import rank
        if rank(m) == n:
            return m


def random_graded_map(r, ring, src, tgt, degree, span=2):
    blocks = {}
    for d in src.degrees():
        if tgt.dim(d + degree):
            blocks[d] = random_matrix(r, ring, src.dim(d), tgt.dim(d + degree), span)
    return GradedMap(src, tgt, degree, blocks)


def random_complex(r, ring, max_pairs=3, max_free=3, window=(-2, 3)):
    """A complex with known homology: sum of acyclic pairs and free summands,
    conjugated by a random invertible degree-0 map."""
    lo, hi = window
    basis = {}
    pairs = []                      # (deg, idx_src, idx_tgt)
    hdims = {}
    def add(d, tag):
        basis.setdefault(d, []).append("%s%d" % (tag, len(basis.get(d, []))))
        return len(basis[d]) - 1
    for _ in range(r.randint(0, max_pairs)):
        d = r.randint(lo, hi - 1)
        pairs.append((d, add(d, "p"), add(d + 1, "q")))
    for _ in range(r.randint(0, max_free)):
        d = r.randint(lo, hi)
        add(d, "f")
        hdims[d] = hdims.get(d, 0) + 1
    sp = GradedSpace(ring, {d: tuple(v) for d, v in basis.items()})
    blocks = {}
    for (d, i, j) in pairs:
        if d not in blocks:
            blocks[d] = [[ring.zero] * sp.dim(d + 1) for _ in range(sp.dim(d))]
        blocks[d][i][j] = ring.one
    dmap = GradedMap(sp, sp, 1, {d: Matrix(ring, rows, sp.dim(d), sp.dim(d + 1))
                                 for d, rows in blocks.items()})
    g = GradedMap(sp, sp, 0, {d: random_invertible(r, ring, sp.dim(d))
                              for d in sp.degrees()})
    dmap = compose(g.inverse(), dmap, g)
    return Complex(sp, dmap), hdims


def frac_matrix(m):
    """Exact Matrix -> list of lists of Fractions (for sympy oracles)."""
    out = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            v = m.data[i][j]
            row.append(Fraction(getattr(v, "val", v)) if hasattr(v, "val")
                       else Fraction(v))
        out.append(row)
    return out
