"""Opposite categories and formal shifts.

The opposite of an A-infinity category keeps the objects, transposes every
hom space and conjugates the operations by the Koszul-signed full reversal
of tensor factors; the scalar (-1)^{k+1} on the arity-k operation is forced
by requiring that homology categories of the opposite and the opposite of
the homology category coincide.  Functors and transformations reverse the
same way, with scalars (-1)^{k+1} and (-1)^k respectively.

The shift construction adjoins formally regraded copies (X, n) of every
object for n in a finite window.  Operations are conjugated by suspension
powers matching the regrading, with the overall scalar (-1)^{n_k - n_0}
pinned down by the binary case; all other signs come from the Koszul
bookkeeping of the conjugating tensor factors.
"""

import itertools

from .core import (GradedSpace, GradedMap, Matrix, tensor_space,
                   tensor_map, compose, signed_permutation, shift_space,
                   shift_iso, solve_left)
from .ainf import (AInfCategory, AInfFunctor, AInfTransformation,
                   homology_category, _invertible_h0_classes, _pair_compose,
                   _unitvec)


# ---------------------------------------------------------------------------
# the signed reversal


def _reversal(cat, path):
    """Koszul-signed full reversal.

    Source: the tensor of the homs s(path[i+1] -> path[i]) in path order --
    that is, the path space that the opposite category assigns to `path`.
    Target: the path space of the reversed path in `cat` itself.
    """
    path = tuple(path)
    k = len(path) - 1
    legs = [cat.shom(path[i + 1], path[i]) for i in range(k)]
    src = tensor_space(legs, ring=cat.ring)
    return signed_permutation(src, [k - 1 - i for i in range(k)])


class GammaMap:
    """The arity-k anti-isomorphism component (-1)^k (signed reversal)."""

    def __init__(self, arity, path, map):
        self.arity = arity
        self.path = path
        self.map = map


def gamma(cat, path):
    path = tuple(path)
    k = len(path) - 1
    m = _reversal(cat, path)
    if k % 2:
        m = m.scale(-1)
    return GammaMap(k, path, m)


# ---------------------------------------------------------------------------
# opposites


def opposite_category(cat):
    """Transposed homs, operations (-1)^{k+1} (reversal then b_k).

    Units are kept as-is: the diagonal homs do not move.  Applying the
    construction twice returns the original category on the nose.
    """
    shoms = {(y, x): sp for (x, y), sp in cat.shoms.items()}
    ops = {}
    for p, b in cat.ops.items():
        q = tuple(reversed(p))
        k = len(p) - 1
        sgn = 1 if k % 2 else -1
        ops[q] = _reversal(cat, q).then(b).scale(sgn)
    return AInfCategory(cat.ring, cat.objects, shoms, ops, units=cat.units,
                        max_arity=cat.max_arity, exact=cat.exact)


def opposite_functor(F):
    """Componentwise (-1)^{k+1} (reversal then f_k), between the opposites."""
    comps = {}
    for p, f in F.comps.items():
        q = tuple(reversed(p))
        k = len(p) - 1
        sgn = 1 if k % 2 else -1
        comps[q] = _reversal(F.source, q).then(f).scale(sgn)
    return AInfFunctor(opposite_category(F.source),
                       opposite_category(F.target),
                       dict(F.obj_map), comps, max_arity=F.max_arity)


def opposite_transformation(r):
    """r: F -> G turns into (-1)^k (reversal then r_k): G-op -> F-op."""
    F, G = r.source_functor, r.target_functor
    comps = {}
    for p, c in r.comps.items():
        k = len(p) - 1
        if k == 0:
            comps[p] = c
            continue
        q = tuple(reversed(p))
        sgn = -1 if k % 2 else 1
        comps[q] = _reversal(F.source, q).then(c).scale(sgn)
    return AInfTransformation(opposite_functor(G), opposite_functor(F),
                              r.degree, comps)


def opposite_bicomponent(f, k, n):
    """Reverse a two-block component f: T^k s(A) (x) T^n s(B) -> s(C).

    The blocks are reversed separately (one signed permutation) and the
    whole is scaled by (-1)^{k+n-1}; source and target are reinterpreted as
    homs of the opposite categories by the caller.
    """
    if len(f.source.factors) != k + n:
        raise ValueError("component arity does not match (k, n)")
    perm = [k - 1 - i for i in range(k)] + [k + n - 1 - i for i in range(n)]
    m = signed_permutation(f.source, perm)
    sgn = 1 if (k + n - 1) % 2 == 0 else -1
    return m.then(f).scale(sgn)


# ---------------------------------------------------------------------------
# shifts


class ShiftedCategory(AInfCategory):
    """Same category with objects (X, n) regraded by window differences."""

    def __init__(self, base, window):
        window = list(window)
        if any(not isinstance(n, int) for n in window):
            raise ValueError("shift window must consist of integers")
        window = sorted(set(window))
        if not window:
            raise ValueError("empty shift window")
        objects = [(x, n) for x in base.objects for n in window]
        shoms = {}
        for (x, y), sp in base.shoms.items():
            for n, m in itertools.product(window, repeat=2):
                shoms[((x, n), (y, m))] = shift_space(sp, m - n)
        ops = {}
        for p, b in base.ops.items():
            k = len(p) - 1
            for ns in itertools.product(window, repeat=k + 1):
                legs = [shift_iso(base.shom(p[i], p[i + 1]), ns[i + 1] - ns[i])
                        for i in range(k)]
                out = shift_iso(base.shom(p[0], p[-1]), ns[-1] - ns[0])
                m = compose(tensor_map(*legs).inverse(), b, out)
                if (ns[-1] - ns[0]) % 2:
                    m = m.scale(-1)
                ops[tuple(zip(p, ns))] = m
        units = None
        if base.units is not None:
            units = {(x, n): u for x, u in base.units.items() for n in window}
        super().__init__(base.ring, objects, shoms, ops, units=units,
                         max_arity=base.max_arity, exact=base.exact)
        self.base = base
        self.window = tuple(window)


def shift_category(cat, window):
    return ShiftedCategory(cat, window)


# ---------------------------------------------------------------------------
# the closed-under-shifts report


class ShiftClosureReport:
    """statuses: {(X, n): (tag, detail)} with tag one of 'closed',
    'not closed', 'undetermined'.  ok is True / False / None accordingly."""

    def __init__(self, ok, statuses, category):
        self.ok = ok
        self.statuses = statuses
        self.category = category

    def __bool__(self):
        return self.ok is True


def _h0_row(e, dim):
    if dim == 0:
        return []
    return list(e.block(0).data[0])


def _unit_in_product_span(hcat, a, b):
    """Necessary for an iso a = b: the identity class of `a` must be a
    combination of composites through b (and symmetrically for `b`)."""
    ring = hcat.ring
    for x, y in ((a, b), (b, a)):
        hxy, hyx = hcat.hom(x, y), hcat.hom(y, x)
        dxx = hcat.hom(x, x).dim(0)
        unit_row = _h0_row(hcat.unit_class(x), dxx)
        if not any(c != ring.zero for c in unit_row):
            continue
        comp = hcat.compose_map(x, y, x)
        rows = []
        for i in range(hxy.dim(0)):
            for j in range(hyx.dim(0)):
                rows.append(_pair_compose(hcat, comp, hxy, hyx,
                                          _unitvec(ring, hxy.dim(0), i),
                                          _unitvec(ring, hyx.dim(0), j)))
        if not rows:
            return False
        a_mat = Matrix(ring, rows, len(rows), dxx)
        b_mat = Matrix(ring, [unit_row], 1, dxx)
        if solve_left(a_mat, b_mat) is None:
            return False
    return True


def _unit_class_is_zero(hcat, x):
    dim = hcat.hom(x, x).dim(0)
    row = _h0_row(hcat.unit_class(x), dim)
    return all(c == hcat.ring.zero for c in row)


def _witness_classes(hcat, a, b, f_vec, g_vec):
    """Check H(fg) = 1_a and H(gf) = 1_b for given degree-0 class rows."""
    ring = hcat.ring
    comp_ab = hcat.compose_map(a, b, a)
    comp_ba = hcat.compose_map(b, a, b)
    fg = _pair_compose(hcat, comp_ab, hcat.hom(a, b), hcat.hom(b, a),
                       f_vec, g_vec)
    gf = _pair_compose(hcat, comp_ba, hcat.hom(b, a), hcat.hom(a, b),
                       g_vec, f_vec)
    ua = _h0_row(hcat.unit_class(a), hcat.hom(a, a).dim(0))
    ub = _h0_row(hcat.unit_class(b), hcat.hom(b, b).dim(0))
    return list(fg) == list(ua) and list(gf) == list(ub)


def closed_under_shifts(cat, window, witnesses=None, budget=400):
    """Decide whether every (X, n) over the window is isomorphic, in the
    degree-0 homology category of the shifted category, to some (Y, 0).

    witnesses, if given, maps (X, n) to (Y, f_row, g_row): degree-0 homology
    class coefficient rows with f g and g f the identity classes.  Without a
    witness the search enumerates candidate classes over a small coefficient
    grid (the whole prime field when it fits in the budget) and solves for a
    two-sided inverse linearly; an unfinished search is reported as
    undetermined rather than as a failure.
    """
    if not cat.ring.is_field:
        raise ValueError("shift closure needs field scalars")
    if cat.units is None:
        raise ValueError("shift closure needs chosen units")
    window = sorted(set(window) | {0})
    shifted = shift_category(cat, window)
    hcat = homology_category(shifted)
    statuses = {}
    for x in cat.objects:
        for n in window:
            obj = (x, n)
            if n == 0:
                statuses[obj] = ("closed", (x, "identity"))
                continue
            if witnesses and obj in witnesses:
                y, f_vec, g_vec = witnesses[obj]
                if _witness_classes(hcat, obj, (y, 0), f_vec, g_vec):
                    statuses[obj] = ("closed", (y, f_vec, g_vec))
                else:
                    statuses[obj] = ("undetermined", "witness rejected")
                continue
            statuses[obj] = _search_iso(cat, hcat, obj, budget)
    tags = [tag for tag, _ in statuses.values()]
    if all(t == "closed" for t in tags):
        ok = True
    elif any(t == "not closed" for t in tags):
        ok = False
    else:
        ok = None
    return ShiftClosureReport(ok, statuses, shifted)


def _search_iso(cat, hcat, obj, budget):
    ring = cat.ring
    if _unit_class_is_zero(hcat, obj):
        for y in cat.objects:
            if _unit_class_is_zero(hcat, (y, 0)):
                return ("closed", (y, "both contractible"))
        return ("not closed", "contractible, no contractible (Y, 0)")
    exhaustive = True
    any_candidate = False
    for y in cat.objects:
        tgt = (y, 0)
        n0 = hcat.hom(obj, tgt).dim(0)
        if n0 == 0 or hcat.hom(tgt, obj).dim(0) == 0:
            continue
        if _unit_class_is_zero(hcat, tgt):
            continue        # an iso would force obj to be contractible too
        if not _unit_in_product_span(hcat, obj, tgt):
            continue
        any_candidate = True
        pair = next(iter(_invertible_h0_classes(hcat, obj, tgt, budget)), None)
        if pair is not None:
            u, v = pair
            return ("closed", (y, u, v))
        if not (ring.name.startswith("fp:") and ring.char ** n0 <= budget):
            exhaustive = False
    if not any_candidate or exhaustive:
        return ("not closed", "no invertible degree-0 class exists")
    return ("undetermined", "search budget exhausted")
