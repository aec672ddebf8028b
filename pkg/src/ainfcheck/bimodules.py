"""Two-sided A-infinity modules over a pair of finite categories.

A bimodule assigns a graded span to each pair of objects (one from the left
category, one from the right) and carries components

    b_{kn}: [k left legs] (x) span (x) [n right legs]  ->  span,   degree +1,

keyed by the pair of object paths.  Flatness -- the square-zero identity for
the induced differential on the framed tensors -- is checked by two
independent code paths: a componentwise sum over contractions and frames,
and a genuine matrix-coefficient square that keeps framed legs in the
output and composes blocks over all intermediate keys.

The same data can be packaged as a hom-like two-variable functor into
complexes (contravariant on the left, covariant on the right); both
directions of that dictionary are implemented, along with the induced map
on morphisms, and all of it is exercised by round-trip and defect tests.
Duals, opposites, restriction along functors, the regular bimodule, unit
actions and a homology-level representability search round out the module.

Conventions follow the rest of the package: composition left-to-right,
elements on the left, every sign from the Koszul engine.
"""

from .core import (GradedSpace, GradedMap, Matrix, Complex, tensor_space,
                   tensor_map, compose, signed_permutation, transposition,
                   unit_space, element_map, shift_space, shift_iso, shift_map,
                   hom_space, hom_to_map, map_to_hom, hom_element, ev_map,
                   coev_map, m2_map, hom_post, hom_complex, k_complex,
                   dual_complex, homology, induced_map, is_chain_map, rank)
from .ainf import (AInfCategory, AInfFunctor, AInfTransformation,
                   StasheffReport, functor_category, identity_functor,
                   compositions, _coeff_grid, _unitvec)
from .dualities import gamma, opposite_category, opposite_functor
from .examples import dg_complexes_category


def _legs_space(cat, path):
    return tensor_space([cat.shom(path[i], path[i + 1])
                         for i in range(len(path) - 1)], ring=cat.ring)


def _pair_space(leftop, right, lop, rp):
    facs = [leftop.shom(lop[i], lop[i + 1]) for i in range(len(lop) - 1)]
    facs += [right.shom(rp[j], rp[j + 1]) for j in range(len(rp) - 1)]
    return tensor_space(facs, ring=right.ring)


def _sus_hom(U, V):
    """Suspended inner hom between two complexes, as a graded space."""
    return shift_space(hom_space(U.space, V.space), 1)


def _sus_b1(U, V):
    hc = hom_complex(U, V)
    s = shift_iso(hc.space, 1)
    return compose(s.inverse(), hc.d, s)


def _sus_b2(U, V, W):
    """Suspended composition of inner homs, matching the dg-category ops."""
    h1, h2 = hom_space(U.space, V.space), hom_space(V.space, W.space)
    sout = shift_iso(hom_space(U.space, W.space), 1)
    return compose(tensor_map(shift_iso(h1, 1), shift_iso(h2, 1)).inverse(),
                   m2_map(h1, h2), sout)


def _hom_shift(hs, n):
    """Conjugation by shift carriers: C(M,N) -> C(M[n],N[n]), degree 0."""
    out = hom_space(shift_space(hs.hsource, n), shift_space(hs.htarget, n))
    ring = hs.ring
    blocks = {}
    for d in hs.degrees():
        rows = []
        for i in range(hs.dim(d)):
            f = hom_to_map(hs, d, _unitvec(ring, hs.dim(d), i))
            _, row = map_to_hom(out, shift_map(f, n))
            rows.append(row)
        blocks[d] = Matrix(ring, rows, hs.dim(d), out.dim(d))
    return GradedMap(hs, out, 0, blocks)


# ---------------------------------------------------------------------------
# bimodules


class Bimodule:
    """Finite exact bimodule over a pair of categories.

    spans: {(x, y): GradedSpace} with x a left object, y a right one; absent
    pairs are zero.  comps: {(lpath, rpath): GradedMap}, the component on
    [left legs] (x) span(lpath[-1], rpath[0]) (x) [right legs], degree +1
    into span(lpath[0], rpath[-1]).  The pair of one-object paths keys the
    differential of the span.
    """

    def __init__(self, left, right, spans, comps, bound=None, exact=True):
        if left.ring != right.ring:
            raise ValueError("left and right categories use different rings")
        self.ring = left.ring
        self.left = left
        self.right = right
        self.spans = {tuple(p): sp for p, sp in spans.items()
                      if not sp.is_zero()}
        self.comps = {}
        for key, f in comps.items():
            lpath, rpath = tuple(key[0]), tuple(key[1])
            if f.degree != 1:
                raise ValueError("component on %r has degree %d"
                                 % ((lpath, rpath), f.degree))
            if f.source != self.source_space(lpath, rpath):
                raise ValueError("component on %r has wrong source"
                                 % ((lpath, rpath),))
            if f.target != self.span(lpath[0], rpath[-1]):
                raise ValueError("component on %r has wrong target"
                                 % ((lpath, rpath),))
            if not f.is_zero():
                self.comps[(lpath, rpath)] = f
        inferred = max((len(lp) + len(rp) - 2 for lp, rp in self.comps),
                       default=0)
        self.bound = bound if bound is not None else inferred
        self.exact = exact

    def span(self, x, y):
        if (x, y) in self.spans:
            return self.spans[(x, y)]
        return GradedSpace(self.ring, {})

    def source_space(self, lpath, rpath):
        facs = [self.left.shom(lpath[i], lpath[i + 1])
                for i in range(len(lpath) - 1)]
        facs.append(self.span(lpath[-1], rpath[0]))
        facs += [self.right.shom(rpath[j], rpath[j + 1])
                 for j in range(len(rpath) - 1)]
        return tensor_space(facs, ring=self.ring)

    def b_opt(self, lpath, rpath):
        return self.comps.get((tuple(lpath), tuple(rpath)))

    def b_for(self, lpath, rpath):
        f = self.b_opt(lpath, rpath)
        if f is not None:
            return f
        return GradedMap.zero(self.source_space(lpath, rpath),
                              self.span(lpath[0], rpath[-1]), 1)

    def b00(self, x, y):
        return self.b_for((x,), (y,))

    def complex(self, x, y):
        return Complex(self.span(x, y), self.b00(x, y), check=False)

    def value(self, x, y):
        """The span rewritten one shift down, as the functor sees it."""
        sp = self.span(x, y)
        vs = shift_space(sp, -1)
        s = shift_iso(vs, 1)
        return Complex(vs, compose(s, self.b00(x, y), s.inverse()),
                       check=False)

    def flat_bound(self):
        arities = max(self.left.max_arity, self.right.max_arity, 1)
        return max(2 * self.bound, self.bound + arities - 1)

    def __eq__(self, other):
        return (isinstance(other, Bimodule)
                and self.left == other.left and self.right == other.right
                and self.spans == other.spans and self.comps == other.comps)


def _framed_sum(P, lpath, rpath, inner_of, outer_of, target, out_degree):
    """sum over frames m, c of (1^m (x) inner (x) 1^c) then outer."""
    k, n = len(lpath) - 1, len(rpath) - 1
    total = GradedMap.zero(P.source_space(lpath, rpath), target, out_degree)
    for m in range(k + 1):
        for c in range(n + 1):
            inner = inner_of(lpath[m:], rpath[:n - c + 1])
            if inner is None:
                continue
            outer = outer_of(lpath[:m + 1], rpath[n - c:])
            if outer is None:
                continue
            lid = GradedMap.identity(_legs_space(P.left, lpath[:m + 1]))
            rid = GradedMap.identity(_legs_space(P.right, rpath[n - c:]))
            total = total + compose(tensor_map(lid, inner, rid), outer)
    return total


def _leg_contractions(P, lpath, rpath, comps_of, target, out_degree):
    """Category operations eat runs of legs; the outer component follows."""
    k, n = len(lpath) - 1, len(rpath) - 1
    total = GradedMap.zero(P.source_space(lpath, rpath), target, out_degree)
    for j in range(1, min(P.left.max_arity, k) + 1):
        for a in range(k - j + 1):
            inner = P.left.b_opt(lpath[a:a + j + 1])
            if inner is None:
                continue
            outer = comps_of(lpath[:a + 1] + lpath[a + j:], rpath)
            if outer is None:
                continue
            pre = GradedMap.identity(_legs_space(P.left, lpath[:a + 1]))
            rest = [P.left.shom(lpath[i], lpath[i + 1])
                    for i in range(a + j, k)]
            rest.append(P.span(lpath[-1], rpath[0]))
            rest += [P.right.shom(rpath[i], rpath[i + 1]) for i in range(n)]
            post = GradedMap.identity(tensor_space(rest, ring=P.ring))
            total = total + compose(tensor_map(pre, inner, post), outer)
    for j in range(1, min(P.right.max_arity, n) + 1):
        for a in range(n - j + 1):
            inner = P.right.b_opt(rpath[a:a + j + 1])
            if inner is None:
                continue
            outer = comps_of(lpath, rpath[:a + 1] + rpath[a + j:])
            if outer is None:
                continue
            rest = [P.left.shom(lpath[i], lpath[i + 1]) for i in range(k)]
            rest.append(P.span(lpath[-1], rpath[0]))
            rest += [P.right.shom(rpath[i], rpath[i + 1]) for i in range(a)]
            pre = GradedMap.identity(tensor_space(rest, ring=P.ring))
            post = GradedMap.identity(_legs_space(P.right, rpath[a + j:]))
            total = total + compose(tensor_map(pre, inner, post), outer)
    return total


def flat_defect(P, lpath, rpath):
    """The square-zero defect of the action on one pair of paths."""
    target = P.span(lpath[0], rpath[-1])
    return (_framed_sum(P, lpath, rpath, P.b_opt, P.b_opt, target, 2)
            + _leg_contractions(P, lpath, rpath, P.b_opt, target, 2))


def _key_pairs(P, bound):
    for total in range(bound + 1):
        for k in range(total + 1):
            for lpath in P.left.paths(k):
                for rpath in P.right.paths(total - k):
                    if not P.span(lpath[-1], rpath[0]).is_zero():
                        yield lpath, rpath


def check_flat(P, max_total=None, cross_check=False):
    """Verify the flatness identities on every pair of paths up to a total
    leg bound; cross_check compares against the matrix-coefficient route."""
    bound = P.flat_bound() if max_total is None else max_total
    checked, failures = 0, []
    for lpath, rpath in _key_pairs(P, bound):
        checked += 1
        defect = flat_defect(P, lpath, rpath)
        if cross_check:
            other = block_square_defects(P, lpath, rpath).get(
                ((lpath[0],), (rpath[-1],)))
            agree = defect.is_zero() if other is None else defect == other
            if not agree:
                raise AssertionError("flatness routes disagree on %r"
                                     % ((lpath, rpath),))
        if not defect.is_zero():
            failures.append((lpath, rpath))
    return StasheffReport(not failures, checked, failures, bound, P.exact)


# ---------------------------------------------------------------------------
# flatness, matrix-coefficient route


def connection_blocks(P, lpath, rpath):
    """All matrix coefficients of the framed differential out of one key.

    Returns {(out_lpath, out_rpath): GradedMap}; middle insertions keep a
    frame of untouched legs in the output, leg insertions keep everything
    else.  Coefficients landing on the same key are accumulated.
    """
    k, n = len(lpath) - 1, len(rpath) - 1
    blocks = {}

    def shed(key, f):
        blocks[key] = blocks[key] + f if key in blocks else f

    for m in range(k + 1):
        for c in range(n + 1):
            inner = P.b_opt(lpath[m:], rpath[:n - c + 1])
            if inner is None:
                continue
            lid = GradedMap.identity(_legs_space(P.left, lpath[:m + 1]))
            rid = GradedMap.identity(_legs_space(P.right, rpath[n - c:]))
            shed((lpath[:m + 1], rpath[n - c:]), tensor_map(lid, inner, rid))
    for j in range(1, min(P.left.max_arity, k) + 1):
        for a in range(k - j + 1):
            inner = P.left.b_opt(lpath[a:a + j + 1])
            if inner is None:
                continue
            pre = GradedMap.identity(_legs_space(P.left, lpath[:a + 1]))
            rest = [P.left.shom(lpath[i], lpath[i + 1])
                    for i in range(a + j, k)]
            rest.append(P.span(lpath[-1], rpath[0]))
            rest += [P.right.shom(rpath[i], rpath[i + 1]) for i in range(n)]
            post = GradedMap.identity(tensor_space(rest, ring=P.ring))
            shed((lpath[:a + 1] + lpath[a + j:], rpath),
                 tensor_map(pre, inner, post))
    for j in range(1, min(P.right.max_arity, n) + 1):
        for a in range(n - j + 1):
            inner = P.right.b_opt(rpath[a:a + j + 1])
            if inner is None:
                continue
            rest = [P.left.shom(lpath[i], lpath[i + 1]) for i in range(k)]
            rest.append(P.span(lpath[-1], rpath[0]))
            rest += [P.right.shom(rpath[i], rpath[i + 1]) for i in range(a)]
            pre = GradedMap.identity(tensor_space(rest, ring=P.ring))
            post = GradedMap.identity(_legs_space(P.right, rpath[a + j:]))
            shed((lpath, rpath[:a + 1] + rpath[a + j:]),
                 tensor_map(pre, inner, post))
    return blocks


def block_square_defects(P, lpath, rpath):
    """Square of the framed differential, one block per final key."""
    out = {}
    for key1, f in connection_blocks(P, lpath, rpath).items():
        for key2, g in connection_blocks(P, key1[0], key1[1]).items():
            h = f.then(g)
            out[key2] = out[key2] + h if key2 in out else h
    return out


def check_flat_blocks(P, max_total=None):
    """Flatness by squaring matrix coefficients; independent of flat_defect."""
    bound = P.flat_bound() if max_total is None else max_total
    checked, failures = 0, []
    for lpath, rpath in _key_pairs(P, bound):
        checked += 1
        for key, f in block_square_defects(P, lpath, rpath).items():
            if not f.is_zero():
                failures.append(((lpath, rpath), key))
    return StasheffReport(not failures, checked, failures, bound, P.exact)


# ---------------------------------------------------------------------------
# morphisms of bimodules


class BicomoduleHom:
    """Morphism of bimodules over a fixed pair of categories.

    comps are keyed like bimodule components; the piece on (lpath, rpath)
    maps the source bimodule's framed tensor into the target's span and all
    pieces share one degree.
    """

    def __init__(self, source, target, degree, comps):
        if source.left != target.left or source.right != target.right:
            raise ValueError("morphism needs bimodules over the same pair")
        self.source = source
        self.target = target
        self.degree = degree
        self.comps = {}
        for key, f in comps.items():
            lpath, rpath = tuple(key[0]), tuple(key[1])
            if f.degree != degree:
                raise ValueError("component degree %d, expected %d"
                                 % (f.degree, degree))
            if f.source != source.source_space(lpath, rpath):
                raise ValueError("component on %r has wrong source"
                                 % ((lpath, rpath),))
            if f.target != target.span(lpath[0], rpath[-1]):
                raise ValueError("component on %r has wrong target"
                                 % ((lpath, rpath),))
            if not f.is_zero():
                self.comps[(lpath, rpath)] = f
        self.max_total = max((len(lp) + len(rp) - 2 for lp, rp in self.comps),
                             default=0)

    def component(self, lpath, rpath):
        return self.comps.get((tuple(lpath), tuple(rpath)))

    def comp_for(self, lpath, rpath):
        f = self.component(lpath, rpath)
        if f is not None:
            return f
        return GradedMap.zero(self.source.source_space(lpath, rpath),
                              self.target.span(lpath[0], rpath[-1]),
                              self.degree)

    def is_zero(self):
        return not self.comps

    def __add__(self, other):
        keys = set(self.comps) | set(other.comps)
        return BicomoduleHom(self.source, self.target, self.degree,
                             {key: self.comp_for(*key) + other.comp_for(*key)
                              for key in keys})

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return BicomoduleHom(self.source, self.target, self.degree,
                             {key: f.scale(c) for key, f in self.comps.items()})

    def __eq__(self, other):
        return (isinstance(other, BicomoduleHom)
                and self.source == other.source and self.target == other.target
                and self.degree == other.degree and self.comps == other.comps)


def identity_bimodule_hom(P):
    comps = {((x,), (y,)): GradedMap.identity(sp)
             for (x, y), sp in P.spans.items()}
    return BicomoduleHom(P, P, 0, comps)


def bimodule_hom_differential(t, max_total=None):
    """d t = (t then b) - (-1)^{|t|} (b then t) on framed tensors."""
    P, Q = t.source, t.target
    if max_total is None:
        max_total = t.max_total + max(P.bound, Q.bound,
                                      P.left.max_arity - 1,
                                      P.right.max_arity - 1, 1)
    sgn = -1 if t.degree % 2 else 1
    comps = {}
    for lpath, rpath in _key_pairs(P, max_total):
        tgt = Q.span(lpath[0], rpath[-1])
        post = _framed_sum(P, lpath, rpath, t.component, Q.b_opt,
                           tgt, t.degree + 1)
        pre = _framed_sum(P, lpath, rpath, P.b_opt, t.component,
                          tgt, t.degree + 1)
        legs = _leg_contractions(P, lpath, rpath, t.component,
                                 tgt, t.degree + 1)
        comps[(lpath, rpath)] = post - (pre + legs).scale(sgn)
    return BicomoduleHom(P, Q, t.degree + 1, comps)


def compose_bimodule_homs(t, u, max_total=None):
    """Left-to-right composite: frames of t feed components of u."""
    if t.target != u.source:
        raise ValueError("composition mismatch")
    P, R = t.source, u.target
    if max_total is None:
        max_total = t.max_total + u.max_total
    comps = {}
    for lpath, rpath in _key_pairs(P, max_total):
        comps[(lpath, rpath)] = _framed_sum(
            P, lpath, rpath, t.component, u.component,
            R.span(lpath[0], rpath[-1]), t.degree + u.degree)
    return BicomoduleHom(P, R, t.degree + u.degree, comps)


def expand_matrix_coefficients(t, lpath, rpath, m, n):
    """The framed matrix coefficient of t out of (lpath, rpath) that keeps
    the first m left legs and the last n right legs untouched."""
    k, l = len(lpath) - 1, len(rpath) - 1
    if m > k or n > l:
        raise ValueError("frame is larger than the key")
    inner = t.comp_for(lpath[m:], rpath[:l - n + 1])
    lid = GradedMap.identity(_legs_space(t.source.left, lpath[:m + 1]))
    rid = GradedMap.identity(_legs_space(t.source.right, rpath[l - n:]))
    return tensor_map(lid, inner, rid)


# ---------------------------------------------------------------------------
# hom-like two-variable functors


class TwoFunctor:
    """Two-variable functor into complexes, contravariant in the left
    category and covariant in the right one.

    values: {(x, y): Complex}.  comps: {(lop, rp): GradedMap} with lop a
    path in the opposite of the left category, rp a path in the right one,
    at least one leg in total; the component has degree 0 and lands in the
    suspended inner hom from value(lop[0], rp[0]) to value(lop[-1], rp[-1]).
    """

    def __init__(self, left, right, values, comps, bound=None, exact=True):
        if left.ring != right.ring:
            raise ValueError("left and right categories use different rings")
        self.ring = left.ring
        self.left = left
        self.right = right
        self.leftop = opposite_category(left)
        self.values = {tuple(p): v for p, v in values.items()}
        self.comps = {}
        for key, f in comps.items():
            lop, rp = tuple(key[0]), tuple(key[1])
            if len(lop) + len(rp) == 2:
                raise ValueError("no components on a pair of single objects")
            if f.degree != 0:
                raise ValueError("component on %r has degree %d"
                                 % ((lop, rp), f.degree))
            if f.source != _pair_space(self.leftop, right, lop, rp):
                raise ValueError("component on %r has wrong source"
                                 % ((lop, rp),))
            if f.target != _sus_hom(self.value(lop[0], rp[0]),
                                    self.value(lop[-1], rp[-1])):
                raise ValueError("component on %r has wrong target"
                                 % ((lop, rp),))
            if not f.is_zero():
                self.comps[(lop, rp)] = f
        inferred = max((len(lop) + len(rp) - 2 for lop, rp in self.comps),
                       default=0)
        self.bound = bound if bound is not None else inferred
        self.exact = exact

    def value(self, x, y):
        if (x, y) in self.values:
            return self.values[(x, y)]
        return Complex.with_zero_d(GradedSpace(self.ring, {}))

    def component(self, lop, rp):
        return self.comps.get((tuple(lop), tuple(rp)))

    def flat_bound(self):
        arities = max(self.left.max_arity, self.right.max_arity, 1)
        return max(2 * self.bound, self.bound + arities - 1)

    def __eq__(self, other):
        return (isinstance(other, TwoFunctor)
                and self.left == other.left and self.right == other.right
                and self.values == other.values and self.comps == other.comps)


def _staircase(phi, lop, rp, k1, n1):
    """Regroup [lop legs][rp legs] into the two split pair spaces."""
    k, n = len(lop) - 1, len(rp) - 1
    src = _pair_space(phi.leftop, phi.right, lop, rp)
    perm = [i if i < k1 else n1 + i for i in range(k)]
    perm += [k1 + j if j < n1 else k + j for j in range(n)]
    if len(perm) <= 1:
        return GradedMap.identity(src)
    return signed_permutation(src, perm)


def _pair_contractions(leftop, right, lop, rp, comps_of, target, out_degree):
    """Insertions of both categories' operations into a leg pair."""
    k, n = len(lop) - 1, len(rp) - 1
    src = _pair_space(leftop, right, lop, rp)
    total = GradedMap.zero(src, target, out_degree)
    for j in range(1, min(leftop.max_arity, k) + 1):
        for a in range(k - j + 1):
            inner = leftop.b_opt(lop[a:a + j + 1])
            if inner is None:
                continue
            outer = comps_of(lop[:a + 1] + lop[a + j:], rp)
            if outer is None:
                continue
            pre = GradedMap.identity(_legs_space(leftop, lop[:a + 1]))
            rest = [leftop.shom(lop[i], lop[i + 1]) for i in range(a + j, k)]
            rest += [right.shom(rp[i], rp[i + 1]) for i in range(n)]
            post = GradedMap.identity(tensor_space(rest, ring=right.ring))
            total = total + compose(tensor_map(pre, inner, post), outer)
    for j in range(1, min(right.max_arity, n) + 1):
        for a in range(n - j + 1):
            inner = right.b_opt(rp[a:a + j + 1])
            if inner is None:
                continue
            outer = comps_of(lop, rp[:a + 1] + rp[a + j:])
            if outer is None:
                continue
            rest = [leftop.shom(lop[i], lop[i + 1]) for i in range(k)]
            rest += [right.shom(rp[i], rp[i + 1]) for i in range(a)]
            pre = GradedMap.identity(tensor_space(rest, ring=right.ring))
            post = GradedMap.identity(_legs_space(right, rp[a + j:]))
            total = total + compose(tensor_map(pre, inner, post), outer)
    return total


def two_functor_defect(phi, lop, rp):
    """Insertion side minus composition side of the functor equations."""
    k, n = len(lop) - 1, len(rp) - 1
    tgt = _sus_hom(phi.value(lop[0], rp[0]), phi.value(lop[-1], rp[-1]))
    ins = _pair_contractions(phi.leftop, phi.right, lop, rp,
                             phi.component, tgt, 1)
    src = _pair_space(phi.leftop, phi.right, lop, rp)
    comp = GradedMap.zero(src, tgt, 1)
    c = phi.component(lop, rp)
    if c is not None:
        comp = comp + c.then(_sus_b1(phi.value(lop[0], rp[0]),
                                     phi.value(lop[-1], rp[-1])))
    for k1 in range(k + 1):
        for n1 in range(n + 1):
            if (k1, n1) in ((0, 0), (k, n)):
                continue
            c1 = phi.component(lop[:k1 + 1], rp[:n1 + 1])
            c2 = phi.component(lop[k1:], rp[n1:])
            if c1 is None or c2 is None:
                continue
            b2 = _sus_b2(phi.value(lop[0], rp[0]), phi.value(lop[k1], rp[n1]),
                         phi.value(lop[-1], rp[-1]))
            comp = comp + compose(_staircase(phi, lop, rp, k1, n1),
                                  tensor_map(c1, c2), b2)
    return ins - comp


def _two_keys(phi, bound, include_00=False):
    for total in range(0 if include_00 else 1, bound + 1):
        for k in range(total + 1):
            for lop in phi.leftop.paths(k):
                for rp in phi.right.paths(total - k):
                    yield lop, rp


def check_two_functor(phi, max_total=None):
    """The two-variable functor equations on every key up to a leg bound."""
    bound = phi.flat_bound() if max_total is None else max_total
    checked, failures = 0, []
    for lop, rp in _two_keys(phi, bound):
        if _pair_space(phi.leftop, phi.right, lop, rp).is_zero():
            continue
        checked += 1
        if not two_functor_defect(phi, lop, rp).is_zero():
            failures.append((lop, rp))
    return StasheffReport(not failures, checked, failures, bound, phi.exact)


# ---------------------------------------------------------------------------
# the dictionary between the two presentations


def _curry_out(left, right, lpath, rpath, span0, span1, inner):
    """Package a framed component as a suspended-hom valued one: reverse
    the left legs, move the middle out by coevaluation, shift down."""
    k, n = len(lpath) - 1, len(rpath) - 1
    ring = right.ring
    rfacs = tensor_space([right.shom(rpath[j], rpath[j + 1])
                          for j in range(n)], ring=ring)
    if k:
        g = gamma(left, tuple(reversed(lpath))).map
        rev = tensor_map(g, GradedMap.identity(rfacs)) if n else g
    else:
        rev = GradedMap.identity(rfacs)
    tall = rev.target
    pair = tensor_space([span0, tall])
    perm = [k] + list(range(k)) + list(range(k + 1, k + 1 + n))
    move = (signed_permutation(pair, perm) if len(perm) > 1
            else GradedMap.identity(pair))
    v0, v1 = shift_space(span0, -1), shift_space(span1, -1)
    return compose(rev, coev_map(span0, tall),
                   hom_post(hom_space(span0, pair), move.then(inner)),
                   _hom_shift(hom_space(span0, span1), -1),
                   shift_iso(hom_space(v0, v1), 1))


def _plug_in(left, right, lop, rp, V0, V1, c):
    """Evaluate a suspended-hom valued component against the middle slot."""
    k, n = len(lop) - 1, len(rp) - 1
    lpath = tuple(reversed(lop))
    ring = right.ring
    span0, span1 = shift_space(V0.space, 1), shift_space(V1.space, 1)
    facs = [left.shom(lpath[i], lpath[i + 1]) for i in range(k)]
    facs.append(span0)
    facs += [right.shom(rp[j], rp[j + 1]) for j in range(n)]
    src = tensor_space(facs, ring=ring)
    perm = [k - i for i in range(k + 1)] + [k + 1 + j for j in range(n)]
    rev = (signed_permutation(src, perm) if len(perm) > 1
           else GradedMap.identity(src))
    if k % 2:
        rev = rev.scale(-1)
    hsv = hom_space(V0.space, V1.space)
    unpack = compose(shift_iso(hsv, 1).inverse(), _hom_shift(hsv, 1))
    return compose(rev,
                   tensor_map(GradedMap.identity(span0), c.then(unpack)),
                   ev_map(hom_space(span0, span1)))


def functor_from_bimodule(P):
    """Repackage a bimodule as a hom-like two-variable functor."""
    values = {(x, y): P.value(x, y)
              for x in P.left.objects for y in P.right.objects}
    comps = {}
    for (lpath, rpath), b in P.comps.items():
        if len(lpath) + len(rpath) == 2:
            continue
        span0 = P.span(lpath[-1], rpath[0])
        span1 = P.span(lpath[0], rpath[-1])
        comps[(tuple(reversed(lpath)), rpath)] = _curry_out(
            P.left, P.right, lpath, rpath, span0, span1, b)
    return TwoFunctor(P.left, P.right, values, comps,
                      bound=P.bound, exact=P.exact)


def bimodule_from_functor(phi):
    """Unpack a hom-like functor into framed bimodule components."""
    spans, comps = {}, {}
    for x in phi.left.objects:
        for y in phi.right.objects:
            V = phi.value(x, y)
            sp = shift_space(V.space, 1)
            spans[(x, y)] = sp
            if sp.is_zero():
                continue
            s = shift_iso(V.space, 1)
            b00 = compose(s.inverse(), V.d, s)
            if not b00.is_zero():
                comps[((x,), (y,))] = b00
    for (lop, rp), c in phi.comps.items():
        comps[(tuple(reversed(lop)), rp)] = _plug_in(
            phi.left, phi.right, lop, rp,
            phi.value(lop[0], rp[0]), phi.value(lop[-1], rp[-1]), c)
    return Bimodule(phi.left, phi.right, spans, comps,
                    bound=phi.bound, exact=phi.exact)


class TwoTransformation:
    """Transformation between hom-like functors of one degree; keys are the
    functor keys plus the pair of single objects, whose source is the unit."""

    def __init__(self, phi, psi, degree, comps):
        if phi.left != psi.left or phi.right != psi.right:
            raise ValueError("transformation needs functors over one pair")
        self.source_functor = phi
        self.target_functor = psi
        self.degree = degree
        self.comps = {}
        for key, f in comps.items():
            lop, rp = tuple(key[0]), tuple(key[1])
            if f.degree != degree:
                raise ValueError("component degree %d, expected %d"
                                 % (f.degree, degree))
            if f.source != _pair_space(phi.leftop, phi.right, lop, rp):
                raise ValueError("component on %r has wrong source"
                                 % ((lop, rp),))
            if f.target != _sus_hom(phi.value(lop[0], rp[0]),
                                    psi.value(lop[-1], rp[-1])):
                raise ValueError("component on %r has wrong target"
                                 % ((lop, rp),))
            if not f.is_zero():
                self.comps[(lop, rp)] = f
        self.max_total = max((len(lop) + len(rp) - 2 for lop, rp in self.comps),
                             default=0)

    def component(self, lop, rp):
        return self.comps.get((tuple(lop), tuple(rp)))

    def is_zero(self):
        return not self.comps

    def __add__(self, other):
        keys = set(self.comps) | set(other.comps)
        out = {}
        for key in keys:
            a, b = self.component(*key), other.component(*key)
            out[key] = b if a is None else (a if b is None else a + b)
        return TwoTransformation(self.source_functor, self.target_functor,
                                 self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TwoTransformation(self.source_functor, self.target_functor,
                                 self.degree,
                                 {key: f.scale(c)
                                  for key, f in self.comps.items()})

    def __eq__(self, other):
        return (isinstance(other, TwoTransformation)
                and self.source_functor == other.source_functor
                and self.target_functor == other.target_functor
                and self.degree == other.degree and self.comps == other.comps)


def unit_two_transformation(phi):
    """Degree -1 transformation with the identity elements as its
    single-object parts."""
    comps = {}
    for x in phi.left.objects:
        for y in phi.right.objects:
            V = phi.value(x, y)
            hsv = hom_space(V.space, V.space)
            if hsv.is_zero():
                continue
            comps[((x,), (y,))] = hom_element(
                hsv, GradedMap.identity(V.space)).then(shift_iso(hsv, 1))
    return TwoTransformation(phi, phi, -1, comps)


def two_transformation_differential(r, upto=None):
    """Slot r into composites with both functors, minus the insertion side;
    same sign placement as for one-variable transformations."""
    phi, psi = r.source_functor, r.target_functor
    if upto is None:
        upto = r.max_total + max(phi.bound, psi.bound,
                                 phi.left.max_arity - 1,
                                 phi.right.max_arity - 1, 1)
    sgn = -1 if r.degree % 2 else 1
    comps = {}
    for lop, rp in _two_keys(phi, upto, include_00=True):
        k, n = len(lop) - 1, len(rp) - 1
        tgt = _sus_hom(phi.value(lop[0], rp[0]), psi.value(lop[-1], rp[-1]))
        src = _pair_space(phi.leftop, phi.right, lop, rp)
        total = GradedMap.zero(src, tgt, r.degree + 1)
        c = r.component(lop, rp)
        if c is not None:
            total = total + c.then(_sus_b1(phi.value(lop[0], rp[0]),
                                           psi.value(lop[-1], rp[-1])))
        for k1 in range(k + 1):
            for n1 in range(n + 1):
                mid_phi = phi.value(lop[k1], rp[n1])
                mid_psi = psi.value(lop[k1], rp[n1])
                if (k1, n1) != (0, 0):
                    c1 = phi.component(lop[:k1 + 1], rp[:n1 + 1])
                    c2 = r.component(lop[k1:], rp[n1:])
                    if c1 is not None and c2 is not None:
                        b2 = _sus_b2(phi.value(lop[0], rp[0]), mid_phi,
                                     psi.value(lop[-1], rp[-1]))
                        total = total + compose(
                            _staircase(phi, lop, rp, k1, n1),
                            tensor_map(c1, c2), b2)
                if (k1, n1) != (k, n):
                    c1 = r.component(lop[:k1 + 1], rp[:n1 + 1])
                    c2 = psi.component(lop[k1:], rp[n1:])
                    if c1 is not None and c2 is not None:
                        b2 = _sus_b2(phi.value(lop[0], rp[0]), mid_psi,
                                     psi.value(lop[-1], rp[-1]))
                        total = total + compose(
                            _staircase(phi, lop, rp, k1, n1),
                            tensor_map(c1, c2), b2)
        ins = _pair_contractions(phi.leftop, phi.right, lop, rp,
                                 r.component, tgt, r.degree + 1)
        comps[(lop, rp)] = total - ins.scale(sgn)
    return TwoTransformation(phi, psi, r.degree + 1, comps)


def two_transformation_b2(r, q, upto=None):
    """The binary composite of two transformations, all staircase splits."""
    phi = r.source_functor
    psi = q.target_functor
    if r.target_functor != q.source_functor:
        raise ValueError("composition mismatch")
    if upto is None:
        upto = r.max_total + q.max_total
    comps = {}
    for lop, rp in _two_keys(phi, upto, include_00=True):
        k, n = len(lop) - 1, len(rp) - 1
        tgt = _sus_hom(phi.value(lop[0], rp[0]), psi.value(lop[-1], rp[-1]))
        src = _pair_space(phi.leftop, phi.right, lop, rp)
        total = GradedMap.zero(src, tgt, r.degree + q.degree + 1)
        for k1 in range(k + 1):
            for n1 in range(n + 1):
                c1 = r.component(lop[:k1 + 1], rp[:n1 + 1])
                c2 = q.component(lop[k1:], rp[n1:])
                if c1 is None or c2 is None:
                    continue
                b2 = _sus_b2(phi.value(lop[0], rp[0]),
                             r.target_functor.value(lop[k1], rp[n1]),
                             psi.value(lop[-1], rp[-1]))
                total = total + compose(_staircase(phi, lop, rp, k1, n1),
                                        tensor_map(c1, c2), b2)
        comps[(lop, rp)] = total
    return TwoTransformation(phi, psi, r.degree + q.degree + 1, comps)


def phi_iso(t):
    """Repackage a bimodule morphism as a transformation of the associated
    functors; inverse of phi_inverse."""
    phi = functor_from_bimodule(t.source)
    psi = functor_from_bimodule(t.target)
    sgn = -1 if t.degree % 2 else 1
    comps = {}
    for (lpath, rpath), c in t.comps.items():
        span0 = t.source.span(lpath[-1], rpath[0])
        span1 = t.target.span(lpath[0], rpath[-1])
        comps[(tuple(reversed(lpath)), rpath)] = _curry_out(
            t.source.left, t.source.right, lpath, rpath,
            span0, span1, c).scale(sgn)
    return TwoTransformation(phi, psi, t.degree - 1, comps)


def phi_inverse(r):
    """Repackage a transformation of hom-like functors as a bimodule
    morphism of one degree higher."""
    phi, psi = r.source_functor, r.target_functor
    P = bimodule_from_functor(phi)
    Q = bimodule_from_functor(psi)
    g = r.degree + 1
    sgn = -1 if g % 2 else 1
    comps = {}
    for (lop, rp), c in r.comps.items():
        comps[(tuple(reversed(lop)), rp)] = _plug_in(
            phi.left, phi.right, lop, rp,
            phi.value(lop[0], rp[0]), psi.value(lop[-1], rp[-1]),
            c).scale(sgn)
    return BicomoduleHom(P, Q, g, comps)


def _transformation_value_map(r, x, y):
    """The plain chain-level map between values at one pair of objects."""
    V = r.source_functor.value(x, y)
    W = r.target_functor.value(x, y)
    hs = hom_space(V.space, W.space)
    c = r.component((x,), (y,))
    if c is None:
        return GradedMap.zero(V.space, W.space, r.degree + 1)
    elem = c.then(shift_iso(hs, 1).inverse())
    _, vec = elem.apply(0, [r.source_functor.ring.one])
    return hom_to_map(hs, r.degree + 1, vec)


def _iso_on_homology(f, hX, hY):
    ind = induced_map(hX, hY, f)
    for d in set(hX.space.degrees()) | set(hY.space.degrees()):
        if hX.space.dim(d) != hY.space.dim(d):
            return False
        if rank(ind.block(d)) != hX.space.dim(d):
            return False
    return True


def two_transformation_invertible(r, upto=None):
    """Closed, and an isomorphism on the homology of every value."""
    if not two_transformation_differential(r, upto=upto).is_zero():
        return False
    phi = r.source_functor
    for x in phi.left.objects:
        for y in phi.right.objects:
            V, W = phi.value(x, y), r.target_functor.value(x, y)
            f = _transformation_value_map(r, x, y)
            if not is_chain_map(f, V.d, W.d):
                return False
            if not _iso_on_homology(f, homology(V), homology(W)):
                return False
    return True


def _functor_splittings(F, path):
    """Yield (component maps, image path) over all ways to split a path."""
    if len(path) == 1:
        yield [], (F.obj(path[0]),)
        return
    for sizes in compositions(len(path) - 1):
        maps, img, pos, ok = [], [F.obj(path[0])], 0, True
        for s in sizes:
            c = F.component(path[pos:pos + s + 1])
            if c is None:
                ok = False
                break
            maps.append(c)
            pos += s
            img.append(F.obj(path[pos]))
        if ok:
            yield maps, tuple(img)


def precompose_two_functor(phi, f, g):
    """The functor (x, y) -> phi(f x, g y) for functors f and g into the
    left and right base categories."""
    if f.target != phi.left or g.target != phi.right:
        raise ValueError("functors do not land in the base categories")
    fop = opposite_functor(f)
    values = {(x, y): phi.value(f.obj(x), g.obj(y))
              for x in f.source.objects for y in g.source.objects}
    bound = phi.bound * max(f.max_arity, g.max_arity, 1)
    comps = {}
    helper = TwoFunctor(f.source, g.source, values, {}, bound=bound)
    for lop, rp in _two_keys(helper, bound):
        src = _pair_space(helper.leftop, g.source, lop, rp)
        tgt = _sus_hom(values[(lop[0], rp[0])], values[(lop[-1], rp[-1])])
        total = GradedMap.zero(src, tgt, 0)
        for lmaps, limg in _functor_splittings(fop, lop):
            for rmaps, rimg in _functor_splittings(g, rp):
                if not lmaps and not rmaps:
                    continue
                outer = phi.component(limg, rimg)
                if outer is None:
                    continue
                total = total + compose(tensor_map(*(lmaps + rmaps)), outer)
        if not total.is_zero():
            comps[(lop, rp)] = total
    return TwoFunctor(f.source, g.source, values, comps,
                      bound=bound, exact=phi.exact and f.source.exact)


# ---------------------------------------------------------------------------
# named bimodules and their relatives


def regular_bimodule(A):
    """The category as a bimodule over itself: every operation acts with
    the middle slot at each possible position."""
    comps = {}
    for path, b in A.ops.items():
        for i in range(len(path) - 1):
            comps[(path[:i + 1], path[i + 1:])] = b
    return Bimodule(A, A, dict(A.shoms), comps,
                    bound=max(A.max_arity - 1, 0), exact=A.exact)


def hom_functor(A):
    """The two-variable hom functor of a category."""
    return functor_from_bimodule(regular_bimodule(A))


def two_functor_universe(phi):
    """The dg category of the functor's value complexes, labeled by the
    object pairs."""
    pairs = [(x, y) for x in phi.left.objects for y in phi.right.objects]
    return dg_complexes_category(phi.ring, [phi.value(*p) for p in pairs],
                                 labels=pairs)


def representable(A, z, phi=None, universe=None):
    """The hom-into-z functor on the opposite category, valued in the dg
    category of hom complexes."""
    if phi is None:
        phi = hom_functor(A)
    if universe is None:
        universe = two_functor_universe(phi)
    comps = {lop: c for (lop, rp), c in phi.comps.items() if rp == (z,)}
    return AInfFunctor(phi.leftop, universe, {x: (x, z) for x in A.objects},
                       comps, max_arity=max(phi.bound, 1))


def _insertion_transformation(phi, reps, path, d, vec):
    """Feed a fixed right-path element into the hom functor; the result is
    a transformation between the representables at the endpoints."""
    A = phi.left
    psp = A.path_space(path)
    elt = element_map(psp, d, vec)
    comps = {}
    for k in range(max(phi.bound - len(path) + 2, 1)):
        for lop in phi.leftop.paths(k):
            c = phi.component(lop, path)
            if c is None:
                continue
            lsp = phi.leftop.path_space(lop)
            comps[lop] = compose(
                tensor_map(GradedMap.identity(lsp), elt), c)
    return AInfTransformation(reps[path[0]], reps[path[-1]], d, comps)


def yoneda(A, bound=None):
    """The functor from a category into the dg category of transformations
    between its representables.  Returns (functor, category, spaces)."""
    phi = hom_functor(A)
    if bound is None:
        bound = max(phi.bound, 1)
    universe = two_functor_universe(phi)
    reps = {z: representable(A, z, phi, universe) for z in A.objects}
    labels = list(A.objects)
    funcat, spaces = functor_category([reps[z] for z in labels], bound,
                                      labels=labels)
    ring = A.ring
    comps = {}
    for arity in range(1, A.max_arity + 1):
        for path in A.paths(arity):
            psp = A.path_space(path)
            ts = spaces[(path[0], path[-1])]
            blocks = {}
            for d in psp.degrees():
                rows = []
                for i in range(psp.dim(d)):
                    r = _insertion_transformation(
                        phi, reps, path, d, _unitvec(ring, psp.dim(d), i))
                    rows.append(ts.encode(r).block(0).data[0]
                                if not r.is_zero() else
                                [ring.zero] * ts.space.dim(d))
                blocks[d] = Matrix(ring, rows, psp.dim(d), ts.space.dim(d))
            comps[path] = GradedMap(psp, funcat.shom(path[0], path[-1]),
                                    0, blocks)
    Y = AInfFunctor(A, funcat, {z: z for z in labels}, comps,
                    max_arity=A.max_arity)
    return Y, funcat, spaces


def restrict_scalars(P, f, g):
    """Pull a bimodule back along functors into its two base categories."""
    if f.target != P.left or g.target != P.right:
        raise ValueError("functors do not land in the bimodule's categories")
    spans = {(x, y): P.span(f.obj(x), g.obj(y))
             for x in f.source.objects for y in g.source.objects}
    Q = Bimodule(f.source, g.source, spans, {}, bound=0)
    bound = P.bound * max(f.max_arity, g.max_arity, 1)
    comps = {}
    for lpath, rpath in _key_pairs(Q, bound):
        src = Q.source_space(lpath, rpath)
        tgt = Q.span(lpath[0], rpath[-1])
        total = GradedMap.zero(src, tgt, 1)
        mid = GradedMap.identity(Q.span(lpath[-1], rpath[0]))
        for lmaps, limg in _functor_splittings(f, lpath):
            for rmaps, rimg in _functor_splittings(g, rpath):
                outer = P.b_opt(limg, rimg)
                if outer is None:
                    continue
                total = total + compose(
                    tensor_map(*(lmaps + [mid] + rmaps)), outer)
        if not total.is_zero():
            comps[(lpath, rpath)] = total
    return Bimodule(f.source, g.source, spans, comps,
                    bound=bound, exact=P.exact)


def a_power_g(g):
    """The bimodule hom(-, g -) over (target of g, source of g)."""
    B = g.target
    return restrict_scalars(regular_bimodule(B), identity_functor(B), g)


def t_f(f):
    """The canonical morphism from the source's regular bimodule to the
    pullback of the target's, with the functor's own components."""
    P = regular_bimodule(f.source)
    Q = restrict_scalars(regular_bimodule(f.target), f, f)
    comps = {}
    for path, c in f.comps.items():
        for i in range(len(path) - 1):
            comps[(path[:i + 1], path[i + 1:])] = c
    return BicomoduleHom(P, Q, 0, comps)


def r_f(f):
    """t_f seen on the functor side."""
    return phi_iso(t_f(f))


def opposite_bimodule(P):
    """The same spans over the opposite pair, with factor order reversed."""
    leftop = opposite_category(P.right)
    rightop = opposite_category(P.left)
    spans = {(y, x): sp for (x, y), sp in P.spans.items()}
    comps = {}
    for (lpath, rpath), b in P.comps.items():
        k, n = len(lpath) - 1, len(rpath) - 1
        key = (tuple(reversed(rpath)), tuple(reversed(lpath)))
        facs = [leftop.shom(key[0][i], key[0][i + 1]) for i in range(n)]
        facs.append(P.span(lpath[-1], rpath[0]))
        facs += [rightop.shom(key[1][j], key[1][j + 1]) for j in range(k)]
        src = tensor_space(facs, ring=P.ring)
        perm = ([k + 1 + (n - 1 - i) for i in range(n)] + [k]
                + [k - 1 - j for j in range(k)])
        comp = (signed_permutation(src, perm) if len(perm) > 1
                else GradedMap.identity(src)).then(b)
        if (k + n) % 2:
            comp = comp.scale(-1)
        comps[key] = comp
    return Bimodule(leftop, rightop, spans, comps,
                    bound=P.bound, exact=P.exact)


def dual_bimodule(P):
    """Valuewise dual over the swapped pair; the action composes the
    functor components into the dual's inner homs."""
    left, right = P.right, P.left
    ring = P.ring
    kx = k_complex(ring)
    spans, comps = {}, {}
    for x in P.left.objects:
        for y in P.right.objects:
            D = dual_complex(P.value(x, y))
            sp = shift_space(D.space, 1)
            spans[(y, x)] = sp
            if sp.is_zero():
                continue
            s = shift_iso(D.space, 1)
            b00 = compose(s.inverse(), D.d, s)
            if not b00.is_zero():
                comps[((y,), (x,))] = b00
    phi = functor_from_bimodule(P)
    for (lop, rp), c in phi.comps.items():
        rpa = tuple(reversed(lop))
        lpc = rp
        k, n = len(lpc) - 1, len(rpa) - 1
        U = P.value(rpa[-1], lpc[0])
        V = P.value(rpa[0], lpc[-1])
        facs = [left.shom(lpc[i], lpc[i + 1]) for i in range(k)]
        facs.append(_sus_hom(V, kx))
        facs += [right.shom(rpa[j], rpa[j + 1]) for j in range(n)]
        src = tensor_space(facs, ring=ring)
        perm = [n + i for i in range(k)] + [n + k] + \
               [n - 1 - j for j in range(n)]
        mv = (signed_permutation(src, perm) if len(perm) > 1
              else GradedMap.identity(src))
        if n % 2:
            mv = mv.scale(-1)
        comp = compose(mv,
                       tensor_map(c, GradedMap.identity(_sus_hom(V, kx))),
                       _sus_b2(U, V, kx))
        comps[(lpc, rpa)] = comp
    return Bimodule(left, right, spans, comps, bound=P.bound, exact=P.exact)


def _pairing(P, x, y):
    """Evaluation of a dual middle element against a primal one."""
    V = P.value(x, y)
    hsd = hom_space(V.space, unit_space(P.ring))
    step = tensor_map(shift_iso(hsd, 1).inverse(),
                      shift_iso(V.space, 1).inverse())
    return compose(step, transposition(step.target, 0), ev_map(hsd))


def dual_pairing_defect(P, Pd, lpc, rpa):
    """How far the dual's action is from adjoint to the primal action
    under the evaluation pairing; zero on every key for a correct dual."""
    k, n = len(lpc) - 1, len(rpa) - 1
    mid_d = Pd.span(lpc[-1], rpa[0])
    mid_p = P.span(rpa[-1], lpc[0])
    facs = [P.right.shom(lpc[i], lpc[i + 1]) for i in range(k)]
    facs.append(mid_d)
    facs += [P.left.shom(rpa[j], rpa[j + 1]) for j in range(n)]
    facs.append(mid_p)
    src = tensor_space(facs, ring=P.ring)
    lhs = compose(tensor_map(Pd.b_for(lpc, rpa), GradedMap.identity(mid_p)),
                  _pairing(P, rpa[-1], lpc[0]))
    perm = [2 + n + i for i in range(k)] + [0] + \
           [1 + j for j in range(n)] + [1 + n]
    mv = signed_permutation(src, perm)
    rhs = compose(mv,
                  tensor_map(GradedMap.identity(mid_d), P.b_for(rpa, lpc)),
                  _pairing(P, rpa[0], lpc[-1]))
    return lhs + rhs


# ---------------------------------------------------------------------------
# modules as bimodules over a hom-less point


def point_category(ring):
    """One object and no homs; bimodules over (this, C) are right modules."""
    return AInfCategory(ring, ("*",), {}, {}, units={}, max_arity=1)


def module_bimodule(C, spans, comps, bound=None, exact=True):
    """A right module presented as a bimodule with a hom-less left point.

    spans: {y: GradedSpace}; comps: {rpath: GradedMap} acting on
    span(rpath[0]) (x) [legs along rpath]."""
    pt = point_category(C.ring)
    bspans = {("*", y): sp for y, sp in spans.items()}
    bcomps = {(("*",), tuple(rp)): f for rp, f in comps.items()}
    return Bimodule(pt, C, bspans, bcomps, bound=bound, exact=exact)


# ---------------------------------------------------------------------------
# unit actions


class BimoduleUnitalReport:
    """Outcome of the unit-action checks, truthy iff every unit acts as the
    identity on the homology of its span."""

    def __init__(self, ok, strict, pairs):
        self.ok = ok
        self.strict = strict
        self.pairs = pairs

    def __bool__(self):
        return self.ok


def span_unit_actions(P, x, y):
    """(left action of the unit at x, right action of the unit at y) on the
    span, with the usual suspended-unit signs."""
    sp = P.span(x, y)
    left = compose(tensor_map(P.left.unit(x), GradedMap.identity(sp)),
                   P.b_for((x, x), (y,))).scale(-1)
    right = compose(tensor_map(GradedMap.identity(sp), P.right.unit(y)),
                    P.b_for((x,), (y, y)))
    return left, right


def bimodule_unital(P):
    """Check both unit actions on every nonzero span.  Sides whose category
    has no endomorphisms at the object are vacuous."""
    ok_all, strict_all, pairs = True, True, {}
    for (x, y), sp in P.spans.items():
        cx = P.complex(x, y)
        ident = GradedMap.identity(sp)
        for side, cat, obj in (("left", P.left, x), ("right", P.right, y)):
            if cat.shom(obj, obj).is_zero():
                continue
            if side == "left":
                act = compose(tensor_map(cat.unit(obj), ident),
                              P.b_for((x, x), (y,))).scale(-1)
            else:
                act = compose(tensor_map(ident, cat.unit(obj)),
                              P.b_for((x,), (y, y)))
            if act == ident:
                pairs[(x, y, side)] = True
                continue
            strict_all = False
            good = is_chain_map(act, cx.d, cx.d)
            if good:
                h = homology(cx)
                good = induced_map(h, h, act) == GradedMap.identity(h.space)
            pairs[(x, y, side)] = good
            ok_all = ok_all and good
    return BimoduleUnitalReport(ok_all, strict_all and ok_all, pairs)


# ---------------------------------------------------------------------------
# representability on homology


def module_value_map(P, x, y, z, cycle):
    """Act with a chosen span element: the chain map hom(z, x) -> value(z, y)
    induced by a degree -1 span cycle over (x, y)."""
    A = P.left
    e = element_map(P.span(x, y), -1, cycle)
    step = compose(tensor_map(GradedMap.identity(A.shom(z, x)), e),
                   P.b_for((z, x), (y,)))
    s_in = shift_iso(A.hom(z, x), 1)
    s_out = shift_iso(shift_space(P.span(z, y), -1), 1)
    return compose(s_in, step, s_out.inverse())


def representing_object(P, y, budget=200):
    """An object x and a degree-0 homology class of value(x, y) acting as a
    homology equivalence hom(-, x) -> value(-, y), or None."""
    A = P.left
    for x in A.objects:
        V = P.value(x, y)
        h = homology(V)
        dim0 = h.space.dim(0)
        if dim0 == 0:
            cands = [[P.ring.zero] * V.space.dim(0)]
        else:
            cands = [h.section.apply(0, row)[1]
                     for row in _coeff_grid(P.ring, dim0, budget)]
        for cycle in cands:
            works = True
            for z in A.objects:
                mu = module_value_map(P, x, y, z, cycle)
                hz = A.hom_complex(z, x)
                w = P.value(z, y)
                if not is_chain_map(mu, hz.d, w.d):
                    works = False
                    break
                if not _iso_on_homology(mu, homology(hz), homology(w)):
                    works = False
                    break
            if works:
                return x, tuple(cycle)
    return None


def bimodule_representable(P, budget=200):
    """Per right object, a representing left object and acting cycle; None
    if any right object admits no representation."""
    out = {}
    for y in P.right.objects:
        hit = representing_object(P, y, budget)
        if hit is None:
            return None
        out[y] = hit
    return out
