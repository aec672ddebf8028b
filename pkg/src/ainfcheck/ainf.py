"""A-infinity categories with finitely many objects and finite exact homs.

All structure is carried by the suspended homs: an operation family b_n of
degree +1 on tensor powers of the suspended hom spaces, one graded map per
object path.  The classical operations m_n (degree 2-n on the unsuspended
homs) are related by m_n = (s (x) ... (x) s) b_n s^{-1}; both directions of
that conversion are available and every sign in them comes from the Koszul
engine, never from a hand-written formula.

Conventions: composition left-to-right, elements on the left of maps, and
the identity element of a strictly unital category suspends to a degree -1
cycle i_X with (1 (x) i)b_2 = 1 and (i (x) 1)b_2 = -1 on suspended homs.
"""

import itertools

from .core import (GradedSpace, GradedMap, Matrix, Complex, tensor_space,
                   unit_space, element_map, tensor_map, compose, shift_space,
                   shift_iso, hom_space, hom_to_map, map_to_hom,
                   direct_sum_space, homology, induced_map, solve_left)


def compositions(k, min_part=1):
    """Ordered tuples of ints >= min_part summing to k."""
    if k == 0:
        yield ()
        return
    for first in range(min_part, k + 1):
        for rest in compositions(k - first, min_part):
            yield (first,) + rest


class AInfCategory:
    """Finite A-infinity category presented on suspended homs.

    shoms: {(X,Y): GradedSpace} -- the suspended hom s-objects; absent pairs
    are zero.  ops: {path: GradedMap} with path a tuple of >= 2 objects; the
    map is b_{len(path)-1} on that path, of degree +1.  units, if given, map
    X to a degree -1 element of shom(X,X) (a map from the tensor unit).
    exact=True asserts the presentation is complete: every operation not
    stored is identically zero.
    """

    def __init__(self, ring, objects, shoms, ops, units=None, max_arity=None,
                 exact=True):
        self.ring = ring
        self.objects = tuple(objects)
        oset = set(self.objects)
        self.shoms = {}
        for (x, y), sp in shoms.items():
            if x not in oset or y not in oset:
                raise ValueError("hom between unknown objects %r,%r" % (x, y))
            if sp.ring != ring:
                raise ValueError("hom space over wrong ring")
            if not sp.is_zero():
                self.shoms[(x, y)] = sp
        self.ops = {}
        self._pspace = {}
        for path, f in ops.items():
            path = tuple(path)
            if len(path) < 2:
                raise ValueError("operation path too short: %r" % (path,))
            if any(o not in oset for o in path):
                raise ValueError("operation path with unknown object")
            if f.degree != 1:
                raise ValueError("operation on %r has degree %d" % (path, f.degree))
            if f.source != self.path_space(path):
                raise ValueError("operation on %r has wrong source" % (path,))
            if f.target != self.shom(path[0], path[-1]):
                raise ValueError("operation on %r has wrong target" % (path,))
            if not f.is_zero():
                self.ops[path] = f
        inferred = max((len(p) - 1 for p in self.ops), default=1)
        self.max_arity = max_arity if max_arity is not None else inferred
        if self.max_arity < inferred:
            raise ValueError("declared arity bound below stored operations")
        self.exact = bool(exact)
        self.units = None
        if units is not None:
            self.units = {}
            for x, u in units.items():
                if u.degree != -1 or u.target != self.shom(x, x):
                    raise ValueError("unit of %r must be a degree -1 element "
                                     "of shom(%r,%r)" % (x, x, x))
                self.units[x] = u

    def __eq__(self, other):
        return (isinstance(other, AInfCategory)
                and self.ring == other.ring
                and self.objects == other.objects
                and self.shoms == other.shoms
                and self.ops == other.ops
                and self.units == other.units
                and self.max_arity == other.max_arity)

    # -- spaces -------------------------------------------------------------

    def shom(self, x, y):
        sp = self.shoms.get((x, y))
        if sp is None:
            return GradedSpace(self.ring, {})
        return sp

    def hom(self, x, y):
        """Unsuspended hom: degree k of hom is degree k-1 of shom."""
        return shift_space(self.shom(x, y), -1)

    def path_space(self, path):
        path = tuple(path)
        if path not in self._pspace:
            legs = [self.shom(path[i], path[i + 1]) for i in range(len(path) - 1)]
            self._pspace[path] = tensor_space(legs, ring=self.ring)
        return self._pspace[path]

    def paths(self, n):
        """Object paths of n legs whose path space is nonzero."""
        for path in itertools.product(self.objects, repeat=n + 1):
            if all(not self.shom(path[i], path[i + 1]).is_zero()
                   for i in range(n)):
                yield path

    # -- operations ---------------------------------------------------------

    def b_opt(self, path):
        return self.ops.get(tuple(path))

    def b_for(self, path):
        f = self.ops.get(tuple(path))
        if f is not None:
            return f
        return GradedMap.zero(self.path_space(path),
                              self.shom(path[0], path[-1]), 1)

    def m_for(self, path):
        """m_n on the unsuspended homs along a path."""
        path = tuple(path)
        legs = [shift_iso(self.hom(path[i], path[i + 1]), 1)
                for i in range(len(path) - 1)]
        s_out = shift_iso(self.hom(path[0], path[-1]), 1)
        return compose(tensor_map(*legs), self.b_for(path), s_out.inverse())

    def unit(self, x):
        if self.units is None:
            raise ValueError("category carries no units")
        return self.units[x]

    def is_dg(self):
        return self.max_arity <= 2

    def shom_complex(self, x, y):
        return Complex(self.shom(x, y), self.b_for((x, y)), check=False)

    def hom_complex(self, x, y):
        """(hom(x,y), m_1) with m_1 = s b_1 s^{-1}."""
        s = shift_iso(self.hom(x, y), 1)
        return Complex(self.hom(x, y),
                       compose(s, self.b_for((x, y)), s.inverse()), check=False)

    def stasheff_bound(self):
        """Largest arity where the Stasheff sum can have a nonzero term."""
        return 2 * self.max_arity - 1


def category_from_m(ring, objects, homs, m_ops, unit_vectors=None,
                    max_arity=None, exact=True):
    """Build a category from classical data: homs are unsuspended spaces,
    m_ops maps paths to m_n blocks (degree 2-n), unit_vectors maps an object
    to the degree-0 coefficient row of its identity."""
    shoms = {pair: shift_space(sp, 1) for pair, sp in homs.items()}
    cat_homs = {pair: sp for pair, sp in homs.items() if not sp.is_zero()}
    ops = {}
    for path, m in m_ops.items():
        path = tuple(path)
        legs = [shift_iso(cat_homs[(path[i], path[i + 1])], 1)
                for i in range(len(path) - 1)]
        s_out = shift_iso(cat_homs[(path[0], path[-1])], 1)
        ops[path] = compose(tensor_map(*legs).inverse(), m, s_out)
    units = None
    if unit_vectors is not None:
        units = {}
        for x, vec in unit_vectors.items():
            if (x, x) not in cat_homs:
                # zero endomorphism complex: the identity is the zero map
                units[x] = GradedMap.zero(unit_space(ring),
                                          GradedSpace(ring, {}), -1)
                continue
            e = element_map(cat_homs[(x, x)], 0, vec)
            units[x] = e.then(shift_iso(cat_homs[(x, x)], 1))
    return AInfCategory(ring, objects, shoms, ops, units=units,
                        max_arity=max_arity, exact=exact)


# ---------------------------------------------------------------------------
# Stasheff identities, two routes


def _contraction_sum(cat, path, comps, target, out_degree):
    """sum over a+n+c = k, n >= 1 of (1^a (x) b_n (x) 1^c) then comps(c-path).

    comps(path') returns the outer component on the contracted path or None.
    """
    k = len(path) - 1
    src = cat.path_space(path)
    total = GradedMap.zero(src, target, out_degree)
    for n in range(1, min(cat.max_arity, k) + 1):
        for a in range(0, k - n + 1):
            inner = cat.b_opt(path[a:a + n + 1])
            if inner is None:
                continue
            cpath = path[:a + 1] + path[a + n:]
            outer = comps(cpath)
            if outer is None:
                continue
            slots = ([GradedMap.identity(cat.shom(path[i], path[i + 1]))
                      for i in range(a)]
                     + [inner]
                     + [GradedMap.identity(cat.shom(path[i], path[i + 1]))
                        for i in range(a + n, k)])
            total = total + compose(tensor_map(*slots), outer)
    return total


def _slotted_sum(pattern, path, outer, target, out_degree):
    """sum of (c_1 (x) ... (x) c_l) then outer(image path).

    pattern alternates functors and transformations, starting and ending with
    a functor: [F0, t1, F1, ..., ts, Fs].  Functor streams contribute >= 0
    components of >= 1 legs each; each transformation contributes exactly one
    component of >= 0 legs.  outer(bpath) gives the target-category operation
    (or next-functor component) for the produced slot path, or None.
    """
    k = len(path) - 1
    cat = pattern[0].source
    src = cat.path_space(path)
    total = GradedMap.zero(src, target, out_degree)

    def rec(pi, pos):
        # yields (slots, objs) covering legs pos..k with pattern[pi:]
        if pi == len(pattern):
            if pos == k:
                yield [], []
            return
        entry = pattern[pi]
        if isinstance(entry, AInfFunctor):
            def stream(p):
                for slots, objs in rec(pi + 1, p):
                    yield slots, objs
                for ln in range(1, k - p + 1):
                    comp = entry.component(path[p:p + ln + 1])
                    if comp is None:
                        continue
                    for slots, objs in stream(p + ln):
                        yield ([comp] + slots,
                               [entry.obj(path[p + ln])] + objs)
            yield from stream(pos)
        else:
            for ln in range(0, k - pos + 1):
                comp = entry.component(path[pos:pos + ln + 1])
                if comp is None:
                    continue
                for slots, objs in rec(pi + 1, pos + ln):
                    yield ([comp] + slots,
                           [entry.target_functor.obj(path[pos + ln])] + objs)

    first_obj = pattern[0].obj(path[0])
    for slots, objs in rec(0, 0):
        if not slots:
            continue
        out = outer(tuple([first_obj] + objs))
        if out is None:
            continue
        total = total + compose(tensor_map(*slots), out)
    return total


def stasheff_defect(cat, path):
    """sum (1^a (x) b_n (x) 1^c) b_{a+1+c} on one path; zero iff the
    identity of that arity holds there."""
    return _contraction_sum(cat, path, cat.b_opt,
                            cat.shom(path[0], path[-1]), 2)


def coderivation_square_defect(cat, path):
    """Independent route: square the full coderivation matrix.

    Assembles hat-b as block maps T^k -> (+) over contracted paths T^j, then
    composes two honest direct-sum maps and reads the T^1 corner.
    """
    path = tuple(path)
    k = len(path) - 1
    # layer j: direct sum over all contractions of `path` with j legs
    def contractions(p, j):
        # all paths obtained from p by collapsing one run of n>=1 legs
        seen = []
        for n in range(1, len(p)):
            for a in range(0, len(p) - 1 - n + 1):
                cp = p[:a + 1] + p[a + n:]
                if len(cp) - 1 == j and cp not in seen:
                    seen.append(cp)
        return seen
    total = None
    for j in range(1, k + 1):
        paths_j = contractions(path, j)
        parts = [(p, cat.path_space(p)) for p in paths_j]
        if not parts:
            continue
        tot, incs, projs = direct_sum_space(cat.ring, parts)
        # hat-b from T^k(path) into layer j
        first = GradedMap.zero(cat.path_space(path), tot, 1)
        for p in paths_j:
            n = k - j + 1
            for a in range(0, k - n + 1):
                if path[:a + 1] + path[a + n:] != p:
                    continue
                inner = cat.b_opt(path[a:a + n + 1])
                if inner is None:
                    continue
                slots = ([GradedMap.identity(cat.shom(path[i], path[i + 1]))
                          for i in range(a)] + [inner]
                         + [GradedMap.identity(cat.shom(path[i], path[i + 1]))
                            for i in range(a + n, k)])
                first = first + compose(tensor_map(*slots), incs[p])
        # hat-b from layer j to T^1
        second = GradedMap.zero(tot, cat.shom(path[0], path[-1]), 1)
        for p in paths_j:
            bp = cat.b_opt(p)
            if bp is not None:
                second = second + compose(projs[p], bp)
        term = compose(first, second)
        total = term if total is None else total + term
    if total is None:
        return GradedMap.zero(cat.path_space(path),
                              cat.shom(path[0], path[-1]), 2)
    return total


class StasheffReport:
    def __init__(self, ok, checked, failures, bound, exact):
        self.ok = ok
        self.checked = checked
        self.failures = failures        # list of (arity, path)
        self.bound = bound
        self.exact = exact

    def __bool__(self):
        return self.ok


def check_stasheff(cat, max_arity=None, cross_check=False):
    """Verify the Stasheff identities on every populated path.

    With exact data the bound 2*max_arity - 1 is complete: beyond it every
    term of the identity vanishes for arity reasons.  cross_check also runs
    the coderivation-square route and insists the two defects agree.
    """
    bound = max_arity if max_arity is not None else cat.stasheff_bound()
    failures = []
    checked = 0
    for k in range(1, bound + 1):
        for path in cat.paths(k):
            defect = stasheff_defect(cat, path)
            checked += 1
            if cross_check:
                other = coderivation_square_defect(cat, path)
                if defect != other:
                    raise AssertionError("internal: the two Stasheff routes "
                                         "disagree on %r" % (path,))
            if not defect.is_zero():
                failures.append((k, path))
    return StasheffReport(not failures, checked, failures, bound, cat.exact)


# ---------------------------------------------------------------------------
# functors


class AInfFunctor:
    """A-infinity functor; components f_n: T^n s-source -> s-target, degree 0.

    comps: {path: GradedMap} keyed by source object paths (>= 2 objects).
    """

    def __init__(self, source, target, obj_map, comps, max_arity=None):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        for x in source.objects:
            if x not in self.obj_map:
                raise ValueError("object %r has no image" % (x,))
        self.comps = {}
        for path, f in comps.items():
            path = tuple(path)
            if f.degree != 0:
                raise ValueError("functor component on %r has degree %d"
                                 % (path, f.degree))
            if f.source != source.path_space(path):
                raise ValueError("component on %r has wrong source" % (path,))
            if f.target != target.shom(self.obj(path[0]), self.obj(path[-1])):
                raise ValueError("component on %r has wrong target" % (path,))
            if not f.is_zero():
                self.comps[path] = f
        inferred = max((len(p) - 1 for p in self.comps), default=1)
        self.max_arity = max_arity if max_arity is not None else inferred

    def obj(self, x):
        return self.obj_map[x]

    def component(self, path):
        return self.comps.get(tuple(path))

    def is_strict(self):
        return all(len(p) == 2 for p in self.comps)

    def __eq__(self, other):
        return (isinstance(other, AInfFunctor)
                and self.source == other.source
                and self.target == other.target
                and self.obj_map == other.obj_map
                and self.comps == other.comps)


def functor_defect(F, path):
    """Difference of the two sides of the functor equation on one path."""
    A, B = F.source, F.target
    tgt = B.shom(F.obj(path[0]), F.obj(path[-1]))
    lhs = _contraction_sum(A, path, F.component, tgt, 1)
    rhs = _slotted_sum([F], path, B.b_opt, tgt, 1)
    return lhs - rhs


def check_functor(F, max_arity=None):
    """All functor-equation defects on populated paths; True when all vanish."""
    bound = max_arity
    if bound is None:
        bound = max(F.source.max_arity + F.max_arity - 1,
                    F.max_arity * max(F.target.max_arity, 1))
    failures = []
    for k in range(1, bound + 1):
        for path in F.source.paths(k):
            if not functor_defect(F, path).is_zero():
                failures.append((k, path))
    return StasheffReport(not failures, bound, failures, bound,
                          F.source.exact and F.target.exact)


def identity_functor(cat):
    comps = {path: GradedMap.identity(cat.shom(*path))
             for path in cat.paths(1)}
    return AInfFunctor(cat, cat, {x: x for x in cat.objects}, comps)


def compose_functors(F, G):
    """(FG)_k = sum (f_{i_1} (x) ... (x) f_{i_l}) g_l, left-to-right."""
    if F.target is not G.source and F.target != G.source:
        raise ValueError("functors not composable")
    obj_map = {x: G.obj(F.obj(x)) for x in F.source.objects}
    comps = {}
    bound = F.max_arity * G.max_arity
    for k in range(1, bound + 1):
        for path in F.source.paths(k):
            tgt = G.target.shom(obj_map[path[0]], obj_map[path[-1]])
            tot = _slotted_sum([F], path, G.component, tgt, 0)
            if not tot.is_zero():
                comps[path] = tot
    return AInfFunctor(F.source, G.target, obj_map, comps)


# ---------------------------------------------------------------------------
# transformations


class AInfTransformation:
    """(F,G)-transformation of homogeneous degree.

    comps: {path: GradedMap}; the arity-k component on path (X_0..X_k) maps
    T^k s-source into s-target(F X_0, G X_k); arity 0 uses paths (X,) and
    maps from the tensor unit.
    """

    def __init__(self, F, G, degree, comps):
        if F.source is not G.source and F.source != G.source:
            raise ValueError("transformation needs functors with equal source")
        self.source_functor = F
        self.target_functor = G
        self.degree = degree
        self.comps = {}
        for path, f in comps.items():
            path = tuple(path)
            if f.degree != degree:
                raise ValueError("component degree %d, expected %d"
                                 % (f.degree, degree))
            expect_src = (unit_space(F.source.ring) if len(path) == 1
                          else F.source.path_space(path))
            if f.source != expect_src:
                raise ValueError("component on %r has wrong source" % (path,))
            if f.target != F.target.shom(F.obj(path[0]), G.obj(path[-1])):
                raise ValueError("component on %r has wrong target" % (path,))
            if not f.is_zero():
                self.comps[path] = f
        self.max_arity = max((len(p) - 1 for p in self.comps), default=0)

    def component(self, path):
        return self.comps.get(tuple(path))

    def __eq__(self, other):
        return (isinstance(other, AInfTransformation)
                and self.source_functor == other.source_functor
                and self.target_functor == other.target_functor
                and self.degree == other.degree and self.comps == other.comps)

    def add(self, other):
        keys = set(self.comps) | set(other.comps)
        comps = {}
        for p in keys:
            a, b = self.comps.get(p), other.comps.get(p)
            comps[p] = b if a is None else (a if b is None else a + b)
        return AInfTransformation(self.source_functor, self.target_functor,
                                  self.degree, comps)

    def scale(self, c):
        return AInfTransformation(self.source_functor, self.target_functor,
                                  self.degree,
                                  {p: f.scale(c) for p, f in self.comps.items()})

    def is_zero(self):
        return not self.comps


def zero_transformation(F, G, degree):
    return AInfTransformation(F, G, degree, {})


def support_bound(F, G, extra, B):
    """Arity past which every composition/differential term dies."""
    slot = max(F.max_arity, G.max_arity, 1)
    return extra + max(B.max_arity - 1, 1) * slot + F.source.max_arity


def transformation_differential(r, upto=None):
    """r B_1 = r hat-b - (-1)^{deg r} hat-b r, componentwise."""
    F, G = r.source_functor, r.target_functor
    A, B = F.source, F.target
    sgn = -1 if r.degree % 2 else 1
    bound = upto if upto is not None else support_bound(F, G, r.max_arity, B)
    comps = {}
    for k in range(0, bound + 1):
        for path in A.paths(k) if k else [(x,) for x in A.objects]:
            tgt = B.shom(F.obj(path[0]), G.obj(path[-1]))
            if tgt.is_zero():
                continue
            rb = _slotted_sum([F, r, G], path, B.b_opt, tgt, r.degree + 1)
            if k:
                br = _contraction_sum(A, path, r.component, tgt, r.degree + 1)
                rb = rb - br.scale(sgn)
            if not rb.is_zero():
                comps[path] = rb
    return AInfTransformation(F, G, r.degree + 1, comps)


def transformation_b2(r, q, upto=None):
    """(r (x) q) B_2 for r: F -> G, q: G -> H."""
    F, G = r.source_functor, r.target_functor
    H = q.target_functor
    if q.source_functor != G:
        raise ValueError("transformations not composable")
    A, B = F.source, F.target
    bound = (upto if upto is not None
             else support_bound(F, H, r.max_arity + q.max_arity, B))
    comps = {}
    for k in range(0, bound + 1):
        for path in A.paths(k) if k else [(x,) for x in A.objects]:
            tgt = B.shom(F.obj(path[0]), H.obj(path[-1]))
            if tgt.is_zero():
                continue
            tot = _slotted_sum([F, r, G, q, H], path, B.b_opt,
                               tgt, r.degree + q.degree + 1)
            if not tot.is_zero():
                comps[path] = tot
    return AInfTransformation(F, H, r.degree + q.degree + 1, comps)


def unit_transformation(F):
    """The identity transformation of F: arity-0 components i_{FX}."""
    B = F.target
    comps = {(x,): B.unit(F.obj(x)) for x in F.source.objects}
    return AInfTransformation(F, F, -1, comps)


# ---------------------------------------------------------------------------
# units and homology


class UnitalReport:
    def __init__(self, ok, strict, cycle_ok, pair_results):
        self.ok = ok
        self.strict = strict
        self.cycle_ok = cycle_ok
        self.pair_results = pair_results   # {(x,y): (right_ok, left_ok)}

    def __bool__(self):
        return self.ok


def unit_action_maps(cat, x, y):
    """(1 (x) i_Y) b_2 and -(i_X (x) 1) b_2 on shom(x,y)."""
    sp = cat.shom(x, y)
    right = compose(tensor_map(GradedMap.identity(sp), cat.unit(y)),
                    cat.b_for((x, y, y)))
    left = compose(tensor_map(cat.unit(x), GradedMap.identity(sp)),
                   cat.b_for((x, x, y))).scale(-1)
    return right, left


def check_unital(cat):
    """Units must be given; they must be b_1-cycles and act as the identity
    on homology (strict units short-circuit the homology computation)."""
    if cat.units is None:
        raise ValueError("check_unital needs a category with chosen units")
    cycle_ok = all(cat.unit(x).then(cat.b_for((x, x))).is_zero()
                   for x in cat.objects)
    pair_results = {}
    strict = True
    ok = cycle_ok
    for x, y in itertools.product(cat.objects, repeat=2):
        sp = cat.shom(x, y)
        if sp.is_zero():
            continue
        right, left = unit_action_maps(cat, x, y)
        ident = GradedMap.identity(sp)
        r_ok, l_ok = right == ident, left == ident
        if not (r_ok and l_ok):
            strict = False
            cx = cat.shom_complex(x, y)
            h = homology(cx)
            hid = GradedMap.identity(h.space)
            r_ok = r_ok or induced_map(h, h, right) == hid
            l_ok = l_ok or induced_map(h, h, left) == hid
        pair_results[(x, y)] = (r_ok, l_ok)
        ok = ok and r_ok and l_ok
    return UnitalReport(ok, strict and cycle_ok, cycle_ok, pair_results)


class HomologyCategory:
    """Graded category of homology classes with induced composition."""

    def __init__(self, cat):
        self.cat = cat
        self.ring = cat.ring
        self.objects = cat.objects
        self.homs = {}
        for pair in cat.shoms:
            self.homs[pair] = homology(cat.hom_complex(*pair))

    def hom(self, x, y):
        h = self.homs.get((x, y))
        if h is None:
            return GradedSpace(self.ring, {})
        return h.space

    def compose_map(self, x, y, z):
        """H hom(x,y) (x) H hom(y,z) -> H hom(x,z), induced by m_2."""
        hxy, hyz = self.homs.get((x, y)), self.homs.get((y, z))
        hxz = self.homs.get((x, z))
        src = tensor_space([self.hom(x, y), self.hom(y, z)], ring=self.ring)
        if hxy is None or hyz is None or hxz is None:
            return GradedMap.zero(src, self.hom(x, z), 0)
        m2 = self.cat.m_for((x, y, z))
        return compose(tensor_map(hxy.section, hyz.section), m2,
                       hxz.retraction)

    def unit_class(self, x):
        u = compose(self.cat.unit(x),
                    shift_iso(self.cat.hom(x, x), 1).inverse())
        return compose(u, self.homs[(x, x)].retraction)


def homology_category(cat):
    return HomologyCategory(cat)


def homology_classes_of_transformation(r, hcat):
    """H^0-level data of a degree -1 transformation: per object, the class
    of r_0 s^{-1} in the homology category of the target."""
    F, G = r.source_functor, r.target_functor
    out = {}
    for x in F.source.objects:
        fx, gx = F.obj(x), G.obj(x)
        comp = r.component((x,))
        if comp is None or (fx, gx) not in hcat.homs:
            out[x] = GradedMap.zero(unit_space(F.source.ring),
                                    hcat.hom(fx, gx), 0)
        else:
            hom = F.target.hom(fx, gx)
            unsus = comp.then(shift_iso(hom, 1).inverse())
            out[x] = unsus.then(hcat.homs[(fx, gx)].retraction)
    return out


# ---------------------------------------------------------------------------
# the truncated category of functors (target must be dg)


class TransformationSpace:
    """All (F,G)-transformations of arity <= bound as one graded space."""

    def __init__(self, F, G, bound):
        A, B = F.source, F.target
        self.F, self.G, self.bound = F, G, bound
        parts = []
        for k in range(0, bound + 1):
            paths = A.paths(k) if k else [(x,) for x in A.objects]
            for path in paths:
                src = (unit_space(A.ring) if k == 0
                       else A.path_space(path))
                tgt = B.shom(F.obj(path[0]), G.obj(path[-1]))
                if tgt.is_zero():
                    continue
                hs = hom_space(src, tgt)
                if not hs.is_zero():
                    parts.append(((k, path), hs))
        self.parts = parts
        self.space, self.incs, self.projs = direct_sum_space(A.ring, parts)

    def encode(self, r):
        """Transformation -> element map of the sum space (drops arity > bound)."""
        out = GradedMap.zero(unit_space(self.space.ring), self.space, r.degree)
        for (k, path), hs in self.parts:
            comp = r.component(path)
            if comp is None:
                continue
            d, vec = map_to_hom(hs, comp)
            out = out + element_map(hs, d, vec).then(self.incs[(k, path)])
        return out

    def decode(self, d, vec):
        """(degree, coefficient row) -> AInfTransformation."""
        comps = {}
        for (k, path), hs in self.parts:
            dd, sub = self.projs[(k, path)].apply(d, vec)
            comp = hom_to_map(hs, dd, sub)
            if not comp.is_zero():
                comps[path] = comp
        return AInfTransformation(self.F, self.G, d, comps)

    def basis_transformations(self, d):
        for i in range(self.space.dim(d)):
            vec = [self.space.ring.one if j == i else self.space.ring.zero
                   for j in range(self.space.dim(d))]
            yield self.decode(d, vec)


def functor_category(functors, bound, labels=None):
    """The dg category of A-infinity functors, truncated at component arity
    `bound`; requires a dg target.  Returns (AInfCategory, spaces dict)."""
    B = functors[0].target
    if not B.is_dg():
        raise ValueError("functor category needs a dg target")
    ring = B.ring
    if labels is None:
        labels = list(range(len(functors)))
    fun = dict(zip(labels, functors))
    spaces = {}
    shoms, ops = {}, {}
    for la, lb in itertools.product(labels, repeat=2):
        ts = TransformationSpace(fun[la], fun[lb], bound)
        spaces[(la, lb)] = ts
        shoms[(la, lb)] = ts.space
    for la, lb in itertools.product(labels, repeat=2):
        ts = spaces[(la, lb)]
        blocks = {}
        for d in ts.space.degrees():
            rows = []
            for r in ts.basis_transformations(d):
                img = transformation_differential(r, upto=bound)
                rows.append(ts.encode(img).block(0).data[0]
                            if not img.is_zero() else
                            [ring.zero] * ts.space.dim(d + 1))
            blocks[d] = Matrix(ring, rows, ts.space.dim(d), ts.space.dim(d + 1))
        ops[(la, lb)] = GradedMap(ts.space, ts.space, 1, blocks)
    for la, lb, lc in itertools.product(labels, repeat=3):
        t1, t2 = spaces[(la, lb)], spaces[(lb, lc)]
        t3 = spaces[(la, lc)]
        src = tensor_space([t1.space, t2.space], ring=ring)
        blocks = {}
        for d in src.degrees():
            tups = src.index_to_tuple(d)
            tdim = t3.space.dim(d + 1)
            rows = []
            for (d1, i1), (d2, i2) in tups:
                r = t1.decode(d1, _unitvec(ring, t1.space.dim(d1), i1))
                q = t2.decode(d2, _unitvec(ring, t2.space.dim(d2), i2))
                img = transformation_b2(r, q, upto=bound)
                rows.append([ring.zero] * tdim if img.is_zero()
                            else t3.encode(img).block(0).data[0])
            if rows:
                blocks[d] = Matrix(ring, rows, len(tups), tdim)
        ops[(la, lb, lc)] = GradedMap(src, t3.space, 1, blocks)
    units = None
    if B.units is not None:
        units = {}
        for la in labels:
            units[la] = spaces[(la, la)].encode(unit_transformation(fun[la]))
    cat = AInfCategory(ring, labels, shoms, ops, units=units, exact=True)
    return cat, spaces


def _unitvec(ring, n, i):
    return [ring.one if j == i else ring.zero for j in range(n)]


# ---------------------------------------------------------------------------
# isomorphy of functors


def _invertible_h0_classes(hcat, fx, gx, budget):
    """Candidate invertible degree-0 homology classes fx -> gx."""
    ring = hcat.ring
    hfg = hcat.hom(fx, gx)
    hgf = hcat.hom(gx, fx)
    n, m = hfg.dim(0), hgf.dim(0)
    if n == 0 or m == 0:
        return
    comp_fg = hcat.compose_map(fx, gx, fx)   # class(u) (x) class(v) -> id?
    comp_gf = hcat.compose_map(gx, fx, gx)
    id_f = hcat.unit_class(fx)
    id_g = hcat.unit_class(gx)
    tried = 0
    for coeffs in _coeff_grid(ring, n, budget):
        if all(c == ring.zero for c in coeffs):
            continue
        tried += 1
        if tried > budget:
            return
        u = coeffs
        # solve bilinear conditions for v: (u v) = id_fx and (v u) = id_gx
        rows = []
        rhs_f = id_f.block(0).data[0] if hcat.hom(fx, fx).dim(0) else []
        rhs_g = id_g.block(0).data[0] if hcat.hom(gx, gx).dim(0) else []
        cols_f = len(rhs_f)
        cols_g = len(rhs_g)
        aug = []
        for j in range(m):
            vvec = _unitvec(ring, m, j)
            uv = _pair_compose(hcat, comp_fg, hfg, hgf, u, vvec)
            vu = _pair_compose(hcat, comp_gf, hgf, hfg, vvec, u)
            aug.append(list(uv) + list(vu))
        a = Matrix(ring, aug, m, cols_f + cols_g)
        b = Matrix(ring, [list(rhs_f) + list(rhs_g)], 1, cols_f + cols_g)
        sol = solve_left(a, b)
        if sol is not None:
            yield u, list(sol.data[0])


def _pair_compose(hcat, comp, h1, h2, u, v):
    src = comp.source
    vec = [hcat.ring.zero] * src.dim(0)
    for i, cu in enumerate(u):
        if cu == hcat.ring.zero:
            continue
        for j, cv in enumerate(v):
            if cv == hcat.ring.zero:
                continue
            tup = ((0, i), (0, j))
            vec[src.tuple_to_index(0, tup)] = cu * cv
    return comp.apply(0, vec)[1]


def _coeff_grid(ring, n, budget):
    if ring.name.startswith("fp:"):
        vals = [ring.of(i) for i in range(ring.char)]
    else:
        vals = [ring.of(i) for i in (0, 1, -1, 2, -2)]
    count = 0
    for combo in itertools.product(vals, repeat=n):
        yield list(combo)
        count += 1
        if count >= 4 * budget:
            return


def functors_isomorphic(F, G, max_arity=3, budget=400):
    """Search for an invertible degree -1 transformation F -> G.

    Picks an invertible homology class per object, then lifts arity by arity
    by linear algebra; returns the witness transformation or None (meaning:
    none found with components up to max_arity under the search budget).
    """
    A, B = F.source, F.target
    hcat = homology_category(B)
    per_obj = {}
    for x in A.objects:
        cands = [u for u, _ in
                 _invertible_h0_classes(hcat, F.obj(x), G.obj(x), budget)]
        if not cands:
            return None
        per_obj[x] = cands
    combos = itertools.product(*[per_obj[x] for x in A.objects])
    tried = 0
    for combo in combos:
        tried += 1
        if tried > budget:
            return None
        r0 = {}
        for x, u in zip(A.objects, combo):
            h = hcat.homs[(F.obj(x), G.obj(x))]
            rep = h.section.apply(0, u)[1]          # cycle in hom^0
            e = element_map(B.hom(F.obj(x), G.obj(x)), 0, rep)
            r0[(x,)] = e.then(shift_iso(B.hom(F.obj(x), G.obj(x)), 1))
        r = AInfTransformation(F, G, -1, r0)
        r = _lift_cycle(r, max_arity)
        if r is not None:
            return r
    return None


def _lift_cycle(r, max_arity):
    """Extend r so that (r B_1)_k = 0 for k <= max_arity, arity by arity."""
    F, G = r.source_functor, r.target_functor
    A, B = F.source, F.target
    for k in range(0, max_arity + 1):
        defect = transformation_differential(r, upto=k)
        bad = {p: c for p, c in defect.comps.items() if len(p) - 1 == k}
        if not bad:
            continue
        if k == 0:
            return None                      # r_0 classes were not cycles
        fixed = dict(r.comps)
        solvable = True
        for path, c in bad.items():
            src = A.path_space(path)
            tgt = B.shom(F.obj(path[0]), G.obj(path[-1]))
            hs = hom_space(src, tgt)
            # unknown u of degree -1 with u b_1 - (-1)^r sum (1 b_1 1) u = -c
            rows = []
            for i in range(hs.dim(-1)):
                u = hom_to_map(hs, -1, _unitvec(A.ring, hs.dim(-1), i))
                du = u.then(B.b_for((F.obj(path[0]), G.obj(path[-1]))))
                for a in range(k):
                    slots = [GradedMap.identity(A.shom(path[j], path[j + 1]))
                             for j in range(k)]
                    slots[a] = A.b_for(path[a:a + 2])
                    du = du + compose(tensor_map(*slots), u)
                rows.append(map_to_hom(hs, du)[1])
            a_mat = Matrix(A.ring, rows, hs.dim(-1), hs.dim(0))
            rhs = Matrix(A.ring, [map_to_hom(hs, c.scale(-1))[1]], 1, hs.dim(0))
            sol = solve_left(a_mat, rhs)
            if sol is None:
                solvable = False
                break
            u = hom_to_map(hs, -1, list(sol.data[0]))
            if not u.is_zero():
                fixed[path] = (fixed[path] + u) if path in fixed else u
        if not solvable:
            return None
        r = AInfTransformation(F, G, -1, fixed)
    final = transformation_differential(r, upto=max_arity)
    return r if final.is_zero() else None
