"""Built-in example categories: finite quivers, Frobenius and exterior
algebras, a genuinely higher operation, and complexes-with-homs as a dg
category.  Everything is constructed through category_from_m so the b/m
conversion gets exercised constantly."""

import itertools

from .core import (GradedSpace, GradedMap, Matrix, Complex, hom_space,
                   hom_complex, m2_map, map_to_hom, shift_iso, element_map)
from .ainf import AInfCategory, category_from_m


def path_quiver(ring, n=2):
    """The linear quiver with n objects x0 -> x1 -> ... and one-dimensional
    degree-0 homs e_ij for i <= j composing by concatenation."""
    objects = ["x%d" % i for i in range(n)]
    homs, m_ops, units = {}, {}, {}
    for i in range(n):
        for j in range(i, n):
            homs[(objects[i], objects[j])] = GradedSpace(
                ring, {0: ("e%d%d" % (i, j),)})
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                path = (objects[i], objects[j], objects[k])
                src_dims = 1
                m_ops[path] = GradedMap(
                    _pair_tensor(ring, homs, path), homs[(objects[i], objects[k])],
                    0, {0: Matrix(ring, [[1]], 1, 1)})
    for i in range(n):
        units[objects[i]] = [ring.one]
    return category_from_m(ring, objects, homs, m_ops, unit_vectors=units)


def _pair_tensor(ring, homs, path):
    from .core import tensor_space
    legs = [homs[(path[i], path[i + 1])] for i in range(len(path) - 1)]
    return tensor_space(legs, ring=ring)


def _one_object_algebra(ring, basis, mult, unit_label=None):
    """basis: [(label, degree)]; mult: {(label,label): [(label, coeff)]}."""
    obj = "*"
    sp = {}
    for lab, d in basis:
        sp.setdefault(d, []).append(lab)
    hom = GradedSpace(ring, {d: tuple(v) for d, v in sp.items()})
    homs = {(obj, obj): hom}
    idx = {lab: (d, hom.basis_at(d).index(lab)) for lab, d in basis}
    pair = _pair_tensor(ring, homs, (obj, obj, obj))
    blocks = {}
    for dtot in pair.degrees():
        tups = pair.index_to_tuple(dtot)
        rows = []
        for (d1, i1), (d2, i2) in tups:
            l1 = hom.basis_at(d1)[i1]
            l2 = hom.basis_at(d2)[i2]
            row = [ring.zero] * hom.dim(dtot)
            for lab, coeff in mult.get((l1, l2), ()):
                dd, jj = idx[lab]
                if dd != dtot:
                    raise ValueError("product %r %r lands in wrong degree"
                                     % (l1, l2))
                row[jj] = row[jj] + ring.of(coeff)
            rows.append(row)
        blocks[dtot] = Matrix(ring, rows, len(tups), hom.dim(dtot))
    m2 = GradedMap(pair, hom, 0, blocks)
    units = None
    if unit_label is not None:
        d, j = idx[unit_label]
        units = {obj: [ring.one if i == j else ring.zero
                       for i in range(hom.dim(0))]}
    return category_from_m(ring, [obj], homs, {(obj, obj, obj): m2},
                           unit_vectors=units)


def frobenius_dual_numbers(ring):
    """k[x]/x^2 in degree 0; symmetric Frobenius via the trace picking the
    x-coefficient.  The trace itself is used by the Serre checks."""
    cat = _one_object_algebra(
        ring, [("1", 0), ("x", 0)],
        {("1", "1"): [("1", 1)], ("1", "x"): [("x", 1)],
         ("x", "1"): [("x", 1)], ("x", "x"): []},
        unit_label="1")
    return cat


def frobenius_trace(ring):
    """The trace row vector on hom degree 0 of frobenius_dual_numbers."""
    return {0: [ring.zero, ring.one]}


def exterior_algebra(ring, gen_degree=1):
    """Free graded-commutative algebra on one generator x of the given
    degree, truncated by x^2 = 0."""
    return _one_object_algebra(
        ring, [("1", 0), ("x", gen_degree)],
        {("1", "1"): [("1", 1)], ("1", "x"): [("x", 1)],
         ("x", "1"): [("x", 1)], ("x", "x"): []},
        unit_label="1")


def massey_triple(ring):
    """One object, zero m_1 and m_2, and a single nonzero m_3: the minimal
    structure with a genuinely higher operation (not unital)."""
    obj = "*"
    hom = GradedSpace(ring, {1: ("u",), 2: ("v",)})
    homs = {(obj, obj): hom}
    pair3 = _pair_tensor(ring, homs, (obj, obj, obj, obj))
    blocks = {}
    d = 3   # u (x) u (x) u
    tups = pair3.index_to_tuple(d)
    rows = []
    for tup in tups:
        row = [ring.zero] * hom.dim(d - 1)
        if all(dd == 1 for dd, _ in tup):
            row[0] = ring.one          # m_3(u,u,u) = v
        rows.append(row)
    blocks[d] = Matrix(ring, rows, len(tups), hom.dim(d - 1))
    m3 = GradedMap(pair3, hom, -1, blocks)
    return category_from_m(ring, [obj], homs,
                           {(obj, obj, obj, obj): m3})


def dg_complexes_category(ring, complexes, labels=None):
    """The dg category with the given complexes as objects and inner hom
    complexes as homs; composition is the sign-free elementary one."""
    if labels is None:
        labels = ["M%d" % i for i in range(len(complexes))]
    cx = dict(zip(labels, complexes))
    homs, m_ops, units = {}, {}, {}
    for a, b in itertools.product(labels, repeat=2):
        hc = hom_complex(cx[a], cx[b])
        homs[(a, b)] = hc.space
        m_ops[(a, b)] = hc.d
    for a, b, c in itertools.product(labels, repeat=3):
        m_ops[(a, b, c)] = m2_map(homs[(a, b)], homs[(b, c)])
    for a in labels:
        _, vec = map_to_hom(homs[(a, a)], GradedMap.identity(cx[a].space))
        units[a] = vec
    nontrivial = {p: f for p, f in m_ops.items() if not f.is_zero()}
    return category_from_m(ring, labels, homs, nontrivial,
                           unit_vectors=units, max_arity=2)


def broken_associativity(ring):
    """A deliberately wrong multiplication table (for negative tests):
    (x 1) x = 0 but x (1 x) = 1, and the claimed unit does not act."""
    return _one_object_algebra(
        ring, [("1", 0), ("x", 0)],
        {("1", "1"): [("1", 1)], ("1", "x"): [("x", 1)],
         ("x", "1"): [], ("x", "x"): [("1", 1)], },
        unit_label="1")


def disjoint_union(cats, tags=None):
    """Coproduct: objects are (tag, object); no homs across components."""
    ring = cats[0].ring
    if tags is None:
        tags = list(range(len(cats)))
    objects, shoms, ops = [], {}, {}
    units = {} if all(c.units is not None for c in cats) else None
    for tag, cat in zip(tags, cats):
        for x in cat.objects:
            objects.append((tag, x))
        for (x, y), sp in cat.shoms.items():
            shoms[((tag, x), (tag, y))] = sp
        for path, f in cat.ops.items():
            ops[tuple((tag, x) for x in path)] = f
        if units is not None:
            for x in cat.objects:
                units[(tag, x)] = cat.unit(x)
    return AInfCategory(ring, objects, shoms, ops, units=units,
                        max_arity=max(c.max_arity for c in cats),
                        exact=all(c.exact for c in cats))
