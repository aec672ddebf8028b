"""Graded spaces, graded maps, and the Koszul sign engine.

Conventions (fixed globally, matching the package docs):
  * elements are written on the left of maps, composition is left-to-right:
    (x)(f then g) = ((x)f)g;
  * vectors are rows, a map of degree d sends degree k to degree k+d and is
    stored as one exact matrix block per populated source degree;
  * the Koszul rule (x (x) y)(f (x) g) = (-1)^{|y||f|} (x)f (x) (y)g is applied
    by `tensor_map` and `signed_permutation`; no composite sign in the package
    is ever written by hand -- they all come from these two primitives.
"""

from .linalg import Matrix


class GradedSpace:
    """Finitely supported graded space with an ordered, labeled basis."""

    __slots__ = ("ring", "basis")

    def __init__(self, ring, basis):
        clean = {}
        for d in sorted(basis):
            labels = tuple(basis[d])
            if not labels:
                continue
            if len(set(labels)) != len(labels):
                raise ValueError("duplicate basis labels in degree %d" % d)
            clean[d] = labels
        self.ring = ring
        self.basis = clean

    def degrees(self):
        return sorted(self.basis)

    def dim(self, d):
        return len(self.basis.get(d, ()))

    def total_dim(self):
        return sum(len(v) for v in self.basis.values())

    def basis_at(self, d):
        return self.basis.get(d, ())

    def is_zero(self):
        return not self.basis

    # -- tensor protocol: a plain space is a 1-factor tensor ----------------
    @property
    def factors(self):
        return (self,)

    def index_to_tuple(self, d):
        return [((d, i),) for i in range(self.dim(d))]

    def tuple_to_index(self, d, tup):
        (dd, i), = tup
        if dd != d:
            raise KeyError(tup)
        return i

    def __eq__(self, other):
        # structural: spaces with equal labeled bases are interchangeable
        return (isinstance(other, GradedSpace) and self.ring == other.ring
                and self.basis == other.basis)

    def __hash__(self):
        return hash(tuple((d, v) for d, v in sorted(self.basis.items())))

    def __repr__(self):
        dims = ", ".join("%d:%d" % (d, len(v)) for d, v in sorted(self.basis.items()))
        return "GradedSpace{%s}" % dims


class TensorSpace(GradedSpace):
    """Ordered tensor product with explicit slot bookkeeping.

    Basis elements are tuples ((d_1,l_1),...,(d_n,l_n)) of per-slot
    (degree, label) pairs; the zero-factor instance is the tensor unit.
    """

    __slots__ = ("_factors", "_idx2tup", "_tup2idx")

    def __init__(self, ring, factors):
        flat = []
        for f in factors:
            if isinstance(f, TensorSpace):
                flat.extend(f.factors)
            else:
                flat.append(f)
        factors = tuple(flat)
        if any(f.ring != ring for f in factors):
            raise ValueError("mixed rings in tensor product")
        idx2tup = {}
        if factors:
            combos = [()]
            for f in factors:
                ext = []
                for pre in combos:
                    for d in f.degrees():
                        for i in range(f.dim(d)):
                            ext.append(pre + ((d, i),))
                combos = ext
            for tup in combos:
                tot = sum(d for d, _ in tup)
                idx2tup.setdefault(tot, []).append(tup)
        else:
            idx2tup[0] = [()]
        basis = {}
        for d, tups in idx2tup.items():
            labels = []
            for tup in tups:
                labels.append(tuple((dd, factors[s].basis_at(dd)[i])
                                    for s, (dd, i) in enumerate(tup)))
            basis[d] = tuple(labels)
        super().__init__(ring, basis)
        self._factors = factors
        self._idx2tup = {d: tuple(tups) for d, tups in idx2tup.items()}
        self._tup2idx = {d: {t: i for i, t in enumerate(tups)}
                         for d, tups in idx2tup.items()}

    @property
    def factors(self):
        return self._factors

    def index_to_tuple(self, d):
        return self._idx2tup.get(d, ())

    def tuple_to_index(self, d, tup):
        return self._tup2idx[d][tup]


_UNITS = {}
_TCACHE = {}


def unit_space(ring):
    """The empty tensor product: one generator () in degree 0."""
    key = ring.name
    if key not in _UNITS:
        _UNITS[key] = TensorSpace(ring, ())
    return _UNITS[key]


def tensor_space(factors, ring=None):
    factors = list(factors)
    flat = []
    for f in factors:
        if isinstance(f, TensorSpace):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if not flat:
        if ring is None:
            ring = factors[0].ring if factors else None
        if ring is None:
            raise ValueError("empty tensor product needs an explicit ring")
        return unit_space(ring)
    if len(flat) == 1 and not isinstance(flat[0], TensorSpace):
        return flat[0]
    key = (flat[0].ring.name, tuple(flat))
    if key not in _TCACHE:
        _TCACHE[key] = TensorSpace(flat[0].ring, flat)
    return _TCACHE[key]


class GradedMap:
    """Homogeneous linear map between graded spaces; sparse by source degree."""

    __slots__ = ("source", "target", "degree", "blocks")

    def __init__(self, source, target, degree, blocks):
        if source.ring != target.ring:
            raise ValueError("mixed rings")
        clean = {}
        for k, m in blocks.items():
            if m.rows != source.dim(k) or m.cols != target.dim(k + degree):
                raise ValueError("block %d has shape %dx%d, expected %dx%d"
                                 % (k, m.rows, m.cols, source.dim(k),
                                    target.dim(k + degree)))
            if not m.is_zero():
                clean[k] = m
        self.source = source
        self.target = target
        self.degree = degree
        self.blocks = clean

    @classmethod
    def zero(cls, source, target, degree):
        return cls(source, target, degree, {})

    @classmethod
    def identity(cls, space):
        return cls(space, space, 0,
                   {d: Matrix.identity(space.ring, space.dim(d))
                    for d in space.degrees()})

    def block(self, k):
        if k in self.blocks:
            return self.blocks[k]
        return Matrix.zero(self.source.ring, self.source.dim(k),
                           self.target.dim(k + self.degree))

    def __add__(self, other):
        self._check_parallel(other)
        keys = set(self.blocks) | set(other.blocks)
        return GradedMap(self.source, self.target, self.degree,
                         {k: self.block(k) + other.block(k) for k in keys})

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GradedMap(self.source, self.target, self.degree,
                         {k: -m for k, m in self.blocks.items()})

    def scale(self, c):
        return GradedMap(self.source, self.target, self.degree,
                         {k: m.scale(c) for k, m in self.blocks.items()})

    def then(self, other):
        """Left-to-right composite: self followed by other."""
        if self.target != other.source:
            raise ValueError("composition mismatch: %r -> %r vs %r"
                             % (self.target, self.target, other.source))
        out = {}
        for k, m in self.blocks.items():
            n = other.blocks.get(k + self.degree)
            if n is not None:
                out[k] = m @ n
        return GradedMap(self.source, other.target, self.degree + other.degree, out)

    def apply(self, d, vec):
        """(degree, row vector) of the image of a homogeneous element."""
        m = self.block(d)
        v = Matrix(self.source.ring, [list(vec)], 1, self.source.dim(d))
        return d + self.degree, list((v @ m).data[0])

    def is_zero(self):
        return not self.blocks

    def inverse(self):
        """Degreewise inverse; raises if any populated block is singular."""
        from .linalg import solve_right
        out = {}
        for d in set(self.source.degrees()) | set(t - self.degree for t in self.target.degrees()):
            m = self.block(d)
            if m.rows != m.cols:
                raise ValueError("non-square block at degree %d" % d)
            if m.rows == 0:
                continue
            inv = solve_right(m, Matrix.identity(m.ring, m.rows))
            if inv is None:
                raise ValueError("singular block at degree %d" % d)
            out[d + self.degree] = inv
        return GradedMap(self.target, self.source, -self.degree, out)

    def __eq__(self, other):
        return (isinstance(other, GradedMap) and self.source == other.source
                and self.target == other.target and self.degree == other.degree
                and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.blocks))))

    def _check_parallel(self, other):
        if (self.source != other.source or self.target != other.target
                or self.degree != other.degree):
            raise ValueError("maps not parallel")

    def __repr__(self):
        return "GradedMap(deg %+d, blocks at %s)" % (self.degree, sorted(self.blocks))


def compose(*maps):
    out = maps[0]
    for m in maps[1:]:
        out = out.then(m)
    return out


def element_map(space, d, vec):
    """A homogeneous element of `space`, encoded as a map from the tensor unit."""
    m = Matrix(space.ring, [list(vec)], 1, space.dim(d))
    return GradedMap(unit_space(space.ring), space, d, {0: m})


def basis_element(space, d, i):
    z, o = space.ring.zero, space.ring.one
    return element_map(space, d, [o if j == i else z for j in range(space.dim(d))])


def koszul_sign(perm, degrees):
    """(-1)^sum over crossings; perm[i] is the destination slot of slot i."""
    if len(perm) != len(degrees):
        raise ValueError("permutation size %d vs %d degrees"
                         % (len(perm), len(degrees)))
    s = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s += degrees[i] * degrees[j]
    return -1 if s % 2 else 1


def signed_permutation(space, perm):
    """The Koszul-signed slot permutation on a tensor space.

    perm[i] = destination of slot i; the target has factor order induced by
    the inverse permutation.
    """
    factors = space.factors
    n = len(factors)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation: %r" % (perm,))
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    target = tensor_space([factors[inv[j]] for j in range(n)], ring=space.ring)
    blocks = {}
    for d in space.degrees():
        tups = space.index_to_tuple(d)
        m = [[space.ring.zero] * target.dim(d) for _ in tups]
        for r, tup in enumerate(tups):
            out = [None] * n
            for i, slot in enumerate(tup):
                out[perm[i]] = slot
            sgn = koszul_sign(perm, [dd for dd, _ in tup])
            c = target.tuple_to_index(d, tuple(out))
            m[r][c] = space.ring.of(sgn)
        blocks[d] = Matrix(space.ring, m, len(tups), target.dim(d))
    return GradedMap(space, target, 0, blocks)


def transposition(space, i, j=None):
    """Swap slots i and j (default adjacent) with Koszul signs."""
    n = len(space.factors)
    if j is None:
        j = i + 1
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return signed_permutation(space, perm)


def tensor_map(*maps):
    """Koszul-signed tensor product of maps, elements allowed as 0-slot maps.

    The joint source/target are the flattened tensor products of the factor
    sources/targets; the sign on a basis tensor is
    (-1)^{sum_{i<j} |f_i| * deg(block_j)}.
    """
    ring = maps[0].source.ring
    src_factors, tgt_factors, counts = [], [], []
    for m in maps:
        sf = m.source.factors if isinstance(m.source, TensorSpace) else (m.source,)
        tf = m.target.factors if isinstance(m.target, TensorSpace) else (m.target,)
        src_factors.extend(sf)
        tgt_factors.extend(tf)
        counts.append(len(sf))
    source = tensor_space(src_factors, ring=ring)
    target = tensor_space(tgt_factors, ring=ring)
    degree = sum(m.degree for m in maps)
    blocks = {}
    for d in source.degrees():
        tups = source.index_to_tuple(d)
        tdim = target.dim(d + degree)
        if tdim == 0:
            continue
        rows = [[ring.zero] * tdim for _ in tups]
        any_nonzero = False
        for r, tup in enumerate(tups):
            groups, pos = [], 0
            for c in counts:
                groups.append(tup[pos:pos + c])
                pos += c
            gdegs = [sum(dd for dd, _ in g) for g in groups]
            s = 0
            for i in range(len(maps)):
                for j in range(i + 1, len(maps)):
                    s += maps[i].degree * gdegs[j]
            sgn = ring.of(-1 if s % 2 else 1)
            # per-factor output rows
            outs = []
            dead = False
            for m, g, gd in zip(maps, groups, gdegs):
                idx = m.source.tuple_to_index(gd, g)
                blk = m.blocks.get(gd)
                if blk is None:
                    dead = True
                    break
                row = blk.row(idx)
                od = gd + m.degree
                otups = m.target.index_to_tuple(od) if m.target.dim(od) else ()
                outs.append([(otups[c], row[c]) for c in range(len(row))
                             if row[c] != ring.zero])
            if dead:
                continue
            # distribute the outer product into the joint target basis
            partial = [((), sgn)]
            for choices in outs:
                nxt = []
                for pre, coeff in partial:
                    for otup, v in choices:
                        nxt.append((pre + otup, coeff * v))
                partial = nxt
            for otup, coeff in partial:
                c = target.tuple_to_index(d + degree, otup)
                rows[r][c] = rows[r][c] + coeff
                any_nonzero = True
        if any_nonzero:
            blocks[d] = Matrix(ring, rows, len(tups), tdim)
    return GradedMap(source, target, degree, blocks)


def direct_sum_space(ring, parts):
    """Direct sum of labeled graded spaces.

    parts: ordered list of (tag, GradedSpace); labels become (tag, label).
    Returns (sum space, {tag: inclusion map}, {tag: projection map}).
    """
    basis = {}
    for tag, sp in parts:
        for d in sp.degrees():
            basis.setdefault(d, []).extend((tag, l) for l in sp.basis_at(d))
    total = GradedSpace(ring, basis)
    offs = {}
    cursor = {d: 0 for d in basis}
    for tag, sp in parts:
        offs[tag] = {}
        for d in sp.degrees():
            offs[tag][d] = cursor[d]
            cursor[d] += sp.dim(d)
    incs, projs = {}, {}
    for tag, sp in parts:
        ib, pb = {}, {}
        for d in sp.degrees():
            n, big = sp.dim(d), total.dim(d)
            o = offs[tag][d]
            im = [[ring.one if j == o + i else ring.zero for j in range(big)]
                  for i in range(n)]
            pm = [[ring.one if i == o + j else ring.zero for j in range(n)]
                  for i in range(big)]
            ib[d] = Matrix(ring, im, n, big)
            pb[d] = Matrix(ring, pm, big, n)
        incs[tag] = GradedMap(sp, total, 0, ib)
        projs[tag] = GradedMap(total, sp, 0, pb)
    return total, incs, projs
