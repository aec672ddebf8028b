"""Complexes, inner hom-complexes, shifts, duality and homology.

The inner hom C(M,N) follows the right-operator convention: for graded maps
g of degree |g|,

    m1(g)   = g d - (-1)^{|g|} d g            (differential)
    (g (x) h) m2 = g then h                   (no sign)
    C(1,g)  : h -> h g                        (no sign)
    C(f,1)  : h -> (-1)^{|f||h|} f h          (sign from inserting f past h)

C(f,1) and C(1,g) are not written by hand below: they are built from m2 and
the Koszul tensor engine, so every sign has a single source.
"""

from .linalg import Matrix, solve_left
from .graded import (GradedSpace, GradedMap, TensorSpace, tensor_space,
                     unit_space, element_map, tensor_map, compose)


class Complex:
    """A graded space with an exact square-zero differential of degree +1."""

    __slots__ = ("space", "d")

    def __init__(self, space, d, check=True):
        if d.source != space or d.target != space or d.degree != 1:
            raise ValueError("differential must be a degree +1 endomap")
        if check and not d.then(d).is_zero():
            raise ValueError("differential does not square to zero")
        self.space = space
        self.d = d

    @classmethod
    def with_zero_d(cls, space):
        return cls(space, GradedMap.zero(space, space, 1), check=False)

    @property
    def ring(self):
        return self.space.ring

    def __eq__(self, other):
        return (isinstance(other, Complex) and self.space == other.space
                and self.d == other.d)

    def __hash__(self):
        return hash((self.space, self.d))

    def __repr__(self):
        return "Complex(%r)" % (self.space,)


def k_complex(ring):
    """The ground field as a complex: the tensor unit in degree 0."""
    return Complex.with_zero_d(unit_space(ring))


def tensor_complex(*xs):
    """Tensor product of complexes; d = sum of 1..d_i..1 with Koszul signs."""
    sp = tensor_space([x.space for x in xs])
    d = GradedMap.zero(sp, sp, 1)
    for i, x in enumerate(xs):
        parts = [GradedMap.identity(y.space) for y in xs]
        parts[i] = x.d
        d = d + tensor_map(*parts)
    return Complex(sp, d, check=False)


# ---------------------------------------------------------------------------
# inner hom spaces


class HomSpace(GradedSpace):
    """C(M,N) as a graded space; basis = elementary maps (k, i, j)."""

    __slots__ = ("hsource", "htarget", "_triples", "_tripidx")

    def __init__(self, M, N):
        triples = {}
        for k in M.degrees():
            for n in N.degrees():
                d = n - k
                for i in range(M.dim(k)):
                    for j in range(N.dim(n)):
                        triples.setdefault(d, []).append((k, i, j))
        basis = {}
        for d, trs in triples.items():
            basis[d] = tuple((k, M.basis_at(k)[i], N.basis_at(k + d)[j])
                             for (k, i, j) in trs)
        super().__init__(M.ring, basis)
        self.hsource = M
        self.htarget = N
        self._triples = {d: tuple(t) for d, t in triples.items()}
        self._tripidx = {d: {t: i for i, t in enumerate(ts)}
                         for d, ts in self._triples.items()}


_HCACHE = {}


def hom_space(M, N):
    key = (M, N)
    if key not in _HCACHE:
        _HCACHE[key] = HomSpace(M, N)
    return _HCACHE[key]


def hom_to_map(hs, d, vec):
    """Decode a degree-d hom-space vector into the graded map it names."""
    M, N = hs.hsource, hs.htarget
    blocks = {}
    for c, t in enumerate(hs._triples.get(d, ())):
        v = hs.ring.of(vec[c])
        if v == hs.ring.zero:
            continue
        k, i, j = t
        if k not in blocks:
            blocks[k] = [[hs.ring.zero] * N.dim(k + d) for _ in range(M.dim(k))]
        blocks[k][i][j] = blocks[k][i][j] + v
    return GradedMap(M, N, d,
                     {k: Matrix(hs.ring, rows, M.dim(k), N.dim(k + d))
                      for k, rows in blocks.items()})


def map_to_hom(hs, f):
    """Encode a graded map as (degree, hom-space vector)."""
    if f.source != hs.hsource or f.target != hs.htarget:
        raise ValueError("map does not live in this hom space")
    d = f.degree
    vec = [hs.ring.zero] * hs.dim(d)
    for k, m in f.blocks.items():
        for i in range(m.rows):
            for j in range(m.cols):
                if m.data[i][j] != hs.ring.zero:
                    vec[hs._tripidx[d][(k, i, j)]] = m.data[i][j]
    return d, vec


def hom_element(hs, f):
    """A graded map encoded as an element (a map from the tensor unit)."""
    d, vec = map_to_hom(hs, f)
    return element_map(hs, d, vec)


def _flat_tuple(space, d, i):
    # basis element as a tuple of per-factor (degree, index) pairs, so that
    # evaluation and coevaluation survive tensor flattening
    if isinstance(space, TensorSpace):
        return space.index_to_tuple(d)[i]
    return ((d, i),)


def ev_map(hs):
    """Evaluation M (x) C(M,N) -> N, (x (x) g) -> (x)g, sign-free."""
    M, N = hs.hsource, hs.htarget
    src = tensor_space([M, hs])
    blocks = {}
    for d in src.degrees():
        tups = src.index_to_tuple(d)
        tdim = N.dim(d)
        if tdim == 0:
            continue
        rows = [[hs.ring.zero] * tdim for _ in tups]
        hit = False
        for r, tup in enumerate(tups):
            dg, c = tup[-1]
            mpart = tup[:-1]
            k = sum(dd for dd, _ in mpart)
            i = (M.tuple_to_index(k, mpart) if isinstance(M, TensorSpace)
                 else mpart[0][1])
            kk, ii, j = hs._triples[dg][c]
            if kk == k and ii == i:
                rows[r][j] = hs.ring.one
                hit = True
        if hit:
            blocks[d] = Matrix(hs.ring, rows, len(tups), tdim)
    return GradedMap(src, N, 0, blocks)


def coev_map(X, Y):
    """Coevaluation Y -> C(X, X (x) Y), y -> (x -> x (x) y), sign-free."""
    XY = tensor_space([X, Y])
    hs = hom_space(X, XY)
    blocks = {}
    for dy in Y.degrees():
        rows = [[hs.ring.zero] * hs.dim(dy) for _ in range(Y.dim(dy))]
        for iy in range(Y.dim(dy)):
            ytup = _flat_tuple(Y, dy, iy)
            for k in X.degrees():
                for ix in range(X.dim(k)):
                    tup = _flat_tuple(X, k, ix) + ytup
                    jt = (XY.tuple_to_index(k + dy, tup)
                          if isinstance(XY, TensorSpace) else tup[0][1])
                    rows[iy][hs._tripidx[dy][(k, ix, jt)]] = hs.ring.one
        blocks[dy] = Matrix(hs.ring, rows, Y.dim(dy), hs.dim(dy))
    return GradedMap(Y, hs, 0, blocks)


def m2_map(h1, h2):
    """Composition C(M,N) (x) C(N,P) -> C(M,P) of elementary maps, sign-free."""
    if h1.htarget != h2.hsource:
        raise ValueError("inner complexes do not match")
    out = hom_space(h1.hsource, h2.htarget)
    src = tensor_space([h1, h2])
    blocks = {}
    for d in src.degrees():
        tups = src.index_to_tuple(d)
        tdim = out.dim(d)
        if tdim == 0:
            continue
        rows = [[out.ring.zero] * tdim for _ in tups]
        hit = False
        for r, ((d1, c1), (d2, c2)) in enumerate(tups):
            k, i, j = h1._triples[d1][c1]
            k2, i2, j2 = h2._triples[d2][c2]
            if k2 == k + d1 and i2 == j:
                rows[r][out._tripidx[d][(k, i, j2)]] = out.ring.one
                hit = True
        if hit:
            blocks[d] = Matrix(out.ring, rows, len(tups), tdim)
    return GradedMap(src, out, 0, blocks)


def hom_post(hs, g):
    """C(1,g): C(M,N) -> C(M,N'), h -> h then g."""
    h2 = hom_space(hs.htarget, g.target)
    return compose(tensor_map(GradedMap.identity(hs), hom_element(h2, g)),
                   m2_map(hs, h2))


def hom_pre(hs, f):
    """C(f,1): C(M,N) -> C(M',N), h -> (-1)^{|f||h|} f then h."""
    h1 = hom_space(f.source, hs.hsource)
    return compose(tensor_map(hom_element(h1, f), GradedMap.identity(hs)),
                   m2_map(h1, hs))


def compose_m2(f, g):
    """Left-to-right composite of two hom-complex elements (graded maps)."""
    return f.then(g)


def hom_complex(X, Y):
    """The inner hom complex (C(M,N), m1)."""
    hs = hom_space(X.space, Y.space)
    m1 = hom_post(hs, Y.d) - hom_pre(hs, X.d)
    return Complex(hs, m1)


def curry(g, X, Y):
    """The adjunct Y -> C(X,Z) of g: X (x) Y -> Z (coev then C(1,g))."""
    return coev_map(X, Y).then(hom_post(hom_space(X, tensor_space([X, Y])), g))


def uncurry(f, X):
    """The adjunct X (x) Y -> Z of f: Y -> C(X,Z) ((1 (x) f) then ev)."""
    hs = f.target
    return tensor_map(GradedMap.identity(X), f).then(ev_map(hs))


def is_chain_map(f, dX, dY):
    """True iff m1(f) = f dY - (-1)^{|f|} dX f vanishes."""
    sgn = -1 if f.degree % 2 else 1
    return (f.then(dY) - dX.then(f).scale(sgn)).is_zero()


# ---------------------------------------------------------------------------
# shifts


def shift_space(space, n):
    """X[n] with (X[n])^k = X^{k+n}; labels preserved."""
    return GradedSpace(space.ring, {d - n: space.basis[d] for d in space.basis})


def shift_iso(space, n):
    """x -> x s^n: the degree -n identity-block carrier X -> X[n]."""
    tgt = shift_space(space, n)
    return GradedMap(space, tgt, -n,
                     {d: Matrix.identity(space.ring, space.dim(d))
                      for d in space.degrees()})


def shift_map(f, n):
    """f^[n] = (-1)^{|f| n} s^{-n} f s^{n} : X[n] -> Y[n]."""
    sx = shift_iso(f.source, n)
    sy = shift_iso(f.target, n)
    sgn = -1 if (f.degree * n) % 2 else 1
    return compose(sx.inverse(), f, sy).scale(sgn)


def shift_complex(X, n):
    return Complex(shift_space(X.space, n), shift_map(X.d, n), check=False)


def suspend(X):
    """sX = X[1] for a complex X."""
    return shift_complex(X, 1)


# ---------------------------------------------------------------------------
# duality


def dual_complex(X):
    """DX = (C(M,k), -C(d,1)); degree n of DX is dual to degree -n of X."""
    hs = hom_space(X.space, unit_space(X.ring))
    return Complex(hs, -hom_pre(hs, X.d))


def dual_map_of(f, DX=None, DY=None):
    """D(f) = C(f,1): DY -> DX for f: X -> Y (complexes or spaces)."""
    hs = DY.space if DY is not None else hom_space(f.target, unit_space(f.source.ring))
    return hom_pre(hs, f)


def double_dual_embedding(X):
    """x -> (xi -> (-1)^{|x||xi|} (x)xi), a chain isomorphism for finite X."""
    DX = dual_complex(X)
    DDX = dual_complex(DX)
    ring = X.ring
    blocks = {}
    for d in X.space.degrees():
        n = X.space.dim(d)
        cols = DDX.space.dim(d)
        rows = [[ring.zero] * cols for _ in range(n)]
        for i in range(n):
            # xi = elementary (d, i, 0) in DX at degree -d; pairing sign (-1)^{d*d}
            c = DX.space._tripidx[-d][(d, i, 0)]
            j = DDX.space._tripidx[d][(-d, c, 0)]
            rows[i][j] = ring.of(-1 if (d * d) % 2 else 1)
        blocks[d] = Matrix(ring, rows, n, cols)
    return GradedMap(X.space, DDX.space, 0, blocks)


# ---------------------------------------------------------------------------
# homology


class Homology:
    """Chosen splitting of a complex over a field.

    space: graded space of classes (labels h0, h1, ...);
    section: space -> X picking cycle representatives;
    retraction: X -> space, kills boundaries, section then retraction = id.
    """

    __slots__ = ("complex", "space", "section", "retraction")

    def __init__(self, cx, space, section, retraction):
        self.complex = cx
        self.space = space
        self.section = section
        self.retraction = retraction

    def dim(self, d):
        return self.space.dim(d)

    def class_of(self, d, vec):
        """Homology class of a cycle, as a row vector over the class basis."""
        return self.retraction.apply(d, vec)[1]


def homology(X):
    from .linalg import rref, nullspace_left, rank, solve_right
    ring = X.ring
    if not ring.is_field:
        raise TypeError("homology needs field scalars, got %s" % ring.name)
    sp = X.space
    hbasis, secb, retb = {}, {}, {}
    for d in sp.degrees():
        n = sp.dim(d)
        a = X.d.block(d)
        zm = nullspace_left(a)                       # cycles
        prev = X.d.block(d - 1)                      # boundaries
        bnd, _ = rref(prev)
        brows = [bnd.data[i] for i in range(rank(prev))]
        # extend boundary basis by cycles to a basis of Z, then by anything to X
        chosen = [list(r) for r in brows]
        hreps = []
        for i in range(zm.rows):
            cand = chosen + [list(zm.data[i])]
            m = Matrix(ring, cand, len(cand), n)
            if rank(m) == len(cand):
                chosen = cand
                hreps.append(list(zm.data[i]))
        comp = []
        for i in range(n):
            row = [ring.one if j == i else ring.zero for j in range(n)]
            cand = chosen + [row]
            m = Matrix(ring, cand, len(cand), n)
            if rank(m) == len(cand):
                chosen = cand
                comp.append(row)
        if not hreps:
            continue
        h = len(hreps)
        hbasis[d] = tuple("h%d" % i for i in range(h))
        secb[d] = Matrix(ring, hreps, h, n)
        # retraction: coordinates in the (B | H | C) basis, keep the H block
        full = Matrix(ring, brows + hreps + comp, n, n)
        inv = solve_right(full, Matrix.identity(ring, n))
        nb = len(brows)
        retb[d] = Matrix(ring, [[inv.data[i][nb + j] for j in range(h)]
                                for i in range(n)], n, h)
    hspace = GradedSpace(ring, hbasis)
    section = GradedMap(hspace, sp, 0, secb)
    retraction = GradedMap(sp, hspace, 0,
                           {d: m for d, m in retb.items() if d in hbasis})
    return Homology(X, hspace, section, retraction)


def induced_map(hX, hY, f):
    """H(f) for a chain map f between the underlying complexes."""
    return compose(hX.section, f, hY.retraction)


def homotopic(X, Y, f, g):
    """f ~ g for chain maps between complexes over a field."""
    for h in (f, g):
        if not is_chain_map(h, X.d, Y.d):
            raise ValueError("homotopic() requires chain maps")
    hX, hY = homology(X), homology(Y)
    return induced_map(hX, hY, f) == induced_map(hX, hY, g)


def find_homotopy(X, Y, f):
    """Some h with m1(h) = f, or None; f need not be a chain map."""
    hc = hom_complex(X, Y)
    d, vec = map_to_hom(hc.space, f)
    m = hc.d.block(d - 1)
    b = Matrix(X.ring, [vec], 1, hc.space.dim(d))
    sol = solve_left(m, b)
    if sol is None:
        return None
    return hom_to_map(hc.space, d - 1, list(sol.data[0]))
