"""Dense exact matrices over a scalar ring, with Gauss-Jordan solvers.

Row convention throughout the package: vectors are rows, maps act on the
right, so "f then g" is the plain product mat(f) @ mat(g).
"""


class Matrix:
    """Immutable rows x cols matrix with exact entries."""

    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring, data, rows=None, cols=None):
        data = tuple(tuple(ring.of(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("ragged matrix data")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zero(cls, ring, rows, cols):
        z = ring.zero
        return cls(ring, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls(ring, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __add__(self, other):
        self._check_shape(other)
        return Matrix(self.ring, [[a + b for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.data, other.data)],
                      self.rows, self.cols)

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix(self.ring, [[a - b for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.data, other.data)],
                      self.rows, self.cols)

    def __neg__(self):
        return Matrix(self.ring, [[-a for a in row] for row in self.data],
                      self.rows, self.cols)

    def scale(self, c):
        c = self.ring.of(c)
        return Matrix(self.ring, [[c * a for a in row] for row in self.data],
                      self.rows, self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        z = self.ring.zero
        out = []
        for i in range(self.rows):
            ri = self.data[i]
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = ri[k]
                    if a != z:
                        acc = acc + a * other.data[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, out, self.rows, other.cols)

    def transpose(self):
        return Matrix(self.ring, [[self.data[i][j] for i in range(self.rows)]
                                  for j in range(self.cols)], self.cols, self.rows)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.ring, [ra + rb for ra, rb in zip(self.data, other.data)],
                      self.rows, self.cols + other.cols)

    def row(self, i):
        return self.data[i]

    def is_zero(self):
        z = self.ring.zero
        return all(a == z for row in self.data for a in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ring == other.ring
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch %dx%d vs %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))

    def __repr__(self):
        return "Matrix(%dx%d over %s)" % (self.rows, self.cols, self.ring.name)


def rref(m):
    """Reduced row echelon form.  Returns (R, pivot column list).

    Requires a field (exact division by pivots).
    """
    if not m.ring.is_field:
        raise TypeError("rref needs field scalars, got %s" % m.ring.name)
    z = m.ring.zero
    data = [list(row) for row in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        pr = None
        for i in range(r, m.rows):
            if data[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        inv = m.ring.one / data[r][c]
        data[r] = [inv * x for x in data[r]]
        for i in range(m.rows):
            if i != r and data[i][c] != z:
                f = data[i][c]
                data[i] = [x - f * y for x, y in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(m.ring, data, m.rows, m.cols), pivots


def rank(m):
    return len(rref(m)[1])


def solve_right(a, b):
    """One solution X of A @ X = B, or None.  Shapes: a (m x n), b (m x k)."""
    if a.rows != b.rows:
        raise ValueError("row mismatch in solve")
    aug, pivots = rref(a.hstack(b))
    n = a.cols
    if any(p >= n for p in pivots):
        return None
    z = a.ring.zero
    out = [[z] * b.cols for _ in range(n)]
    for r, c in enumerate(pivots):
        out[c] = list(aug.data[r][n:])
    return Matrix(a.ring, out, n, b.cols)


def solve_left(a, b):
    """One solution X of X @ A = B, or None.  Shapes: a (n x m), b (k x m)."""
    xt = solve_right(a.transpose(), b.transpose())
    return None if xt is None else xt.transpose()


def nullspace_left(a):
    """Matrix whose rows span { v : v @ A = 0 }."""
    r, pivots = rref(a.transpose())
    n = a.rows
    free = [c for c in range(n) if c not in pivots]
    z, o = a.ring.zero, a.ring.one
    rows = []
    for c in free:
        v = [z] * n
        v[c] = o
        for i, p in enumerate(pivots):
            v[p] = -r.data[i][c]
        rows.append(v)
    return Matrix(a.ring, rows, len(free), n)


def row_space_basis(a):
    """Rows of the reduced echelon form that are nonzero (a canonical basis)."""
    r, pivots = rref(a)
    return Matrix(a.ring, [r.data[i] for i in range(len(pivots))], len(pivots), a.cols)
