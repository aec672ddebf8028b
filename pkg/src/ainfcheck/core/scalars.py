"""Exact scalar rings: rationals, prime fields, and a reduced integer mode.

A ring is a small descriptor object; elements are plain values with exact
dunder arithmetic (fractions.Fraction for Q and Z, a residue class for F_p).
All comparisons downstream are exact equality in canonical form.
"""

from fractions import Fraction


class FpElement:
    """Residue in [0, p); arithmetic mod the prime p."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed characteristics %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            return FpElement(other.numerator, self.p) / FpElement(other.denominator, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else FpElement(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(self.val * pow(o.val, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o / self

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self.val == o.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d" % self.val


class PrimeField:
    """Descriptor for F_p.  `of` coerces ints, Fractions and digit strings."""

    is_field = True

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    @property
    def char(self):
        return self.p

    @property
    def name(self):
        return "fp:%d" % self.p

    def of(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("element of F_%d used in F_%d" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return FpElement(x, self.p)
        if isinstance(x, Fraction):
            return FpElement(x.numerator, self.p) / FpElement(x.denominator, self.p)
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise TypeError("cannot coerce %r into %s" % (x, self.name))

    def to_str(self, x):
        return str(self.of(x).val)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


class Rationals:
    is_field = True
    char = 0
    name = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        if isinstance(x, (Fraction, int)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def to_str(self, x):
        return str(Fraction(x))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "Rationals()"


class Integers:
    """Reduced mode: exact integer coefficients, no division.

    Only the purely algebraic identities (signs, b**2 = 0, functor equations)
    are meaningful here; homology and homotopy operations refuse this ring.
    """

    is_field = False
    char = 0
    name = "z"
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        v = Fraction(x) if isinstance(x, (int, str)) else x
        if not isinstance(v, Fraction) or v.denominator != 1:
            raise TypeError("cannot coerce %r into Z" % (x,))
        return v

    def to_str(self, x):
        return str(self.of(x))

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("z")

    def __repr__(self):
        return "Integers()"


QQ = Rationals()
ZZ = Integers()


def parse_ring(name):
    """Parse a ring descriptor string: "q", "z" or "fp:<prime>"."""
    if name == "q":
        return QQ
    if name == "z":
        return ZZ
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError("unknown ring %r" % (name,))
