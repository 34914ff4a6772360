# polynomial.py: multivariate polynomials over the fields of scalars.py.
#
# Used for symbolic verification: an identity of the algebra holds iff the
#   polynomial obtained by plugging in generic coordinates vanishes identically.
#   The arithmetic is sympy's sparse PolyRing over field.sympy_domain(),
#   ordered graded-lexicographically; Polynomial adapts it to FieldScalar
#   operands so algebra elements can mix scalar and generic coordinates.

from collections import namedtuple

from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from scalars import FieldScalar

zero_test = namedtuple('zero_test', 'is_zero witness')

class PolynomialRing(object):
    def __init__(self, field, names):
        self.field = field
        self.names = list(names)
        self.nvars = len(self.names)
        self.ring = PolyRing(self.names, field.sympy_domain(), grlex)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.field == other.field and self.names == other.names

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field.key, tuple(self.names)))

    def zero(self):
        return Polynomial(self, self.ring.zero)

    def one(self):
        return Polynomial(self, self.ring.one)

    def ground(self, value):
        F = self.field
        return F.rep_to_domain(F(value).rep)

    def __call__(self, value):
        if isinstance(value, Polynomial):
            return value
        return Polynomial(self, self.ring.ground_new(self.ground(value)))

    def gen(self, i):
        return Polynomial(self, self.ring.gens[i])

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def scalar(self, c):
        return FieldScalar(self.field, self.field.rep_from_domain(c))

    def monomial_str(self, exps):
        factors = []
        for name, e in zip(self.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(name + "^" + str(e))
        if not factors:
            return "1"
        return "*".join(factors)

class Polynomial(object):
    __slots__ = ("ring", "element")

    def __init__(self, ring, element):
        self.ring = ring
        self.element = element

    # Returns the PolyElement of `other` in self.ring, or None.
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is self.ring or other.ring == self.ring:
                return other.element
            return None
        if isinstance(other, (int, FieldScalar)):
            return self.ring.ring.ground_new(self.ring.ground(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.ring, self.element + other)
    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, -self.element)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.ring, self.element - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.ring, other - self.element)

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar)):
            return Polynomial(self.ring, self.element.mul_ground(self.ring.ground(other)))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(self.ring, self.element * other)
    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, FieldScalar)):
            return self * self.ring.field(other).inverse()
        return NotImplemented

    def __pow__(self, k):
        if k == 0:
            return self.ring.one()
        return Polynomial(self.ring, self.element**k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return not (self.element - other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __bool__(self):
        return bool(self.element)

    def is_constant(self):
        return self.element.is_ground

    def sorted_terms(self):
        return [(exps, self.ring.scalar(c)) for exps, c in self.element.terms()]

    def leading_term(self):
        if not self.element:
            return None
        exps, c = self.element.LT
        return exps, self.ring.scalar(c)

    def total_degree(self):
        if not self.element:
            return -1
        return max(sum(exps) for exps in self.element.itermonoms())

    def evaluate(self, values):
        return self.ring.scalar(self.element(*[self.ring.ground(v) for v in values]))

    def __str__(self):
        if not self.element:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = self.ring.monomial_str(exps)
            if mono == "1":
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append("(" + str(c) + ")*" + mono)
        return " + ".join(pieces)

    def __repr__(self):
        return "Polynomial(" + str(self) + ")"

def is_zero_polynomial(p):
    """Exact zero test. The witness of a nonzero polynomial is its
    leading (graded-lex largest) monomial and coefficient."""
    if isinstance(p, FieldScalar) or isinstance(p, int):
        if not p:
            return zero_test(True, None)
        return zero_test(False, ("1", str(p)))
    lead = p.leading_term()
    if lead is None:
        return zero_test(True, None)
    exps, c = lead
    return zero_test(False, (p.ring.monomial_str(exps), str(c)))
