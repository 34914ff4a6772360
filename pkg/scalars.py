# scalars.py: exact fields and their elements.
#
# Supported fields: the rationals Q, prime fields GF(p), quadratic
#   extensions (by default F[w] with w^2+w+1=0), cubic radical extensions
#   F[c] with c^3=alpha, and rational function fields F(t). Towers of these
#   are allowed, e.g. GF(3)(t)[c] with c^3 = t.
#
# Every field works on canonical "reps" (hashable, immutable):
#   Q: sympy QQ elements; GF(p): ints in [0,p); extensions: tuples of base
#   reps (low degree first); F(t): (numerator, denominator) tuples of base
#   reps with monic denominator and gcd 1.
# FieldScalar wraps (field, rep) and carries the operator overloads.
# Every field also has a sympy domain (QQ, GF(p), or a ScalarDomain over the
#   field itself for towers); sympy's dense univariate routines and
#   DomainMatrix do the polynomial and matrix arithmetic over it.

import itertools
import logging
import random

import sympy as sp
from sympy.polys.domains import QQ, GF
from sympy.polys.domains.field import Field as DomainField
from sympy.polys.domains.simpledomain import SimpleDomain
from sympy.polys.densebasic import dup_strip, dup_LC
from sympy.polys.densearith import dup_add, dup_mul, dup_sqr, dup_rem, dup_quo, dup_quo_ground
from sympy.polys.densetools import dup_monic
from sympy.polys.euclidtools import dup_half_gcdex, dup_invert
from sympy.polys.polyerrors import CoercionFailed, NotInvertible
from sympy.ntheory import sqrt_mod, nthroot_mod

import compalg_param_funcs as par
from compalg_errors import NonPrimeModulus, ReducibleExtension, CharThree, MixedFields, \
    UnsupportedField, NotInSubfield, SchemaViolation

logger = logging.getLogger(__name__)

thismodule = __name__
par.initialize_param(par.glb_param("INT", thismodule, "finite_root_search_cap", 100000))

class FieldScalar(object):
    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    # Returns the rep of `other` in self.field, or None if `other` cannot be coerced.
    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.field is self.field or other.field == self.field:
                return other.rep
            try:
                return self.field(other).rep
            except MixedFields:
                return None
        if isinstance(other, int):
            return self.field.rep_from_int(other)
        return None

    def __add__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.add(self.rep, r))
    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.sub(self.rep, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.sub(r, self.rep))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.mul(self.rep, r))
    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.mul(self.rep, self.field.inv(r)))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldScalar(self.field, self.field.mul(r, self.field.inv(self.rep)))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.rep))

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        F = self.field
        base = self.rep
        if k < 0:
            base = F.inv(base)
            k = -k
        result = F.one_rep
        while k > 0:
            if k & 1:
                result = F.mul(result, base)
            base = F.mul(base, base)
            k >>= 1
        return FieldScalar(F, result)

    def inverse(self):
        return FieldScalar(self.field, self.field.inv(self.rep))

    def __eq__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return self.rep == r

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field.key, self.rep))

    def __bool__(self):
        return not self.field.is_zero(self.rep)

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return "FieldScalar(" + self.field.name() + ", " + str(self) + ")"


class Field(object):
    characteristic = 0
    symbol = None

    # Step 1: identity. Two fields are equal when their keys agree.
    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Field(" + self.name() + ")"

    # Step 2: element construction.
    def zero(self):
        return FieldScalar(self, self.zero_rep)

    def one(self):
        return FieldScalar(self, self.one_rep)

    def __call__(self, value):
        if isinstance(value, FieldScalar):
            if value.field is self or value.field == self:
                return value
            return FieldScalar(self, self.embed_rep(value))
        if isinstance(value, int):
            return FieldScalar(self, self.rep_from_int(value))
        if isinstance(value, str):
            return self.parse(value)
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return FieldScalar(self, self.from_sympy(sp.Rational(int(value.numerator), int(value.denominator))))
        return FieldScalar(self, self.from_sympy(sp.sympify(value)))

    def embed_rep(self, value):
        raise MixedFields("cannot convert an element of " + value.field.name() + " into " + self.name())

    # Step 3: parsing and printing (canonical strings through sympy).
    def sympy_symbols(self):
        return dict((name, sp.Symbol(name)) for name in self.symbols())

    def parse(self, text):
        try:
            expr = sp.sympify(text, locals=self.sympy_symbols())
        except (sp.SympifyError, SyntaxError, TypeError) as err:
            raise SchemaViolation("cannot parse scalar \"" + str(text) + "\" over " + self.name() + ": " + str(err))
        return FieldScalar(self, self.from_sympy(expr))

    def format(self, x):
        return str(self.to_sympy(x.rep))

    def symbols(self):
        return ()

    # Step 4: finiteness, enumeration and randomness.
    def is_finite(self):
        return self.order() is not None

    def order(self):
        return None

    def elements(self):
        raise UnsupportedField(self.name() + " is infinite; cannot enumerate its elements")

    def random_nonzero(self, rng):
        while True:
            x = self.random_element(rng)
            if x:
                return x

    # Step 5: roots. quadratic_root(b,c) returns a root of x^2+bx+c, or None.
    def sqrt(self, a):
        return self.quadratic_root(0, -self(a))

    def _brute_force_root(self, predicate):
        if self.order() > par.parval_from_str("scalars::finite_root_search_cap"):
            raise UnsupportedField(self.name() + " is too large for an exhaustive root search")
        for x in self.elements():
            if predicate(x):
                return x
        return None

    # Step 6: towers. Coordinates over a subfield appearing in the tower of self.
    def tower(self):
        return [self]

    def degree_over(self, sub):
        if sub == self:
            return 1
        raise NotInSubfield(sub.name() + " is not a subfield of finite index in " + self.name())

    def coordinates_over(self, sub, x):
        if sub == self:
            return [self(x)]
        raise NotInSubfield(sub.name() + " is not a subfield of finite index in " + self.name())

    def from_coordinates_over(self, sub, coords):
        if sub == self:
            return self(coords[0])
        raise NotInSubfield(sub.name() + " is not a subfield of finite index in " + self.name())

    def project(self, sub, x):
        if sub == self:
            return self(x)
        raise NotInSubfield(sub.name() + " is not a subfield of " + self.name())

    # Step 7: raw arithmetic used by the Jacobi kernel: (lift, is_zero).
    def fast_arithmetic(self):
        return (lambda x: x, lambda v: not v)

    # Step 8: the sympy domain carrying matrices and univariate polynomials.
    def sympy_domain(self):
        domain = getattr(self, "_sympy_domain", None)
        if domain is None:
            domain = self._sympy_domain = self.make_sympy_domain()
        return domain

    def make_sympy_domain(self):
        return ScalarDomain(self)

    def rep_to_domain(self, a):
        return FieldScalar(self, a)

    def rep_from_domain(self, a):
        return self(a).rep


class ScalarDomain(DomainField, SimpleDomain):
    """sympy domain whose elements are the FieldScalars of `field`.

    Used for extension and rational function towers, where sympy has no
    ground domain of its own."""

    dtype = FieldScalar
    has_assoc_Ring = False
    has_assoc_Field = True

    def __init__(self, field):
        self.field = field
        self.rep = field.name()
        self.zero = field.zero()
        self.one = field.one()

    def __eq__(self, other):
        return isinstance(other, ScalarDomain) and self.field == other.field

    def __hash__(self):
        return hash((self.__class__.__name__, self.field.key))

    def new(self, value):
        return self.convert(value)

    def convert(self, element, base=None):
        try:
            return self.field(element)
        except (MixedFields, SchemaViolation) as err:
            raise CoercionFailed(str(err))

    def convert_from(self, element, base):
        return self.convert(element)

    def to_sympy(self, a):
        return self.field.to_sympy(a.rep)

    def from_sympy(self, a):
        return FieldScalar(self.field, self.field.from_sympy(a))

    def characteristic(self):
        return self.field.characteristic

    def get_field(self):
        return self

    def gcd(self, a, b):
        return self.one if (a or b) else self.zero

    def lcm(self, a, b):
        return a * b

    def is_positive(self, a):
        return False

    def is_negative(self, a):
        return False


class RationalField(Field):
    characteristic = 0

    def __init__(self):
        self.key = ("Q",)
        self.zero_rep = QQ(0)
        self.one_rep = QQ(1)

    def name(self):
        return "Q"

    def descriptor(self):
        return {"kind": "Q"}

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in Q")
        return self.one_rep / a

    def is_zero(self, a):
        return not a

    def rep_from_int(self, n):
        return QQ(n)

    def to_sympy(self, a):
        return sp.Rational(int(a.numerator), int(a.denominator))

    def from_sympy(self, expr):
        try:
            r = sp.Rational(expr)
        except (TypeError, ValueError):
            raise SchemaViolation("\"" + str(expr) + "\" is not a rational number")
        return QQ(int(r.p), int(r.q))

    def make_sympy_domain(self):
        return QQ

    def rep_to_domain(self, a):
        return a

    def rep_from_domain(self, a):
        return QQ.convert(a)

    def random_element(self, rng):
        return FieldScalar(self, QQ(rng.randint(-9, 9), rng.randint(1, 9)))

    def small_elements(self, h):
        out = [self.zero()]
        for k in range(1, h + 1):
            out += [self(k), self(-k)]
        return out

    @staticmethod
    def _exact_root(q, k):
        num = int(q.numerator)
        den = int(q.denominator)
        sign = 1
        if num < 0:
            if k % 2 == 0:
                return None
            sign = -1
            num = -num
        rn, exact_n = sp.integer_nthroot(num, k)
        rd, exact_d = sp.integer_nthroot(den, k)
        if not (exact_n and exact_d):
            return None
        return QQ(sign * int(rn), int(rd))

    def quadratic_root(self, b, c):
        b = self(b).rep
        c = self(c).rep
        disc = b * b - 4 * c
        s = self._exact_root(disc, 2)
        if s is None:
            return None
        return FieldScalar(self, (-b + s) / 2)

    def cube_root(self, a):
        r = self._exact_root(self(a).rep, 3)
        if r is None:
            return None
        return FieldScalar(self, r)


class PrimeField(Field):
    def __init__(self, p):
        if not isinstance(p, int) or p < 2 or not sp.isprime(p):
            raise NonPrimeModulus("modulus " + str(p) + " is not prime")
        self.p = p
        self.characteristic = p
        self.key = ("GF", p)
        self.zero_rep = 0
        self.one_rep = 1

    def name(self):
        return "GF(" + str(self.p) + ")"

    def descriptor(self):
        return {"kind": "GF", "p": self.p}

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in " + self.name())
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a == 0

    def rep_from_int(self, n):
        return n % self.p

    def to_sympy(self, a):
        return sp.Integer(a)

    def from_sympy(self, expr):
        try:
            r = sp.Rational(expr)
        except (TypeError, ValueError):
            raise SchemaViolation("\"" + str(expr) + "\" is not an element of " + self.name())
        den = int(r.q) % self.p
        if den == 0:
            raise SchemaViolation("denominator of \"" + str(expr) + "\" vanishes in " + self.name())
        return (int(r.p) * self.inv(den)) % self.p

    def order(self):
        return self.p

    def elements(self):
        return [FieldScalar(self, a) for a in range(self.p)]

    def random_element(self, rng):
        return FieldScalar(self, rng.randrange(self.p))

    def small_elements(self, h):
        return self.elements()

    def quadratic_root(self, b, c):
        b = self(b).rep
        c = self(c).rep
        p = self.p
        if p == 2:
            return self._brute_force_root(lambda x: x * x + b * x + c == 0)
        disc = (b * b - 4 * c) % p
        roots = sqrt_mod(disc, p, all_roots=True)
        if not roots:
            return None
        inv2 = self.inv(2)
        return FieldScalar(self, min(((-b + int(s)) * inv2) % p for s in roots))

    def cube_root(self, a):
        a = self(a).rep
        p = self.p
        if a == 0 or p <= 3:
            # Frobenius is the identity on GF(2) and GF(3).
            return FieldScalar(self, a)
        roots = nthroot_mod(a, 3, p, all_roots=True)
        if not roots:
            return None
        return FieldScalar(self, min(int(r) for r in roots))

    def fast_arithmetic(self):
        p = self.p
        return (lambda x: x.rep, lambda v: v % p == 0)

    def make_sympy_domain(self):
        return GF(self.p, symmetric=False)

    def rep_to_domain(self, a):
        return self.sympy_domain()(a)

    def rep_from_domain(self, a):
        return int(self.sympy_domain().to_int(a)) % self.p


# Step 9: univariate polynomials over a field F. Coefficient sequences hold
#   reps of F, low degree first; sympy's dup lists run over F.sympy_domain().
def _to_dup(F, coeffs):
    return dup_strip([F.rep_to_domain(c) for c in reversed(coeffs)])

def _from_dup(F, f, length=0):
    coeffs = [F.rep_from_domain(c) for c in reversed(f)]
    return tuple(coeffs + [F.zero_rep] * (length - len(coeffs)))

def _pcompose_sympy(F, a, sym):
    return sp.Add(*[F.to_sympy(c) * sym**i for i, c in enumerate(a) if not F.is_zero(c)])


def fresh_symbol(prefix, base):
    used = set(base.symbols())
    if prefix not in used:
        return prefix
    k = 1
    while prefix + str(k) in used:
        k += 1
    return prefix + str(k)


class ExtensionField(Field):
    # Simple algebraic extension base[x]/(x^n + m_{n-1}x^{n-1} + ... + m_0).
    # kind "ext2" (n=2) or "ext3" (cubic radical x^3 - alpha).
    def __init__(self, base, modulus, symbol=None, kind=None):
        self.base = base
        self.modulus = tuple(base(m).rep for m in modulus)
        self.degree = len(self.modulus)
        self.kind = kind if kind is not None else ("ext2" if self.degree == 2 else "ext3")
        if symbol is None:
            symbol = fresh_symbol("w" if self.kind == "ext2" else "c", base)
        if symbol in base.symbols():
            raise SchemaViolation("symbol \"" + symbol + "\" is already used in " + base.name())
        self.symbol = symbol
        self.characteristic = base.characteristic
        self.key = ("ext", base.key, self.modulus, symbol)
        self.zero_rep = tuple([base.zero_rep] * self.degree)
        self.one_rep = tuple([base.one_rep] + [base.zero_rep] * (self.degree - 1))
        self.modulus_dup = _to_dup(base, self.modulus + (base.one_rep,))

        # Irreducibility by trial root search (degrees 2 and 3 only).
        if self.degree == 2:
            root = base.quadratic_root(FieldScalar(base, self.modulus[1]), FieldScalar(base, self.modulus[0]))
        elif self.degree == 3 and base.is_zero(self.modulus[1]) and base.is_zero(self.modulus[2]):
            root = base.cube_root(-FieldScalar(base, self.modulus[0]))
        else:
            raise UnsupportedField("only quadratic and cubic radical extensions are supported")
        if root is not None:
            raise ReducibleExtension("extension polynomial has the root " + str(root) + " in " + base.name())
        logger.debug("built extension field %s", self.name())

    def name(self):
        return self.base.name() + "[" + self.symbol + "]"

    def alpha(self):
        return -FieldScalar(self.base, self.modulus[0])

    def descriptor(self):
        desc = {"kind": self.kind, "base": self.base.descriptor()}
        if self.kind == "ext3":
            desc["alpha"] = str(self.alpha())
            default_symbol = fresh_symbol("c", self.base)
        else:
            if self.modulus != (self.base.one_rep, self.base.one_rep):
                desc["minpoly"] = [str(FieldScalar(self.base, m)) for m in self.modulus]
            default_symbol = fresh_symbol("w", self.base)
        if self.symbol != default_symbol:
            desc["symbol"] = self.symbol
        return desc

    def symbols(self):
        return self.base.symbols() + (self.symbol,)

    def gen(self):
        B = self.base
        return FieldScalar(self, tuple([B.zero_rep, B.one_rep] + [B.zero_rep] * (self.degree - 2)))

    def tower(self):
        return [self] + self.base.tower()

    # reduce an arbitrary-length coefficient list modulo the extension polynomial
    def reduce(self, coeffs):
        B = self.base
        return _from_dup(B, dup_rem(_to_dup(B, coeffs), self.modulus_dup, B.sympy_domain()), self.degree)

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        K = B.sympy_domain()
        prod = dup_mul(_to_dup(B, a), _to_dup(B, b), K)
        return _from_dup(B, dup_rem(prod, self.modulus_dup, K), self.degree)

    def inv(self, a):
        B = self.base
        if self.is_zero(a):
            raise ZeroDivisionError("division by zero in " + self.name())
        try:
            s = dup_invert(_to_dup(B, a), self.modulus_dup, B.sympy_domain())
        except NotInvertible:
            raise ZeroDivisionError("non-invertible element in " + self.name())
        return _from_dup(B, s, self.degree)

    def is_zero(self, a):
        B = self.base
        for x in a:
            if not B.is_zero(x):
                return False
        return True

    def rep_from_int(self, n):
        return tuple([self.base.rep_from_int(n)] + [self.base.zero_rep] * (self.degree - 1))

    def embed_rep(self, value):
        b = self.base(value).rep
        return tuple([b] + [self.base.zero_rep] * (self.degree - 1))

    def to_sympy(self, a):
        return _pcompose_sympy(self.base, a, sp.Symbol(self.symbol))

    def from_sympy(self, expr):
        sym = sp.Symbol(self.symbol)
        expr = sp.sympify(expr)
        if not expr.has(sym):
            return self.embed_rep(FieldScalar(self.base, self.base.from_sympy(expr)))
        try:
            poly = sp.Poly(expr, sym)
        except sp.PolynomialError:
            raise SchemaViolation("\"" + str(expr) + "\" is not a polynomial in " + self.symbol)
        coeffs = [self.base.from_sympy(c) for c in reversed(poly.all_coeffs())]
        return self.reduce(coeffs)

    def order(self):
        q = self.base.order()
        if q is None:
            return None
        return q**self.degree

    def elements(self):
        base_reps = [x.rep for x in self.base.elements()]
        out = []
        for combo in itertools.product(base_reps, repeat=self.degree):
            out.append(FieldScalar(self, tuple(reversed(combo))))
        return out

    def random_element(self, rng):
        return FieldScalar(self, tuple(self.base.random_element(rng).rep for i in range(self.degree)))

    def small_elements(self, h):
        base_reps = [x.rep for x in self.base.small_elements(h)]
        return [FieldScalar(self, tuple(reversed(combo)))
                for combo in itertools.product(base_reps, repeat=self.degree)]

    def quadratic_root(self, b, c):
        b = self(b)
        c = self(c)
        if self.is_finite():
            return self._brute_force_root(lambda x: x * x + b * x + c == 0)
        if self.characteristic == 2:
            raise UnsupportedField("quadratic roots over " + self.name() + " are not supported")
        s = self._sqrt_infinite(b * b - 4 * c)
        if s is None:
            return None
        return (s - b) / 2

    # Square roots in an infinite quadratic extension: write d = p + q*delta with
    # delta = 2x + m1, delta^2 = D in the base, and solve over the base.
    def _sqrt_infinite(self, d):
        if self.degree != 2:
            raise UnsupportedField("square roots over " + self.name() + " are not supported")
        B = self.base
        m0 = FieldScalar(B, self.modulus[0])
        m1 = FieldScalar(B, self.modulus[1])
        D = m1 * m1 - 4 * m0
        delta = 2 * self.gen() + self(m1)
        d0 = FieldScalar(B, d.rep[0])
        d1 = FieldScalar(B, d.rep[1])
        p = d0 - d1 * m1 / 2
        q = d1 / 2
        if not q:
            r = B.sqrt(p)
            if r is not None:
                return self(r)
            r = B.sqrt(p / D)
            if r is not None:
                return self(r) * delta
            return None
        r = B.sqrt(p * p - q * q * D)
        if r is None:
            return None
        for sign in (1, -1):
            x = B.sqrt((p + sign * r) / 2)
            if x is not None and x:
                return self(x) + self(q / (2 * x)) * delta
        return None

    def cube_root(self, a):
        a = self(a)
        if self.is_finite():
            return self._brute_force_root(lambda x: x * x * x == a)
        if self.characteristic == 3 and self.kind == "ext3" and hasattr(self.base, "p_decompose"):
            return self._cube_root_char3(a)
        raise UnsupportedField("cube roots over " + self.name() + " are not supported")

    # In characteristic 3, (x0 + x1 c + x2 c^2)^3 = x0^3 + x1^3 alpha + x2^3 alpha^2 lies
    # in the base, and {1, alpha, alpha^2} is a basis over the cubes of the base.
    def _cube_root_char3(self, a):
        B = self.base
        for coeff in a.rep[1:]:
            if not B.is_zero(coeff):
                return None
        target = B.p_decompose(FieldScalar(B, a.rep[0]))
        alpha = self.alpha()
        rows = [B.p_decompose(alpha**i) for i in range(3)]
        # Solve sum_i x_i * rows[i][j] = target[j] over B.
        import linalg
        equations = []
        for j in range(3):
            equations.append(dict((i, rows[i][j]) for i in range(3) if rows[i][j]))
        solution = linalg.solve(B, equations, [target[j] for j in range(3)], 3)
        if solution is None:
            return None
        root = self.zero()
        for i in range(3):
            root = root + self(solution[i]) * self.gen()**i
        if root * root * root != a:
            return None
        return root

    def degree_over(self, sub):
        if sub == self:
            return 1
        return self.degree * self.base.degree_over(sub)

    def coordinates_over(self, sub, x):
        if sub == self:
            return [self(x)]
        x = self(x)
        coords = []
        for c in x.rep:
            coords += self.base.coordinates_over(sub, FieldScalar(self.base, c))
        return coords

    def from_coordinates_over(self, sub, coords):
        if sub == self:
            return self(coords[0])
        k = self.base.degree_over(sub)
        rep = []
        for i in range(self.degree):
            rep.append(self.base.from_coordinates_over(sub, coords[i * k:(i + 1) * k]).rep)
        return FieldScalar(self, tuple(rep))

    def project(self, sub, x):
        if sub == self:
            return self(x)
        x = self(x)
        for c in x.rep[1:]:
            if not self.base.is_zero(c):
                raise NotInSubfield(str(x) + " does not lie in " + sub.name())
        return self.base.project(sub, FieldScalar(self.base, x.rep[0]))


class RationalFunctionField(Field):
    def __init__(self, base, var="t"):
        if var in base.symbols():
            raise SchemaViolation("variable \"" + var + "\" is already used in " + base.name())
        self.base = base
        self.symbol = var
        self.characteristic = base.characteristic
        self.key = ("ratfun", base.key, var)
        self.zero_rep = ((), (base.one_rep,))
        self.one_rep = ((base.one_rep,), (base.one_rep,))

    def name(self):
        return self.base.name() + "(" + self.symbol + ")"

    def descriptor(self):
        return {"kind": "ratfun", "base": self.base.descriptor(), "var": self.symbol}

    def symbols(self):
        return self.base.symbols() + (self.symbol,)

    def gen(self):
        B = self.base
        return FieldScalar(self, ((B.zero_rep, B.one_rep), (B.one_rep,)))

    def tower(self):
        return [self] + self.base.tower()

    # num/den as coefficient sequences (low degree first) -> canonical rep.
    def normalize(self, num, den):
        B = self.base
        return self.normalize_dup(_to_dup(B, num), _to_dup(B, den))

    def normalize_dup(self, f, g):
        B = self.base
        K = B.sympy_domain()
        if not g:
            raise ZeroDivisionError("division by zero in " + self.name())
        if not f:
            return self.zero_rep
        h = dup_half_gcdex(f, g, K)[1]
        if len(h) > 1:
            f = dup_quo(f, h, K)
            g = dup_quo(g, h, K)
        return (_from_dup(B, dup_quo_ground(f, dup_LC(g, K), K)), _from_dup(B, dup_monic(g, K)))

    def add(self, a, b):
        B = self.base
        K = B.sympy_domain()
        an, ad, bn, bd = [_to_dup(B, c) for c in (a[0], a[1], b[0], b[1])]
        if a[1] == b[1]:
            return self.normalize_dup(dup_add(an, bn, K), ad)
        return self.normalize_dup(dup_add(dup_mul(an, bd, K), dup_mul(bn, ad, K), K), dup_mul(ad, bd, K))

    def neg(self, a):
        B = self.base
        return (tuple(B.neg(x) for x in a[0]), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        B = self.base
        K = B.sympy_domain()
        if not a[0] or not b[0]:
            return self.zero_rep
        an, ad, bn, bd = [_to_dup(B, c) for c in (a[0], a[1], b[0], b[1])]
        return self.normalize_dup(dup_mul(an, bn, K), dup_mul(ad, bd, K))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("division by zero in " + self.name())
        return self.normalize(a[1], a[0])

    def is_zero(self, a):
        return not a[0]

    def rep_from_int(self, n):
        return self.normalize([self.base.rep_from_int(n)], [self.base.one_rep])

    def embed_rep(self, value):
        return self.normalize([self.base(value).rep], [self.base.one_rep])

    def to_sympy(self, a):
        t = sp.Symbol(self.symbol)
        num = _pcompose_sympy(self.base, a[0], t)
        if len(a[1]) == 1:
            return num
        return num / _pcompose_sympy(self.base, a[1], t)

    def from_sympy(self, expr):
        t = sp.Symbol(self.symbol)
        num, den = sp.fraction(sp.together(sp.sympify(expr)))
        try:
            pn = sp.Poly(num, t)
            pd = sp.Poly(den, t)
        except sp.PolynomialError:
            raise SchemaViolation("\"" + str(expr) + "\" is not a rational function of " + self.symbol)
        numc = [self.base.from_sympy(c) for c in reversed(pn.all_coeffs())]
        denc = [self.base.from_sympy(c) for c in reversed(pd.all_coeffs())]
        if not _to_dup(self.base, denc):
            raise SchemaViolation("\"" + str(expr) + "\" has a vanishing denominator over " + self.name())
        return self.normalize(numc, denc)

    def random_element(self, rng):
        B = self.base
        num = [B.random_element(rng).rep for i in range(rng.randint(1, 3))]
        den = [B.random_element(rng).rep for i in range(rng.randint(0, 1))] + [B.one_rep]
        return FieldScalar(self, self.normalize(num, den))

    def small_elements(self, h):
        B = self.base
        coeffs = [x.rep for x in (B.elements() if B.is_finite() else B.small_elements(h))]
        out = []
        for combo in itertools.product(coeffs, repeat=h):
            out.append(FieldScalar(self, self.normalize(list(reversed(combo)), [B.one_rep])))
        return out

    def is_constant(self, x):
        return len(x.rep[0]) <= 1 and len(x.rep[1]) == 1

    def constant(self, x):
        if not x.rep[0]:
            return self.base.zero()
        return FieldScalar(self.base, x.rep[0][0])

    def quadratic_root(self, b, c):
        b = self(b)
        c = self(c)
        if self.is_constant(b) and self.is_constant(c):
            r = self.base.quadratic_root(self.constant(b), self.constant(c))
            return None if r is None else self(r)
        raise UnsupportedField("quadratic roots with non-constant coefficients over " + self.name() + " are not supported")

    # Characteristic 3: y = sum_j Y_j^3 t^j, j = 0,1,2, with Y_j in this field.
    def p_decompose(self, y):
        B = self.base
        if self.characteristic != 3 or not B.is_finite():
            raise UnsupportedField("p-basis decomposition needs characteristic 3 over a finite base")
        y = self(y)
        num, den = y.rep
        K = B.sympy_domain()
        P = _from_dup(B, dup_mul(_to_dup(B, num), dup_sqr(_to_dup(B, den), K), K))
        parts = []
        for j in range(3):
            coeffs = P[j::3]
            root = [B.cube_root(FieldScalar(B, c)).rep for c in coeffs]
            parts.append(FieldScalar(self, self.normalize(root, den)))
        return parts

    def cube_root(self, a):
        a = self(a)
        if self.characteristic == 3 and self.base.is_finite():
            Y = self.p_decompose(a)
            if Y[1] or Y[2]:
                return None
            return Y[0]
        if self.is_constant(a):
            r = self.base.cube_root(self.constant(a))
            return None if r is None else self(r)
        raise UnsupportedField("cube roots over " + self.name() + " are not supported")


# Step 10: construction from descriptors and CLI strings.
def field_make(desc, location="field"):
    if not isinstance(desc, dict) or "kind" not in desc:
        raise SchemaViolation("field descriptor must be an object with a \"kind\"", location)
    kind = desc["kind"]
    if kind == "Q":
        return RationalField()
    if kind == "GF":
        p = desc.get("p")
        if not isinstance(p, int):
            raise SchemaViolation("\"p\" must be an integer", location + ".p")
        return PrimeField(p)
    if kind not in ("ext2", "ext3", "ratfun"):
        raise SchemaViolation("unknown field kind \"" + str(kind) + "\"", location + ".kind")
    if "base" not in desc:
        raise SchemaViolation("missing \"base\"", location)
    base = field_make(desc["base"], location + ".base")
    if kind == "ratfun":
        return RationalFunctionField(base, desc.get("var", "t"))
    if kind == "ext2":
        if "minpoly" in desc:
            modulus = [base.parse(c) for c in desc["minpoly"]]
            if len(modulus) != 2:
                raise SchemaViolation("\"minpoly\" needs two coefficients", location + ".minpoly")
        else:
            modulus = [base.one(), base.one()]
        return ExtensionField(base, modulus, desc.get("symbol"), "ext2")
    if "alpha" not in desc:
        raise SchemaViolation("missing \"alpha\"", location)
    alpha = base.parse(desc["alpha"])
    return ExtensionField(base, [-alpha, base.zero(), base.zero()], desc.get("symbol"), "ext3")

# CLI field strings: q | gf:P, then any number of suffixes
#   (t) rational function field, [w] adjoin omega, [c:EXPR] adjoin a cube root of EXPR.
def field_parse_option(text):
    import json
    import re
    text = text.strip()
    if text.startswith("{"):
        try:
            return field_make(json.loads(text))
        except ValueError as err:
            raise SchemaViolation("bad field descriptor: " + str(err))
    m = re.match(r"^(q|Q|gf:(\d+)|GF:(\d+))", text)
    if m is None:
        raise SchemaViolation("field must start with q or gf:P, got \"" + text + "\"")
    if m.group(1).lower() == "q":
        F = RationalField()
    else:
        F = PrimeField(int(m.group(2) or m.group(3)))
    rest = text[m.end():]
    while rest:
        m = re.match(r"^\((\w+)\)", rest)
        if m is not None:
            F = RationalFunctionField(F, m.group(1))
            rest = rest[m.end():]
            continue
        m = re.match(r"^\[(\w+)\]", rest)
        if m is not None:
            F = ExtensionField(F, [F.one(), F.one()], m.group(1), "ext2")
            rest = rest[m.end():]
            continue
        m = re.match(r"^\[(\w+):([^\]]+)\]", rest)
        if m is not None:
            alpha = F.parse(m.group(2))
            F = ExtensionField(F, [-alpha, F.zero(), F.zero()], m.group(1), "ext3")
            rest = rest[m.end():]
            continue
        raise SchemaViolation("cannot parse field suffix \"" + rest + "\"")
    return F

def adjoin_omega(F):
    if F.characteristic == 3:
        raise CharThree("omega degenerates in characteristic 3: x^2+x+1 = (x-1)^2")
    root = F.quadratic_root(1, 1)
    if root is not None:
        return F, root
    E = ExtensionField(F, [F.one(), F.one()], None, "ext2")
    logger.info("adjoined omega: %s", E.name())
    return E, E.gen()

# omega from the field if present, else None.
def find_omega(F):
    if F.characteristic == 3:
        raise CharThree("omega degenerates in characteristic 3: x^2+x+1 = (x-1)^2")
    return F.quadratic_root(1, 1)

def is_omega(w):
    return bool(w) and w * w + w + 1 == 0

def seeded_rng(seed=None):
    if seed is None:
        seed = par.parval_from_str("compalg::seed")
    return random.Random(seed)
