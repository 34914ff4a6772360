# algebra_core.py: finite-dimensional algebras given by structure constants
#   e_i e_j = sum_k c_ijk e_k, with an optional unit and an optional norm,
#   and the symbolic/exhaustive verification of their identities.
#
# Symbolic checks plug generic coordinates (the generators x0..x{d-1},
#   y0.., z0.., t0.. of a polynomial ring over the ground field) into an
#   identity and test the resulting polynomials for exact vanishing.
# Reports list every check in a fixed order; a failing check carries the
#   first failing coordinate (canonical basis order) and its leading monomial.

import itertools
import logging
from collections import namedtuple

import compalg_param_funcs as par
import indexedexp as ixp
import linalg
from polynomial import PolynomialRing, is_zero_polynomial
from quadforms import QuadraticForm
from scalars import FieldScalar
from compalg_errors import BadArgument, MixedAlgebras, NoUnit, NoNorm, ModeUnavailable, \
    IsotropicBasePoint, NotClosed, SingularMultiplication, NotComposition, SingularMatrix

logger = logging.getLogger(__name__)

thismodule = __name__
par.initialize_param(par.glb_param("INT", thismodule, "exhaustive_cap", 1024))
par.initialize_param(par.glb_param("INT", thismodule, "sample_count",   20))

check = namedtuple('check', 'name passed witness required')
report = namedtuple('report', 'passed mode checks classification')

def make_report(mode, checks, classification=None):
    passed = all(c.passed for c in checks if c.required)
    return report(passed, mode, checks, classification)

def merge_reports(mode, reports):
    checks = []
    classification = None
    for r in reports:
        checks += list(r.checks)
        if classification is None:
            classification = r.classification
    return make_report(mode, checks, classification)

def failed_checks(rep):
    return [c for c in rep.checks if c.required and not c.passed]

class LinearOperator(object):
    """Square matrix acting on coordinate columns: column c is the image of e_c."""

    def __init__(self, field, matrix):
        self.field = field
        self.matrix = matrix
        self.dim = len(matrix)

    @staticmethod
    def identity(field, dim):
        return LinearOperator(field, ixp.identity_rank2(field, dim))

    @staticmethod
    def zero(field, dim):
        return LinearOperator(field, ixp.zerorank2(field, dim))

    @staticmethod
    def from_columns(field, columns):
        return LinearOperator(field, linalg.transpose([list(c) for c in columns]))

    @staticmethod
    def from_flat(field, dim, flat):
        return LinearOperator(field, [list(flat[r * dim:(r + 1) * dim]) for r in range(dim)])

    def apply(self, v):
        if isinstance(v, Element):
            return Element(v.algebra, self.apply(v.coords))
        out = []
        for row in self.matrix:
            acc = self.field.zero()
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def column(self, c):
        return [self.matrix[r][c] for r in range(self.dim)]

    def compose(self, other):
        return LinearOperator(self.field, linalg.matmul(self.field, self.matrix, other.matrix))

    def __mul__(self, other):
        if isinstance(other, LinearOperator):
            return self.compose(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return LinearOperator(self.field, [[c * x for x in row] for row in self.matrix])

    def __add__(self, other):
        return LinearOperator(self.field, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)])

    def __sub__(self, other):
        return LinearOperator(self.field, [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)])

    def __neg__(self):
        return self.scale(-1)

    def commutator(self, other):
        return self.compose(other) - other.compose(self)

    def transpose(self):
        return LinearOperator(self.field, linalg.transpose(self.matrix))

    def inverse(self):
        return LinearOperator(self.field, linalg.inverse(self.field, self.matrix))

    def power(self, k):
        result = LinearOperator.identity(self.field, self.dim)
        for i in range(k):
            result = result.compose(self)
        return result

    def determinant(self):
        return linalg.determinant(self.field, self.matrix)

    def is_zero(self):
        return all(not x for row in self.matrix for x in row)

    def is_identity(self):
        return linalg.is_identity(self.field, self.matrix)

    def flatten(self):
        return [x for row in self.matrix for x in row]

    def __eq__(self, other):
        return isinstance(other, LinearOperator) and self.matrix == other.matrix

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.matrix)

class Algebra(object):
    def __init__(self, field, labels, mul, unit=None, norm=None, name=""):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.name = name
        if self.dim == 0:
            raise BadArgument("algebras of dimension 0 are not supported")
        # Step 1: canonical sparse structure tensor.
        self.mul = {}
        for (i, j), terms in mul.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise BadArgument("structure constant index (" + str(i) + "," + str(j) + ") out of range")
            acc = {}
            for k, c in terms:
                if not 0 <= k < self.dim:
                    raise BadArgument("structure constant output index " + str(k) + " out of range")
                acc[k] = acc.get(k, field.zero()) + field(c)
            row = tuple((k, acc[k]) for k in sorted(acc) if acc[k])
            if row:
                self.mul[(i, j)] = row
        # Step 2: unit and norm.
        self.unit = None
        if unit is not None:
            self.unit = [field(c) for c in unit]
            if len(self.unit) != self.dim:
                raise BadArgument("unit has " + str(len(self.unit)) + " coordinates, expected " + str(self.dim))
            u = self.element(self.unit)
            for i in range(self.dim):
                e = self.basis(i)
                if u * e != e or e * u != e:
                    raise NoUnit("declared unit fails on basis element " + self.labels[i])
        self.norm = norm
        if norm is not None and norm.dim != self.dim:
            raise BadArgument("norm has dimension " + str(norm.dim) + ", algebra has dimension " + str(self.dim))

    def __repr__(self):
        return "Algebra(" + (self.name + ", " if self.name else "") + self.field.name() + ", dim " + str(self.dim) + ")"

    def zero(self):
        return Element(self, ixp.zerorank1(self.field, self.dim))

    def basis(self, i):
        coords = ixp.zerorank1(self.field, self.dim)
        coords[i] = self.field.one()
        return Element(self, coords)

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    def element(self, coords):
        if len(coords) != self.dim:
            raise BadArgument("element has " + str(len(coords)) + " coordinates, expected " + str(self.dim))
        return Element(self, [c if not isinstance(c, (int, FieldScalar)) else self.field(c) for c in coords])

    def one(self):
        if self.unit is None:
            raise NoUnit(repr(self) + " has no unit")
        return Element(self, list(self.unit))

    def has_unit(self):
        return self.unit is not None

    def require_norm(self):
        if self.norm is None:
            raise NoNorm(repr(self) + " has no norm")
        return self.norm

    def product_coords(self, x, y):
        out = [self.field.zero()] * self.dim
        for (i, j), terms in self.mul.items():
            xi = x[i]
            if not xi:
                continue
            yj = y[j]
            if not yj:
                continue
            xy = xi * yj
            for k, c in terms:
                out[k] = out[k] + c * xy
        return out

    def left_mult(self, x):
        x = x.coords if isinstance(x, Element) else x
        return LinearOperator.from_columns(self.field, [self.product_coords(x, self.basis(j).coords) for j in range(self.dim)])

    def right_mult(self, x):
        x = x.coords if isinstance(x, Element) else x
        return LinearOperator.from_columns(self.field, [self.product_coords(self.basis(j).coords, x) for j in range(self.dim)])

    def structure_list(self):
        out = []
        for (i, j) in sorted(self.mul):
            for k, c in self.mul[(i, j)]:
                out.append((i, j, k, c))
        return out

    def random_element(self, rng):
        return Element(self, [self.field.random_element(rng) for i in range(self.dim)])

    def norm_of(self, x):
        return self.require_norm().evaluate(x.coords)

    def polar_of(self, x, y):
        return self.require_norm().polar(x.coords, y.coords)

class Element(object):
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise MixedAlgebras("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def scale(self, c):
        return Element(self.algebra, [c * a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self.algebra, self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and all(not (a - b) for a, b in zip(self.coords, other.coords))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __bool__(self):
        return any(bool(a) for a in self.coords)

    def __str__(self):
        terms = []
        for label, c in zip(self.algebra.labels, self.coords):
            if not c:
                continue
            if c == 1:
                terms.append(label)
            else:
                terms.append("(" + str(c) + ")*" + label)
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "Element(" + str(self) + ")"

def algebra_from_products(field, labels, product_fn, unit=None, norm=None, name=""):
    """Algebra whose basis products are product_fn(i, j) (coordinate lists)."""
    d = len(labels)
    mul = {}
    for i in range(d):
        for j in range(d):
            coords = product_fn(i, j)
            terms = [(k, c) for k, c in enumerate(coords) if c]
            if terms:
                mul[(i, j)] = terms
    return Algebra(field, labels, mul, unit, norm, name)

# Table literal: one whitespace-separated string per row; entries are
#   "0", a basis label, or a negated label ("-v2").
def algebra_from_table(field, labels, table_rows, unit=None, norm=None, name=""):
    index = dict((label, k) for k, label in enumerate(labels))
    mul = {}
    for i, row in enumerate(table_rows):
        entries = row.split()
        if len(entries) != len(labels):
            raise BadArgument("table row " + labels[i] + " has " + str(len(entries)) + " entries")
        for j, entry in enumerate(entries):
            if entry == "0":
                continue
            sign = 1
            if entry.startswith("-"):
                sign = -1
                entry = entry[1:]
            mul[(i, j)] = [(index[entry], field(sign))]
    return Algebra(field, labels, mul, unit, norm, name)

def multiply(A, x, y):
    if x.algebra is not A or y.algebra is not A:
        raise MixedAlgebras("multiply(): operands do not belong to " + repr(A))
    return Element(A, A.product_coords(x.coords, y.coords))

def find_unit(A):
    """The two-sided unit of A, or None."""
    F = A.field
    d = A.dim
    left = [dict() for n in range(d * d)]   # u*e_j = e_j, equation (j,k)
    right = [dict() for n in range(d * d)]  # e_i*u = e_i, equation (i,k)
    for (i, j), terms in A.mul.items():
        for k, c in terms:
            left[j * d + k][i] = left[j * d + k].get(i, F.zero()) + c
            right[i * d + k][j] = right[i * d + k].get(j, F.zero()) + c
    rows = left + right
    rhs = [F.one() if (n % d) == (n // d) % d else F.zero() for n in range(d * d)] * 2
    rows = [dict((col, c) for col, c in row.items() if c) for row in rows]
    u = linalg.solve(F, rows, rhs, d)
    if u is None:
        return None
    unit = Element(A, u)
    for e in A.basis_elements():
        if unit * e != e or e * unit != e:
            return None
    return unit

def conjugate(A, x):
    norm = A.require_norm()
    one = A.one()
    return one.scale(norm.polar(one.coords, x.coords)) - x

def associator(A, x, y, z):
    return (x * y) * z - x * (y * z)

# Step 2: generic elements for symbolic checks.
def generic_elements(A, names):
    labels = []
    for name in names:
        labels += [name + str(i) for i in range(A.dim)]
    ring = PolynomialRing(A.field, labels)
    return [Element(A, ixp.declarerank1(ring, name, A.dim)) for name in names]

def _monomial_witness(value):
    zt = is_zero_polynomial(value)
    if zt.is_zero:
        return None
    monomial, coeff = zt.witness
    return "monomial " + monomial + " has coefficient " + coeff

def zero_check(name, value, required=True):
    """Check that an Element, or a scalar/polynomial, vanishes identically."""
    if isinstance(value, Element):
        for label, c in zip(value.algebra.labels, value.coords):
            w = _monomial_witness(c)
            if w is not None:
                return check(name, False, "coordinate " + label + ": " + w, required)
        return check(name, True, None, required)
    w = _monomial_witness(value)
    return check(name, w is None, w, required)

def _exhaustive_vectors(A):
    F = A.field
    if not F.is_finite():
        raise ModeUnavailable("exhaustive mode needs a finite field; " + F.name() + " is infinite")
    cap = par.parval_from_str("algebra_core::exhaustive_cap")
    if F.order()**A.dim > cap:
        raise ModeUnavailable("|F|^d = " + str(F.order()) + "^" + str(A.dim) + " exceeds algebra_core::exhaustive_cap = " + str(cap))
    return [Element(A, list(v)) for v in itertools.product(F.elements(), repeat=A.dim)]

def _pair_check(name, A, predicate):
    vectors = _exhaustive_vectors(A)
    for x in vectors:
        for y in vectors:
            if not predicate(x, y):
                return check(name, False, "x = " + str(x) + ", y = " + str(y), True)
    return check(name, True, None, True)

def nonsingular_check(norm):
    kind = norm.classify().kind
    return check("nonsingular norm", kind != "singular", None if kind != "singular" else "norm is singular", True)

# Step 3: the verification operations.
def verify_composition(A, mode="symbolic"):
    norm = A.require_norm()
    classification = norm.classify()
    if mode == "symbolic":
        x, y = generic_elements(A, ["x", "y"])
        defect = norm.evaluate((x * y).coords) - norm.evaluate(x.coords) * norm.evaluate(y.coords)
        comp = zero_check("n(xy) = n(x)n(y)", defect)
    elif mode == "exhaustive":
        comp = _pair_check("n(xy) = n(x)n(y)", A,
                           lambda x, y: norm.evaluate((x * y).coords) == norm.evaluate(x.coords) * norm.evaluate(y.coords))
    else:
        raise BadArgument("unknown verification mode \"" + str(mode) + "\"")
    return make_report(mode, [comp, nonsingular_check(norm)], classification.kind)

def verify_hurwitz_properties(A):
    norm = A.require_norm()
    one = A.one()
    x, y, z = generic_elements(A, ["x", "y", "z"])
    xbar = conjugate(A, x)
    checks = []
    checks.append(zero_check("conjugation is an involution", conjugate(A, xbar) - x))
    checks.append(zero_check("conjugation is an antiautomorphism", conjugate(A, x * y) - conjugate(A, y) * xbar))
    checks.append(zero_check("Cayley-Hamilton", x * x - x.scale(norm.polar(x.coords, one.coords)) + one.scale(norm.evaluate(x.coords))))
    checks.append(zero_check("left alternative", x * (x * y) - (x * x) * y))
    checks.append(zero_check("right alternative", (y * x) * x - y * (x * x)))
    checks.append(zero_check("left adjoint n(xy,z) = n(y,xbar z)", norm.polar((x * y).coords, z.coords) - norm.polar(y.coords, (xbar * z).coords)))
    checks.append(zero_check("right adjoint n(yx,z) = n(y,z xbar)", norm.polar((y * x).coords, z.coords) - norm.polar(y.coords, (z * xbar).coords)))
    checks.append(zero_check("associative", associator(A, x, y, z), required=False))
    return make_report("symbolic", checks, norm.classify().kind)

# First basis triple (i,j,k) with n(e_i e_j, e_k) != n(e_i, e_j e_k), or None.
def norm_associativity_witness(A):
    norm = A.require_norm()
    basis = A.basis_elements()
    products = [[(basis[i] * basis[j]).coords for j in range(A.dim)] for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                if norm.polar(products[i][j], basis[k].coords) != norm.polar(basis[i].coords, products[j][k]):
                    return (A.labels[i], A.labels[j], A.labels[k])
    return None

def verify_symmetric(A, mode="symbolic"):
    norm = A.require_norm()
    witness = norm_associativity_witness(A)
    checks = [check("n(x*y,z) = n(x,y*z) on basis triples", witness is None,
                    None if witness is None else "(" + ", ".join(witness) + ")", True)]
    if mode == "symbolic":
        x, y = generic_elements(A, ["x", "y"])
        nx = norm.evaluate(x.coords)
        checks.append(zero_check("(x*y)*x = n(x)y", (x * y) * x - y.scale(nx)))
        checks.append(zero_check("x*(y*x) = n(x)y", x * (y * x) - y.scale(nx)))
    elif mode == "exhaustive":
        checks.append(_pair_check("(x*y)*x = n(x)y", A, lambda x, y: (x * y) * x == y.scale(norm.evaluate(x.coords))))
        checks.append(_pair_check("x*(y*x) = n(x)y", A, lambda x, y: x * (y * x) == y.scale(norm.evaluate(x.coords))))
    else:
        raise BadArgument("unknown verification mode \"" + str(mode) + "\"")
    comp = verify_composition(A, mode)
    return make_report(mode, checks + list(comp.checks), comp.classification)

def verify_law(A, law):
    if law == "associative":
        x, y, z = generic_elements(A, ["x", "y", "z"])
        checks = [zero_check("associative", associator(A, x, y, z))]
    elif law == "commutative":
        x, y = generic_elements(A, ["x", "y"])
        checks = [zero_check("commutative", x * y - y * x)]
    elif law == "flexible":
        x, y = generic_elements(A, ["x", "y"])
        checks = [zero_check("flexible", (x * y) * x - x * (y * x))]
    elif law == "alternative":
        x, y = generic_elements(A, ["x", "y"])
        checks = [zero_check("left alternative", x * (x * y) - (x * x) * y),
                  zero_check("right alternative", (y * x) * x - y * (x * x))]
    else:
        raise BadArgument("unknown law \"" + str(law) + "\"; choose associative, commutative, flexible or alternative")
    return make_report("symbolic", checks)

def verify_linearized(A):
    norm = A.require_norm()
    basis = A.basis_elements()
    d = A.dim
    products = [[(basis[i] * basis[j]).coords for j in range(d)] for i in range(d)]
    first = check("n(xy,xz) = n(x)n(y,z)", True, None, True)
    for i, j, k in itertools.product(range(d), repeat=3):
        if norm.polar(products[i][j], products[i][k]) != norm.evaluate(basis[i].coords) * norm.polar(basis[j].coords, basis[k].coords):
            first = check(first.name, False, "(" + ", ".join(A.labels[n] for n in (i, j, k)) + ")", True)
            break
    second = check("n(xy,tz) + n(ty,xz) = n(x,t)n(y,z)", True, None, True)
    for i, t, j, k in itertools.product(range(d), repeat=4):
        lhs = norm.polar(products[i][j], products[t][k]) + norm.polar(products[t][j], products[i][k])
        if lhs != norm.polar(basis[i].coords, basis[t].coords) * norm.polar(basis[j].coords, basis[k].coords):
            second = check(second.name, False, "(" + ", ".join(A.labels[n] for n in (i, t, j, k)) + ")", True)
            break
    return make_report("basis", [first, second])

def verify_suite(A, mode="symbolic"):
    if A.has_unit():
        return merge_reports(mode, [verify_composition(A, mode), verify_hurwitz_properties(A), verify_linearized(A)])
    return merge_reports(mode, [verify_symmetric(A, mode), verify_law(A, "flexible")])

def commutative_center(A):
    F = A.field
    d = A.dim
    rows = [dict() for n in range(d * d)]
    for (i, j), terms in A.mul.items():
        for k, c in terms:
            # z = sum z_i e_i: coefficient of e_k in z e_j - e_j z.
            rows[j * d + k][i] = rows[j * d + k].get(i, F.zero()) + c
            rows[i * d + k][j] = rows[i * d + k].get(j, F.zero()) - c
    rows = [dict((col, c) for col, c in row.items() if c) for row in rows]
    return [Element(A, v) for v in linalg.nullspace(F, rows, d)]

# Step 4: new algebras from old ones.
def _coords_of(v):
    return v.coords if isinstance(v, Element) else list(v)

def subalgebra(A, vectors, labels=None):
    F = A.field
    vectors = [_coords_of(v) for v in vectors]
    m = len(vectors)
    if linalg.matrix_rank(F, vectors) != m:
        raise BadArgument("subalgebra(): spanning vectors are linearly dependent")
    rows = [dict((a, vectors[a][k]) for a in range(m) if vectors[a][k]) for k in range(A.dim)]

    def coordinates(w):
        return linalg.solve(F, rows, w, m)

    mul = {}
    for a in range(m):
        for b in range(m):
            c = coordinates(A.product_coords(vectors[a], vectors[b]))
            if c is None:
                raise NotClosed("span is not closed: product of spanning vectors " + str(a) + " and " + str(b) + " leaves it")
            terms = [(k, x) for k, x in enumerate(c) if x]
            if terms:
                mul[(a, b)] = terms
    unit = None
    if A.unit is not None:
        unit = coordinates(A.unit)
    norm = A.norm.restrict(vectors) if A.norm is not None else None
    if labels is None:
        labels = []
        for a, v in enumerate(vectors):
            support = [k for k in range(A.dim) if v[k]]
            if len(support) == 1 and v[support[0]] == 1:
                labels.append(A.labels[support[0]])
            else:
                labels.append("s" + str(a + 1))
    return Algebra(F, labels, mul, unit, norm, A.name + " subalgebra" if A.name else "")

def transport(A, P, labels=None, name=""):
    """A in the basis f_c = sum_r P[r][c] e_r (the columns of P)."""
    F = A.field
    Pinv = linalg.inverse(F, P)
    columns = linalg.transpose(P)
    d = A.dim

    def product_fn(a, b):
        return linalg.matvec(F, Pinv, A.product_coords(columns[a], columns[b]))

    unit = linalg.matvec(F, Pinv, A.unit) if A.unit is not None else None
    norm = A.norm.transform(P) if A.norm is not None else None
    if labels is None:
        labels = ["f" + str(c + 1) for c in range(d)]
    return algebra_from_products(F, labels, product_fn, unit, norm, name)

def same_structure(A, B, compare_norm=True):
    if A.field != B.field or A.dim != B.dim or A.mul != B.mul:
        return False
    if compare_norm and A.norm != B.norm:
        return False
    return True

def first_structure_difference(A, B):
    """First (i, j) in canonical order where the tables of A and B differ, or None."""
    for i in range(A.dim):
        for j in range(A.dim):
            if A.mul.get((i, j), ()) != B.mul.get((i, j), ()):
                return (A.labels[i], A.labels[j])
    return None

def kaplansky_unitalize(A, a, symmetric=None):
    """Unital composition algebra on the space of A with the same norm.

    symmetric: x<>y = n(a)^-1 (a*x)*(y*a), unit n(a)^-1 a*a;
    otherwise: x<>y = R_u^-1(x) L_u^-1(y) with u = a a / n(a), unit u u."""
    F = A.field
    norm = A.require_norm()
    nu = norm.evaluate(a.coords)
    if not nu:
        raise IsotropicBasePoint("base point " + str(a) + " has norm 0")
    if symmetric is None:
        symmetric = A.unit is None and norm_associativity_witness(A) is None
    basis = A.basis_elements()
    nu_inv = nu.inverse()
    if symmetric:
        def product_fn(i, j):
            return ((a * basis[i]) * (basis[j] * a)).scale(nu_inv).coords
        unit = (a * a).scale(nu_inv).coords
    else:
        u = (a * a).scale(nu_inv)
        try:
            Rinv = A.right_mult(u).inverse()
            Linv = A.left_mult(u).inverse()
        except SingularMatrix:
            raise SingularMultiplication("multiplication by " + str(u) + " is not invertible; the algebra is not a composition algebra")
        left_parts = [Element(A, Rinv.column(i)) for i in range(A.dim)]
        right_parts = [Element(A, Linv.column(j)) for j in range(A.dim)]

        def product_fn(i, j):
            return (left_parts[i] * right_parts[j]).coords
        unit = (u * u).coords
    B = algebra_from_products(F, A.labels, product_fn, None, norm, A.name + " unitalized" if A.name else "")
    found = find_unit(B)
    if found is None or found.coords != [F(c) for c in unit]:
        raise NotComposition("unitalized product has no unit; the algebra is not a composition algebra")
    B = Algebra(F, B.labels, B.mul, found.coords, norm, B.name)
    rep = verify_composition(B)
    if not rep.passed:
        raise NotComposition("unitalized product is not multiplicative: " + str(failed_checks(rep)[0].witness))
    logger.info("unitalized %r (%s variant)", A, "symmetric" if symmetric else "general")
    return B

# Step 5: the index map (n, m) -> 2^(n-1)(2m-1), a bijection N x N -> N.
def urbanik_wright_index(n, m):
    if not isinstance(n, int) or not isinstance(m, int) or n < 1 or m < 1:
        raise BadArgument("index needs positive integers n, m; got " + str(n) + ", " + str(m))
    return 2**(n - 1) * (2 * m - 1)

def urbanik_wright_inverse(k):
    if not isinstance(k, int) or k < 1:
        raise BadArgument("inverse index needs a positive integer; got " + str(k))
    n = 1
    while k % 2 == 0:
        k //= 2
        n += 1
    return n, (k + 1) // 2
