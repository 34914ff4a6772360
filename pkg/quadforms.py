# quadforms.py: quadratic forms n(sum x_i e_i) = sum_{i<=j} q_ij x_i x_j.
#
# Forms are stored by their upper-triangular coefficients, never by a Gram
#   matrix, so that characteristic 2 loses no information.

import itertools
import logging
from collections import namedtuple

import compalg_param_funcs as par
import linalg
from compalg_errors import SchemaViolation, BadArgument

logger = logging.getLogger(__name__)

thismodule = __name__
par.initialize_param(par.glb_param("INT", thismodule, "isotropic_box_height",   1))
par.initialize_param(par.glb_param("INT", thismodule, "finite_enumeration_cap", 1000000))

classification = namedtuple('classification', 'kind radical')
isotropic_search = namedtuple('isotropic_search', 'vector complete')

class QuadraticForm(object):
    def __init__(self, field, dim, coeffs):
        self.field = field
        self.dim = dim
        self.coeffs = {}
        for (i, j), c in coeffs.items():
            if i > j:
                i, j = j, i
            if not (0 <= i < dim and 0 <= j < dim):
                raise BadArgument("quadratic form coefficient index (" + str(i) + "," + str(j) + ") out of range")
            c = field(c)
            s = self.coeffs.get((i, j), field.zero()) + c
            if s:
                self.coeffs[(i, j)] = s
            else:
                self.coeffs.pop((i, j), None)

    def __eq__(self, other):
        return isinstance(other, QuadraticForm) and self.field == other.field and \
            self.dim == other.dim and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    def coefficient(self, i, j):
        if i > j:
            i, j = j, i
        return self.coeffs.get((i, j), self.field.zero())

    # Works for coordinates that are field scalars or polynomials.
    def evaluate(self, x):
        out = self.field.zero()
        for (i, j), c in self.coeffs.items():
            if x[i] and x[j]:
                out = out + c * x[i] * x[j]
        return out

    def polar(self, x, y):
        out = self.field.zero()
        for (i, j), c in self.coeffs.items():
            if i == j:
                if x[i] and y[i]:
                    out = out + 2 * c * x[i] * y[i]
            else:
                out = out + c * (x[i] * y[j] + x[j] * y[i])
        return out

    def polar_matrix(self):
        M = linalg.zero_matrix(self.field, self.dim, self.dim)
        for (i, j), c in self.coeffs.items():
            if i == j:
                M[i][i] = 2 * c
            else:
                M[i][j] = c
                M[j][i] = c
        return M

    def radical(self):
        return linalg.matrix_nullspace(self.field, self.polar_matrix(), self.dim)

    def classify(self):
        rad = self.radical()
        if not rad:
            return classification("nondegenerate", rad)
        if len(rad) == 1 and self.field.characteristic == 2 and self.evaluate(rad[0]):
            return classification("nonsingular-char2", rad)
        return classification("singular", rad)

    def is_nonsingular(self):
        return self.classify().kind != "singular"

    # Form on the span of `vectors` (the columns of a change of basis):
    #   q'(y) = q(sum_k y_k vectors[k]).
    def restrict(self, vectors):
        coeffs = {}
        for k, vk in enumerate(vectors):
            c = self.evaluate(vk)
            if c:
                coeffs[(k, k)] = c
            for l in range(k + 1, len(vectors)):
                c = self.polar(vk, vectors[l])
                if c:
                    coeffs[(k, l)] = c
        return QuadraticForm(self.field, len(vectors), coeffs)

    def transform(self, P):
        return self.restrict(linalg.transpose(P))

    def as_dict(self):
        return {"dim": self.dim,
                "coeffs": [[i, j, str(self.coeffs[(i, j)])] for (i, j) in sorted(self.coeffs)]}

    @staticmethod
    def from_dict(field, desc, location="norm"):
        if not isinstance(desc, dict) or "dim" not in desc or "coeffs" not in desc:
            raise SchemaViolation("quadratic form needs \"dim\" and \"coeffs\"", location)
        dim = desc["dim"]
        coeffs = {}
        for idx, entry in enumerate(desc["coeffs"]):
            where = location + ".coeffs[" + str(idx) + "]"
            if not isinstance(entry, list) or len(entry) != 3:
                raise SchemaViolation("coefficient entry must be [i, j, \"scalar\"]", where)
            i, j, c = entry
            for pos, index in enumerate((i, j)):
                if not isinstance(index, int) or not 0 <= index < dim:
                    raise SchemaViolation("index out of range", where + "[" + str(pos) + "]")
            if i > j:
                raise SchemaViolation("coefficients are upper triangular (i <= j)", where)
            coeffs[(i, j)] = field.parse(str(c))
        return QuadraticForm(field, dim, coeffs)

    def __str__(self):
        terms = []
        for (i, j) in sorted(self.coeffs):
            terms.append("(" + str(self.coeffs[(i, j)]) + ")*x" + str(i) + "*x" + str(j))
        return " + ".join(terms) if terms else "0"

def hyperbolic_plane(field):
    return QuadraticForm(field, 2, {(0, 1): field.one()})

def find_isotropic(q, budget=None):
    """First nonzero v with q(v) = 0 in canonical enumeration order.

    Finite fields: projective representatives (first nonzero entry 1), by
    position of that entry, then lexicographically; `budget` caps the number
    of vectors tried.
    Infinite fields: coordinates from shells of height 1, 2, ..., budget.
    complete=True means the answer is conclusive: a vector was found, or a
    finite enumeration ran to the end."""
    F = q.field
    d = q.dim
    if F.is_finite():
        if budget is None:
            budget = par.parval_from_str("quadforms::finite_enumeration_cap")
        elements = F.elements()
        tried = 0
        for lead in range(d):
            head = [F.zero()] * lead + [F.one()]
            for tail in itertools.product(elements, repeat=d - lead - 1):
                tried += 1
                if tried > budget:
                    logger.info("isotropic search stopped after %d vectors", budget)
                    return isotropic_search(None, False)
                v = head + list(tail)
                if not q.evaluate(v):
                    return isotropic_search(v, True)
        return isotropic_search(None, True)

    if budget is None:
        budget = par.parval_from_str("quadforms::isotropic_box_height")
    previous = set()
    for h in range(1, budget + 1):
        shell = F.small_elements(h)
        shell_set = set(shell)
        for lead in range(d):
            head = [F.zero()] * lead
            for first in shell:
                if not first:
                    continue
                for tail in itertools.product(shell, repeat=d - lead - 1):
                    v = head + [first] + list(tail)
                    if previous and all(x in previous for x in v):
                        continue
                    if not q.evaluate(v):
                        return isotropic_search(v, True)
        previous = shell_set
    logger.info("no isotropic vector up to height %d", budget)
    return isotropic_search(None, False)
