# char3_forms.py: symmetric composition algebras peculiar to characteristic 3.
#
#   okubo_char3(F, alpha, beta): the Okubo algebra O_{alpha,beta}, the F-span of
#       the products of a e1 and b u1 in the split Okubo algebra over
#       E = F(a, b), a^3 = alpha, b^3 = beta.
#   char3_twodim(F, lam): the two-dimensional algebra
#       u*u = v,  u*v = v*u = u,  v*v = lam u - v.
#   derive_symmetric_norm(A): the quadratic form forced by (x*y)*x = n(x)y.

import logging

import linalg
from algebra_core import Algebra
from quadforms import QuadraticForm
from scalars import ExtensionField
from SymComp.Okubo_matrix_algebras import split_okubo
from compalg_errors import NotCharThree, ZeroLambda, CubeScalar, ZeroParameter, \
    ClosureNotEightDimensional, NotSymmetricComposition

logger = logging.getLogger(__name__)

def derive_symmetric_norm(A):
    """n with (x*y)*x = n(x)y, read off the basis:
       (e_i*e_j)*e_i = n(e_i) e_j  and  (e_i*e_j)*e_k + (e_k*e_j)*e_i = n(e_i,e_k) e_j."""
    F = A.field
    basis = A.basis_elements()
    coeffs = {}
    for i in range(A.dim):
        for k in range(i, A.dim):
            value = None
            for j in range(A.dim):
                if i == k:
                    w = (basis[i] * basis[j]) * basis[i]
                else:
                    w = (basis[i] * basis[j]) * basis[k] + (basis[k] * basis[j]) * basis[i]
                c = w.coords[j]
                if w != basis[j].scale(c) or (value is not None and c != value):
                    raise NotSymmetricComposition("no norm satisfies (x*y)*x = n(x)y at (" + A.labels[i] + ", "
                                                  + A.labels[j] + ", " + A.labels[k] + ")")
                value = c
            coeffs[(i, k)] = value
    return QuadraticForm(F, A.dim, coeffs)

def char3_twodim(F, lam, check_cube=False):
    if F.characteristic != 3:
        raise NotCharThree("the two-dimensional family needs characteristic 3; " + F.name() + " has characteristic " + str(F.characteristic))
    lam = F(lam)
    if not lam:
        raise ZeroLambda("lambda must be nonzero")
    if check_cube:
        root = F.cube_root(lam)
        if root is not None:
            raise CubeScalar(str(lam) + " = (" + str(root) + ")^3 is a cube in " + F.name())
    mul = {(0, 0): [(1, F.one())],
           (0, 1): [(0, F.one())],
           (1, 0): [(0, F.one())],
           (1, 1): [(0, lam), (1, -F.one())]}
    A = Algebra(F, ["u", "v"], mul, None, None, "char3 dim 2")
    return Algebra(F, A.labels, A.mul, None, derive_symmetric_norm(A), A.name)

# Step 1: E = F(a, b) with a^3 = alpha, b^3 = beta; adjoin only what is missing.
def _adjoin_cube_root(E, x):
    root = E.cube_root(x)
    if root is not None:
        return E, root
    E = ExtensionField(E, [-E(x), E.zero(), E.zero()], None, "ext3")
    logger.info("adjoined a cube root of %s: %s", x, E.name())
    return E, E.gen()

def okubo_char3(F, alpha, beta):
    if F.characteristic != 3:
        raise NotCharThree("O(alpha, beta) needs characteristic 3; " + F.name() + " has characteristic " + str(F.characteristic))
    alpha, beta = F(alpha), F(beta)
    if not alpha or not beta:
        raise ZeroParameter("alpha and beta must be nonzero")
    E, a = _adjoin_cube_root(F, alpha)
    E, b = _adjoin_cube_root(E, beta)
    a = E(a)
    deg = E.degree_over(F)
    S = split_okubo(E)

    def flatten(v):
        out = []
        for c in v:
            out += E.coordinates_over(F, c)
        return linalg.dense_to_sparse(out)

    # Step 2: F-span closure of {a e1, b u1} under *, in insertion order.
    span = linalg.EchelonBasis(F, 8 * deg)
    vectors = []

    def insert(v):
        if span.add(flatten(v.coords)):
            vectors.append(v)
            logger.debug("closure grew to dimension %d", span.rank())
            if span.rank() > 8:
                raise ClosureNotEightDimensional("closure of a e1, b u1 exceeds dimension 8")

    insert(S.basis(0).scale(a))
    insert(S.basis(2).scale(b))
    k = 0
    while k < len(vectors):
        for l in range(k + 1):
            insert(vectors[k] * vectors[l])
            insert(vectors[l] * vectors[k])
        k += 1
    if span.rank() != 8:
        raise ClosureNotEightDimensional("closure of a e1, b u1 has dimension " + str(span.rank()))

    # Step 3: reduced echelon basis, structure constants and norm over F.
    basis = []
    for row in span.rows():
        coords = []
        for i in range(8):
            coords.append(E.from_coordinates_over(F, [row.get(i * deg + r, F.zero()) for r in range(deg)]))
        basis.append(S.element(coords))
    labels = []
    for n, v in enumerate(basis):
        support = [i for i in range(8) if v.coords[i]]
        if len(support) == 1:
            c = v.coords[support[0]]
            labels.append(S.labels[support[0]] if c == 1 else "(" + str(c) + ")*" + S.labels[support[0]])
        else:
            labels.append("x" + str(n + 1))
    mul = {}
    for p in range(8):
        for q in range(8):
            coords = span.coordinates(flatten((basis[p] * basis[q]).coords))
            terms = [(r, c) for r, c in enumerate(coords) if c]
            if terms:
                mul[(p, q)] = terms
    norm_E = S.norm.restrict([v.coords for v in basis])
    norm = QuadraticForm(F, 8, dict((key, E.project(F, c)) for key, c in norm_E.coeffs.items()))
    return Algebra(F, labels, mul, None, norm, "Okubo O(" + str(alpha) + ", " + str(beta) + ")")
