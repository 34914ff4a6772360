# quaternion_rotations.py: the rotation maps of a quaternion algebra
#   Q = F1 + Fi + Fj + Fk (any CD(CD(F, alpha), beta)):
#
#   rotation_so3(q):    x -> q x q^-1 on the trace-zero part (i, j, k),
#   rotation_so4(p, q): x -> p x q^-1 on all of Q (1, i, j, k),
# with q^-1 = qbar/n(q) exactly; no normalization to unit quaternions.
# rotation_so4(p, q) is a similitude of the norm with multiplier n(p)/n(q).

import logging

import linalg
from Hurwitz.Hurwitz_algebras import quaternion_inverse
from compalg_errors import NotQuaternionAlgebra

logger = logging.getLogger(__name__)

def check_quaternion_ambient(A):
    if A.dim != 4:
        raise NotQuaternionAlgebra("rotations need a 4-dimensional quaternion algebra; got dimension " + str(A.dim))
    if A.unit is None or A.unit != [A.field.one()] + [A.field.zero()] * 3:
        raise NotQuaternionAlgebra("the first basis vector must be the unit")
    norm = A.require_norm()
    basis = A.basis_elements()
    for e in basis[1:]:
        if norm.polar(basis[0].coords, e.coords):
            raise NotQuaternionAlgebra("basis vector " + str(e) + " is not orthogonal to 1")
    for x in basis:
        for y in basis:
            for z in basis:
                if (x * y) * z != x * (y * z):
                    raise NotQuaternionAlgebra("algebra is not associative at (" + str(x) + ", " + str(y) + ", " + str(z) + ")")

def rotation_so3(A, q):
    check_quaternion_ambient(A)
    qinv = quaternion_inverse(A, q)
    M = linalg.zero_matrix(A.field, 3, 3)
    for c in range(3):
        image = q * A.basis(c + 1) * qinv
        if image.coords[0]:
            raise NotQuaternionAlgebra("conjugation does not preserve the trace-zero part")
        for r in range(3):
            M[r][c] = image.coords[r + 1]
    return M

def rotation_so4(A, p, q):
    check_quaternion_ambient(A)
    qinv = quaternion_inverse(A, q)
    M = linalg.zero_matrix(A.field, 4, 4)
    for c in range(4):
        image = p * A.basis(c) * qinv
        for r in range(4):
            M[r][c] = image.coords[r]
    return M

# Gram matrix of the polar form on the basis vectors listed in `indices`.
def polar_gram(A, indices):
    norm = A.require_norm()
    return [[norm.polar(A.basis(i).coords, A.basis(j).coords) for j in indices] for i in indices]

def similitude_multiplier(A, M, indices):
    """lambda with M^T G M = lambda G, or None if M is not a similitude."""
    F = A.field
    G = polar_gram(A, indices)
    MtGM = linalg.matmul(F, linalg.transpose(M), linalg.matmul(F, G, M))
    lam = None
    for i in range(len(G)):
        for j in range(len(G)):
            if G[i][j]:
                lam = MtGM[i][j] / G[i][j]
                break
        if lam is not None:
            break
    if lam is None:
        return None
    for i in range(len(G)):
        for j in range(len(G)):
            if MtGM[i][j] != lam * G[i][j]:
                return None
    return lam

def is_polar_orthogonal(A, M, indices):
    return similitude_multiplier(A, M, indices) == 1
