# para_Hurwitz_Petersson.py: symmetric composition algebras twisted from a
#   Hurwitz algebra C:
#
#   para-Hurwitz:  x . y = xbar ybar,
#   Petersson:     x * y = phi(xbar) phi^2(ybar), phi an automorphism with phi^3 = 1.
#
# phi = identity gives back the para-Hurwitz algebra. On the split Cayley
#   algebra two order-3 automorphisms are provided: the grading automorphism
#   (u_j -> w^(j-1) u_j, v_j -> w^(1-j) v_j) and the cyclic one
#   (u_j -> u_(j+1), v_j -> v_(j+1)); the Petersson algebra of the cyclic one
#   is the split Okubo algebra.

# Step P1: Import needed core modules
import logging

import indexedexp as ixp
from algebra_core import LinearOperator, algebra_from_products, conjugate
from scalars import is_omega
from compalg_errors import NoOmega, NotAutomorphism, NotOrderThree, BadArgument

logger = logging.getLogger(__name__)

class AlgebraAutomorphism(object):
    def __init__(self, algebra, operator):
        self.algebra = algebra
        self.operator = operator

    def apply(self, x):
        return self.operator.apply(x)

    def compose(self, other):
        return AlgebraAutomorphism(self.algebra, self.operator.compose(other.operator))

    def power(self, k):
        return AlgebraAutomorphism(self.algebra, self.operator.power(k))

    def is_identity(self):
        return self.operator.is_identity()

    # Smallest k >= 1 with phi^k = 1, or None if there is none up to max_order.
    def order(self, max_order=12):
        op = self.operator
        for k in range(1, max_order + 1):
            if op.is_identity():
                return k
            op = op.compose(self.operator)
        return None

    def failure(self):
        """First failing property, or None if this is an automorphism."""
        A = self.algebra
        if not self.operator.determinant():
            return "operator is not invertible"
        basis = A.basis_elements()
        images = [self.apply(e) for e in basis]
        for i in range(A.dim):
            for j in range(A.dim):
                if self.apply(basis[i] * basis[j]) != images[i] * images[j]:
                    return "not multiplicative at (" + A.labels[i] + ", " + A.labels[j] + ")"
        if A.norm is not None and A.norm.transform(self.operator.matrix) != A.norm:
            return "does not preserve the norm"
        return None

    def verify(self):
        reason = self.failure()
        if reason is not None:
            raise NotAutomorphism(reason)
        return self

def _split_layout(C):
    if C.dim != 8:
        raise BadArgument("needs the 8-dimensional split Cayley algebra; got dimension " + str(C.dim))

def grading_automorphism(C, omega):
    _split_layout(C)
    F = C.field
    omega = F(omega)
    if not is_omega(omega):
        raise NoOmega(str(omega) + " is not a primitive cube root of 1 in " + F.name())
    diagonal = [F.one(), F.one(), F.one(), omega, omega**2, F.one(), omega**2, omega]
    M = ixp.zerorank2(F, 8)
    for i in range(8):
        M[i][i] = diagonal[i]
    return AlgebraAutomorphism(C, LinearOperator(F, M)).verify()

def cyclic_automorphism(C):
    _split_layout(C)
    F = C.field
    # e1, e2 fixed; u1 -> u2 -> u3 -> u1; v1 -> v2 -> v3 -> v1.
    image = [0, 1, 3, 4, 2, 6, 7, 5]
    M = ixp.zerorank2(F, 8)
    for c in range(8):
        M[image[c]][c] = F.one()
    return AlgebraAutomorphism(C, LinearOperator(F, M)).verify()

def para(A):
    A.one()
    norm = A.require_norm()
    bars = [conjugate(A, e) for e in A.basis_elements()]

    def product_fn(i, j):
        return (bars[i] * bars[j]).coords
    return algebra_from_products(A.field, A.labels, product_fn, None, norm, "para(" + (A.name or "C") + ")")

def petersson(C, phi):
    if not phi.power(3).is_identity():
        raise NotOrderThree("phi^3 is not the identity (order " + str(phi.order()) + ")")
    phi.verify()
    norm = C.require_norm()
    phi2 = phi.power(2)
    bars = [conjugate(C, e) for e in C.basis_elements()]
    left = [phi.apply(x) for x in bars]
    right = [phi2.apply(x) for x in bars]

    def product_fn(i, j):
        return (left[i] * right[j]).coords
    return algebra_from_products(C.field, C.labels, product_fn, None, norm, "Petersson(" + (C.name or "C") + ")")
