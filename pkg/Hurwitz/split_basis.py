# split_basis.py: an 8-dimensional Hurwitz algebra with isotropic norm is
#   the split Cayley algebra. This module finds the change of basis:
#
#   a      isotropic vector (first in enumeration order),
#   b      first basis vector e_i with n(a, conj(e_i)) != 0, scaled so that it is 1,
#   e1     = ab, an idempotent; e2 = 1 - e1,
#   U      = {x : e1x = x = xe2, e2x = 0 = xe1},
#   V      = {x : e2x = x = xe1, e1x = 0 = xe2},
#   u1,u2  first two vectors of U, u3 the third rescaled so n(u1u2, u3) = 1,
#   v1 = u2u3, v2 = u3u1, v3 = u1u2.
# The transported table is then compared with split_cayley() entry by entry.

import logging
from collections import namedtuple

import linalg
from algebra_core import Element, LinearOperator, conjugate, transport, first_structure_difference
from quadforms import find_isotropic
from Hurwitz.Hurwitz_algebras import split_cayley, SPLIT_LABELS
from compalg_errors import NotEightDimensional, NoIsotropicFound, NotHurwitz, SingularMatrix

logger = logging.getLogger(__name__)

BasisChange = namedtuple('BasisChange', 'source target matrix verified')

# Null space of the stacked operators, as Elements of A.
def _common_kernel(A, operators):
    rows = []
    for op in operators:
        rows += op.matrix
    return [Element(A, v) for v in linalg.matrix_nullspace(A.field, rows, A.dim)]

def split_basis(C, budget=None):
    F = C.field
    # Step 1: preconditions.
    if C.dim != 8:
        raise NotEightDimensional("split_basis() needs an 8-dimensional algebra; got dimension " + str(C.dim))
    one = C.one()
    norm = C.require_norm()

    # Step 2: isotropic a and partner b.
    search = find_isotropic(norm, budget)
    if search.vector is None:
        if search.complete:
            raise NoIsotropicFound("the norm is anisotropic (enumeration complete)")
        raise NoIsotropicFound("no isotropic vector within the search budget (inconclusive)")
    a = Element(C, search.vector)
    b = None
    for e in C.basis_elements():
        c = norm.polar(a.coords, conjugate(C, e).coords)
        if c:
            b = e.scale(c.inverse())
            break
    if b is None:
        raise NotHurwitz("isotropic vector " + str(a) + " lies in the radical of the norm")
    logger.info("split basis: a = %s, b = %s", a, b)

    # Step 3: the idempotents.
    e1 = a * b
    if e1 * e1 != e1:
        raise NotHurwitz("e1 = ab = " + str(e1) + " is not idempotent")
    e2 = one - e1

    # Step 4: Peirce spaces U and V.
    I = LinearOperator.identity(F, 8)
    L1, R1 = C.left_mult(e1), C.right_mult(e1)
    L2, R2 = C.left_mult(e2), C.right_mult(e2)
    U = _common_kernel(C, [L1 - I, R2 - I, L2, R1])
    V = _common_kernel(C, [L2 - I, R1 - I, L1, R2])
    if len(U) != 3 or len(V) != 3:
        raise NotHurwitz("Peirce spaces have dimensions " + str(len(U)) + " and " + str(len(V)) + ", expected 3 and 3")

    # Step 5: normalized basis of U, then V from products.
    u1, u2, u3 = U
    c = norm.polar((u1 * u2).coords, u3.coords)
    if not c:
        raise NotHurwitz("n(u1u2, u3) vanishes on a basis of U")
    u3 = u3.scale(c.inverse())
    v1, v2, v3 = u2 * u3, u3 * u1, u1 * u2

    # Step 6: transport and compare with the literal table.
    columns = [e1, e2, u1, u2, u3, v1, v2, v3]
    P = linalg.transpose([x.coords for x in columns])
    try:
        T = transport(C, P, SPLIT_LABELS, "split Cayley")
    except SingularMatrix:
        raise NotHurwitz("the vectors e1, e2, u1, ..., v3 are linearly dependent")
    S = split_cayley(F)
    diff = first_structure_difference(T, S)
    if diff is not None:
        raise NotHurwitz("transported table differs from the split Cayley table at " + str(diff))
    if T.norm != S.norm:
        raise NotHurwitz("transported norm differs from the split Cayley norm")
    return BasisChange(C, S, P, True)

def basis_change_to_dict(bc):
    return {"matrix": [[str(x) for x in row] for row in bc.matrix], "verified": bc.verified}
