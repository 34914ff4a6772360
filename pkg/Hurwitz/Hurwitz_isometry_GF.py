# Hurwitz_isometry_GF.py: isomorphism of Hurwitz algebras over a finite field
#   of odd characteristic. Two Hurwitz algebras are isomorphic iff their
#   norms are isometric; over GF(q) this is decided by dimension and isotropy:
#   in dimensions 4 and 8 the norm is always isotropic (hence split), so only
#   dimension 2 needs an isotropy test, done by complete enumeration.

import logging

from quadforms import find_isotropic
from compalg_errors import CharTwoUnsupported, InfiniteFieldUnsupported, MixedFields, NotHurwitz

logger = logging.getLogger(__name__)

def _is_isotropic(A):
    search = find_isotropic(A.require_norm(), A.field.order()**A.dim)
    return search.vector is not None

def hurwitz_isomorphic_gf(A, B):
    F = A.field
    if B.field != F:
        raise MixedFields("algebras are defined over " + F.name() + " and " + B.field.name())
    if not F.is_finite():
        raise InfiniteFieldUnsupported("isomorphism testing needs a finite field; " + F.name() + " is infinite")
    if F.characteristic == 2:
        raise CharTwoUnsupported("isomorphism testing over " + F.name() + " is not supported")
    A.one()
    B.one()
    A.require_norm()
    B.require_norm()
    for X in (A, B):
        if X.dim not in (1, 2, 4, 8):
            raise NotHurwitz(repr(X) + " has dimension " + str(X.dim) + "; Hurwitz algebras have dimension 1, 2, 4 or 8")
    if A.dim != B.dim:
        return False
    if A.dim != 2:
        return True
    iso_A = _is_isotropic(A)
    iso_B = _is_isotropic(B)
    logger.info("isotropy of the two norms: %s, %s", iso_A, iso_B)
    return iso_A == iso_B
