# Hurwitz_algebras.py: the unital composition (Hurwitz) algebras.
#
# Every Hurwitz algebra over a field F is one of
#   (1) the ground field F, norm a -> a^2,
#   (2) a quadratic etale algebra K = F1 + Fv, v^2 = v + mu 1 (4mu+1 != 0),
#   (3) a quaternion algebra CD(K, beta),
#   (4) an octonion (Cayley) algebra CD(Q, gamma),
# where the Cayley-Dickson double CD(Q, alpha) = Q + Qu has product
#   (a + bu)(c + du) = (ac + alpha dbar b) + (da + b cbar)u
# and norm n(a + bu) = n(a) - alpha n(b).
# The split Cayley algebra is also given literally by its multiplication
#   table in the basis (e1, e2, u1, u2, u3, v1, v2, v3).

# Step P1: Import needed core modules
import logging
import re

from algebra_core import Algebra, Element, algebra_from_products, algebra_from_table, conjugate, \
    check, make_report
from quadforms import QuadraticForm
from compalg_errors import DegenerateParameter, ZeroParameter, NoUnit, NoNorm, IsotropicQuaternion

logger = logging.getLogger(__name__)

SPLIT_LABELS = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"]

# Row x column = x*y, columns in the order of SPLIT_LABELS.
SPLIT_CAYLEY_TABLE = [
    "e1  0   u1  u2  u3  0   0   0",
    "0   e2  0   0   0   v1  v2  v3",
    "0   u1  0   v3  -v2 -e1 0   0",
    "0   u2  -v3 0   v1  0   -e1 0",
    "0   u3  v2  -v1 0   0   0   -e1",
    "v1  0   -e2 0   0   0   u3  -u2",
    "v2  0   0   -e2 0   -u3 0   u1",
    "v3  0   0   0   -e2 u2  -u1 0",
]

def ground(F):
    norm = QuadraticForm(F, 1, {(0, 0): F.one()})
    return Algebra(F, ["1"], {(0, 0): [(0, F.one())]}, [F.one()], norm, "ground")

def quadratic_etale(F, mu):
    mu = F(mu)
    if not 4 * mu + 1:
        raise DegenerateParameter("quadratic etale algebra needs 4mu+1 != 0; got mu = " + str(mu))
    mul = {(0, 0): [(0, F.one())],
           (0, 1): [(1, F.one())],
           (1, 0): [(1, F.one())],
           (1, 1): [(0, mu), (1, F.one())]}
    # n(e + dv) = e^2 + ed - mu d^2: the cross term is forced by v^2 - n(v,1)v + n(v)1 = 0.
    norm = QuadraticForm(F, 2, {(0, 0): F.one(), (0, 1): F.one(), (1, 1): -mu})
    return Algebra(F, ["1", "v"], mul, [F.one(), F.zero()], norm, "etale")

def _next_doubling_level(labels):
    levels = [int(n) for label in labels for n in re.findall(r"u(\d+)", label)]
    return max(levels) + 1 if levels else 1

def cayley_dickson(Q, alpha):
    F = Q.field
    alpha = F(alpha)
    if not alpha:
        raise ZeroParameter("Cayley-Dickson parameter must be nonzero")
    if Q.unit is None:
        raise NoUnit("Cayley-Dickson doubling needs a unital algebra")
    if Q.norm is None:
        raise NoNorm("Cayley-Dickson doubling needs a norm")
    d = Q.dim
    level = _next_doubling_level(Q.labels)
    u = "u" + str(level)
    labels = list(Q.labels) + [u if label == "1" else label + u for label in Q.labels]

    def split(coords):
        return Element(Q, coords[:d]), Element(Q, coords[d:])

    basis = [[F.one() if k == i else F.zero() for k in range(2 * d)] for i in range(2 * d)]

    def product_fn(i, j):
        a, b = split(basis[i])
        c, dd = split(basis[j])
        first = a * c + (conjugate(Q, dd) * b).scale(alpha)
        second = dd * a + b * conjugate(Q, c)
        return first.coords + second.coords

    coeffs = {}
    for (i, j), c in Q.norm.coeffs.items():
        coeffs[(i, j)] = c
        coeffs[(i + d, j + d)] = -alpha * c
    norm = QuadraticForm(F, 2 * d, coeffs)
    unit = list(Q.unit) + [F.zero()] * d
    logger.debug("Cayley-Dickson double of %r with parameter %s", Q, alpha)
    return algebra_from_products(F, labels, product_fn, unit, norm, "CD(" + (Q.name or "Q") + "," + str(alpha) + ")")

def split_cayley(F):
    norm = QuadraticForm(F, 8, {(0, 1): F.one(), (2, 5): F.one(), (3, 6): F.one(), (4, 7): F.one()})
    unit = [F.one(), F.one()] + [F.zero()] * 6
    return algebra_from_table(F, SPLIT_LABELS, SPLIT_CAYLEY_TABLE, unit, norm, "split Cayley")

def quaternion(F, alpha, beta):
    return cayley_dickson(cayley_dickson(ground(F), alpha), beta)

def octonion(F, alpha, beta, gamma):
    return cayley_dickson(quaternion(F, alpha, beta), gamma)

# The algebras ground(F), CD(ground,p0), CD(CD(ground,p0),p1), ...
def cd_tower(F, params):
    tower = [ground(F)]
    for p in params:
        tower.append(cayley_dickson(tower[-1], p))
    return tower

def verify_doubling_lemma(Q, alpha):
    """Basis-pair checks of the doubling rules inside C = CD(Q, alpha):
    Q is orthogonal to Qu, n(u) = -alpha, a(bu) = (ba)u, (au)b = (a bbar)u,
    (au)(bu) = alpha bbar a, and Q is a subalgebra."""
    F = Q.field
    alpha = F(alpha)
    C = cayley_dickson(Q, alpha)
    d = Q.dim
    zeros = [F.zero()] * d

    def inQ(x):
        return Element(C, x.coords + zeros)

    def timesu(x):
        return Element(C, zeros + x.coords)

    u = timesu(Q.one())
    rules = [
        ("Q orthogonal to Qu", lambda a, b: C.polar_of(inQ(a), timesu(b)) == 0),
        ("a(bu) = (ba)u", lambda a, b: inQ(a) * timesu(b) == timesu(b * a)),
        ("(au)b = (a bbar)u", lambda a, b: timesu(a) * inQ(b) == timesu(a * conjugate(Q, b))),
        ("(au)(bu) = alpha bbar a", lambda a, b: timesu(a) * timesu(b) == inQ((conjugate(Q, b) * a).scale(alpha))),
        ("Q is a subalgebra", lambda a, b: inQ(a) * inQ(b) == inQ(a * b)),
    ]
    checks = [check("n(u) = -alpha", C.norm_of(u) == -alpha, None if C.norm_of(u) == -alpha else "n(u) = " + str(C.norm_of(u)), True)]
    basis = Q.basis_elements()
    for name, rule in rules:
        witness = None
        for a in basis:
            for b in basis:
                if witness is None and not rule(a, b):
                    witness = "(" + str(a) + ", " + str(b) + ")"
        checks.append(check(name, witness is None, witness, True))
    return make_report("basis", checks)

def quaternion_inverse(A, q):
    nq = A.norm_of(q)
    if not nq:
        raise IsotropicQuaternion(str(q) + " has norm 0 and is not invertible")
    return conjugate(A, q).scale(nq.inverse())
