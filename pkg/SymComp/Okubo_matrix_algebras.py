# Okubo_matrix_algebras.py: Okubo algebras and the way back to degree-3
#   associative (or alternative) algebras.
#
# On the trace-zero elements of a degree-3 central simple algebra, with w a
#   primitive cube root of 1,
#       x * y = w xy - w^2 yx - ((w - w^2)/3) tr(xy) 1,
#       n(x)  = s2(x)  (sum of the principal 2x2 minors; -tr(x^2)/2 when 2 is invertible).
#   okubo_sl3:          3x3 matrices over F, w in F.
#   okubo_second_kind:  w not in F; K = F[w], 3x3 matrices over K with
#                       J(x) = conjugate transpose, S = {x : tr x = 0, J(x) = -x}.
#   split_okubo:        the literal table, canonical basis order.
# recover_associative inverts the construction:
#   xy = (w/(w^2-w)) x*y + (w^2/(w^2-w)) y*x - (1/3) n(x,y) 1  on F1 + S.

import logging

import compalg_param_funcs as par
import indexedexp as ixp
import linalg
from algebra_core import Element, algebra_from_products, algebra_from_table, associator, \
    zero_check, generic_elements, check, make_report
from quadforms import QuadraticForm
from scalars import adjoin_omega, find_omega, is_omega, seeded_rng
from Hurwitz.Hurwitz_algebras import SPLIT_LABELS
from compalg_errors import CharThree, NoOmega, OmegaPresent, ClosureNotEightDimensional

logger = logging.getLogger(__name__)

# x*y in the canonical order (e1, e2, u1, u2, u3, v1, v2, v3).
SPLIT_OKUBO_TABLE = [
    "e2  0   0   0   0   -v3 -v1 -v2",
    "0   e1  -u3 -u1 -u2 0   0   0",
    "-u2 0   v1  -v3 0   0   0   -e1",
    "-u3 0   0   v2  -v1 -e1 0   0",
    "-u1 0   -v2 0   v3  0   -e1 0",
    "0   -v2 0   0   -e2 u1  -u3 0",
    "0   -v3 -e2 0   0   0   u2  -u1",
    "0   -v1 0   -e2 0   -u2 0   u3",
]

SL3_LABELS = ["E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"]

def split_norm(F):
    return QuadraticForm(F, 8, {(0, 1): F.one(), (2, 5): F.one(), (3, 6): F.one(), (4, 7): F.one()})

def split_okubo(F):
    return algebra_from_table(F, SPLIT_LABELS, SPLIT_OKUBO_TABLE, None, split_norm(F), "split Okubo")

# Step 1: 3x3 matrix helpers.
def s2(x):
    out = x[0][0] * 0
    for i in range(3):
        for j in range(i + 1, 3):
            out = out + x[i][i] * x[j][j] - x[i][j] * x[j][i]
    return out

def okubo_product(K, omega, x, y):
    xy = linalg.matmul(K, x, y)
    yx = linalg.matmul(K, y, x)
    c = (omega - omega**2) / 3 * ixp.trace(xy)
    out = ixp.zerorank2(K, 3)
    for i in range(3):
        for j in range(3):
            out[i][j] = omega * xy[i][j] - omega**2 * yx[i][j] - (c if i == j else 0)
    return out

# Quadratic form with n(sum y_k b_k) = value(sum y_k b_k), by polarization on the basis.
def norm_by_polarization(F, basis, value, add):
    coeffs = {}
    d = len(basis)
    values = [value(b) for b in basis]
    for k in range(d):
        coeffs[(k, k)] = values[k]
        for l in range(k + 1, d):
            coeffs[(k, l)] = value(add(basis[k], basis[l])) - values[k] - values[l]
    return QuadraticForm(F, d, coeffs)

def _matrix_add(x, y):
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)]

def _sl3_basis(F):
    basis = []
    for (r, c) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]:
        M = ixp.zerorank2(F, 3)
        M[r][c] = F.one()
        basis.append(M)
    for diagonal in ([1, -1, 0], [0, 1, -1]):
        M = ixp.zerorank2(F, 3)
        for i in range(3):
            M[i][i] = F(diagonal[i])
        basis.append(M)
    return basis

def _sl3_coordinates(x):
    # diag(d1, d2, d3) = d1 H1 - d3 H2 when d1 + d2 + d3 = 0.
    return [x[0][1], x[0][2], x[1][0], x[1][2], x[2][0], x[2][1], x[0][0], -x[2][2]]

def _check_omega(F, omega):
    if F.characteristic == 3:
        raise CharThree("Okubo matrix algebras need characteristic != 3")
    if omega is None:
        omega = find_omega(F)
        if omega is None:
            raise NoOmega("x^2+x+1 has no root in " + F.name())
    omega = F(omega)
    if not is_omega(omega):
        raise NoOmega(str(omega) + " is not a primitive cube root of 1 in " + F.name())
    return omega

def okubo_sl3(F, omega=None):
    omega = _check_omega(F, omega)
    basis = _sl3_basis(F)

    def product_fn(i, j):
        return _sl3_coordinates(okubo_product(F, omega, basis[i], basis[j]))
    norm = norm_by_polarization(F, basis, s2, _matrix_add)
    return algebra_from_products(F, SL3_LABELS, product_fn, None, norm, "Okubo sl3")

def okubo_second_kind(F):
    if F.characteristic == 3:
        raise CharThree("Okubo matrix algebras need characteristic != 3")
    if find_omega(F) is not None:
        raise OmegaPresent(F.name() + " contains a primitive cube root of 1; use okubo_sl3")
    K, w = adjoin_omega(F)

    # Step 1: S as an F-subspace of F^18; entry (r,c) has parts (a, b) for a + b w.
    def idx(r, c, part):
        return 2 * (3 * r + c) + part
    rows = [{idx(0, 0, 0): F.one(), idx(1, 1, 0): F.one(), idx(2, 2, 0): F.one()},
            {idx(0, 0, 1): F.one(), idx(1, 1, 1): F.one(), idx(2, 2, 1): F.one()}]
    for r in range(3):
        for c in range(3):
            # tau(x_cr) + x_rc = 0 with tau(a + b w) = (a - b) - b w.
            first = {}
            second = {}
            for key, val in ((idx(c, r, 0), 1), (idx(c, r, 1), -1), (idx(r, c, 0), 1)):
                first[key] = first.get(key, F.zero()) + val
            for key, val in ((idx(c, r, 1), -1), (idx(r, c, 1), 1)):
                second[key] = second.get(key, F.zero()) + val
            rows.append(dict((k, v) for k, v in first.items() if v))
            rows.append(dict((k, v) for k, v in second.items() if v))
    flats = linalg.nullspace(F, rows, 18)
    if len(flats) != 8:
        raise ClosureNotEightDimensional("skew-hermitian trace-zero matrices span dimension " + str(len(flats)))

    def to_matrix(flat):
        return [[flats_entry(flat, r, c) for c in range(3)] for r in range(3)]

    def flats_entry(flat, r, c):
        return K(flat[idx(r, c, 0)]) + K(flat[idx(r, c, 1)]) * w

    basis = [to_matrix(f) for f in flats]
    coordinate_rows = [dict((a, flats[a][k]) for a in range(8) if flats[a][k]) for k in range(18)]

    def flatten(x):
        out = []
        for r in range(3):
            for c in range(3):
                out += K.coordinates_over(F, x[r][c])
        return out

    def product_fn(i, j):
        coords = linalg.solve(F, coordinate_rows, flatten(okubo_product(K, w, basis[i], basis[j])), 8)
        if coords is None:
            raise ClosureNotEightDimensional("product leaves the skew-hermitian trace-zero matrices")
        return coords

    norm_K = norm_by_polarization(K, basis, s2, _matrix_add)
    norm = QuadraticForm(F, 8, dict((key, K.project(F, c)) for key, c in norm_K.coeffs.items()))
    labels = ["s" + str(a + 1) for a in range(8)]
    logger.info("Okubo algebra of the second kind over %s via %s", F.name(), K.name())
    return algebra_from_products(F, labels, product_fn, None, norm, "Okubo second kind")

def recover_associative(S, omega=None):
    """The algebra F1 + S and a report: associative, alternative, and a sampled
    check that s^3 + n(s)s lies in F1 for s in S."""
    F = S.field
    omega = _check_omega(F, omega)
    norm = S.require_norm()
    d = S.dim
    denom = (omega**2 - omega).inverse()
    a = omega * denom
    b = omega**2 * denom
    third = F(3).inverse()
    basis = S.basis_elements()

    def product_fn(i, j):
        if i == 0:
            return [F.one() if k == j else F.zero() for k in range(d + 1)]
        if j == 0:
            return [F.one() if k == i else F.zero() for k in range(d + 1)]
        x, y = basis[i - 1], basis[j - 1]
        s = (x * y).scale(a) + (y * x).scale(b)
        return [-third * norm.polar(x.coords, y.coords)] + s.coords

    unit = [F.one()] + [F.zero()] * d
    A = algebra_from_products(F, ["1"] + list(S.labels), product_fn, unit, None, "recovered")

    x, y, z = generic_elements(A, ["x", "y", "z"])
    checks = [zero_check("associative", associator(A, x, y, z), required=False),
              zero_check("left alternative", x * (x * y) - (x * x) * y),
              zero_check("right alternative", (y * x) * x - y * (x * x))]
    rng = seeded_rng()
    witness = None
    for n in range(par.parval_from_str("algebra_core::sample_count")):
        s_coords = [F.random_element(rng) for k in range(d)]
        s = Element(A, [F.zero()] + s_coords)
        cubic = (s * s) * s + s.scale(norm.evaluate(s_coords))
        if any(cubic.coords[1:]):
            witness = str(s)
            break
    checks.append(check("s^3 + n(s)s in F1 (sampled)", witness is None, witness, True))
    return A, make_report("symbolic", checks)
