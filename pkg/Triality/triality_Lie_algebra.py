# triality_Lie_algebra.py: local triality for a symmetric composition
#   algebra (S, *, n), char F != 2.
#
#   so(S, n)  = {d : n(d(x), y) + n(x, d(y)) = 0},
#   tri(S)    = {(d0, d1, d2) in so(S, n)^3 : d0(x*y) = d1(x)*y + x*d2(y)},
#   sigma_xy  = n(x, .)y - n(y, .)x,
#   t_xy      = (sigma_xy, n(x,y)/2 id - R_x L_y, n(x,y)/2 id - L_x R_y),
#   theta     : (d0, d1, d2) -> (d2, d0, d1).
# In dimension 8 the projection (d0, d1, d2) -> d0 is an isomorphism onto
#   so(S, n) and tri(S) is spanned by the t_xy; in smaller dimensions the
#   t_xy span a proper subspace and tri(S) comes from the linear constraints.

import logging

import linalg
from algebra_core import LinearOperator
from compalg_errors import CharTwo, WrongDimension, NotSkew, NotIsometry, NoSolution, TrialityViolation, BadArgument

logger = logging.getLogger(__name__)

class TrialityTriple(object):
    def __init__(self, algebra, d0, d1, d2):
        self.algebra = algebra
        self.components = (d0, d1, d2)

    @staticmethod
    def zero(S):
        z = LinearOperator.zero(S.field, S.dim)
        return TrialityTriple(S, z, z, z)

    @staticmethod
    def from_flat(S, flat):
        d = S.dim
        return TrialityTriple(S, *[LinearOperator.from_flat(S.field, d, flat[c * d * d:(c + 1) * d * d]) for c in range(3)])

    def flatten(self):
        return self.components[0].flatten() + self.components[1].flatten() + self.components[2].flatten()

    def bracket(self, other):
        return TrialityTriple(self.algebra, *[a.commutator(b) for a, b in zip(self.components, other.components)])

    def theta(self):
        d0, d1, d2 = self.components
        return TrialityTriple(self.algebra, d2, d0, d1)

    def __add__(self, other):
        return TrialityTriple(self.algebra, *[a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return TrialityTriple(self.algebra, *[a - b for a, b in zip(self.components, other.components)])

    def scale(self, c):
        return TrialityTriple(self.algebra, *[a.scale(c) for a in self.components])

    def is_zero(self):
        return all(a.is_zero() for a in self.components)

    def __eq__(self, other):
        return isinstance(other, TrialityTriple) and self.components == other.components

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

# Step 1: the orthogonal Lie algebra.
def _check_char(S):
    if S.field.characteristic == 2:
        raise CharTwo("local triality needs characteristic != 2")

def sigma(S, x, y):
    norm = S.require_norm()
    columns = []
    for e in S.basis_elements():
        columns.append((y.scale(norm.polar(x.coords, e.coords)) - x.scale(norm.polar(y.coords, e.coords))).coords)
    return LinearOperator.from_columns(S.field, columns)

def skew_witness(S, d):
    """First basis pair (a, b) with n(d e_a, e_b) + n(e_a, d e_b) != 0, or None."""
    G = S.require_norm().polar_matrix()
    DtG = linalg.matmul(S.field, linalg.transpose(d.matrix), G)
    GD = linalg.matmul(S.field, G, d.matrix)
    for a in range(S.dim):
        for b in range(S.dim):
            if DtG[a][b] + GD[a][b]:
                return (S.labels[a], S.labels[b])
    return None

def so_basis(S):
    _check_char(S)
    if S.dim != 8:
        raise WrongDimension("so(S, n) is built for 8-dimensional algebras; got dimension " + str(S.dim))
    norm = S.require_norm()
    if norm.classify().kind != "nondegenerate":
        raise BadArgument("so(S, n) needs a nondegenerate norm")
    echelon = linalg.EchelonBasis(S.field, 64)
    basis = S.basis_elements()
    out = []
    for i in range(8):
        for j in range(i + 1, 8):
            s = sigma(S, basis[i], basis[j])
            if echelon.add(linalg.dense_to_sparse(s.flatten())):
                out.append(s)
    if len(out) != 28:
        raise TrialityViolation("the sigma_xy span a space of dimension " + str(len(out)) + ", expected 28")
    return out

# Step 2: triples and the related-derivation identity.
def related_witness(S, d0, d1, d2):
    """First basis pair (x, y) with d0(x*y) != d1(x)*y + x*d2(y), or None."""
    basis = S.basis_elements()
    images1 = [d1.apply(e) for e in basis]
    images2 = [d2.apply(e) for e in basis]
    for i in range(S.dim):
        for j in range(S.dim):
            if d0.apply(basis[i] * basis[j]) != images1[i] * basis[j] + basis[i] * images2[j]:
                return (S.labels[i], S.labels[j])
    return None

def triple_failure(t):
    S = t.algebra
    for n, d in enumerate(t.components):
        w = skew_witness(S, d)
        if w is not None:
            return "component d" + str(n) + " is not skew at (" + ", ".join(w) + ")"
    w = related_witness(S, *t.components)
    if w is not None:
        return "d0(x*y) != d1(x)*y + x*d2(y) at (" + ", ".join(w) + ")"
    return None

def t_triple(S, x, y, verify=True):
    _check_char(S)
    F = S.field
    norm = S.require_norm()
    half = norm.polar(x.coords, y.coords) / 2
    I = LinearOperator.identity(F, S.dim).scale(half)
    t = TrialityTriple(S, sigma(S, x, y),
                       I - S.right_mult(x).compose(S.left_mult(y)),
                       I - S.left_mult(x).compose(S.right_mult(y)))
    if verify:
        reason = triple_failure(t)
        if reason is not None:
            raise TrialityViolation("t(" + str(x) + ", " + str(y) + "): " + reason)
    return t

# Step 3: subspaces of tri(S), held in reduced echelon form on flattened triples.
class TriSpace(object):
    def __init__(self, S, triples):
        self.algebra = S
        self.ncols = 3 * S.dim * S.dim
        self.echelon = linalg.EchelonBasis(S.field, self.ncols)
        for t in triples:
            self.echelon.add(linalg.dense_to_sparse(t.flatten()))
        self.basis = [TrialityTriple.from_flat(S, linalg.sparse_to_dense(S.field, row, self.ncols))
                      for row in self.echelon.rows()]
        self.dim = len(self.basis)

    def coordinates(self, t):
        return self.echelon.coordinates(linalg.dense_to_sparse(t.flatten()))

    def contains(self, t):
        return self.echelon.contains(linalg.dense_to_sparse(t.flatten()))

    def closure_witness(self):
        """First basis pair whose bracket leaves the space, or None."""
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                if not self.contains(self.basis[a].bracket(self.basis[b])):
                    return (a, b)
        return None

def _t_span(S):
    basis = S.basis_elements()
    out = []
    echelon = linalg.EchelonBasis(S.field, 3 * S.dim * S.dim)
    for i in range(S.dim):
        for j in range(i + 1, S.dim):
            t = t_triple(S, basis[i], basis[j])
            if echelon.add(linalg.dense_to_sparse(t.flatten())):
                out.append(t)
    return out

def tri_basis(S):
    _check_char(S)
    if S.dim != 8:
        raise WrongDimension("tri_basis() is built for 8-dimensional algebras; got dimension " + str(S.dim))
    out = _t_span(S)
    if len(out) != 28:
        raise TrialityViolation("the t_xy span a space of dimension " + str(len(out)) + ", expected 28")
    w = TriSpace(S, out).closure_witness()
    if w is not None:
        raise TrialityViolation("span of the t_xy is not closed under the bracket (basis pair " + str(w) + ")")
    logger.info("tri(%r) has dimension 28", S)
    return out

# Rows of the linear system for tri(S): unknown D_c[r][col] is column
#   c*d*d + r*d + col. Skewness first, then equation (i, j, k):
#   sum_m s_ijm D0[k][m] - sum_r s_rjk D1[r][i] - sum_r s_irk D2[r][j] = 0.
def _skew_rows(S, offset):
    F = S.field
    d = S.dim
    G = S.require_norm().polar_matrix()
    rows = []
    for a in range(d):
        for b in range(a, d):
            row = {}
            for r in range(d):
                if G[r][b]:
                    row[offset + r * d + a] = row.get(offset + r * d + a, F.zero()) + G[r][b]
                if G[a][r]:
                    row[offset + r * d + b] = row.get(offset + r * d + b, F.zero()) + G[a][r]
            row = dict((col, c) for col, c in row.items() if c)
            if row:
                rows.append(row)
    return rows

def _related_rows(S):
    F = S.field
    d = S.dim
    eqs = [dict() for n in range(d * d * d)]

    def put(eq, col, c):
        eqs[eq][col] = eqs[eq].get(col, F.zero()) + c

    for (p, q), terms in S.mul.items():
        for m, c in terms:
            for k in range(d):
                put(p * d * d + q * d + k, k * d + m, c)
            for i in range(d):
                put(i * d * d + q * d + m, d * d + p * d + i, -c)
            for j in range(d):
                put(p * d * d + j * d + m, 2 * d * d + q * d + j, -c)
    return [dict((col, c) for col, c in eq.items() if c) for eq in eqs]

def tri_solve(S):
    """Basis of tri(S) from the full constraint system (any dimension)."""
    _check_char(S)
    d = S.dim
    rows = _skew_rows(S, 0) + _skew_rows(S, d * d) + _skew_rows(S, 2 * d * d) + _related_rows(S)
    rows = [row for row in rows if row]
    flats = linalg.nullspace(S.field, rows, 3 * d * d)
    logger.info("tri(%r) from the constraint system: dimension %d", S, len(flats))
    return [TrialityTriple.from_flat(S, f) for f in flats]

def tri_space(S):
    """tri(S) as a TriSpace; for dim >= 4 the t_xy span is checked to lie inside
    it, and to fill it in dimension 8."""
    space = TriSpace(S, tri_solve(S))
    if S.dim >= 4:
        spanning = _t_span(S)
        for t in spanning:
            if not space.contains(t):
                raise TrialityViolation("a t_xy triple is not in the solution space of tri(S)")
        if S.dim == 8 and len(spanning) != space.dim:
            raise TrialityViolation("tri(S) has dimension " + str(space.dim) + " but the t_xy span " + str(len(spanning)))
        logger.info("t_xy span %d of the %d dimensions of tri(%r)", len(spanning), space.dim, S)
    return space

# Step 4: the projection pi0 and its inverse.
def pi0_inverse(S, d0):
    _check_char(S)
    w = skew_witness(S, d0)
    if w is not None:
        raise NotSkew("operator is not skew for the polar form at (" + ", ".join(w) + ")")
    F = S.field
    d = S.dim
    dd = d * d
    known = d0.flatten()
    rows = []
    rhs = []
    for row in _skew_rows(S, 0) + _skew_rows(S, dd):
        rows.append(row)
        rhs.append(F.zero())
    for eq in _related_rows(S):
        b = F.zero()
        row = {}
        for col, c in eq.items():
            if col < dd:
                b = b - c * known[col]
            else:
                row[col - dd] = c
        if row or b:
            rows.append(row)
            rhs.append(b)
    solution = linalg.solve(F, rows, rhs, 2 * dd)
    if solution is None:
        raise NoSolution("no (d1, d2) completes d0 to an element of tri(S)")
    return TrialityTriple(S, d0, LinearOperator.from_flat(F, d, solution[:dd]), LinearOperator.from_flat(F, d, solution[dd:]))

def theta_fixed_dimension(S, space=None):
    if space is None:
        space = tri_space(S)
    differences = [linalg.dense_to_sparse((t.theta() - t).flatten()) for t in space.basis]
    return space.dim - linalg.rank(S.field, differences, space.ncols)

# Step 5: related isometry triples f0(x*y) = f1(x)*f2(y).
def check_related_isometry_triple(S, f0, f1, f2):
    norm = S.require_norm()
    for n, f in enumerate((f0, f1, f2)):
        if not f.determinant():
            raise NotIsometry("f" + str(n) + " is not invertible")
        if norm.transform(f.matrix) != norm:
            raise NotIsometry("f" + str(n) + " does not preserve the norm")
    basis = S.basis_elements()
    images1 = [f1.apply(e) for e in basis]
    images2 = [f2.apply(e) for e in basis]
    for i in range(S.dim):
        for j in range(S.dim):
            if f0.apply(basis[i] * basis[j]) != images1[i] * images2[j]:
                return False
    return True
