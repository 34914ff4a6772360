# Magic_Square.py: the Lie algebra
#
#   g(S, S') = tri(S) + tri(S') + iota0(S x S') + iota1(S x S') + iota2(S x S')
#
# of two symmetric composition algebras (S, *, n), (S', *', n'), char F != 2, 3,
#   with the anticommutative bracket
#   [(d0,d1,d2), iota_i(x x x')]     = iota_i(d_i(x) x x'),
#   [(d0',d1',d2'), iota_i(x x x')]  = iota_i(x x d_i'(x')),
#   [iota_i(x x x'), iota_i+1(y x y')] = iota_i+2((x*y) x (x'*'y')),       (indices mod 3)
#   [iota_i(x x x'), iota_i(y x y')]   = n'(x',y') theta^i(t_xy) + n(x,y) theta'^i(t'_x'y'),
# and the componentwise bracket on tri(S) + tri(S'). Over S_r, S'_s of
#   dimensions r, s in {1, 2, 4, 8} this gives Freudenthal's Magic Square.
#
# Basis order: tri(S), tri(S'), then iota0, iota1, iota2, each in
#   (p*dim S' + q) order for iota_i(e_p x e'_q).

# Step P1: Import needed core modules
import logging

from algebra_core import check, make_report, norm_associativity_witness, verify_linearized
from Hurwitz.Hurwitz_algebras import cd_tower
from SymComp.para_Hurwitz_Petersson import para
from SymComp.Okubo_matrix_algebras import split_okubo
from Triality.triality_Lie_algebra import tri_space, t_triple
from MagicSquare.LieAlgebra import LieAlgebra
from compalg_errors import BadCharacteristic, NotSymmetricComposition, MixedFields, TrialityViolation, BadArgument

logger = logging.getLogger(__name__)

MAGIC_DIMS = [1, 2, 4, 8]
MAGIC_DIMENSIONS = [[3, 8, 21, 52],
                    [8, 16, 35, 78],
                    [21, 35, 66, 133],
                    [52, 78, 133, 248]]

def check_symmetric_composition(S):
    """Basis-level test, exact in characteristic != 2: nondegenerate norm,
    n(x*y,z) = n(x,y*z) and the linearized composition identities."""
    if S.dim not in MAGIC_DIMS:
        raise NotSymmetricComposition(repr(S) + " has dimension " + str(S.dim) + "; symmetric composition algebras have dimension 1, 2, 4 or 8")
    norm = S.require_norm()
    if norm.classify().kind != "nondegenerate":
        raise NotSymmetricComposition(repr(S) + " has a degenerate norm")
    w = norm_associativity_witness(S)
    if w is not None:
        raise NotSymmetricComposition("n(x*y,z) != n(x,y*z) at (" + ", ".join(w) + ")")
    rep = verify_linearized(S)
    if not rep.passed:
        failed = [c for c in rep.checks if not c.passed][0]
        raise NotSymmetricComposition(failed.name + " fails at " + failed.witness)

class MagicSquareConstruction(object):
    def __init__(self, S, S2, T=None, T2=None):
        F = S.field
        if S2.field != F:
            raise MixedFields("g(S, S') needs both algebras over one field; got " + F.name() + " and " + S2.field.name())
        if F.characteristic in (2, 3):
            raise BadCharacteristic("g(S, S') is built in characteristic != 2, 3; " + F.name() + " has characteristic " + str(F.characteristic))
        check_symmetric_composition(S)
        check_symmetric_composition(S2)
        self.S, self.S2 = S, S2
        self.T = T if T is not None else tri_space(S)
        self.T2 = T2 if T2 is not None else tri_space(S2)
        a, b = self.T.dim, self.T2.dim
        self.d, self.d2 = S.dim, S2.dim
        self.iota_size = self.d * self.d2
        self.offsets = [0, a, a + b, a + b + self.iota_size, a + b + 2 * self.iota_size]
        self.dim = a + b + 3 * self.iota_size
        labels = ["t" + str(k + 1) for k in range(a)] + ["t'" + str(k + 1) for k in range(b)]
        for i in range(3):
            labels += ["i" + str(i) + "(" + S.labels[p] + "," + S2.labels[q] + ")" for p in range(self.d) for q in range(self.d2)]
        sectors = [("tri", 0, a), ("tri'", a, b)] + [("iota" + str(i), self.offsets[2 + i], self.iota_size) for i in range(3)]
        logger.info("assembling g(%r, %r): dimension %d", S, S2, self.dim)
        self.lie = LieAlgebra(F, labels, self._brackets(), sectors, "g(" + (S.name or "S") + ", " + (S2.name or "S'") + ")")

    def iota_index(self, i, p, q):
        return self.offsets[2 + i % 3] + p * self.d2 + q

    # Step 1: coordinates of theta^i(t_xy) in the basis of tri(S), for basis pairs p < r.
    @staticmethod
    def _theta_t_coordinates(S, T):
        out = [dict() for i in range(3)]
        basis = S.basis_elements()
        for p in range(S.dim):
            for r in range(p + 1, S.dim):
                t = t_triple(S, basis[p], basis[r], verify=False)
                for i in range(3):
                    coords = T.coordinates(t)
                    if coords is None:
                        raise TrialityViolation("theta^" + str(i) + " t(" + S.labels[p] + ", " + S.labels[r] + ") is not in tri(S)")
                    out[i][(p, r)] = coords
                    t = t.theta()
        return out

    def _brackets(self):
        S, S2, T, T2 = self.S, self.S2, self.T, self.T2
        F = S.field
        a, b = T.dim, T2.dim
        d, d2 = self.d, self.d2
        br = {}

        def put(i, j, k, c):
            if c:
                terms = br.setdefault((i, j), {})
                terms[k] = terms.get(k, F.zero()) + c

        # Step 2: tri(S) + tri(S'), componentwise.
        for space, offset in ((T, 0), (T2, a)):
            for k in range(space.dim):
                for l in range(k + 1, space.dim):
                    coords = space.coordinates(space.basis[k].bracket(space.basis[l]))
                    if coords is None:
                        raise TrialityViolation("tri is not closed under the bracket")
                    for m, c in enumerate(coords):
                        put(offset + k, offset + l, offset + m, c)

        # Step 3: tri acting on the iota sectors.
        for k in range(a):
            for i in range(3):
                D = T.basis[k].components[i].matrix
                for p in range(d):
                    for q in range(d2):
                        for r in range(d):
                            put(k, self.iota_index(i, p, q), self.iota_index(i, r, q), D[r][p])
        for k in range(b):
            for i in range(3):
                D = T2.basis[k].components[i].matrix
                for p in range(d):
                    for q in range(d2):
                        for s in range(d2):
                            put(a + k, self.iota_index(i, p, q), self.iota_index(i, p, s), D[s][q])

        # Step 4: iota_i x iota_i+1 -> iota_i+2.
        for i in range(3):
            for (p, r), terms in S.mul.items():
                for (q, s), terms2 in S2.mul.items():
                    x, y = self.iota_index(i, p, q), self.iota_index(i + 1, r, s)
                    for m, c in terms:
                        for n, c2 in terms2:
                            put(x, y, self.iota_index(i + 2, m, n), c * c2)

        # Step 5: iota_i x iota_i -> tri(S) + tri(S').
        G = S.require_norm().polar_matrix()
        G2 = S2.require_norm().polar_matrix()
        tc = self._theta_t_coordinates(S, T)
        tc2 = self._theta_t_coordinates(S2, T2)

        def t_coords(table, p, r):
            if p < r:
                return [(m, c) for m, c in enumerate(table[(p, r)])]
            if p > r:
                return [(m, -c) for m, c in enumerate(table[(r, p)])]
            return []

        for i in range(3):
            for x in range(self.iota_size):
                p, q = divmod(x, d2)
                for y in range(x + 1, self.iota_size):
                    r, s = divmod(y, d2)
                    X, Y = self.iota_index(i, p, q), self.iota_index(i, r, s)
                    if G2[q][s]:
                        for m, c in t_coords(tc[i], p, r):
                            put(X, Y, m, G2[q][s] * c)
                    if G[p][r]:
                        for m, c in t_coords(tc2[i], q, s):
                            put(X, Y, a + m, G[p][r] * c)
        return br

    # Step 6: the cyclic relabeling Theta: tri -> theta(tri), tri' -> theta'(tri'),
    #   iota_i -> iota_i+1, as a map basis index -> sparse vector.
    def theta_map(self):
        images = []
        for space, offset in ((self.T, 0), (self.T2, self.T.dim)):
            for t in space.basis:
                coords = space.coordinates(t.theta())
                images.append(dict((offset + m, c) for m, c in enumerate(coords) if c))
        for i in range(3):
            for x in range(self.iota_size):
                images.append({self.offsets[2 + (i + 1) % 3] + x: self.S.field.one()})
        return images

    def element(self, tri=None, tri2=None, iota=None):
        return MagicSquareElement(self, tri, tri2, iota)

    def iota(self, i, x, x2):
        coords = [xp * xq for xp in x.coords for xq in x2.coords]
        iota = [None, None, None]
        iota[i % 3] = coords
        return MagicSquareElement(self, None, None, iota)

    def tri_element(self, t, primed=False):
        space = self.T2 if primed else self.T
        coords = space.coordinates(t)
        if coords is None:
            raise BadArgument("triple is not in tri(" + ("S'" if primed else "S") + ")")
        if primed:
            return MagicSquareElement(self, None, coords, None)
        return MagicSquareElement(self, coords, None, None)

class MagicSquareElement(object):
    """Element of g(S, S') by sector: tri coordinates, tri' coordinates and the
    three iota blocks, iota_i(e_p x e'_q) at position p*dim S' + q."""

    def __init__(self, construction, tri=None, tri2=None, iota=None):
        g = construction
        F = g.S.field
        self.construction = g
        self.tri = list(tri) if tri is not None else [F.zero()] * g.T.dim
        self.tri2 = list(tri2) if tri2 is not None else [F.zero()] * g.T2.dim
        iota = iota if iota is not None else [None, None, None]
        self.iota = [list(block) if block is not None else [F.zero()] * g.iota_size for block in iota]
        if len(self.tri) != g.T.dim or len(self.tri2) != g.T2.dim or any(len(block) != g.iota_size for block in self.iota):
            raise BadArgument("sector sizes do not match g(S, S')")

    def to_vector(self):
        coords = self.tri + self.tri2 + self.iota[0] + self.iota[1] + self.iota[2]
        return dict((k, c) for k, c in enumerate(coords) if c)

    @staticmethod
    def from_vector(construction, vector):
        g = construction
        F = g.S.field
        dense = [vector.get(k, F.zero()) for k in range(g.dim)]
        o = g.offsets
        return MagicSquareElement(g, dense[o[0]:o[1]], dense[o[1]:o[2]],
                                  [dense[o[2 + i]:o[2 + i] + g.iota_size] for i in range(3)])

    def bracket(self, other):
        g = self.construction
        return MagicSquareElement.from_vector(g, g.lie.bracket(self.to_vector(), other.to_vector()))

    def __eq__(self, other):
        return isinstance(other, MagicSquareElement) and self.to_vector() == other.to_vector()

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

def build_g(S, S2):
    return MagicSquareConstruction(S, S2).lie

def theta_equivariance(construction):
    """Check that the cyclic relabeling is an automorphism on all basis brackets."""
    g = construction
    L = g.lie
    images = g.theta_map()

    def apply(v):
        out = {}
        for k, c in v.items():
            for m, x in images[k].items():
                out[m] = out.get(m, L.field.zero()) + c * x
        return dict((m, x) for m, x in out.items() if x)

    for x in range(L.dim):
        for y in range(x + 1, L.dim):
            if apply(L.bracket_basis(x, y)) != L.bracket(images[x], images[y]):
                return make_report("basis", [check("theta-equivariance", False, "(" + L.labels[x] + ", " + L.labels[y] + ")", True)])
    return make_report("basis", [check("theta-equivariance", True, None, True)])

# Step 7: the table itself.
def magic_algebras(F, flavor="para"):
    """Symmetric composition algebras of dimensions 1, 2, 4, 8: para-Hurwitz
    algebras of the Cayley-Dickson tower with parameters -1, -1, -1; in the
    okubo-mix flavor the 8-dimensional slot holds the split Okubo algebra."""
    if flavor not in ("para", "okubo-mix"):
        raise BadArgument("unknown flavor \"" + str(flavor) + "\"; choose para or okubo-mix")
    algebras = [para(C) for C in cd_tower(F, [-1, -1, -1])]
    if flavor == "okubo-mix":
        algebras[3] = split_okubo(F)
    return algebras

def magic_table(F, flavor="para", build=True):
    """4x4 grid of dim g(S_r, S'_s), r, s in (1, 2, 4, 8). With build=False the
    dimensions are the sector sums dim tri(S_r) + dim tri(S_s) + 3rs."""
    if F.characteristic in (2, 3):
        raise BadCharacteristic("the Magic Square is built in characteristic != 2, 3; " + F.name() + " has characteristic " + str(F.characteristic))
    algebras = magic_algebras(F, flavor)
    spaces = []
    for S in algebras:
        check_symmetric_composition(S)
        spaces.append(tri_space(S))
    grid = []
    for r in range(4):
        row = []
        for s in range(4):
            if build:
                row.append(MagicSquareConstruction(algebras[r], algebras[s], spaces[r], spaces[s]).lie.dim)
            else:
                row.append(spaces[r].dim + spaces[s].dim + 3 * algebras[r].dim * algebras[s].dim)
        grid.append(row)
    return grid
