import unittest
# First we import needed core modules
from algebra_core import Algebra
from scalars import RationalField, PrimeField

import Hurwitz.Hurwitz_algebras as hw
from SymComp.para_Hurwitz_Petersson import para
from SymComp.Okubo_matrix_algebras import split_okubo
import MagicSquare.Magic_Square as ms
from MagicSquare.LieAlgebra import LieAlgebra, jacobi_check, lie_invariants
from Triality.triality_Lie_algebra import tri_space
from compalg_errors import BadArgument, BadCharacteristic, MixedFields, NotSymmetricComposition

class TestMagicSquare(unittest.TestCase):
    Q = RationalField()
    F7 = PrimeField(7)
    algebras = ms.magic_algebras(Q)
    S1, S2, S4, S8 = algebras

    def test_first_row_is_small(self):
        g = ms.MagicSquareConstruction(self.S1, self.S1)
        self.assertEqual(g.dim, 3)
        self.assertEqual([s[0] for s in g.lie.sectors], ["tri", "tri'", "iota0", "iota1", "iota2"])
        self.assertEqual(g.lie.sector_of(2), "iota2")
        self.assertTrue(jacobi_check(g.lie, "full", jobs=1).passed)
        self.assertEqual(tuple(lie_invariants(g.lie)), (3, 0, 3, 3))

    def test_a2(self):
        L = ms.build_g(self.S1, self.S2)
        self.assertEqual(L.dim, 8)
        self.assertTrue(jacobi_check(L, "full", jobs=1).passed)
        # simple: no center, perfect, nondegenerate Killing form
        self.assertEqual(tuple(lie_invariants(L)), (8, 0, 8, 8))

    def test_f4_over_gf7(self):
        P1, P2, P4, P8 = ms.magic_algebras(self.F7)
        L = ms.build_g(P1, P8)
        self.assertEqual(L.dim, 52)
        self.assertTrue(jacobi_check(L, "full", jobs=1).passed)
        # the 8-dimensional slot can hold the split Okubo algebra instead
        L = ms.build_g(P1, split_okubo(self.F7))
        self.assertEqual(L.dim, 52)
        self.assertTrue(jacobi_check(L, "full", jobs=1).passed)

    def test_sampled_d6(self):
        L = ms.build_g(self.S4, self.S4)
        self.assertEqual(L.dim, 66)
        self.assertTrue(jacobi_check(L, "sample", count=2000, seed=11, jobs=1).passed)

    def test_full_jacobi_through_e7(self):
        spaces = [tri_space(S) for S in self.algebras]
        for r in range(4):
            for s in range(4):
                if ms.MAGIC_DIMENSIONS[r][s] > 133:
                    continue
                L = ms.MagicSquareConstruction(self.algebras[r], self.algebras[s], spaces[r], spaces[s]).lie
                self.assertEqual(L.dim, ms.MAGIC_DIMENSIONS[r][s])
                self.assertTrue(jacobi_check(L, "full", jobs=1).passed, (r, s))
                # every entry is semisimple over Q
                self.assertEqual(tuple(lie_invariants(L)), (L.dim, 0, L.dim, L.dim))

    def test_sampled_e8(self):
        L = ms.build_g(self.S8, self.S8)
        self.assertEqual(L.dim, 248)
        self.assertTrue(jacobi_check(L, "sample", count=20000, seed=3, jobs=1).passed)
        self.assertEqual(tuple(lie_invariants(L)), (248, 0, 248, 248))

    def test_corrupted_bracket_fails_jacobi(self):
        P1, P2, P4, P8 = ms.magic_algebras(self.F7)
        L = ms.build_g(P1, P8)
        brackets = dict(L.brackets)
        key = min(brackets)
        brackets[key] = dict((k, 2 * c) for k, c in brackets[key].items())
        bad = LieAlgebra(L.field, L.labels, brackets, L.sectors, "corrupted")
        rep = jacobi_check(bad, "full", jobs=1)
        self.assertFalse(rep.passed)
        self.assertIn("is nonzero", rep.checks[0].witness)
        self.assertTrue(jacobi_check(L, "full", jobs=1).passed)

    def test_elements(self):
        g = ms.MagicSquareConstruction(self.S2, self.S4)
        S, S2 = self.S2, self.S4
        x, y = S.basis(0), S.basis(1)
        u, v = S2.basis(1), S2.basis(2)
        # [iota0(x, u), iota1(y, v)] = iota2(x*y, u*v)
        self.assertEqual(g.iota(0, x, u).bracket(g.iota(1, y, v)), g.iota(2, x * y, u * v))
        zero = g.element()
        self.assertEqual(zero.bracket(g.iota(0, x, u)), zero)
        self.assertEqual(g.iota_index(1, 1, 2), g.offsets[3] + 4 + 2)
        t = g.T.basis[0]
        e = g.tri_element(t)
        self.assertEqual(e.tri[0], 1)
        with self.assertRaises(BadArgument):
            ms.MagicSquareElement(g, [self.Q(0)], None, None)

    def test_theta_equivariance(self):
        g = ms.MagicSquareConstruction(self.S2, self.S2)
        self.assertEqual(g.dim, 16)
        self.assertEqual(len(g.theta_map()), 16)
        self.assertTrue(ms.theta_equivariance(g).passed)

    def test_table(self):
        self.assertEqual(ms.magic_table(self.F7, build=False), ms.MAGIC_DIMENSIONS)
        self.assertEqual(ms.magic_table(self.F7, "okubo-mix", build=False), ms.MAGIC_DIMENSIONS)
        self.assertEqual(ms.magic_table(self.Q, build=False), ms.MAGIC_DIMENSIONS)
        grid = ms.magic_table(self.F7)
        self.assertEqual(grid, ms.MAGIC_DIMENSIONS)
        self.assertEqual(grid[3][3], 248)

    def test_rejected_inputs(self):
        with self.assertRaises(BadCharacteristic):
            ms.magic_table(PrimeField(3))
        with self.assertRaises(BadArgument):
            ms.magic_algebras(self.Q, "okubo")
        with self.assertRaises(MixedFields):
            ms.MagicSquareConstruction(self.S1, para(hw.ground(self.F7)))
        # a Hurwitz algebra is not a symmetric composition algebra
        with self.assertRaises(NotSymmetricComposition):
            ms.check_symmetric_composition(hw.split_cayley(self.Q))
        with self.assertRaises(NotSymmetricComposition):
            ms.check_symmetric_composition(Algebra(self.Q, ["a", "b", "c"], {}))

if __name__ == '__main__':
    unittest.main()
