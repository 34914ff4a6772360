import unittest
# First we import needed core modules
from algebra_core import LinearOperator
from scalars import RationalField, PrimeField, seeded_rng

import Hurwitz.Hurwitz_algebras as hw
from SymComp.para_Hurwitz_Petersson import para
from SymComp.Okubo_matrix_algebras import split_okubo
import Triality.triality_Lie_algebra as tl
from compalg_errors import CharTwo, WrongDimension, NotSkew, NotIsometry

class TestTriality(unittest.TestCase):
    Q = RationalField()
    F7 = PrimeField(7)
    P8 = para(hw.split_cayley(Q))
    O8 = split_okubo(F7)
    basis = tl.tri_basis(P8)

    def test_so_basis(self):
        so = tl.so_basis(self.P8)
        self.assertEqual(len(so), 28)
        for d in so:
            self.assertIsNone(tl.skew_witness(self.P8, d))
        self.assertIsNotNone(tl.skew_witness(self.P8, LinearOperator.identity(self.Q, 8)))

    def test_t_triples(self):
        S = self.P8
        rng = seeded_rng(7)
        for n in range(3):
            x, y = S.random_element(rng), S.random_element(rng)
            t = tl.t_triple(S, x, y)
            self.assertIsNone(tl.triple_failure(t))
            self.assertEqual(tl.t_triple(S, y, x), t.scale(-1))
        self.assertTrue(tl.t_triple(S, S.basis(2), S.basis(2)).is_zero())

    def test_tri_dimension_eight(self):
        self.assertEqual(len(self.basis), 28)
        space = tl.tri_space(self.P8)
        self.assertEqual(space.dim, 28)
        for t in self.basis:
            self.assertTrue(space.contains(t))
            self.assertTrue(space.contains(t.theta()))
            self.assertEqual(t.theta().theta().theta(), t)
        self.assertIsNone(tl.TriSpace(self.P8, self.basis).closure_witness())
        self.assertEqual(tl.tri_space(self.O8).dim, 28)

    def test_tri_small_dimensions(self):
        dims = [tl.tri_space(para(A)).dim for A in hw.cd_tower(self.Q, [-1, -1])]
        self.assertEqual(dims, [0, 2, 9])
        with self.assertRaises(WrongDimension):
            tl.tri_basis(para(hw.quaternion(self.Q, -1, -1)))

    def test_tri_dimensions_over_prime_fields(self):
        for p in (5, 7):
            dims = [tl.tri_space(para(A)).dim for A in hw.cd_tower(PrimeField(p), [-1, -1, -1])]
            self.assertEqual(dims, [0, 2, 9, 28], p)

    def test_theta_fixed_subalgebra(self):
        # the theta-fixed triples (d, d, d) are the derivations: g2 and sl3
        self.assertEqual(tl.theta_fixed_dimension(self.P8), 14)
        self.assertEqual(tl.theta_fixed_dimension(self.O8), 8)

    def test_pi0_inverse(self):
        S = self.P8
        for t in self.basis[:5]:
            u = tl.pi0_inverse(S, t.components[0])
            self.assertEqual(u, t)
            self.assertIsNone(tl.triple_failure(u))
        with self.assertRaises(NotSkew):
            tl.pi0_inverse(S, LinearOperator.identity(self.Q, 8))

    def test_pi0_round_trip(self):
        S = self.P8
        so = tl.so_basis(S)
        rng = seeded_rng(11)
        for n in range(20):
            d0 = LinearOperator.zero(self.Q, 8)
            for d in so:
                d0 = d0 + d.scale(self.Q.random_element(rng))
            t = tl.pi0_inverse(S, d0)
            self.assertEqual(t.components[0], d0)
            self.assertIsNone(tl.triple_failure(t))

    def test_t_bracket(self):
        # [t_ab, t_xy] = t_(sigma_ab x, y) + t_(x, sigma_ab y)
        S = self.P8
        rng = seeded_rng(5)
        for n in range(3):
            a, b, x, y = [S.random_element(rng) for k in range(4)]
            s = tl.sigma(S, a, b)
            lhs = tl.t_triple(S, a, b).bracket(tl.t_triple(S, x, y))
            self.assertEqual(lhs, tl.t_triple(S, s.apply(x), y) + tl.t_triple(S, x, s.apply(y)))

    def test_related_triples_are_cyclic(self):
        for t in self.basis[:6]:
            self.assertIsNone(tl.triple_failure(t.theta()))
            self.assertIsNone(tl.triple_failure(t.theta().theta()))
        I = LinearOperator.identity(self.F7, 8)
        f = (I, I.scale(-1), I.scale(-1))
        for k in range(3):
            self.assertTrue(tl.check_related_isometry_triple(self.O8, *f))
            f = (f[2], f[0], f[1])

    def test_related_isometry_triples(self):
        S = self.O8
        I = LinearOperator.identity(self.F7, 8)
        self.assertTrue(tl.check_related_isometry_triple(S, I, I, I))
        self.assertTrue(tl.check_related_isometry_triple(S, I, I.scale(-1), I.scale(-1)))
        self.assertFalse(tl.check_related_isometry_triple(S, I.scale(-1), I, I))
        with self.assertRaises(NotIsometry):
            tl.check_related_isometry_triple(S, I.scale(2), I, I)

    def test_characteristic_two(self):
        S = para(hw.split_cayley(PrimeField(2)))
        with self.assertRaises(CharTwo):
            tl.t_triple(S, S.basis(0), S.basis(1))

if __name__ == '__main__':
    unittest.main()
