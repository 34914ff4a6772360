import unittest
# First we import needed core modules
import algebra_core as ac
from scalars import RationalField, PrimeField

import Hurwitz.Hurwitz_algebras as hw
import SymComp.para_Hurwitz_Petersson as ph
from SymComp.Okubo_matrix_algebras import split_okubo
from compalg_errors import NoOmega, NotOrderThree, NotAutomorphism

class TestParaHurwitzPetersson(unittest.TestCase):
    Q = RationalField()
    F7 = PrimeField(7)
    C = hw.split_cayley(Q)
    P = ph.para(C)

    def test_para_hurwitz_is_symmetric(self):
        self.assertIsNone(self.P.unit)
        self.assertTrue(ac.verify_symmetric(self.P).passed)
        for A in hw.cd_tower(self.Q, [-1, -1]):
            self.assertTrue(ac.verify_symmetric(ph.para(A)).passed)
        # para-Hurwitz: the conjugate of the unit is a para-unit, 1.x = x.1 = xbar
        one = self.P.element(self.C.unit)
        x = self.P.basis(2)
        self.assertEqual(one * x, -x)
        self.assertEqual(x * one, -x)

    def test_cyclic_petersson_is_split_okubo(self):
        phi = ph.cyclic_automorphism(self.C)
        self.assertEqual(phi.order(), 3)
        S = ph.petersson(self.C, phi)
        self.assertIsNone(ac.first_structure_difference(S, split_okubo(self.Q)))
        self.assertEqual(S.norm, split_okubo(self.Q).norm)
        self.assertTrue(ac.verify_symmetric(S).passed)

    def test_cyclic_petersson_over_prime_fields(self):
        for p in (2, 3, 7):
            F = PrimeField(p)
            C = hw.split_cayley(F)
            S = ph.petersson(C, ph.cyclic_automorphism(C))
            self.assertIsNone(ac.first_structure_difference(S, split_okubo(F)), p)
            self.assertEqual(S.norm, split_okubo(F).norm)

    def test_grading_petersson(self):
        C = hw.split_cayley(self.F7)
        phi = ph.grading_automorphism(C, 2)
        self.assertEqual(phi.order(), 3)
        S = ph.petersson(C, phi)
        self.assertTrue(ac.verify_symmetric(S).passed)
        self.assertIsNotNone(ac.norm_associativity_witness(C))
        with self.assertRaises(NoOmega):
            ph.grading_automorphism(C, 3)

    def test_identity_gives_para_hurwitz(self):
        phi = ph.cyclic_automorphism(self.C).power(3)
        self.assertTrue(phi.is_identity())
        self.assertTrue(ac.same_structure(ph.petersson(self.C, phi), self.P))

    def test_rejected_twists(self):
        C = self.C
        swap = ac.LinearOperator.identity(self.Q, 8)
        swap.matrix[0][0], swap.matrix[0][1] = self.Q(0), self.Q(1)
        swap.matrix[1][1], swap.matrix[1][0] = self.Q(0), self.Q(1)
        # e1 <-> e2 has order 2
        with self.assertRaises(NotOrderThree):
            ph.petersson(C, ph.AlgebraAutomorphism(C, swap))
        scaled = ac.LinearOperator.identity(self.Q, 8).scale(2)
        self.assertIsNotNone(ph.AlgebraAutomorphism(C, scaled).failure())
        with self.assertRaises(NotAutomorphism):
            ph.AlgebraAutomorphism(C, scaled).verify()

    def test_kaplansky_unitalization(self):
        a = self.P.element(self.C.unit)
        for symmetric in (None, False):
            B = ac.kaplansky_unitalize(self.P, a, symmetric)
            self.assertTrue(ac.same_structure(B, self.C))
            self.assertEqual(B.unit, self.C.unit)
        # any anisotropic base point gives a Hurwitz algebra
        b = self.P.element([1, 2, 0, 0, 0, 0, 0, 0])
        self.assertTrue(ac.verify_hurwitz_properties(ac.kaplansky_unitalize(self.P, b)).passed)

if __name__ == '__main__':
    unittest.main()
