import unittest
# First we import needed core modules
import compalg_param_funcs as par
import algebra_core as ac
from algebra_core import Algebra, LinearOperator
from quadforms import QuadraticForm
from scalars import RationalField, PrimeField
from compalg_errors import ModeUnavailable, NoUnit, BadArgument, NotClosed, IsotropicBasePoint

import Hurwitz.Hurwitz_algebras as hw

class TestAlgebraCore(unittest.TestCase):
    Q = RationalField()
    F3 = PrimeField(3)
    H = hw.quaternion(Q, -1, -1)
    O = hw.octonion(Q, -1, -1, -1)

    def test_elements_and_operators(self):
        H = self.H
        one, i, j, k = H.basis_elements()
        self.assertEqual(H.labels, ["1", "u1", "u2", "u1u2"])
        self.assertEqual(i * j, k)
        self.assertEqual(j * i, -k)
        self.assertEqual(i * i, -one)
        self.assertEqual(ac.conjugate(H, i + one), one - i)
        self.assertEqual(H.norm_of(i + j.scale(2)), 5)
        Li = H.left_mult(i)
        self.assertEqual(Li.apply(j), k)
        self.assertEqual(Li.compose(Li), LinearOperator.identity(self.Q, 4).scale(-1))
        self.assertEqual(Li.power(4), LinearOperator.identity(self.Q, 4))
        self.assertTrue(H.left_mult(i).commutator(H.right_mult(j)).is_zero())
        self.assertEqual(Li.determinant(), 1)
        self.assertEqual(str(i.scale(self.Q.parse("1/2")) - k), "(1/2)*u1 + (-1)*u1u2")

    def test_declared_unit_is_checked(self):
        H = self.H
        with self.assertRaises(NoUnit):
            Algebra(self.Q, H.labels, H.mul, [0, 1, 0, 0], H.norm)
        with self.assertRaises(BadArgument):
            Algebra(self.Q, ["a"], {(0, 1): [(0, 1)]})

    def test_find_unit(self):
        self.assertEqual(ac.find_unit(self.O).coords, [1] + [0] * 7)
        zero_product = Algebra(self.Q, ["a", "b"], {})
        self.assertIsNone(ac.find_unit(zero_product))

    def test_composition(self):
        rep = ac.verify_composition(self.H)
        self.assertTrue(rep.passed)
        self.assertEqual(rep.classification, "nondegenerate")
        # n(1 1) = 2 but n(1)n(1) = 4
        H = self.H
        coeffs = dict(H.norm.coeffs)
        coeffs[(0, 0)] = self.Q(2)
        bad = Algebra(self.Q, H.labels, H.mul, H.unit, QuadraticForm(self.Q, 4, coeffs))
        rep = ac.verify_composition(bad)
        self.assertFalse(rep.passed)
        self.assertIsNotNone(ac.failed_checks(rep)[0].witness)

    def test_hurwitz_properties(self):
        rep = ac.verify_hurwitz_properties(self.H)
        self.assertTrue(rep.passed)
        self.assertTrue(rep.checks[-1].passed)
        rep = ac.verify_hurwitz_properties(self.O)
        self.assertTrue(rep.passed)
        associative = rep.checks[-1]
        self.assertEqual(associative.name, "associative")
        self.assertFalse(associative.passed)
        self.assertFalse(associative.required)

    def test_mutated_table_fails(self):
        H = self.H
        mul = dict(H.mul)
        mul[(1, 2)] = [(3, self.Q(-1))]
        mutated = Algebra(self.Q, H.labels, mul, H.unit, H.norm)
        rep = ac.verify_law(mutated, "associative")
        self.assertFalse(rep.passed)
        self.assertTrue(rep.checks[0].witness.startswith("coordinate "))
        self.assertTrue(ac.verify_law(H, "associative").passed)

    def test_laws(self):
        self.assertTrue(ac.verify_law(self.O, "alternative").passed)
        self.assertTrue(ac.verify_law(self.O, "flexible").passed)
        self.assertFalse(ac.verify_law(self.O, "commutative").passed)
        self.assertTrue(ac.verify_law(hw.quadratic_etale(self.Q, 1), "commutative").passed)
        with self.assertRaises(BadArgument):
            ac.verify_law(self.H, "jordan")

    def test_linearized(self):
        self.assertTrue(ac.verify_linearized(self.O).passed)
        self.assertTrue(ac.verify_suite(self.H).passed)

    def test_exhaustive_mode(self):
        H3 = hw.quaternion(self.F3, 1, 1)
        self.assertTrue(ac.verify_composition(H3, "exhaustive").passed)
        with self.assertRaises(ModeUnavailable):
            ac.verify_composition(self.H, "exhaustive")
        with self.assertRaises(ModeUnavailable):
            ac.verify_composition(hw.split_cayley(self.F3), "exhaustive")
        par.set_parval_from_str("algebra_core::exhaustive_cap", 10)
        with self.assertRaises(ModeUnavailable):
            ac.verify_composition(H3, "exhaustive")
        par.set_parval_from_str("algebra_core::exhaustive_cap", 1024)

    def test_center_and_subalgebras(self):
        center = ac.commutative_center(self.H)
        self.assertEqual(len(center), 1)
        self.assertEqual(center[0].coords, [1, 0, 0, 0])
        one, i = self.O.basis(0), self.O.basis(1)
        K = ac.subalgebra(self.O, [one, i])
        self.assertEqual(K.labels, ["1", "u1"])
        self.assertEqual(K.unit, [1, 0])
        self.assertTrue(ac.verify_composition(K).passed)
        with self.assertRaises(NotClosed):
            ac.subalgebra(self.O, [one, i, self.O.basis(2)])

    def test_transport(self):
        H = self.H
        F = self.Q
        P = [[F(1) if r == c else F(0) for c in range(4)] for r in range(4)]
        P[1][1] = F(2)
        T = ac.transport(H, P)
        self.assertEqual(T.labels, ["f1", "f2", "f3", "f4"])
        self.assertEqual(T.norm.coefficient(1, 1), 4)
        self.assertTrue(ac.verify_composition(T).passed)
        self.assertFalse(ac.same_structure(T, H))
        # f2 = 2 u1, so f2 f2 = -4 f1
        self.assertEqual(ac.first_structure_difference(T, H), ("f2", "f2"))
        identity = [[F(1) if r == c else F(0) for c in range(4)] for r in range(4)]
        self.assertTrue(ac.same_structure(ac.transport(H, identity), H))

    def test_unitalize_isotropic_base_point(self):
        C = hw.split_cayley(self.Q)
        with self.assertRaises(IsotropicBasePoint):
            ac.kaplansky_unitalize(C, C.basis(0))

    def test_index_map(self):
        self.assertEqual(ac.urbanik_wright_index(1, 1), 1)
        self.assertEqual(ac.urbanik_wright_index(2, 1), 2)
        self.assertEqual(ac.urbanik_wright_index(1, 2), 3)
        self.assertEqual(ac.urbanik_wright_index(3, 2), 12)
        values = set(ac.urbanik_wright_index(n, m) for n in range(1, 8) for m in range(1, 8))
        self.assertEqual(len(values), 49)
        for k in range(1, 50):
            self.assertEqual(ac.urbanik_wright_index(*ac.urbanik_wright_inverse(k)), k)
        with self.assertRaises(BadArgument):
            ac.urbanik_wright_index(0, 1)

if __name__ == '__main__':
    unittest.main()
