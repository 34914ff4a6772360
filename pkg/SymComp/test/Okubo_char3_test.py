import unittest
# First we import needed core modules
import algebra_core as ac
import algebra_io as aio
from scalars import RationalField, PrimeField, field_parse_option

import Hurwitz.Hurwitz_algebras as hw
import SymComp.Okubo_matrix_algebras as om
import SymComp.char3_forms as c3
from SymComp.para_Hurwitz_Petersson import para
from compalg_errors import CharThree, NoOmega, OmegaPresent, NotCharThree, ZeroLambda, CubeScalar, \
    ZeroParameter, NotSymmetricComposition

class TestOkuboMatrixAlgebras(unittest.TestCase):
    F7 = PrimeField(7)
    Qw = field_parse_option("q[w]")

    def test_split_okubo(self):
        S = om.split_okubo(RationalField())
        self.assertIsNone(S.unit)
        self.assertIsNone(ac.find_unit(S))
        rep = ac.verify_symmetric(S)
        self.assertTrue(rep.passed)
        self.assertEqual(rep.classification, "nondegenerate")
        # [x, y] = -(x*y - y*x) on sl3, so nothing nonzero commutes with everything
        self.assertEqual(ac.commutative_center(S), [])

    def test_split_okubo_table(self):
        lines = aio.multiplication_table(om.split_okubo(RationalField()), "canonical", "returnstring").splitlines()
        for i, row in enumerate(om.SPLIT_OKUBO_TABLE):
            self.assertEqual(lines[2 + i].split("|")[1].split(), row.split())
        # figure2 pairs u_i with v_i
        lines = aio.multiplication_table(om.split_okubo(RationalField()), "figure2", "returnstring").splitlines()
        self.assertEqual(lines[0].split("|")[1].split(), ["e1", "e2", "u1", "v1", "u2", "v2", "u3", "v3"])

    def test_split_okubo_sign_flip(self):
        F = RationalField()
        table = list(om.SPLIT_OKUBO_TABLE)
        # e1*v1 = -v3 becomes v3
        row = table[0].split()
        row[5] = "v3"
        table[0] = " ".join(row)
        S = ac.algebra_from_table(F, hw.SPLIT_LABELS, table, None, om.split_norm(F), "flipped")
        rep = ac.verify_symmetric(S)
        self.assertFalse(rep.passed)
        self.assertFalse(rep.checks[0].passed)
        self.assertIsNotNone(rep.checks[0].witness)
        self.assertEqual(ac.first_structure_difference(S, om.split_okubo(F)), ("e1", "v1"))

    def test_okubo_sl3(self):
        S = om.okubo_sl3(self.F7)
        self.assertEqual(S.labels, om.SL3_LABELS)
        self.assertTrue(ac.verify_symmetric(S).passed)
        T = om.okubo_sl3(self.Qw, self.Qw.gen())
        self.assertTrue(ac.verify_symmetric(T).passed)
        # n = s2 on trace-zero matrices: n(E12) = 0, n(H1) = -1
        self.assertEqual(S.norm_of(S.basis(0)), 0)
        self.assertEqual(S.norm_of(S.basis(6)), -1)

    def test_okubo_sl3_needs_omega(self):
        with self.assertRaises(NoOmega):
            om.okubo_sl3(RationalField())
        with self.assertRaises(NoOmega):
            om.okubo_sl3(self.F7, 3)
        with self.assertRaises(CharThree):
            om.okubo_sl3(PrimeField(3))

    def test_second_kind(self):
        S = om.okubo_second_kind(RationalField())
        self.assertEqual(S.dim, 8)
        self.assertEqual(S.labels[0], "s1")
        self.assertTrue(ac.verify_symmetric(S).passed)
        self.assertTrue(ac.verify_symmetric(om.okubo_second_kind(PrimeField(5))).passed)
        with self.assertRaises(OmegaPresent):
            om.okubo_second_kind(self.F7)

    def test_recover_associative(self):
        S = om.okubo_sl3(self.F7)
        A, rep = om.recover_associative(S)
        self.assertEqual(A.dim, 9)
        self.assertEqual(A.labels[:2], ["1", "E12"])
        self.assertTrue(rep.passed)
        self.assertTrue(rep.checks[0].passed)

    def test_recover_from_para_hurwitz(self):
        A, rep = om.recover_associative(para(hw.split_cayley(self.F7)))
        self.assertEqual(A.dim, 9)
        self.assertTrue(rep.passed)
        self.assertFalse(rep.checks[0].passed)
        self.assertTrue(ac.verify_law(A, "alternative").passed)
        self.assertFalse(ac.verify_law(A, "associative").passed)
        with self.assertRaises(CharThree):
            om.recover_associative(para(hw.split_cayley(PrimeField(3))))

class TestCharacteristicThree(unittest.TestCase):
    F3 = PrimeField(3)
    F3t = field_parse_option("gf:3(t)")

    def test_twodim(self):
        t = self.F3t.gen()
        A = c3.char3_twodim(self.F3t, t, check_cube=True)
        self.assertEqual(A.labels, ["u", "v"])
        self.assertEqual(A.norm.coefficient(0, 0), 1)
        self.assertEqual(A.norm.coefficient(1, 1), 1)
        self.assertEqual(A.norm.coefficient(0, 1), t)
        self.assertTrue(ac.verify_symmetric(A).passed)
        # 4 - lambda^2 = 0 for lambda = 1: the polar form degenerates
        self.assertEqual(c3.char3_twodim(self.F3, 1).norm.classify().kind, "singular")

    def test_twodim_errors(self):
        with self.assertRaises(NotCharThree):
            c3.char3_twodim(PrimeField(5), 1)
        with self.assertRaises(ZeroLambda):
            c3.char3_twodim(self.F3, 0)
        # every element of GF(3) is a cube
        with self.assertRaises(CubeScalar):
            c3.char3_twodim(self.F3, 2, check_cube=True)
        with self.assertRaises(CubeScalar):
            c3.char3_twodim(self.F3t, self.F3t.gen()**3, check_cube=True)

    def test_derived_norm(self):
        S = om.split_okubo(self.F3)
        self.assertEqual(c3.derive_symmetric_norm(S), om.split_norm(self.F3))
        with self.assertRaises(NotSymmetricComposition):
            c3.derive_symmetric_norm(hw.split_cayley(self.F3))

    def test_okubo_char3_over_prime_field(self):
        O = c3.okubo_char3(self.F3, 1, 1)
        self.assertTrue(ac.same_structure(O, om.split_okubo(self.F3)))

    def test_okubo_char3_with_cube_root(self):
        t = self.F3t.gen()
        O = c3.okubo_char3(self.F3t, t, 1)
        self.assertEqual(O.dim, 8)
        self.assertEqual(O.field, self.F3t)
        self.assertTrue(ac.verify_symmetric(O).passed)
        with self.assertRaises(ZeroParameter):
            c3.okubo_char3(self.F3t, 0, t)
        with self.assertRaises(NotCharThree):
            c3.okubo_char3(RationalField(), 1, 1)

if __name__ == '__main__':
    unittest.main()
