import unittest
import hashlib
# First we import needed core modules
import algebra_core as ac
import algebra_io as aio
from scalars import RationalField, PrimeField

import Hurwitz.Hurwitz_algebras as hw
from compalg_errors import DegenerateParameter, ZeroParameter, NoUnit, IsotropicQuaternion

class TestHurwitzAlgebras(unittest.TestCase):
    Q = RationalField()
    O = hw.octonion(Q, -1, -1, -1)
    C = hw.split_cayley(Q)

    def test_labels(self):
        self.assertEqual(self.O.labels, ["1", "u1", "u2", "u1u2", "u3", "u1u3", "u2u3", "u1u2u3"])
        self.assertEqual([A.dim for A in hw.cd_tower(self.Q, [-1, -1, -1])], [1, 2, 4, 8])

    def test_etale(self):
        K = hw.quadratic_etale(self.Q, 2)
        one, v = K.basis_elements()
        self.assertEqual(v * v, v + one.scale(2))
        # v^2 - n(v,1)v + n(v)1 = 0
        self.assertEqual(K.polar_of(v, one), 1)
        self.assertEqual(K.norm_of(v), -2)
        self.assertTrue(ac.verify_suite(K).passed)
        with self.assertRaises(DegenerateParameter):
            hw.quadratic_etale(self.Q, self.Q.parse("-1/4"))

    def test_cayley_dickson_rules(self):
        with self.assertRaises(ZeroParameter):
            hw.cayley_dickson(hw.ground(self.Q), 0)
        with self.assertRaises(NoUnit):
            hw.cayley_dickson(ac.Algebra(self.Q, ["a"], {}, None, self.C.norm.restrict([[1] + [0] * 7])), 1)
        H = hw.quaternion(self.Q, 2, -3)
        self.assertTrue(hw.verify_doubling_lemma(H, 5).passed)
        u = self.O.basis(4)
        self.assertEqual(u * u, self.O.one().scale(-1))
        self.assertEqual(self.O.norm_of(u), 1)

    def test_octonions_are_hurwitz(self):
        rep = ac.verify_suite(self.O)
        self.assertTrue(rep.passed)
        self.assertTrue(ac.verify_suite(hw.octonion(PrimeField(7), 3, 2, 1)).passed)

    def test_split_cayley(self):
        C = self.C
        e1, e2, u1, u2, u3, v1, v2, v3 = C.basis_elements()
        self.assertEqual(e1 + e2, C.one())
        self.assertEqual(u1 * u2, v3)
        self.assertEqual(u1 * v1, -e1)
        self.assertEqual(C.polar_of(u1, v1), 1)
        self.assertTrue(ac.verify_hurwitz_properties(C).passed)
        self.assertEqual(C.norm.classify().kind, "nondegenerate")

    def test_split_cayley_table_rendering(self):
        out = aio.multiplication_table(self.C, "figure1", "returnstring")
        lines = out.splitlines()
        self.assertEqual(lines[0].split("|")[1].split(), hw.SPLIT_LABELS)
        for i, row in enumerate(hw.SPLIT_CAYLEY_TABLE):
            self.assertEqual(lines[2 + i].split("|")[1].split(), row.split())
        again = aio.multiplication_table(hw.split_cayley(RationalField()), "figure1", "returnstring")
        self.assertEqual(hashlib.md5(out.encode("utf-8")).hexdigest(), hashlib.md5(again.encode("utf-8")).hexdigest())

    def test_sedenions_fail(self):
        S = hw.cd_tower(self.Q, [-1, -1, -1, -1])[-1]
        self.assertEqual(S.dim, 16)
        rep = ac.verify_composition(S)
        self.assertFalse(rep.passed)
        self.assertEqual(rep.checks[0].witness, "monomial x1*x10*y4*y15 has coefficient 4")
        self.assertFalse(ac.verify_linearized(S).passed)

    def test_towers_over_small_fields(self):
        for p in (3, 5):
            tower = hw.cd_tower(PrimeField(p), [-1, -1, -1])
            self.assertEqual([A.dim for A in tower], [1, 2, 4, 8])
            for A in tower:
                self.assertTrue(ac.verify_composition(A).passed, (p, A.dim))
                self.assertTrue(ac.verify_hurwitz_properties(A).passed, (p, A.dim))

    def test_quaternion_inverse(self):
        H = hw.quaternion(self.Q, -1, -1)
        q = H.element([1, 2, 0, -1])
        self.assertEqual(q * hw.quaternion_inverse(H, q), H.one())
        split = hw.quaternion(self.Q, 1, 1)
        with self.assertRaises(IsotropicQuaternion):
            hw.quaternion_inverse(split, split.element([1, 1, 0, 0]))

if __name__ == '__main__':
    unittest.main()
