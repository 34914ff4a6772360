import unittest
# First we import needed core modules
from scalars import RationalField, PrimeField

from MagicSquare.LieAlgebra import LieAlgebra, abelian_lie_algebra, jacobi_check, lie_invariants, \
    killing_matrix, _partition
from compalg_errors import BadArgument, SchemaViolation

class TestLieAlgebra(unittest.TestCase):
    Q = RationalField()
    F5 = PrimeField(5)
    # so(3): [e1,e2] = e3 and cyclic
    so3 = LieAlgebra(Q, ["e1", "e2", "e3"], {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})
    # Jacobi fails at (a1,a2,a3), (a0,a3,a4) and (a2,a3,a4); the first of these is (a0,a3,a4)
    broken = LieAlgebra(F5, ["a0", "a1", "a2", "a3", "a4"],
                        {(0, 3): {0: 1}, (3, 4): {3: 1}, (1, 2): {1: 1}, (2, 3): {2: 1}})

    def test_storage(self):
        L = self.so3
        self.assertEqual(L.bracket_basis(0, 2), {1: self.Q(-1)})
        self.assertEqual(L.bracket_basis(2, 0), {1: self.Q(1)})
        self.assertEqual(L.bracket_basis(1, 1), {})
        self.assertEqual(L.sector_of(2), "all")
        x = {0: self.Q(1), 1: self.Q(1)}
        self.assertEqual(L.bracket(x, x), {})
        with self.assertRaises(BadArgument):
            LieAlgebra(self.Q, ["a"], {(0, 0): {0: 1}})

    def test_jacobi_full(self):
        rep = jacobi_check(self.so3, "full", jobs=1)
        self.assertTrue(rep.passed)
        self.assertEqual(rep.mode, "full")
        self.assertEqual(rep.checks[0].name, "Jacobi identity")
        self.assertTrue(jacobi_check(abelian_lie_algebra(self.Q, 4), jobs=1).passed)

    def test_jacobi_witness(self):
        rep = jacobi_check(self.broken, "full", jobs=1)
        self.assertFalse(rep.passed)
        self.assertEqual(rep.checks[0].witness, "(a0, a3, a4): coordinate a0 is nonzero")

    def test_jacobi_witness_does_not_depend_on_jobs(self):
        self.assertEqual(_partition(list(range(5)), 2), [[0, 2, 4], [1, 3]])
        self.assertEqual(_partition([0], 4), [[0]])
        one = jacobi_check(self.broken, "full", jobs=1)
        two = jacobi_check(self.broken, "full", jobs=2)
        self.assertEqual(one.checks[0].witness, two.checks[0].witness)

    def test_jacobi_sample(self):
        rep = jacobi_check(self.so3, "sample", count=50, seed=3, jobs=1)
        self.assertTrue(rep.passed)
        self.assertEqual(rep.mode, "sample")
        self.assertFalse(jacobi_check(self.broken, "sample", count=200, seed=3, jobs=1).passed)
        with self.assertRaises(BadArgument):
            jacobi_check(self.so3, "exhaustive")

    def test_invariants(self):
        inv = lie_invariants(self.so3)
        self.assertEqual(tuple(inv), (3, 0, 3, 3))
        # K(e_i, e_i) = -2 on so(3)
        self.assertEqual(killing_matrix(self.so3)[0][0], -2)
        self.assertEqual(tuple(lie_invariants(abelian_lie_algebra(self.Q, 4))), (4, 4, 0, 0))

    def test_json(self):
        desc = self.broken.to_dict()
        self.assertEqual(desc["field"], {"kind": "GF", "p": 5})
        self.assertEqual(desc["bracket"][0], [0, 3, 0, "1"])
        L = LieAlgebra.from_dict(desc)
        self.assertEqual(L.structure_list(), self.broken.structure_list())
        self.assertEqual(L.sectors, self.broken.sectors)
        desc["bracket"].append([3, 1, 0, "1"])
        with self.assertRaises(SchemaViolation):
            LieAlgebra.from_dict(desc)
        with self.assertRaises(SchemaViolation):
            LieAlgebra.from_dict({"field": {"kind": "GF", "p": 5}, "dim": 2, "labels": ["a"], "bracket": []})

if __name__ == '__main__':
    unittest.main()
