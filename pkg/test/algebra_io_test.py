import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stdout
# First we import needed core modules
import algebra_core as ac
import algebra_io as aio
from scalars import RationalField, field_parse_option

import Hurwitz.Hurwitz_algebras as hw
from compalg_errors import SchemaViolation, BadArgument

class TestAlgebraIO(unittest.TestCase):
    Q = RationalField()
    C = hw.split_cayley(Q)

    def test_round_trip(self):
        text = aio.export_algebra(self.C, "returnstring")
        B = aio.algebra_from_dict(json.loads(text))
        self.assertIsNone(ac.first_structure_difference(B, self.C))
        self.assertEqual(B.labels, hw.SPLIT_LABELS)
        self.assertEqual(B.unit, self.C.unit)
        self.assertEqual(B.norm, self.C.norm)
        self.assertEqual(aio.export_algebra(B, "returnstring"), text)

    def test_rational_function_scalars(self):
        F = field_parse_option("gf:3(t)")
        # 4*t/(t+4) = t/(t+1) in characteristic 3
        A = ac.Algebra(F, ["a", "b"], {(0, 0): [(1, F.parse("4*t/(t+4)"))]})
        desc = aio.algebra_to_dict(A)
        self.assertEqual(desc["field"], {"kind": "ratfun", "base": {"kind": "GF", "p": 3}, "var": "t"})
        self.assertEqual(desc["mul"], [[0, 0, 1, "t/(t + 1)"]])
        B = aio.algebra_from_dict(json.loads(aio.to_json(desc)))
        self.assertEqual(B.mul, A.mul)

    def test_schema_violations(self):
        desc = aio.algebra_to_dict(hw.ground(self.Q))
        desc["mul"] = [[0, 9, 0, "1"]]
        with self.assertRaises(SchemaViolation) as ctx:
            aio.algebra_from_dict(desc)
        self.assertEqual(ctx.exception.location, "mul[0][1]")
        desc["mul"] = [[0, 0, 0, True]]
        with self.assertRaises(SchemaViolation) as ctx:
            aio.algebra_from_dict(desc)
        self.assertEqual(ctx.exception.location, "mul[0][3]")
        del desc["mul"]
        with self.assertRaises(SchemaViolation) as ctx:
            aio.algebra_from_dict(desc)
        self.assertEqual(ctx.exception.location, "$")
        with self.assertRaises(SchemaViolation):
            aio.algebra_from_dict({"field": {"kind": "GF", "p": "7"}, "dim": 1, "mul": []})

    def test_files(self):
        tmpdir = tempfile.mkdtemp()
        path = os.path.join(tmpdir, "C.json")
        out = io.StringIO()
        with redirect_stdout(out):
            aio.export_algebra(self.C, path)
        self.assertEqual(out.getvalue(), "Wrote to file \"" + path + "\"\n")
        self.assertIsNone(ac.first_structure_difference(aio.import_algebra(path), self.C))
        with open(path, "w") as file:
            file.write("{not json")
        with self.assertRaises(SchemaViolation):
            aio.import_algebra(path)
        os.remove(path)
        with self.assertRaises(BadArgument):
            aio.import_algebra(path)
        os.rmdir(tmpdir)

    def test_table_layouts(self):
        with self.assertRaises(BadArgument):
            aio.multiplication_table(self.C, "sideways", "returnstring")
        with self.assertRaises(BadArgument):
            aio.multiplication_table(hw.ground(self.Q), "figure2", "returnstring")
        table = aio.multiplication_table(hw.ground(self.Q), "canonical", "returnstring")
        self.assertEqual(table.splitlines()[-1], "1 | 1")

if __name__ == '__main__':
    unittest.main()
