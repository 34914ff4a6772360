import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stdout, redirect_stderr
# First we import needed core modules
import compalg_param_funcs as par
import compalg

def run_captured(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = compalg.run(argv)
    return status, out.getvalue(), err.getvalue()

class TestCommandLine(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)
        par.set_parval_from_str("compalg::seed", 42)
        par.set_parval_from_str("compalg::jobs", 1)
        par.set_parval_from_str("compalg::verbose", False)

    def path(self, name):
        return os.path.join(self.tmpdir, name)

    def test_index(self):
        self.assertEqual(run_captured(["index", "3", "2"])[:2], (0, "12\n"))
        self.assertEqual(run_captured(["index", "--inverse", "12"])[:2], (0, "3 2\n"))
        status, out, err = run_captured(["index", "3"])
        self.assertEqual(status, 2)
        self.assertTrue(err.startswith("Error: index needs"))

    def test_build_and_verify(self):
        C = self.path("C.json")
        self.assertEqual(run_captured(["build", "split-cayley", "--field", "gf:5", "--out", C])[0], 0)
        with open(C) as file:
            desc = json.load(file)
        self.assertEqual(desc["field"], {"kind": "GF", "p": 5})
        self.assertEqual(desc["dim"], 8)
        status, out, err = run_captured(["verify", "hurwitz", C])
        self.assertEqual(status, 0)
        self.assertTrue(out.endswith("passed (symbolic)\n"))
        # octonions are alternative, not associative
        self.assertEqual(run_captured(["verify", "alternative", C])[0], 0)
        status, out, err = run_captured(["verify", "associative", C])
        self.assertEqual(status, 1)
        self.assertTrue(out.startswith("FAIL  associative: coordinate"))

    def test_para_and_triality(self):
        C, P = self.path("C.json"), self.path("P.json")
        run_captured(["build", "split-cayley", "--out", C])
        self.assertEqual(run_captured(["build", "para", "--input", C, "--out", P])[0], 0)
        self.assertEqual(run_captured(["verify", "symmetric", P])[0], 0)
        self.assertEqual(run_captured(["triality", "dim", P])[:2], (0, "28\n"))
        status, out, err = run_captured(["triality", "verify", P])
        self.assertEqual(status, 0)
        self.assertIn("PASS  dim tri(S) = 28\n", out)

    def test_magic(self):
        out_path, lie_path = self.path("g.json"), self.path("lie.json")
        status = run_captured(["--jobs", "1", "magic", "--field", "gf:7", "--row", "1", "--col", "2",
                               "--jacobi", "sample:200:5", "--invariants", "--out", out_path, "--export", lie_path])[0]
        self.assertEqual(status, 0)
        with open(out_path) as file:
            result = json.load(file)
        self.assertEqual(result["dim"], 8)
        self.assertTrue(result["reports"]["jacobi"]["passed"])
        self.assertEqual(result["reports"]["jacobi"]["mode"], "sample")
        self.assertEqual(result["reports"]["invariants"]["center"], 0)
        with open(lie_path) as file:
            self.assertEqual(json.load(file)["dim"], 8)
        self.assertEqual(run_captured(["magic", "--row", "3", "--col", "1"])[0], 2)
        self.assertEqual(run_captured(["magic", "--row", "1"])[0], 2)

    def test_parameters(self):
        status, out, err = run_captured(["--seed", "9", "params", "compalg::jobs=3"])
        self.assertEqual(status, 0)
        self.assertIn("compalg::seed = 9  # INT\n", out)
        self.assertIn("compalg::jobs = 3  # INT\n", out)
        params = self.path("param.txt")
        with open(params, "w") as file:
            file.write("# comment\nalgebra_core::sample_count = 5\n")
        self.assertIn("algebra_core::sample_count = 5", run_captured(["--params", params, "params"])[1])
        par.set_parval_from_str("algebra_core::sample_count", 20)
        with self.assertRaises(SystemExit):
            run_captured(["params", "nomodule::nothing=1"])

    def test_usage_errors(self):
        # Q has no primitive cube root of 1
        status, out, err = run_captured(["build", "okubo-sl3"])
        self.assertEqual(status, 2)
        self.assertTrue(err.startswith("Error: "))
        self.assertEqual(run_captured(["build", "okubo-char3", "--field", "gf:5"])[0], 2)

    def test_malformed_options(self):
        status, out, err = run_captured(["magic", "--row", "1", "--col", "1", "--jacobi", "sample:abc"])
        self.assertEqual(status, 2)
        self.assertTrue(err.startswith("Error: --jacobi sample count and seed must be integers"))
        self.assertEqual(run_captured(["magic", "--row", "1", "--col", "1", "--jacobi", "sample:10:x"])[0], 2)
        status, out, err = run_captured(["--params", self.path("missing.txt"), "params"])
        self.assertEqual(status, 2)
        self.assertTrue(err.startswith("Error: cannot read parameter file"))

if __name__ == '__main__':
    unittest.main()
