# compalg.py: command-line front end.
#
# Usage: python compalg.py [--seed N] [--jobs N] [--verbose] [--params FILE]
#                          VERB [options] [module::name=value ...]
#   Parameter settings: defaults, then the --params file, then the trailing
#   module::name=value overrides, then the explicit --seed/--jobs/--verbose flags.
# Exit codes: 0 success, 1 verification failure, 2 usage error.

import argparse
import json
import logging
import sys

import compalg_param_funcs as par
import algebra_core as ac
import algebra_io as aio
from MagicSquare.LieAlgebra import jacobi_check, lie_invariants
from scalars import field_parse_option, find_omega
from compalg_errors import CompAlgError, BadArgument

logger = logging.getLogger("compalg")

# Step 1: construction of algebras by name.
BUILD_KINDS = ["ground", "etale", "cd", "quaternion", "octonion", "split-cayley", "para", "petersson",
               "split-okubo", "okubo-sl3", "okubo-j", "okubo-char3", "char3-dim2", "unitalize"]

def _scalar_list(F, text):
    return [F.parse(s) for s in text.split(",")] if text else []

def _element(A, text):
    coords = _scalar_list(A.field, text)
    return A.element(coords)

def _input_or_split_cayley(args, F):
    from Hurwitz.Hurwitz_algebras import split_cayley
    if args.input:
        return aio.import_algebra(args.input)
    return split_cayley(F)

def build(args):
    from Hurwitz import Hurwitz_algebras as hw
    from SymComp import para_Hurwitz_Petersson as ph
    from SymComp import Okubo_matrix_algebras as om
    from SymComp import char3_forms as c3
    F = field_parse_option(args.field)
    kind = args.kind
    if kind == "ground":
        return hw.ground(F)
    if kind == "etale":
        return hw.quadratic_etale(F, F.parse(args.mu))
    if kind == "cd":
        return hw.cd_tower(F, _scalar_list(F, args.cd_params))[-1]
    if kind == "quaternion":
        return hw.quaternion(F, F.parse(args.alpha), F.parse(args.beta))
    if kind == "octonion":
        return hw.octonion(F, F.parse(args.alpha), F.parse(args.beta), F.parse(args.gamma))
    if kind == "split-cayley":
        return hw.split_cayley(F)
    if kind == "para":
        return ph.para(_input_or_split_cayley(args, F))
    if kind == "petersson":
        C = _input_or_split_cayley(args, F)
        if args.phi == "cyclic":
            phi = ph.cyclic_automorphism(C)
        else:
            omega = C.field.parse(args.omega) if args.omega else find_omega(C.field)
            if omega is None:
                raise BadArgument("--phi grading needs --omega or a field containing a primitive cube root of 1")
            phi = ph.grading_automorphism(C, omega)
        return ph.petersson(C, phi)
    if kind == "split-okubo":
        return om.split_okubo(F)
    if kind == "okubo-sl3":
        return om.okubo_sl3(F, F.parse(args.omega) if args.omega else None)
    if kind == "okubo-j":
        return om.okubo_second_kind(F)
    if kind == "okubo-char3":
        return c3.okubo_char3(F, F.parse(args.alpha), F.parse(args.beta))
    if kind == "char3-dim2":
        return c3.char3_twodim(F, F.parse(args.lam), args.check_cube)
    if kind == "unitalize":
        if not args.input:
            raise BadArgument("build unitalize needs --input")
        A = aio.import_algebra(args.input)
        symmetric = None if args.variant == "auto" else args.variant == "symmetric"
        return ac.kaplansky_unitalize(A, _element(A, args.base), symmetric)
    raise BadArgument("unknown algebra kind \"" + kind + "\"")

# Step 2: reports.
def report_string(rep):
    out = ""
    for c in rep.checks:
        status = "PASS" if c.passed else ("FAIL" if c.required else "no  ")
        out += status + "  " + c.name + ("" if c.witness is None else ": " + c.witness) + "\n"
    if rep.classification is not None:
        out += "norm: " + rep.classification + "\n"
    out += ("passed" if rep.passed else "failed") + " (" + rep.mode + ")\n"
    return out

VERIFY_SUITES = ["composition", "hurwitz", "symmetric", "linearized", "suite",
                 "associative", "commutative", "flexible", "alternative", "doubling"]

def verify(args):
    A = aio.import_algebra(args.path)
    suite = args.suite
    if suite == "composition":
        rep = ac.verify_composition(A, args.mode)
    elif suite == "hurwitz":
        rep = ac.verify_hurwitz_properties(A)
    elif suite == "symmetric":
        rep = ac.verify_symmetric(A, args.mode)
    elif suite == "linearized":
        rep = ac.verify_linearized(A)
    elif suite == "suite":
        rep = ac.verify_suite(A, args.mode)
    elif suite == "doubling":
        from Hurwitz.Hurwitz_algebras import verify_doubling_lemma
        rep = verify_doubling_lemma(A, A.field.parse(args.alpha))
    else:
        rep = ac.verify_law(A, suite)
    sys.stdout.write(report_string(rep))
    return 0 if rep.passed else 1

def triality(args):
    from Triality import triality_Lie_algebra as tl
    S = aio.import_algebra(args.path)
    if args.action == "dim":
        print(tl.tri_space(S).dim)
        return 0
    if args.action == "fixed-dim":
        print(tl.theta_fixed_dimension(S))
        return 0
    # tri_basis and tri_space raise on a short or unclosed t_xy span.
    basis = tl.tri_basis(S)
    space = tl.tri_space(S)
    outside = [n for n, t in enumerate(basis) if not space.contains(t.theta())]
    cubed = [n for n, t in enumerate(basis) if t.theta().theta().theta() != t]
    checks = [ac.check("dim tri(S) = 28", space.dim == 28, None if space.dim == 28 else str(space.dim), True),
              ac.check("theta preserves tri(S)", not outside, None if not outside else "t_" + str(outside[0]), True),
              ac.check("theta^3 = id", not cubed, None if not cubed else "t_" + str(cubed[0]), True)]
    rep = ac.make_report("basis", checks)
    sys.stdout.write(report_string(rep))
    return 0 if rep.passed else 1

def _magic_slot(F, token, flavor):
    from MagicSquare.Magic_Square import magic_algebras
    if token == "okubo8":
        return magic_algebras(F, "okubo-mix")[3]
    if token not in ("1", "2", "4", "8"):
        raise BadArgument("magic slots are 1, 2, 4, 8 or okubo8; got \"" + token + "\"")
    return magic_algebras(F, flavor)[[1, 2, 4, 8].index(int(token))]

def _jacobi_mode(text):
    if text == "full":
        return "full", None, None
    parts = text.split(":")
    if parts[0] == "sample" and len(parts) in (1, 2, 3):
        try:
            count = int(parts[1]) if len(parts) > 1 else None
            seed = int(parts[2]) if len(parts) > 2 else None
        except ValueError:
            raise BadArgument("--jacobi sample count and seed must be integers; got \"" + text + "\"")
        return "sample", count, seed
    raise BadArgument("--jacobi takes full or sample:N:SEED; got \"" + text + "\"")

def _report_dict(rep):
    return {"passed": rep.passed, "mode": rep.mode,
            "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness} for c in rep.checks]}

def magic(args):
    from MagicSquare import Magic_Square as ms
    F = field_parse_option(args.field)
    out = {"field": F.descriptor()}
    if args.row is None and args.col is None:
        out["dims"] = ms.magic_table(F, args.flavor)
        aio.write_output(aio.to_json(out), args.out)
        return 0
    if args.row is None or args.col is None:
        raise BadArgument("magic needs both --row and --col, or neither")
    g = ms.MagicSquareConstruction(_magic_slot(F, args.row, args.flavor), _magic_slot(F, args.col, args.flavor))
    L = g.lie
    out["row"], out["col"], out["dim"] = args.row, args.col, L.dim
    status = 0
    reports = {}
    if args.jacobi:
        mode, count, seed = _jacobi_mode(args.jacobi)
        rep = jacobi_check(L, mode, count, seed)
        reports["jacobi"] = _report_dict(rep)
        if not rep.passed:
            status = 1
    if args.invariants:
        inv = lie_invariants(L)
        reports["invariants"] = {"center": inv.center_dim, "derived": inv.derived_dim, "killing_rank": inv.killing_rank}
    if reports:
        out["reports"] = reports
    if args.export:
        aio.write_output(aio.to_json(L.to_dict()), args.export)
    aio.write_output(aio.to_json(out), args.out)
    return status

def rotate(args):
    from Hurwitz import quaternion_rotations as qr
    A = aio.import_algebra(args.path)
    if args.p is None:
        M = qr.rotation_so3(A, _element(A, args.q))
    else:
        M = qr.rotation_so4(A, _element(A, args.p), _element(A, args.q))
    aio.write_output(aio.to_json([[str(x) for x in row] for row in M]), args.out)
    return 0

def split_basis_cmd(args):
    from Hurwitz.split_basis import split_basis, basis_change_to_dict
    C = aio.import_algebra(args.path)
    aio.write_output(aio.to_json(basis_change_to_dict(split_basis(C, args.budget))), args.out)
    return 0

def index_cmd(args):
    if args.inverse is not None:
        n, m = ac.urbanik_wright_inverse(args.inverse)
        print(str(n) + " " + str(m))
    else:
        if args.n is None or args.m is None:
            raise BadArgument("index needs N M, or --inverse K")
        print(ac.urbanik_wright_index(args.n, args.m))
    return 0

# Step 3: argument parsing.
def make_parser():
    parser = argparse.ArgumentParser(prog="compalg", description="Exact composition algebras, triality and the Magic Square.")
    parser.add_argument("--seed", type=int, default=None, help="seed for all randomness (compalg::seed)")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes for Jacobi checks (compalg::jobs)")
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    parser.add_argument("--params", default=None, help="parameter file, module::name = value per line")
    sub = parser.add_subparsers(dest="verb")
    sub.required = True

    p = sub.add_parser("build", help="construct an algebra and export it as JSON")
    p.add_argument("kind", choices=BUILD_KINDS)
    p.add_argument("--field", default="q")
    p.add_argument("--out", default="stdout")
    p.add_argument("--input", default=None, help="algebra JSON (para, petersson, unitalize)")
    p.add_argument("--mu", default="1")
    p.add_argument("--params", dest="cd_params", default="-1,-1,-1", help="Cayley-Dickson parameters for kind cd")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--gamma", default="1")
    p.add_argument("--lam", default="t")
    p.add_argument("--check-cube", action="store_true")
    p.add_argument("--omega", default=None)
    p.add_argument("--phi", choices=["cyclic", "grading"], default="cyclic")
    p.add_argument("--base", default=None, help="base point for unitalize, comma-separated coordinates")
    p.add_argument("--variant", choices=["auto", "symmetric", "general"], default="auto")

    p = sub.add_parser("table", help="print a multiplication table")
    p.add_argument("path")
    p.add_argument("--layout", default="canonical", choices=sorted(aio.TABLE_LAYOUTS))
    p.add_argument("--out", default="stdout")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("path")
    p.add_argument("--mode", choices=["symbolic", "exhaustive"], default="symbolic")
    p.add_argument("--alpha", default="1", help="doubling parameter for the doubling suite")

    p = sub.add_parser("split-basis", help="change of basis to the split Cayley table")
    p.add_argument("path")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", default="stdout")

    p = sub.add_parser("triality", help="triality Lie algebra of an 8-dimensional symmetric composition algebra")
    p.add_argument("action", choices=["dim", "fixed-dim", "verify"])
    p.add_argument("path")

    p = sub.add_parser("magic", help="Magic Square dimensions, Jacobi check and invariants")
    p.add_argument("--row", default=None)
    p.add_argument("--col", default=None)
    p.add_argument("--field", default="q")
    p.add_argument("--flavor", choices=["para", "okubo-mix"], default="para")
    p.add_argument("--jacobi", default=None)
    p.add_argument("--invariants", action="store_true")
    p.add_argument("--export", default=None, help="write the Lie algebra JSON to this file")
    p.add_argument("--out", default="stdout")

    p = sub.add_parser("rotate", help="rotation matrix of a quaternion (so3) or a pair (so4)")
    p.add_argument("path")
    p.add_argument("q")
    p.add_argument("--p", default=None)
    p.add_argument("--out", default="stdout")

    p = sub.add_parser("unitalize", help="Kaplansky unitalization of a composition algebra")
    p.add_argument("path")
    p.add_argument("base")
    p.add_argument("--variant", choices=["auto", "symmetric", "general"], default="auto")
    p.add_argument("--out", default="stdout")

    p = sub.add_parser("index", help="the index map (n, m) -> 2^(n-1)(2m-1) and its inverse")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("--inverse", type=int, default=None)

    sub.add_parser("params", help="print all parameters with their current values")
    return parser

def _split_overrides(argv):
    overrides = [a for a in argv if "::" in a and "=" in a]
    rest = [a for a in argv if not ("::" in a and "=" in a)]
    return rest, overrides

def _read_params(path):
    try:
        par.read_param_file(path)
    except OSError as err:
        raise BadArgument("cannot read parameter file \"" + path + "\": " + str(err.strerror or err))

def run(argv):
    rest, overrides = _split_overrides(argv)
    args = make_parser().parse_args(rest)
    try:
        # Step 4: parameters: file first, then overrides, then explicit flags.
        if args.params:
            _read_params(args.params)
        for line in overrides:
            par.set_paramsvals_value(line)
        if args.seed is not None:
            par.set_parval_from_str("compalg::seed", args.seed)
        if args.jobs is not None:
            par.set_parval_from_str("compalg::jobs", args.jobs)
        if args.verbose:
            par.set_parval_from_str("compalg::verbose", True)
        level = logging.INFO if par.parval_from_str("compalg::verbose") else logging.WARNING
        logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")

        if args.verb == "build":
            aio.export_algebra(build(args), args.out)
            return 0
        if args.verb == "table":
            aio.multiplication_table(aio.import_algebra(args.path), args.layout, args.out)
            return 0
        if args.verb == "verify":
            return verify(args)
        if args.verb == "split-basis":
            return split_basis_cmd(args)
        if args.verb == "triality":
            return triality(args)
        if args.verb == "magic":
            return magic(args)
        if args.verb == "rotate":
            return rotate(args)
        if args.verb == "unitalize":
            A = aio.import_algebra(args.path)
            symmetric = None if args.variant == "auto" else args.variant == "symmetric"
            aio.export_algebra(ac.kaplansky_unitalize(A, _element(A, args.base), symmetric), args.out)
            return 0
        if args.verb == "index":
            return index_cmd(args)
        if args.verb == "params":
            par.param_file_string("stdout")
            return 0
    except CompAlgError as err:
        sys.stderr.write("Error: " + str(err) + "\n")
        return err.exit_code
    return 2

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
