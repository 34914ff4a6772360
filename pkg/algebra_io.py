# algebra_io.py: JSON export/import of algebras and multiplication tables.
#
# Output routines follow the same convention throughout: filename "stdout"
#   prints, "returnstring" returns the string, anything else is written
#   to that file.
#
# Algebra JSON:
#   {"field": <field descriptor>, "dim": d, "basis": ["e1", ...],
#    "mul": [[i, j, k, "scalar"], ...], "unit": ["scalar", ...], "norm": {"dim": d, "coeffs": [[i, j, "scalar"], ...]}}
#   "unit" and "norm" are optional.

import json
import logging

from algebra_core import Algebra
from quadforms import QuadraticForm
from scalars import field_make
from compalg_errors import SchemaViolation, BadArgument

logger = logging.getLogger(__name__)

def write_output(string, filename="stdout"):
    if filename == "stdout":
        print(string, end="")
        return
    elif filename == "returnstring":
        return string
    with open(filename, "w") as file:
        file.write(string)
    print("Wrote to file \"" + filename + "\"")

def algebra_to_dict(A):
    out = {"field": A.field.descriptor(),
           "dim": A.dim,
           "basis": list(A.labels),
           "mul": [[i, j, k, str(c)] for (i, j, k, c) in A.structure_list()]}
    if A.unit is not None:
        out["unit"] = [str(c) for c in A.unit]
    if A.norm is not None:
        out["norm"] = A.norm.as_dict()
    return out

def to_json(obj):
    return json.dumps(obj, indent=1) + "\n"

def export_algebra(A, filename="stdout"):
    return write_output(to_json(algebra_to_dict(A)), filename)

def _index(value, dim, location):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < dim:
        raise SchemaViolation("index must be an integer in [0," + str(dim) + ")", location)
    return value

def _scalar(F, value, location):
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise SchemaViolation("scalars are strings", location)
    try:
        return F.parse(str(value))
    except SchemaViolation as err:
        raise SchemaViolation(str(err), location)
    except ZeroDivisionError:
        raise SchemaViolation("scalar \"" + str(value) + "\" divides by zero", location)

def algebra_from_dict(desc):
    if not isinstance(desc, dict):
        raise SchemaViolation("algebra must be a JSON object", "$")
    for key in ("field", "dim", "mul"):
        if key not in desc:
            raise SchemaViolation("missing \"" + key + "\"", "$")
    F = field_make(desc["field"], "field")
    dim = desc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaViolation("\"dim\" must be a positive integer", "dim")
    labels = desc.get("basis", ["e" + str(i + 1) for i in range(dim)])
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(l, str) for l in labels):
        raise SchemaViolation("\"basis\" must list " + str(dim) + " label strings", "basis")
    if not isinstance(desc["mul"], list):
        raise SchemaViolation("\"mul\" must be a list", "mul")
    mul = {}
    for n, entry in enumerate(desc["mul"]):
        where = "mul[" + str(n) + "]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise SchemaViolation("entry must be [i, j, k, \"scalar\"]", where)
        i = _index(entry[0], dim, where + "[0]")
        j = _index(entry[1], dim, where + "[1]")
        k = _index(entry[2], dim, where + "[2]")
        mul.setdefault((i, j), []).append((k, _scalar(F, entry[3], where + "[3]")))
    unit = None
    if "unit" in desc:
        if not isinstance(desc["unit"], list) or len(desc["unit"]) != dim:
            raise SchemaViolation("\"unit\" must list " + str(dim) + " scalars", "unit")
        unit = [_scalar(F, c, "unit[" + str(n) + "]") for n, c in enumerate(desc["unit"])]
    norm = None
    if "norm" in desc:
        norm = QuadraticForm.from_dict(F, desc["norm"], "norm")
        if norm.dim != dim:
            raise SchemaViolation("norm dimension " + str(norm.dim) + " differs from " + str(dim), "norm.dim")
    return Algebra(F, labels, mul, unit, norm)

def load_json(path):
    try:
        with open(path, "r") as file:
            return json.load(file)
    except ValueError as err:
        raise SchemaViolation("\"" + path + "\" is not valid JSON: " + str(err), "$")
    except (IOError, OSError) as err:
        raise BadArgument("cannot read \"" + path + "\": " + str(err))

def import_algebra(path):
    return algebra_from_dict(load_json(path))

# Step 2: multiplication tables.
#   figure1: (e1,e2 | u1,u2,u3 | v1,v2,v3), the canonical order.
#   figure2: (e1,e2 | u1,v1 | u2,v2 | u3,v3).
TABLE_LAYOUTS = {"canonical": None,
                 "figure1": [0, 1, 2, 3, 4, 5, 6, 7],
                 "figure2": [0, 1, 2, 5, 3, 6, 4, 7]}

def entry_string(x):
    terms = []
    for label, c in zip(x.algebra.labels, x.coords):
        if not c:
            continue
        if c == 1:
            terms.append(label)
        elif c == -1:
            terms.append("-" + label)
        else:
            terms.append(str(c) + "*" + label)
    if not terms:
        return "0"
    return " + ".join(terms)

def multiplication_table(A, layout="canonical", filename="stdout"):
    if layout not in TABLE_LAYOUTS:
        raise BadArgument("unknown layout \"" + str(layout) + "\"; choose from " + ", ".join(sorted(TABLE_LAYOUTS)))
    order = TABLE_LAYOUTS[layout]
    if order is None:
        order = list(range(A.dim))
    elif A.dim != 8:
        raise BadArgument("layout \"" + layout + "\" needs an 8-dimensional algebra")
    basis = A.basis_elements()
    cells = [[A.labels[j] for j in order]]
    row_labels = [""]
    for i in order:
        row_labels.append(A.labels[i])
        cells.append([entry_string(basis[i] * basis[j]) for j in order])
    width = max(len(s) for row in cells for s in row)
    label_width = max(len(s) for s in row_labels)
    out = ""
    for label, row in zip(row_labels, cells):
        out += label.ljust(label_width) + " | " + " ".join(s.rjust(width) for s in row) + "\n"
        if label == "":
            out += "-" * (label_width + 3 + (width + 1) * len(row) - 1) + "\n"
    return write_output(out, filename)
