# LieAlgebra.py: finite-dimensional Lie algebras by structure constants
#   [e_i, e_j] = sum_k c_ijk e_k, stored for i < j only (so [x,x] = 0 and
#   anticommutativity hold by construction), with labeled basis sectors.
#
# jacobi_check runs the Jacobi identity on basis triples i < j < k, either
#   all of them ("full") or a seeded random sample ("sample"); the triple
#   space is partitioned across compalg::jobs worker processes and the
#   report always carries the lexicographically first failing triple.
#
# Lie algebra JSON:
#   {"field": <field descriptor>, "dim": n, "labels": [...],
#    "sectors": [[name, start, size], ...], "bracket": [[i, j, k, "scalar"], ...]}  (i < j)

import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import compalg_param_funcs as par
import linalg
from algebra_core import check, make_report
from scalars import field_make, seeded_rng
from compalg_errors import BadArgument, SchemaViolation

logger = logging.getLogger(__name__)

thismodule = "MagicSquare"
par.initialize_param(par.glb_param("INT", thismodule, "jacobi_sample_count", 100000))

lie_invariant = namedtuple('lie_invariant', 'dim center_dim derived_dim killing_rank')

class LieAlgebra(object):
    def __init__(self, field, labels, brackets, sectors=None, name=""):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.name = name
        self.sectors = list(sectors) if sectors is not None else [("all", 0, self.dim)]
        self.brackets = {}
        for (i, j), terms in brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise BadArgument("bracket index (" + str(i) + "," + str(j) + ") out of range")
            if i == j:
                raise BadArgument("[e_i, e_i] is zero; bracket entries need i != j")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            acc = self.brackets.setdefault((i, j), {})
            for k, c in terms.items():
                acc[k] = acc.get(k, field.zero()) + sign * field(c)
        for key in list(self.brackets):
            terms = dict((k, c) for k, c in self.brackets[key].items() if c)
            if terms:
                self.brackets[key] = terms
            else:
                del self.brackets[key]

    def __repr__(self):
        return "LieAlgebra(" + (self.name + ", " if self.name else "") + self.field.name() + ", dim " + str(self.dim) + ")"

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse dict."""
        if i < j:
            return self.brackets.get((i, j), {})
        if i > j:
            return dict((k, -c) for k, c in self.brackets.get((j, i), {}).items())
        return {}

    def bracket(self, x, y):
        """Bracket of two sparse vectors {index: scalar}."""
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                ab = a * b
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, self.field.zero()) + ab * c
        return dict((k, c) for k, c in out.items() if c)

    def structure_list(self):
        return [(i, j, k, self.brackets[(i, j)][k]) for (i, j) in sorted(self.brackets) for k in sorted(self.brackets[(i, j)])]

    def sector_of(self, i):
        for name, start, size in self.sectors:
            if start <= i < start + size:
                return name
        return None

    def to_dict(self):
        return {"field": self.field.descriptor(),
                "dim": self.dim,
                "labels": list(self.labels),
                "sectors": [[name, start, size] for name, start, size in self.sectors],
                "bracket": [[i, j, k, str(c)] for (i, j, k, c) in self.structure_list()]}

    @staticmethod
    def from_dict(desc):
        if not isinstance(desc, dict):
            raise SchemaViolation("Lie algebra must be a JSON object", "$")
        for key in ("field", "dim", "labels", "bracket"):
            if key not in desc:
                raise SchemaViolation("missing \"" + key + "\"", "$")
        F = field_make(desc["field"], "field")
        dim = desc["dim"]
        if not isinstance(dim, int) or dim < 1:
            raise SchemaViolation("\"dim\" must be a positive integer", "dim")
        labels = desc["labels"]
        if not isinstance(labels, list) or len(labels) != dim:
            raise SchemaViolation("\"labels\" must list " + str(dim) + " names", "labels")
        brackets = {}
        for n, entry in enumerate(desc["bracket"]):
            where = "bracket[" + str(n) + "]"
            if not isinstance(entry, list) or len(entry) != 4:
                raise SchemaViolation("bracket entry must be [i, j, k, \"scalar\"]", where)
            for pos in range(3):
                v = entry[pos]
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < dim:
                    raise SchemaViolation("index must be an integer in [0," + str(dim) + ")", where + "[" + str(pos) + "]")
            i, j, k, c = entry
            if i >= j:
                raise SchemaViolation("bracket entries are stored with i < j", where)
            brackets.setdefault((i, j), {})[k] = F.parse(str(c))
        sectors = None
        if "sectors" in desc:
            sectors = [tuple(s) for s in desc["sectors"]]
        return LieAlgebra(F, labels, brackets, sectors)

def abelian_lie_algebra(F, n):
    return LieAlgebra(F, ["a" + str(i + 1) for i in range(n)], {}, None, "abelian")

# Step 1: the Jacobi kernel on raw scalars (see Field.fast_arithmetic).
def _raw_table(L):
    lift = L.field.fast_arithmetic()[0]
    table = [dict() for i in range(L.dim)]
    for (i, j), terms in L.brackets.items():
        row = [(k, lift(c)) for k, c in sorted(terms.items())]
        table[i][j] = row
        table[j][i] = [(k, -c) for k, c in row]
    return table

def _jacobi_defect(table, is_zero, i, j, k):
    acc = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for m, x in table[a].get(b, ()):
            for n, y in table[m].get(c, ()):
                acc[n] = acc.get(n, 0) + x * y
    for n in sorted(acc):
        if not is_zero(acc[n]):
            return n
    return None

_worker_state = {}

def _worker_init(table, field, dim):
    _worker_state["table"] = table
    _worker_state["is_zero"] = field.fast_arithmetic()[1]
    _worker_state["dim"] = dim

def _first_failure(triples):
    """Lexicographically smallest failing triple of the iterable, with the first
    nonzero coordinate of its Jacobiator, or None."""
    table = _worker_state["table"]
    is_zero = _worker_state["is_zero"]
    best = None
    for t in triples:
        if best is not None and t >= best[0]:
            continue
        n = _jacobi_defect(table, is_zero, *t)
        if n is not None:
            best = (t, n)
    return best

def _scan_full(first_indices):
    dim = _worker_state["dim"]
    return _first_failure((i, j, k) for i in first_indices for j in range(i + 1, dim) for k in range(j + 1, dim))

def _scan_sample(triples):
    return _first_failure(triples)

# Round-robin split; each part reports its own minimum, so the merged
#   witness does not depend on the number of parts.
def _partition(items, parts):
    return [items[n::parts] for n in range(min(parts, len(items)))]

def jacobi_check(L, mode="full", count=None, seed=None, jobs=None):
    """Report with one check "Jacobi identity"; the witness names the
    lexicographically first failing basis triple and the first nonzero
    coordinate of its Jacobiator."""
    if jobs is None:
        jobs = par.parval_from_str("compalg::jobs")
    jobs = max(1, jobs)
    table = _raw_table(L)
    if mode == "full":
        work = _partition(list(range(max(L.dim - 2, 0))), jobs)
        scan = _scan_full
        ntriples = L.dim * (L.dim - 1) * (L.dim - 2) // 6
    elif mode == "sample":
        if count is None:
            count = par.parval_from_str("MagicSquare::jacobi_sample_count")
        rng = seeded_rng(seed)
        triples = []
        if L.dim >= 3:
            triples = [tuple(sorted(rng.sample(range(L.dim), 3))) for n in range(count)]
        work = _partition(triples, jobs)
        scan = _scan_sample
        ntriples = len(triples)
    else:
        raise BadArgument("unknown Jacobi mode \"" + str(mode) + "\"; choose full or sample")
    logger.info("Jacobi check of %r: %d triples (%s mode, %d job(s))", L, ntriples, mode, jobs)

    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_worker_init,
                                 initargs=(table, L.field, L.dim)) as pool:
            results = list(pool.map(scan, work))
    else:
        _worker_init(table, L.field, L.dim)
        results = [scan(w) for w in work]
    failures = [r for r in results if r is not None]
    if not failures:
        return make_report(mode, [check("Jacobi identity", True, None, True)])
    (i, j, k), n = min(failures)
    witness = "(" + L.labels[i] + ", " + L.labels[j] + ", " + L.labels[k] + "): coordinate " + L.labels[n] + " is nonzero"
    return make_report(mode, [check("Jacobi identity", False, witness, True)])

# Step 2: center, derived algebra and Killing form.
def _adjoint_table(L):
    table = [dict() for i in range(L.dim)]
    for (i, j), terms in L.brackets.items():
        table[i][j] = terms
        table[j][i] = dict((k, -c) for k, c in terms.items())
    return table

def killing_matrix(L):
    """K(e_a, e_b) = tr(ad e_a ad e_b) = sum_{c,d} c_acd c_bdc."""
    F = L.field
    table = _adjoint_table(L)
    # incoming[(d, c)] = [(b, c_bdc)]
    incoming = {}
    for b in range(L.dim):
        for d, terms in table[b].items():
            for c, x in terms.items():
                incoming.setdefault((d, c), []).append((b, x))
    K = linalg.zero_matrix(F, L.dim, L.dim)
    for a in range(L.dim):
        row = K[a]
        for c, terms in table[a].items():
            for d, x in terms.items():
                for b, y in incoming.get((d, c), ()):
                    row[b] = row[b] + x * y
    return K

def lie_invariants(L):
    F = L.field
    n = L.dim
    table = _adjoint_table(L)
    # Center: sum_i x_i c_ijk = 0 for all j, k.
    rows = {}
    for i in range(n):
        for j, terms in table[i].items():
            for k, c in terms.items():
                rows.setdefault((j, k), {})[i] = c
    center_dim = len(linalg.nullspace(F, [rows[key] for key in sorted(rows)], n))
    derived_dim = linalg.rank(F, [dict(terms) for terms in L.brackets.values()], n)
    killing_rank = linalg.matrix_rank(F, killing_matrix(L))
    logger.info("invariants of %r: center %d, derived %d, Killing rank %d", L, center_dim, derived_dim, killing_rank)
    return lie_invariant(n, center_dim, derived_dim, killing_rank)
