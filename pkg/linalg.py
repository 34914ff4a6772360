# linalg.py: exact linear algebra over the fields of scalars.py.
#
# Sparse rows are dicts {column: FieldScalar} holding nonzero entries only.
# Dense matrices are lists of rows (lists of FieldScalar).
# The elimination is sympy's: sparse rows go through the dict-of-dicts
#   kernels behind DomainMatrix (sdm_irref and friends), dense matrices
#   through DomainMatrix itself, both over field.sympy_domain().
# Reductions always produce the fully reduced row echelon form, so every
#   result depends only on the input, never on timing.

import logging

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.matrices.sdm import sdm_irref, sdm_nullspace_from_rref, sdm_particular_from_rref

from scalars import FieldScalar
from compalg_errors import SingularMatrix, BadArgument

logger = logging.getLogger(__name__)

def dense_to_sparse(row):
    return dict((col, x) for col, x in enumerate(row) if x)

def sparse_to_dense(F, row, ncols):
    out = [F.zero()] * ncols
    for col, x in row.items():
        out[col] = x
    return out

# Step 1: conversion between FieldScalar rows and sympy domain rows.
def to_domain_row(F, v):
    return dict((col, F.rep_to_domain(F(x).rep)) for col, x in v.items() if x)

def from_domain_row(F, row):
    return dict((col, FieldScalar(F, F.rep_from_domain(x))) for col, x in row.items())

def to_domain_matrix(F, M, ncols=0):
    if M:
        ncols = len(M[0])
    rows = [[F.rep_to_domain(F(x).rep) for x in row] for row in M]
    return DomainMatrix(rows, (len(M), ncols), F.sympy_domain())

def from_domain_matrix(F, D):
    return [[FieldScalar(F, F.rep_from_domain(x)) for x in row] for row in D.to_list()]

# (rref rows, pivots, nonzero non-pivot columns) of domain rows.
def _irref(rows):
    rows = [row for row in rows if row]
    if not rows:
        return {}, [], {}
    return sdm_irref(dict(enumerate(rows)))

class EchelonBasis(object):
    """Incrementally maintained reduced row echelon form of a span.

    Pivot entries are 1 and every pivot column is zero in all other rows."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.reduced = {}
        self.pivot_cols = []

    def _extend(self, v):
        return _irref([self.reduced[i] for i in range(len(self.pivot_cols))] + [to_domain_row(self.field, v)])

    def add(self, v):
        reduced, pivots, _ = self._extend(v)
        if len(pivots) == len(self.pivot_cols):
            return False
        self.reduced, self.pivot_cols = reduced, pivots
        return True

    def contains(self, v):
        return len(self._extend(v)[1]) == len(self.pivot_cols)

    def rank(self):
        return len(self.pivot_cols)

    def pivots(self):
        return list(self.pivot_cols)

    def rows(self):
        return [from_domain_row(self.field, self.reduced[i]) for i in range(len(self.pivot_cols))]

    # Coefficients of v on rows(), for v in the span.
    def coordinates(self, v):
        if not self.contains(v):
            return None
        return [v.get(piv, self.field.zero()) for piv in self.pivot_cols]

def rref(F, rows, ncols):
    reduced, pivots, _ = _irref([to_domain_row(F, row) for row in rows])
    return [from_domain_row(F, reduced[i]) for i in range(len(pivots))], pivots

def rank(F, rows, ncols):
    return len(_irref([to_domain_row(F, row) for row in rows])[1])

def nullspace(F, rows, ncols):
    """Basis of {x : row.x = 0 for all rows}, one vector per free column (ascending)."""
    reduced, pivots, nonzero_cols = _irref([to_domain_row(F, row) for row in rows])
    vectors = sdm_nullspace_from_rref(reduced, F.sympy_domain().one, ncols, pivots, nonzero_cols)[0]
    return [sparse_to_dense(F, from_domain_row(F, v), ncols) for v in vectors]

def solve(F, rows, rhs, ncols):
    """One solution of row.x = rhs[i] (free variables set to 0), or None if inconsistent."""
    if len(rows) != len(rhs):
        raise BadArgument("solve(): " + str(len(rows)) + " equations but " + str(len(rhs)) + " right-hand sides")
    augmented = []
    for row, b in zip(rows, rhs):
        aug = dict(row)
        b = F(b)
        if b:
            aug[ncols] = b
        augmented.append(to_domain_row(F, aug))
    reduced, pivots, _ = _irref(augmented)
    if ncols in pivots:
        return None
    return sparse_to_dense(F, from_domain_row(F, sdm_particular_from_rref(reduced, ncols + 1, pivots)), ncols)

# Step 2: dense matrices
def identity(F, n):
    return [[F.one() if i == j else F.zero() for j in range(n)] for i in range(n)]

def zero_matrix(F, nrows, ncols):
    return [[F.zero() for j in range(ncols)] for i in range(nrows)]

def transpose(M):
    if not M:
        return []
    return [[M[i][j] for i in range(len(M))] for j in range(len(M[0]))]

def matmul(F, A, B):
    if A and len(A[0]) != len(B):
        raise BadArgument("matmul(): inner dimensions " + str(len(A[0])) + " and " + str(len(B)) + " differ")
    if not A or not B:
        return [[] for row in A]
    return from_domain_matrix(F, to_domain_matrix(F, A) * to_domain_matrix(F, B))

def matvec(F, M, v):
    return [row[0] for row in matmul(F, M, [[x] for x in v])]

def matrix_rank(F, M):
    ncols = len(M[0]) if M else 0
    return rank(F, [dense_to_sparse(row) for row in M], ncols)

def matrix_nullspace(F, M, ncols=None):
    if ncols is None:
        ncols = len(M[0])
    return nullspace(F, [dense_to_sparse(row) for row in M], ncols)

def inverse(F, M):
    n = len(M)
    try:
        return from_domain_matrix(F, to_domain_matrix(F, M).inv())
    except DMNonInvertibleMatrixError:
        raise SingularMatrix("matrix of size " + str(n) + " is singular")

def determinant(F, M):
    if not M:
        return F.one()
    return FieldScalar(F, F.rep_from_domain(to_domain_matrix(F, M).det()))

def is_identity(F, M):
    n = len(M)
    for i in range(n):
        for j in range(n):
            if M[i][j] != (1 if i == j else 0):
                return False
    return True
