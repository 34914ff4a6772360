# indexedexp.py: functions related to indexed expressions
#   (coordinate vectors, matrices)
#   whose entries are exact field scalars or polynomials.

# Step 1: Load needed modules
import compalg_param_funcs as par
from compalg_errors import BadArgument

thismodule = __name__
par.initialize_param(par.glb_param("INT", thismodule, "DIM", 8))

def zerorank1(field, DIM=-1):
    if DIM == -1:
        DIM = par.parval_from_str("indexedexp::DIM")
    return [field.zero() for i in range(DIM)]

def zerorank2(field, DIM=-1):
    if DIM == -1:
        DIM = par.parval_from_str("indexedexp::DIM")
    return [[field.zero() for i in range(DIM)] for j in range(DIM)]

def identity_rank2(field, DIM=-1):
    if DIM == -1:
        DIM = par.parval_from_str("indexedexp::DIM")
    IDX_OBJ_TMP = zerorank2(field, DIM)
    for i in range(DIM):
        IDX_OBJ_TMP[i][i] = field.one()
    return IDX_OBJ_TMP

# Generic coordinates: objname+str(i) are the generators of `ring` whose
#   names start with objname, in order.
def declarerank1(ring, objname, DIM=-1):
    if DIM == -1:
        DIM = par.parval_from_str("indexedexp::DIM")
    IDX_OBJ_TMP = []
    for i in range(DIM):
        name = objname + str(i)
        if name not in ring.names:
            raise BadArgument("polynomial ring has no generator named \"" + name + "\"")
        IDX_OBJ_TMP.append(ring.gen(ring.names.index(name)))
    return IDX_OBJ_TMP

def trace(in2Darray):
    DIM = len(in2Darray)
    out = in2Darray[0][0] * 0
    for i in range(DIM):
        out = out + in2Darray[i][i]
    return out
