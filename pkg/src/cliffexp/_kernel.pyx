# cython: boundscheck=False, wraparound=False
"""Compiled blade kernel; same contract as ``_kernel_py``."""

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


cdef inline int _sign(unsigned int a, unsigned int b, unsigned int neg) nogil:
    cdef int swaps = 0
    cdef unsigned int x = a >> 1
    while x:
        swaps += __builtin_popcount(x & b)
        x >>= 1
    swaps += __builtin_popcount(a & b & neg)
    return -1 if swaps & 1 else 1


def blade_sign(unsigned int a, unsigned int b, unsigned int neg_mask):
    return _sign(a, b, neg_mask)


def geometric_product(dict xs, dict ys, unsigned int neg_mask):
    cdef dict out = {}
    cdef unsigned int a, b, m
    cdef list xitems = list(xs.items())
    cdef list yitems = list(ys.items())
    cdef list ymasks = [<unsigned int>k for k, _ in yitems]
    cdef list ycoefs = [v for _, v in yitems]
    cdef Py_ssize_t j, ny = len(yitems)
    for ka, ca in xitems:
        a = ka
        for j in range(ny):
            b = ymasks[j]
            c = ca * ycoefs[j]
            if _sign(a, b, neg_mask) < 0:
                c = -c
            m = a ^ b
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                out[m] = prev + c
    return {k: v for k, v in out.items() if v != 0}


def outer_product(dict xs, dict ys):
    cdef dict out = {}
    cdef unsigned int a, b, m
    for ka, ca in xs.items():
        a = ka
        for kb, cb in ys.items():
            b = kb
            if a & b:
                continue
            c = ca * cb
            if _sign(a, b, 0) < 0:
                c = -c
            m = a | b
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                out[m] = prev + c
    return {k: v for k, v in out.items() if v != 0}
