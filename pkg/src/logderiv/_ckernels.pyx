# cython: language_level=3, boundscheck=False
"""Compiled twin of _pykernels; same signatures, same semantics.

Coefficients stay Python Fractions (exactness is non-negotiable), so the win
comes from C-level loops, tuple construction and dict access, not from
machine arithmetic.
"""


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


cpdef mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef object d
    for i in range(n):
        d = a[i] - b[i]
        if d < 0:
            return None
        out[i] = d
    return tuple(out)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] if a[i] > b[i] else b[i]
    return tuple(out)


cpdef dict dict_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object m, c, s
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


cpdef dict dict_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object m, c, s
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = -c
        else:
            s = s - c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


cpdef dict dict_scale(dict a, object c):
    cdef dict out = {}
    cdef object m, v
    if not c:
        return out
    for m, v in a.items():
        out[m] = c * v
    return out


cpdef dict dict_mul(dict a, dict b):
    cdef dict out = {}
    cdef object ma, ca, mb, cb, s
    cdef tuple m
    if len(a) > len(b):
        a, b = b, a
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mono_mul(<tuple> ma, <tuple> mb)
            s = out.get(m)
            if s is None:
                out[m] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


cpdef dict dict_axpy(dict h, object c, tuple shift, dict g):
    cdef dict out = dict(h)
    cdef object m, v, s, cv
    cdef tuple key
    for m, v in g.items():
        key = mono_mul(<tuple> m, shift)
        s = out.get(key)
        cv = c * v
        if s is None:
            out[key] = -cv
        else:
            s = s - cv
            if s:
                out[key] = s
            else:
                del out[key]
    return out


cpdef dict vec_axpy(dict h, object c, tuple shift, dict g):
    cdef dict out = dict(h)
    cdef object k, v, s, cv
    cdef tuple key
    for k, v in g.items():
        key = ((<tuple> k)[0], mono_mul(<tuple> (<tuple> k)[1], shift))
        s = out.get(key)
        cv = c * v
        if s is None:
            out[key] = -cv
        else:
            s = s - cv
            if s:
                out[key] = s
            else:
                del out[key]
    return out
