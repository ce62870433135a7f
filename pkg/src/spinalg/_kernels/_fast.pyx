# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse kernels over Gaussian-rational entries.

Same contract as _kernels/pure.py: matrices are lists of row dicts
mapping column -> (re, im) with gmpy2.mpq parts.  The scalar arithmetic
stays in gmpy2 (C-implemented); Cython removes the interpreter overhead
of the accumulation loops.
"""

from gmpy2 import mpq

IMPL = "fast"

cdef object _Z = mpq(0)


def matmul(list a_rows, list b_rows):
    cdef list out = []
    cdef dict arow, brow, acc
    cdef tuple av, bv, cur
    cdef object k, j, ar, ai, br, bi, re, im
    for arow in a_rows:
        acc = {}
        for k, av in arow.items():
            ar = av[0]
            ai = av[1]
            brow = <dict>b_rows[k]
            for j, bv in brow.items():
                br = bv[0]
                bi = bv[1]
                re = _Z
                im = _Z
                if ar:
                    if br:
                        re = ar * br
                    if bi:
                        im = ar * bi
                if ai:
                    if bi:
                        re = re - ai * bi
                    if br:
                        im = im + ai * br
                cur = <tuple>acc.get(j)
                if cur is None:
                    acc[j] = (re, im)
                else:
                    acc[j] = (cur[0] + re, cur[1] + im)
        out.append({j: v for j, v in acc.items() if v[0] or v[1]})
    return out


def add_scaled(list a_rows, list b_rows, object cre, object cim):
    cdef list out = []
    cdef dict arow, brow, row
    cdef tuple bv, cur
    cdef object j, br, bi, re, im
    cdef Py_ssize_t i, n = len(a_rows)
    for i in range(n):
        arow = <dict>a_rows[i]
        brow = <dict>b_rows[i]
        row = dict(arow)
        for j, bv in brow.items():
            br = bv[0]
            bi = bv[1]
            re = _Z
            im = _Z
            if cre:
                if br:
                    re = cre * br
                if bi:
                    im = cre * bi
            if cim:
                if bi:
                    re = re - cim * bi
                if br:
                    im = im + cim * br
            cur = <tuple>row.get(j)
            if cur is not None:
                re = re + cur[0]
                im = im + cur[1]
            if re or im:
                row[j] = (re, im)
            elif cur is not None:
                del row[j]
        out.append(row)
    return out


def scale(list rows, object cre, object cim):
    cdef list out = []
    cdef dict row, new
    cdef tuple v
    cdef object j, ar, ai, re, im
    for row in rows:
        new = {}
        for j, v in row.items():
            ar = v[0]
            ai = v[1]
            re = _Z
            im = _Z
            if cre:
                if ar:
                    re = cre * ar
                if ai:
                    im = cre * ai
            if cim:
                if ai:
                    re = re - cim * ai
                if ar:
                    im = im + cim * ar
            new[j] = (re, im)
        out.append(new)
    return out
