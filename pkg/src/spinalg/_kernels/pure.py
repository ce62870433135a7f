"""Pure-Python sparse kernels.

Matrices are lists of row dicts mapping column -> (re, im) with gmpy2.mpq
parts.  The compiled twin in _fast.pyx implements the same contract; the
active implementation is chosen in _kernels/__init__.py.
"""

from gmpy2 import mpq

IMPL = "pure"

_Z = mpq(0)


def matmul(a_rows, b_rows):
    """Row-major sparse product: result rows of A @ B."""
    out = []
    for arow in a_rows:
        acc = {}
        for k, av in arow.items():
            ar, ai = av
            for j, bv in b_rows[k].items():
                br, bi = bv
                # complex multiply, skipping products with a zero factor
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
                cur = acc.get(j)
                if cur is None:
                    acc[j] = (re, im)
                else:
                    acc[j] = (cur[0] + re, cur[1] + im)
        out.append({j: v for j, v in acc.items() if v[0] or v[1]})
    return out


def add_scaled(a_rows, b_rows, cre, cim):
    """Rows of A + c*B for a Gaussian-rational coefficient c = cre + cim*i."""
    out = []
    for arow, brow in zip(a_rows, b_rows):
        row = dict(arow)
        for j, bv in brow.items():
            br, bi = bv
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
            cur = row.get(j)
            if cur is not None:
                re = re + cur[0]
                im = im + cur[1]
            if re or im:
                row[j] = (re, im)
            elif cur is not None:
                del row[j]
        out.append(row)
    return out


def scale(rows, cre, cim):
    """Rows of c*A; c must be nonzero."""
    out = []
    for row in rows:
        new = {}
        for j, v in row.items():
            ar, ai = v
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
