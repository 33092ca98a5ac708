# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernels.

Semantics are identical to pykernel, term for term; the test suite runs
both backends against each other.  Coefficient arithmetic uses 64-bit
integers, which is why the package caps p at 2^31 - 1.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"


cdef inline long long _powmod(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef int _cmp(ea, eb, int kind, perm) except? -2:
    cdef Py_ssize_t i, n = len(perm)
    cdef long long d, da, db
    if kind == 0:  # lex
        for i in range(n):
            d = <long long> ea[perm[i]] - <long long> eb[perm[i]]
            if d:
                return 1 if d > 0 else -1
        return 0
    da = 0
    db = 0
    for i in range(n):
        da += <long long> ea[i]
        db += <long long> eb[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(n - 1, -1, -1):
        d = <long long> ea[perm[i]] - <long long> eb[perm[i]]
        if d:
            # larger exponent on a less significant variable sorts lower
            return -1 if d > 0 else 1
    return 0


cdef bint _div(ea, eb) except? -1:
    cdef Py_ssize_t i
    for i in range(len(ea)):
        if <long long> ea[i] > <long long> eb[i]:
            return False
    return True


def monomial_cmp(ea, eb, kind, perm):
    """Compare two exponent tuples; returns -1, 0 or 1."""
    return _cmp(ea, eb, kind, perm)


def sort_key(exps, kind, perm):
    """Key function consistent with monomial_cmp (bigger key = bigger monomial)."""
    cdef long long total = 0
    cdef Py_ssize_t i
    if kind == 0:
        return tuple([exps[i] for i in perm])
    for i in range(len(exps)):
        total += <long long> exps[i]
    return (total, tuple([-exps[perm[i]] for i in range(len(perm) - 1, -1, -1)]))


def poly_neg(ta, p):
    cdef long long pp = p
    return [(e, pp - <long long> c) for (e, c) in ta]


def poly_add(ta, tb, p, kind, perm):
    """Merge two canonical term lists."""
    cdef Py_ssize_t i = 0, j = 0, na = len(ta), nb = len(tb)
    cdef long long pp = p, c
    cdef int kk = kind, cmp
    out = []
    while i < na and j < nb:
        ea, ca = ta[i]
        eb, cb = tb[j]
        cmp = _cmp(ea, eb, kk, perm)
        if cmp > 0:
            out.append(ta[i])
            i += 1
        elif cmp < 0:
            out.append(tb[j])
            j += 1
        else:
            c = (<long long> ca + <long long> cb) % pp
            if c:
                out.append((ea, c))
            i += 1
            j += 1
    while i < na:
        out.append(ta[i])
        i += 1
    while j < nb:
        out.append(tb[j])
        j += 1
    return out


def poly_mul_term(ta, c, m, p, kind, perm):
    """c * x^m * ta; the order is multiplicative so sortedness is preserved."""
    cdef long long pp = p, cc = <long long> c % pp
    if cc == 0 or not ta:
        return []
    out = []
    for e, a in ta:
        out.append(
            (
                tuple([<long long> x + <long long> y for x, y in zip(e, m)]),
                (<long long> a * cc) % pp,
            )
        )
    return out


def poly_submul(ta, c, m, tb, p, kind, perm):
    """ta - c * x^m * tb in a single merge pass."""
    cdef long long pp = p
    return poly_add(
        ta, poly_mul_term(tb, pp - (<long long> c % pp), m, p, kind, perm), p, kind, perm
    )


def poly_mul(ta, tb, p, kind, perm):
    """Full product, canonical form."""
    cdef long long pp = p, c
    if not ta or not tb:
        return []
    acc = {}
    for ea, ca in ta:
        for eb, cb in tb:
            e = tuple([<long long> x + <long long> y for x, y in zip(ea, eb)])
            c = acc.get(e, 0)
            acc[e] = (c + <long long> ca * <long long> cb) % pp
    out = [(e, c) for e, c in acc.items() if c]
    out.sort(key=lambda t: sort_key(t[0], kind, perm), reverse=True)
    return out


def _divides(ea, eb):
    return _div(ea, eb)


def normal_form(tf, divisors, p, kind, perm):
    """Remainder of tf on division by the (nonzero) term lists in divisors.

    Full reduction: every term of the result is divisible by no divisor's
    leading monomial.
    """
    if not divisors:
        return list(tf)
    cdef long long pp = p, qc, cb, c, lc, dinv
    cdef Py_ssize_t pos, i, j, nw, nd
    cdef int kk = kind, cmp
    leads = [(d[0][0], _powmod(d[0][1], pp - 2, pp), d) for d in divisors]
    work = list(tf)
    pos = 0
    out = []
    while pos < len(work):
        le, lco = work[pos]
        lc = <long long> lco
        hit = None
        for lead in leads:
            if _div(lead[0], le):
                hit = lead
                break
        if hit is None:
            out.append(work[pos])
            pos += 1
            continue
        de = hit[0]
        dinv = <long long> hit[1]
        d = hit[2]
        q = tuple([<long long> x - <long long> y for x, y in zip(le, de)])
        qc = (lc * dinv) % pp
        # merge work[pos:] - qc * x^q * d; the leading terms cancel
        nxt = []
        i = pos
        j = 0
        nw = len(work)
        nd = len(d)
        while i < nw and j < nd:
            ea, ca = work[i]
            eb = tuple([<long long> x + <long long> y for x, y in zip(d[j][0], q)])
            cb = (pp - (<long long> d[j][1] * qc) % pp) % pp
            cmp = _cmp(ea, eb, kk, perm)
            if cmp > 0:
                nxt.append(work[i])
                i += 1
            elif cmp < 0:
                if cb:
                    nxt.append((eb, cb))
                j += 1
            else:
                c = (<long long> ca + cb) % pp
                if c:
                    nxt.append((ea, c))
                i += 1
                j += 1
        nxt.extend(work[i:])
        while j < nd:
            eb = tuple([<long long> x + <long long> y for x, y in zip(d[j][0], q)])
            cb = (pp - (<long long> d[j][1] * qc) % pp) % pp
            if cb:
                nxt.append((eb, cb))
            j += 1
        work = nxt
        pos = 0
    return out


def rref(rows, p):
    """Row-reduced echelon form; returns (rows, pivot column list)."""
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc
    cdef Py_ssize_t i, k, r, c, pr
    cdef long long pp = p, inv, f, v
    cdef long long *m
    if nr == 0:
        return [], []
    nc = len(rows[0])
    if nc == 0:
        return [[] for _ in range(nr)], []
    m = <long long *> malloc(nr * nc * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nr):
            row = rows[i]
            for k in range(nc):
                m[i * nc + k] = <long long> row[k] % pp
        pivots = []
        r = 0
        for c in range(nc):
            pr = -1
            for i in range(r, nr):
                if m[i * nc + c]:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for k in range(nc):
                    v = m[r * nc + k]
                    m[r * nc + k] = m[pr * nc + k]
                    m[pr * nc + k] = v
            inv = _powmod(m[r * nc + c], pp - 2, pp)
            for k in range(nc):
                m[r * nc + k] = (m[r * nc + k] * inv) % pp
            for i in range(nr):
                if i != r and m[i * nc + c]:
                    f = m[i * nc + c]
                    for k in range(nc):
                        v = (m[i * nc + k] - f * m[r * nc + k]) % pp
                        m[i * nc + k] = v + pp if v < 0 else v
            pivots.append(c)
            r += 1
            if r == nr:
                break
        out = [[m[i * nc + k] for k in range(nc)] for i in range(nr)]
        return out, pivots
    finally:
        free(m)
