"""Pure-Python arithmetic kernels.

Conventions shared with the compiled backend:

* a monomial is a tuple of non-negative integer exponents, one per variable;
* a term list is a list of (monomial, coefficient) pairs with coefficients
  in [1, p), sorted strictly descending in the active monomial order;
* `kind` is 0 for lex, 1 for grevlex; `perm` lists variable indices from
  greatest to least precedence;
* matrices are lists of row lists of integers in [0, p).

All functions return fresh objects and never mutate their inputs.
"""

BACKEND = "python"


def monomial_cmp(ea, eb, kind, perm):
    """Compare two exponent tuples; returns -1, 0 or 1."""
    if kind == 0:  # lex
        for i in perm:
            d = ea[i] - eb[i]
            if d:
                return 1 if d > 0 else -1
        return 0
    da = sum(ea)
    db = sum(eb)
    if da != db:
        return 1 if da > db else -1
    for i in reversed(perm):
        d = ea[i] - eb[i]
        if d:
            # larger exponent on a less significant variable sorts lower
            return -1 if d > 0 else 1
    return 0


def sort_key(exps, kind, perm):
    """Key function consistent with monomial_cmp (bigger key = bigger monomial)."""
    if kind == 0:
        return tuple(exps[i] for i in perm)
    return (sum(exps), tuple(-exps[i] for i in reversed(perm)))


def poly_neg(ta, p):
    return [(e, p - c) for (e, c) in ta]


def poly_add(ta, tb, p, kind, perm):
    """Merge two canonical term lists."""
    out = []
    i, j = 0, 0
    na, nb = len(ta), len(tb)
    while i < na and j < nb:
        ea, ca = ta[i]
        eb, cb = tb[j]
        cmp = monomial_cmp(ea, eb, kind, perm)
        if cmp > 0:
            out.append(ta[i])
            i += 1
        elif cmp < 0:
            out.append(tb[j])
            j += 1
        else:
            c = (ca + cb) % p
            if c:
                out.append((ea, c))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return out


def poly_mul_term(ta, c, m, p, kind, perm):
    """c * x^m * ta; the order is multiplicative so sortedness is preserved."""
    c %= p
    if c == 0 or not ta:
        return []
    return [
        (tuple(x + y for x, y in zip(e, m)), (cc * c) % p)
        for (e, cc) in ta
    ]


def poly_submul(ta, c, m, tb, p, kind, perm):
    """ta - c * x^m * tb in a single merge pass."""
    return poly_add(ta, poly_mul_term(tb, p - (c % p), m, p, kind, perm), p, kind, perm)


def poly_mul(ta, tb, p, kind, perm):
    """Full product, canonical form."""
    if not ta or not tb:
        return []
    acc = {}
    for ea, ca in ta:
        for eb, cb in tb:
            e = tuple(x + y for x, y in zip(ea, eb))
            acc[e] = (acc.get(e, 0) + ca * cb) % p
    out = [(e, c) for (e, c) in acc.items() if c]
    out.sort(key=lambda t: sort_key(t[0], kind, perm), reverse=True)
    return out


def _divides(ea, eb):
    for x, y in zip(ea, eb):
        if x > y:
            return False
    return True


def normal_form(tf, divisors, p, kind, perm):
    """Remainder of tf on division by the (nonzero) term lists in divisors.

    Full reduction: every term of the result is divisible by no divisor's
    leading monomial.
    """
    if not divisors:
        return list(tf)
    leads = [(d[0][0], pow(d[0][1], p - 2, p), d) for d in divisors]
    work = list(tf)
    pos = 0
    out = []
    while pos < len(work):
        le, lc = work[pos]
        hit = None
        for de, dinv, d in leads:
            if _divides(de, le):
                hit = (de, dinv, d)
                break
        if hit is None:
            out.append(work[pos])
            pos += 1
            continue
        de, dinv, d = hit
        q = tuple(x - y for x, y in zip(le, de))
        qc = (lc * dinv) % p
        # merge work[pos:] - qc * x^q * d; the leading terms cancel
        nxt = []
        i, j = pos, 0
        nw, nd = len(work), len(d)
        while i < nw and j < nd:
            ea, ca = work[i]
            eb = tuple(x + y for x, y in zip(d[j][0], q))
            cb = (p - (d[j][1] * qc) % p) % p
            cmp = monomial_cmp(ea, eb, kind, perm)
            if cmp > 0:
                nxt.append(work[i])
                i += 1
            elif cmp < 0:
                if cb:
                    nxt.append((eb, cb))
                j += 1
            else:
                c = (ca + cb) % p
                if c:
                    nxt.append((ea, c))
                i += 1
                j += 1
        nxt.extend(work[i:])
        while j < nd:
            eb = tuple(x + y for x, y in zip(d[j][0], q))
            cb = (p - (d[j][1] * qc) % p) % p
            if cb:
                nxt.append((eb, cb))
            j += 1
        work = nxt
        pos = 0
    return out


def rref(rows, p):
    """Row-reduced echelon form; returns (rows, pivot column list)."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(v * inv) % p for v in m[r]]
        mr = m[r]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                m[i] = [(mi[k] - f * mr[k]) % p for k in range(nc)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots
