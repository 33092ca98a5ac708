"""Brute-force oracles for the test suite.

These certify the engine on small instances by methods that share no
algorithmic machinery with it: exhaustive enumeration for idempotents,
trial division for factoring, and raw generator products for point
ideals.  None of them runs Buchberger or any matrix computation.
"""

import itertools

from .errors import OracleBoundError
from .groebner import Ideal
from .quotient import from_coords, multiply_mod, to_coords


class OracleConfig:
    __slots__ = ("max_subalgebra_enum", "max_univariate_enum")

    def __init__(self, max_subalgebra_enum=3125, max_univariate_enum=2187):
        self.max_subalgebra_enum = max_subalgebra_enum
        self.max_univariate_enum = max_univariate_enum


DEFAULT_CONFIG = OracleConfig()


def primitive_idempotents_bruteforce(subalgebra, config=DEFAULT_CONFIG):
    """All primitive idempotents of a subalgebra by full enumeration.

    An idempotent e is primitive when the only idempotents f with e*f = f
    are 0 and e itself.
    """
    qb = subalgebra.ambient
    p = qb.ring.p
    d = subalgebra.dimension
    if p**d > config.max_subalgebra_enum:
        raise OracleBoundError(f"enumeration of {p}^{d} elements exceeds the bound")
    rows = subalgebra.rows
    n = qb.dimension
    idempotents = []
    for coeffs in itertools.product(range(p), repeat=d):
        vec = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                vec = [(v + c * r) % p for v, r in zip(vec, row)]
        if not any(vec):
            continue
        f = from_coords(vec, qb)
        if multiply_mod(f, f, qb) == qb.gb.normal_form(f):
            idempotents.append(f)
    primitive = []
    for e in idempotents:
        if all(
            multiply_mod(e, f, qb) != qb.gb.normal_form(f) or f == e
            for f in idempotents
        ):
            primitive.append(to_coords(e, qb))
    return set(primitive)


# -- dense univariate trial division ------------------------------------------
#
# Coefficients ascending, plain int lists; nothing here touches mpoly
# arithmetic beyond converting the answer back for comparison.


def _to_dense(f):
    d = f.degree_in(0)
    out = [0] * (d + 1)
    for exps, c in f.terms:
        out[exps[0]] = c
    return out


def _from_dense(coeffs, ring):
    return ring.from_terms([((e,), c) for e, c in enumerate(coeffs) if c])


def _dense_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    for shift in range(len(a) - db - 1, -1, -1):
        c = (a[shift + db] * inv) % p
        if c:
            q[shift] = c
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
    while a and a[-1] == 0:
        a.pop()
    return q, a


def factor_bruteforce(f, config=DEFAULT_CONFIG):
    """(irreducible, multiplicity) pairs by trial division, ascending degree.

    Divisor candidates are enumerated smallest-degree first, so every
    successful divisor is automatically irreducible.
    """
    ring = f.ring
    if ring.nvars != 1:
        raise ValueError("univariate input required")
    if f.is_constant:
        raise ValueError("cannot factor a constant polynomial")
    p = ring.p
    deg = f.total_degree()
    if p**deg > config.max_univariate_enum:
        raise OracleBoundError(f"search space {p}^{deg} exceeds the bound")
    work = _to_dense(f.monic())
    found = []
    d = 1
    while len(work) - 1 >= 2 * d:
        for tail in itertools.product(range(p), repeat=d):
            cand = list(tail) + [1]
            mult = 0
            while True:
                q, r = _dense_divmod(work, cand, p)
                if r:
                    break
                work = q
                mult += 1
            if mult:
                found.append((_from_dense(cand, ring), mult))
            if len(work) - 1 < 2 * d:
                break
        d += 1
    if len(work) - 1 >= 1:
        found.append((_from_dense(work, ring), 1))
    found.sort(key=lambda t: (t[0].total_degree(), str(t[0])))
    return found


def maximal_ideal(ring, point):
    """<x_1 - a_1, ..., x_n - a_n> for one point."""
    if len(point) != ring.nvars:
        raise ValueError("point arity does not match the ring")
    gens = [ring.variable(i) - ring.constant(a) for i, a in enumerate(point)]
    return Ideal(ring, gens)


def point_ideal(ring, points):
    """The ideal of a finite point set, built as a raw product of maximal
    ideals: one generator per choice of a linear form from each point.

    Distinct points make the maximal ideals pairwise comaximal, so the
    product equals the intersection; no elimination is involved.
    """
    pts = [tuple(c % ring.p for c in pt) for pt in points]
    if not pts:
        raise ValueError("at least one point is required")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    linear = [
        [ring.variable(i) - ring.constant(a) for i, a in enumerate(pt)] for pt in pts
    ]
    gens = []
    for choice in itertools.product(*linear):
        g = ring.one()
        for form in choice:
            g = g * form
        gens.append(g)
    return Ideal(ring, gens)
