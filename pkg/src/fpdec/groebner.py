"""Buchberger's algorithm, reduced Groebner bases, and ideal arithmetic.

Reduced bases are canonical: monic, fully inter-reduced, sorted by leading
monomial descending.  Two ideals are equal iff their reduced bases match
term for term, which the verifier relies on.

Pair handling uses the Gebauer-Moller criteria (product and chain) with
normal-strategy selection: the pending pair with the smallest lcm is
processed first.
"""

from . import kernels
from .errors import UnitIdealError
from .mpoly import (
    MonomialOrder,
    Polynomial,
    PolyRing,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


class GroebnerBasis:
    """A reduced Groebner basis; iterable, immutable."""

    __slots__ = ("polys", "order")

    def __init__(self, polys, order):
        self.polys = tuple(polys)
        self.order = order

    @property
    def ring(self):
        return self.polys[0].ring

    @property
    def is_zero(self):
        return len(self.polys) == 1 and self.polys[0].is_zero

    @property
    def is_unit(self):
        return len(self.polys) == 1 and self.polys[0] == 1

    def normal_form(self, f):
        return normal_form(f, self)

    def contains(self, f):
        return self.normal_form(f).is_zero

    def leading_monomials(self):
        return [g.lm() for g in self.polys if not g.is_zero]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and self.polys == other.polys
        )

    def __hash__(self):
        return hash((self.order, self.polys))

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(str(g) for g in self.polys) + "])"


def normal_form(f, gb):
    """Fully reduced remainder of f modulo gb (or a plain list of divisors)."""
    divisors = [g.terms for g in gb if not g.is_zero]
    if not divisors or f.is_zero:
        return f
    ring = f.ring
    order = ring.order
    out = kernels.normal_form(f.terms, divisors, ring.p, order.code, order.precedence)
    return Polynomial(ring, out)


def spoly(f, g):
    """S-polynomial; leading terms cancel by construction."""
    ring = f.ring
    p = ring.p
    order = ring.order
    lf, lg = f.lm(), g.lm()
    l = monomial_lcm(lf, lg)
    cf = ring.field.inv(f.lc())
    cg = ring.field.inv(g.lc())
    a = kernels.poly_mul_term(f.terms, cf, monomial_div(l, lf), p, order.code, order.precedence)
    return Polynomial(
        ring,
        kernels.poly_submul(
            a, cg, monomial_div(l, lg), g.terms, p, order.code, order.precedence
        ),
    )


def _interreduce(polys):
    """Monic mutually-reduced generating set; empty input means the zero ideal."""
    work = [f.monic() for f in polys if not f.is_zero]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            rest = work[:i] + work[i + 1 :]
            r = normal_form(work[i], rest)
            if r.terms != work[i].terms:
                changed = True
                work[i] = r.monic() if not r.is_zero else r
        work = [f for f in work if not f.is_zero]
    return work


def _update(basis, pairs, k, lms, order):
    """Gebauer-Moller pair update when basis[k] joins.

    pairs are (i, j, lcm) with i < j.  Applies the chain criterion to the
    surviving old pairs and the product/minimal-lcm criteria to new ones.
    """
    lmk = lms[k]
    lcm_with_k = [monomial_lcm(lms[i], lmk) for i in range(k)]

    kept = []
    for i, j, l in pairs:
        if (
            monomial_divides(lmk, l)
            and l != lcm_with_k[i]
            and l != lcm_with_k[j]
        ):
            continue
        kept.append((i, j, l))

    by_lcm = {}
    for i in range(k):
        by_lcm.setdefault(lcm_with_k[i], []).append(i)
    for l in sorted(by_lcm, key=lambda e: order.key(e)):
        if any(l2 != l and monomial_divides(l2, l) for l2 in by_lcm):
            continue
        idxs = by_lcm[l]
        if any(monomial_mul(lms[i], lmk) == l for i in idxs):
            # some pair in the class has coprime leading monomials
            continue
        kept.append((idxs[0], k, l))
    return kept


def _reduce_basis(basis, ring):
    """Canonicalize: minimal, inter-reduced, monic, sorted descending."""
    lms = [g.lm() for g in basis]
    minimal = []
    for i, g in enumerate(basis):
        if any(
            j != i
            and monomial_divides(lms[j], lms[i])
            and (lms[j] != lms[i] or j < i)
            for j in range(len(basis))
        ):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, rest).monic())
    reduced.sort(key=lambda g: ring.order.key(g.lm()), reverse=True)
    return reduced


def buchberger(gens, order=None):
    """Reduced Groebner basis of the ideal generated by gens.

    The zero ideal yields [0], the unit ideal [1].  If order is given and
    differs from the generators' ring order, the computation happens in a
    re-ordered copy of the ring.
    """
    if not gens:
        raise ValueError("gens must be nonempty (use [ring.zero()] for the zero ideal)")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    if order is not None:
        if isinstance(order, str):
            order = MonomialOrder(order)
        order = order.resolved(ring.nvars)
        if order != ring.order:
            ring = ring.with_order(order)
            gens = [ring.from_terms(g.terms) for g in gens]

    basis = _interreduce(gens)
    if not basis:
        return GroebnerBasis([ring.zero()], ring.order)
    if any(g.is_constant for g in basis):
        return GroebnerBasis([ring.one()], ring.order)

    lms = [g.lm() for g in basis]
    pairs = []
    for k in range(1, len(basis)):
        pairs = _update(basis, pairs, k, lms, ring.order)

    while pairs:
        best = min(range(len(pairs)), key=lambda t: ring.order.key(pairs[t][2]))
        i, j, _ = pairs.pop(best)
        r = normal_form(spoly(basis[i], basis[j]), basis)
        if r.is_zero:
            continue
        if r.is_constant:
            return GroebnerBasis([ring.one()], ring.order)
        r = r.monic()
        basis.append(r)
        lms.append(r.lm())
        pairs = _update(basis, pairs, len(basis) - 1, lms, ring.order)

    return GroebnerBasis(_reduce_basis(basis, ring), ring.order)


class Ideal:
    """An ideal of a PolyRing, carrying its generators and a cached reduced GB."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring, generators):
        gens = tuple(generators)
        if not gens:
            gens = (ring.zero(),)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.ring = ring
        self.generators = gens
        self._gb = None

    @classmethod
    def of(cls, *gens):
        return cls(gens[0].ring, gens)

    def groebner_basis(self):
        if self._gb is None:
            self._gb = buchberger(list(self.generators))
        return self._gb

    @classmethod
    def from_groebner(cls, gb):
        ideal = cls(gb.ring, list(gb))
        ideal._gb = gb
        return ideal

    @property
    def is_zero(self):
        return self.groebner_basis().is_zero

    @property
    def is_unit(self):
        return self.groebner_basis().is_unit

    def normal_form(self, f):
        return self.groebner_basis().normal_form(f)

    def contains(self, f):
        return self.normal_form(f).is_zero

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def with_order(self, order):
        if isinstance(order, str):
            order = MonomialOrder(order)
        order = order.resolved(self.ring.nvars)
        if order == self.ring.order:
            return self
        ring = self.ring.with_order(order)
        return Ideal(ring, [ring.from_terms(g.terms) for g in self.generators])

    def intersect(self, other):
        return intersect(self, other)

    def saturate(self, g):
        return saturate(self, g)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash((self.ring, self.groebner_basis().polys))

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal_equal(a, b, order=None):
    """True iff a and b generate the same ideal (reduced GBs coincide)."""
    if a.ring.field != b.ring.field or a.ring.variables != b.ring.variables:
        raise ValueError("ideals from different rings")
    if order is not None:
        a = a.with_order(order)
        b = b.with_order(order)
    elif a.ring.order != b.ring.order:
        b = b.with_order(a.ring.order)
    return a.groebner_basis().polys == b.groebner_basis().polys


_AUX_STEM = "u"


def _fresh_aux_name(ring):
    if _AUX_STEM not in ring.variables:
        return _AUX_STEM
    k = 0
    while f"{_AUX_STEM}{k}" in ring.variables:
        k += 1
    return f"{_AUX_STEM}{k}"


def _extend_ring(ring):
    """(ring with a fresh aux variable first, pure lex) and the lift map."""
    aux = _fresh_aux_name(ring)
    ext = PolyRing(ring.field, (aux,) + ring.variables, MonomialOrder("lex"))

    def lift(f, aux_exp=0):
        return ext.from_terms([((aux_exp,) + e, c) for e, c in f.terms])

    return ext, lift


def _eliminate_aux(gb_ext, ring):
    """Members of an extended-ring GB free of the (first) aux variable."""
    out = []
    for g in gb_ext:
        if g.is_zero or any(e[0] for e, _ in g.terms):
            continue
        out.append(ring.from_terms([(e[1:], c) for e, c in g.terms]))
    if not out:
        out = [ring.zero()]
    return out


def saturate(ideal, g):
    """I : <g>^infinity via a Rabinowitsch variable.

    Adjoin u greatest in pure lex, compute the reduced GB of
    generators(I) plus 1 - u*g, and contract the u-free members.
    """
    if g.is_zero:
        raise ValueError("cannot saturate by the zero polynomial")
    ring = ideal.ring
    ext, lift = _extend_ring(ring)
    gens = [lift(f) for f in ideal.groebner_basis() if not f.is_zero]
    if not gens:
        return Ideal(ring, [ring.zero()])
    gens.append(ext.one() - lift(g, aux_exp=1))
    gb = buchberger(gens)
    contracted = _eliminate_aux(gb, ring)
    out = Ideal(ring, contracted)
    if ring.order.kind == "lex" and ring.order.precedence == tuple(range(ring.nvars)):
        # the contraction of a pure-lex GB is already a reduced GB
        out._gb = GroebnerBasis(contracted, ring.order)
    return out


def intersect(a, b):
    """a ∩ b via the standard one-tag elimination t*a + (1-t)*b."""
    if a.ring != b.ring:
        raise ValueError("ideals from different rings")
    ring = a.ring
    ga = [f for f in a.groebner_basis() if not f.is_zero]
    gb = [f for f in b.groebner_basis() if not f.is_zero]
    if not ga or not gb:
        return Ideal(ring, [ring.zero()])
    if a.is_unit:
        return Ideal.from_groebner(b.groebner_basis())
    if b.is_unit:
        return Ideal.from_groebner(a.groebner_basis())
    ext, lift = _extend_ring(ring)
    t = ext.variable(0)
    gens = [t * lift(f) for f in ga]
    gens.extend((ext.one() - t) * lift(f) for f in gb)
    gb_ext = buchberger(gens)
    return Ideal(ring, _eliminate_aux(gb_ext, ring))


def intersect_all(ideals):
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = intersect(acc, nxt)
    return acc
