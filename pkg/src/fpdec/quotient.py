"""The quotient algebra F_p[x]/I as a finite-dimensional vector space.

Given a reduced Groebner basis of a zero-dimensional ideal, the standard
monomials (those divisible by no leading term) form a vector-space basis,
the Macaulay basis.  It is kept sorted descending in the active order, and
every matrix here is indexed by it: column j holds the coordinates of the
image of the j-th basis monomial.
"""

import itertools

from .errors import NotZeroDimensionalError
from .gf import Matrix
from .mpoly import Polynomial, monomial_divides


def _pure_power_degrees(gb):
    """Minimal pure-power leading exponents per variable, or None if missing."""
    n = gb.ring.nvars
    degs = [None] * n
    for lm in gb.leading_monomials():
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            if degs[i] is None or lm[i] < degs[i]:
                degs[i] = lm[i]
    return degs


def is_zero_dimensional(gb):
    """Every variable appears as a pure power among the leading terms.

    The unit ideal counts as zero-dimensional (empty quotient).
    """
    if gb.is_unit:
        return True
    if gb.is_zero:
        return False
    return all(d is not None for d in _pure_power_degrees(gb))


class QuotientBasis:
    """Macaulay basis of F_p[x]/I: standard monomials, descending."""

    __slots__ = ("gb", "monomials", "_index")

    def __init__(self, gb, monomials):
        self.gb = gb
        self.monomials = tuple(monomials)
        self._index = {m: i for i, m in enumerate(self.monomials)}

    @property
    def ring(self):
        return self.gb.ring

    @property
    def dimension(self):
        return len(self.monomials)

    def index_of(self, exps):
        return self._index[tuple(exps)]

    def monomial_poly(self, j):
        return Polynomial(self.ring, ((self.monomials[j], 1),))

    def __len__(self):
        return len(self.monomials)

    def __repr__(self):
        names = [str(self.monomial_poly(j)) for j in range(len(self))]
        return "QuotientBasis({" + ", ".join(names) + "})"


def macaulay_basis(gb):
    """All standard monomials of a zero-dimensional reduced GB.

    The unit ideal yields an empty basis; otherwise 1 is always a member.
    """
    if gb.is_unit:
        return QuotientBasis(gb, ())
    degs = _pure_power_degrees(gb) if not gb.is_zero else [None]
    if gb.is_zero or any(d is None for d in degs):
        raise NotZeroDimensionalError(
            "ideal is not zero-dimensional (missing pure-power leading term)"
        )
    leads = gb.leading_monomials()
    ring = gb.ring
    standard = []
    for exps in itertools.product(*(range(d) for d in degs)):
        if not any(monomial_divides(lm, exps) for lm in leads):
            standard.append(exps)
    standard.sort(key=lambda e: ring.order.key(e), reverse=True)
    return QuotientBasis(gb, standard)


class QuotientElement:
    """An element of F_p[x]/I as a coordinate vector on the Macaulay basis."""

    __slots__ = ("basis", "coords")

    def __init__(self, basis, coords):
        coords = tuple(c % basis.ring.p for c in coords)
        if len(coords) != basis.dimension:
            raise ValueError("coordinate vector has the wrong length")
        self.basis = basis
        self.coords = coords

    @property
    def is_zero(self):
        return not any(self.coords)

    def to_polynomial(self):
        return from_coords(self.coords, self.basis)

    def __add__(self, other):
        p = self.basis.ring.p
        return QuotientElement(
            self.basis, [(a + b) % p for a, b in zip(self.coords, other.coords)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return QuotientElement(self.basis, [other * c for c in self.coords])
        prod = multiply_mod(self.to_polynomial(), other.to_polynomial(), self.basis)
        return to_coords(prod, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, QuotientElement)
            and self.basis.monomials == other.basis.monomials
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"QuotientElement({self.to_polynomial()})"


def coords_vector(f, qb):
    """Raw coordinate list of NF(f) on the Macaulay basis."""
    nf = qb.gb.normal_form(f)
    v = [0] * qb.dimension
    for exps, c in nf.terms:
        v[qb.index_of(exps)] = c
    return v


def to_coords(f, qb):
    """Coordinates of NF(f) on the Macaulay basis."""
    return QuotientElement(qb, coords_vector(f, qb))


def from_coords(coords, qb):
    """Canonical representative polynomial of a coordinate vector."""
    if isinstance(coords, QuotientElement):
        coords = coords.coords
    if len(coords) != qb.dimension:
        raise ValueError("coordinate vector has the wrong length")
    return qb.ring.from_terms(
        [(qb.monomials[i], c) for i, c in enumerate(coords) if c % qb.ring.p]
    )


def multiply_mod(f, g, qb):
    """NF(f * g), staying inside span(B)."""
    return qb.gb.normal_form(f * g)


def pow_mod(f, e, qb):
    """NF(f^e) by square-and-multiply, reducing after every product."""
    result = qb.ring.one()
    base = qb.gb.normal_form(f)
    while e:
        if e & 1:
            result = qb.gb.normal_form(result * base)
        e >>= 1
        if e:
            base = qb.gb.normal_form(base * base)
    return result


def mult_matrix(f, qb):
    """Matrix of multiplication by f: column j = coords(f * B_j)."""
    n = qb.dimension
    fr = qb.gb.normal_form(f)
    cols = [coords_vector(fr * qb.monomial_poly(j), qb) for j in range(n)]
    return Matrix(
        qb.ring.field, [[cols[j][i] for j in range(n)] for i in range(n)], cols=n
    )


def frobenius_matrix(qb):
    """Matrix of f -> f^p - f on the Macaulay basis."""
    n = qb.dimension
    p = qb.ring.p
    cols = []
    for j in range(n):
        b = qb.monomial_poly(j)
        cols.append(coords_vector(pow_mod(b, p, qb) - b, qb))
    return Matrix(
        qb.ring.field, [[cols[j][i] for j in range(n)] for i in range(n)], cols=n
    )
