import random

import pytest

from fpdec.groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    ideal_equal,
    intersect,
    intersect_all,
    normal_form,
    saturate,
    spoly,
)
from fpdec.mpoly import PolyRing
from fpdec.oracle import maximal_ideal, point_ideal

from conftest import EXAMPLE1_GENS, random_points

EXAMPLE1_GB = [
    "x + y + z + 4",
    "y^2 + 3*y + 3*z^4 + z^3 + 2*z^2 + z",
    "y*z + 2*y + 2*z^4 + 4*z^3 + 4*z^2 + 3*z",
    "z^5 + 4*z^4 + 3*z^3 + 4*z^2 + 2*z",
]


def test_example_basis(ring5, example1):
    gb = example1.groebner_basis()
    assert [str(g) for g in gb] == EXAMPLE1_GB
    # the reduced GB generates the same ideal as the input
    assert ideal_equal(example1, Ideal(ring5, list(gb)))


def test_trivial_bases(ring5):
    assert [str(g) for g in buchberger([ring5.parse("x")])] == ["x"]
    gb = buchberger([ring5.zero()])
    assert gb.is_zero and not gb.is_unit
    gb = buchberger([ring5.parse("x"), ring5.parse("x+1")])
    assert gb.is_unit
    with pytest.raises(ValueError):
        buchberger([])


def test_univariate_gcd_case():
    r = PolyRing(5, ["x"], "lex")
    gb = buchberger([r.parse("x^2-1"), r.parse("x^3-1")])
    assert [str(g) for g in gb] == ["x + 4"]


def test_buchberger_with_order_argument(ring5, example1):
    gb = buchberger(list(example1.generators), "grevlex")
    assert gb.order.kind == "grevlex"
    # same ideal regardless of the order used
    assert ideal_equal(Ideal.from_groebner(gb), example1)


def test_spoly_cancels_leads(ring5):
    f, g = ring5.parse("x^2*y + z"), ring5.parse("x*y^2 + 1")
    s = spoly(f, g)
    assert s == ring5.parse("y*z - x")


def test_final_basis_passes_buchberger_criterion(example1):
    gb = example1.groebner_basis()
    polys = list(gb)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            assert normal_form(spoly(polys[i], polys[j]), gb).is_zero


def test_normal_form_properties(ring5, example1):
    gb = example1.groebner_basis()
    assert all(normal_form(g, gb).is_zero for g in gb)
    assert str(normal_form(ring5.parse("x"), gb)) == "4*y + 4*z + 1"
    assert normal_form(ring5.zero(), gb).is_zero
    rng = random.Random(5)
    for _ in range(20):
        f = ring5.from_terms(
            [
                (
                    (rng.randrange(3), rng.randrange(3), rng.randrange(4)),
                    rng.randrange(5),
                )
                for _ in range(4)
            ]
        )
        g = ring5.parse("x*z + y")
        c = rng.randrange(1, 5)
        nf = normal_form(f, gb)
        assert normal_form(nf, gb) == nf
        assert normal_form(f + g, gb) == nf + normal_form(g, gb)
        assert normal_form(f * c, gb) == nf * c


def test_ideal_equality(ring5):
    a = Ideal(ring5, [ring5.parse("x"), ring5.parse("y")])
    b = Ideal(ring5, [ring5.parse("y"), ring5.parse("x+y")])
    assert ideal_equal(a, b)
    assert a == b
    c = Ideal(ring5, [ring5.parse("x^2")])
    d = Ideal(ring5, [ring5.parse("x")])
    assert not ideal_equal(c, d)
    assert d.contains_ideal(c) and not c.contains_ideal(d)


def test_ideal_equal_across_orders(ring5, example1):
    other = example1.with_order("grevlex")
    assert ideal_equal(example1, other)


def test_intersections(ring5):
    a = Ideal(ring5, [ring5.parse("x")])
    b = Ideal(ring5, [ring5.parse("y")])
    assert [str(g) for g in intersect(a, b).groebner_basis()] == ["x*y"]
    assert ideal_equal(intersect(a, a), a)
    assert ideal_equal(intersect(a, b), intersect(b, a))
    unit = Ideal(ring5, [ring5.one()])
    assert ideal_equal(intersect(a, unit), a)
    zero = Ideal(ring5, [ring5.zero()])
    assert intersect(a, zero).is_zero


def test_example_component_intersection(ring5, example1):
    components = [
        ["z", "y", "x+4"],
        ["z+2", "y^2+3*y+1", "x+y+2"],
        ["z^2+4*z+2", "y+2*z+1", "x+4*z+3"],
        ["z+3", "y+4", "x+2"],
    ]
    ideals = [Ideal(ring5, [ring5.parse(s) for s in gens]) for gens in components]
    assert ideal_equal(intersect_all(ideals), example1)


def test_saturation_examples(ring5, example1):
    # one idempotent of the running example cuts out the component at (1,0,0)
    h1 = ring5.parse("3*z^4 + 2*z^3 + 4*z^2 + 2*z + 1")
    sat = saturate(example1, h1)
    assert [str(g) for g in sat.groebner_basis()] == ["x + 4", "y", "z"]

    r = PolyRing(5, ["x"], "lex")
    j = Ideal(r, [r.parse("x^3 - x^2")])
    assert [str(g) for g in saturate(j, r.parse("x")).groebner_basis()] == ["x + 4"]
    assert ideal_equal(saturate(j, r.one()), j)
    with pytest.raises(ValueError):
        saturate(j, r.zero())


def test_saturation_contains_input(example1):
    h = example1.ring.parse("2*z^3 + 2*z")
    sat = saturate(example1, h)
    assert all(sat.contains(g) for g in example1.generators)


def test_aux_variable_never_collides():
    r = PolyRing(5, ["u", "u0", "x"], "lex")
    a = Ideal(r, [r.parse("x + u"), r.parse("u0 - 1")])
    sat = saturate(a, r.parse("x"))
    assert all("u1" not in str(g) for g in sat.generators)
    assert ideal_equal(sat, a.saturate(r.parse("x")))


def test_comaximal_saturation_recovers_factor():
    # for comaximal point ideals with an explicit partition of unity,
    # saturating the intersection by g0 recovers the first ideal
    rng = random.Random(17)
    for p, n in [(3, 2), (5, 2), (7, 3)]:
        ring = PolyRing(p, [f"x{i}" for i in range(n)], "lex")
        a, b = random_points(rng, p, n, 2)
        ia, ib = maximal_ideal(ring, a), maximal_ideal(ring, b)
        i = point_ideal(ring, [a, b])
        # f0 + g0 = 1 with f0 in ia, g0 in ib
        k = next(j for j in range(n) if a[j] != b[j])
        c = ring.field.inv((b[k] - a[k]) % p)
        f0 = (ring.variable(k) - ring.constant(a[k])) * c
        g0 = (ring.constant(b[k]) - ring.variable(k)) * c
        assert f0 + g0 == ring.one()
        assert ia.contains(f0) and ib.contains(g0)
        assert ideal_equal(saturate(i, g0), ia)
        assert ideal_equal(saturate(i, f0), ib)


def test_groebner_basis_container(example1):
    gb = example1.groebner_basis()
    assert len(gb) == 4
    assert gb[0] == list(gb)[0]
    assert gb == GroebnerBasis(gb.polys, gb.order)
    assert gb.contains(example1.generators[0])
    assert not gb.contains(example1.ring.parse("x"))
    assert len(gb.leading_monomials()) == 4


def test_zero_ideal_representation(ring5):
    i = Ideal(ring5, [])
    assert i.generators == (ring5.zero(),)
    assert i.is_zero and not i.is_unit
    assert i.normal_form(ring5.parse("x + 1")) == ring5.parse("x + 1")
