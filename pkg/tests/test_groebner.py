import logging
import random

import pytest
import sympy as sp

from gaussian_ideals.algebra.field import rationals
from gaussian_ideals.algebra.groebner import (
    Ideal,
    buchberger,
    eliminate,
    ideal_contains,
    ideal_equal,
    ideal_member,
    is_binomial_basis,
    is_reduced_groebner_basis,
    normal_form,
    s_polynomial,
)
from gaussian_ideals.algebra.poly import PolyRing, degrevlex, lex, monomial_divides
from gaussian_ideals.errors import BudgetExceededError, RingMismatchError
from gaussian_ideals.utils.budget import EffortBudget, use_budget

X, Y, Z = sp.symbols("x y z")


def _canon(exprs):
    return {sp.Poly(e, X, Y, Z, domain="QQ").monic().as_expr() for e in exprs}


def _sympy_exprs(G):
    return [sp.sympify(s.replace("^", "**")) for s in G.dump()]


def _ideal(ring, *texts):
    return Ideal(ring, [ring.parse(t) for t in texts])


@pytest.fixture
def twisted_cubic(ring_xyz):
    return _ideal(ring_xyz, "y - x^2", "z - x^3")


def test_twisted_cubic_basis(twisted_cubic):
    G = buchberger(twisted_cubic)
    assert G.dump() == ["x^2 - y", "x*y - z", "y^2 - x*z"]
    assert is_reduced_groebner_basis(G)
    assert is_binomial_basis(G)
    assert not G.is_unit()


def test_eliminate_x_from_twisted_cubic(twisted_cubic):
    K = eliminate(twisted_cubic, 1)
    assert K.ring.variables == ("y", "z")
    assert [str(g) for g in K.generators] == ["y^3 - z^2"]


@pytest.mark.parametrize("texts", [
    ("x^2 + y*z - 1", "x*y - z^2", "x + y + z"),
    ("x^3 - 2*x*y", "x^2*y - 2*y^2 + x"),
    ("x*y - z", "y*z - x", "x*z - y"),
    ("x^2 - y*z", "y^2 - x*z", "z^2 - x*y"),
])
@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_reduced_basis_matches_sympy(ring_xyz_q, texts, order):
    I = _ideal(ring_xyz_q, *texts)
    if order == "lex":
        I = I.with_order(lex())
    G = buchberger(I)
    expected = sp.groebner([sp.sympify(t.replace("^", "**")) for t in texts], X, Y, Z, order=order, domain="QQ")
    assert _canon(_sympy_exprs(G)) == _canon(expected.exprs)
    assert is_reduced_groebner_basis(G)


def test_basis_is_sorted_descending(ring_xyz):
    G = buchberger(_ideal(ring_xyz, "z^2 - x", "y^2 - z", "x*y*z - 1"))
    keys = [ring_xyz.order.key(m) for m in G.leading_monomials()]
    assert keys == sorted(keys, reverse=True)


def test_unit_ideal(ring_xy):
    G = buchberger(_ideal(ring_xy, "x*y - 1", "x"))
    assert G.is_unit()
    assert G.dump() == ["1"]


def test_zero_generators_are_dropped(ring_xy):
    I = Ideal(ring_xy, [ring_xy.zero(), ring_xy.var("x")])
    assert len(I) == 1
    assert buchberger(Ideal(ring_xy)).basis == ()


def test_membership(twisted_cubic, ring_xyz):
    assert ideal_member(ring_xyz.parse("y^3 - z^2"), twisted_cubic)
    assert not ideal_member(ring_xyz.parse("x*z - y"), twisted_cubic)
    smaller = _ideal(ring_xyz, "y^2 - x*z")
    assert ideal_contains(twisted_cubic, smaller)
    assert not ideal_contains(smaller, twisted_cubic)


def test_equality_ignores_generators_and_order(twisted_cubic, ring_xyz):
    other = _ideal(ring_xyz, "x^2 - y", "x*y - z", "y^2 - x*z", "x^3 - z")
    assert ideal_equal(twisted_cubic, other)
    assert ideal_equal(twisted_cubic, other.with_order(lex()))


def test_results_are_cached(twisted_cubic):
    assert buchberger(twisted_cubic) is buchberger(twisted_cubic)


def test_s_polynomial(ring_xy):
    f = ring_xy.parse("x^2 - y")
    g = ring_xy.parse("x*y - 1")
    assert str(s_polynomial(f, g)) == "-y^2 + x"


def test_normal_form_needs_matching_order(twisted_cubic, ring_xyz):
    G = buchberger(twisted_cubic)
    assert str(normal_form(ring_xyz.parse("x^3"), G)) == "z"
    with pytest.raises(RingMismatchError):
        normal_form(ring_xyz.with_order(lex()).var("x"), G)
    with pytest.raises(RingMismatchError):
        normal_form(PolyRing(("a",)).var("a"), G)


def test_generators_must_share_ring(ring_xy):
    with pytest.raises(RingMismatchError):
        Ideal(ring_xy, [PolyRing(("x", "y"), rationals()).var("x")])


def test_eliminate_range(twisted_cubic):
    with pytest.raises(ValueError):
        eliminate(twisted_cubic, 3)


def test_budget_is_enforced():
    R = PolyRing(("a", "b", "c"))
    with pytest.raises(BudgetExceededError) as info:
        buchberger(_ideal(R, "a^2 - b", "a*b - c", "a*c - 1"), budget=EffortBudget(max_steps=1))
    assert info.value.resource == "reduction steps"


def test_active_budget_is_used():
    R = PolyRing(("a", "b", "c", "d"))
    with use_budget(EffortBudget(max_steps=1)):
        with pytest.raises(BudgetExceededError):
            buchberger(_ideal(R, "a*b - c*d", "a^2 - b*d", "c^2 - a*d"))


def test_engine_logs_under_its_class_name(caplog):
    R = PolyRing(("p", "q", "r"))
    with caplog.at_level(logging.DEBUG, logger="_Buchberger"):
        buchberger(_ideal(R, "p^2 - q*r", "q^2 - p"))
    assert any(record.name == "_Buchberger" for record in caplog.records)


def _random_ideal(rng, ring, random_poly, count, homogeneous):
    return Ideal(ring, [random_poly(rng, ring, 2, 3, homogeneous) for _ in range(count)])


@pytest.mark.parametrize("seed", range(10))
def test_normal_form_is_idempotent_and_linear(ring_xyz, random_poly, seed):
    rng = random.Random(seed)
    G = buchberger(_random_ideal(rng, ring_xyz, random_poly, 2, True))
    p = random_poly(rng, ring_xyz, 4, 6)
    q = random_poly(rng, ring_xyz, 4, 6)
    a, b = rng.randint(1, 9), rng.randint(1, 9)
    nf_p, nf_q = G.normal_form(p), G.normal_form(q)
    assert G.normal_form(nf_p) == nf_p
    assert G.normal_form(p.scale(a) + q.scale(b)) == nf_p.scale(a) + nf_q.scale(b)
    assert G.contains(p - nf_p)
    lms = G.leading_monomials()
    assert not any(monomial_divides(lm, m) for m, _ in nf_p.terms for lm in lms)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("homogeneous", [True, False])
def test_s_pairs_reduce_to_zero(ring_xyz, random_poly, seed, homogeneous):
    rng = random.Random(seed)
    I = _random_ideal(rng, ring_xyz, random_poly, 3, homogeneous)
    G = buchberger(I)
    assert is_reduced_groebner_basis(G)
    for a in range(len(I.generators)):
        for b in range(a + 1, len(I.generators)):
            assert not G.normal_form(s_polynomial(I.generators[a], I.generators[b]))
    for a in range(len(G.basis)):
        for b in range(a + 1, len(G.basis)):
            assert not G.normal_form(s_polynomial(G.basis[a], G.basis[b]))


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("order", [degrevlex(), lex()], ids=str)
def test_reduced_basis_ignores_generator_order(ring_xyz, random_poly, seed, order):
    rng = random.Random(100 + seed)
    ring = ring_xyz.with_order(order)
    gens = list(_random_ideal(rng, ring, random_poly, 3, False).generators)
    shuffled = gens[::-1]
    rng.shuffle(shuffled)
    reference = buchberger(Ideal(ring, gens)).basis
    assert buchberger(Ideal(ring, gens[::-1])).basis == reference
    assert buchberger(Ideal(ring, shuffled)).basis == reference
