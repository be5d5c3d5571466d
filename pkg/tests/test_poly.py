import random
from fractions import Fraction

import pytest

import gaussian_ideals
from gaussian_ideals.algebra.field import prime_field, rationals
from gaussian_ideals.algebra.poly import (
    MonomialOrder,
    PolyRing,
    UniPoly,
    block_elim,
    degrevlex,
    lex,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_of_degree,
    order_cmp,
    unipoly_mul,
)
from gaussian_ideals.errors import ParseError, RingMismatchError


def test_degrevlex_order_in_degree_two():
    degree_two = sorted(monomials_of_degree(3, 2), key=degrevlex().key, reverse=True)
    assert degree_two == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]


@pytest.mark.parametrize("order,a,b,expected", [
    (lex(), (1, 0, 0), (0, 5, 5), 1),
    (degrevlex(), (1, 0, 0), (0, 5, 5), -1),
    (degrevlex(), (1, 0, 1), (0, 2, 0), -1),
    (block_elim(1), (1, 0, 0), (0, 3, 3), 1),
    (block_elim(1), (0, 2, 0), (0, 1, 1), 1),
    (lex(), (0, 1, 2), (0, 1, 2), 0),
])
def test_order_cmp(order, a, b, expected):
    assert order_cmp(a, b, order) == expected


def test_order_cmp_arity_mismatch():
    with pytest.raises(RingMismatchError):
        order_cmp((1, 0), (1, 0, 0), degrevlex())


@pytest.mark.parametrize("kind,block", [("grlex", 0), ("lex", 2), ("block-elim", 0)])
def test_bad_orders(kind, block):
    with pytest.raises(ValueError):
        MonomialOrder(kind, block)


def test_monomial_helpers():
    assert monomial_divides((1, 0, 2), (1, 1, 2))
    assert not monomial_divides((0, 2), (1, 1))
    assert monomial_lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
    assert len(list(monomials_of_degree(3, 3))) == 10


def test_ring_validation():
    with pytest.raises(ValueError):
        PolyRing(())
    with pytest.raises(ValueError):
        PolyRing(("x", "x"))
    with pytest.raises(ValueError):
        PolyRing(("x", "2y"))
    with pytest.raises(ValueError):
        PolyRing(("x", "y"), order=block_elim(2))


def test_arithmetic_and_normalization(ring_xy):
    x, y = ring_xy.gens()
    p = (x + y) ** 2
    assert str(p) == "x^2 + 2*x*y + y^2"
    assert (p - p).is_zero()
    assert str(x * y - y * x + 3) == "3"
    assert p.leading_monomial == (2, 0)
    assert p.total_degree == 2
    assert p.is_homogeneous()
    assert not (p + 1).is_homogeneous()


def test_terms_are_unique_sorted_and_nonzero(ring_xyz):
    x, y, z = ring_xyz.gens()
    p = (x + y + z) ** 3 - x**3
    keys = [ring_xyz.order.key(m) for m, _ in p.terms]
    assert keys == sorted(keys, reverse=True)
    assert len(set(keys)) == len(keys)
    assert all(c for _, c in p.terms)


def test_prime_field_wraps_coefficients():
    R = PolyRing(("x",))
    x = R.var("x")
    assert (x * 32003).is_zero()
    assert str(x * 32002) == "-x"


def test_parse_and_format(ring_xyz_q):
    p = ring_xyz_q.parse("3*x^2*y - 1/2*z + x^2*y")
    assert str(p) == "4*x^2*y - 1/2*z"
    assert ring_xyz_q.parse("0").is_zero()
    assert ring_xyz_q.parse(str(p)) == p


@pytest.mark.parametrize("text", ["", "x+", "x*^2", "w", "x^y", "x**2"])
def test_parse_errors(ring_xyz, text):
    with pytest.raises(ParseError):
        ring_xyz.parse(text)


def test_ring_mismatch(ring_xy, ring_xyz):
    with pytest.raises(RingMismatchError):
        ring_xy.var("x") + ring_xyz.var("x")
    with pytest.raises(RingMismatchError):
        ring_xy.var("z")


def test_to_ring_by_name(ring_xy, ring_xyz):
    p = ring_xy.parse("x*y + y^2")
    q = p.to_ring(ring_xyz)
    assert str(q) == "x*y + y^2"
    with pytest.raises(RingMismatchError):
        ring_xyz.var("z").to_ring(ring_xy)
    with pytest.raises(RingMismatchError):
        p.to_ring(PolyRing(("x", "y"), rationals()))


def test_monic():
    R = PolyRing(("x", "y"), rationals())
    assert str(R.parse("2*x - y").monic()) == "x - 1/2*y"


def test_unipoly_product_coefficients():
    R = PolyRing(("a0", "a1", "b0", "b1"))
    f = UniPoly.generic(R, ["a0", "a1"])
    g = UniPoly.generic(R, ["b0", "b1"])
    fg = f * g
    assert fg.degree == 2
    assert str(fg.coefficient(1)) == "a1*b0 + a0*b1"
    assert fg.coefficient(5).is_zero()
    assert UniPoly(R, [R.one(), R.zero()]).degree == 0


def test_package_imports_and_default_ring():
    assert gaussian_ideals.__version__
    ring = PolyRing(("x", "y"))
    assert ring.field == prime_field()
    assert ring.order == degrevlex()
    assert PolyRing(("x",), rationals(), lex()).order == lex()


_SMALL_MONOMIALS = [m for d in range(4) for m in monomials_of_degree(3, d)]


@pytest.mark.parametrize("order", [lex(), degrevlex(), block_elim(1), block_elim(2)], ids=str)
def test_orders_are_total_and_multiplicative(order):
    one = (0, 0, 0)
    for a in _SMALL_MONOMIALS:
        assert order_cmp(a, a, order) == 0
        assert order_cmp(a, one, order) >= 0
        for b in _SMALL_MONOMIALS:
            ab = order_cmp(a, b, order)
            assert ab == -order_cmp(b, a, order)
            assert (ab == 0) == (a == b)
            if ab <= 0:
                continue
            for c in _SMALL_MONOMIALS:
                assert order_cmp(monomial_mul(a, c), monomial_mul(b, c), order) == 1
                if order_cmp(b, c, order) > 0:
                    assert order_cmp(a, c, order) == 1


@pytest.mark.parametrize("field", [prime_field(), rationals()], ids=str)
@pytest.mark.parametrize("seed", range(10))
def test_format_then_parse_gives_back_the_polynomial(random_poly, field, seed):
    rng = random.Random(seed)
    ring = PolyRing(("x0", "x1", "y"), field)
    p = random_poly(rng, ring, 3, 5)
    if not field.is_prime_field:
        p = p.scale(Fraction(1, rng.randint(2, 7)))
    text = str(p)
    assert ring.parse(text) == p
    assert str(ring.parse(text)) == text


@pytest.mark.parametrize("seed", range(8))
def test_unipoly_product_is_commutative_and_associative(random_poly, seed):
    rng = random.Random(seed)
    ring = PolyRing(("a", "b", "c"))

    def draw():
        return UniPoly(ring, [random_poly(rng, ring, 1, 2) for _ in range(rng.randint(1, 3))])

    f, g, h = draw(), draw(), draw()
    assert unipoly_mul(f, g) == unipoly_mul(g, f)
    assert unipoly_mul(unipoly_mul(f, g), h) == unipoly_mul(f, unipoly_mul(g, h))
    assert f * (g + h) == f * g + f * h
