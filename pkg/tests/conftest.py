from __future__ import annotations

import pytest

from gaussian_ideals.algebra.field import prime_field, rationals
from gaussian_ideals.algebra.poly import PolyRing
from gaussian_ideals.verify.gauss import GenericSetup


@pytest.fixture
def ring_xy() -> PolyRing:
    return PolyRing(("x", "y"))


@pytest.fixture
def ring_xyz() -> PolyRing:
    return PolyRing(("x", "y", "z"))


@pytest.fixture
def ring_xyz_q() -> PolyRing:
    return PolyRing(("x", "y", "z"), rationals())


@pytest.fixture
def setup11() -> GenericSetup:
    return GenericSetup.build(1, 1)


@pytest.fixture
def setup12() -> GenericSetup:
    return GenericSetup.build(1, 2)


@pytest.fixture
def gf7():
    return prime_field(7)


def _random_poly(rng, ring, degree, terms, homogeneous=False):
    """Up to ``terms`` terms of degree <= ``degree`` (exactly ``degree`` when homogeneous)."""
    data = {}
    for _ in range(terms):
        d = degree if homogeneous else rng.randint(0, degree)
        exps = [0] * ring.arity
        for _ in range(d):
            exps[rng.randrange(ring.arity)] += 1
        data[tuple(exps)] = ring.field.coerce(rng.choice([-1, 1]) * rng.randint(1, 5))
    return ring.from_dict(data)


@pytest.fixture
def random_poly():
    return _random_poly
