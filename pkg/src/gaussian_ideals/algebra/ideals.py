"""Ideal algebra on top of the Groebner engine."""

from __future__ import annotations

import logging
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from gaussian_ideals.algebra.groebner import (
    Ideal,
    buchberger,
    check_same_ring,
    eliminate,
)
from gaussian_ideals.algebra.poly import (
    Monomial,
    Polynomial,
    PolyRing,
    degrevlex,
    monomial_divides,
    monomials_of_degree,
)
from gaussian_ideals.errors import NotHomogeneousError, RingMismatchError, UnitIdealError

logger = logging.getLogger(__name__)


def _dedup(polys: Iterable[Polynomial]) -> list[Polynomial]:
    seen: set[Polynomial] = set()
    out = []
    for p in polys:
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def ideal_sum(*ideals: Ideal) -> Ideal:
    if not ideals:
        raise ValueError("ideal_sum needs at least one ideal")
    first = ideals[0]
    for other in ideals[1:]:
        check_same_ring(first, other)
    return Ideal(first.ring, _dedup(g for I in ideals for g in I.generators))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    check_same_ring(I, J)
    return Ideal(I.ring, _dedup(a * b.to_ring(I.ring) for a in I.generators for b in J.generators))


def ideal_power(I: Ideal, e: int) -> Ideal:
    if e < 0:
        raise ValueError("ideal powers need a non-negative exponent")
    if e == 0:
        return Ideal(I.ring, [I.ring.one()])
    products = []
    for combo in combinations_with_replacement(I.generators, e):
        acc = combo[0]
        for g in combo[1:]:
            acc = acc * g
        products.append(acc)
    return Ideal(I.ring, _dedup(products))


def _fresh_name(ring: PolyRing, base: str) -> str:
    name = base
    while name in ring.variables:
        name += "_"
    return name


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I meet J by eliminating u from u*I + (1 - u)*J."""
    check_same_ring(I, J)
    ring = I.ring
    u = _fresh_name(ring, "u")
    big = PolyRing((u, *ring.variables), ring.field, degrevlex())
    t = big.var(u)
    gens = [t * g.to_ring(big) for g in I.generators]
    gens += [(big.one() - t) * g.to_ring(big) for g in J.generators]
    logger.debug("intersecting ideals with %d and %d generators", len(I), len(J))
    result = eliminate(Ideal(big, gens), 1)
    return Ideal(ring, [g.to_ring(ring) for g in result.generators])


def ideal_intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise ValueError("nothing to intersect")
    acc = ideals[0]
    for other in ideals[1:]:
        acc = ideal_intersect(acc, other)
    return acc


def kernel_of_monomial_map(targets: Sequence[Polynomial], source_names: Sequence[str]) -> Ideal:
    """Relations among ``targets``: the kernel of S_i -> target_i, as an ideal of k[S]."""
    if len(targets) != len(source_names):
        raise ValueError("one source variable per target is required")
    if not targets:
        raise ValueError("kernel of an empty map")
    ring = targets[0].ring
    for t in targets:
        if t.ring != ring:
            raise RingMismatchError("targets must share one ring")
        if not t:
            raise ValueError("targets must be nonzero")
    clash = set(ring.variables) & set(source_names)
    if clash:
        raise RingMismatchError(f"source names collide with ring variables: {sorted(clash)}")
    big = PolyRing((*ring.variables, *source_names), ring.field, degrevlex())
    gens = [big.var(s) - t.to_ring(big) for s, t in zip(source_names, targets)]
    logger.debug("kernel of a map with %d targets into %d variables", len(targets), ring.arity)
    return eliminate(Ideal(big, gens), ring.arity)


def minimal_monomials(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal elements, in first-seen order."""
    out: list[Monomial] = []
    for m in sorted(set(monomials), key=lambda v: (sum(v), v)):
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def monomial_ideal_dimension(arity: int, generators: Sequence[Monomial]) -> int:
    """Largest set of variables containing the support of no generator."""
    masks = [sum(1 << i for i, e in enumerate(m) if e) for m in generators]
    if any(mask == 0 for mask in masks):
        raise UnitIdealError("the unit ideal has no dimension")
    for size in range(arity, -1, -1):
        for subset in combinations(range(arity), size):
            chosen = sum(1 << i for i in subset)
            if all(mask & ~chosen for mask in masks):
                return size
    return 0


def krull_dimension(I: Ideal) -> int:
    G = buchberger(I)
    if G.is_unit():
        raise UnitIdealError("the unit ideal has no dimension")
    return monomial_ideal_dimension(I.ring.arity, minimal_monomials(G.leading_monomials()))


def codimension(I: Ideal) -> int:
    return I.ring.arity - krull_dimension(I)


def hilbert_function(I: Ideal, max_degree: int) -> list[int]:
    """Number of standard monomials of each degree 0..max_degree."""
    for g in I.generators:
        if not g.is_homogeneous():
            raise NotHomogeneousError(f"generator {g} is not homogeneous")
    graded = I if I.ring.order == degrevlex() else I.with_order(degrevlex())
    lms = minimal_monomials(buchberger(graded).leading_monomials())
    values = []
    for d in range(max_degree + 1):
        values.append(
            sum(
                1
                for m in monomials_of_degree(I.ring.arity, d)
                if not any(monomial_divides(g, m) for g in lms)
            )
        )
    return values
