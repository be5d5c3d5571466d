"""Buchberger's algorithm with Gebauer-Moeller pruning and sugar pair selection.

Working polynomials are plain ``{monomial: coefficient}`` dicts; only the
finished reduced basis is turned back into canonical ``Polynomial`` values.
"""

from __future__ import annotations

import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable, Sequence

from gaussian_ideals.algebra.field import FieldSpec, Scalar
from gaussian_ideals.algebra.poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    block_elim,
    degrevlex,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
)
from gaussian_ideals.errors import RingMismatchError
from gaussian_ideals.utils.budget import EffortBudget, active_budget

logger = logging.getLogger(__name__)

_Dict = dict[Monomial, Scalar]


@dataclass(frozen=True)
class Ideal:
    ring: PolyRing
    generators: tuple[Polynomial, ...]

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()) -> None:
        gens = []
        for g in generators:
            if g.ring.variables != ring.variables or g.ring.field != ring.field:
                raise RingMismatchError(f"generator {g} does not live in {ring.variables}")
            if g:
                gens.append(g.to_ring(ring) if g.ring != ring else g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __len__(self) -> int:
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def with_order(self, order: MonomialOrder) -> Ideal:
        ring = self.ring.with_order(order)
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: tuple[Polynomial, ...]

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial for g in self.basis]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return not normal_form(p, self)

    def dump(self) -> list[str]:
        return [str(g) for g in self.basis]


def _sub_multiple(
    target: _Dict, g: _Dict, shift: Monomial, c: Scalar, fld: FieldSpec, skip: Monomial | None
) -> None:
    """target -= c * x^shift * g, in place; ``skip`` is a monomial of g already cancelled."""
    if fld.is_prime_field:
        p = fld.modulus
        for m, a in g.items():
            if m == skip:
                continue
            mm = monomial_mul(m, shift)
            v = (target.get(mm, 0) - c * a) % p
            if v:
                target[mm] = v
            else:
                target.pop(mm, None)
    else:
        for m, a in g.items():
            if m == skip:
                continue
            mm = monomial_mul(m, shift)
            v = target.get(mm, 0) - c * a
            if v:
                target[mm] = v
            else:
                target.pop(mm, None)


def _reduce(
    p: _Dict,
    basis: Sequence[tuple[Monomial, _Dict]],
    order: MonomialOrder,
    fld: FieldSpec,
    budget: EffortBudget,
) -> _Dict:
    """Full normal form of p modulo monic polynomials with the given leading monomials."""
    key = order.key
    work = dict(p)
    remainder: _Dict = {}
    while work:
        lm = max(work, key=key)
        c = work.pop(lm)
        for glm, g in basis:
            if monomial_divides(glm, lm):
                _sub_multiple(work, g, monomial_quotient(lm, glm), c, fld, glm)
                budget.spend()
                break
        else:
            remainder[lm] = c
    return remainder


def _monic(p: _Dict, order: MonomialOrder, fld: FieldSpec) -> tuple[Monomial, _Dict]:
    lm = max(p, key=order.key)
    inv = fld.inv(p[lm])
    return lm, {m: fld.mul(c, inv) for m, c in p.items()}


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not x or not y for x, y in zip(a, b))


class _Buchberger:
    def __init__(self, ring: PolyRing, budget: EffortBudget) -> None:
        self.ring = ring
        self.order = ring.order
        self.fld = ring.field
        self.budget = budget
        self.polys: list[_Dict] = []
        self.lms: list[Monomial] = []
        self.sugar: list[int] = []
        self.active: list[int] = []
        self.pairs: list[tuple[int, int, Monomial, int]] = []
        self.unit = False
        self._logger = logging.getLogger(self.__class__.__name__)

    def _active_basis(self) -> list[tuple[Monomial, _Dict]]:
        return [(self.lms[i], self.polys[i]) for i in self.active]

    def add(self, p: _Dict, sugar: int) -> None:
        reduced = _reduce(p, self._active_basis(), self.order, self.fld, self.budget)
        if not reduced:
            return
        lm, h = _monic(reduced, self.order, self.fld)
        idx = len(self.polys)
        self.polys.append(h)
        self.lms.append(lm)
        self.sugar.append(sugar)
        if not any(lm):
            self.unit = True
            return
        self._update(idx)

    def _pair(self, i: int, j: int) -> tuple[int, int, Monomial, int]:
        lcm = monomial_lcm(self.lms[i], self.lms[j])
        deg = sum(lcm)
        sugar = max(
            self.sugar[i] + deg - sum(self.lms[i]),
            self.sugar[j] + deg - sum(self.lms[j]),
        )
        return (i, j, lcm, sugar)

    def _update(self, h: int) -> None:
        lm_h = self.lms[h]
        candidates = [(g, monomial_lcm(self.lms[g], lm_h)) for g in self.active]
        kept: list[tuple[int, Monomial]] = []
        while candidates:
            g, lcm = candidates.pop(0)
            if _coprime(self.lms[g], lm_h) or (
                not any(monomial_divides(other, lcm) for _, other in candidates)
                and not any(monomial_divides(other, lcm) for _, other in kept)
            ):
                kept.append((g, lcm))
        fresh = [self._pair(g, h) for g, _ in kept if not _coprime(self.lms[g], lm_h)]

        survivors = []
        for pair in self.pairs:
            i, j, lcm, _ = pair
            if (
                monomial_divides(lm_h, lcm)
                and monomial_lcm(self.lms[i], lm_h) != lcm
                and monomial_lcm(self.lms[j], lm_h) != lcm
            ):
                continue
            survivors.append(pair)
        self.pairs = survivors + fresh
        self.active = [g for g in self.active if not monomial_divides(lm_h, self.lms[g])] + [h]

    def _select(self) -> tuple[int, int, Monomial, int]:
        key = self.order.key
        best = min(
            range(len(self.pairs)),
            key=lambda k: (
                self.pairs[k][3],
                key(self.pairs[k][2]),
                self.pairs[k][0],
                self.pairs[k][1],
            ),
        )
        return self.pairs.pop(best)

    def _s_polynomial(self, i: int, j: int, lcm: Monomial) -> _Dict:
        s: _Dict = {}
        minus_one = self.fld.neg(self.fld.one)
        _sub_multiple(s, self.polys[i], monomial_quotient(lcm, self.lms[i]), minus_one, self.fld, None)
        _sub_multiple(s, self.polys[j], monomial_quotient(lcm, self.lms[j]), self.fld.one, self.fld, None)
        return s

    def run(self) -> None:
        rounds = 0
        while self.pairs and not self.unit:
            i, j, lcm, sugar = self._select()
            s = self._s_polynomial(i, j, lcm)
            self.budget.spend()
            if s:
                self.add(s, sugar)
            rounds += 1
            if rounds % 500 == 0:
                self._logger.debug(
                    "buchberger: %d pairs left, basis %d, %d steps",
                    len(self.pairs),
                    len(self.active),
                    self.budget.steps,
                )
        self._logger.debug("buchberger: %d pairs processed, unit=%s", rounds, self.unit)

    def reduced_basis(self) -> list[Polynomial]:
        if self.unit:
            return [self.ring.one()]
        basis = self._active_basis()
        out = []
        for k, (lm, g) in enumerate(basis):
            others = basis[:k] + basis[k + 1 :]
            tail = dict(g)
            tail.pop(lm)
            tail = _reduce(tail, others, self.order, self.fld, self.budget)
            tail[lm] = self.fld.one
            out.append(Polynomial.from_dict(self.ring, tail))
        key = self.order.key
        out.sort(key=lambda p: key(p.leading_monomial), reverse=True)
        return out


_CACHE: OrderedDict[Ideal, GroebnerBasis] = OrderedDict()
_CACHE_SIZE = 256


def buchberger(ideal: Ideal, budget: EffortBudget | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` in its ring's monomial order."""
    cached = _CACHE.get(ideal)
    if cached is not None:
        _CACHE.move_to_end(ideal)
        return cached
    budget = budget or active_budget() or EffortBudget()
    ring = ideal.ring
    engine = _Buchberger(ring, budget)
    for g in ideal.generators:
        engine.add(g.as_dict(), g.total_degree)
        if engine.unit:
            break
    engine.run()
    basis = engine.reduced_basis()
    logger.debug(
        "groebner basis of %d generators in %d variables: %d elements",
        len(ideal.generators),
        ring.arity,
        len(basis),
    )
    result = GroebnerBasis(ideal, ring.order, tuple(basis))
    _CACHE[ideal] = result
    if len(_CACHE) > _CACHE_SIZE:
        _CACHE.popitem(last=False)
    return result


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    if p.ring != G.ring:
        if p.ring.variables == G.ring.variables and p.ring.field == G.ring.field:
            raise RingMismatchError(f"order mismatch: {p.ring.order} vs {G.order}")
        raise RingMismatchError("polynomial and basis live in different rings")
    if not p:
        return p
    basis = [(g.leading_monomial, g.as_dict()) for g in G.basis]
    reduced = _reduce(p.as_dict(), basis, G.order, p.ring.field, active_budget() or EffortBudget())
    return Polynomial.from_dict(p.ring, reduced)


def check_same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring.variables != J.ring.variables or I.ring.field != J.ring.field:
        raise RingMismatchError(f"ring mismatch: {I.ring.variables} vs {J.ring.variables}")


def ideal_member(p: Polynomial, I: Ideal) -> bool:
    if p.ring.variables != I.ring.variables or p.ring.field != I.ring.field:
        raise RingMismatchError("polynomial does not live in the ideal's ring")
    return not normal_form(p.to_ring(I.ring), buchberger(I))


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J is contained in I."""
    check_same_ring(I, J)
    G = buchberger(I)
    return all(G.contains(g.to_ring(I.ring)) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    check_same_ring(I, J)
    if J.ring.order != I.ring.order:
        J = J.with_order(I.ring.order)
    return buchberger(I).basis == buchberger(J).basis


def eliminate(I: Ideal, k: int) -> Ideal:
    """Generators of I intersected with the subring in the last ``arity - k`` variables."""
    ring = I.ring
    if not 0 < k < ring.arity:
        raise ValueError(f"cannot eliminate {k} of {ring.arity} variables")
    G = buchberger(I.with_order(block_elim(k)))
    small = PolyRing(ring.variables[k:], ring.field, degrevlex())
    kept = [g for g in G.basis if not any(any(m[:k]) for m, _ in g.terms)]
    return Ideal(small, [g.to_ring(small) for g in kept])


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = monomial_lcm(f.leading_monomial, g.leading_monomial)
    fld = f.ring.field
    left = f.mul_term(monomial_quotient(lcm, f.leading_monomial), fld.inv(f.leading_coeff))
    right = g.mul_term(monomial_quotient(lcm, g.leading_monomial), fld.inv(g.leading_coeff))
    return left - right


def is_reduced_groebner_basis(G: GroebnerBasis) -> bool:
    """Monic, no term divisible by another element's leading monomial, all S-pairs reduce to 0."""
    lms = G.leading_monomials()
    for k, g in enumerate(G.basis):
        if g.leading_coeff != G.ring.field.one:
            return False
        for other, lm in enumerate(lms):
            if other != k and any(monomial_divides(lm, m) for m, _ in g.terms):
                return False
    for a in range(len(G.basis)):
        for b in range(a + 1, len(G.basis)):
            if normal_form(s_polynomial(G.basis[a], G.basis[b]), G):
                return False
    return True


def is_binomial_basis(G: GroebnerBasis) -> bool:
    return all(len(g.terms) <= 2 for g in G.basis)
