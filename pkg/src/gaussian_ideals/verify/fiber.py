"""Special fibers of products of generic contents, presented as toric quotients k[Q]/ker."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from math import factorial

from gaussian_ideals.algebra.field import FieldSpec, prime_field
from gaussian_ideals.algebra.groebner import Ideal, buchberger, ideal_equal, is_binomial_basis
from gaussian_ideals.algebra.ideals import (
    codimension,
    hilbert_function,
    ideal_sum,
    kernel_of_monomial_map,
    krull_dimension,
)
from gaussian_ideals.algebra.matrix import generic_matrix, minors
from gaussian_ideals.algebra.poly import Polynomial, PolyRing
from gaussian_ideals.errors import NotArtinianError
from gaussian_ideals.verify import claims as C
from gaussian_ideals.verify.gauss import (
    GenericSetup,
    gaussian_pair,
    reduction_number,
    three_polynomial_reduction,
)
from gaussian_ideals.verify.report import Claim

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberPresentation:
    degrees: tuple[int, ...]
    toric: Ideal
    linear_forms: tuple[Polynomial, ...]

    @property
    def source_ring(self) -> PolyRing:
        return self.toric.ring

    def artinian_reduction(self) -> Ideal:
        return ideal_sum(self.toric, Ideal(self.source_ring, self.linear_forms))


def _fiber(degrees: tuple[int, ...], field: FieldSpec | None) -> FiberPresentation:
    if any(d < 0 for d in degrees):
        raise ValueError(f"degrees must be non-negative, got {degrees}")
    letters = "xyz"
    base = PolyRing(
        tuple(f"{letter}{i}" for letter, d in zip(letters, degrees) for i in range(d + 1)),
        field or prime_field(),
    )
    indices = list(product(*(range(d + 1) for d in degrees)))
    names = [f"Q{''.join(str(i) for i in idx)}" for idx in indices]
    targets = []
    for idx in indices:
        term = base.one()
        for letter, i in zip(letters, idx):
            term = term * base.var(f"{letter}{i}")
        targets.append(term)
    logger.info("toric kernel of %d monomials in %d variables", len(targets), base.arity)
    toric = kernel_of_monomial_map(targets, names)
    ring = toric.ring
    forms = []
    for q in range(sum(degrees) + 1):
        form = ring.zero()
        for name, idx in zip(names, indices):
            if sum(idx) == q:
                form = form + ring.var(name)
        forms.append(form)
    return FiberPresentation(tuple(degrees), toric, tuple(forms))


def segre_fiber(m: int, n: int, field: FieldSpec | None = None) -> FiberPresentation:
    """Fiber of c(f)c(g): Q_ij -> x_i y_j, linear forms ℓ_q = Σ_(i+j=q) Q_ij."""
    return _fiber((m, n), field)


def triple_fiber(m: int, n: int, p: int, field: FieldSpec | None = None) -> FiberPresentation:
    return _fiber((m, n, p), field)


def analytic_spread(F: FiberPresentation) -> int:
    return krull_dimension(F.toric)


def artinian_hilbert_function(F: FiberPresentation) -> list[int]:
    """Hilbert function of k[Q]/(toric + ℓ_q) up to degree ℓ(I) + 2; must end in zero."""
    top = len(F.linear_forms) + 2
    values = hilbert_function(F.artinian_reduction(), top)
    if values[-1]:
        raise NotArtinianError(f"Hilbert function {values} is not zero by degree {top}")
    return values


def fiber_reduction_number(F: FiberPresentation) -> int:
    values = artinian_hilbert_function(F)
    return max(d for d, v in enumerate(values) if v)


def _through_first_zero(values: list[int]) -> list[int]:
    return values[: values.index(0) + 1] if 0 in values else values


def segre_multiplicity(degrees: tuple[int, ...]) -> int:
    """Degree of the Segre embedding of P^m x P^n (x P^p)."""
    out = factorial(sum(degrees))
    for d in degrees:
        out //= factorial(d)
    return out


def check_minors_equal_kernel(m: int, n: int, field: FieldSpec | None = None) -> list[Claim]:
    if m < 1 or n < 1:
        raise ValueError("2x2 minors need both degrees at least 1")
    F = segre_fiber(m, n, field)
    ring = F.source_ring
    determinantal = Ideal(ring, minors(generic_matrix(ring, "Q", m + 1, n + 1), 2))
    height = codimension(F.toric)
    return [
        Claim.check("kernel_is_minors", C.TORIC_EQUALS_MINORS, ideal_equal(F.toric, determinantal)),
        Claim.check("height", C.TORIC_HEIGHT, height == m * n, height=height, expected=m * n),
        Claim.check("binomial", C.TORIC_BINOMIAL, is_binomial_basis(buchberger(F.toric))),
    ]


def check_noether_normalization(m: int, n: int, field: FieldSpec | None = None) -> list[Claim]:
    s = GenericSetup.build(m, n, field=field)
    ring = s.ring
    h = []
    for q in range(s.m + s.n + 1):
        form = ring.zero()
        for i in range(s.m + 1):
            if 0 <= q - i <= s.n:
                form = form + ring.var(f"x{i}") * ring.var(f"y{q - i}")
        h.append(form)
    relations = kernel_of_monomial_map(h, [f"H{q}" for q in range(len(h))])
    F = segre_fiber(s.m, s.n, s.field)
    try:
        values = artinian_hilbert_function(F)
    except NotArtinianError as exc:
        return [
            Claim.check("independent", C.NOETHER_INDEPENDENT, relations.is_zero()),
            Claim.check("finite", C.NOETHER_FINITE, False, reason=str(exc)),
        ]
    top = max(d for d, v in enumerate(values) if v)
    return [
        Claim.check("independent", C.NOETHER_INDEPENDENT, relations.is_zero()),
        Claim.check("finite", C.NOETHER_FINITE, True, hilbert_function=_through_first_zero(values)),
        Claim.check("top_degree", C.NOETHER_TOP_DEGREE, top == s.m, top_degree=top, expected=s.m),
    ]


def check_fiber_reduction(
    degrees: tuple[int, ...], field: FieldSpec | None = None, cross_check: bool = True
) -> list[Claim]:
    degs = tuple(sorted(degrees))
    if len(degs) == 2:
        F = segre_fiber(*degs, field=field)
        expected = degs[0]
    elif len(degs) == 3:
        F = triple_fiber(*degs, field=field)
        expected = degs[0] + degs[1]
    else:
        raise ValueError(f"expected two or three degrees, got {degrees}")
    spread = analytic_spread(F)
    values = artinian_hilbert_function(F)
    r = max(d for d, v in enumerate(values) if v)
    multiplicity = segre_multiplicity(degs)
    out = [
        Claim.check(
            "analytic_spread",
            C.ANALYTIC_SPREAD,
            spread == len(F.linear_forms) == sum(degs) + 1,
            spread=spread,
            linear_forms=len(F.linear_forms),
        ),
        Claim.check(
            "fiber_reduction_number",
            C.FIBER_REDUCTION.format(expected=expected),
            r == expected,
            r=r,
            hilbert_function=_through_first_zero(values),
        ),
        Claim.check(
            "hilbert_total",
            C.HILBERT_TOTAL,
            sum(values) == multiplicity,
            total=sum(values),
            multiplicity=multiplicity,
        ),
    ]
    if cross_check:
        s = GenericSetup.build(*degs, field=field)
        logger.info("cross-checking the fiber route by powers of ideals")
        if len(degs) == 3:
            route = three_polynomial_reduction(s)
            out.append(
                Claim.check(
                    "three_reduction_number",
                    C.THREE_REDUCTION_NUMBER,
                    route == expected,
                    r=route,
                    expected=expected,
                )
            )
        else:
            route = reduction_number(*gaussian_pair(s), expected + 1)
        out.append(Claim.check("cross_route", C.CROSS_ROUTE, route == r, groebner_route=route, fiber_route=r))
    return out
