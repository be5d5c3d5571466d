"""Contents of generic polynomials and the ideal identities built from them."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from gaussian_ideals.algebra.field import FieldSpec, prime_field
from gaussian_ideals.algebra.groebner import Ideal, ideal_contains, ideal_equal
from gaussian_ideals.algebra.ideals import (
    codimension,
    ideal_intersect,
    ideal_intersect_all,
    ideal_power,
    ideal_product,
    ideal_sum,
)
from gaussian_ideals.algebra.matrix import minors
from gaussian_ideals.algebra.poly import Polynomial, PolyRing, UniPoly
from gaussian_ideals.errors import NotAReductionError
from gaussian_ideals.verify import claims as C
from gaussian_ideals.verify.report import Claim

logger = logging.getLogger(__name__)

_LETTERS = "xyz"


@dataclass(frozen=True)
class GenericSetup:
    """Generic polynomials f, g (and h) whose coefficients are distinct ring variables."""

    degrees: tuple[int, ...]
    field: FieldSpec
    ring: PolyRing
    polys: tuple[UniPoly, ...]

    @classmethod
    def build(cls, *degrees: int, field: FieldSpec | None = None) -> GenericSetup:
        if len(degrees) not in (2, 3):
            raise ValueError(f"expected two or three degrees, got {degrees}")
        if any(d < 0 for d in degrees):
            raise ValueError(f"degrees must be non-negative, got {degrees}")
        degs = tuple(sorted(int(d) for d in degrees))
        blocks = [[f"{letter}{i}" for i in range(d + 1)] for letter, d in zip(_LETTERS, degs)]
        ring = PolyRing(tuple(name for block in blocks for name in block), field or prime_field())
        polys = tuple(UniPoly.generic(ring, block) for block in blocks)
        return cls(degs, ring.field, ring, polys)

    @property
    def m(self) -> int:
        return self.degrees[0]

    @property
    def n(self) -> int:
        return self.degrees[1]

    @property
    def p(self) -> int:
        if len(self.degrees) < 3:
            raise AttributeError("two-polynomial setup has no third degree")
        return self.degrees[2]

    @property
    def f(self) -> UniPoly:
        return self.polys[0]

    @property
    def g(self) -> UniPoly:
        return self.polys[1]

    @property
    def h(self) -> UniPoly:
        if len(self.polys) < 3:
            raise AttributeError("two-polynomial setup has no h")
        return self.polys[2]

    def require(self, count: int) -> None:
        if len(self.polys) != count:
            raise ValueError(f"this check needs a {count}-polynomial setup, got degrees {self.degrees}")

    def describe(self) -> dict:
        names = ("m", "n", "p")
        return {**dict(zip(names, self.degrees)), "field": str(self.field)}


def content(u: UniPoly) -> Ideal:
    return Ideal(u.ring, u.coeffs)


def _pair_component(a: UniPoly, b: UniPoly) -> Ideal:
    """c(ab) + c(a)^(deg b + 1) + c(b)^(deg a + 1)."""
    return ideal_sum(
        content(a * b),
        ideal_power(content(a), b.degree + 1),
        ideal_power(content(b), a.degree + 1),
    )


def L2(s: GenericSetup) -> Ideal:
    s.require(2)
    return _pair_component(s.f, s.g)


def L3(s: GenericSetup) -> Ideal:
    s.require(3)
    f, g, h = s.polys
    m, n, p = s.degrees
    return ideal_sum(
        content(f * g * h),
        ideal_power(content(f * g), p + 1),
        ideal_power(content(f * h), n + 1),
        ideal_power(content(g * h), m + 1),
        ideal_power(content(f), n + p + 1),
        ideal_power(content(g), m + p + 1),
        ideal_power(content(h), m + n + 1),
    )


def dedekind_mertens_holds(s: GenericSetup, exponent: int) -> bool:
    """c(fg)·c(g)^e = c(f)·c(g)^(e+1)."""
    cf, cg, cfg = content(s.f), content(s.g), content(s.f * s.g)
    left = ideal_product(cfg, ideal_power(cg, exponent))
    right = ideal_product(cf, ideal_power(cg, exponent + 1))
    return ideal_equal(left, right)


def check_dedekind_mertens(s: GenericSetup) -> list[Claim]:
    s.require(2)
    m = s.m
    cf, cg, cfg = content(s.f), content(s.g), content(s.f * s.g)
    I = ideal_product(cf, cg)
    logger.info("Dedekind-Mertens for degrees %s over %s", s.degrees, s.field)
    out = [Claim.check("containment", C.GAUSSIAN_CONTAINMENT, ideal_contains(I, cfg))]
    out.append(Claim.check("dedekind_mertens", C.DEDEKIND_MERTENS, dedekind_mertens_holds(s, m)))
    decayed = ideal_equal(
        ideal_product(cfg, ideal_power(I, m)), ideal_product(I, ideal_power(I, m))
    )
    out.append(Claim.check("decayed_form", C.DEDEKIND_MERTENS_DECAYED, decayed))
    if m >= 1:
        lowered = dedekind_mertens_holds(s, m - 1)
        out.append(Claim.check("exponent_sharp", C.DEDEKIND_MERTENS_LOWERED, not lowered))
    return out


def is_reduction(J: Ideal, I: Ideal, r: int) -> bool:
    """I^(r+1) = J·I^r."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if not ideal_contains(I, J):
        raise NotAReductionError("J is not contained in I")
    return ideal_equal(ideal_power(I, r + 1), ideal_product(J, ideal_power(I, r)))


def reduction_number(J: Ideal, I: Ideal, r_max: int, check_monotone: bool = False) -> int | None:
    """Least r <= r_max with I^(r+1) = J·I^r, or None when r_max is too small."""
    if r_max < 0:
        raise ValueError("r_max must be non-negative")
    for r in range(r_max + 1):
        logger.info("testing reduction at r = %d", r)
        if is_reduction(J, I, r):
            if check_monotone and r < r_max:
                assert is_reduction(J, I, r + 1), f"reduction at r = {r} but not at r = {r + 1}"
            return r
    return None


def gaussian_pair(s: GenericSetup) -> tuple[Ideal, Ideal]:
    """(c(fg), c(f)c(g)), or the three-polynomial analogue."""
    product = s.polys[0]
    I = content(s.polys[0])
    for u in s.polys[1:]:
        product = product * u
        I = ideal_product(I, content(u))
    return content(product), I


def three_polynomial_reduction(s: GenericSetup, r_max: int | None = None) -> int | None:
    s.require(3)
    J, I = gaussian_pair(s)
    return reduction_number(J, I, s.m + s.n + 1 if r_max is None else r_max)


def check_sharpness(s: GenericSetup) -> list[Claim]:
    s.require(2)
    m = s.m
    J, I = gaussian_pair(s)
    logger.info("reduction number of c(fg) in c(f)c(g) for degrees %s", s.degrees)
    at_m = is_reduction(J, I, m)
    before = m > 0 and is_reduction(J, I, m - 1)
    r = m if at_m and not before else reduction_number(J, I, m + 1)
    bound = min(s.m, s.n)
    return [
        Claim.check("reduction_at_m", C.REDUCTION_AT_M, at_m, r=m),
        Claim.check("not_before_m", C.REDUCTION_NOT_BEFORE_M, not before, r=m - 1),
        Claim.check("reduction_number", C.REDUCTION_NUMBER, r == m, r=r, expected=m),
        Claim.check("reduction_bound", C.REDUCTION_BOUND, r is not None and r <= bound, bound=bound),
    ]


def _decomposition2_holds(a: UniPoly, b: UniPoly) -> bool:
    intersection = ideal_intersect_all([content(a), content(b), _pair_component(a, b)])
    return ideal_equal(intersection, content(a * b))


def check_primary_decomposition2(s: GenericSetup) -> list[Claim]:
    s.require(2)
    m, n = s.m, s.n
    logger.info("primary decomposition of c(fg) for degrees %s", s.degrees)
    cf, cg, cfg = content(s.f), content(s.g), content(s.f * s.g)
    absorbed = ideal_sum(cfg, ideal_intersect(cf, ideal_power(cg, m + 1)))
    codim = codimension(L2(s))
    return [
        Claim.check("decomposition", C.PRIMARY_DECOMPOSITION2, _decomposition2_holds(s.f, s.g)),
        Claim.check("absorption", C.ABSORPTION2, ideal_equal(absorbed, cfg)),
        Claim.check("codimension", C.L2_CODIMENSION, codim == m + n + 2, codim=codim, expected=m + n + 2),
    ]


def decomposition3_components(s: GenericSetup) -> list[Ideal]:
    """c(f), c(g), c(h), L(f,g), L(f,h), L(g,h), L(f,g,h)."""
    s.require(3)
    f, g, h = s.polys
    return [
        content(f),
        content(g),
        content(h),
        _pair_component(f, g),
        _pair_component(f, h),
        _pair_component(g, h),
        L3(s),
    ]


def check_primary_decomposition3(s: GenericSetup) -> list[Claim]:
    s.require(3)
    f, g, h = s.polys
    logger.info("seven-factor decomposition of c(fgh) for degrees %s", s.degrees)
    holds = ideal_equal(ideal_intersect_all(decomposition3_components(s)), content(f * g * h))
    return [Claim.check("decomposition", C.PRIMARY_DECOMPOSITION3, holds)]


def check_decomposition3_chain(s: GenericSetup) -> list[Claim]:
    """The smaller identities the seven-factor decomposition is assembled from."""
    s.require(3)
    f, g, h = s.polys
    m, n, p = s.degrees
    out = []
    for label, (a, b) in {"fg": (f, g), "fh": (f, h), "gh": (g, h)}.items():
        logger.info("pairwise decomposition for %s", label)
        out.append(
            Claim.check(
                f"pairwise_{label}",
                C.PAIRWISE_DECOMPOSITION.format(pair=label),
                _decomposition2_holds(a, b),
            )
        )
    cfgh = content(f * g * h)
    absorbed = ideal_sum(
        cfgh,
        ideal_intersect(content(h), ideal_power(content(f * g), p + 1)),
        ideal_intersect(content(g), ideal_power(content(f * h), n + 1)),
        ideal_intersect(content(f), ideal_power(content(g * h), m + 1)),
    )
    out.append(Claim.check("absorption", C.ABSORPTION3, ideal_equal(absorbed, cfgh)))
    return out


@dataclass(frozen=True)
class HUData:
    x_sequence: tuple[Polynomial, ...]
    phi: tuple[tuple[Polynomial, ...], ...]

    @classmethod
    def from_setup(cls, s: GenericSetup) -> HUData:
        """Row i of phi holds the coefficients of g shifted i places to the right."""
        s.require(2)
        m, n = s.m, s.n
        zero = s.ring.zero()
        rows = []
        for i in range(m + 1):
            row = [zero] * (m + n + 1)
            for j, y in enumerate(s.g.coeffs):
                row[i + j] = y
            rows.append(tuple(row))
        return cls(s.f.coeffs, tuple(rows))

    def product_entries(self) -> list[Polynomial]:
        cols = len(self.phi[0])
        out = []
        for k in range(cols):
            acc = self.x_sequence[0].ring.zero()
            for x, row in zip(self.x_sequence, self.phi):
                if row[k]:
                    acc = acc + x * row[k]
            out.append(acc)
        return out


def hu_check(s: GenericSetup) -> list[Claim]:
    s.require(2)
    m, n = s.m, s.n
    data = HUData.from_setup(s)
    ring = s.ring
    rows, cols = len(data.phi), len(data.phi[0])
    logger.info("specialization identities for a %dx%d band matrix", rows, cols)
    product = Ideal(ring, data.product_entries())
    power = ideal_power(Ideal(ring, data.x_sequence), cols - rows + 1)
    max_minors = Ideal(ring, minors(data.phi, rows))
    return [
        Claim.check("x_times_phi", C.HU_PRODUCT, ideal_equal(product, content(s.f * s.g))),
        Claim.check("x_power", C.HU_POWER, ideal_equal(power, ideal_power(content(s.f), n + 1))),
        Claim.check("max_minors", C.HU_MINORS, ideal_equal(max_minors, ideal_power(content(s.g), m + 1))),
    ]
