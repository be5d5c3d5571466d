"""Free algebras given by structure constants, and contents of their elements.

An algebra of rank r has basis e_0..e_(r-1) and a table with
e_i·e_j = Σ_k c_ijk e_k. Its base ring carries generic coefficient
variables u_i and v_i so that probes work with generic elements.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Sequence

from gaussian_ideals.algebra.field import FieldSpec, prime_field
from gaussian_ideals.algebra.groebner import Ideal, buchberger, ideal_equal
from gaussian_ideals.algebra.ideals import ideal_product
from gaussian_ideals.algebra.poly import Polynomial, PolyRing, UniPoly
from gaussian_ideals.errors import NotAReductionError, RingMismatchError
from gaussian_ideals.verify import claims as C
from gaussian_ideals.verify.gauss import content, reduction_number
from gaussian_ideals.verify.report import Claim

logger = logging.getLogger(__name__)

Element = tuple[Polynomial, ...]

TRUNCATED = "truncated"
CAPPED = "capped"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class StructureAlgebra:
    kind: str
    rank: int
    labels: tuple[str, ...]
    ring: PolyRing
    table: tuple[tuple[Element, ...], ...]

    def __post_init__(self) -> None:
        r = self.rank
        if len(self.labels) != r or len(self.table) != r:
            raise ValueError(f"table of a rank {r} algebra must be {r}x{r}x{r}")
        for row in self.table:
            if len(row) != r or any(len(entry) != r for entry in row):
                raise ValueError(f"table of a rank {r} algebra must be {r}x{r}x{r}")

    def basis_element(self, i: int) -> Element:
        return tuple(self.ring.one() if k == i else self.ring.zero() for k in range(self.rank))

    def generic_element(self, prefix: str) -> Element:
        return tuple(self.ring.var(f"{prefix}{i}") for i in range(self.rank))


def _build(kind: str, rank: int, field: FieldSpec | None, product: Callable[[int, int], int | None]) -> StructureAlgebra:
    if rank < 1:
        raise ValueError("rank must be at least 1")
    names = tuple(f"{prefix}{i}" for prefix in ("u", "v") for i in range(rank))
    ring = PolyRing(names, field or prime_field())
    zero, one = ring.zero(), ring.one()
    table = []
    for i in range(rank):
        row = []
        for j in range(rank):
            k = product(i, j)
            row.append(tuple(one if k == target else zero for target in range(rank)))
        table.append(tuple(row))
    labels = tuple("1" if i == 0 else ("t" if i == 1 else f"t^{i}") for i in range(rank))
    return StructureAlgebra(kind, rank, labels, ring, tuple(table))


def truncated_algebra(rank: int, field: FieldSpec | None = None) -> StructureAlgebra:
    """k[t]/(t^rank): t^i t^j = t^(i+j), zero past t^(rank-1)."""
    return _build(TRUNCATED, rank, field, lambda i, j: i + j if i + j < rank else None)


def capped_algebra(rank: int, field: FieldSpec | None = None) -> StructureAlgebra:
    """t^i t^j = t^min(i+j, rank-1); basis indexed by a well-ordered monoid."""
    return _build(CAPPED, rank, field, lambda i, j: min(i + j, rank - 1))


def cyclic_algebra(rank: int, field: FieldSpec | None = None) -> StructureAlgebra:
    """k[t]/(t^rank - 1)."""
    return _build(CYCLIC, rank, field, lambda i, j: (i + j) % rank)


ALGEBRAS = {TRUNCATED: truncated_algebra, CAPPED: capped_algebra, CYCLIC: cyclic_algebra}


def make_algebra(kind: str, rank: int, field: FieldSpec | None = None) -> StructureAlgebra:
    try:
        builder = ALGEBRAS[kind]
    except KeyError:
        raise ValueError(f"unknown algebra kind {kind!r}; expected one of {sorted(ALGEBRAS)}") from None
    return builder(rank, field)


def _check_element(A: StructureAlgebra, u: Sequence[Polynomial]) -> None:
    if len(u) != A.rank:
        raise ValueError(f"element has {len(u)} coordinates, algebra has rank {A.rank}")
    for c in u:
        if c.ring != A.ring:
            raise RingMismatchError("element coordinates must live in the algebra's base ring")


def struct_multiply(A: StructureAlgebra, u: Sequence[Polynomial], v: Sequence[Polynomial]) -> Element:
    _check_element(A, u)
    _check_element(A, v)
    out = [A.ring.zero() for _ in range(A.rank)]
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(A.table[i][j]):
                if c:
                    out[k] = out[k] + ab * c
    return tuple(out)


def is_associative(A: StructureAlgebra) -> bool:
    basis = [A.basis_element(i) for i in range(A.rank)]
    for a in basis:
        for b in basis:
            ab = struct_multiply(A, a, b)
            for c in basis:
                if struct_multiply(A, ab, c) != struct_multiply(A, a, struct_multiply(A, b, c)):
                    return False
    return True


def struct_content(A: StructureAlgebra, u: Sequence[Polynomial]) -> Ideal:
    _check_element(A, u)
    return Ideal(A.ring, u)


def struct_reduction_probe(A: StructureAlgebra, bound: int) -> int | None:
    """Least r <= bound with c(uv) a reduction of c(u)c(v) for generic u, v; None otherwise."""
    u, v = A.generic_element("u"), A.generic_element("v")
    J = struct_content(A, struct_multiply(A, u, v))
    I = ideal_product(struct_content(A, u), struct_content(A, v))
    try:
        return reduction_number(J, I, bound)
    except NotAReductionError:
        logger.info("content of the product is not inside c(u)c(v) for %s rank %d", A.kind, A.rank)
        return None


def gauss_lemma_probe(A: StructureAlgebra) -> bool:
    """u, v with constant coefficient 1 and generic tails: is c(uv) the unit ideal?"""
    one = A.ring.one()
    u = (one, *A.generic_element("u")[1:])
    v = (one, *A.generic_element("v")[1:])
    return buchberger(struct_content(A, struct_multiply(A, u, v))).is_unit()


def check_struct_content(A: StructureAlgebra, bound: int | None = None) -> list[Claim]:
    bound = A.rank if bound is None else bound
    logger.info("structure-constant probes for the %s algebra of rank %d", A.kind, A.rank)
    out = [Claim.check("associative", C.STRUCT_ASSOCIATIVE, is_associative(A))]
    if A.kind == TRUNCATED and A.rank >= 2:
        # degrees split so that the product never reaches past t^(rank-1)
        m = (A.rank - 1) // 2
        n = A.rank - 1 - m
        f = UniPoly.generic(A.ring, [f"u{i}" for i in range(m + 1)])
        g = UniPoly.generic(A.ring, [f"v{j}" for j in range(n + 1)])
        u = tuple(f.coefficient(i) for i in range(A.rank))
        v = tuple(g.coefficient(j) for j in range(A.rank))
        same = ideal_equal(struct_content(A, struct_multiply(A, u, v)), content(f * g))
        out.append(Claim.check("polynomial_case", C.STRUCT_CONSISTENT, same, m=m, n=n))
    r = struct_reduction_probe(A, bound)
    out.append(
        Claim.check(
            "reduction_probe",
            C.STRUCT_REDUCTION.format(bound=bound),
            r is not None,
            exploratory=True,
            r=r,
            kind=A.kind,
        )
    )
    out.append(
        Claim.check("gauss_lemma_probe", C.STRUCT_GAUSS_LEMMA, gauss_lemma_probe(A), exploratory=True)
    )
    return out
