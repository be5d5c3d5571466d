"""Monomial ideals: edge ideals, joins, powers, Newton-polyhedron integral closures."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from gaussian_ideals.algebra.field import FieldSpec, prime_field
from gaussian_ideals.algebra.groebner import Ideal
from gaussian_ideals.algebra.ideals import minimal_monomials
from gaussian_ideals.algebra.poly import Monomial, PolyRing, monomial_divides, monomial_mul
from gaussian_ideals.combinat.lp import solve_feasibility
from gaussian_ideals.errors import BudgetExceededError, ParseError, RingMismatchError
from gaussian_ideals.utils.budget import active_budget

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 2_000_000


def _is_antichain(gens: Sequence[Monomial]) -> bool:
    return not any(
        i != j and monomial_divides(a, b) for i, a in enumerate(gens) for j, b in enumerate(gens)
    )


@dataclass(frozen=True)
class MonomialIdeal:
    ring: PolyRing
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if len(g) != self.ring.arity:
                raise RingMismatchError(f"exponent vector {g} does not fit {self.ring.variables}")
        assert _is_antichain(self.gens), "monomial ideal generators must be minimal"

    @classmethod
    def from_exponents(cls, ring: PolyRing, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
        return cls(ring, tuple(minimal_monomials(tuple(v) for v in vectors)))

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> MonomialIdeal:
        vectors = []
        for g in ideal.generators:
            if not g.is_monomial():
                raise ValueError(f"{g} is not a monomial")
            vectors.append(g.leading_monomial)
        return cls.from_exponents(ideal.ring, vectors)

    @property
    def arity(self) -> int:
        return self.ring.arity

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, a: Sequence[int]) -> bool:
        a = tuple(a)
        return any(monomial_divides(g, a) for g in self.gens)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def squarefree_degree(self) -> int | None:
        """Common degree t of the generators when all are square-free of degree t."""
        degrees = {sum(g) for g in self.gens}
        if len(degrees) != 1 or any(e > 1 for g in self.gens for e in g):
            return None
        return degrees.pop()

    def to_ideal(self) -> Ideal:
        return Ideal(self.ring, [self.ring.monomial(g) for g in self.gens])

    def __str__(self) -> str:
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self.gens) + ")"


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range 0..{self.vertex_count - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(vertex_count, frozenset((int(u), int(v)) for u, v in edges))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 2:
        raise ValueError("a path needs at least 2 vertices")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    if k < 2:
        raise ValueError("a complete graph needs at least 2 vertices")
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def empty_graph(k: int) -> Graph:
    """k isolated vertices; its edge ideal is zero."""
    if k < 1:
        raise ValueError("a graph needs at least 1 vertex")
    return Graph(k, frozenset())


GRAPH_SHAPES = {
    "cycle": cycle_graph,
    "path": path_graph,
    "complete": complete_graph,
    "empty": empty_graph,
}


def graph_from_shape(text: str) -> Graph:
    """Built-in shapes such as ``cycle:4``."""
    name, _, size = text.partition(":")
    builder = GRAPH_SHAPES.get(name.strip().lower())
    if builder is None or not size.strip().isdigit():
        raise ParseError(f"graph shape must be one of {sorted(GRAPH_SHAPES)} followed by :<k>, got {text!r}")
    return builder(int(size))


def edge_ideal(graph: Graph, prefix: str = "x", field: FieldSpec | None = None) -> MonomialIdeal:
    ring = PolyRing(tuple(f"{prefix}{i}" for i in range(graph.vertex_count)), field or prime_field())
    vectors = []
    for u, v in sorted(graph.edges):
        exps = [0] * graph.vertex_count
        exps[u] = exps[v] = 1
        vectors.append(exps)
    return MonomialIdeal.from_exponents(ring, vectors)


def product_ideal(m: int, n: int, p: int, field: FieldSpec | None = None) -> MonomialIdeal:
    """All cubics x_i y_j z_k in k[x0..xm, y0..yn, z0..zp]."""
    if min(m, n, p) < 0:
        raise ValueError("degrees must be non-negative")
    names = (
        [f"x{i}" for i in range(m + 1)]
        + [f"y{j}" for j in range(n + 1)]
        + [f"z{k}" for k in range(p + 1)]
    )
    ring = PolyRing(tuple(names), field or prime_field())
    vectors = []
    for i, j, k in product(range(m + 1), range(n + 1), range(p + 1)):
        exps = [0] * ring.arity
        exps[i] = exps[m + 1 + j] = exps[m + n + 2 + k] = 1
        vectors.append(exps)
    return MonomialIdeal.from_exponents(ring, vectors)


def join(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I + J + (X)(Y) over the disjoint union of the two variable sets."""
    shared = set(I.ring.variables) & set(J.ring.variables)
    if shared:
        raise RingMismatchError(f"join needs disjoint variable sets, both use {sorted(shared)}")
    if I.ring.field != J.ring.field:
        raise RingMismatchError("join needs a common field")
    ring = PolyRing((*I.ring.variables, *J.ring.variables), I.ring.field)
    left, right = I.arity, J.arity
    vectors = [g + (0,) * right for g in I.gens]
    vectors += [(0,) * left + g for g in J.gens]
    for i in range(left):
        for j in range(right):
            exps = [0] * (left + right)
            exps[i] = exps[left + j] = 1
            vectors.append(exps)
    return MonomialIdeal.from_exponents(ring, vectors)


def monomial_power(I: MonomialIdeal, q: int) -> MonomialIdeal:
    if q < 1:
        raise ValueError("powers start at q = 1")
    current = list(I.gens)
    for _ in range(q - 1):
        current = minimal_monomials(monomial_mul(a, b) for a in current for b in I.gens)
    return MonomialIdeal(I.ring, tuple(current))


@dataclass(frozen=True)
class _Cut:
    weights: tuple[Fraction, ...]
    threshold: Fraction

    def rejects(self, a: Sequence[int], q: int) -> bool:
        return sum((w * x for w, x in zip(self.weights, a) if w), Fraction(0)) < q * self.threshold


class NewtonPolyhedron:
    """conv(generator exponents) + nonnegative orthant; q-scaled membership by exact LP."""

    def __init__(self, generators: Sequence[Sequence[int]], arity: int) -> None:
        if not generators:
            raise ValueError("a Newton polyhedron needs at least one generator")
        gens = tuple(tuple(int(e) for e in g) for g in generators)
        for g in gens:
            if len(g) != arity:
                raise RingMismatchError(f"generator {g} does not have arity {arity}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        self.generators = gens
        self.arity = arity
        # every point of the polyhedron has degree at least the least generator degree
        self._cuts: list[_Cut] = [
            _Cut((Fraction(1),) * arity, Fraction(min(sum(g) for g in gens)))
        ]
        self.lp_calls = 0

    @classmethod
    def of(cls, I: MonomialIdeal) -> NewtonPolyhedron:
        return cls(I.gens, I.arity)

    def certificate(self, a: Sequence[int], q: int) -> tuple[Fraction, ...] | None:
        """Weights lambda >= 0 summing to q with sum(lambda_i v_i) <= a, or None."""
        if len(a) != self.arity:
            raise RingMismatchError(f"point {tuple(a)} does not have arity {self.arity}")
        if self.rejects(a, q):
            return None
        r = len(self.generators)
        A = [[1] * r + [0] * self.arity]
        for c in range(self.arity):
            A.append([g[c] for g in self.generators] + [int(k == c) for k in range(self.arity)])
        b = [q, *a]
        self.lp_calls += 1
        result = solve_feasibility(A, b)
        if result.feasible:
            return result.solution[:r]
        self._remember(result.farkas, a, q)
        return None

    def rejects(self, a: Sequence[int], q: int) -> bool:
        """True when a cached separating weight already excludes ``a`` from qP."""
        return any(cut.rejects(a, q) for cut in self._cuts)

    def contains(self, a: Sequence[int], q: int) -> bool:
        return self.certificate(a, q) is not None

    def _remember(self, farkas: tuple[Fraction, ...] | None, a: Sequence[int], q: int) -> None:
        if farkas is None:
            return
        weights = tuple(farkas[1:])
        if any(w < 0 for w in weights):
            return
        threshold = min(sum((w * x for w, x in zip(weights, g)), Fraction(0)) for g in self.generators)
        cut = _Cut(weights, threshold)
        if cut.rejects(a, q):
            self._cuts.append(cut)


def np_member(a: Sequence[int], q: int, P: NewtonPolyhedron) -> bool:
    if q < 1:
        raise ValueError("q must be at least 1")
    return P.contains(a, q)


def newton_certificate(a: Sequence[int], q: int, P: NewtonPolyhedron) -> tuple[Fraction, ...] | None:
    if q < 1:
        raise ValueError("q must be at least 1")
    return P.certificate(a, q)


def integral_closure_power(
    I: MonomialIdeal, q: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> MonomialIdeal:
    """Minimal generators of the integral closure of I^q."""
    if q < 1:
        raise ValueError("q must be at least 1")
    if I.is_zero():
        return I
    power = monomial_power(I, q)
    if any(not any(g) for g in I.gens):
        return power
    polyhedron = NewtonPolyhedron.of(I)
    n = I.arity
    box = [q * max(g[c] for g in I.gens) for c in range(n)]
    # a minimal generator sits within distance 1 of qP in every coordinate it uses
    degree_cap = q * I.max_degree() + n - 1
    budget = active_budget()

    # walk the points outside the closure; their upper neighbours inside it are the candidates
    origin = (0,) * n
    visited = {origin}
    frontier = [origin]
    members: list[Monomial] = []
    while frontier:
        a = frontier.pop()
        if sum(a) >= degree_cap:
            continue
        for c in range(n):
            if a[c] >= box[c]:
                continue
            b = a[:c] + (a[c] + 1,) + a[c + 1 :]
            if b in visited:
                continue
            visited.add(b)
            if len(visited) > limit:
                raise BudgetExceededError("lattice points", limit)
            if budget is not None and len(visited) % 256 == 0:
                budget.check_clock()
            if not polyhedron.rejects(b, q) and (power.contains(b) or polyhedron.contains(b, q)):
                members.append(b)
            else:
                frontier.append(b)
    logger.debug(
        "closure of power %d: %d points visited, %d LP calls", q, len(visited), polyhedron.lp_calls
    )
    return MonomialIdeal.from_exponents(I.ring, [*members, *power.gens])


@dataclass(frozen=True)
class NormalityVerdict:
    normal: bool
    checked_up_to: int
    failed_at: int | None = None
    witness: Monomial | None = None


def is_normal_up_to(
    I: MonomialIdeal, Q: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> NormalityVerdict:
    if Q < 1:
        raise ValueError("Q must be at least 1")
    for q in range(1, Q + 1):
        closure = integral_closure_power(I, q, limit)
        power = monomial_power(I, q)
        logger.info("power %d: %d generators, closure %d", q, len(power.gens), len(closure.gens))
        if set(closure.gens) != set(power.gens):
            witness = next(g for g in closure.gens if not power.contains(g))
            return NormalityVerdict(False, q, failed_at=q, witness=witness)
    return NormalityVerdict(True, Q)


class IcVerdict(str, enum.Enum):
    MEMBER = "member"
    UNKNOWN = "unknown"


def brute_force_ic_member(a: Sequence[int], q: int, I: MonomialIdeal, w_max: int) -> IcVerdict:
    """Search w <= w_max with w*a in I^(w*q)."""
    if w_max < 1:
        raise ValueError("w_max must be at least 1")
    gens = I.gens
    if not gens:
        return IcVerdict.UNKNOWN
    least = min(sum(g) for g in gens)

    @lru_cache(maxsize=None)
    def in_power(point: Monomial, k: int) -> bool:
        if k == 0:
            return True
        if sum(point) < k * least:
            return False
        for g in gens:
            if monomial_divides(g, point) and in_power(
                tuple(x - y for x, y in zip(point, g)), k - 1
            ):
                return True
        return False

    for w in range(1, w_max + 1):
        if in_power(tuple(w * x for x in a), w * q):
            return IcVerdict.MEMBER
    return IcVerdict.UNKNOWN
