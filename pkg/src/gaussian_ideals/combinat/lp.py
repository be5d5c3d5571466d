"""Exact LP feasibility over the rationals: phase-one simplex with Bland's rule.

Decides whether ``A x = b, x >= 0`` has a solution. A feasible answer carries
a solution; an infeasible one carries a Farkas vector ``y`` with
``y A >= 0`` and ``y b < 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None


class SimplexTableau:
    """Phase-one tableau with one artificial column per row."""

    def __init__(self, A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> None:
        self.m = len(A)
        self.n = len(A[0]) if self.m else 0
        rows = []
        rhs = []
        for i in range(self.m):
            row = [Fraction(v) for v in A[i]]
            value = Fraction(b[i])
            if value < 0:
                row = [-v for v in row]
                value = -value
            rows.append(row + [Fraction(int(k == i)) for k in range(self.m)])
            rhs.append(value)
        self.flipped = [Fraction(b[i]) < 0 for i in range(self.m)]
        self.A = rows
        self.b = rhs
        width = self.n + self.m
        # reduced costs of max(-sum(artificials)) relative to the artificial basis
        self.c = [sum((rows[i][j] for i in range(self.m)), Fraction(0)) for j in range(self.n)]
        self.c += [Fraction(0)] * self.m
        self.basis = [self.n + i for i in range(self.m)]
        self.width = width

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        row = [v / piv for v in self.A[i]]
        self.A[i] = row
        self.b[i] /= piv
        for k in range(self.m):
            if k != i and self.A[k][j]:
                f = self.A[k][j]
                self.A[k] = [a - f * r for a, r in zip(self.A[k], row)]
                self.b[k] -= f * self.b[i]
        f = self.c[j]
        if f:
            self.c = [a - f * r for a, r in zip(self.c, row)]
        self.basis[i] = j

    def bland_step(self) -> bool:
        """One pivot; False once optimal. Phase one is bounded below by zero."""
        entering = next((j for j in range(self.width) if self.c[j] > 0), None)
        if entering is None:
            return False
        best = None
        for i in range(self.m):
            a = self.A[i][entering]
            if a > 0:
                candidate = (self.b[i] / a, self.basis[i], i)
                if best is None or candidate < best:
                    best = candidate
        assert best is not None, "phase one cannot be unbounded"
        self.pivot(best[2], entering)
        return True

    def solve(self) -> FeasibilityResult:
        while self.bland_step():
            pass
        residual = sum(
            (self.b[i] for i in range(self.m) if self.basis[i] >= self.n), Fraction(0)
        )
        if residual == 0:
            x = [Fraction(0)] * self.n
            for i, j in enumerate(self.basis):
                if j < self.n:
                    x[j] = self.b[i]
            return FeasibilityResult(True, solution=tuple(x))
        # artificial column i has reduced cost -1 - y_i
        y = [-1 - self.c[self.n + i] for i in range(self.m)]
        y = [-v if flipped else v for v, flipped in zip(y, self.flipped)]
        return FeasibilityResult(False, farkas=tuple(y))


def solve_feasibility(
    A: Sequence[Sequence[Fraction | int]], b: Sequence[Fraction | int]
) -> FeasibilityResult:
    if len(A) != len(b):
        raise ValueError("A and b must have the same number of rows")
    if not A:
        return FeasibilityResult(True, solution=())
    widths = {len(row) for row in A}
    if len(widths) != 1:
        raise ValueError("ragged constraint matrix")
    return SimplexTableau(A, b).solve()  # type: ignore[arg-type]
