from __future__ import annotations

from itertools import combinations
from typing import Sequence

from gaussian_ideals.algebra.poly import Polynomial, PolyRing

Matrix = Sequence[Sequence[Polynomial]]


def generic_matrix(ring: PolyRing, prefix: str, rows: int, cols: int) -> list[list[Polynomial]]:
    """Matrix whose (i, j) entry is the ring variable ``{prefix}{i}{j}``."""
    return [[ring.var(f"{prefix}{i}{j}") for j in range(cols)] for i in range(rows)]


def determinant(matrix: Matrix) -> Polynomial:
    """Cofactor expansion along the first row; zero entries are skipped."""
    size = len(matrix)
    if size == 0 or any(len(row) != size for row in matrix):
        raise ValueError("determinant needs a non-empty square matrix")
    if size == 1:
        return matrix[0][0]
    if size == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    ring = matrix[0][0].ring
    total = ring.zero()
    for j, entry in enumerate(matrix[0]):
        if not entry:
            continue
        sub = [[row[c] for c in range(size) if c != j] for row in matrix[1:]]
        term = entry * determinant(sub)
        total = total - term if j % 2 else total + term
    return total


def minors(matrix: Matrix, order: int) -> list[Polynomial]:
    """All nonzero ``order`` x ``order`` minors, rows and columns in increasing index order."""
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    if not 1 <= order <= min(n_rows, n_cols):
        raise ValueError(f"minor order {order} out of range for a {n_rows}x{n_cols} matrix")
    out = []
    for rows in combinations(range(n_rows), order):
        for cols in combinations(range(n_cols), order):
            det = determinant([[matrix[r][c] for c in cols] for r in rows])
            if det:
                out.append(det)
    return out
