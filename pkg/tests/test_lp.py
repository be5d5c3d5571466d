from fractions import Fraction

import pytest

from gaussian_ideals.combinat.lp import solve_feasibility


def _dot(u, v):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))


@pytest.mark.parametrize("A,b", [
    ([[1, 1], [1, -1]], [2, 0]),
    ([[1, 1, 1], [2, 0, 1]], [3, 1]),
    ([[2, 0, 1], [0, 1, 1]], [1, 2]),
])
def test_feasible_systems_return_a_solution(A, b):
    result = solve_feasibility(A, b)
    assert result.feasible
    x = result.solution
    assert all(v >= 0 for v in x)
    assert [_dot(row, x) for row in A] == [Fraction(v) for v in b]


def test_solution_of_two_by_two():
    result = solve_feasibility([[1, 1], [1, -1]], [2, 0])
    assert result.feasible
    assert result.solution == (1, 1)


@pytest.mark.parametrize("A,b", [
    ([[1]], [-1]),
    ([[1, 2], [3, 1]], [-4, -2]),
    ([[1], [1]], [1, 2]),
    ([[1, 1], [1, 1]], [1, 3]),
    ([[1, 0, 1], [0, 1, 1], [1, 1, 1]], [1, 1, 3]),
])
def test_infeasible_systems_carry_a_farkas_vector(A, b):
    result = solve_feasibility(A, b)
    assert not result.feasible
    y = result.farkas
    assert all(_dot(y, col) >= 0 for col in zip(*A))
    assert _dot(y, b) < 0


def test_degenerate_input():
    assert solve_feasibility([], []).feasible
    with pytest.raises(ValueError):
        solve_feasibility([[1, 2], [1]], [1, 1])
    with pytest.raises(ValueError):
        solve_feasibility([[1]], [1, 2])
