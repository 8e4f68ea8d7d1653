"""Exact simplex kernel: known optima, duality, degeneracy, edge cases."""

from fractions import Fraction as F

import pytest

from nonadd.simplex import LPSolution, UnboundedProgramError, solve_max


def test_box_optimum():
    sol = solve_max([F(1), F(1)], [[F(1), F(0)], [F(0), F(1)]], [F(1), F(2)])
    assert sol.value == 3
    assert sol.x == (F(1), F(2))
    assert sol.duals == (F(1), F(1))


def test_single_variable():
    sol = solve_max([F(3)], [[F(1)]], [F(5, 2)])
    assert sol.value == F(15, 2)
    assert sol.duals == (F(3),)


def test_shared_constraint():
    # max 3/5 a + 3/5 b + c  with  a + c <= 1, b + c <= 1
    sol = solve_max(
        [F(3, 5), F(3, 5), F(1)],
        [[F(1), F(0), F(1)], [F(0), F(1), F(1)]],
        [F(1), F(1)],
    )
    assert sol.value == F(6, 5)
    assert sol.x == (F(1), F(1), F(0))


def test_zero_rhs_degenerate():
    sol = solve_max([F(1), F(1)], [[F(1), F(1)], [F(1), F(2)]], [F(0), F(1)])
    assert sol.value == 0


def test_fractional_data():
    sol = solve_max(
        [F(7, 3), F(1, 2)],
        [[F(2, 5), F(1)], [F(1), F(1, 7)]],
        [F(3, 4), F(2, 3)],
    )
    # certificate identity is enforced internally; spot-check feasibility
    assert sol.x[0] * F(2, 5) + sol.x[1] <= F(3, 4)
    assert sol.x[0] + sol.x[1] * F(1, 7) <= F(2, 3)
    assert sol.value == sum(c * x for c, x in zip([F(7, 3), F(1, 2)], sol.x))


def test_unbounded_raises():
    with pytest.raises(UnboundedProgramError):
        solve_max([F(1), F(1)], [[F(1), F(-1)]], [F(1)])


def test_negative_rhs_rejected():
    with pytest.raises(ValueError):
        solve_max([F(1)], [[F(1)]], [F(-1)])


def test_inactive_constraints_get_zero_duals():
    sol = solve_max(
        [F(1)],
        [[F(1)], [F(1)]],
        [F(1), F(5)],  # second constraint slack at the optimum
    )
    assert sol.value == 1
    assert sol.duals[1] == 0
    assert isinstance(sol, LPSolution)
