import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.optimization.simplex import solve_lp


def test_textbook_maximum():
    # max 3x + 2y  s.t.  x + y <= 4,  x + 3y <= 6,  x <= 3
    result = solve_lp([3.0, 2.0], [[1, 1], [1, 3], [1, 0]], [4, 6, 3])
    assert result.status == "optimal"
    assert result.objective == pytest.approx(11.0)
    assert result.x == pytest.approx([3.0, 1.0])


def test_equality_rows():
    # max x + y  s.t.  x + 2y <= 8,  x - y = 1
    result = solve_lp([1.0, 1.0], [[1, 2]], [8], [[1, -1]], [1])
    assert result.status == "optimal"
    assert result.x == pytest.approx([10 / 3, 7 / 3])


def test_redundant_equalities_are_dropped():
    result = solve_lp([1.0, 0.0], np.zeros((0, 2)), np.zeros(0), [[1, 1], [2, 2]], [2, 4])
    assert result.status == "optimal"
    assert result.x == pytest.approx([2.0, 0.0])


def test_infeasible():
    result = solve_lp([1.0], [[1.0]], [1.0], [[1.0]], [2.0])
    assert result.status == "infeasible"
    assert result.x is None


def test_unbounded():
    result = solve_lp([1.0], [[-1.0]], [1.0])
    assert result.status == "unbounded"


def test_negative_rhs_needs_phase_one():
    # max -x  s.t.  -x <= -2   (x >= 2)
    result = solve_lp([-1.0], [[-1.0]], [-2.0])
    assert result.status == "optimal"
    assert result.x == pytest.approx([2.0])


def test_degenerate_problem_terminates():
    # several constraints tight at the origin; Bland's rule must not cycle
    c = [10.0, -57.0, -9.0, -24.0]
    A = [[0.5, -5.5, -2.5, 9.0], [0.5, -1.5, -0.5, 1.0], [1.0, 0.0, 0.0, 0.0]]
    result = solve_lp(c, A, [0.0, 0.0, 1.0])
    assert result.status == "optimal"
    assert result.objective == pytest.approx(1.0)


def test_identical_inputs_identical_vertex():
    rng = np.random.default_rng(7)
    A = rng.uniform(0.1, 1.0, size=(6, 5))
    b = rng.uniform(1.0, 2.0, size=6)
    first = solve_lp(np.ones(5), A, b)
    second = solve_lp(np.ones(5), A.copy(), b.copy())
    assert np.array_equal(first.x, second.x)
    assert first.iterations == second.iterations
