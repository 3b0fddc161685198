"""
Dense two-phase tableau simplex with Bland's rule.

Solves   maximize c @ x   subject to   A_ub @ x <= b_ub,  A_eq @ x = b_eq,  x >= 0.

Bland's rule (lowest-index entering column, lowest-index leaving basic variable
on ratio ties) rules out cycling and fixes the pivot sequence, so identical
inputs always give the identical vertex.
"""

import logging
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

logger = logging.getLogger(__name__)

Status = Literal["optimal", "infeasible", "unbounded"]


@dataclass(frozen=True)
class SimplexResult:
    status: Status
    x: Optional[np.ndarray]
    objective: Optional[float]
    iterations: int


class _Tableau:
    """Canonical-form tableau: constraint rows plus a reduced-cost row."""

    def __init__(self, rows: np.ndarray, rhs: np.ndarray, basis: np.ndarray, eps: float):
        self.T = np.hstack([rows, rhs[:, None]]).astype(float)
        self.basis = basis.astype(int)
        self.eps = eps
        self.cost: np.ndarray = np.zeros(self.T.shape[1])
        self.iterations = 0

    def set_objective(self, c: np.ndarray) -> None:
        self.cost = np.zeros(self.T.shape[1])
        self.cost[: len(c)] = c
        for i, b in enumerate(self.basis):
            if self.cost[b] != 0.0:
                self.cost -= self.cost[b] * self.T[i]

    @property
    def objective(self) -> float:
        return -self.cost[-1]

    def pivot(self, row: int, col: int) -> None:
        self.T[row] /= self.T[row, col]
        column = self.T[:, col].copy()
        column[row] = 0.0
        self.T -= np.outer(column, self.T[row])
        self.T[np.abs(self.T) < 1e-14] = 0.0
        np.maximum(self.T[:, -1], 0.0, out=self.T[:, -1])
        self.cost -= self.cost[col] * self.T[row]
        self.basis[row] = col
        self.iterations += 1

    def run(self, allowed: int, max_iterations: int) -> Status:
        """Pivot until optimal over the first ``allowed`` columns."""
        while True:
            candidates = np.flatnonzero(self.cost[:allowed] > self.eps)
            if candidates.size == 0:
                return "optimal"
            col = int(candidates[0])
            column = self.T[:, col]
            rows = np.flatnonzero(column > self.eps)
            if rows.size == 0:
                return "unbounded"
            ratios = self.T[rows, -1] / column[rows]
            best = ratios.min()
            tied = rows[ratios <= best + self.eps * max(1.0, abs(best))]
            row = int(tied[np.argmin(self.basis[tied])])
            self.pivot(row, col)
            if self.iterations >= max_iterations:
                raise RuntimeError(f"simplex exceeded {max_iterations} iterations")

    def solution(self, n: int) -> np.ndarray:
        x = np.zeros(self.T.shape[1] - 1)
        x[self.basis] = self.T[:, -1]
        return np.clip(x[:n], 0.0, None)


def solve_lp(
    c: np.ndarray,
    A_ub: np.ndarray,
    b_ub: np.ndarray,
    A_eq: Optional[np.ndarray] = None,
    b_eq: Optional[np.ndarray] = None,
    eps: float = 1e-10,
    max_iterations: int = 200_000,
) -> SimplexResult:
    """
    Maximize ``c @ x`` over the polyhedron; see module docstring.

    Returns a SimplexResult whose status is ``optimal``, ``infeasible`` or
    ``unbounded``; ``x`` and ``objective`` are set only when optimal.
    """
    c = np.asarray(c, dtype=float)
    n = c.size
    A_ub = np.asarray(A_ub, dtype=float).reshape(-1, n)
    b_ub = np.asarray(b_ub, dtype=float).reshape(-1)
    A_eq = np.zeros((0, n)) if A_eq is None else np.asarray(A_eq, dtype=float).reshape(-1, n)
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=float).reshape(-1)
    m_ub, m_eq = A_ub.shape[0], A_eq.shape[0]
    m = m_ub + m_eq

    # slacks for every inequality row
    rows = np.zeros((m, n + m_ub))
    rows[:m_ub, :n] = A_ub
    rows[:m_ub, n:] = np.eye(m_ub)
    rows[m_ub:, :n] = A_eq
    rhs = np.concatenate([b_ub, b_eq])

    negative = rhs < 0
    rows[negative] *= -1.0
    rhs[negative] *= -1.0

    # rows whose slack cannot start basic get an artificial
    needs_artificial = np.ones(m, dtype=bool)
    needs_artificial[:m_ub] = negative[:m_ub]
    art_rows = np.flatnonzero(needs_artificial)
    n_struct = n + m_ub
    artificial = np.zeros((m, art_rows.size))
    artificial[art_rows, np.arange(art_rows.size)] = 1.0

    basis = np.empty(m, dtype=int)
    basis[:m_ub] = n + np.arange(m_ub)
    basis[art_rows] = n_struct + np.arange(art_rows.size)

    tableau = _Tableau(np.hstack([rows, artificial]), rhs, basis, eps)
    scale = max(1.0, float(np.abs(rhs).max(initial=0.0)))

    if art_rows.size:
        phase1 = np.zeros(n_struct + art_rows.size)
        phase1[n_struct:] = -1.0
        tableau.set_objective(phase1)
        tableau.run(n_struct + art_rows.size, max_iterations)
        if tableau.objective < -1e-9 * scale:
            logger.debug("Phase 1 ended with infeasibility %.3e", -tableau.objective)
            return SimplexResult("infeasible", None, None, tableau.iterations)

        # drive remaining artificials out of the basis, dropping redundant rows
        keep = np.ones(tableau.T.shape[0], dtype=bool)
        for i in range(tableau.T.shape[0]):
            if tableau.basis[i] < n_struct:
                continue
            nonzero = np.flatnonzero(np.abs(tableau.T[i, :n_struct]) > eps)
            if nonzero.size:
                tableau.pivot(i, int(nonzero[0]))
            else:
                keep[i] = False
        tableau.T = np.delete(tableau.T[keep], np.s_[n_struct:-1], axis=1)
        tableau.basis = tableau.basis[keep]

    tableau.set_objective(c)
    status = tableau.run(n_struct, max_iterations)
    if status != "optimal":
        return SimplexResult(status, None, None, tableau.iterations)

    x = tableau.solution(n)
    logger.debug("Simplex optimal after %d pivots, objective %.6g", tableau.iterations, tableau.objective)
    return SimplexResult("optimal", x, float(c @ x), tableau.iterations)
