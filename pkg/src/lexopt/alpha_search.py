"""Grid search for an exponent alpha* that certifies the optimum.

For each candidate alpha on a caller-supplied grid (beta and prices fixed)
the closed-form optimum is solved and kept when three predicates hold
simultaneously:

    lambda > 0,    lambda / (alpha + beta) > 0,    det(H) > 0

with det(H) taken from the selected bordered-Hessian variant.  Among the
admissible candidates, alpha* maximizes the configured objective (the
optimal utility by default, the multiplier alternatively); ties resolve to
the smallest alpha.  The winning solution is folded back through the
transaction-cost identity

    U_final = (lambda* / (alpha* + beta)) * (phi_sum + R_B)

which coincides with U* when evaluated at phi_sum = L_C* under unit prices.

Candidate evaluations are independent of one another; results are reported
in grid order regardless of evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from ._validation import require_positive
from .cobb_douglas import CobbDouglasProblem, OptimumSolution, solve_closed_form
from .errors import DomainError, InvalidParameterError
from .hessian import (
    HessianVariant,
    SecondOrderClass,
    build_bordered_hessian,
    classify_from_determinant,
    hessian_determinant,
)


class Objective(Enum):
    MAX_UTILITY = "MaxUtility"
    MAX_LAMBDA = "MaxLambda"


@dataclass(frozen=True)
class AlphaSearchConfig:
    alpha_grid: tuple[float, ...]
    beta: float
    p1: float
    p2: float
    P_C: float
    objective: Objective = Objective.MAX_UTILITY
    hessian_variant: HessianVariant = HessianVariant.SHADOW_FORM
    include_cross_terms: bool = field(default=False)

    def __post_init__(self) -> None:
        grid = tuple(float(a) for a in self.alpha_grid)
        if len(grid) == 0:
            raise InvalidParameterError("alpha_grid must be nonempty")
        for i, a in enumerate(grid):
            require_positive(f"alpha_grid[{i}]", a)
        if any(later <= earlier for earlier, later in zip(grid, grid[1:])):
            raise InvalidParameterError("alpha_grid must be strictly increasing")
        object.__setattr__(self, "alpha_grid", grid)
        object.__setattr__(self, "beta", require_positive("beta", self.beta))
        object.__setattr__(self, "p1", require_positive("p1", self.p1))
        object.__setattr__(self, "p2", require_positive("p2", self.p2))
        object.__setattr__(self, "P_C", require_positive("P_C", self.P_C))


@dataclass(frozen=True)
class AdmissibleAlpha:
    """One grid candidate that passed all three admissibility predicates."""

    alpha: float
    solution: OptimumSolution
    det_H: float


@dataclass(frozen=True)
class AlphaSearchResult:
    """Admissible table in grid order plus the selected candidate, if any."""

    admissible: tuple[AdmissibleAlpha, ...]
    alpha_star: float | None
    L_C_opt: float | None
    U_star_final: float | None


def final_utility(
    sol: OptimumSolution, alpha_star: float, beta: float, phi_sum: float, R_B: float
) -> float:
    """U = (lambda / (alpha* + beta)) * (phi_sum + R_B); requires lambda > 0."""
    if sol.lam <= 0.0:
        raise DomainError(f"final utility needs lambda > 0, got {sol.lam!r}")
    return (sol.lam / (alpha_star + beta)) * (phi_sum + R_B)


def _objective_value(objective: Objective, sol: OptimumSolution) -> float:
    return sol.U_star if objective is Objective.MAX_UTILITY else sol.lam


def _select_best(
    entries: tuple[AdmissibleAlpha, ...], key: Callable[[AdmissibleAlpha], float]
) -> AdmissibleAlpha | None:
    """First entry attaining the maximum key; entries arrive in grid order,
    so a strict comparison implements the smallest-alpha tie-break."""
    best = None
    best_value = -np.inf
    for entry in entries:
        value = key(entry)
        if value > best_value:
            best = entry
            best_value = value
    return best


def search_alpha(cfg: AlphaSearchConfig) -> AlphaSearchResult:
    """Evaluate the grid, filter by admissibility, and pick alpha*."""
    admissible: list[AdmissibleAlpha] = []
    for alpha in cfg.alpha_grid:
        prob = CobbDouglasProblem(alpha=alpha, beta=cfg.beta, p1=cfg.p1, p2=cfg.p2, P_C=cfg.P_C)
        sol = solve_closed_form(prob)
        h = build_bordered_hessian(prob, sol, cfg.hessian_variant, cfg.include_cross_terms)
        det = hessian_determinant(h)
        scale = float(np.max(np.abs(h.entries)))
        is_max = classify_from_determinant(det, scale) is SecondOrderClass.LOCAL_MAX
        if sol.lam > 0.0 and sol.lam / (alpha + cfg.beta) > 0.0 and is_max:
            admissible.append(AdmissibleAlpha(alpha=alpha, solution=sol, det_H=det))

    entries = tuple(admissible)
    best = _select_best(entries, lambda e: _objective_value(cfg.objective, e.solution))
    if best is None:
        return AlphaSearchResult(admissible=entries, alpha_star=None, L_C_opt=None, U_star_final=None)

    sol = best.solution
    u_final = final_utility(sol, best.alpha, cfg.beta, phi_sum=sol.L_C_star, R_B=sol.R_B_star)
    return AlphaSearchResult(
        admissible=entries,
        alpha_star=best.alpha,
        L_C_opt=sol.L_C_star,
        U_star_final=u_final,
    )
