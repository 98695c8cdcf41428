"""Closed-form Cobb-Douglas optimum on a linear feasibility constraint.

The objective allocates the expectation-benefit component P_C between the
transaction-cost side L_C (weighted price p1) and the bargain side R_B
(weighted price p2):

    maximize   U(L_C, R_B) = L_C**alpha * R_B**beta
    subject to p1 * L_C + p2 * R_B <= P_C,   L_C, R_B >= 0

The exponent alpha always attaches to L_C and beta to R_B.  Because U is
increasing in both arguments the constraint binds, and the optimum has the
usual closed form

    L_C* = (alpha / (alpha + beta)) * P_C / p1
    R_B* = (beta  / (alpha + beta)) * P_C / p2

with the multiplier recovered from the first first-order condition,

    lambda = alpha * L_C***(alpha - 1) * R_B***beta / p1

(the second condition is a consistency cross-check, not a second
definition).  The optimal value satisfies the identity

    U* = (lambda / (alpha + beta)) * P_C

whose relative residual is carried on the solution for diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._validation import require_positive
from .errors import DomainError, InvalidParameterError


@dataclass(frozen=True)
class CobbDouglasProblem:
    """Exponents, prices, and the resource level of one allocation problem."""

    alpha: float
    beta: float
    p1: float
    p2: float
    P_C: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "p1", "p2", "P_C"):
            object.__setattr__(self, name, require_positive(name, getattr(self, name)))


@dataclass(frozen=True)
class OptimumSolution:
    """Interior optimum with its multiplier and self-consistency diagnostics.

    ``identity_residual`` is the relative gap between U* and
    (lambda / (alpha + beta)) * P_C; ``kkt_ok`` records lambda > 0.
    """

    L_C_star: float
    R_B_star: float
    lam: float
    U_star: float
    kkt_ok: bool
    identity_residual: float


def utility(prob: CobbDouglasProblem, L_C: float, R_B: float) -> float:
    """U = L_C**alpha * R_B**beta; zero whenever either argument is zero."""
    L_C = float(L_C)
    R_B = float(R_B)
    if math.isnan(L_C) or L_C < 0.0:
        raise InvalidParameterError(f"L_C must be >= 0, got {L_C!r}")
    if math.isnan(R_B) or R_B < 0.0:
        raise InvalidParameterError(f"R_B must be >= 0, got {R_B!r}")
    if L_C == 0.0 or R_B == 0.0:
        return 0.0
    return L_C**prob.alpha * R_B**prob.beta


def utility_gradient(prob: CobbDouglasProblem, L_C: float, R_B: float) -> tuple[float, float]:
    """Analytic partials (dU/dL_C, dU/dR_B) at a strictly interior point."""
    if L_C <= 0.0 or R_B <= 0.0:
        raise DomainError("utility gradient needs strictly positive L_C and R_B")
    a, b = prob.alpha, prob.beta
    return (
        a * L_C ** (a - 1.0) * R_B**b,
        b * L_C**a * R_B ** (b - 1.0),
    )


def mrs(prob: CobbDouglasProblem, L_C: float, R_B: float) -> float:
    """Marginal rate of substitution alpha * R_B / (beta * L_C).

    Equals the price ratio p1 / p2 at the optimum.
    """
    if L_C == 0.0:
        raise DomainError("mrs is undefined at L_C = 0 (division by zero)")
    return prob.alpha * R_B / (prob.beta * L_C)


def solve_closed_form(prob: CobbDouglasProblem) -> OptimumSolution:
    """Closed-form constrained maximum of the problem.

    The budget binds, demands split P_C in proportion alpha : beta, and the
    multiplier comes from the L_C first-order condition.
    """
    a, b = prob.alpha, prob.beta
    total = a + b
    # multiply before dividing so round-number inputs stay exact
    L_C_star = (a * prob.P_C) / (total * prob.p1)
    R_B_star = (b * prob.P_C) / (total * prob.p2)
    lam = a * L_C_star ** (a - 1.0) * R_B_star**b / prob.p1
    U_star = utility(prob, L_C_star, R_B_star)
    identity_residual = abs(U_star - (lam / total) * prob.P_C) / U_star
    return OptimumSolution(
        L_C_star=L_C_star,
        R_B_star=R_B_star,
        lam=lam,
        U_star=U_star,
        kkt_ok=lam > 0.0,
        identity_residual=identity_residual,
    )


def first_order_residuals(
    prob: CobbDouglasProblem, sol: OptimumSolution
) -> tuple[float, float, float]:
    """Stationarity and budget residuals at the point carried by ``sol``.

    Returns (dU/dL_C - lambda * p1, dU/dR_B - lambda * p2,
    P_C - p1 * L_C - p2 * R_B).  All three vanish at the true optimum; the
    point and multiplier are taken from ``sol`` verbatim so perturbed
    solutions can be probed.
    """
    g_L, g_R = utility_gradient(prob, sol.L_C_star, sol.R_B_star)
    return (
        g_L - sol.lam * prob.p1,
        g_R - sol.lam * prob.p2,
        prob.P_C - prob.p1 * sol.L_C_star - prob.p2 * sol.R_B_star,
    )
