"""Bordered-Hessian second-order check for the constrained optimum.

The 3x3 matrix puts the constraint gradient on the border and the
second-order block inside:

    [ 0        -lam*p1   -lam*p2 ]
    [ -lam*p1    h11       h12   ]
    [ -lam*p2    h12       h22   ]

Two published variants of the diagonal block circulate and they do not agree
once an exponent exceeds one, so both are first-class here and every report
carries the classification per variant:

    ShadowForm:  h11 = -lam * (alpha / (alpha + beta)) * P_C / L_C**2
                 h22 = -lam * (beta  / (alpha + beta)) * P_C / R_B**2
    DirectForm:  h11 = alpha * (alpha - 1) * L_C**(alpha - 2) * R_B**beta
                 h22 = beta  * (beta  - 1) * L_C**alpha * R_B**(beta - 2)

Both printed variants set the cross partial to zero; the corrected mode
(``include_cross_terms=True``) uses the true mixed partial
alpha * beta * L_C**(alpha-1) * R_B**(beta-1) instead.

For a two-variable problem with one constraint, det > 0 certifies a local
maximum and det < 0 a local minimum.  Determinants are expanded along the
first row exactly as the cofactor derivation writes them; tests compare the
expansion against a generic determinant routine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ._validation import require_positive
from .cobb_douglas import CobbDouglasProblem, OptimumSolution
from .errors import InvalidParameterError


class HessianVariant(Enum):
    SHADOW_FORM = "ShadowForm"
    DIRECT_FORM = "DirectForm"


class SecondOrderClass(Enum):
    LOCAL_MAX = "LocalMax"
    LOCAL_MIN = "LocalMin"
    INDETERMINATE = "Indeterminate"


# |det| below DET_NOISE_RTOL * (max abs entry)**3 cannot be distinguished
# from accumulated rounding and classifies as Indeterminate.
DET_NOISE_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class BorderedHessian:
    """Symmetric 3x3 bordered matrix; entry (0, 0) is identically zero."""

    entries: np.ndarray
    variant: HessianVariant
    include_cross_terms: bool = field(default=False)

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=float)
        if m.shape != (3, 3):
            raise InvalidParameterError(f"entries must be 3x3, got shape {m.shape}")
        if m[0, 0] != 0.0:
            raise InvalidParameterError(f"entries[0, 0] must be 0, got {m[0, 0]!r}")
        if not np.array_equal(m, m.T):
            raise InvalidParameterError("entries must be symmetric")
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)


def build_bordered_hessian(
    prob: CobbDouglasProblem,
    sol: OptimumSolution,
    variant: HessianVariant,
    include_cross_terms: bool = False,
) -> BorderedHessian:
    """Assemble the bordered Hessian at the point carried by ``sol``."""
    L = require_positive("L_C_star", sol.L_C_star)
    R = require_positive("R_B_star", sol.R_B_star)
    a, b = prob.alpha, prob.beta
    lam = sol.lam

    if variant is HessianVariant.SHADOW_FORM:
        h11 = -lam * (a / (a + b)) * prob.P_C / L**2
        h22 = -lam * (b / (a + b)) * prob.P_C / R**2
    elif variant is HessianVariant.DIRECT_FORM:
        h11 = a * (a - 1.0) * L ** (a - 2.0) * R**b
        h22 = b * (b - 1.0) * L**a * R ** (b - 2.0)
    else:
        raise InvalidParameterError(f"variant must be a HessianVariant, got {variant!r}")

    h12 = a * b * L ** (a - 1.0) * R ** (b - 1.0) if include_cross_terms else 0.0
    b1 = -lam * prob.p1
    b2 = -lam * prob.p2
    entries = np.array(
        [
            [0.0, b1, b2],
            [b1, h11, h12],
            [b2, h12, h22],
        ]
    )
    return BorderedHessian(entries=entries, variant=variant, include_cross_terms=include_cross_terms)


def hessian_determinant(h: BorderedHessian) -> float:
    """Determinant by cofactor expansion along the first (border) row."""
    m = h.entries
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def scale_border(h: BorderedHessian, k: float) -> BorderedHessian:
    """Rescale the border row and column by k > 0 (classification-invariant)."""
    k = require_positive("k", k)
    m = np.array(h.entries)
    m[0, :] *= k
    m[:, 0] *= k
    m[0, 0] = 0.0
    return BorderedHessian(entries=m, variant=h.variant, include_cross_terms=h.include_cross_terms)


def classify_from_determinant(det: float, matrix_scale: float) -> SecondOrderClass:
    """Sign test with a noise floor of DET_NOISE_RTOL * matrix_scale**3."""
    if abs(det) <= DET_NOISE_RTOL * matrix_scale**3:
        return SecondOrderClass.INDETERMINATE
    return SecondOrderClass.LOCAL_MAX if det > 0.0 else SecondOrderClass.LOCAL_MIN


def classify_second_order(
    prob: CobbDouglasProblem,
    sol: OptimumSolution,
    include_cross_terms: bool = False,
) -> dict[HessianVariant, SecondOrderClass]:
    """Evaluate and classify both variants at the solution point."""
    report: dict[HessianVariant, SecondOrderClass] = {}
    for variant in HessianVariant:
        h = build_bordered_hessian(prob, sol, variant, include_cross_terms)
        det = hessian_determinant(h)
        scale = float(np.max(np.abs(h.entries)))
        report[variant] = classify_from_determinant(det, scale)
    return report
