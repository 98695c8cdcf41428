"""Deterministic litigation-market simulator.

Each tick runs one cohort of potential injurers through the model:

1.  Every injurer picks the precaution level B from the configured grid that
    minimizes B + P_harm(B) * L_harm * (1 - discount * settlement_rate),
    where settlement_rate is the PREVIOUS tick's settlement share (one-tick
    lag; zero on the first tick).  The discount captures how routinely
    settled claims blunt the deterrent bite of expected liability.
2.  Injuries arrive as the deterministic expectation
    n_injurers * P_harm(B); a seeded stochastic mode draws them binomially
    instead.  Every injury becomes a filing.
3.  Each filing is classified with the dispute primitives (the template plus
    the policy-controlled administration cost C_a) and either settles or
    goes to trial.  All filings in a tick share one set of primitives, so a
    tick settles or tries as a block, and settlements + trials = filings
    holds exactly.
4.  Welfare accrues as realized payoffs minus all resource costs:
    settlements * S_B + trials * p * W_B
    - (settlements * C_b + trials * C_a)      (transaction costs)
    - n_injurers * B                          (precaution spending)
    - injuries * L_harm                       (harm).
    The welfare carried on the state is the running total.

The administration-cost sweep reruns the full horizon for each C_a on a
grid under the identical configuration and seed, reporting aggregate trials,
the run-level settlement rate, and final welfare per grid point, with the
best-welfare and fewest-trials rows flagged (ties to the smallest C_a).
Whether the welfare argmax sits at an interior C_a is reported by the data,
never asserted by the code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from ._validation import (
    require_count,
    require_nonnegative,
    require_unit_interval,
)
from .core_model import CaseParameters, Decision, classify_scenario, default_thresholds
from .errors import InvalidParameterError


@dataclass(frozen=True)
class ExponentialHarm:
    """P_harm(B) = p0 * exp(-decay * B); nonincreasing in B by construction."""

    p0: float
    decay: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "p0", require_unit_interval("p0", self.p0))
        object.__setattr__(self, "decay", require_nonnegative("decay", self.decay))

    def __call__(self, B: float) -> float:
        return self.p0 * math.exp(-self.decay * B)


@dataclass(frozen=True)
class CaseTemplate:
    """Dispute primitives shared by every filing; C_a is supplied per policy."""

    p: float
    W_B: float
    S_B: float
    C_b: float

    def with_admin_cost(self, C_a: float) -> CaseParameters:
        return CaseParameters(p=self.p, W_B=self.W_B, S_B=self.S_B, C_a=C_a, C_b=self.C_b)


@dataclass(frozen=True)
class SimConfig:
    n_injurers: int
    precaution_cost_grid: tuple[float, ...]
    harm_probability_fn: Callable[[float], float]
    L_harm: float
    case_template: CaseTemplate
    C_a_policy: float
    settlement_liability_discount: float
    ticks: int
    seed: int
    theta_a: float | None = None
    theta_b: float | None = None
    stochastic: bool = field(default=False)

    def __post_init__(self) -> None:
        require_count("n_injurers", self.n_injurers)
        require_count("ticks", self.ticks)
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise InvalidParameterError(f"seed must be an integer, got {self.seed!r}")
        if len(self.precaution_cost_grid) == 0:
            raise InvalidParameterError("precaution_cost_grid must be nonempty")
        grid = tuple(
            require_nonnegative(f"precaution_cost_grid[{i}]", b)
            for i, b in enumerate(self.precaution_cost_grid)
        )
        object.__setattr__(self, "precaution_cost_grid", tuple(sorted(grid)))
        object.__setattr__(self, "L_harm", require_nonnegative("L_harm", self.L_harm))
        object.__setattr__(self, "C_a_policy", require_nonnegative("C_a_policy", self.C_a_policy))
        self.case_template.with_admin_cost(self.C_a_policy)  # validates the template fields
        object.__setattr__(
            self,
            "settlement_liability_discount",
            require_unit_interval(
                "settlement_liability_discount", self.settlement_liability_discount
            ),
        )
        previous = None
        for B in self.precaution_cost_grid:
            p = require_unit_interval(f"harm_probability_fn({B})", self.harm_probability_fn(B))
            if previous is not None and p > previous + 1e-12:
                raise InvalidParameterError(
                    f"harm_probability_fn must be nonincreasing on the grid; "
                    f"rises at B={B}"
                )
            previous = p

    def thresholds(self) -> tuple[float, float]:
        if self.theta_a is not None and self.theta_b is not None:
            return self.theta_a, self.theta_b
        probe = self.case_template.with_admin_cost(self.C_a_policy)
        default_a, default_b = default_thresholds(probe)
        return (
            default_a if self.theta_a is None else self.theta_a,
            default_b if self.theta_b is None else self.theta_b,
        )


@dataclass(frozen=True)
class SimState:
    tick: int
    injuries: float
    filings: float
    settlements: float
    trials: float
    aggregate_trials: float
    welfare: float


INITIAL_STATE = SimState(
    tick=0, injuries=0.0, filings=0.0, settlements=0.0, trials=0.0,
    aggregate_trials=0.0, welfare=0.0,
)


def choose_precaution(cfg: SimConfig, settlement_rate: float = 0.0) -> float:
    """Cost-minimizing precaution against liability discounted by settlement.

    Minimizes B + P_harm(B) * L_harm * (1 - discount * settlement_rate) over
    the grid; ties resolve to the smaller B.
    """
    settlement_rate = require_unit_interval("settlement_rate", settlement_rate)
    liability_weight = 1.0 - cfg.settlement_liability_discount * settlement_rate
    best_B = None
    best_cost = math.inf
    for B in cfg.precaution_cost_grid:
        cost = B + cfg.harm_probability_fn(B) * cfg.L_harm * liability_weight
        if cost < best_cost:
            best_B = B
            best_cost = cost
    return best_B


def _settlement_rate(state: SimState) -> float:
    return state.settlements / state.filings if state.filings > 0.0 else 0.0


def step(state: SimState, cfg: SimConfig, rng: np.random.Generator | None = None) -> SimState:
    """Advance one tick; the settlement rate feeding precaution lags by one tick."""
    B = choose_precaution(cfg, _settlement_rate(state))
    p_harm = cfg.harm_probability_fn(B)
    if cfg.stochastic:
        if rng is None:
            rng = np.random.default_rng(cfg.seed)
        injuries = float(rng.binomial(cfg.n_injurers, p_harm))
    else:
        injuries = cfg.n_injurers * p_harm
    filings = injuries

    case = cfg.case_template.with_admin_cost(cfg.C_a_policy)
    theta_a, theta_b = cfg.thresholds()
    scenario = classify_scenario(case, theta_a, theta_b)
    if scenario.decision is Decision.SETTLE:
        settlements, trials = filings, 0.0
    else:
        settlements, trials = 0.0, filings

    payoffs = settlements * case.S_B + trials * case.p * case.W_B
    transaction_costs = settlements * case.C_b + trials * case.C_a
    tick_welfare = (
        payoffs - transaction_costs - cfg.n_injurers * B - injuries * cfg.L_harm
    )

    return SimState(
        tick=state.tick + 1,
        injuries=injuries,
        filings=filings,
        settlements=settlements,
        trials=trials,
        aggregate_trials=state.aggregate_trials + trials,
        welfare=state.welfare + tick_welfare,
    )


def run_simulation(cfg: SimConfig) -> list[SimState]:
    """Full horizon from the zero state; returns the state after each tick."""
    rng = np.random.default_rng(cfg.seed) if cfg.stochastic else None
    states: list[SimState] = []
    state = INITIAL_STATE
    for _ in range(cfg.ticks):
        state = step(state, cfg, rng)
        states.append(state)
    return states


@dataclass(frozen=True)
class SweepRow:
    C_a: float
    aggregate_trials: float
    settlement_rate: float
    welfare: float
    best_welfare: bool
    fewest_trials: bool


def sweep_admin_cost(cfg: SimConfig, C_a_grid: Sequence[float]) -> list[SweepRow]:
    """Rerun the horizon for each administration cost on the grid.

    Every run shares cfg (including the seed); the settlement rate reported
    per row is total settlements over total filings for that run.  Exactly
    one row is flagged best_welfare and one fewest_trials (ties to the
    smallest C_a).
    """
    if len(C_a_grid) == 0:
        raise InvalidParameterError("C_a_grid must be nonempty")
    grid = [require_nonnegative(f"C_a_grid[{i}]", c) for i, c in enumerate(C_a_grid)]
    if any(later <= earlier for earlier, later in zip(grid, grid[1:])):
        raise InvalidParameterError("C_a_grid must be strictly increasing")

    results = []
    for C_a in grid:
        states = run_simulation(replace(cfg, C_a_policy=C_a))
        total_filings = sum(s.filings for s in states)
        total_settlements = sum(s.settlements for s in states)
        rate = total_settlements / total_filings if total_filings > 0.0 else 0.0
        final = states[-1]
        results.append((C_a, final.aggregate_trials, rate, final.welfare))

    best_welfare_at = max(range(len(results)), key=lambda i: (results[i][3], -i))
    fewest_trials_at = min(range(len(results)), key=lambda i: (results[i][1], i))
    return [
        SweepRow(
            C_a=C_a,
            aggregate_trials=trials,
            settlement_rate=rate,
            welfare=welfare,
            best_welfare=(i == best_welfare_at),
            fewest_trials=(i == fewest_trials_at),
        )
        for i, (C_a, trials, rate, welfare) in enumerate(results)
    ]


def default_config() -> SimConfig:
    """Desk-scale defaults: 1e4 injurers, 100 ticks, the running dispute example."""
    return SimConfig(
        n_injurers=10_000,
        precaution_cost_grid=(0.0, 5.0, 10.0, 15.0, 20.0),
        harm_probability_fn=ExponentialHarm(p0=0.1, decay=0.1),
        L_harm=200.0,
        case_template=CaseTemplate(p=0.5, W_B=100.0, S_B=60.0, C_b=4.0),
        C_a_policy=10.0,
        settlement_liability_discount=0.5,
        ticks=100,
        seed=0,
    )


def default_sweep_grid() -> tuple[float, ...]:
    """20 administration-cost levels spanning both sides of the default thresholds."""
    return tuple(np.linspace(0.0, 55.0, 20))
