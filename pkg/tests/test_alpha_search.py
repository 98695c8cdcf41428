import numpy as np
import pytest

from lexopt import (
    AdmissibleAlpha,
    AlphaSearchConfig,
    DomainError,
    HessianVariant,
    InvalidParameterError,
    Objective,
    OptimumSolution,
    final_utility,
    search_alpha,
    solve_closed_form,
)
from lexopt.alpha_search import _select_best
from lexopt.cobb_douglas import CobbDouglasProblem

BASE_GRID = (0.25, 0.5, 0.75)


def base_config(**overrides) -> AlphaSearchConfig:
    kw = dict(alpha_grid=BASE_GRID, beta=0.5, p1=1.0, p2=1.0, P_C=2.0)
    kw.update(overrides)
    return AlphaSearchConfig(**kw)


class TestConfigValidation:
    def test_empty_grid(self):
        with pytest.raises(InvalidParameterError, match="nonempty"):
            base_config(alpha_grid=())

    def test_grid_must_strictly_increase(self):
        with pytest.raises(InvalidParameterError, match="strictly increasing"):
            base_config(alpha_grid=(0.5, 0.5))
        with pytest.raises(InvalidParameterError, match="strictly increasing"):
            base_config(alpha_grid=(0.5, 0.25))

    def test_grid_entries_must_be_positive(self):
        with pytest.raises(InvalidParameterError, match=r"alpha_grid\[0\]"):
            base_config(alpha_grid=(0.0, 0.5))

    @pytest.mark.parametrize("field", ["beta", "p1", "p2", "P_C"])
    def test_scalar_fields_must_be_positive(self, field):
        with pytest.raises(InvalidParameterError, match=field):
            base_config(**{field: 0.0})

    def test_defaults(self):
        cfg = base_config()
        assert cfg.objective is Objective.MAX_UTILITY
        assert cfg.hessian_variant is HessianVariant.SHADOW_FORM
        assert not cfg.include_cross_terms


class TestSearchAlpha:
    def test_max_utility_picks_smallest_exponent_here(self):
        r = search_alpha(base_config())
        assert [e.alpha for e in r.admissible] == [0.25, 0.5, 0.75]
        assert r.alpha_star == 0.25
        assert r.L_C_opt == 0.6666666666666666
        assert r.U_star_final == pytest.approx(1.043389720048858, rel=1e-12)

    def test_max_lambda_picks_largest_exponent_here(self):
        r = search_alpha(base_config(objective=Objective.MAX_LAMBDA))
        assert r.alpha_star == 0.75
        assert r.L_C_opt == 1.2
        assert r.U_star_final == pytest.approx(1.0254888153509616, rel=1e-12)

    def test_objective_really_is_maximized(self):
        for objective in Objective:
            r = search_alpha(base_config(objective=objective))
            values = [
                e.solution.U_star if objective is Objective.MAX_UTILITY else e.solution.lam
                for e in r.admissible
            ]
            winner = next(e for e in r.admissible if e.alpha == r.alpha_star)
            winner_value = (
                winner.solution.U_star
                if objective is Objective.MAX_UTILITY
                else winner.solution.lam
            )
            assert winner_value == max(values)

    def test_singleton_grid(self):
        r = search_alpha(base_config(alpha_grid=(0.5,)))
        assert r.alpha_star == 0.5
        assert r.L_C_opt == 1.0
        assert r.U_star_final == 1.0

    def test_admissible_reported_in_grid_order(self):
        grid = tuple(np.linspace(0.1, 0.9, 9))
        r = search_alpha(base_config(alpha_grid=grid))
        alphas = [e.alpha for e in r.admissible]
        assert alphas == sorted(alphas)
        assert len(alphas) == 9

    def test_u_final_matches_identity_at_winner(self):
        r = search_alpha(base_config())
        winner = next(e for e in r.admissible if e.alpha == r.alpha_star)
        sol = winner.solution
        expected = (sol.lam / (r.alpha_star + 0.5)) * (sol.L_C_star + sol.R_B_star)
        assert r.U_star_final == expected

    @pytest.mark.parametrize("beta,P_C", [(2.0, 4.0), (1.0, 6.0)])
    def test_direct_form_rejects_super_unit_exponents(self, beta, P_C):
        cfg = base_config(
            alpha_grid=(2.0,), beta=beta, P_C=P_C,
            hessian_variant=HessianVariant.DIRECT_FORM,
        )
        r = search_alpha(cfg)
        assert r.admissible == ()
        assert r.alpha_star is None
        assert r.L_C_opt is None
        assert r.U_star_final is None

    def test_cross_terms_rescue_the_same_grid(self):
        cfg = base_config(
            alpha_grid=(2.0,), beta=2.0, P_C=4.0,
            hessian_variant=HessianVariant.DIRECT_FORM, include_cross_terms=True,
        )
        r = search_alpha(cfg)
        assert r.alpha_star == 2.0

    def test_det_H_comes_from_selected_variant(self):
        r = search_alpha(base_config(alpha_grid=(0.5,)))
        assert r.admissible[0].det_H == 0.25
        r = search_alpha(
            base_config(alpha_grid=(0.5,), hessian_variant=HessianVariant.DIRECT_FORM)
        )
        assert r.admissible[0].det_H == 0.125


class TestFinalUtility:
    def test_identity_with_round_numbers(self):
        sol = solve_closed_form(CobbDouglasProblem(2, 1, 1, 1, 6))
        assert final_utility(sol, 2.0, 1.0, phi_sum=4.0, R_B=2.0) == 32.0

    def test_nonpositive_multiplier_is_a_domain_error(self):
        sol = OptimumSolution(1.0, 1.0, 0.0, 1.0, False, 0.0)
        with pytest.raises(DomainError, match="lambda"):
            final_utility(sol, 0.5, 0.5, phi_sum=1.0, R_B=1.0)


class TestSelectBest:
    @staticmethod
    def entry(alpha: float, value: float) -> AdmissibleAlpha:
        sol = OptimumSolution(1.0, 1.0, value, value, True, 0.0)
        return AdmissibleAlpha(alpha=alpha, solution=sol, det_H=1.0)

    def test_empty_gives_none(self):
        assert _select_best((), lambda e: e.solution.U_star) is None

    def test_tie_goes_to_the_earliest_entry(self):
        entries = (self.entry(0.2, 5.0), self.entry(0.4, 5.0), self.entry(0.6, 3.0))
        best = _select_best(entries, lambda e: e.solution.U_star)
        assert best is not None and best.alpha == 0.2

    def test_strictly_better_later_entry_wins(self):
        entries = (self.entry(0.2, 5.0), self.entry(0.4, 6.0))
        best = _select_best(entries, lambda e: e.solution.U_star)
        assert best is not None and best.alpha == 0.4
