"""Evidence-calculus tests.

Frozen values come from tests/oracles.py runs: quadrature densities for the
p-equals ratios, a 1e7-run t-test simulation for power (0.781555, se 1.31e-4),
and bisection quantiles for t_obs.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fprkit.errors import DomainError, InfeasibleError
from fprkit.fprcore import (
    DEFAULT_DESIGN,
    Alternative,
    Approach,
    LikelihoodRatio,
    TestDesign,
    benjamin_berger_bf,
    curve,
    evidence_from_p,
    fpr,
    fpr50,
    lr_p_equals,
    lr_p_less_than,
    power,
    prior_for_fpr,
)

MC_POWER = 0.781555  # frozen: oracles.power_mc(16, 1, 0.05, n_sims=10**7)
MC_POWER_SE = 1.31e-4


def _lr(l10: float) -> LikelihoodRatio:
    return LikelihoodRatio(l10=l10, approach=Approach.P_EQUALS, alternative=Alternative.FIXED_EFFECT)


class TestDesignType:
    def test_derived_quantities(self):
        d = TestDesign(16, 1.0, 0.05)
        assert d.df() == 30.0
        assert d.ncp() == pytest.approx(2.8284271247461903, rel=1e-12)

    def test_default_design(self):
        assert DEFAULT_DESIGN == TestDesign(16, 1.0, 0.05)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_per_group": 1},
            {"n_per_group": 0},
            {"effect_size_sd": -0.5},
            {"effect_size_sd": math.inf},
            {"alpha": 0.0},
            {"alpha": 1.0},
        ],
    )
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(DomainError):
            TestDesign(**{"n_per_group": 16, "effect_size_sd": 1.0, "alpha": 0.05, **kwargs})


class TestEvidence:
    def test_t_obs_at_p05(self):
        ev = evidence_from_p(DEFAULT_DESIGN, 0.05)
        assert ev.t_obs == pytest.approx(2.0422724563012373, abs=1e-8)

    def test_round_trip(self):
        from fprkit.tdist import CentralT, cdf

        for p in (0.001, 0.01, 0.05, 0.3, 0.9):
            ev = evidence_from_p(DEFAULT_DESIGN, p)
            back = 2.0 * (1.0 - cdf(CentralT(DEFAULT_DESIGN.df()), ev.t_obs))
            assert back == pytest.approx(p, abs=1e-8)

    def test_p_near_one_gives_t_near_zero(self):
        assert evidence_from_p(DEFAULT_DESIGN, 1 - 1e-12).t_obs == pytest.approx(0.0, abs=1e-6)

    def test_normal_limit(self):
        big = TestDesign(n_per_group=10**6)
        assert evidence_from_p(big, 0.05).t_obs == pytest.approx(1.9600, abs=1e-3)

    @pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.5, math.nan])
    def test_rejects_bad_p(self, p):
        with pytest.raises(DomainError):
            evidence_from_p(DEFAULT_DESIGN, p)


class TestPower:
    def test_null_effect_power_is_alpha(self):
        for alpha in (0.05, 0.01):
            d = TestDesign(16, 0.0, alpha)
            assert power(d) == pytest.approx(alpha, abs=1e-9)

    def test_against_simulation_oracle(self):
        assert abs(power(DEFAULT_DESIGN) - MC_POWER) <= 3.0 * MC_POWER_SE

    def test_large_n_saturates(self):
        assert power(TestDesign(10**4, 1.0, 0.05)) >= 0.9999

    def test_monotone_in_n(self):
        values = [power(TestDesign(n, 1.0, 0.05)) for n in (4, 8, 16, 32, 64)]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestLrPEquals:
    def test_null_alternative_is_one(self):
        d = TestDesign(16, 0.0, 0.05)
        for p in (0.005, 0.05, 0.5):
            assert lr_p_equals(d, evidence_from_p(d, p)).l10 == pytest.approx(1.0, abs=1e-12)

    def test_fixed_effect_frozen(self):
        # quadrature-oracle value at the default design, p = 0.05
        ev = evidence_from_p(DEFAULT_DESIGN, 0.05)
        assert lr_p_equals(DEFAULT_DESIGN, ev).l10 == pytest.approx(2.7565103590, rel=1e-8)

    def test_ml_alternative_frozen(self):
        # exact value of the stated formula with ncp = t_obs (cross-checked
        # against the quadrature oracle); the large-sample value is ~3.41
        ev = evidence_from_p(DEFAULT_DESIGN, 0.05)
        got = lr_p_equals(DEFAULT_DESIGN, ev, Alternative.ML_ALTERNATIVE).l10
        assert got == pytest.approx(3.6382616022, rel=1e-8)

    def test_ml_alternative_large_sample_band(self):
        d = TestDesign(10**4, 1.0, 0.05)
        got = lr_p_equals(d, evidence_from_p(d, 0.05), Alternative.ML_ALTERNATIVE).l10
        assert 2.5 <= got <= 3.5

    def test_against_live_quadrature(self):
        d = TestDesign(8, 0.7, 0.05)
        ev = evidence_from_p(d, 0.02)
        want = (
            oracles.nct_pdf_quad(d.df(), d.ncp(), ev.t_obs)
            + oracles.nct_pdf_quad(d.df(), d.ncp(), -ev.t_obs)
        ) / (2.0 * oracles.t_pdf_exact(d.df(), ev.t_obs))
        assert lr_p_equals(d, ev).l10 == pytest.approx(want, rel=1e-8)


class TestLrPLessThan:
    def test_null_alternative_is_one(self):
        d = TestDesign(16, 0.0, 0.05)
        assert lr_p_less_than(d, 0.05).l10 == pytest.approx(1.0, abs=1e-9)

    def test_frozen_value(self):
        # power(alpha=0.05)/0.05; MC oracle gave 15.6311 +- 3*0.0026
        got = lr_p_less_than(DEFAULT_DESIGN, 0.05).l10
        assert got == pytest.approx(15.6279558493, rel=1e-8)
        assert abs(got - MC_POWER / 0.05) <= 3.0 * MC_POWER_SE / 0.05

    def test_threshold_near_one(self):
        assert lr_p_less_than(DEFAULT_DESIGN, 1 - 1e-9).l10 == pytest.approx(1.0, abs=1e-6)

    def test_rejects_bad_threshold(self):
        with pytest.raises(DomainError):
            lr_p_less_than(DEFAULT_DESIGN, 0.0)


class TestFpr:
    def test_prior_half_equals_fpr50(self):
        for l10 in (0.2, 1.0, 2.756, 28.57):
            assert fpr(_lr(l10), 0.5).fpr == fpr50(_lr(l10)).fpr
            assert fpr50(_lr(l10)).fpr == 1.0 / (1.0 + l10)

    def test_boundaries(self):
        assert fpr(_lr(2.0), 1.0).fpr == 0.0
        assert fpr(_lr(2.0), 0.0).fpr == 1.0

    def test_spec_anchor_087_prior(self):
        # l10 = 2.84 with prior 0.87 lands back on ~0.05
        assert fpr(_lr(2.84), 0.87).fpr == pytest.approx(0.05, abs=5e-4)

    def test_result_identity_exact(self):
        res = fpr(_lr(3.3), 0.7)
        assert res.fpr == (1.0 - 0.7) / ((1.0 - 0.7) + 0.7 * 3.3)

    @given(
        l10=st.floats(min_value=1e-6, max_value=1e6),
        priors=st.tuples(
            st.floats(min_value=0.001, max_value=0.999),
            st.floats(min_value=0.001, max_value=0.999),
        ),
    )
    @settings(max_examples=200, deadline=None)
    def test_strictly_decreasing_in_prior(self, l10, priors):
        a, b = sorted(priors)
        assert fpr(_lr(l10), a).fpr >= fpr(_lr(l10), b).fpr
        if b - a > 1e-9:  # below that, float outputs may legitimately collide
            assert fpr(_lr(l10), a).fpr > fpr(_lr(l10), b).fpr

    @given(
        prior=st.floats(min_value=0.001, max_value=0.999),
        l10s=st.tuples(
            st.floats(min_value=1e-3, max_value=1e3),
            st.floats(min_value=1e-3, max_value=1e3),
        ),
    )
    @settings(max_examples=200, deadline=None)
    def test_strictly_decreasing_in_l10(self, prior, l10s):
        a, b = sorted(l10s)
        assert fpr(_lr(a), prior).fpr >= fpr(_lr(b), prior).fpr
        if (b - a) / b > 1e-9:  # below that, float outputs may legitimately collide
            assert fpr(_lr(a), prior).fpr > fpr(_lr(b), prior).fpr

    def test_null_degeneracy_fpr_is_one_minus_prior(self):
        d = TestDesign(16, 0.0, 0.05)
        ev = evidence_from_p(d, 0.05)
        for prior in (0.1, 0.5, 0.9):
            assert fpr(lr_p_equals(d, ev), prior).fpr == pytest.approx(1 - prior, abs=1e-9)
            assert fpr(lr_p_less_than(d, 0.05), prior).fpr == pytest.approx(1 - prior, abs=1e-8)


class TestFpr50Anchors:
    def test_l10_one(self):
        assert fpr50(_lr(1.0)).fpr == 0.5

    def test_flagship_p005(self):
        ev = evidence_from_p(DEFAULT_DESIGN, 0.005)
        got = fpr50(lr_p_equals(DEFAULT_DESIGN, ev)).fpr
        assert got == pytest.approx(0.034, abs=0.005)
        assert got == pytest.approx(0.0338155786, rel=1e-7)  # frozen oracle value

    def test_sellke_berger_limit_value(self):
        assert fpr50(_lr(13.89)).fpr == pytest.approx(0.067, abs=0.001)


class TestPriorForFpr:
    def test_inverse_of_fpr50(self):
        lr = _lr(4.2)
        assert prior_for_fpr(lr, fpr50(lr).fpr) == pytest.approx(0.5, abs=1e-12)

    def test_paper_087(self):
        lr = lr_p_equals(DEFAULT_DESIGN, evidence_from_p(DEFAULT_DESIGN, 0.05))
        got = prior_for_fpr(lr, 0.05)
        assert got == pytest.approx(0.87, abs=0.02)
        assert got == pytest.approx(0.8733018157, rel=1e-8)  # frozen oracle value

    def test_overwhelming_evidence_needs_no_prior(self):
        assert prior_for_fpr(_lr(1e12), 0.05) < 1e-10

    def test_round_trips(self):
        for target in (0.01, 0.05, 0.2):
            for l10 in (0.5, 2.756, 99.6):
                lr = _lr(l10)
                assert abs(fpr(lr, prior_for_fpr(lr, target)).fpr - target) <= 1e-12

    def test_infeasible_zero_l10(self):
        with pytest.raises(InfeasibleError):
            prior_for_fpr(_lr(0.0), 0.05)

    def test_rejects_bad_target(self):
        with pytest.raises(DomainError):
            prior_for_fpr(_lr(2.0), 0.0)


class TestCalibration:
    def test_p05(self):
        cal = benjamin_berger_bf(0.05)
        assert cal.bf10 == pytest.approx(2.456, abs=0.005)
        assert cal.bf10 == pytest.approx(2.4560234866, rel=1e-10)

    def test_boundary_is_exactly_one(self):
        cal = benjamin_berger_bf(1.0 / math.e)
        assert cal.bf10 == 1.0
        assert cal.fpr50 == 0.5

    def test_p005(self):
        cal = benjamin_berger_bf(0.005)
        assert cal.bf10 == pytest.approx(13.8866515, rel=1e-7)
        assert cal.fpr50 == pytest.approx(0.067, abs=0.002)

    def test_rejects_outside_domain(self):
        for p in (0.0, -0.1, 0.368, 0.7, 1.0):
            with pytest.raises(DomainError):
                benjamin_berger_bf(p)

    def test_strictly_decreasing_and_diverging(self):
        ps = [1e-12, 1e-8, 1e-4, 0.005, 0.05, 0.2, 1.0 / math.e]
        bfs = [benjamin_berger_bf(p).bf10 for p in ps]
        assert all(a > b for a, b in zip(bfs, bfs[1:]))
        assert bfs[0] > 1e9


class TestOrderingProperty:
    @pytest.mark.parametrize("p", [0.05, 0.01, 0.005, 0.001])
    def test_p_equals_gives_smaller_l10_bigger_fpr(self, p):
        ev = evidence_from_p(DEFAULT_DESIGN, p)
        l_pe = lr_p_equals(DEFAULT_DESIGN, ev)
        l_pl = lr_p_less_than(DEFAULT_DESIGN, p)
        assert l_pe.l10 < l_pl.l10
        assert fpr50(l_pe).fpr > fpr50(l_pl).fpr
        assert fpr50(l_pe).fpr > p


class TestCurve:
    def test_prior_sweep_endpoints(self):
        rows = curve(DEFAULT_DESIGN, "prior", [0.0, 0.5, 1.0])
        assert [r.fpr_pequals for r in rows] == [
            1.0,
            fpr50(lr_p_equals(DEFAULT_DESIGN, evidence_from_p(DEFAULT_DESIGN, 0.05))).fpr,
            0.0,
        ]

    def test_p_sweep_matches_direct_ops(self):
        rows = curve(DEFAULT_DESIGN, "p", [0.05, 0.005])
        for row, p in zip(rows, (0.05, 0.005)):
            ev = evidence_from_p(DEFAULT_DESIGN, p)
            assert row.fpr_pequals == fpr50(lr_p_equals(DEFAULT_DESIGN, ev)).fpr
            assert row.calibration_fpr50 == benjamin_berger_bf(p).fpr50
        assert rows[1].fpr_pequals == pytest.approx(0.034, abs=0.005)

    def test_n_sweep_monotone_and_deterministic(self):
        rows1 = curve(DEFAULT_DESIGN, "n", [4, 16, 64])
        rows2 = curve(DEFAULT_DESIGN, "n", [4, 16, 64])
        assert rows1 == rows2
        # at fixed p = 0.05 and fixed 1-SD alternative, growing n makes the
        # observed t ever less compatible with H1 (Lindley's effect): l10
        # falls and the risk climbs toward 1
        l10s = [r.l10_pequals for r in rows1]
        fprs = [r.fpr_pequals for r in rows1]
        assert all(a > b for a, b in zip(l10s, l10s[1:]))
        assert all(a < b for a, b in zip(fprs, fprs[1:]))

    def test_row_errors_do_not_abort(self):
        rows = curve(DEFAULT_DESIGN, "p", [0.05, 0.4, 0.005])
        assert [r.sweep_value for r in rows] == [0.05, 0.4, 0.005]
        assert rows[1].calibration_fpr50 is None
        assert rows[1].l10_pequals is not None  # only the calibration cell fails
        assert any("1/e" in w for w in rows[1].warnings)
        bad_n = curve(DEFAULT_DESIGN, "n", [16, 1])
        assert bad_n[1].l10_pequals is None
        assert bad_n[1].warnings

    def test_grid_order_preserved(self):
        grid = [0.9, 0.1, 0.5]
        rows = curve(DEFAULT_DESIGN, "prior", grid)
        assert [r.sweep_value for r in rows] == grid
