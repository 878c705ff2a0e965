"""Frequency selection and quadratic coefficients."""

import math

import pytest

from ptosc.errors import DomainError
from ptosc.model import (
    CandidateFrequencies,
    Family,
    FrequencyChoice,
    FrequencyLabel,
    OscillatorSpec,
    candidate_frequencies,
    closed_form_energy,
    coefficients,
    resolve_frequency,
    variational_frequency,
)

MOMENTUM = OscillatorSpec.momentum_shift(W=10.0, L=5.4)
MOMENTUM_FLIPPED = OscillatorSpec.momentum_shift(W=5.4, L=10.0)
COORDINATE = OscillatorSpec.coordinate_shift(L=10.0, R=8.0)
COORDINATE_FLIPPED = OscillatorSpec.coordinate_shift(L=8.0, R=10.0)


class TestCoefficients:
    def test_momentum_sum_root_cell(self):
        q = coefficients(MOMENTUM, 15.4)
        assert q.d == pytest.approx(20.0, abs=1e-12)
        assert q.u == pytest.approx(0.0, abs=1e-12)
        assert q.v == pytest.approx(-21.6, abs=1e-12)

    def test_momentum_negdiff_root_cell(self):
        q = coefficients(MOMENTUM, 4.6)
        assert q.d == pytest.approx(20.0, abs=1e-12)
        assert q.u == pytest.approx(21.6, abs=1e-12)
        assert q.v == pytest.approx(0.0, abs=1e-12)

    def test_momentum_diff_root_cell(self):
        # W < L: the surviving root gives a negative diagonal scale
        q = coefficients(MOMENTUM_FLIPPED, 4.6)
        assert q.d == pytest.approx(-10.8, abs=1e-12)
        assert q.u == pytest.approx(0.0, abs=1e-12)

    def test_coordinate_variational_cell(self):
        q = coefficients(COORDINATE, 1.0 / 6.0)
        assert q.d == pytest.approx(12.0, abs=1e-12)
        assert q.u == pytest.approx(16.0, abs=1e-12)
        assert q.v == pytest.approx(-16.0, abs=1e-12)

    def test_unshifted_unit_frequency_is_diagonal(self):
        q = coefficients(OscillatorSpec.momentum_shift(W=1.0, L=0.0), 1.0)
        assert q.d == pytest.approx(2.0, abs=1e-15)
        assert q.u == pytest.approx(0.0, abs=1e-15)
        assert q.v == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("w", [0.3, 1.0, 4.6, 15.4, 80.0])
    def test_band_asymmetry_is_fixed_by_the_shift(self, w):
        # u - v depends only on the shift strength, never on w
        q = coefficients(MOMENTUM, w)
        assert q.u - q.v == pytest.approx(4 * MOMENTUM.L, rel=1e-13)
        q = coefficients(COORDINATE, w)
        assert q.u - q.v == pytest.approx(4 * COORDINATE.R, rel=1e-13)

    @pytest.mark.parametrize("w", [0.3, 1.0, 4.6, 15.4, 80.0])
    def test_discriminant_is_frequency_independent(self, w):
        # the subtraction cancels ~d^2 down to a constant, so the
        # tolerance must scale with the cancelled magnitude
        for spec, expected in (
            (MOMENTUM, 4 * MOMENTUM.W**2),
            (COORDINATE, 4 * COORDINATE.L**2),
        ):
            q = coefficients(spec, w)
            tol = 1e-12 * max(1.0, q.d**2, abs(q.u * q.v))
            assert q.d**2 - q.u * q.v == pytest.approx(expected, abs=tol)

    def test_rejects_nonpositive_frequency(self):
        with pytest.raises(DomainError):
            coefficients(MOMENTUM, 0.0)
        with pytest.raises(DomainError):
            coefficients(MOMENTUM, -2.0)


class TestCandidates:
    def test_momentum_accepted_set(self):
        cands = candidate_frequencies(MOMENTUM)
        labels = [c.label for c in cands.accepted]
        assert labels == [
            FrequencyLabel.SUM_ROOT,
            FrequencyLabel.NEG_DIFF_ROOT,
            FrequencyLabel.VARIATIONAL,
        ]
        by_label = {c.label: c.w for c in cands.accepted}
        assert by_label[FrequencyLabel.SUM_ROOT] == pytest.approx(15.4)
        assert by_label[FrequencyLabel.NEG_DIFF_ROOT] == pytest.approx(4.6)
        assert by_label[FrequencyLabel.VARIATIONAL] == pytest.approx(
            math.sqrt(10.0**2 - 5.4**2)
        )
        rejected = {r.label for r in cands.rejected}
        assert rejected == {FrequencyLabel.DIFF_ROOT}

    def test_momentum_flipped_accepted_set(self):
        cands = candidate_frequencies(MOMENTUM_FLIPPED)
        labels = [c.label for c in cands.accepted]
        assert labels == [FrequencyLabel.SUM_ROOT, FrequencyLabel.DIFF_ROOT]
        rejected = {r.label: r.reason for r in cands.rejected}
        assert FrequencyLabel.NEG_DIFF_ROOT in rejected
        assert FrequencyLabel.VARIATIONAL in rejected
        assert "not > 0" in rejected[FrequencyLabel.VARIATIONAL]

    def test_boundary_case_keeps_only_sum_root(self):
        spec = OscillatorSpec.momentum_shift(W=3.0, L=3.0)
        cands = candidate_frequencies(spec)
        assert [c.label for c in cands.accepted] == [FrequencyLabel.SUM_ROOT]
        assert len(cands.rejected) == 3

    def test_coordinate_accepted_set(self):
        cands = candidate_frequencies(COORDINATE)
        by_label = {c.label: c.w for c in cands.accepted}
        assert by_label[FrequencyLabel.SUM_ROOT] == pytest.approx(0.5)
        assert by_label[FrequencyLabel.DIFF_ROOT] == pytest.approx(1 / 18)
        assert by_label[FrequencyLabel.VARIATIONAL] == pytest.approx(1 / 6)
        assert {r.label for r in cands.rejected} == {
            FrequencyLabel.NEG_DIFF_ROOT
        }

    def test_coordinate_flipped_accepted_set(self):
        cands = candidate_frequencies(COORDINATE_FLIPPED)
        by_label = {c.label: c.w for c in cands.accepted}
        assert by_label[FrequencyLabel.DIFF_ROOT] == pytest.approx(1 / 18)
        assert by_label[FrequencyLabel.NEG_DIFF_ROOT] == pytest.approx(0.5)
        assert {r.label for r in cands.rejected} == {
            FrequencyLabel.SUM_ROOT,
            FrequencyLabel.VARIATIONAL,
        }

    def test_rejection_reason_names_the_inequality(self):
        cands = candidate_frequencies(MOMENTUM)
        with pytest.raises(DomainError, match="not > 0"):
            cands.get(FrequencyLabel.DIFF_ROOT)

    def test_roots_zero_one_band(self):
        # sum and diff kill u, negdiff kills v; |d| is pinned either way
        for spec, scale in (
            (MOMENTUM, MOMENTUM.W),
            (MOMENTUM_FLIPPED, MOMENTUM_FLIPPED.W),
            (COORDINATE, COORDINATE.L),
            (COORDINATE_FLIPPED, COORDINATE_FLIPPED.L),
        ):
            for choice in candidate_frequencies(spec).accepted:
                if choice.label is FrequencyLabel.VARIATIONAL:
                    continue
                q = coefficients(spec, choice.w)
                assert min(abs(q.u), abs(q.v)) < 1e-12
                assert abs(q.d) == pytest.approx(2 * scale, rel=1e-13)


class TestVariational:
    @pytest.mark.parametrize("spec", [MOMENTUM, COORDINATE])
    def test_minimizes_diagonal_scale_on_log_grid(self, spec):
        choice = variational_frequency(spec)
        d_star = coefficients(spec, choice.w).d
        grid = [
            choice.w * 10.0 ** (-2.0 + 4.0 * k / 999.0) for k in range(1000)
        ]
        assert all(coefficients(spec, w).d >= d_star - 1e-12 for w in grid)

    @pytest.mark.parametrize("spec", [MOMENTUM, COORDINATE])
    def test_stationary_by_central_difference(self, spec):
        choice = variational_frequency(spec)
        h = 1e-6 * choice.w
        slope = (
            coefficients(spec, choice.w + h).d
            - coefficients(spec, choice.w - h).d
        ) / (2 * h)
        assert abs(slope) < 1e-6

    def test_undefined_when_shift_dominates(self):
        with pytest.raises(DomainError, match="not > 0"):
            variational_frequency(MOMENTUM_FLIPPED)


class TestResolveFrequency:
    def test_manual_requires_w(self):
        with pytest.raises(DomainError, match="requires an explicit w"):
            resolve_frequency(MOMENTUM, "manual")

    def test_named_strategy_forbids_w(self):
        with pytest.raises(DomainError, match="does not take"):
            resolve_frequency(MOMENTUM, "sum", manual_w=3.0)

    def test_manual_choice_carries_label(self):
        choice = resolve_frequency(MOMENTUM, "manual", manual_w=2.5)
        assert choice.label is FrequencyLabel.MANUAL
        assert choice.w == 2.5

    def test_inadmissible_root_surfaces_reason(self):
        with pytest.raises(DomainError, match="not > 0"):
            resolve_frequency(MOMENTUM, "diff")

    def test_accepts_enum_or_string(self):
        a = resolve_frequency(MOMENTUM, FrequencyLabel.SUM_ROOT)
        b = resolve_frequency(MOMENTUM, "sum")
        assert a == b


class TestClosedFormEnergy:
    def test_sum_root_ladder(self):
        choice = resolve_frequency(MOMENTUM, "sum")
        values = [closed_form_energy(MOMENTUM, choice, n) for n in range(5)]
        assert values == pytest.approx([10, 30, 50, 70, 90], abs=1e-12)

    def test_diff_root_is_negative_ladder(self):
        choice = resolve_frequency(MOMENTUM_FLIPPED, "diff")
        values = [
            closed_form_energy(MOMENTUM_FLIPPED, choice, n) for n in range(4)
        ]
        assert values == pytest.approx(
            [-5.4, -16.2, -27.0, -37.8], abs=1e-12
        )

    def test_coordinate_negdiff_ladder(self):
        choice = resolve_frequency(COORDINATE_FLIPPED, "negdiff")
        values = [
            closed_form_energy(COORDINATE_FLIPPED, choice, n) for n in range(4)
        ]
        assert values == pytest.approx([-8.0, -24.0, -40.0, -56.0], abs=1e-12)

    def test_rejects_negative_level(self):
        choice = resolve_frequency(MOMENTUM, "sum")
        with pytest.raises(DomainError):
            closed_form_energy(MOMENTUM, choice, -1)


class TestSpecValidation:
    def test_momentum_requires_positive_well(self):
        with pytest.raises(DomainError):
            OscillatorSpec.momentum_shift(W=0.0, L=1.0)
        with pytest.raises(DomainError):
            OscillatorSpec.momentum_shift(W=-3.0)

    def test_momentum_rejects_negative_shift(self):
        with pytest.raises(DomainError):
            OscillatorSpec.momentum_shift(W=1.0, L=-0.5)

    def test_coordinate_requires_positive_kinetic_weight(self):
        with pytest.raises(DomainError):
            OscillatorSpec.coordinate_shift(L=0.0, R=1.0)

    def test_cross_family_fields_rejected(self):
        with pytest.raises(DomainError):
            OscillatorSpec(family=Family.MOMENTUM_SHIFT, W=1.0, R=2.0)
        with pytest.raises(DomainError):
            OscillatorSpec(family=Family.COORDINATE_SHIFT, W=1.0, L=1.0)

    def test_frequency_choice_must_be_positive_finite(self):
        with pytest.raises(DomainError):
            FrequencyChoice(FrequencyLabel.MANUAL, 0.0)
        with pytest.raises(DomainError):
            FrequencyChoice(FrequencyLabel.MANUAL, float("nan"))
        with pytest.raises(DomainError):
            FrequencyChoice(FrequencyLabel.MANUAL, float("inf"))

    def test_candidates_get_unknown_label(self):
        empty = CandidateFrequencies((), ())
        with pytest.raises(DomainError):
            empty.get(FrequencyLabel.SUM_ROOT)
