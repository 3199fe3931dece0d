import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import samples
from kroc import (
    LabeledSample,
    PointMetric,
    auc_ks,
    auc_pairwise_oracle,
    auc_roc,
    build_curves,
    build_ks,
    build_roc,
    gen_ideal,
    gen_random,
    gini,
    max_ks2,
    max_ks2_projection,
    mvd,
    polyline_area,
    verify_identity,
)
from oracles import ks_points, pairwise_auc, roc_points
from oracles import polyline_area as exact_area

# exact values for the nine-example case, from oracles.pairwise_auc and
# oracles.polyline_area (frozen)
WORKED_AUC_ROC = Fraction(13, 18)
WORKED_AUC_KS = Fraction(2, 9)


def all_tied(n=6):
    return LabeledSample(np.full(n, 0.3), [1, 0] * (n // 2))


class TestAreas:
    def test_worked_roc(self, worked_sample):
        assert auc_roc(build_roc(worked_sample)) == pytest.approx(float(WORKED_AUC_ROC), abs=1e-15)

    def test_worked_ks(self, worked_sample):
        assert auc_ks(build_ks(worked_sample)) == pytest.approx(float(WORKED_AUC_KS), abs=1e-15)

    def test_ideal(self):
        s = gen_ideal(7, 2)
        assert auc_roc(build_roc(s)) == 1.0
        assert auc_ks(build_ks(s)) == 0.5

    def test_anti_ideal(self):
        s = LabeledSample.from_ranked_labels([0, 0, 0, 1, 1])
        assert auc_ks(build_ks(s)) == -0.5
        assert auc_roc(build_roc(s)) == 0.0

    def test_diagonal(self):
        assert auc_roc(build_roc(all_tied())) == 0.5
        assert auc_ks(build_ks(all_tied())) == 0.0

    @given(samples())
    @settings(max_examples=200, deadline=None)
    def test_exact_rational_areas(self, s):
        scores, labels = s.scores.tolist(), s.labels.tolist()
        exact_roc = exact_area(roc_points(scores, labels))
        exact_ks = exact_area(ks_points(scores, labels))
        # the identity holds exactly in rational arithmetic
        assert exact_roc - Fraction(1, 2) == exact_ks
        roc, ks = build_curves(s)
        assert auc_roc(roc, exact=True) == exact_roc
        assert auc_ks(ks, exact=True) == exact_ks
        assert abs(auc_roc(roc) - float(exact_roc)) < 1e-14
        assert abs(auc_ks(ks) - float(exact_ks)) < 1e-14
        assert -0.5 <= auc_ks(ks) <= 0.5


class TestPolylineArea:
    def test_triangle(self):
        assert polyline_area([0, 0.25, 1], [0, 1, 0]) == 0.5

    def test_signed(self):
        assert polyline_area([0, 0.5, 1], [0, -1, 0]) == -0.5

    def test_agrees_with_count_based_area(self, worked_sample):
        ks = build_ks(worked_sample)
        assert polyline_area(ks.x, ks.y) == pytest.approx(auc_ks(ks), abs=1e-15)

    def test_large_ints_path(self):
        # counts large enough to leave the int64 fast path
        ks = build_ks(gen_random(3_000_000, 1_500_000, seed=0))
        assert abs(polyline_area(ks.x, ks.y) - auc_ks(ks)) < 1e-9


class TestIdentity:
    def test_worked(self, worked_sample):
        r = verify_identity(worked_sample)
        assert r.auc_roc == pytest.approx(13 / 18, abs=1e-15)
        assert r.auc_ks == pytest.approx(2 / 9, abs=1e-15)
        assert abs(r.identity_residual) < 1e-15
        assert r.gini == pytest.approx(4 / 9, abs=1e-15)

    def test_large_random(self):
        r = verify_identity(gen_random(10_000, 3_000, seed=11))
        assert abs(r.identity_residual) < 1e-8

    def test_ideal(self):
        r = verify_identity(gen_ideal(50, 13))
        assert (r.auc_roc, r.auc_ks, r.identity_residual) == (1.0, 0.5, 0.0)

    @given(samples(max_size=200))
    @settings(max_examples=200, deadline=None)
    def test_residual_and_gini(self, s):
        r = verify_identity(s)
        assert abs(r.identity_residual) < 1e-12
        assert abs(r.gini - (2 * r.auc_roc - 1)) < 1e-12
        assert abs(r.gini - 2 * r.auc_ks) < 1e-12


class TestPointMetrics:
    def test_worked(self, worked_sample):
        roc, ks = build_curves(worked_sample)
        assert max_ks2(ks) == PointMetric(0.5, 6, 6 / 9)
        m = mvd(roc)
        assert (m.value, m.rank) == (0.5, 6)
        assert (roc.u[6], roc.v[6]) == (0.5, 1.0)
        proj = max_ks2_projection(roc)
        assert proj.rank == 6
        assert abs(proj.value - 0.5 / math.sqrt(2)) < 1e-12

    def test_diagonal(self):
        roc, ks = build_curves(all_tied())
        assert max_ks2(ks) == PointMetric(0.0, 0, 0.0)
        assert mvd(roc).value == 0.0
        assert max_ks2_projection(roc).value == 0.0

    def test_ideal(self):
        roc, ks = build_curves(gen_ideal(10, 4))
        assert max_ks2(ks) == PointMetric(1.0, 4, 0.4)
        m = mvd(roc)
        assert m.value == 1.0 and (roc.u[m.rank], roc.v[m.rank]) == (0.0, 1.0)
        assert max_ks2_projection(roc).value == pytest.approx(1 / math.sqrt(2), abs=1e-15)

    def test_plateau_takes_smallest_rank(self):
        # y reaches 1/2 at ranks 1 and 3
        ks = build_ks(LabeledSample.from_ranked_labels([1, 0, 1, 0]))
        assert max_ks2(ks).rank == 1

    def test_signed_not_absolute(self):
        ks = build_ks(LabeledSample.from_ranked_labels([0, 0, 1, 0, 1, 1]))
        assert ks.y.min() < -max_ks2(ks).value

    @given(samples())
    @settings(max_examples=200, deadline=None)
    def test_equivalences(self, s):
        roc, ks = build_curves(s)
        a, b, c = max_ks2(ks), mvd(roc), max_ks2_projection(roc)
        assert (a.value, a.rank) == (b.value, b.rank)
        assert c.rank == b.rank
        assert abs(c.value * math.sqrt(2) - b.value) < 1e-12
        # value is the curve's own quantity at that vertex
        i = list(ks.rank).index(a.rank)
        assert ks.y[i] == a.value and ks.x[i] == a.x

    @given(samples())
    @settings(max_examples=100, deadline=None)
    def test_monotone_score_invariance(self, s):
        t = LabeledSample(2.0 * s.scores ** 3 - 1.0, s.labels)
        r1, r2 = verify_identity(s), verify_identity(t)
        assert r1 == r2
        assert max_ks2(build_ks(s)) == max_ks2(build_ks(t))


class TestGini:
    @pytest.mark.parametrize("auc,expected", [(13 / 18, 4 / 9), (0.5, 0.0), (1.0, 1.0)])
    def test_examples(self, auc, expected):
        assert gini(auc) == pytest.approx(expected, abs=1e-15)


class TestPairwiseOracle:
    def test_worked(self, worked_sample):
        assert auc_pairwise_oracle(worked_sample) == pytest.approx(13 / 18, abs=1e-15)
        assert pairwise_auc(worked_sample.scores.tolist(), worked_sample.labels.tolist()) == WORKED_AUC_ROC

    def test_all_tied(self):
        assert auc_pairwise_oracle(all_tied()) == 0.5

    def test_ideal(self):
        assert auc_pairwise_oracle(gen_ideal(12, 5)) == 1.0

    @given(samples(max_size=80))
    @settings(max_examples=200, deadline=None)
    def test_matches_trapezoid(self, s):
        assert abs(auc_pairwise_oracle(s) - auc_roc(build_roc(s))) < 1e-12

    def test_block_independent(self):
        s = gen_random(500, 130, seed=3)
        assert auc_pairwise_oracle(s, block=7) == auc_pairwise_oracle(s, block=10_000)
