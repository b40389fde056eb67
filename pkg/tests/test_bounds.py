"""Closed-form bound formulas, their sandwich property, and the transform."""

import math

import numpy as np
import pytest

from genhuff import (
    BoundKind,
    CombineRule,
    L1Region,
    Objective,
    POutOfRange,
    PreconditionUnmet,
    QOutOfRange,
    avg_redundancy_lower,
    avg_redundancy_upper_gallager,
    benford,
    brute_force_optimal,
    dth_bounds,
    dth_exp_redundancy,
    exp_average_cost,
    exp_avg_bounds,
    exp_avg_bounds_l1,
    exp_avg_unit_bounds,
    generalized_huffman,
    hat_transform,
    l1_region,
    lambda_j,
    mmpr_bounds,
    mmpr_length_bounds,
    renyi_entropy,
    alpha_of_q,
    enumerate_kraft_lengths,
    unary_code,
    validate_pmf,
)

MOAB_03 = 0.009235350264498055
MOAB_07 = 0.11870910076930738
GALLAGER_08386 = 0.5237516958937668
MMPR_EXACT_075 = 0.5849625007211562
MMPR_03_LOWER = 0.26303440583379383
MMPR_03_UPPER = 0.9004643264490856
HAT_P1_06 = 0.8386526223472893
HAT_P1_2 = 0.19223700070110032
COR2_Q2 = (3.0396614845441448, 3.9107123007008599)
COR2_Q06 = (2.2596011654072414, 2.7834253550425707)
COR3_COST = (2.3720072937023156, 2.7070703321964154)
COR3_SUCCESS = (0.25086486004891147, 0.29769610181592664)
RENYI_06 = 2.2596011654072414
RENYI_2 = 3.0260632547325282


def random_pmf(rng, n):
    while True:
        raw = rng.dirichlet(np.ones(n))
        if raw.min() > 1e-9:
            return validate_pmf([float(x) for x in raw])


class TestMmprBounds:
    def test_exact_region(self):
        r = mmpr_bounds(0.75)
        assert r.exact == pytest.approx(MMPR_EXACT_075, abs=1e-12)
        assert r.lower == r.upper == r.exact
        assert r.lower_kind is BoundKind.EXACT

    def test_degenerate_full_mass(self):
        assert mmpr_bounds(1.0).exact == 0.0

    def test_half_to_two_thirds(self):
        r = mmpr_bounds(0.55)
        assert r.lower == pytest.approx(1 + math.log2(0.55), abs=1e-12)
        assert r.upper == pytest.approx(2 + math.log2(0.45), abs=1e-12)
        assert r.lower_kind is BoundKind.ACHIEVABLE
        assert r.upper_kind is BoundKind.APPROACHABLE

    def test_table_form_equals_general_form_on_the_seam(self):
        # 2 + lg(1-p) and 1 + lg((1-p)/(1-2^-1)) are the same expression
        for p in (0.5, 0.55, 0.6, 0.66):
            assert 2 + math.log2(1 - p) == pytest.approx(
                1 + math.log2((1 - p) / (1 - 0.5)), abs=1e-12)

    def test_first_interval_example(self):
        r = mmpr_bounds(0.3)
        assert lambda_j(0.3) == 2
        assert r.lower == pytest.approx(MMPR_03_LOWER, abs=1e-12)
        assert r.upper == pytest.approx(MMPR_03_UPPER, abs=1e-12)
        assert r.upper_kind is BoundKind.APPROACHABLE

    def test_closed_upper_interval(self):
        # third row's upper end carries a closed bracket
        r = mmpr_bounds(0.45)
        assert r.upper == pytest.approx(2 + math.log2(0.45), abs=1e-12)
        assert r.upper_kind is BoundKind.ACHIEVABLE
        assert r.lower == pytest.approx(math.log2(0.55 / 0.5), abs=1e-12)

    def test_powers_of_two_give_unit_interval_exactly(self):
        for k in range(2, 20):
            r = mmpr_bounds(2.0 ** -k)
            assert r.lower == 0.0
            assert r.upper == 1.0
            assert r.lower_kind is BoundKind.ACHIEVABLE
            assert r.upper_kind is BoundKind.APPROACHABLE

    def test_matches_general_min_max_forms(self):
        for p in (0.3, 0.26, 0.34, 0.2, 0.13, 0.07, 0.012):
            lam = lambda_j(p)
            r = mmpr_bounds(p)
            lo = min(lam + math.log2(p),
                     math.log2((1 - p) / (1 - 2.0 ** (1 - lam))))
            hi = max(1 + math.log2((1 - p) / (1 - 2.0 ** -lam)),
                     lam + math.log2(p))
            assert r.lower == pytest.approx(lo, abs=1e-12)
            assert r.upper == pytest.approx(hi, abs=1e-12)

    def test_domain(self):
        for bad in (0.0, -0.1, 1.1):
            with pytest.raises(POutOfRange):
                mmpr_bounds(bad)

    def test_sandwich_randomized(self):
        rng = np.random.default_rng(51)
        for _ in range(400):
            p = random_pmf(rng, int(rng.integers(2, 9)))
            star = brute_force_optimal(p, Objective.max_pointwise()).min_value
            for idx, pj in enumerate(p):
                r = mmpr_bounds(pj, is_p1=(idx == 0))
                assert r.lower - 1e-9 <= star <= r.upper + 1e-9
                if r.upper_kind is BoundKind.APPROACHABLE:
                    assert star <= r.upper + 1e-12


class TestMmprLengthBounds:
    def test_examples(self):
        assert mmpr_length_bounds(0.5) == (1, 1)
        assert mmpr_length_bounds(1 / 3) == (2, 2)
        assert mmpr_length_bounds(0.01) == (7, 6)

    def test_upper_equals_shannon_length(self):
        for p in (0.9, 0.5, 0.3, 0.12, 0.007):
            assert mmpr_length_bounds(p)[0] == lambda_j(p)

    def test_defining_inequalities(self):
        for p in (0.9, 0.37, 0.11, 0.031, 0.0007):
            nu_upper, nu_lower = mmpr_length_bounds(p)
            assert p >= 2.0 ** -nu_upper
            assert p < 2.0 ** -(nu_upper - 1) or nu_upper == 1
            assert p * (2 ** nu_lower - 1) <= 1.0
            assert p * (2 ** (nu_lower + 1) - 1) > 1.0

    def test_domain(self):
        for bad in (0.0, 1.0):
            with pytest.raises(POutOfRange):
                mmpr_length_bounds(bad)


class TestAvgRedundancyBounds:
    def test_lower_vanishes_at_dyadic(self):
        for k in range(1, 12):
            assert avg_redundancy_lower(2.0 ** -k) == pytest.approx(0.0, abs=1e-12)

    def test_lower_frozen_values(self):
        assert avg_redundancy_lower(0.3) == pytest.approx(MOAB_03, abs=1e-12)
        assert avg_redundancy_lower(0.7) == pytest.approx(MOAB_07, abs=1e-12)

    def test_lower_sandwiches_oracle(self):
        rng = np.random.default_rng(52)
        for _ in range(200):
            p = random_pmf(rng, int(rng.integers(2, 8)))
            opt = brute_force_optimal(p, Objective.avg()).min_value
            for pj in p:
                assert avg_redundancy_lower(pj) <= opt + 1e-9

    def test_lower_near_one_stays_finite(self):
        assert 0.9 < avg_redundancy_lower(1 - 1e-15) <= 1.0

    def test_gallager_values(self):
        assert avg_redundancy_upper_gallager(0.8386) \
            == pytest.approx(GALLAGER_08386, abs=1e-12)
        assert avg_redundancy_upper_gallager(1 - 1e-12) == pytest.approx(1.0, abs=1e-9)
        assert avg_redundancy_upper_gallager(0.3) == pytest.approx(0.386)
        # the two branches stay within a small step of each other at 1/2
        assert abs(avg_redundancy_upper_gallager(0.5) - (0.5 + 0.086)) < 0.1

    def test_gallager_upper_bounds_oracle(self):
        rng = np.random.default_rng(53)
        for _ in range(200):
            p = random_pmf(rng, int(rng.integers(2, 8)))
            opt = brute_force_optimal(p, Objective.avg()).min_value
            assert opt <= avg_redundancy_upper_gallager(p.probs[0]) + 1e-9


class TestDthBounds:
    def test_dyadic_gives_unit_interval(self):
        for d in (0.25, 1.0, 4.0):
            r = dth_bounds(0.25, d)
            assert r.lower == 0.0
            assert r.upper == 1.0

    def test_positive_d_combines_both_sources(self):
        r = dth_bounds(0.7, 3.0)
        assert r.lower == pytest.approx(MOAB_07, abs=1e-12)
        assert r.upper == pytest.approx(1 + math.log2(0.7), abs=1e-12)

    def test_negative_d_zero_floor_and_min_upper(self):
        r = dth_bounds(0.7, -0.5, is_p1=True)
        assert r.lower == 0.0
        assert r.upper == pytest.approx(
            min(1 + math.log2(0.7), avg_redundancy_upper_gallager(0.7)), abs=1e-12)
        r2 = dth_bounds(0.7, -0.5, is_p1=False)
        assert r2.upper == pytest.approx(1 + math.log2(0.7), abs=1e-12)

    def test_domain(self):
        for d in (0.0, -1.0):
            with pytest.raises(Exception):
                dth_bounds(0.3, d)

    def test_sandwich_randomized(self):
        rng = np.random.default_rng(54)
        for d in (0.25, 1.0, 4.0, -0.5):
            for _ in range(60):
                p = random_pmf(rng, int(rng.integers(2, 8)))
                rd = brute_force_optimal(p, Objective.dth_exp(d)).min_value
                for idx, pj in enumerate(p):
                    r = dth_bounds(pj, d, is_p1=(idx == 0))
                    assert r.lower - 1e-9 <= rd <= r.upper + 1e-9

    def test_subsumed_by_unit_interval(self):
        for p in (0.9, 0.61, 0.43, 0.18, 0.05):
            for d in (0.5, 2.0, -0.5):
                r = dth_bounds(p, d, is_p1=True)
                assert -1e-12 <= r.lower and r.upper <= 1.0 + 1e-12


class TestUnitBounds:
    def test_benford(self):
        r = exp_avg_unit_bounds(benford(), 0.6)
        assert r.lower == pytest.approx(RENYI_06, abs=1e-12)
        assert r.upper == pytest.approx(RENYI_06 + 1, abs=1e-12)
        r2 = exp_avg_unit_bounds(benford(), 2.0)
        assert r2.lower == pytest.approx(RENYI_2, abs=1e-12)

    def test_dyadic_uniform_attains_lower(self):
        for k in (1, 2, 3):
            p = validate_pmf([2.0 ** -k] * 2 ** k)
            for q in (0.7, 1.3, 2.0):
                r = exp_avg_unit_bounds(p, q)
                assert r.lower == pytest.approx(k, abs=1e-12)
                opt = brute_force_optimal(p, Objective.exp_average(q)).min_value
                assert opt == pytest.approx(k, abs=1e-12)

    def test_domain(self):
        for q in (0.5, 0.4, 1.0):
            with pytest.raises(QOutOfRange):
                exp_avg_unit_bounds(benford(), q)


class TestHatTransform:
    def test_benford_leading_values(self):
        assert hat_transform(benford(), 0.6).probs[0] \
            == pytest.approx(HAT_P1_06, abs=1e-12)
        assert hat_transform(benford(), 2.0).probs[0] \
            == pytest.approx(HAT_P1_2, abs=1e-12)

    def test_uniform_fixed_point(self):
        p = validate_pmf([0.2] * 5)
        for q in (0.6, 2.0):
            assert hat_transform(p, q).probs == pytest.approx((0.2,) * 5)

    def test_square_root_case(self):
        p = validate_pmf([0.64, 0.32, 0.04])
        roots = [math.sqrt(x) for x in (0.64, 0.32, 0.04)]
        total = sum(roots)
        assert hat_transform(p, 2.0).probs == pytest.approx(
            tuple(r / total for r in roots), abs=1e-12)

    def test_identity_randomized(self):
        rng = np.random.default_rng(55)
        for _ in range(150):
            p = random_pmf(rng, int(rng.integers(2, 9)))
            options = list(enumerate_kraft_lengths(p.n))
            code = options[int(rng.integers(len(options)))]
            q = float(rng.choice((0.6, 0.9, 1.5, 2.0)))
            lhs = dth_exp_redundancy(hat_transform(p, q), code, math.log2(q))
            rhs = exp_average_cost(p, code, q) - renyi_entropy(p, alpha_of_q(q))
            assert lhs == pytest.approx(rhs, abs=1e-9)


class TestExpAvgBounds:
    def test_benford_q2(self):
        r = exp_avg_bounds(benford(), 2.0, 1)
        assert r.lower == pytest.approx(COR2_Q2[0], abs=1e-12)
        assert r.upper == pytest.approx(COR2_Q2[1], abs=1e-12)

    def test_benford_q06(self):
        r = exp_avg_bounds(benford(), 0.6, 1)
        assert r.lower == pytest.approx(COR2_Q06[0], abs=1e-12)
        assert r.upper == pytest.approx(COR2_Q06[1], abs=1e-12)

    def test_dyadic_uniform(self):
        p = validate_pmf([0.25] * 4)
        r = exp_avg_bounds(p, 2.0, 1)
        assert r.lower == pytest.approx(2.0, abs=1e-12)

    def test_low_q_non_top_symbol_falls_back_to_unit(self):
        r = exp_avg_bounds(benford(), 0.6, 3)
        assert r.note is not None
        assert r.upper == pytest.approx(RENYI_06 + 1, abs=1e-12)

    def test_subsumed_by_unit_interval(self):
        rng = np.random.default_rng(56)
        for _ in range(100):
            p = random_pmf(rng, int(rng.integers(2, 8)))
            q = float(rng.choice((0.6, 0.9, 1.5, 2.0)))
            unit = exp_avg_unit_bounds(p, q)
            for j in range(1, p.n + 1):
                r = exp_avg_bounds(p, q, j)
                assert r.lower >= unit.lower - 1e-12
                assert r.upper <= unit.upper + 1e-12

    def test_sandwich_randomized(self):
        rng = np.random.default_rng(57)
        for q in (0.6, 0.9, 1.5, 2.0):
            for _ in range(60):
                p = random_pmf(rng, int(rng.integers(2, 8)))
                opt = brute_force_optimal(p, Objective.exp_average(q)).min_value
                for j in range(1, p.n + 1):
                    assert exp_avg_bounds(p, q, j).contains(opt)


class TestExpAvgBoundsL1:
    def test_benford_cost_and_success(self):
        r = exp_avg_bounds_l1(benford(), 0.6)
        assert r.lower == pytest.approx(COR3_COST[0], abs=1e-12)
        assert r.upper == pytest.approx(COR3_COST[1], abs=1e-12)
        assert 0.6 ** r.upper == pytest.approx(COR3_SUCCESS[0], abs=1e-12)
        assert 0.6 ** r.lower == pytest.approx(COR3_SUCCESS[1], abs=1e-12)

    def test_lower_bound_achieved_by_flat_tail(self):
        # one symbol plus four equal ones: the tail subtree has zero
        # redundancy, so the cost meets the bound exactly
        for p1, q in ((0.4, 0.75), (0.5, 0.8), (0.3, 0.55)):
            if p1 < 2 * q / (2 * q + 3):
                continue
            p = validate_pmf([p1] + [(1 - p1) / 4] * 4)
            r = exp_avg_bounds_l1(p, q)
            opt = brute_force_optimal(p, Objective.exp_average(q)).min_value
            assert opt == pytest.approx(r.lower, abs=1e-9)

    def test_upper_bound_approached(self):
        q, p1 = 0.75, 0.6
        gaps = []
        for eps in (1e-3, 1e-4, 1e-5):
            p = validate_pmf([p1, 1 - p1 - eps, eps])
            r = exp_avg_bounds_l1(p, q)
            opt = brute_force_optimal(p, Objective.exp_average(q)).min_value
            gap = r.upper - opt
            assert gap > 0
            gaps.append(gap)
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 1e-3

    def test_preconditions(self):
        with pytest.raises(PreconditionUnmet):
            exp_avg_bounds_l1(benford(), 1.5)
        with pytest.raises(PreconditionUnmet):
            exp_avg_bounds_l1(validate_pmf([0.2] * 5), 0.9)
        with pytest.raises(PreconditionUnmet):
            exp_avg_bounds_l1(validate_pmf([1.0]), 0.6)


class TestL1Region:
    def test_verdicts(self):
        assert l1_region(0.4, 0.01) is L1Region.ALWAYS_UNARY
        assert l1_region(0.5, 0.99) is L1Region.ALWAYS_UNARY
        assert l1_region(1.0, 0.4) is L1Region.GUARANTEED_L1
        assert l1_region(1.0, 0.399) is L1Region.NOT_GUARANTEED
        assert l1_region(2.0, 0.99) is L1Region.NOT_GUARANTEED
        assert l1_region(2.0, 1.0) is L1Region.GUARANTEED_L1
        assert l1_region(0.8, 2 * 0.8 / (2 * 0.8 + 3)) is L1Region.GUARANTEED_L1

    def test_consistency_with_coder(self):
        rng = np.random.default_rng(58)
        for _ in range(150):
            n = int(rng.integers(2, 9))
            q = float(rng.uniform(0.05, 1.0))
            if q == 1.0:
                continue
            p = random_pmf(rng, n)
            rule = CombineRule.exp_base(q)
            region = l1_region(q, p.probs[0])
            lengths = generalized_huffman(p, rule).lengths
            if region is L1Region.ALWAYS_UNARY:
                assert lengths.lengths == unary_code(n).lengths
            elif region is L1Region.GUARANTEED_L1:
                assert lengths.lengths[0] == 1

    def test_consistency_at_q_one_via_plain_huffman(self):
        rng = np.random.default_rng(59)
        for _ in range(100):
            n = int(rng.integers(2, 9))
            p = random_pmf(rng, n)
            if l1_region(1.0, p.probs[0]) is L1Region.GUARANTEED_L1:
                lengths = generalized_huffman(p, CombineRule.sum()).lengths
                assert lengths.lengths[0] == 1
