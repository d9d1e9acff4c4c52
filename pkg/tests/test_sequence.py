"""Tests for the four sequence algorithms and their cross-agreement."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deficit_takagi.sequence import (
    INDEX_LIMIT,
    compute,
    compute_all,
    cumulative_closed_form,
    cumulative_naive,
    cumulative_naive_range,
    cumulative_recurrence,
    cumulative_takagi,
    deficient_digit_sum,
    floor_log2,
    naive_range,
    recurrence_applications,
    set_cardinality,
    set_membership,
)

# Frozen from the brute-force oracle (per-integer digit deficits summed):
# small values recomputed by hand, larger ones by cumulative_naive_range.
KNOWN_TERMS = {
    0: 0, 1: 1, 2: 1, 3: 3, 4: 2, 5: 3, 6: 4, 7: 7, 8: 5,
    10: 5, 13: 9, 20: 10, 26: 16, 42: 21, 46: 27, 84: 42,
    100: 58, 106: 64,
}

ALL_METHODS = (cumulative_naive, set_cardinality, cumulative_recurrence,
               cumulative_closed_form, cumulative_takagi)


class TestDeficientDigitSum:
    def test_examples(self):
        assert deficient_digit_sum(5) == 1  # 101
        assert deficient_digit_sum(2) == 0  # 10
        assert deficient_digit_sum(15) == 4  # 1111
        assert deficient_digit_sum(1) == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            deficient_digit_sum(0)

    @given(st.integers(min_value=1, max_value=(INDEX_LIMIT - 1) // 2))
    def test_appending_a_bit(self, m):
        # appending 0 loses one, appending 1 gains one
        d = deficient_digit_sum(m)
        assert deficient_digit_sum(2 * m) == d - 1
        assert deficient_digit_sum(2 * m + 1) == d + 1


class TestFloorLog2:
    def test_brackets_powers(self):
        for k in range(0, 61):
            assert floor_log2(1 << k) == k
            if k:
                assert floor_log2((1 << k) - 1) == k - 1
                assert floor_log2((1 << k) + 1) == k

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            floor_log2(0)


class TestCumulativeNaive:
    def test_known_terms(self):
        for n, term in KNOWN_TERMS.items():
            assert cumulative_naive(n) == term, n

    def test_power_anchors(self):
        prefix = cumulative_naive_range(1 << 12)
        for k in range(1, 13):
            assert prefix[(1 << k) - 1] == (1 << k) - 1
            assert prefix[1 << k] == (1 << k) - k

    def test_prefix_matches_scalar(self):
        prefix = cumulative_naive_range(300)
        assert prefix == [cumulative_naive(n) for n in range(301)]

    def test_stream(self):
        assert list(naive_range(0, 5)) == [(0, 0), (1, 1), (2, 1), (3, 3), (4, 2), (5, 3)]
        assert list(naive_range(99, 100)) == [(99, 59), (100, 58)]

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            cumulative_naive(-1)
        with pytest.raises(ValueError):
            cumulative_recurrence(INDEX_LIMIT + 1)
        assert cumulative_recurrence(INDEX_LIMIT) == INDEX_LIMIT - 60


class TestSetMembership:
    def test_examples(self):
        assert set_membership(1, 1) is True
        assert set_membership(2, 3) is True
        assert set_membership(1, 2) is False

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            set_membership(0, 5)
        with pytest.raises(ValueError):
            set_membership(6, 5)

    def test_cardinality_counts_memberships(self):
        for n in range(0, 400):
            direct = sum(set_membership(m, n) for m in range(1, n + 1))
            assert set_cardinality(n) == direct, n

    def test_initial_cardinalities(self):
        assert [set_cardinality(n) for n in range(3)] == [0, 1, 1]
        assert set_cardinality(5) == 3
        assert set_cardinality(10) == 5


class TestRecurrence:
    def test_known_terms(self):
        for n, term in KNOWN_TERMS.items():
            assert cumulative_recurrence(n) == term, n

    def test_large_power(self):
        assert cumulative_recurrence(1 << 20) == (1 << 20) - 20

    def test_application_bound(self):
        for n in list(range(1, 2000)) + [INDEX_LIMIT - 1, INDEX_LIMIT]:
            assert recurrence_applications(n) <= floor_log2(n) + 1, n
        assert recurrence_applications(0) == 0

    def test_applications_count_set_bits(self):
        # one application per stripped bit, including the base case
        assert recurrence_applications(0b10110) == 3
        assert recurrence_applications(1 << 19) == 1


class TestClosedForms:
    def test_known_terms(self):
        for n, term in KNOWN_TERMS.items():
            if n:
                assert cumulative_closed_form(n) == term, n
                assert cumulative_takagi(n) == term, n

    def test_index_origin(self):
        assert cumulative_closed_form(0) == 0
        assert cumulative_takagi(0) == 0

    def test_unit_argument(self):
        # n = 1: the tau argument degenerates to an endpoint where tau = 0
        assert cumulative_closed_form(1) == 1
        assert cumulative_takagi(1) == 1

    def test_all_ones_indices(self):
        for k in range(1, 20):
            assert cumulative_takagi((1 << k) - 1) == (1 << k) - 1


class TestDispatch:
    def test_compute_methods_agree(self):
        assert compute(5) == 3
        assert compute(5, "naive") == compute(5, "sets") == compute(5, "lemma2") == 3

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            compute(5, "magic")

    def test_compute_all(self):
        values = compute_all(46)
        assert list(values) == ["naive", "sets", "recurrence", "lemma2", "takagi"]
        assert set(values.values()) == {27}


class TestCrossOracle:
    def test_all_methods_agree_exhaustively(self):
        prefix = cumulative_naive_range(1 << 12)
        for n in range(0, (1 << 12) + 1):
            expected = prefix[n]
            assert set_cardinality(n) == expected, n
            assert cumulative_recurrence(n) == expected, n
            assert cumulative_closed_form(n) == expected, n
            assert cumulative_takagi(n) == expected, n

    @given(st.integers(min_value=1, max_value=INDEX_LIMIT))
    @settings(max_examples=300)
    def test_log_methods_agree_at_large_indices(self, n):
        term = cumulative_recurrence(n)
        assert cumulative_closed_form(n) == term
        assert cumulative_takagi(n) == term

    @given(st.integers(min_value=0, max_value=1 << 14))
    @settings(max_examples=80)
    def test_naive_matches_fast_paths(self, n):
        assert cumulative_naive(n) == cumulative_recurrence(n)


class TestBounds:
    def test_sandwich(self):
        prefix = cumulative_naive_range(1 << 12)
        for n, term in enumerate(prefix):
            assert 2 * term >= n, n
            assert term <= n, n

    @given(st.integers(min_value=0, max_value=INDEX_LIMIT))
    @settings(max_examples=300)
    def test_sandwich_large(self, n):
        term = cumulative_recurrence(n)
        assert n <= 2 * term and term <= n


class TestStructuralRelations:
    def test_msb_strip_relation(self):
        # term(n + 2^k) - term(n) is the stated affine expression, k <= 14
        for k in range(1, 15):
            for n in range(1, 1 << k):
                j = n.bit_length() - 1
                step = (n + 1) * (j - k + 2) + (1 << k) - (1 << (j + 1))
                assert cumulative_recurrence(n + (1 << k)) == cumulative_recurrence(n) + step

    def test_msb_strip_relation_on_set_counts(self):
        for k in range(1, 15):
            for n in range(1, 1 << k):
                j = n.bit_length() - 1
                step = (n + 1) * (j - k + 2) + (1 << k) - (1 << (j + 1))
                assert set_cardinality(n + (1 << k)) == set_cardinality(n) + step

    def test_half_power_shift(self):
        # for 2 <= n < 3*2^(floor_log2(n)-1), shifting by 2^(floor_log2(n)-1)
        for n in range(2, (1 << 14) + 1):
            k = n.bit_length() - 1
            if n < 3 * (1 << (k - 1)):
                lhs = cumulative_recurrence(n + (1 << (k - 1)))
                assert lhs == cumulative_recurrence(n) + 2 * (n + 1) - (1 << (k + 1))
