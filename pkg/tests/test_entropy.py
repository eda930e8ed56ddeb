from fractions import Fraction

import pytest

from core.combinatorics import Composition, Permutation, standardize_series
from core.errors import DimensionError
from core.entropy import (ordinal_counts, ordinal_distribution, permutation_entropy, shannon_entropy,
                          vincular_counts, vincular_distribution, vincular_entropy)
from core.parser import parse_pattern
from core.signatures import fixed_delay_gaps, gpc_delay_count

SERIES = [1, 3, 4, 2, 6, 5]


def P(digits):
    return Permutation(tuple(int(ch) for ch in digits))


class TestOrdinalPatterns:
    def test_order_two_distribution(self):
        assert ordinal_distribution(SERIES, 2) == {P("12"): Fraction(3, 5), P("21"): Fraction(2, 5)}

    def test_entropy_value(self):
        report = permutation_entropy(SERIES, 2)
        assert report.entropy == pytest.approx(0.673012, abs=1e-6)
        assert report.normalized_entropy == pytest.approx(0.970951, abs=1e-6)
        assert report.dominant_pattern == P("12")

    def test_base_two(self):
        report = permutation_entropy(SERIES, 2, base=2)
        assert report.entropy == pytest.approx(0.970951, abs=1e-6)
        assert report.to_dict()["base"] == 2

    def test_monotone_series_has_zero_entropy(self):
        report = permutation_entropy(list(range(10)), 3)
        assert report.counts == {P("123"): 8}
        assert report.entropy == 0.0

    def test_ties_rank_left_to_right(self):
        assert ordinal_counts([5, 5, 5], 2) == {P("12"): 2}

    def test_too_short(self):
        with pytest.raises(DimensionError):
            ordinal_counts([1, 2], 3)
        with pytest.raises(DimensionError):
            ordinal_counts([1, 2, 3, 4], 2, delay=4)

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            ordinal_counts(SERIES, 0)
        with pytest.raises(ValueError):
            ordinal_counts(SERIES, 2, delay=0)
        with pytest.raises(ValueError):
            shannon_entropy({P("1"): Fraction(1)}, base=1)

    @pytest.mark.parametrize("order, delay", [(2, 1), (2, 2), (3, 1), (3, 2)])
    def test_delayed_counts_are_vincular_counts(self, order, delay):
        series = [0.3, 1.7, -2.0, 4.1, 0.9, 2.2, 3.5, -1.1, 0.0]
        host = standardize_series(series)
        L = Composition((len(series),))
        gaps = fixed_delay_gaps(order, delay)
        for sigma, count in ordinal_counts(series, order, delay).items():
            assert count == gpc_delay_count(L, host, sigma, gaps)

    def test_report_dict(self):
        data = permutation_entropy(SERIES, 2).to_dict()
        assert data["mode"] == "consecutive"
        assert data["base"] == "e"
        assert data["counts"] == {"12": 3, "21": 2}
        assert data["frequencies"] == {"12": "3/5", "21": "2/5"}


class TestVincularMode:
    def test_counts_and_distribution(self):
        patterns = [parse_pattern("21|3"), parse_pattern("2|1")]
        assert vincular_counts(SERIES, patterns) == {patterns[0]: 2, patterns[1]: 3}
        assert vincular_distribution(SERIES, patterns) == {patterns[0]: Fraction(2, 5), patterns[1]: Fraction(3, 5)}

    def test_entropy_matches_consecutive_descents(self):
        patterns = [parse_pattern("12|"), parse_pattern("21|")]
        report = vincular_entropy(SERIES, patterns)
        assert report.mode == "vincular"
        assert report.entropy == pytest.approx(permutation_entropy(SERIES, 2).entropy)

    def test_partition_is_respected(self):
        patterns = [parse_pattern("12|"), parse_pattern("21|")]
        counts = vincular_counts(SERIES, patterns, Composition((3, 3)))
        assert counts == {patterns[0]: 3, patterns[1]: 1}

    def test_needs_patterns(self):
        with pytest.raises(ValueError):
            vincular_counts(SERIES, [])
