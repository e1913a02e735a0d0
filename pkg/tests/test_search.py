"""Exhaustive self-reciprocal enumeration and small-measure search."""
import pytest

from mahlerlab.polycore import Polynomial, structural_flags
from mahlerlab.search import (
    SearchSpaceError,
    enumerate_selfreciprocal,
    search_min_mahler,
)

LEHMER = Polynomial([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])


class TestEnumeration:
    def test_count(self):
        # free coefficients a_1..a_n each in {-h..h}
        assert sum(1 for _ in enumerate_selfreciprocal(4, 1)) == 9
        assert sum(1 for _ in enumerate_selfreciprocal(10, 1)) == 243
        assert sum(1 for _ in enumerate_selfreciprocal(2, 2)) == 5

    def test_all_selfreciprocal_monic(self):
        for p in enumerate_selfreciprocal(6, 1):
            assert p.is_monic()
            assert structural_flags(p).self_reciprocal

    def test_deterministic_order(self):
        a = [p.coeffs for p in enumerate_selfreciprocal(4, 1)]
        b = [p.coeffs for p in enumerate_selfreciprocal(4, 1)]
        assert a == b

    def test_validation(self):
        with pytest.raises(ValueError):
            list(enumerate_selfreciprocal(5, 1))
        with pytest.raises(SearchSpaceError):
            list(enumerate_selfreciprocal(40, 10, size_cap=1000))


class TestSearch:
    def test_degree2_empty(self):
        assert search_min_mahler(2, 1, 1.3) == []

    def test_lehmer_found_and_minimal(self):
        records = search_min_mahler(10, 1, 1.3)
        assert records
        top = records[0]
        assert top.rank == 1
        assert top.polynomial == LEHMER
        assert abs(top.measure.value - 1.176280) < 1e-5
        # unique minimum: next measure is strictly larger
        if len(records) > 1:
            assert records[1].measure.value > top.measure.value + 1e-6

    def test_tight_theta_isolates_lehmer(self):
        records = search_min_mahler(10, 1, 1.18)
        assert len(records) == 1
        assert records[0].polynomial == LEHMER

    def test_measures_in_range_and_sorted(self):
        records = search_min_mahler(8, 1, 1.3)
        values = [r.measure.value for r in records]
        assert values == sorted(values)
        for r in records:
            assert 1.0 < r.measure.value < 1.3
            assert structural_flags(r.polynomial).primitive_c1

    def test_no_neg_x_duplicates(self):
        records = search_min_mahler(10, 1, 1.3)
        seen = set()
        for r in records:
            assert r.polynomial.coeffs not in seen
            seen.add(r.polynomial.coeffs)
            mirror = r.polynomial.substitute_neg_x().coeffs
            assert mirror == r.polynomial.coeffs or mirror not in seen
