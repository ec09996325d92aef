"""Multiple-cover transform: coefficients against the brute-force oracle,
forward/inverse round trips, parity decoupling, integrality reporting."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realgw.multicover import (
    Convention,
    InvariantVector,
    cover_exponent,
    forward_transform,
    integrality_check,
    invert_transform,
    multicover_coefficient,
)
from series_oracle import oracle_cover_coefficient

F = Fraction
SINH, SIN = Convention.SINH, Convention.SIN

C1B_GRID = (-4, -2, 0, 2, 4, 8)


class TestCoefficient:
    @pytest.mark.parametrize(
        "h,c1b,g,conv,expected",
        [
            (1, 0, 0, SINH, F(1)),
            (2, 0, 1, SINH, F(1, 24)),
            (2, 0, 1, SIN, F(-1, 24)),
            (0, 0, 1, SINH, F(-1, 24)),
        ],
    )
    def test_examples(self, h, c1b, g, conv, expected):
        assert multicover_coefficient(h, c1b, g, conv) == expected

    def test_unitriangular(self):
        for h in range(0, 7):
            for c1b in C1B_GRID:
                for conv in (SINH, SIN):
                    assert multicover_coefficient(h, c1b, 0, conv) == 1

    def test_convention_relation_grid(self):
        for h in range(0, 7):
            for c1b in C1B_GRID:
                for g in range(0, 9):
                    sinh_val = multicover_coefficient(h, c1b, g, SINH)
                    sin_val = multicover_coefficient(h, c1b, g, SIN)
                    assert sin_val == (-1) ** g * sinh_val

    def test_oracle_spot_grid(self):
        # spot checks through t^24 (g = 12); the acceptance suite sweeps
        # the full grid
        for h in (0, 1, 3, 6):
            for c1b in (-2, 0, 4):
                for g in (0, 1, 2, 5, 12):
                    for conv in (SINH, SIN):
                        assert multicover_coefficient(
                            h, c1b, g, conv
                        ) == oracle_cover_coefficient(h, c1b, g, conv.value)

    def test_odd_c1b_rejected(self):
        with pytest.raises(ValueError):
            multicover_coefficient(1, 3, 0, SINH)
        with pytest.raises(ValueError):
            cover_exponent(1, 1)

    def test_negative_genus_rejected(self):
        with pytest.raises(ValueError):
            multicover_coefficient(1, 0, -1, SINH)

    def test_convention_from_string(self):
        assert Convention.from_string("SINH") is SINH
        with pytest.raises(ValueError):
            Convention.from_string("cosh")


class TestVector:
    def test_densifies_missing_entries(self):
        vec = InvariantVector(entries={2: F(5)}, c1b=0, max_genus=3)
        assert vec.entries == {0: F(0), 1: F(0), 2: F(5), 3: F(0)}

    def test_rejects_odd_c1b(self):
        with pytest.raises(ValueError):
            InvariantVector(entries={0: F(1)}, c1b=1)

    def test_rejects_entries_above_max_genus(self):
        with pytest.raises(ValueError):
            InvariantVector(entries={5: F(1)}, c1b=0, max_genus=3)

    def test_empty_needs_max_genus(self):
        with pytest.raises(ValueError):
            InvariantVector(entries={}, c1b=0)

    def test_string_map_round_trip(self):
        vec = InvariantVector(entries={0: F(1), 2: F(-1, 24)}, c1b=4)
        doc = vec.to_string_map()
        assert doc == {"0": "1", "1": "0", "2": "-1/24"}
        back = InvariantVector.from_string_map(doc, c1b=4)
        assert back == vec


class TestForward:
    def test_single_genus_zero(self):
        out = forward_transform(InvariantVector({0: F(1)}, 0), SINH)
        assert out.value(0) == 1

    def test_pure_genus_one(self):
        counts = InvariantVector({0: F(0), 1: F(1), 2: F(0)}, 0)
        out = forward_transform(counts, SINH)
        assert out.value(1) == 1
        assert out.value(0) == 0

    def test_even_tower_example(self):
        counts = InvariantVector({0: F(1), 2: F(0)}, 0)
        out = forward_transform(counts, SINH)
        assert out.value(2) == multicover_coefficient(0, 0, 1, SINH) == F(-1, 24)

    def test_preserves_shape(self):
        counts = InvariantVector({0: F(1)}, c1b=6, max_genus=5)
        out = forward_transform(counts, SIN)
        assert out.c1b == 6 and out.max_genus == 5


class TestInvert:
    def test_diagonal_solve(self):
        out = invert_transform(InvariantVector({0: F(1)}, 0), SINH)
        assert out.value(0) == 1

    def test_inverse_of_forward_example(self):
        gw = InvariantVector({0: F(1), 2: F(-1, 24)}, 0)
        counts = invert_transform(gw, SINH)
        assert counts.entries == {0: F(1), 1: F(0), 2: F(0)}

    @given(
        st.dictionaries(st.integers(0, 8), st.fractions(max_denominator=40), max_size=9),
        st.sampled_from(C1B_GRID),
        st.sampled_from([SINH, SIN]),
    )
    @settings(max_examples=80, deadline=None)
    def test_round_trip_exact(self, entries, c1b, conv):
        vec = InvariantVector(entries, c1b, max_genus=8)
        assert invert_transform(forward_transform(vec, conv), conv) == vec
        assert forward_transform(invert_transform(vec, conv), conv) == vec

    def test_parity_decoupling(self):
        base = InvariantVector({g: F(1) for g in range(7)}, 0)
        tweaked_odd = InvariantVector(
            {g: F(1) + (g % 2) * F(7) for g in range(7)}, 0
        )
        out_base = forward_transform(base, SINH)
        out_tweaked = forward_transform(tweaked_odd, SINH)
        for g in range(0, 7, 2):
            assert out_base.value(g) == out_tweaked.value(g)
        for g in range(1, 7, 2):
            assert out_base.value(g) != out_tweaked.value(g)


class TestIntegrality:
    def test_all_integers(self):
        assert integrality_check(InvariantVector({0: F(3), 1: F(-2)}, 0)) == []

    def test_reports_fraction(self):
        vec = InvariantVector({0: F(1, 2)}, 0)
        assert integrality_check(vec) == [(0, F(1, 2))]

    def test_round_tripped_integers_stay_integral(self):
        vec = InvariantVector({g: F((-2) ** g) for g in range(7)}, 2)
        recovered = invert_transform(forward_transform(vec, SINH), SINH)
        assert integrality_check(recovered) == []
