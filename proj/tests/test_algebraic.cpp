#include <jantzen/algebraic.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace jantzen;

TEST_CASE("normalization shift") {
    CHECK(normalization_shift(0, 4) == 0);
    CHECK(normalization_shift(1, 4) == 0);
    CHECK(normalization_shift(3, 4) == 0);
    CHECK(normalization_shift(-1, 4) == 1);
    CHECK(normalization_shift(-2, 4) == 1);
}

TEST_CASE("algebraic filtration at slice 0") {
    AlgebraicJantzen aj = algebraic_jantzen(0, 4, -8, 0);
    CHECK(aj.shift == 0);
    CHECK(aj.depth_resolved);
    for (const auto& wc : aj.weights) {
        REQUIRE(wc.layers.size() == 5);
        CHECK(wc.layers[0].dim() == 1);
        if (wc.weight == 0) {
            // Highest weight line survives in gr^0 only.
            CHECK(wc.layers[1].dim() == 0);
        } else {
            // One step of the filtration: M^1 = span{x1 d2 ...}, M^2 = 0.
            CHECK(wc.layers[1].dim() == 1);
            CHECK(wc.layers[2].dim() == 0);
        }
    }
}

TEST_CASE("negative slices carry the overall valuation shift") {
    AlgebraicJantzen aj = algebraic_jantzen(-1, 4, -9, -1);
    CHECK(aj.shift == 1);
    for (const auto& wc : aj.weights) {
        // Raw chain: everything has valuation >= 1; normalized chain is the
        // filtration of an irreducible Verma, with J^1 = 0.
        CHECK(wc.layers[0].dim() == 1);
        CHECK(wc.layers[1].dim() == 1);
        CHECK(wc.layers[2].dim() == 0);
        CHECK(wc.normalized[0].dim() == 1);
        CHECK(wc.normalized[1].dim() == 0);
    }
}

TEST_CASE("filtration comparison across slices") {
    for (long slice : {0L, 1L, 2L, 3L}) {
        ComparisonReport rep =
            compare_filtrations(slice, 4, slice - 12, slice);
        CHECK(rep.aligned);
        CHECK(rep.shift == 0);
        for (const auto& v : rep.weights) {
            CHECK(v.layers_match);
            CHECK(v.image_is_kernel);
            CHECK(v.algebraic_dims == v.geometric_dims);
        }
    }
    for (long slice : {-1L, -2L}) {
        ComparisonReport rep =
            compare_filtrations(slice, 4, slice - 12, slice);
        CHECK(rep.aligned);
        CHECK(rep.shift == 1);
    }
}

TEST_CASE("sum formula") {
    for (long slice : {0L, 2L}) {
        SumFormulaReport rep = sum_formula_check(slice, 4, slice - 12, slice);
        CHECK(rep.ok);
        for (const auto& row : rep.rows) {
            CHECK(row.expected == (row.weight <= -slice - 2 ? 1 : 0));
            CHECK(row.observed == row.expected);
        }
    }
    CHECK_THROWS_AS(sum_formula_check(-1, 4, -9, -1), std::invalid_argument);
}

TEST_CASE("composition series layers") {
    for (long slice : {0L, 2L}) {
        CompositionSeriesReport rep =
            composition_series_check(slice, slice - 12, slice);
        CHECK(rep.ok);
        for (const auto& row : rep.rows) {
            // gr^0 is the finite-dimensional L(slice).
            CHECK(row.gr0 ==
                  (row.weight >= -slice && row.weight <= slice ? 1 : 0));
            // gr^1 is the Verma M(-slice-2).
            CHECK(row.gr1 == (row.weight <= -slice - 2 ? 1 : 0));
            CHECK(row.gr2 == 0);
        }
    }
    CHECK_THROWS_AS(composition_series_check(-2, -14, -2),
                    std::invalid_argument);
}

TEST_CASE("rejects trivial truncation orders") {
    CHECK_THROWS_AS(algebraic_jantzen(0, 1, -4, 0), std::invalid_argument);
    CHECK_THROWS_AS(compare_filtrations(0, 1, -4, 0), std::invalid_argument);
}
