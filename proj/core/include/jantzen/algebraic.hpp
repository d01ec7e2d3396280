#pragma once

#include <jantzen/dmodules.hpp>
#include <jantzen/filtration.hpp>
#include <jantzen/linalg.hpp>

#include <string>
#include <vector>

namespace jantzen {

// Algebraic Jantzen filtration of one Verma slice: per weight, the reduced
// subspaces M^i = red{ v : valuation of can(v) >= i } of the Shriek weight
// space, as a decreasing chain i = 0, 1, ...
struct AlgebraicJantzen {
    struct WeightChain {
        long weight;
        std::vector<Subspace> layers;       // raw chain M^0 >= M^1 >= ...
        std::vector<Subspace> normalized;   // M^{i+shift}
        bool depth_resolved;                // chain reached zero before i = n-1
    };
    long slice = 0;
    int n = 0;
    int shift = 0;
    std::vector<WeightChain> weights;
    bool depth_resolved = true;
};

AlgebraicJantzen algebraic_jantzen(long slice, int n, long wmin, long wmax);

// s-valuation of can on the highest-weight monomial (k, l) = (0, slice):
// 0 for slice >= 0, 1 for slice < 0.
int normalization_shift(long slice, int n);

// Per-weight comparison of the transported algebraic filtration against the
// geometric one inside ker(S on MaxExt).
struct ComparisonReport {
    struct WeightVerdict {
        long weight;
        bool layers_match;          // canbar(M^j) == ker S cap im S^j for all j
        bool image_is_kernel;       // im(canbar) == ker S
        std::vector<int> algebraic_dims;
        std::vector<int> geometric_dims;
    };
    long slice = 0;
    int n = 0;
    int shift = 0;
    std::vector<WeightVerdict> weights;
    bool aligned = true;
};

ComparisonReport compare_filtrations(long slice, int n, long wmin, long wmax);

// Sum formula: sum over i >= 1 of dim M^i per weight equals the character of
// the Verma module M(-slice-2).
struct SumFormulaReport {
    struct Row {
        long weight;
        int observed;
        int expected;
        bool ok;
    };
    long slice = 0;
    std::vector<Row> rows;
    bool ok = true;
};

SumFormulaReport sum_formula_check(long slice, int n, long wmin, long wmax);

// gr^0 must match the finite-dimensional L(slice), gr^1 the Verma
// M(-slice-2), and the chain must stop there.
struct CompositionSeriesReport {
    struct Row {
        long weight;
        int gr0, gr1, gr2;
        int expected_gr0, expected_gr1;
        bool ok;
    };
    long slice = 0;
    std::vector<Row> rows;
    bool ok = true;
};

CompositionSeriesReport composition_series_check(long slice, long wmin,
                                                 long wmax, int n = 4);

}  // namespace jantzen
