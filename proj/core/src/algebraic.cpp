#include <jantzen/algebraic.hpp>

#include <stdexcept>

namespace jantzen {

namespace {

// Chain M^0 >= M^1 >= ... >= M^n for one weight space, as subspaces of the
// (at most one-dimensional) Shriek weight space. Solving happens on the full
// m-graded DefShriek basis; red projects onto the m = 0 coordinates.
std::vector<Subspace> valuation_chain(long slice, int n, long weight) {
    OpMatrix c = op_matrix(MapName::Can, ModuleFamily::def_shriek(n), slice,
                           weight);
    const int src = static_cast<int>(c.source.size());
    const int shriek_dim = static_cast<int>(
        weight_space_basis(ModuleFamily::shriek(), slice, weight).size());

    // Indices of the m = 0 source monomials (the Shriek representatives).
    std::vector<int> m0_cols;
    for (int j = 0; j < src; ++j)
        if (c.source[j].m == 0)
            m0_cols.push_back(j);

    std::vector<Subspace> chain;
    for (int i = 0; i <= n; ++i) {
        // Solutions with can-image supported on s^i and above: kernel of the
        // rows of the can matrix with target m < i.
        int cut = 0;
        while (cut < static_cast<int>(c.target.size()) && c.target[cut].m < i)
            ++cut;
        QMatrix top(cut, src);
        for (int r = 0; r < cut; ++r)
            for (int j = 0; j < src; ++j)
                top.at(r, j) = c.mat.at(r, j);
        Subspace solutions = cut == 0 ? Subspace::full(src) : kernel(top);

        std::vector<std::vector<Rational>> reduced;
        for (const auto& v : solutions.basis()) {
            std::vector<Rational> r(shriek_dim);
            for (int j = 0; j < shriek_dim; ++j)
                r[j] = v[m0_cols[j]];
            reduced.push_back(std::move(r));
        }
        chain.push_back(Subspace::span(shriek_dim, reduced));
    }
    return chain;
}

bool valid_weight(long slice, long weight) {
    return (slice - weight) % 2 == 0 && (slice - weight) / 2 >= 0;
}

}  // namespace

int normalization_shift(long slice, int n) {
    Element hw = Element::monomial(ModuleFamily::def_shriek(n), {0, slice, 0});
    Element image = can(hw);
    long min_m = n;
    for (const auto& [mono, c] : image.terms())
        min_m = std::min(min_m, mono.m);
    return static_cast<int>(min_m);
}

AlgebraicJantzen algebraic_jantzen(long slice, int n, long wmin, long wmax) {
    if (n < 2)
        throw std::invalid_argument("algebraic Jantzen needs order n >= 2");
    AlgebraicJantzen out;
    out.slice = slice;
    out.n = n;
    out.shift = normalization_shift(slice, n);
    for (long w = wmax; w >= wmin; --w) {
        if (!valid_weight(slice, w))
            continue;
        AlgebraicJantzen::WeightChain wc;
        wc.weight = w;
        wc.layers = valuation_chain(slice, n, w);
        for (int i = 0; i <= n; ++i)
            wc.normalized.push_back(
                wc.layers[std::min(i + out.shift, n)]);
        wc.depth_resolved = wc.layers[n - 1].dim() == 0;
        out.depth_resolved = out.depth_resolved && wc.depth_resolved;
        out.weights.push_back(std::move(wc));
    }
    return out;
}

ComparisonReport compare_filtrations(long slice, int n, long wmin, long wmax) {
    if (n < 2)
        throw std::invalid_argument("comparison needs order n >= 2");
    ComparisonReport report;
    report.slice = slice;
    report.n = n;
    report.shift = normalization_shift(slice, n);
    for (long w = wmax; w >= wmin; --w) {
        if (!valid_weight(slice, w))
            continue;
        std::vector<Subspace> alg = valuation_chain(slice, n, w);
        OpMatrix cb = op_matrix(MapName::Canbar, ModuleFamily::shriek(), slice, w);
        OpMatrix sm = op_matrix(MapName::S, ModuleFamily::max_ext(), slice, w);
        JantzenFiltration geo = jantzen_on_kernel(sm.mat);

        ComparisonReport::WeightVerdict v;
        v.weight = w;
        v.image_is_kernel =
            apply(cb.mat, Subspace::full(cb.mat.cols())) == kernel(sm.mat);
        v.layers_match = true;
        const int depth = std::max(static_cast<int>(geo.chain.size()),
                                   static_cast<int>(alg.size()));
        for (int j = 0; j < depth; ++j) {
            Subspace transported = apply(
                cb.mat, alg[std::min<size_t>(j, alg.size() - 1)]);
            Subspace geometric = j < static_cast<int>(geo.chain.size())
                                     ? geo.chain[j]
                                     : Subspace(sm.mat.rows());
            v.algebraic_dims.push_back(transported.dim());
            v.geometric_dims.push_back(geometric.dim());
            if (!(transported == geometric))
                v.layers_match = false;
        }
        report.aligned =
            report.aligned && v.layers_match && v.image_is_kernel;
        report.weights.push_back(std::move(v));
    }
    return report;
}

SumFormulaReport sum_formula_check(long slice, int n, long wmin, long wmax) {
    if (slice < 0)
        throw std::invalid_argument("sum formula needs slice >= 0");
    SumFormulaReport report;
    report.slice = slice;
    AlgebraicJantzen aj = algebraic_jantzen(slice, n, wmin, wmax);
    for (const auto& wc : aj.weights) {
        SumFormulaReport::Row row;
        row.weight = wc.weight;
        row.observed = 0;
        for (size_t i = 1; i < wc.layers.size(); ++i)
            row.observed += wc.layers[i].dim();
        // Character of the Verma module M(-slice-2).
        row.expected = wc.weight <= -slice - 2 ? 1 : 0;
        row.ok = row.observed == row.expected;
        report.ok = report.ok && row.ok;
        report.rows.push_back(row);
    }
    return report;
}

CompositionSeriesReport composition_series_check(long slice, long wmin,
                                                 long wmax, int n) {
    if (slice < 0)
        throw std::invalid_argument("composition series check needs slice >= 0");
    CompositionSeriesReport report;
    report.slice = slice;
    AlgebraicJantzen aj = algebraic_jantzen(slice, n, wmin, wmax);
    for (const auto& wc : aj.weights) {
        CompositionSeriesReport::Row row;
        row.weight = wc.weight;
        row.gr0 = wc.layers[0].dim() - wc.layers[1].dim();
        row.gr1 = wc.layers[1].dim() - wc.layers[2].dim();
        row.gr2 = wc.layers[2].dim();
        row.expected_gr0 =
            (wc.weight >= -slice && wc.weight <= slice) ? 1 : 0;
        row.expected_gr1 = wc.weight <= -slice - 2 ? 1 : 0;
        row.ok = row.gr0 == row.expected_gr0 && row.gr1 == row.expected_gr1 &&
                 row.gr2 == 0;
        report.ok = report.ok && row.ok;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace jantzen
