#include <jantzen/filtration.hpp>

#include <jantzen/dmodules.hpp>

#include <doctest.h>

#include "test_util.hpp"

#include <numeric>
#include <random>
#include <vector>

using namespace jantzen;

namespace {

// Nilpotent matrix with prescribed Jordan type, conjugated by a random
// invertible matrix; returns the conjugating matrix so the oracle can build
// the filtration directly from the Jordan chains.
struct JordanInstance {
    QMatrix m;
    QMatrix p;                  // columns are the Jordan basis
    std::vector<int> blocks;    // block sizes
};

JordanInstance random_nilpotent(std::mt19937_64& rng, int dim) {
    JordanInstance inst;
    std::vector<int> blocks;
    int left = dim;
    std::uniform_int_distribution<int> pick(1, dim);
    while (left > 0) {
        int b = std::min(pick(rng), left);
        blocks.push_back(b);
        left -= b;
    }
    QMatrix j(dim, dim);
    int offset = 0;
    for (int b : blocks) {
        for (int i = 1; i < b; ++i)
            j.at(offset + i - 1, offset + i) = 1;
        offset += b;
    }
    QMatrix p, p_inv;
    testutil::random_unimodular(rng, dim, p, p_inv);
    inst.m = p * j * p_inv;
    inst.p = p;
    inst.blocks = blocks;
    return inst;
}

// Monodromy filtration read off the Jordan chains: basis vector i of a block
// of size b is M^(b-1-i) applied to the chain top, so it sits in level
// 2i - (b-1); the increasing filtration mu^r is spanned by the vectors of
// level <= r.
Subspace oracle_layer(const JordanInstance& inst, int r) {
    int dim = inst.m.rows();
    std::vector<std::vector<Rational>> vecs;
    int offset = 0;
    for (int b : inst.blocks) {
        for (int i = 0; i < b; ++i)
            if (2 * i - (b - 1) <= r) {
                std::vector<Rational> v(dim);
                for (int row = 0; row < dim; ++row)
                    v[row] = inst.p.at(row, offset + i);
                vecs.push_back(std::move(v));
            }
        offset += b;
    }
    return Subspace::span(dim, vecs);
}

}  // namespace

TEST_CASE("nilpotency detection") {
    QMatrix j(2, 2);
    j.at(0, 1) = 1;
    CHECK(is_nilpotent(j));
    CHECK(is_nilpotent(QMatrix(3, 3)));
    QMatrix id = QMatrix::identity(2);
    CHECK(!is_nilpotent(id));
    CHECK_THROWS(monodromy(id));
}

TEST_CASE("monodromy filtration of a single Jordan block") {
    QMatrix j(3, 3);
    j.at(0, 1) = 1;
    j.at(1, 2) = 1;
    MonodromyFiltration f = monodromy(j);
    CHECK(f.at(-3).dim() == 0);
    CHECK(f.at(-2).dim() == 1);
    CHECK(f.at(0).dim() == 2);
    CHECK(f.at(2).dim() == 3);
    CHECK(f.at(3).dim() == 3);
    CHECK(f.gr_dim(2) == 1);
    CHECK(f.gr_dim(0) == 1);
    CHECK(f.gr_dim(-2) == 1);
    CHECK(f.gr_dim(1) == 0);
    CHECK(verify_monodromy(j, f).ok());
}

TEST_CASE("monodromy matches the Jordan-basis oracle") {
    auto rng = testutil::make_rng();
    std::uniform_int_distribution<int> dims(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        JordanInstance inst = random_nilpotent(rng, dims(rng));
        MonodromyFiltration f = monodromy(inst.m);
        int top = *std::max_element(inst.blocks.begin(), inst.blocks.end());
        for (int r = -top; r <= top; ++r) {
            CAPTURE(trial);
            CAPTURE(r);
            CHECK(f.at(r) == oracle_layer(inst, r));
        }
        CHECK(verify_monodromy(inst.m, f).ok());
    }
}

TEST_CASE("verification rejects a wrong filtration") {
    QMatrix j(2, 2);
    j.at(0, 1) = 1;
    MonodromyFiltration f = monodromy(j);
    // Shift every layer up by two: gr symmetry breaks.
    MonodromyFiltration g = f;
    g.chain.clear();
    for (const auto& [r, sub] : f.chain)
        g.chain.emplace(r + 2, sub);
    g.r_min = f.r_min + 2;
    g.r_max = f.r_max + 2;
    CHECK(!verify_monodromy(j, g).ok());
}

TEST_CASE("jantzen filtration on the kernel of a Jordan block") {
    QMatrix j(4, 4);
    for (int i = 1; i < 4; ++i)
        j.at(i - 1, i) = 1;
    JantzenFiltration f = jantzen_on_kernel(j);
    // ker is 1-dimensional and lies in im M^j for j <= 3.
    REQUIRE(f.chain.size() == 5);
    for (int i = 0; i <= 3; ++i)
        CHECK(f.chain[i].dim() == 1);
    CHECK(f.chain[4].dim() == 0);
    CHECK(f.chain[0] == kernel(j));
}

TEST_CASE("jantzen filtration on the cokernel of a Jordan block") {
    QMatrix j(3, 3);
    j.at(0, 1) = 1;
    j.at(1, 2) = 1;
    JantzenFiltration f = jantzen_on_cokernel(j);
    // ker M^(j+1) stays inside im M until the whole space appears at j = 2,
    // so the one-dimensional cokernel is reached exactly at the top step.
    REQUIRE(f.quotient_dims.size() == 3);
    CHECK(f.quotient_dims == std::vector<int>{0, 0, 1});
    Subspace im = image(j);
    for (size_t i = 0; i < f.chain.size(); ++i)
        CHECK(f.chain[i].contains(im));
    CHECK(f.chain.back() == Subspace::full(3));
}

TEST_CASE("maxext monodromy profile at slice 0") {
    MonodromyProfile prof = maxext_monodromy_profile(0, -12, 0);
    CHECK(prof.all_verified);
    for (const auto& row : prof.rows) {
        using P = std::vector<std::pair<int, int>>;
        if (row.weight == 0)
            CHECK(row.gr_dims == P{{0, 1}});
        else
            CHECK(row.gr_dims == P{{-1, 1}, {1, 1}});
    }
}

TEST_CASE("maxext chain is 0 in im s in ker s in all") {
    for (long w = 0; w >= -12; w -= 2) {
        OpMatrix s = op_matrix(MapName::S, ModuleFamily::max_ext(), 0, w);
        MonodromyFiltration f = monodromy(s.mat);
        CHECK(f.at(-2).dim() == 0);
        CHECK(f.at(-1) == image(s.mat));
        CHECK(f.at(0) == kernel(s.mat));
        CHECK(f.at(1) == Subspace::full(s.mat.rows()));
        if (w == 0) {
            CHECK(image(s.mat).dim() == 0);
            CHECK(kernel(s.mat).dim() == 1);
        } else {
            CHECK(image(s.mat).dim() == 1);
            CHECK(kernel(s.mat).dim() == 1);
        }
    }
}

TEST_CASE("kernel and cokernel of S recover the standard modules") {
    for (long slice : {-2L, -1L, 0L, 1L, 2L})
        for (long w = slice; w >= slice - 12; w -= 2) {
            OpMatrix s = op_matrix(MapName::S, ModuleFamily::max_ext(), slice, w);
            size_t shriek_dim =
                weight_space_basis(ModuleFamily::shriek(), slice, w).size();
            size_t plus_dim =
                weight_space_basis(ModuleFamily::plus(), slice, w).size();
            CHECK(static_cast<size_t>(kernel(s.mat).dim()) == shriek_dim);
            CHECK(static_cast<size_t>(s.mat.rows() - image(s.mat).dim()) ==
                  plus_dim);
            // im(canbar) = ker S exactly.
            OpMatrix cb =
                op_matrix(MapName::Canbar, ModuleFamily::shriek(), slice, w);
            CHECK(image(cb.mat) == kernel(s.mat));
        }
}
