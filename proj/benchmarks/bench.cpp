#include <jantzen/algebraic.hpp>
#include <jantzen/dmodules.hpp>
#include <jantzen/filtration.hpp>
#include <jantzen/weyl.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace jantzen;

namespace {

void BM_weyl_mul(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    WeylOp p = WeylOp::one(), q = WeylOp::one();
    for (int i = 0; i < deg; ++i) {
        p = p * (WeylOp::d1() + WeylOp::x2() * WeylOp::d2());
        q = q * (WeylOp::x1() + WeylOp::d2());
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_weyl_mul)->Arg(2)->Arg(4)->Arg(6);

void BM_casimir_power(benchmark::State& state) {
    EnvWord omega = EnvWord::casimir();
    EnvWord w = omega;
    for (int i = 1; i < state.range(0); ++i)
        w = w * omega;
    for (auto _ : state)
        benchmark::DoNotOptimize(pbw_normal_order(w));
}
BENCHMARK(BM_casimir_power)->Arg(1)->Arg(2)->Arg(3);

QMatrix random_nilpotent(int dim) {
    std::mt19937_64 rng(0x5eed2026);
    QMatrix j(dim, dim);
    for (int i = 1; i < dim; ++i)
        if (i != dim / 2)  // two blocks
            j.at(i - 1, i) = 1;
    QMatrix p = QMatrix::identity(dim), p_inv = QMatrix::identity(dim);
    std::uniform_int_distribution<int> idx(0, dim - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int step = 0; step < 3 * dim; ++step) {
        int a = idx(rng), b = idx(rng);
        if (a == b)
            continue;
        Rational c = coef(rng);
        for (int r = 0; r < dim; ++r)
            p.at(r, b) += c * p.at(r, a);
        for (int col = 0; col < dim; ++col)
            p_inv.at(a, col) -= c * p_inv.at(b, col);
    }
    return p * j * p_inv;
}

void BM_monodromy(benchmark::State& state) {
    QMatrix m = random_nilpotent(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(monodromy(m));
}
BENCHMARK(BM_monodromy)->Arg(4)->Arg(8)->Arg(12);

void BM_algebraic_jantzen(benchmark::State& state) {
    const long slice = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            algebraic_jantzen(slice, 4, slice - 12, slice));
}
BENCHMARK(BM_algebraic_jantzen)->Arg(0)->Arg(3);

void BM_compare_filtrations(benchmark::State& state) {
    const long slice = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            compare_filtrations(slice, 4, slice - 12, slice));
}
BENCHMARK(BM_compare_filtrations)->Arg(0)->Arg(3);

void BM_stabilization(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(stabilization_check(0, -12, 0, {2, 3, 4}));
}
BENCHMARK(BM_stabilization);

}  // namespace

BENCHMARK_MAIN();
