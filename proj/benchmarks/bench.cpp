// Microbenchmarks for the hot paths: straightening, GF(2) elimination,
// the coaction, and cochain differential ranks.
#include <benchmark/benchmark.h>

#include <random>

#include "sl2coh/cohomology.hpp"
#include "sl2coh/comodule.hpp"
#include "sl2coh/gf2matrix.hpp"
#include "sl2coh/hopf.hpp"

using namespace sl2coh;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_exp, int terms) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<Monomial> out;
    for (int t = 0; t < terms; ++t) {
        Monomial m(4);
        for (size_t i = 0; i < 4; ++i) m.exps[i] = exp(rng);
        out.push_back(std::move(m));
    }
    return Poly(ctx_g(), std::move(out));
}

void BM_normal_form(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Poly> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_poly(rng, int(state.range(0)), 8));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(BM_normal_form)->Arg(4)->Arg(8)->Arg(16);

void BM_comultiply(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::vector<Poly> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_poly(rng, int(state.range(0)), 4));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(comultiply(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(BM_comultiply)->Arg(2)->Arg(4);

void BM_left_coaction(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<Poly> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_poly(rng, int(state.range(0)), 4));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(left_coaction(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(BM_left_coaction)->Arg(2)->Arg(4);

void BM_gf2_rref_rank(benchmark::State& state) {
    const size_t cols = size_t(state.range(0));
    std::mt19937_64 rng(4);
    std::bernoulli_distribution bit(0.3);
    std::vector<BitVec> rows;
    for (size_t r = 0; r < cols; ++r) {
        BitVec v(cols);
        for (size_t c = 0; c < cols; ++c)
            if (bit(rng)) v.set(c);
        rows.push_back(std::move(v));
    }
    for (auto _ : state) {
        Gf2Rref solver(cols);
        for (const BitVec& v : rows) solver.add(v);
        benchmark::DoNotOptimize(solver.rank());
    }
}
BENCHMARK(BM_gf2_rref_rank)->Arg(256)->Arg(1024);

void BM_sparse_elim_rank(benchmark::State& state) {
    const uint64_t cols = uint64_t(state.range(0));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<uint64_t> col(0, cols - 1);
    std::vector<std::vector<uint64_t>> rows;
    for (uint64_t r = 0; r < cols; ++r) {
        std::vector<uint64_t> idx;
        for (int k = 0; k < 12; ++k) idx.push_back(col(rng));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        rows.push_back(std::move(idx));
    }
    for (auto _ : state) {
        SparseElim elim;
        for (const auto& r : rows) elim.add(r);
        benchmark::DoNotOptimize(elim.rank());
    }
}
BENCHMARK(BM_sparse_elim_rank)->Arg(256)->Arg(1024);

void BM_cobar_build(benchmark::State& state) {
    const int D = int(state.range(0));
    Comodule com = comodule(ModuleId::kG_mod_N, D);
    for (auto _ : state) {
        CobarComplex cx(GroupSpec::G(D), com);
        benchmark::DoNotOptimize(cx.dim(2));
    }
}
BENCHMARK(BM_cobar_build)->Arg(3)->Arg(4)->Arg(5);

void BM_cohomology_h1(benchmark::State& state) {
    const int D = int(state.range(0));
    Comodule com = comodule(ModuleId::kG_mod_N, D);
    for (auto _ : state) {
        CobarComplex cx(GroupSpec::G(D), com);
        auto dims = cohomology_dims(cx, 1);
        benchmark::DoNotOptimize(dims[1].dim);
    }
}
BENCHMARK(BM_cohomology_h1)->Arg(3)->Arg(4);

void BM_frobenius_h1(benchmark::State& state) {
    const int D = int(state.range(0));
    Comodule com = comodule(ModuleId::kG_mod_N, D);
    for (auto _ : state) {
        CobarComplex cx(GroupSpec::Gr(1), com);
        auto dims = cohomology_dims(cx, 1);
        benchmark::DoNotOptimize(dims[1].dim);
    }
}
BENCHMARK(BM_frobenius_h1)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
