#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "milnor/braid.hpp"
#include "milnor/hurwitz.hpp"
#include "milnor/quiver.hpp"

namespace {

milnor::braid_word random_word(std::mt19937& rng, int strands, int len) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::bernoulli_distribution flip(0.5);
    std::vector<int> letters;
    letters.reserve(len);
    for (int i = 0; i < len; ++i) {
        int v = gen(rng);
        letters.push_back(flip(rng) ? v : -v);
    }
    return milnor::braid_word(strands, std::move(letters));
}

milnor::quiver_rep random_rep(std::mt19937& rng, int m, int max_dim) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::bernoulli_distribution bit(0.5);
    std::vector<int> dims;
    for (int i = 0; i < m; ++i) dims.push_back(dim(rng));
    std::vector<milnor::gf2::matrix> maps;
    for (int i = 0; i + 1 < m; ++i) {
        milnor::gf2::matrix M(dims[i + 1], dims[i]);
        for (int r = 0; r < M.rows; ++r)
            for (int c = 0; c < M.cols; ++c) M.set(r, c, bit(rng));
        maps.push_back(std::move(M));
    }
    return milnor::make_rep(m, std::move(dims), std::move(maps));
}

void bm_normal_form(benchmark::State& state) {
    std::mt19937 rng(7);
    std::vector<milnor::braid_word> words;
    for (int i = 0; i < 64; ++i)
        words.push_back(random_word(rng, 8, static_cast<int>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            milnor::normal_form(words[i++ % words.size()]));
    }
}
BENCHMARK(bm_normal_form)->Arg(16)->Arg(64)->Arg(256);

void bm_orbit(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto tuples = milnor::orbit(milnor::standard_tuple(m), 1000000);
        benchmark::DoNotOptimize(tuples.size());
    }
}
BENCHMARK(bm_orbit)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_iterated_twist_sweep(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int k = 0; k < m; ++k)
            for (int l = k + 1; l <= m; ++l)
                benchmark::DoNotOptimize(milnor::iterated_twist(m, k, l));
    }
}
BENCHMARK(bm_iterated_twist_sweep)->Arg(4)->Arg(6)->Arg(8);

void bm_decompose(benchmark::State& state) {
    std::mt19937 rng(11);
    std::vector<milnor::quiver_rep> reps;
    for (int i = 0; i < 32; ++i)
        reps.push_back(random_rep(rng, static_cast<int>(state.range(0)), 4));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(milnor::decompose(reps[i++ % reps.size()]));
    }
}
BENCHMARK(bm_decompose)->Arg(5)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
