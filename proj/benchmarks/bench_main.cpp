#include <benchmark/benchmark.h>

#include "kmilnor/kgroups.hpp"
#include "kmilnor/random.hpp"

using namespace kmil;

namespace {

const PrimeField kBig(2147483647ULL);

void BM_WittStar(benchmark::State& st)
{
    PrimeField F(7);
    int m = static_cast<int>(st.range(0));
    SplitMix64 r(1);
    auto x = random_witt(r, F, m), y = random_witt(r, F, m);
    for (auto _ : st) benchmark::DoNotOptimize(witt_star(x, y));
}
BENCHMARK(BM_WittStar)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Ghost(benchmark::State& st)
{
    RationalField Q;
    int m = static_cast<int>(st.range(0));
    SplitMix64 r(2);
    auto x = random_witt(r, Q, m);
    for (auto _ : st) benchmark::DoNotOptimize(ghost(x));
}
BENCHMARK(BM_Ghost)->Arg(4)->Arg(8)->Arg(16);

void BM_NormN1(benchmark::State& st)
{
    PrimeField F(5);
    int d = static_cast<int>(st.range(0)), m = static_cast<int>(st.range(1));
    SplitMix64 r(3);
    auto g = x_string(F, random_irreducible(r, F, d));
    auto u = xt_string(F, random_ext_unit(r, F, d, m));
    for (auto _ : st) benchmark::DoNotOptimize(norm(F, g, {u}, m));
}
BENCHMARK(BM_NormN1)->Args({2, 2})->Args({3, 4})->Args({4, 6});

void BM_NormOracle(benchmark::State& st)
{
    PrimeField F(5);
    int d = static_cast<int>(st.range(0)), m = static_cast<int>(st.range(1));
    SplitMix64 r(3);
    auto g = x_string(F, random_irreducible(r, F, d));
    auto u = xt_string(F, random_ext_unit(r, F, d, m));
    for (auto _ : st) benchmark::DoNotOptimize(norm_n1_oracle(F, g, u, m));
}
BENCHMARK(BM_NormOracle)->Args({2, 2})->Args({3, 4})->Args({4, 6});

void BM_Reduce(benchmark::State& st)
{
    int n = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
    SplitMix64 r(4);
    auto Z = random_admissible(r, kBig, n, d, 2);
    for (auto _ : st) benchmark::DoNotOptimize(reduce_to_graphs(Z, 3));
}
BENCHMARK(BM_Reduce)->Args({1, 3})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_QStepVerify(benchmark::State& st)
{
    SplitMix64 r(5);
    Sys<PrimeField> Z;
    do {
        Z = random_admissible(r, kBig, 2, 3, 2);
    } while (qstep_index(Z) == 0);
    auto W = make_qstep(Z);
    for (auto _ : st) benchmark::DoNotOptimize(verify(W));
}
BENCHMARK(BM_QStepVerify)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
