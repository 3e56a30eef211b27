#include "palcomb/census.hpp"
#include "palcomb/compact_codec.hpp"
#include "palcomb/dup_trees.hpp"
#include "palcomb/manacher.hpp"
#include "palcomb/reconstruct.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace palcomb;

namespace {

Text random_text(std::size_t n, Symbol alphabet, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Text t(n);
    for (auto& c : t)
        c = static_cast<Symbol>(1 + rng() % alphabet);
    return t;
}

void BM_ComputeManacher(benchmark::State& state)
{
    const auto t = random_text(static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_manacher(t));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeManacher)->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();

void BM_NaiveManacher(benchmark::State& state)
{
    const auto t = random_text(static_cast<std::size_t>(state.range(0)), 2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(naive_manacher(t));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NaiveManacher)->RangeMultiplier(4)->Range(64, 1 << 12)->Complexity();

void BM_ManacherUnary(benchmark::State& state)
{
    const Text t(static_cast<std::size_t>(state.range(0)), 1);
    const bool naive = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(naive ? naive_manacher(t) : compute_manacher(t));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ManacherUnary)->ArgsProduct({{256, 1024, 4096}, {0, 1}});

void BM_ReconstructMinimal(benchmark::State& state)
{
    const auto a = compute_manacher(random_text(static_cast<std::size_t>(state.range(0)), 3, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(reconstruct_minimal(a));
}
BENCHMARK(BM_ReconstructMinimal)->RangeMultiplier(4)->Range(64, 1 << 12);

void BM_ReconstructZimin(benchmark::State& state)
{
    const auto a = compute_manacher(pal_zimin_word(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(reconstruct_minimal(a));
}
BENCHMARK(BM_ReconstructZimin)->DenseRange(6, 12, 2);

void BM_DecodeCompact(benchmark::State& state)
{
    const auto d = delta_array(random_text(static_cast<std::size_t>(state.range(0)), 2, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(decode_compact(d));
}
BENCHMARK(BM_DecodeCompact)->RangeMultiplier(4)->Range(64, 1 << 16);

void BM_EncodeBits(benchmark::State& state)
{
    const auto d = delta_array(random_text(static_cast<std::size_t>(state.range(0)), 2, 4));
    for (auto _ : state)
        benchmark::DoNotOptimize(decode_bits(encode_bits(d), d.n));
}
BENCHMARK(BM_EncodeBits)->RangeMultiplier(4)->Range(64, 1 << 16);

void BM_Census(benchmark::State& state)
{
    CensusOptions opts;
    opts.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_rho(static_cast<int>(state.range(0)), opts).rho());
}
BENCHMARK(BM_Census)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state)
{
    CounterSampler sampler(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(5);
    const auto tree = replay(decode_counter(sampler.sample(rng)));
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose(tree));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(8, 128);

} // namespace

BENCHMARK_MAIN();
