#include <benchmark/benchmark.h>

#include <random>

#include "linrec/closedform.hpp"
#include "linrec/gcdlib.hpp"
#include "linrec/period.hpp"
#include "linrec/recurrence.hpp"
#include "linrec/residue.hpp"

using namespace linrec;

namespace {

Recurrence random_recurrence(std::size_t k, long mag, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-mag, mag);
    std::vector<Bigint> coeffs, init;
    for (std::size_t i = 0; i < k; ++i)
        coeffs.emplace_back(dist(rng));
    for (std::size_t i = 0; i < k; ++i)
        init.emplace_back(dist(rng));
    return Recurrence(std::move(coeffs), std::move(init));
}

void BM_ResidueTermFast(benchmark::State& state) {
    const ResidueRecurrence s = reduce(Recurrence::fibonacci(), 1000003);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(residue_term_fast(s, n));
}
BENCHMARK(BM_ResidueTermFast)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void BM_ResidueTermLinear(benchmark::State& state) {
    const ResidueRecurrence s = reduce(Recurrence::fibonacci(), 1000003);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(residue_term(s, n));
}
BENCHMARK(BM_ResidueTermLinear)->Arg(1000)->Arg(100000);

void BM_ExactTerm(benchmark::State& state) {
    const Recurrence fib = Recurrence::fibonacci();
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(term(fib, n));
}
BENCHMARK(BM_ExactTerm)->Arg(1000)->Arg(10000);

void BM_CycleStructure(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    const ResidueRecurrence s = reduce(Recurrence::fibonacci(), m);
    for (auto _ : state) {
        auto c = period::cycle_structure(s, m * m + 1);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CycleStructure)->Arg(1009)->Arg(9973)->Arg(99991);

void BM_CandidateScan(benchmark::State& state) {
    const ResidueRecurrence s = reduce(Recurrence::fibonacci(), 47);
    for (auto _ : state) {
        auto cands = period::candidate_periods_via_residue(
            s, static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(cands);
    }
}
BENCHMARK(BM_CandidateScan)->Arg(1000)->Arg(100000);

void BM_AdvanceMatrix(benchmark::State& state) {
    const Recurrence r =
        random_recurrence(static_cast<std::size_t>(state.range(0)), 3, 42);
    for (auto _ : state) {
        auto m = closedform::advance_matrix(r);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_AdvanceMatrix)->Arg(4)->Arg(16)->Arg(64);

void BM_Determinant(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-99, 99);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = dist(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(16);

void BM_StrongDivisibility(benchmark::State& state) {
    const Recurrence fib = Recurrence::fibonacci();
    for (auto _ : state)
        benchmark::DoNotOptimize(gcdlib::is_strong_divisibility(
            fib, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_StrongDivisibility)->Arg(30)->Arg(60);

} // namespace

BENCHMARK_MAIN();
