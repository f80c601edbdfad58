#include <benchmark/benchmark.h>

#include <random>

#include "secant/gr26.hpp"
#include "secant/grassmann.hpp"
#include "secant/induction.hpp"
#include "secant/terracini.hpp"

using namespace secant;

namespace {

// Dense random square matrix over GF(p) of the given size.
void BM_RankModP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PrimeModulus p;
  std::mt19937_64 rng(1);
  DenseMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = uniform_residue(rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, p));
}
BENCHMARK(BM_RankModP)->Arg(64)->Arg(256)->Arg(816);

void BM_TangentFrameRows(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const PrimeModulus p;
  std::mt19937_64 rng(2);
  const auto pt = random_point(k, n, std::nullopt, rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(tangent_frame_rows(pt));
}
BENCHMARK(BM_TangentFrameRows)->Args({2, 9})->Args({2, 17})->Args({3, 12});

void BM_Probe(benchmark::State& state) {
  SecantProblem problem;
  problem.k = static_cast<int>(state.range(0));
  problem.n = static_cast<int>(state.range(1));
  problem.s = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(probe(problem));
}
BENCHMARK(BM_Probe)->Args({2, 6, 3})->Args({3, 9, 6})->Args({2, 14, 11})->Unit(benchmark::kMillisecond);

void BM_PropA(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_prop_a(17, PrimeModulus{}, 0));
}
BENCHMARK(BM_PropA)->Unit(benchmark::kMillisecond);

void BM_PairingDeterminant(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto w = random_three_form(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ContractionMatrix(w).determinant());
}
BENCHMARK(BM_PairingDeterminant);

void BM_P7ModP(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto w = random_three_form(rng);
  const PrimeModulus p;
  ModMultivector m(7, 3, ModRing{p});
  for (const auto& [s, c] : w.terms()) m.add(s, p.reduce(c));
  for (auto _ : state) benchmark::DoNotOptimize(p7_mod_p(m));
}
BENCHMARK(BM_P7ModP);

}  // namespace
BENCHMARK_MAIN();
