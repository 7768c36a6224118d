#include <random>

#include <benchmark/benchmark.h>

#include "psl/psl.hpp"

using namespace psl;

namespace {

Matrix random_matrix(Field f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(f, n, rng));
  return Matrix::from_rows(f, n, rows);
}

void BM_RrefRationals(benchmark::State& state) {
  Matrix m = random_matrix(Field::rationals(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRationals)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefPrime(benchmark::State& state) {
  Matrix m = random_matrix(Field::prime(101), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SmashC4Triple(benchmark::State& state) {
  PartialAction pa = c4_triple(Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(build_partial_smash(pa));
}
BENCHMARK(BM_SmashC4Triple);

void BM_RadicalTraceForm(benchmark::State& state) {
  Algebra a = build_partial_smash(c4_triple(Field::rationals())).carrier;
  for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical_by(a, RadicalMethod::TraceForm));
}
BENCHMARK(BM_RadicalTraceForm);

void BM_RadicalBruteForce(benchmark::State& state) {
  Algebra a = truncated_polynomial(Field::prime(5), state.range(0));
  Caps caps;
  caps.field_cap = 5;
  for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical_by(a, RadicalMethod::BruteNilpotent, caps));
}
BENCHMARK(BM_RadicalBruteForce)->Arg(3)->Arg(4);

void BM_HStableIdeals(benchmark::State& state) {
  PartialAction pa = c4_triple(Field::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_h_stable_ideals(pa));
}
BENCHMARK(BM_HStableIdeals);

}  // namespace
BENCHMARK_MAIN();
