#include <benchmark/benchmark.h>

#include "hankeldet/hankel.hpp"
#include "hankeldet/orthopoly.hpp"
#include "hankeldet/sequence.hpp"

using namespace hankeldet;

namespace {

Matrix<Rational> rational_hankel(const char* text, long n) {
  const HankelMatrix h = hankel_matrix(parse_sequence(text), n);
  Matrix<Rational> m(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) m(i, j) = h.entry(i, j).as_rational();
  }
  return m;
}

void BM_Gauss(benchmark::State& state) {
  const Matrix<Rational> m = rational_hankel("B_k", state.range(0));
  long steps = 0;
  for (auto _ : state) benchmark::DoNotOptimize(det_gauss(m, &steps));
  state.counters["steps"] = static_cast<double>(steps);
}

void BM_Bareiss(benchmark::State& state) {
  const Matrix<Rational> m = rational_hankel("B_k", state.range(0));
  long steps = 0;
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m, &steps));
  state.counters["steps"] = static_cast<double>(steps);
}

void BM_PolynomialBareiss(benchmark::State& state) {
  const HankelMatrix h = hankel_matrix(parse_sequence("B[2k+1]((x+1)/2)"), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(h, DetAlgorithm::FractionFreeBareiss));
}

void BM_RecurrenceExtraction(benchmark::State& state) {
  const SequenceSpec spec = parse_sequence("E_k");
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_from_moments(spec, state.range(0)));
}

void BM_RecurrenceProduct(benchmark::State& state) {
  const HankelMatrix h = hankel_matrix(parse_sequence("E_k"), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(h, DetAlgorithm::RecurrenceProduct));
}

}  // namespace

BENCHMARK(BM_Gauss)->DenseRange(4, 12, 4);
BENCHMARK(BM_Bareiss)->DenseRange(4, 12, 4);
BENCHMARK(BM_PolynomialBareiss)->DenseRange(2, 6, 2);
BENCHMARK(BM_RecurrenceExtraction)->DenseRange(4, 12, 4);
BENCHMARK(BM_RecurrenceProduct)->DenseRange(4, 12, 4);
BENCHMARK_MAIN();
