#include <benchmark/benchmark.h>

#include "liekv/corpus.hpp"
#include "liekv/homspace.hpp"
#include "liekv/polynomial.hpp"
#include "liekv/spectral.hpp"
#include "liekv/theorems.hpp"

using namespace liekv;

namespace {

// Generic element of so(3)+so(3) with distinct rotation speeds.
Vector generic_so3_pair() {
  Vector x(6, Scalar(0));
  x[0] = 1;
  x[1] = Scalar(1, 3);
  x[3] = 2;
  x[5] = Scalar(-1, 2);
  return x;
}

const ReductiveSpace& so3_pair() {
  static const ReductiveSpace s = to_space(build_direct_sum(build_so3(), build_so3()));
  return s;
}

const ReductiveSpace& heis_go(unsigned n) {
  static const ReductiveSpace one = to_space(build_heis_go(1));
  static const ReductiveSpace two = to_space(build_heis_go(2));
  return n == 1 ? one : two;
}

}  // namespace

static void BM_CharacteristicPolynomial(benchmark::State& state) {
  const Operator l = ad_matrix(so3_pair().algebra(), generic_so3_pair());
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(l));
}
BENCHMARK(BM_CharacteristicPolynomial);

static void BM_JordanChevalley(benchmark::State& state) {
  const ReductiveSpace& s = heis_go(2);
  Vector x(s.dim(), Scalar(1));
  const Operator l = ad_matrix(s.algebra(), x);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_chevalley(l));
}
BENCHMARK(BM_JordanChevalley);

static void BM_SpectralAnalysis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze(so3_pair().algebra(), generic_so3_pair()));
}
BENCHMARK(BM_SpectralAnalysis);

static void BM_CheckConstantLengthRefuted(benchmark::State& state) {
  Vector x(4, Scalar(0));
  x[0] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_constant_length(heis_go(1), x));
}
BENCHMARK(BM_CheckConstantLengthRefuted);

static void BM_CheckConstantLengthSampled(benchmark::State& state) {
  SamplingParams p;
  p.samples = static_cast<std::size_t>(state.range(0));
  Vector x(6, Scalar(0));
  x[0] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_constant_length(so3_pair(), x, p));
}
BENCHMARK(BM_CheckConstantLengthSampled)->Arg(50)->Arg(200);

static void BM_CheckGo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_go(heis_go(1), 1000, 0));
}
BENCHMARK(BM_CheckGo);

static void BM_VerifySuite(benchmark::State& state) {
  VerifyParams p;
  p.sampling.samples = 60;
  for (auto _ : state) benchmark::DoNotOptimize(verify_suite(heis_go(1), {}, p, "heis_go_1"));
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
