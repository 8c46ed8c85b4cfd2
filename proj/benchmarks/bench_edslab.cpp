#include <benchmark/benchmark.h>

#include "edslab/eds.hpp"
#include "edslab/fixtures.hpp"
#include "edslab/heights.hpp"
#include "edslab/sieve_thue.hpp"

using namespace edslab;

namespace {

const Curve& e25() {
  static const Curve E = curve_from_string(fixtures::kMagnifiedCurve);
  return E;
}

const Point& p25() {
  static const Point P = Point::parse(fixtures::kMagnifiedPoint);
  return P;
}

void BM_Sequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sequence(e25(), p25(), state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sequence)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_DivisionPolynomial(benchmark::State& state) {
  for (auto _ : state) {
    DivisionPolynomials dp(e25());
    benchmark::DoNotOptimize(dp.psi_sq(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_DivisionPolynomial)->DenseRange(4, 16, 4);

void BM_CanonicalHeight(benchmark::State& state) {
  Point Q = point_mul(e25(), state.range(0), p25());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_height_value(e25(), Q));
}
BENCHMARK(BM_CanonicalHeight)->Arg(1)->Arg(5)->Arg(20);

void BM_EllipticLog(benchmark::State& state) {
  Point Q = point_mul(e25(), 2, p25());
  for (auto _ : state) benchmark::DoNotOptimize(elliptic_log(e25(), Q, state.range(0)));
}
BENCHMARK(BM_EllipticLog)->Arg(192)->Arg(1024);

void BM_Classify(benchmark::State& state) {
  Isogeny s = velu(e25(), Poly::parse(fixtures::kMagnifiedKernel));
  mpz_class B = s.apply(point_mul(e25(), state.range(0), p25())).B();
  for (auto _ : state) benchmark::DoNotOptimize(classify(B, {2, 3, 5}));
}
BENCHMARK(BM_Classify)->Arg(6)->Arg(10)->Arg(14);

void BM_Sieve(benchmark::State& state) {
  Isogeny s = velu(e25(), Poly::parse(fixtures::kMagnifiedKernel));
  SieveOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_magnified(s, p25(), 12, opt));
}
BENCHMARK(BM_Sieve)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
