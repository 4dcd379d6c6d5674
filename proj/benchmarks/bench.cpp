#include <benchmark/benchmark.h>

#include <cstdint>

#include "fptlab/deuring.hpp"
#include "fptlab/elliptic.hpp"
#include "fptlab/field.hpp"
#include "fptlab/fpt.hpp"
#include "fptlab/multipoly.hpp"

namespace {

using namespace fptlab;

void BM_FieldMulPrime(benchmark::State& state) {
  Field f = Field::prime(1000003);
  FieldElement a = f.element(123456), b = f.element(654321);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMulPrime);

void BM_FieldMulQuadratic(benchmark::State& state) {
  Field f = Field::quadratic(1009);
  FieldElement a = f.element(123, 456), b = f.element(654, 321);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMulQuadratic);

void BM_TruncatedPower(benchmark::State& state) {
  uint64_t p = static_cast<uint64_t>(state.range(0));
  uint32_t e = static_cast<uint32_t>(state.range(1));
  Field k = Field::quadratic(p);
  LegendreCurve curve = make_curve(k.element(0, 1));
  FrobeniusIdeal ideal(p, e);
  uint64_t n = ideal.q - 1;
  for (auto _ : state) {
    auto power = multi_pow_truncated(curve.cubic, n, &ideal);
    benchmark::DoNotOptimize(power);
  }
}
BENCHMARK(BM_TruncatedPower)->Args({7, 2})->Args({13, 2})->Unit(benchmark::kMillisecond);

void BM_NuLevel(benchmark::State& state) {
  uint64_t p = static_cast<uint64_t>(state.range(0));
  uint32_t e = static_cast<uint32_t>(state.range(1));
  Field k = Field::quadratic(p);
  LegendreCurve curve = make_curve(k.element(0, 1));
  for (auto _ : state) {
    auto rec = nu(curve, e);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_NuLevel)->Args({7, 2})->Args({13, 2})->Unit(benchmark::kMillisecond);

void BM_DeuringPoly(benchmark::State& state) {
  Field fp = Field::prime(7);
  for (auto _ : state) {
    auto h = deuring_poly_fp(500, fp);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_DeuringPoly)->Unit(benchmark::kMicrosecond);

void BM_LucasFactorization(benchmark::State& state) {
  Field fp = Field::prime(7);
  for (auto _ : state) {
    auto factors = deuring_lucas_factorization(500, fp);
    benchmark::DoNotOptimize(factors);
  }
}
BENCHMARK(BM_LucasFactorization)->Unit(benchmark::kMicrosecond);

void BM_HasseRoots(benchmark::State& state) {
  Field fp = Field::prime(31);
  for (auto _ : state) {
    auto values = supersingular_values(fp);
    benchmark::DoNotOptimize(values);
  }
}
BENCHMARK(BM_HasseRoots)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
