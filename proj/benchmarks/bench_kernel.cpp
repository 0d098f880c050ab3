#include <benchmark/benchmark.h>

#include <random>

#include "ckgeo/conic.hpp"
#include "ckgeo/projective.hpp"

using namespace ck;

namespace {

template <class S>
std::array<HPoint<S>, 5> five_points(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-50, 50);
  auto pt = [&] {
    while (true) {
      int x = d(rng), y = d(rng), z = d(rng);
      if (x || y || z) return HPoint<S>(S(x), S(y), S(z));
    }
  };
  while (true) {
    std::array<HPoint<S>, 5> ps{pt(), pt(), pt(), pt(), pt()};
    try {
      (void)conic_through_five(ps);
      return ps;
    } catch (const geom_error&) {
    }
  }
}

void BM_conic_fit_rational(benchmark::State& state) {
  std::mt19937_64 rng(17);
  auto ps = five_points<Rat>(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conic_through_five(ps));
  }
}
BENCHMARK(BM_conic_fit_rational);

void BM_conic_fit_float(benchmark::State& state) {
  std::mt19937_64 rng(17);
  auto ps = five_points<double>(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conic_through_five(ps));
  }
}
BENCHMARK(BM_conic_fit_float);

void BM_cross_ratio_rational(benchmark::State& state) {
  HPoint<Rat> a(Rat(1), Rat(0), Rat(0)), b(Rat(0), Rat(0), Rat(1));
  HPoint<Rat> c(Rat(1), Rat(0), Rat(1)), d(Rat(2), Rat(0), Rat(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_ratio(a, b, c, d));
  }
}
BENCHMARK(BM_cross_ratio_rational);

}  // namespace

BENCHMARK_MAIN();
