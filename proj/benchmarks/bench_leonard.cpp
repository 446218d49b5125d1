#include "leonard/array_ops.hpp"
#include "leonard/characterization.hpp"
#include "leonard/families.hpp"
#include "leonard/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

leonard::QRacahParams gf_params(std::size_t d) {
  // r2 is solved from r1 r2 = s s* q^{d+1}.
  const leonard::Field f = leonard::Field::prime(10007UL);
  leonard::QRacahParams p;
  p.d = d;
  p.field = f;
  p.q = leonard::Scalar(f, 3L);
  p.h = leonard::Scalar(f, 5L);
  p.h_star = leonard::Scalar(f, 7L);
  p.s = leonard::Scalar(f, 11L);
  p.s_star = leonard::Scalar(f, 13L);
  p.r1 = leonard::Scalar(f, 17L);
  p.r2 = p.s * p.s_star * p.q.pow(static_cast<long>(d) + 1) / p.r1;
  p.theta0 = leonard::Scalar(f, 19L);
  p.theta0_star = leonard::Scalar(f, 23L);
  return p;
}

void BM_BuildKrawtchouk(benchmark::State& state) {
  const auto arr = leonard::krawtchouk_array(static_cast<std::size_t>(state.range(0)),
                                             leonard::Field::rational());
  for (auto _ : state) {
    benchmark::DoNotOptimize(leonard::build_system_from_array(arr));
  }
}
BENCHMARK(BM_BuildKrawtchouk)->DenseRange(2, 10, 4);

void BM_TraceScalarsQRacahGF(benchmark::State& state) {
  const auto sys = leonard::build_system_from_array(
      leonard::qracah_array(gf_params(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(leonard::trace_scalars(sys));
  }
}
BENCHMARK(BM_TraceScalarsQRacahGF)->DenseRange(2, 6, 2);

void BM_ClosedScalarsQRacahGF(benchmark::State& state) {
  const auto arr =
      leonard::qracah_array(gf_params(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(leonard::closed_scalars(arr));
  }
}
BENCHMARK(BM_ClosedScalarsQRacahGF)->DenseRange(2, 6, 2);

void BM_IdentitySuite(benchmark::State& state) {
  const auto sys = leonard::build_system_from_array(leonard::krawtchouk_array(
      static_cast<std::size_t>(state.range(0)), leonard::Field::rational()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(leonard::identity_suite(sys));
  }
}
BENCHMARK(BM_IdentitySuite)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Characterize(benchmark::State& state) {
  const auto data = leonard::extract_polynomial_data(leonard::build_system_from_array(
      leonard::qracah_array(gf_params(static_cast<std::size_t>(state.range(0))))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(leonard::build_from_polynomial_data(data));
  }
}
BENCHMARK(BM_Characterize)->DenseRange(2, 6, 2);

void BM_FourPhiThreeGrid(benchmark::State& state) {
  const auto p = gf_params(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (std::size_t i = 0; i <= p.d; ++i) {
      for (std::size_t j = 0; j <= p.d; ++j) {
        benchmark::DoNotOptimize(leonard::eval_4phi3_qracah(i, j, p));
      }
    }
  }
}
BENCHMARK(BM_FourPhiThreeGrid)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
