#include "entromax/oracle_p1.hpp"
#include "entromax/oracle_pk.hpp"
#include "entromax/oracle_v1.hpp"
#include "entromax/rng.hpp"

#include <benchmark/benchmark.h>

#include <Eigen/Core>

#include <vector>

namespace {

using namespace entromax;

std::vector<double> random_y(int n, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<double> y(static_cast<std::size_t>(n));
  for (double& v : y) v = -4.0 + 8.0 * rng.uniform();
  return y;
}

void eval_e1(benchmark::State& state) {
  const Spectrum s = cluster_spectrum(random_y(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(eval_E1(s));
}
BENCHMARK(eval_e1)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void eval_grad_e1(benchmark::State& state) {
  const Spectrum s = cluster_spectrum(random_y(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(eval_grad_E1(s));
}
BENCHMARK(eval_grad_e1)->Arg(4)->Arg(8)->Arg(16);

void eval_grad_ek(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Spectrum s = cluster_spectrum(random_y(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(eval_grad_Ek(s, n / 2));
}
BENCHMARK(eval_grad_ek)->Arg(4)->Arg(8)->Arg(12);

// Precision scaling of the rank-one oracle at n = 8.
void eval_e1_precision(benchmark::State& state) {
  const Spectrum s = cluster_spectrum(random_y(8, 4));
  OracleOptions o;
  o.precision = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eval_E1(s, o));
}
BENCHMARK(eval_e1_precision)->Arg(64)->Arg(256)->Arg(1024);

void eval_ev1(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Eigen::MatrixXd y = Eigen::MatrixXd::Identity(n, n) * 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(eval_Ev1(y));
}
BENCHMARK(eval_ev1)->Arg(4)->Arg(20);

}  // namespace
