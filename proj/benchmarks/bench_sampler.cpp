#include "entromax/mc_reference.hpp"
#include "entromax/sampler_p1.hpp"

#include <benchmark/benchmark.h>

#include <Eigen/Core>

namespace {

using namespace entromax;

void sample_rank_one(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const HermitianMatrix y = HermitianMatrix::diagonal(Eigen::VectorXd::LinSpaced(n, -2.0, 2.0));
  RngStream rng(11);
  for (auto _ : state) benchmark::DoNotOptimize(sample_p1(y, rng));
}
BENCHMARK(sample_rank_one)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void sample_uniform_projection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(12);
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_pk(n, n / 2, rng));
}
BENCHMARK(sample_uniform_projection)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
