#include "entromax/ellipsoid_solver.hpp"

#include <benchmark/benchmark.h>

#include <Eigen/Core>

namespace {

using namespace entromax;

void solve_two_by_two(benchmark::State& state) {
  const HermitianMatrix a = HermitianMatrix::diagonal(Eigen::Vector2d(0.7, 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(solve_dual(a, 1, 1e-6));
}
BENCHMARK(solve_two_by_two)->Unit(benchmark::kMillisecond);

void solve_rank_one(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  Eigen::VectorXd diag = Eigen::VectorXd::LinSpaced(n, 1.0, 2.0);
  diag /= diag.sum();
  const HermitianMatrix a = HermitianMatrix::diagonal(diag);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dual(a, 1, 1e-4));
}
BENCHMARK(solve_rank_one)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
