#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hyperlag/generators.hpp"
#include "hyperlag/simplex.hpp"
#include "hyperlag/solver.hpp"
#include "hyperlag/tensor_ops.hpp"

namespace hl = hyperlag;

namespace {

void BM_weight_gradient_icosphere(benchmark::State& state) {
  const auto g = hl::gen_icosphere(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> grad;
  for (auto _ : state) {
    hl::weight_gradient(g, x, grad);
    benchmark::DoNotOptimize(grad.data());
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_weight_gradient_icosphere)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_weight_gradient_complete(benchmark::State& state) {
  const auto g = hl::gen_complete(static_cast<int>(state.range(0)), 3);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> grad;
  for (auto _ : state) {
    hl::weight_gradient(g, x, grad);
    benchmark::DoNotOptimize(grad.data());
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_weight_gradient_complete)->Arg(32)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_project_simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<double> a(n);
  for (double& v : a) v = dist(rng);
  for (auto _ : state) {
    const auto p = hl::project_simplex(a);
    benchmark::DoNotOptimize(p.vec().data());
  }
}
BENCHMARK(BM_project_simplex)->Arg(16)->Arg(256)->Arg(4096);

void BM_solve_complete(benchmark::State& state) {
  const auto g = hl::gen_complete(static_cast<int>(state.range(0)), 3);
  std::mt19937_64 rng(1);
  const auto x0 = hl::sample_uniform(g.vertex_count(), rng);
  const hl::SolverConfig cfg;
  for (auto _ : state) {
    const auto run = hl::solve(g, x0, cfg);
    benchmark::DoNotOptimize(run.lambda_hat);
  }
}
BENCHMARK(BM_solve_complete)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
