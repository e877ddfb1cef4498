// Serial reference against OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include "samlab/core/rng.hpp"
#include "samlab/kernels/kernels.hpp"
#include "samlab/models/mlp.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

using namespace samlab;

namespace {

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Exec::serial : kernels::Exec::parallel;
}

struct Problem {
  SampleFamily family;
  Vec x;
  std::vector<std::size_t> idx;
};

Problem make_problem(std::size_t n, std::size_t in, std::size_t hidden) {
  ModelSpec spec;
  spec.widths = {in, hidden, 1};
  spec.activation = Activation::tanh;
  auto model = std::make_shared<Mlp>(spec);
  auto data = std::make_shared<Dataset>();
  CounterRng rng(1);
  data->inputs.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(in));
  data->targets.resize(static_cast<Eigen::Index>(n), 1);
  for (Eigen::Index i = 0; i < data->inputs.size(); ++i) data->inputs.data()[i] = rng.normal();
  for (Eigen::Index i = 0; i < data->targets.size(); ++i) data->targets.data()[i] = rng.normal();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return {make_family(model, data, LossKind::squared), mlp_init(spec, {}, 2), idx};
}

void BM_BatchValueGrad(benchmark::State& state) {
  const auto p = make_problem(4096, 32, 64);
  Vec g;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::batch_value_grad(p.family, p.x, p.idx, g, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.idx.size()));
}

void BM_PerSampleHessians(benchmark::State& state) {
  const auto p = make_problem(32, 8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::per_sample_hessians(p.family, p.x, p.idx, exec_of(state)));
}

void BM_FiniteDiffGrad(benchmark::State& state) {
  const auto p = make_problem(256, 16, 16);
  const auto f = p.family.full();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::finite_diff_grad(f, p.x, 1e-6, exec_of(state)));
}

void BM_RecursionTrials(benchmark::State& state) {
  CounterRng rng(3);
  std::vector<Mat> steps;
  for (int i = 0; i < 8; ++i) {
    Mat g(10, 10);
    for (Eigen::Index j = 0; j < g.size(); ++j) g.data()[j] = rng.normal();
    steps.push_back(Mat::Identity(10, 10) - 0.01 * g * g.transpose());
  }
  const Vec x0 = Vec::Ones(10);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::linear_recursion_trials(steps, x0, 200, 2000, 4, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * 2000);
}

}  // namespace

BENCHMARK(BM_BatchValueGrad)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PerSampleHessians)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiniteDiffGrad)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursionTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
