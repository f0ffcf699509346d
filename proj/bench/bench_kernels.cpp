// Serial vs OpenMP kernels, with the brute-force oracle as a baseline where
// it is fast enough to run at all.
#include <benchmark/benchmark.h>

#include "bbnn/dataio.hpp"
#include "bbnn/layers.hpp"
#include "bbnn/oracle.hpp"
#include "bbnn/sensitivity.hpp"
#include "bbnn/training.hpp"

namespace {

using namespace bbnn;

Exec exec_of(const benchmark::State& state) {
  return state.range(1) ? Exec::parallel : Exec::serial;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

void BM_RowActivation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto w = random_matrix(rng, n, n, 1.0 / static_cast<double>(n));
  const auto x = random_vector(rng, n, 0.5);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(row_activation(w, x, exec));
  set_label(state);
}
BENCHMARK(BM_RowActivation)->ArgsProduct({{512, 4096}, {0, 1}});

void BM_RowActivationOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto w = random_matrix(rng, n, n, 1.0 / static_cast<double>(n));
  const auto x = oracle::as_row(random_vector(rng, n, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::naive_row_activation(x, w));
}
BENCHMARK(BM_RowActivationOracle)->Arg(512);

void BM_SpecializedSensitivity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto w = random_matrix(rng, n, n, 1.0 / static_cast<double>(n));
  const auto x = random_vector(rng, n, 0.5);
  const Exec exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(specialized_sensitivity(w, x, exec));
    benchmark::DoNotOptimize(specialized_sensitivity(x, w, exec));
  }
  set_label(state);
}
BENCHMARK(BM_SpecializedSensitivity)->ArgsProduct({{512, 4096}, {0, 1}});

void BM_SpecializedSensitivityOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto w = random_matrix(rng, n, n, 1.0 / static_cast<double>(n));
  const auto x = oracle::as_row(random_vector(rng, n, 0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::flip_sensitivity(w, x, oracle::FlipKind::specialized));
  }
}
BENCHMARK(BM_SpecializedSensitivityOracle)->Arg(64);

void BM_TrainBatch(benchmark::State& state) {
  const std::vector<std::size_t> widths{1568, 512, 160};
  Rng rng(3);
  const auto task = synth_teacher(rng, widths, static_cast<std::size_t>(state.range(0)), 0.002);
  Rng init(4);
  const Model start = random_model(widths, init);
  TrainConfig cfg;
  cfg.exec = exec_of(state);
  for (auto _ : state) {
    state.PauseTiming();
    Model m = start;
    state.ResumeTiming();
    benchmark::DoNotOptimize(train_batch(m, task.batch, cfg, Rng(5)));
  }
  set_label(state);
}
BENCHMARK(BM_TrainBatch)->ArgsProduct({{128}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
