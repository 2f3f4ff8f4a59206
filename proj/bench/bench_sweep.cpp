#include <benchmark/benchmark.h>

#include "dcgen/sweep.hpp"

using namespace dcgen;

namespace {

struct Inputs {
  Catalog catalog = load_catalog(std::string(DCGEN_TEST_DATA_DIR) + "/catalog.json");
  ReferenceLibrary library =
      load_reference_library(std::string(DCGEN_TEST_DATA_DIR) + "/reference_library.json");
  std::vector<SweepEntry> entries;

  explicit Inputs(int copies) {
    const auto preset = *sweep_preset(kPaperCaseStudiesPreset);
    for (int i = 0; i < copies; ++i) entries.insert(entries.end(), preset.begin(), preset.end());
  }
};

void run_sweep(benchmark::State& state, Execution mode) {
  const Inputs in(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto outcomes = evaluate_sweep(in.entries, in.catalog, in.library, mode);
    benchmark::DoNotOptimize(outcomes);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.entries.size()));
}

void BM_SweepSerial(benchmark::State& state) { run_sweep(state, Execution::Serial); }
void BM_SweepParallel(benchmark::State& state) { run_sweep(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
