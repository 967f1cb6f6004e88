// Serial reference vs OpenMP scan of both lifting criteria over a whole group.

#include <benchmark/benchmark.h>

#include "reflift/arrangement.hpp"
#include "reflift/scan.hpp"

namespace {

using reflift::Execution;

const reflift::GroupDescriptor kGroups[] = {
    reflift::parse_descriptor("S(6)"),
    reflift::parse_descriptor("S(7)"),
    reflift::parse_descriptor("G(2,1,4)"),
    reflift::parse_descriptor("G(3,3,4)"),
};

void BM_Scan(benchmark::State& state, Execution exec) {
  const auto& desc = kGroups[state.range(0)];
  const auto elements = reflift::enumerate(desc);
  const reflift::Arrangement arr(desc);
  for (auto _ : state) {
    auto verdicts = reflift::scan_elements(elements, arr, exec);
    benchmark::DoNotOptimize(verdicts.data());
  }
  state.SetLabel(reflift::to_string(desc));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elements.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Scan, serial, Execution::Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, openmp, Execution::Parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
