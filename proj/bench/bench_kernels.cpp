// Serial reference vs OpenMP for the three parallel kernels.
#include <benchmark/benchmark.h>

#include "retractlab/parse.hpp"
#include "retractlab/theorem_lab.hpp"

using namespace retractlab;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) == 0 ? "serial" : "parallel"); }

// A true generator whose certificate needs ds + dt = 6, so most slots are visited.
void BM_BoundedSearch(benchmark::State& st) {
  const Poly2 p = make_retract_generator(random_tame(0, TameParams{2, 2, 2}), parse_poly2("x*y - 1")).p;
  SearchOptions so{3};
  so.execution = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(is_retract_generator_bounded(p, so));
  label(st);
}

void BM_AmSweep(benchmark::State& st) {
  SweepOptions so;
  so.execution = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(am_sweep(so));
  label(st);
}

void BM_Experiment(benchmark::State& st) {
  ExperimentOptions eo;
  eo.trials = 50;
  eo.execution = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(main_theorem_experiment(eo));
  label(st);
}

}  // namespace

BENCHMARK(BM_BoundedSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AmSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Experiment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
