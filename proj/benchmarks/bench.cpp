#include <benchmark/benchmark.h>

#include "ultraweights/construct.hpp"
#include "ultraweights/corpus.hpp"
#include "ultraweights/interp.hpp"
#include "ultraweights/lacunary.hpp"
#include "ultraweights/weightfn.hpp"

using namespace ultraweights;

static void BM_Conjugate(benchmark::State& st) {
  WeightFunctionSpec spec;
  spec.kind = WeightFunctionSpec::Kind::power;
  spec.param = 0.5;
  const WeightFunction w(spec);
  double s = 1.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(conjugate(w, s));
    s = s < 200.0 ? s + 1.0 : 1.0;
  }
}
BENCHMARK(BM_Conjugate);

static void BM_AssociatedSequence(benchmark::State& st) {
  const WeightFunction w{WeightFunctionSpec{}};
  for (auto _ : st) benchmark::DoNotOptimize(associated_sequence(w, 1.0, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_AssociatedSequence)->Arg(64)->Arg(256);

static void BM_Norms(benchmark::State& st) {
  FunctionSpec g;
  g.kind = FunctionSpec::Kind::gaussian;
  const SampledFunction f = make_function(g);
  const double ps[] = {1.0, 2.0, kInfNorm};
  for (auto _ : st) benchmark::DoNotOptimize(norms(f, static_cast<int>(st.range(0)), ps, {-8.0, 8.0}));
}
BENCHMARK(BM_Norms)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_PropagateGlobal(benchmark::State& st) {
  LacunaryInput in;
  in.M = WeightSequence::gevrey(1.5, 512);
  in.k = BaseSequence::linear(2, 512);
  for (auto _ : st) benchmark::DoNotOptimize(propagate_global(in));
}
BENCHMARK(BM_PropagateGlobal)->Unit(benchmark::kMillisecond);

static void BM_PropagateCg(benchmark::State& st) {
  LacunaryInput in;
  in.M = WeightSequence::gevrey(1.5, 512);
  in.k = BaseSequence::linear(2, 512);
  for (auto _ : st) benchmark::DoNotOptimize(propagate_interval_cg(in, {}, 2.0, false));
}
BENCHMARK(BM_PropagateCg)->Unit(benchmark::kMillisecond);

static void BM_Construct(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_counterexample(FamilySpec{}, 2));
}
BENCHMARK(BM_Construct)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_MAIN();
