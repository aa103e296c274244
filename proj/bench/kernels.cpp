// Serial reference kernels against their OpenMP counterparts.
//   ./bench_kernels --benchmark_filter=Hilbert
#include <benchmark/benchmark.h>

#include "oa/analysis.hpp"
#include "oa/hilbert.hpp"
#include "oa/indicator.hpp"

using namespace oa;

namespace {

Execution exec_of(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void HilbertProjectLift53(benchmark::State& st) {
    const auto sys = ConeSystem::for_design(5, 3);
    SolverOptions opt;
    opt.execution = exec_of(st);
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_basis(sys, opt).size());
    label(st);
}
BENCHMARK(HilbertProjectLift53)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void HilbertProjectLift62ForcedZero(benchmark::State& st) {
    std::vector<std::size_t> fz = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const auto sys = ConeSystem::for_design(6, 2, fz);
    SolverOptions opt;
    opt.execution = exec_of(st);
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_basis(sys, opt).size());
    label(st);
}
BENCHMARK(HilbertProjectLift62ForcedZero)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

void HilbertCompletion(benchmark::State& st) {
    // (3,2) and (4,1) are the sizes where completion is quick
    const auto sys = st.range(1) ? ConeSystem::for_design(4, 1) : ConeSystem::for_design(3, 2);
    SolverOptions opt;
    opt.algorithm = Algorithm::completion;
    opt.execution = exec_of(st);
    for (auto _ : st) benchmark::DoNotOptimize(hilbert_basis(sys, opt).size());
    label(st);
}
BENCHMARK(HilbertCompletion)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void Enumerate52(benchmark::State& st) {
    EnumerationOptions opt;
    opt.execution = exec_of(st);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_indicators(5, 2, opt).size());
    label(st);
}
BENCHMARK(Enumerate52)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

void Summarize52Indicators(benchmark::State& st) {
    static const auto elements = enumerate_indicators(5, 2);
    for (auto _ : st) benchmark::DoNotOptimize(summarize(elements, exec_of(st)).elements);
    label(st);
}
BENCHMARK(Summarize52Indicators)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void Transform(benchmark::State& st) {
    const auto r = ReplicateVector::full_design(static_cast<int>(st.range(1)));
    if (st.range(0))
        for (auto _ : st) benchmark::DoNotOptimize(wht_forward(r));
    else
        for (auto _ : st) benchmark::DoNotOptimize(wht_forward_direct(r));
    st.SetLabel(st.range(0) ? "butterfly" : "direct");
}
BENCHMARK(Transform)->ArgsProduct({{0, 1}, {5, 8}});

}  // namespace

BENCHMARK_MAIN();
