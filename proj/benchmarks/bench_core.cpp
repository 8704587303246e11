#include <benchmark/benchmark.h>

#include "schemelab/analyzer.hpp"
#include "schemelab/capture.hpp"
#include "schemelab/coding.hpp"
#include "schemelab/metrics.hpp"
#include "schemelab/verify.hpp"

using namespace schemelab;

namespace {

Scheme width_scheme(int rank, int arity) {
    return Scheme::build(generate_type_seq(rank, {.mode = Growth::width, .arity = arity}));
}

void BM_BuildScheme(benchmark::State& state) {
    const auto t = generate_type_seq(static_cast<int>(state.range(0)),
                                     {.mode = Growth::width, .arity = 2});
    for (auto _ : state) benchmark::DoNotOptimize(Scheme::build(t));
}
BENCHMARK(BM_BuildScheme)->Arg(2)->Arg(3)->Arg(4);

void BM_MetricProfile(benchmark::State& state) {
    const auto t = generate_type_seq(static_cast<int>(state.range(0)),
                                     {.mode = Growth::width, .arity = 2});
    for (auto _ : state) {
        const auto s = Scheme::build(t);  // fresh scheme, fresh lazy profile
        benchmark::DoNotOptimize(s.profile().delta(0, s.domain_size() - 1));
    }
}
BENCHMARK(BM_MetricProfile)->Arg(3)->Arg(4);

void BM_VerifyAxioms(benchmark::State& state) {
    const auto s = width_scheme(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_scheme_axioms(s).all_passed());
}
BENCHMARK(BM_VerifyAxioms)->Arg(3)->Arg(4);

void BM_VerifyMetricLemmas(benchmark::State& state) {
    const auto s = width_scheme(static_cast<int>(state.range(0)), 1);
    s.profile();  // tables outside the loop; the lemma scan is the subject
    for (auto _ : state) benchmark::DoNotOptimize(verify_metric_lemmas(s).all_passed());
}
BENCHMARK(BM_VerifyMetricLemmas)->Arg(3)->Arg(4);

void BM_FindCaptures(benchmark::State& state) {
    const auto s = width_scheme(3, 1);
    std::vector<OrdinalSet> pool;
    for (Ordinal a = 0; a < s.domain_size(); ++a) pool.push_back({a});
    std::vector<int> levels{1, 2, 3};
    s.profile();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            find_captures(s, pool, {2}, levels, CaptureKind::delta_captured,
                          {.tuple_cap = static_cast<long long>(state.range(0))}));
}
BENCHMARK(BM_FindCaptures)->Arg(1000)->Arg(10000);

void BM_CodingBuild(benchmark::State& state) {
    const auto s = width_scheme(static_cast<int>(state.range(0)), 2);
    s.profile();
    for (auto _ : state) benchmark::DoNotOptimize(Coding(s, CodingKind::e, 2).point(0));
}
BENCHMARK(BM_CodingBuild)->Arg(3)->Arg(4);

void BM_Spectrum(benchmark::State& state) {
    const auto s = width_scheme(4, 1);
    const Coding coding(s, CodingKind::e, 1);
    const auto fam = interval_family(s, spaced_gammas(s, 3), 3);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(coding, fam.family));
}
BENCHMARK(BM_Spectrum);

}  // namespace

BENCHMARK_MAIN();
