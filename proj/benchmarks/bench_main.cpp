#include <benchmark/benchmark.h>

#include "intertwine/aset.hpp"
#include "intertwine/criteria.hpp"
#include "intertwine/oracle.hpp"
#include "intertwine/parse.hpp"

using namespace intertwine;

namespace {

RootSystem sys(const char* name) { return RootSystem(parse_root_system_spec(name)); }

void BM_EnumerateGroup(benchmark::State& state, const char* name) {
  const RootSystem rs = sys(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(rs));
}
BENCHMARK_CAPTURE(BM_EnumerateGroup, B3, "B3");
BENCHMARK_CAPTURE(BM_EnumerateGroup, D4, "D4");
BENCHMARK_CAPTURE(BM_EnumerateGroup, F4, "F4")->Unit(benchmark::kMillisecond);

// A_{w0}(mu) over the full simple system; fresh memo every iteration.
void BM_ASetLongest(benchmark::State& state, const char* name, const char* mu) {
  const RootSystem rs = sys(name);
  const IntegralData ctx = integral_data(rs, rs.rho());
  const Weight m = parse_weight(mu, rs.rank());
  for (auto _ : state) benchmark::DoNotOptimize(a_set(rs, ctx.longest, m, ctx));
}
BENCHMARK_CAPTURE(BM_ASetLongest, A2_antidominant, "A2", "(-1,-1)");
BENCHMARK_CAPTURE(BM_ASetLongest, B3_antidominant, "B3", "(-1,-1,-1)");
BENCHMARK_CAPTURE(BM_ASetLongest, B3_half, "B3", "(-1/2,1,-1)");
BENCHMARK_CAPTURE(BM_ASetLongest, A4_antidominant, "A4", "(-1,-1,-1,-1)")->Unit(benchmark::kMillisecond);

void BM_HomTwistedVerma(benchmark::State& state, const char* name) {
  const RootSystem rs = sys(name);
  const WeylElem w0 = longest_element(rs);
  const Weight mu = rs.rho();
  for (auto _ : state) benchmark::DoNotOptimize(hom_twisted_verma(rs, {w0, act(w0, mu), identity(rs), mu}));
}
BENCHMARK_CAPTURE(BM_HomTwistedVerma, A2, "A2");
BENCHMARK_CAPTURE(BM_HomTwistedVerma, A3, "A3");
BENCHMARK_CAPTURE(BM_HomTwistedVerma, B3, "B3");

void BM_HomPrincipalSeries(benchmark::State& state) {
  const RootSystem rs = sys("B2");
  const Weight lambda = parse_weight("(1/2,0)", 2);
  const IntegralData ctx = integral_data(rs, lambda);
  const WeylElem w = ctx.longest;
  for (auto _ : state)
    benchmark::DoNotOptimize(hom_principal_series(rs, {lambda, w, parse_weight("(1/2,1)", 2), identity(rs),
                                                       parse_weight("(1/2,-1)", 2)}));
}
BENCHMARK(BM_HomPrincipalSeries);

void BM_StrongLinkage(benchmark::State& state) {
  const RootSystem rs = sys("A3");
  const Weight mu = rs.rho();
  const Weight low = act(longest_element(rs), mu);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::bgg_verma_hom(rs, low, mu));
}
BENCHMARK(BM_StrongLinkage);

}  // namespace

BENCHMARK_MAIN();
