#include <benchmark/benchmark.h>

#include "tambara/axioms.hpp"
#include "tambara/builtin.hpp"
#include "tambara/spectrum.hpp"

using namespace tambara;

namespace {

const char* const kGroups[] = {"c2", "c3", "c4", "s3", "c2xc2"};

ContextPtr context(std::size_t i) { return GroupContext::create(builtin_group(kGroups[i])); }

// nm along e -> G of a fixed element: polynomial formula against explicit sections.
void BM_NormPolynomial(benchmark::State& state) {
  const auto ctx = context(static_cast<std::size_t>(state.range(0)));
  const auto om = omega_functor(ctx);
  const TransitiveMap p = ctx->projection(0, ctx->catalog().num_classes() - 1);
  const Value x = om->parse(0, "3*[G/e]");
  for (auto _ : state) benchmark::DoNotOptimize(om->norm(p, x));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_NormPolynomial)->DenseRange(0, 4);

void BM_NormEnumeration(benchmark::State& state) {
  const auto ctx = context(static_cast<std::size_t>(state.range(0)));
  const auto om = omega_functor(ctx);
  const TransitiveMap p = ctx->projection(0, ctx->catalog().num_classes() - 1);
  const Value x = om->parse(0, "2*[G/e]");
  for (auto _ : state) benchmark::DoNotOptimize(om->norm_by_enumeration(p, x));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_NormEnumeration)->DenseRange(0, 3);

void BM_VerifyAxiomsOmega(benchmark::State& state) {
  const auto om = omega_functor(context(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(om));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_VerifyAxiomsOmega)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GenerateTwo(benchmark::State& state) {
  const auto om = omega_functor(context(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(generate(om, {Generator{0, om->parse(0, "2*[G/e]")}}));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_GenerateTwo)->DenseRange(0, 3);

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto t = make_functor(context(0), state.range(0) ? "zmod 6 trivial" : "prodfield 2 2 trivial");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(t));
  state.SetLabel(state.range(0) ? "zmod 6" : "F2xF2");
}
BENCHMARK(BM_EnumerateIdeals)->Arg(0)->Arg(1);

void BM_Spectrum(benchmark::State& state) {
  const auto t = make_functor(context(static_cast<std::size_t>(state.range(0))), "zmod 6 trivial");
  for (auto _ : state) benchmark::DoNotOptimize(spec(t));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Spectrum)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

// Pi_f along G/e -> G/G of the fold G/e u G/e -> G/e.
void BM_DependentProduct(benchmark::State& state) {
  const auto ctx = context(static_cast<std::size_t>(state.range(0)));
  const GMap f = ctx->realize(ctx->projection(0, ctx->catalog().num_classes() - 1));
  const GMap id = identity_map(f.src_ptr());
  const GMap fold = copair(id, id);
  for (auto _ : state) benchmark::DoNotOptimize(dependent_product(f, fold));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_DependentProduct)->DenseRange(0, 4);

}  // namespace

BENCHMARK_MAIN();
