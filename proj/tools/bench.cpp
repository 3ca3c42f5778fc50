// Serial vs OpenMP timings for the exhaustive scan kernels on synthetic
// chain quantaloids and indiscrete metric categories.

#include <benchmark/benchmark.h>

#include "quantikit/qdist.hpp"

using namespace quantikit;

namespace {

Quantaloid::Builder chain_builder(int n) {
  Quantaloid chain = Quantaloid::builtin_chain(n);
  return chain.raw();
}

QCategory big_metric(const Quantaloid& q, std::size_t objects, int n) {
  std::vector<std::string> names;
  std::vector<Obj> extents(objects, 0);
  std::vector<Elem> hom(objects * objects);
  for (std::size_t i = 0; i < objects; ++i) names.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < objects; ++i)
    for (std::size_t j = 0; j < objects; ++j) {
      const std::size_t gap = i < j ? j - i : i - j;
      hom[i * objects + j] = static_cast<Elem>(std::min<std::size_t>(gap, n));
    }
  return QCategory::validate(q, std::move(names), std::move(extents), std::move(hom), Exec::serial);
}

void bm_validate_quantaloid(benchmark::State& state, Exec ex) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    Quantaloid::Builder b = chain_builder(n);
    state.ResumeTiming();
    benchmark::DoNotOptimize(Quantaloid::validate(std::move(b), ex));
  }
}

void bm_residual_adjunctions(benchmark::State& state, Exec ex) {
  const int n = static_cast<int>(state.range(0));
  Quantaloid q = Quantaloid::builtin_chain(n);
  for (auto _ : state) benchmark::DoNotOptimize(check_residual_adjunctions(q, ex));
}

void bm_bimodule_check(benchmark::State& state, Exec ex) {
  const int n = 32;
  Quantaloid q = Quantaloid::builtin_chain(n);
  QCategory x = big_metric(q, state.range(0), n);
  std::vector<Elem> values(x.size() * x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) values[a * x.size() + b] = x.hom(a, b);
  for (auto _ : state)
    benchmark::DoNotOptimize(QDistributor::validate(x, x, values, ex));
}

}  // namespace

BENCHMARK_CAPTURE(bm_validate_quantaloid, serial, Exec::serial)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(bm_validate_quantaloid, parallel, Exec::parallel)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(bm_residual_adjunctions, serial, Exec::serial)->Arg(48)->Arg(96);
BENCHMARK_CAPTURE(bm_residual_adjunctions, parallel, Exec::parallel)->Arg(48)->Arg(96);
BENCHMARK_CAPTURE(bm_bimodule_check, serial, Exec::serial)->Arg(24)->Arg(48);
BENCHMARK_CAPTURE(bm_bimodule_check, parallel, Exec::parallel)->Arg(24)->Arg(48);

BENCHMARK_MAIN();
