#include <benchmark/benchmark.h>

#include "nullpol/kernels.hpp"
#include "test_support.hpp"

using namespace nullpol;

namespace {

std::vector<klein::ProjTransform4> transforms(std::size_t n) {
  support::Rng rng(7);
  std::vector<klein::ProjTransform4> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({rng.liftable_matrix()});
  return out;
}

std::vector<Multivector> null_vectors(std::size_t n) {
  support::Rng rng(11);
  std::vector<Multivector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.klein_null_vector());
  return out;
}

template <auto Batch>
void bm_factorize(benchmark::State& state) {
  const auto inputs = transforms(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Batch(inputs, ScalarMode::rational));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Batch>
void bm_sandwich(benchmark::State& state) {
  support::Rng rng(13);
  const Versor g = rng.versor(klein::algebra(), 6);
  const auto xs = null_vectors(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Batch(g, xs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_factorize<kernels::serial::factorize_batch>)->Name("factorize/serial")->Arg(16)->Arg(64)->UseRealTime();
BENCHMARK(bm_factorize<kernels::omp::factorize_batch>)->Name("factorize/omp")->Arg(16)->Arg(64)->UseRealTime();
BENCHMARK(bm_sandwich<kernels::serial::sandwich_batch>)->Name("sandwich/serial")->Arg(200)->Arg(1000)->UseRealTime();
BENCHMARK(bm_sandwich<kernels::omp::sandwich_batch>)->Name("sandwich/omp")->Arg(200)->Arg(1000)->UseRealTime();

BENCHMARK_MAIN();
