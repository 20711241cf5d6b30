#include <benchmark/benchmark.h>

#include <random>

#include "mcat/finset.hpp"
#include "mcat/lawcheck.hpp"

namespace {

using namespace mcat;

Morphism random_function(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  const InstanceKey key{CategoryId::FinSet, ProductKind::Coproduct};
  std::vector<Label> dom_labels, cod_labels;
  for (std::size_t i = 0; i < n; ++i) dom_labels.push_back(Label::atom("a" + std::to_string(i)));
  for (std::size_t j = 0; j < m; ++j) cod_labels.push_back(Label::atom("b" + std::to_string(j)));
  std::vector<std::size_t> table(n);
  for (auto& v : table) v = rng() % m;
  return Morphism::function(Object::finite_set(key, dom_labels),
                            Object::finite_set(key, cod_labels), table);
}

void BM_ParCoproduct(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Morphism f = random_function(rng, n, n);
  for (auto _ : state) {
    auto outcome = finset::par_decompose_coproduct(f, Policy::Nondegenerate);
    benchmark::DoNotOptimize(outcome.verdict);
  }
}
BENCHMARK(BM_ParCoproduct)->Arg(4)->Arg(8)->Arg(12);

void BM_ParSearchProduct(benchmark::State& state) {
  const InstanceKey key{CategoryId::FinSet, ProductKind::Product};
  std::vector<Label> labels;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(Label::atom("e" + std::to_string(i)));
  Object obj = Object::finite_set(key, labels);
  std::mt19937_64 rng(5);
  std::vector<std::size_t> table(n);
  for (auto& v : table) v = rng() % n;
  const Morphism f = Morphism::function(obj, obj, table);
  for (auto _ : state) {
    auto outcome = finset::par_search_product(f, n);
    benchmark::DoNotOptimize(outcome.verdict);
  }
}
BENCHMARK(BM_ParSearchProduct)->Arg(4)->Arg(6)->Arg(8);

void BM_LawSuite(benchmark::State& state) {
  const Instance instance = Instance::vec_tensor();
  lawcheck::SampleSpec spec;
  spec.seed = 1;
  spec.trial_count = static_cast<std::size_t>(state.range(0));
  spec.min_size = 1;
  spec.max_size = 3;
  for (auto _ : state) {
    auto reports = lawcheck::check_all(instance, spec);
    benchmark::DoNotOptimize(reports.size());
  }
}
BENCHMARK(BM_LawSuite)->Arg(20)->Arg(100);

}  // namespace
