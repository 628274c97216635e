#include <random>

#include <benchmark/benchmark.h>

#include "essentia/closure.hpp"
#include "essentia/essential.hpp"
#include "essentia/isotypes.hpp"
#include "essentia/oracle.hpp"
#include "essentia/smith.hpp"

using namespace essentia;

namespace {

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix a(Ring::integers(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Element(entry(rng));
  return a;
}

void BM_SmithInteger(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithInteger)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HermiteInteger(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(a));
}
BENCHMARK(BM_HermiteInteger)->Arg(4)->Arg(8)->Arg(16);

void BM_LatticeEnumeration(benchmark::State& state) {
  // (Z/2)^k has the largest lattice among groups of its order
  std::vector<Element> orders(static_cast<std::size_t>(state.range(0)), Element(2));
  const FGModule m = FGModule::from_cyclic_orders(Ring::integers(), 0, orders);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_submodules(m).size());
}
BENCHMARK(BM_LatticeEnumeration)->DenseRange(2, 6);

void BM_ClassifyTypes(benchmark::State& state) {
  const auto types = isomorphism_types(Ring::integers(), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& m : types) benchmark::DoNotOptimize(has_proper_essential(m).exists);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(types.size()));
}
BENCHMARK(BM_ClassifyTypes)->Arg(128)->Arg(1024);

void BM_Saturate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Matrix g = random_matrix(n, 3);
  Matrix rows(Ring::integers(), n / 2, n);
  for (std::size_t i = 0; i < n / 2; ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = g(i, j) * Element(6);
  const IntLattice l(Ring::integers(), n, rows);
  for (auto _ : state) benchmark::DoNotOptimize(saturate(l));
}
BENCHMARK(BM_Saturate)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
