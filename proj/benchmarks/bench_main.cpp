#include <benchmark/benchmark.h>

#include "fod/automorphism.hpp"
#include "fod/datasets.hpp"
#include "fod/group_action.hpp"
#include "fod/random.hpp"
#include "fod/serialize.hpp"

namespace {

using namespace fod;

AlgebraPtr algebra_for(int64_t kind) {
  if (kind == 0) return DivisionAlgebra::rationals();
  if (kind == 1) return DivisionAlgebra::field({1, 0, 1}, "i");
  return DivisionAlgebra::quaternion(-1, -1);
}

// args: algebra (0 = Q, 1 = Q(i), 2 = H), n
void BM_ColumnEchelon(benchmark::State& state) {
  const auto a = algebra_for(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  Rng rng(1);
  const auto m = random_matrix(a, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(column_echelon(m));
}
BENCHMARK(BM_ColumnEchelon)->ArgsProduct({{0, 1, 2}, {2, 4, 8}});

void BM_Decompose(benchmark::State& state) {
  const auto a = algebra_for(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  Rng rng(2);
  const auto f = MatrixAlgebraAutomorphism::from_decomposition(
      {n, a}, Decomposition::make(random_invertible(a, n, rng), AlgebraAutomorphism::identity(a)));
  const LiftTable lifts(a);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f, lifts));
}
BENCHMARK(BM_Decompose)->ArgsProduct({{0, 1, 2}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_SearchFree(benchmark::State& state) {
  const auto e = load_endo_structure(*bundled_dataset("remark-A2")).structure;
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_free({1, 1}, e.galois, count, 42));
}
BENCHMARK(BM_SearchFree)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
