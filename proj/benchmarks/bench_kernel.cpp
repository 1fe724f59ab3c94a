// Microbenchmarks of the kernel's hot paths: exact elimination, block
// echelon adaptation, the symbolic pullback-and-saturate route used by the
// oracle checks, and the closed-form atlas. Inputs come from a fixed seed
// so runs are comparable; build Release for meaningful numbers.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include <monofol/block_basis.hpp>
#include <monofol/blowup.hpp>
#include <monofol/mat.hpp>
#include <monofol/presentation.hpp>
#include <monofol/subspace.hpp>
#include <monofol/vector_field.hpp>

using namespace monofol;

namespace {

using Rng = std::mt19937_64;

Rat bench_rat(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return rat(num(rng), den(rng));
}

Mat bench_matrix(Rng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = bench_rat(rng);
  return m;
}

Vec bench_vec(Rng& rng, int n) {
  Vec v(static_cast<std::size_t>(n));
  for (auto& q : v) q = bench_rat(rng);
  return v;
}

Subspace bench_subspace(Rng& rng, int n, int dim) {
  return Subspace::from_matrix(bench_matrix(rng, dim, n));
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(42);
  std::vector<Mat> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(bench_matrix(rng, n, n));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16);

static void BM_Perp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(43);
  std::vector<Subspace> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(bench_subspace(rng, n, n / 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(perp(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_Perp)->Arg(4)->Arg(8)->Arg(16);

static void BM_BlockBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(44);
  std::vector<Subspace> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(bench_subspace(rng, n, n / 2));
  IndexSet i1, i2;
  for (int k = 0; k < n; ++k) (k % 2 == 0 ? i1 : i2).insert(k);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(block_basis(inputs[i++ % inputs.size()], i1, i2));
  }
}
BENCHMARK(BM_BlockBasis)->Arg(4)->Arg(8)->Arg(16);

static void BM_PullbackSaturate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(45);
  Center center;
  for (int k = 0; k < n; ++k) center.indices.insert(k);
  Chart chart{center, 0};
  std::vector<VectorField> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(monomial_field(bench_vec(rng, n)));
  std::size_t i = 0;
  for (auto _ : state) {
    const VectorField& w = inputs[i++ % inputs.size()];
    benchmark::DoNotOptimize(saturate_exceptional(pullback_chart(w, chart), chart.j));
  }
}
BENCHMARK(BM_PullbackSaturate)->Arg(3)->Arg(6);

static void BM_Atlas(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(46);
  Presentation p;
  p.n = n;
  for (int k = 0; k < n / 2; ++k) p.divisor.insert(k);
  p.subspace = bench_subspace(rng, n, n / 2);
  Center center{{0, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(atlas(p, center));
  }
}
BENCHMARK(BM_Atlas)->Arg(4)->Arg(8);

static void BM_Localize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(47);
  Presentation p;
  p.n = n;
  for (int k = 0; k < n; ++k) p.divisor.insert(k);
  p.subspace = bench_subspace(rng, n, n / 2);
  RationalPoint point(static_cast<std::size_t>(n), Rat(0));
  for (int k = 0; k < n; k += 2) point[static_cast<std::size_t>(k)] = rat(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(localize(p, point));
  }
}
BENCHMARK(BM_Localize)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
