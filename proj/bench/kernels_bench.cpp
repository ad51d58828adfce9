// OpenMP kernels against the serial reference loops.
#include <cmath>

#include <benchmark/benchmark.h>

#include "ddo/kernels.hpp"
#include "ddo/oracle.hpp"
#include "ddo/spectra.hpp"

namespace {

ddo::ModelParams magnetic() {
  ddo::ModelParams p;
  p.dim = 2;
  p.lambda = 0.02;
  p.mu = {0.02, 0.3};
  p.omega_c = 0.1;
  return p;
}

template <bool Parallel>
void BM_LevelEnergies(benchmark::State& state) {
  const auto p = magnetic();
  const auto labels = ddo::spectra::quantum_numbers_up_to(ddo::ModelKind::DunklDarbouxLandau, p, int(state.range(0)));
  for (auto _ : state) {
    auto e = Parallel ? ddo::kernels::level_energies(ddo::ModelKind::DunklDarbouxLandau, p, labels)
                      : ddo::kernels::serial::level_energies(ddo::ModelKind::DunklDarbouxLandau, p, labels);
    benchmark::DoNotOptimize(e.data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t(labels.size()));
}

template <bool Parallel>
void BM_WeightedGram(benchmark::State& state) {
  const int nodes = int(state.range(0));
  Eigen::MatrixXd v = Eigen::MatrixXd::Random(nodes, 128);
  Eigen::VectorXd w = Eigen::VectorXd::Random(nodes).cwiseAbs();
  for (auto _ : state) {
    Eigen::MatrixXd g = Parallel ? ddo::kernels::weighted_gram(v, w) : ddo::kernels::serial::weighted_gram(v, w);
    benchmark::DoNotOptimize(g.data());
  }
}

template <bool Parallel>
void BM_MapIndices(benchmark::State& state) {
  // residual-style workload: one eigenfunction evaluation per index
  const auto p = magnetic();
  const auto psi = ddo::eigenfunctions::build_polar_2d(ddo::ModelKind::DunklDarbouxLandau, p,
                                                       ddo::SectorNumbers{2, 3, -1, 1});
  auto fn = [&](std::size_t i) {
    const double r = 0.1 + 0.001 * double(i % 3000), t = 0.37 + 0.01 * double(i % 500);
    return std::abs(psi(r, t));
  };
  const auto count = std::size_t(state.range(0));
  for (auto _ : state) {
    auto out = Parallel ? ddo::kernels::map_indices(count, fn) : ddo::kernels::serial::map_indices(count, fn);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_LevelEnergies<false>)->Arg(40)->Arg(120);
BENCHMARK(BM_LevelEnergies<true>)->Arg(40)->Arg(120);
BENCHMARK(BM_WeightedGram<false>)->Arg(256)->Arg(2048);
BENCHMARK(BM_WeightedGram<true>)->Arg(256)->Arg(2048);
BENCHMARK(BM_MapIndices<false>)->Arg(20000);
BENCHMARK(BM_MapIndices<true>)->Arg(20000);
BENCHMARK_MAIN();
