#include <cmath>

#include "doctest.h"

#include "ddo/kernels.hpp"
#include "ddo/spectra.hpp"

using namespace ddo;

TEST_CASE("parallel kernels match the serial reference") {
  ModelParams p;
  p.dim = 2;
  p.lambda = 0.02;
  p.mu = {0.02, 0.3};
  p.omega_c = 0.1;
  const auto labels = spectra::quantum_numbers_up_to(ModelKind::DunklDarbouxLandau, p, 30);
  const auto a = kernels::level_energies(ModelKind::DunklDarbouxLandau, p, labels);
  const auto b = kernels::serial::level_energies(ModelKind::DunklDarbouxLandau, p, labels);
  CHECK(a == b);

  Eigen::MatrixXd v = Eigen::MatrixXd::Random(500, 24);
  Eigen::VectorXd w = Eigen::VectorXd::Random(500).cwiseAbs();
  const auto g1 = kernels::weighted_gram(v, w);
  const auto g2 = kernels::serial::weighted_gram(v, w);
  CHECK((g1 - g2).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((g1 - g1.transpose()).cwiseAbs().maxCoeff() == 0.0);

  auto fn = [](std::size_t i) { return std::sin(0.1 * double(i)); };
  CHECK(kernels::map_indices(1000, fn) == kernels::serial::map_indices(1000, fn));
}
