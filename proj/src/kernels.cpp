#include "ddo/kernels.hpp"

#include <omp.h>

#include "ddo/spectra.hpp"

namespace ddo::kernels {

std::vector<double> level_energies(ModelKind kind, const ModelParams& params,
                                   std::span<const QuantumNumbers> labels) {
  const auto count = static_cast<std::ptrdiff_t>(labels.size());
  std::vector<double> out(labels.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = spectra::level_energy(kind, params, labels[i]);
  return out;
}

Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& values, const Eigen::VectorXd& weights) {
  const Eigen::Index nodes = values.rows();
  const Eigen::Index basis = values.cols();
  Eigen::MatrixXd gram(basis, basis);
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index j = 0; j < basis; ++j) {
    for (Eigen::Index k = j; k < basis; ++k) {
      double acc = 0.0;
      for (Eigen::Index q = 0; q < nodes; ++q) acc += weights[q] * values(q, j) * values(q, k);
      gram(j, k) = acc;
      gram(k, j) = acc;
    }
  }
  return gram;
}

std::vector<double> map_indices(std::size_t count, const std::function<double(std::size_t)>& fn) {
  std::vector<double> out(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
  return out;
}

namespace serial {

std::vector<double> level_energies(ModelKind kind, const ModelParams& params,
                                   std::span<const QuantumNumbers> labels) {
  std::vector<double> out;
  out.reserve(labels.size());
  for (const auto& qn : labels) out.push_back(spectra::level_energy(kind, params, qn));
  return out;
}

Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& values, const Eigen::VectorXd& weights) {
  const Eigen::Index basis = values.cols();
  Eigen::MatrixXd gram(basis, basis);
  for (Eigen::Index j = 0; j < basis; ++j) {
    for (Eigen::Index k = j; k < basis; ++k) {
      double acc = 0.0;
      for (Eigen::Index q = 0; q < values.rows(); ++q) acc += weights[q] * values(q, j) * values(q, k);
      gram(j, k) = acc;
      gram(k, j) = acc;
    }
  }
  return gram;
}

std::vector<double> map_indices(std::size_t count, const std::function<double(std::size_t)>& fn) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

}  // namespace ddo::kernels
