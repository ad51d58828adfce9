#pragma once

// Data-parallel inner loops. The OpenMP versions live in ddo::kernels; the
// plain loops in ddo::kernels::serial are the reference the tests compare
// against and the baseline of the benchmark.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ddo/model.hpp"

namespace ddo::kernels {

// Energies of the given labels (spectra::level_energy per entry).
std::vector<double> level_energies(ModelKind kind, const ModelParams& params,
                                   std::span<const QuantumNumbers> labels);

// G = V^T diag(w) V for basis values V (nodes x basis) and node weights w.
Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& values, const Eigen::VectorXd& weights);

// out[i] = fn(i) for i < count; fn must be safe to call concurrently.
std::vector<double> map_indices(std::size_t count, const std::function<double(std::size_t)>& fn);

namespace serial {

std::vector<double> level_energies(ModelKind kind, const ModelParams& params,
                                   std::span<const QuantumNumbers> labels);
Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& values, const Eigen::VectorXd& weights);
std::vector<double> map_indices(std::size_t count, const std::function<double(std::size_t)>& fn);

}  // namespace serial

}  // namespace ddo::kernels
