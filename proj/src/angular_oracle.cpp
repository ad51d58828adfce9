#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "ddo/errors.hpp"
#include "ddo/oracle.hpp"

namespace ddo::oracle {

namespace {

using cplx = std::complex<double>;

std::vector<double> sorted_by_magnitude(std::vector<double> v) {
  std::sort(v.begin(), v.end(), [](double a, double b) {
    if (std::abs(std::abs(a) - std::abs(b)) > 1e-9 * std::max(1.0, std::abs(a))) return std::abs(a) < std::abs(b);
    return a < b;
  });
  return v;
}

}  // namespace

AngularDiscretization discretize_angular_J(double mu_x, double mu_y, int grid_size) {
  if (grid_size < 64 || grid_size % 4 != 0)
    throw DomainError("discretize_angular_J: grid size must be a multiple of 4 and at least 64");
  if (!(mu_x > -0.5) || !(mu_y > -0.5)) throw DomainError("discretize_angular_J: mu must exceed -1/2");
  const int g = grid_size;
  const double h = 2.0 * std::numbers::pi / g;
  std::vector<double> theta(g);
  for (int j = 0; j < g; ++j) theta[j] = (j + 0.5) * h;

  // Fourier differentiation on the periodic grid.
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(g, g);
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < g; ++k)
      if (j != k) d(j, k) = 0.5 * ((j - k) % 2 == 0 ? 1.0 : -1.0) / std::tan((j - k) * h / 2.0);

  // R_y: t -> -t is j -> G-1-j; R_x: t -> pi - t is j -> G/2-1-j (mod G).
  Eigen::MatrixXd ry = Eigen::MatrixXd::Zero(g, g), rx = Eigen::MatrixXd::Zero(g, g);
  Eigen::MatrixXd rxy = Eigen::MatrixXd::Zero(g, g);
  for (int j = 0; j < g; ++j) {
    ry(j, g - 1 - j) = 1.0;
    rx(j, ((g / 2 - 1 - j) % g + g) % g) = 1.0;
    rxy(j, (j + g / 2) % g) = 1.0;
  }
  Eigen::MatrixXd real_part = d;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(g, g);
  for (int j = 0; j < g; ++j) {
    const double cot = std::cos(theta[j]) / std::sin(theta[j]);
    const double tan = std::tan(theta[j]);
    real_part.row(j) += mu_y * cot * (id.row(j) - ry.row(j)) - mu_x * tan * (id.row(j) - rx.row(j));
  }
  AngularDiscretization out;
  out.grid_size = g;
  out.matrix = cplx(0.0, 1.0) * real_part.cast<cplx>();
  out.reflection_commutator = (real_part * rxy - rxy * real_part).cwiseAbs().maxCoeff();

  // Band-limited Fourier modes |k| <= G/2 - 1 span an invariant subspace.
  std::vector<int> even_k, odd_k;
  for (int k = -(g / 2 - 1); k <= g / 2 - 1; ++k) (k % 2 == 0 ? even_k : odd_k).push_back(k);
  std::vector<int> modes = even_k;
  modes.insert(modes.end(), odd_k.begin(), odd_k.end());
  const int nm = static_cast<int>(modes.size());
  Eigen::MatrixXcd phi(g, nm);
  for (int j = 0; j < g; ++j)
    for (int c = 0; c < nm; ++c) phi(j, c) = std::exp(cplx(0.0, modes[c] * theta[j])) / std::sqrt(double(g));
  const Eigen::MatrixXcd jk = phi.adjoint() * out.matrix * phi;
  const int ne = static_cast<int>(even_k.size());
  const int no = nm - ne;
  out.block_residual =
      std::max(jk.block(0, ne, ne, no).cwiseAbs().maxCoeff(), jk.block(ne, 0, no, ne).cwiseAbs().maxCoeff());

  auto block_eigs = [&](int start, int size) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(jk.block(start, start, size, size), false);
    std::vector<double> v;
    for (int i = 0; i < size; ++i) {
      const cplx e = solver.eigenvalues()[i];
      out.max_imaginary = std::max(out.max_imaginary, std::abs(e.imag()));
      v.push_back(e.real());
    }
    return sorted_by_magnitude(v);
  };
  out.even_sector = block_eigs(0, ne);
  out.odd_sector = block_eigs(ne, no);
  std::vector<double> all = out.even_sector;
  all.insert(all.end(), out.odd_sector.begin(), out.odd_sector.end());
  out.eigenvalues = sorted_by_magnitude(all);
  return out;
}

}  // namespace ddo::oracle
