#include "ddo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddo/errors.hpp"
#include "ddo/kernels.hpp"
#include "ddo/quadrature.hpp"
#include "ddo/spectra.hpp"

namespace ddo::oracle {

namespace {

// Normalized (-1)^j C_j L_j^alpha(u) e^{-u/2} for j < count, at one u.
void laguerre_basis_row(double alpha, double u, double log_scale, int count, double* out) {
  double prev = 0.0, cur = 1.0;
  const double e = std::exp(-0.5 * u);
  for (int j = 0; j < count; ++j) {
    const double c = std::exp(0.5 * (log_scale + std::lgamma(j + 1.0) - std::lgamma(j + alpha + 1.0)));
    out[j] = (j % 2 == 0 ? 1.0 : -1.0) * c * cur * e;
    const double next = ((2.0 * j + 1.0 + alpha - u) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
}

Eigen::MatrixXd tridiagonal_square(double alpha, int size, double width) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  const double b2 = width * width;
  for (int j = 0; j < size; ++j) {
    m(j, j) = (2.0 * j + alpha + 1.0) / b2;
    if (j + 1 < size) {
      const double off = std::sqrt((j + 1.0) * (j + alpha + 1.0)) / b2;
      m(j, j + 1) = off;
      m(j + 1, j) = off;
    }
  }
  return m;
}

void check_symmetric(const Eigen::MatrixXd& m, const char* what) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw OracleError(std::string("solve_generalized: ") + what + " is not symmetric");
}

struct CartesianPieces {
  GeneralizedEigenproblem problem;
  Eigen::MatrixXd x1_sq, x2_sq;
  std::vector<int> n1, n2;
};

CartesianPieces build_cartesian(ModelKind kind, const ModelParams& params, int max_degree, int q1, int q2) {
  if (kind != ModelKind::Darboux && kind != ModelKind::Dunkl && kind != ModelKind::DunklDarboux)
    throw DomainError("assemble_cartesian_2d: Cartesian kinds only");
  if (params.dim != 2) throw DomainError("assemble_cartesian_2d: dim must be 2");
  params.validate_for(kind);
  if ((q1 != 0 && q1 != 1) || (q2 != 0 && q2 != 1)) throw SectorError("parity index must be 0 or 1");
  if (max_degree < q1 + q2) throw DomainError("assemble_cartesian_2d: empty basis");
  const double mu1 = params.mu_at(0), mu2 = params.mu_at(1);
  const double width = std::sqrt(params.omega / params.hbar);
  const int k1 = (max_degree - q1) / 2 + 1, k2 = (max_degree - q2) / 2 + 1;
  const Eigen::MatrixXd a1 = position_square_1d(mu1, q1, k1, width);
  const Eigen::MatrixXd a2 = position_square_1d(mu2, q2, k2, width);
  CartesianPieces out;
  std::vector<std::pair<int, int>> idx;
  for (int j1 = 0; j1 < k1; ++j1)
    for (int j2 = 0; j2 < k2; ++j2)
      if (2 * j1 + q1 + 2 * j2 + q2 <= max_degree) idx.emplace_back(j1, j2);
  const int n = static_cast<int>(idx.size());
  out.x1_sq = Eigen::MatrixXd::Zero(n, n);
  out.x2_sq = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    const auto [j1, j2] = idx[r];
    out.n1.push_back(2 * j1 + q1);
    out.n2.push_back(2 * j2 + q2);
    out.problem.degree.push_back(2 * j1 + q1 + 2 * j2 + q2);
    a(r, r) = params.hbar * params.omega * (out.problem.degree.back() + mu1 + mu2 + 1.0);
    for (int c = 0; c < n; ++c) {
      const auto [l1, l2] = idx[c];
      if (j2 == l2) out.x1_sq(r, c) = a1(j1, l1);
      if (j1 == l1) out.x2_sq(r, c) = a2(j2, l2);
    }
  }
  const double lam = has_darboux_factor(kind) ? params.lambda : 0.0;
  out.problem.stiffness = a;
  out.problem.mass = Eigen::MatrixXd::Identity(n, n) + lam * (out.x1_sq + out.x2_sq);
  out.problem.sector = "q=(" + std::to_string(q1) + "," + std::to_string(q2) + ")";
  return out;
}

}  // namespace

Eigen::MatrixXd position_square_1d(double mu, int parity_q, int basis_size, double width) {
  if (!(mu > -0.5)) throw DomainError("position_square_1d: mu must exceed -1/2");
  if (basis_size < 1) throw DomainError("position_square_1d: empty basis");
  const double alpha = mu + parity_q - 0.5;
  const double b2 = width * width;
  const auto rule = quadrature::make_quadrature(quadrature::dunkl_line(mu), basis_size + 8, b2);
  const int nodes = static_cast<int>(rule.size());
  Eigen::MatrixXd v(nodes, basis_size);
  std::vector<double> row(basis_size);
  const double log_scale = (2.0 * parity_q + 2.0 * mu + 1.0) * std::log(width);
  for (int i = 0; i < nodes; ++i) {
    const double x = rule.nodes[i];
    laguerre_basis_row(alpha, b2 * x * x, log_scale, basis_size, row.data());
    const double pre = parity_q == 1 ? x : 1.0;
    for (int j = 0; j < basis_size; ++j) v(i, j) = x * pre * row[j];
  }
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), nodes);
  return kernels::weighted_gram(v, w);
}

Eigen::MatrixXd position_square_1d_analytic(double mu, int parity_q, int basis_size, double width) {
  return tridiagonal_square(mu + parity_q - 0.5, basis_size, width);
}

Eigen::MatrixXd radius_square(double laguerre_alpha, int basis_size, double width) {
  if (!(laguerre_alpha > -1.0)) throw DomainError("radius_square: Laguerre parameter must exceed -1");
  const double b2 = width * width;
  const auto rule =
      quadrature::make_quadrature(quadrature::radial(2.0 * laguerre_alpha + 1.0), basis_size + 8, b2);
  const int nodes = static_cast<int>(rule.size());
  Eigen::MatrixXd v(nodes, basis_size);
  std::vector<double> row(basis_size);
  const double log_scale = (2.0 * laguerre_alpha + 2.0) * std::log(width) + std::log(2.0);
  for (int i = 0; i < nodes; ++i) {
    const double r = rule.nodes[i];
    laguerre_basis_row(laguerre_alpha, b2 * r * r, log_scale, basis_size, row.data());
    for (int j = 0; j < basis_size; ++j) v(i, j) = r * row[j];
  }
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), nodes);
  return kernels::weighted_gram(v, w);
}

Eigen::MatrixXd radius_square_analytic(double laguerre_alpha, int basis_size, double width) {
  return tridiagonal_square(laguerre_alpha, basis_size, width);
}

GeneralizedEigenproblem assemble_1d(ModelKind kind, const ModelParams& params, int basis_size, int parity) {
  if (kind != ModelKind::Darboux && kind != ModelKind::Dunkl && kind != ModelKind::DunklDarboux)
    throw DomainError("assemble_1d: 1D kinds only");
  if (basis_size < 16) throw DomainError("assemble_1d: basis_size must be at least 16");
  if (parity != 1 && parity != -1) throw SectorError("parity must be +1 or -1");
  ModelParams p = params;
  p.dim = 1;
  if (p.mu.size() > 1) p.mu.resize(1);
  p.validate_for(kind);
  const int q = parity == 1 ? 0 : 1;
  const double mu = has_reflections(kind) ? p.mu_at(0) : 0.0;
  GeneralizedEigenproblem prob;
  prob.stiffness = Eigen::MatrixXd::Zero(basis_size, basis_size);
  for (int j = 0; j < basis_size; ++j) {
    const int n = 2 * j + q;
    prob.degree.push_back(n);
    prob.stiffness(j, j) = p.hbar * p.omega * (n + mu + 0.5);
  }
  const double lam = has_darboux_factor(kind) ? p.lambda : 0.0;
  prob.mass = Eigen::MatrixXd::Identity(basis_size, basis_size);
  if (lam != 0.0) prob.mass += lam * position_square_1d(mu, q, basis_size, std::sqrt(p.omega / p.hbar));
  prob.sector = parity == 1 ? "e=+1" : "e=-1";
  return prob;
}

GeneralizedEigenproblem assemble_radial(const ModelParams& params, double frequency, double laguerre_alpha,
                                        double shift, int basis_size) {
  if (basis_size < 16) throw DomainError("assemble_radial: basis_size must be at least 16");
  if (!(frequency > 0.0)) throw DomainError("assemble_radial: frequency must be positive");
  GeneralizedEigenproblem prob;
  prob.stiffness = Eigen::MatrixXd::Zero(basis_size, basis_size);
  for (int k = 0; k < basis_size; ++k) {
    prob.degree.push_back(k);
    prob.stiffness(k, k) = params.hbar * frequency * (2.0 * k + laguerre_alpha + 1.0) + shift;
  }
  prob.mass = Eigen::MatrixXd::Identity(basis_size, basis_size);
  if (params.lambda != 0.0)
    prob.mass += params.lambda * radius_square(laguerre_alpha, basis_size, std::sqrt(frequency / params.hbar));
  prob.sector = "a=" + std::to_string(laguerre_alpha);
  return prob;
}

GeneralizedEigenproblem assemble_2d(ModelKind kind, const ModelParams& params, int basis_size,
                                    const QuantumNumbers& sector) {
  if (params.dim != 2) throw DomainError("assemble_2d: dim must be 2");
  params.validate_for(kind);
  ModelParams p = params;
  if (!has_darboux_factor(kind)) p.lambda = 0.0;
  const double h = p.hbar;
  if (kind == ModelKind::DarbouxLandau || (kind == ModelKind::Darboux && std::holds_alternative<LandauNumbers>(sector))) {
    const auto& l = std::get<LandauNumbers>(sector);
    auto prob = assemble_radial(p, p.omega_tilde(), std::abs(l.m), -h * p.omega_c * l.m, basis_size);
    prob.sector = "m=" + std::to_string(l.m);
    return prob;
  }
  const auto* s = std::get_if<SectorNumbers>(&sector);
  if (!s) throw SectorError("assemble_2d: Dunkl kinds need (m', epsilon, branch) sector labels");
  s->validate();
  const double mx = p.mu_at(0), my = p.mu_at(1);
  const double sigma = spectra::sigma_eigenvalue(mx, my, *s);
  const double a = spectra::radial_laguerre_parameter(mx, my, s->epsilon, sigma);
  auto prob = assemble_radial(p, p.omega_tilde(), a, h * p.omega_c * sigma, basis_size);
  prob.sector = "eps=" + std::to_string(s->epsilon) + ",2m'=" + std::to_string(s->twice_mprime) +
                ",branch=" + std::to_string(s->branch);
  return prob;
}

GeneralizedEigenproblem assemble_nd_radial(ModelKind kind, const ModelParams& params, int basis_size, int ell) {
  if (kind != ModelKind::Darboux && kind != ModelKind::Dunkl && kind != ModelKind::DunklDarboux)
    throw DomainError("assemble_nd_radial: Cartesian kinds only");
  if (params.dim < 2) throw DomainError("assemble_nd_radial: dim must be at least 2");
  if (ell < 0) throw DomainError("assemble_nd_radial: negative harmonic degree");
  params.validate_for(kind);
  ModelParams p = params;
  if (!has_darboux_factor(kind)) p.lambda = 0.0;
  const double a = ell + 0.5 * (p.dim - 2) + p.mu_sum();
  auto prob = assemble_radial(p, p.omega, a, 0.0, basis_size);
  prob.sector = "ell=" + std::to_string(ell);
  return prob;
}

GeneralizedEigenproblem assemble_cartesian_2d(ModelKind kind, const ModelParams& params, int max_degree, int q1,
                                              int q2) {
  return build_cartesian(kind, params, max_degree, q1, q2).problem;
}

GeneralizedSolution solve_generalized_full(const GeneralizedEigenproblem& problem) {
  const auto& a = problem.stiffness;
  const auto& s = problem.mass;
  if (a.rows() != a.cols() || s.rows() != s.cols() || a.rows() != s.rows())
    throw OracleError("solve_generalized: shape mismatch");
  check_symmetric(a, "stiffness");
  check_symmetric(s, "mass");
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) throw OracleError("solve_generalized: mass matrix is not positive definite");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, s, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) throw OracleError("solve_generalized: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> solve_generalized(const GeneralizedEigenproblem& problem, int count) {
  if (count < 0 || count > problem.basis_size() - 10)
    throw OracleError("solve_generalized: count must leave a guard band of 10 basis functions");
  const auto& a = problem.stiffness;
  const auto& s = problem.mass;
  if (a.rows() != s.rows()) throw OracleError("solve_generalized: shape mismatch");
  check_symmetric(a, "stiffness");
  check_symmetric(s, "mass");
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) throw OracleError("solve_generalized: mass matrix is not positive definite");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, s, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) throw OracleError("solve_generalized: eigensolver failed");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + count);
  return out;
}

std::vector<double> oracle_levels_1d(ModelKind kind, const ModelParams& params, int basis_size, int count) {
  std::vector<double> all;
  for (int parity : {1, -1}) {
    const auto v = solve_generalized(assemble_1d(kind, params, basis_size, parity), count);
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end());
  all.resize(static_cast<std::size_t>(count));
  return all;
}

CommutatorReport integrals_of_motion_check(const ModelParams& params, int max_degree, int margin) {
  if (params.dim != 2) throw DomainError("integrals_of_motion_check: dim must be 2");
  CommutatorReport rep;
  const double lam = params.lambda;
  const double hw = params.hbar * params.omega;
  for (int q1 : {0, 1}) {
    for (int q2 : {0, 1}) {
      const auto pieces = build_cartesian(ModelKind::Darboux, params, max_degree, q1, q2);
      const auto& prob = pieces.problem;
      int interior = 0;
      for (int d : prob.degree)
        if (d <= max_degree - 2 * margin) ++interior;
      if (interior == 0) continue;
      const auto sol = solve_generalized_full(prob);
      const int n = prob.basis_size();
      const Eigen::MatrixXd& s = prob.mass;
      for (int axis = 0; axis < 2; ++axis) {
        const auto& nn = axis == 0 ? pieces.n1 : pieces.n2;
        const Eigen::MatrixXd& xsq = axis == 0 ? pieces.x1_sq : pieces.x2_sq;
        Eigen::VectorXd kdiag(n);
        for (int i = 0; i < n; ++i) kdiag[i] = 2.0 * hw * (nn[i] + 0.5);
        const Eigen::MatrixXd sk = s * kdiag.asDiagonal();
        const Eigen::MatrixXd sx = s * xsq;
        const Eigen::MatrixXd v = sol.vectors.leftCols(interior);
        const Eigen::MatrixXd kin = v.transpose() * sk * v;
        const Eigen::MatrixXd pos = v.transpose() * sx * v;
        for (int a = 0; a < interior; ++a) {
          for (int b = 0; b < interior; ++b) {
            const double eb = sol.values[b], ea = sol.values[a];
            const double iab = kin(a, b) - 2.0 * lam * eb * pos(a, b);
            rep.max_interior = std::max(rep.max_interior, std::abs((eb - ea) * iab));
          }
        }
      }
      rep.interior_states += interior;
    }
  }
  return rep;
}

namespace {

// Additive recurrence with the generalized golden ratio of dimension d.
class Kronecker {
 public:
  Kronecker(int dim, std::uint64_t seed) : alpha_(dim), offset_(dim) {
    double phi = 2.0;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    for (int k = 0; k < dim; ++k) {
      alpha_[k] = std::pow(1.0 / phi, k + 1);
      offset_[k] = std::fmod(0.5 + 0.6180339887498949 * static_cast<double>(seed % 1000003) * (k + 1), 1.0);
    }
  }
  double at(std::size_t i, int k) const { return std::fmod(offset_[k] + (i + 1) * alpha_[k], 1.0); }

 private:
  std::vector<double> alpha_, offset_;
};

double off_pole(double theta) {
  const double q = std::numbers::pi / 2.0;
  const double r = std::remainder(theta, q);
  if (std::abs(r) < 1e-3) theta += 2e-3;
  return theta;
}

ResidualReport summarize(const std::vector<double>& residual, const std::vector<double>& amp, double energy) {
  ResidualReport rep;
  rep.samples = static_cast<int>(residual.size());
  const double scale = std::abs(energy) * *std::max_element(amp.begin(), amp.end());
  double sum = 0.0;
  for (double r : residual) {
    rep.max_relative = std::max(rep.max_relative, r / scale);
    sum += r / scale;
  }
  rep.mean_relative = sum / std::max(1, rep.samples);
  return rep;
}

void check_samples(int sample_count) {
  if (sample_count < 1) throw DomainError("residual_report: sample_count must be positive");
}

}  // namespace

ResidualReport residual_report(const eigenfunctions::LineWavefunction& psi, double energy,
                               operators::LineModel model, const ModelParams& params, int sample_count,
                               std::uint64_t seed) {
  check_samples(sample_count);
  const Kronecker seq(1, seed);
  const double span = 4.0 / psi.width;
  const auto f = psi.as_function();
  auto point = [&](std::size_t i) {
    double x = span * (2.0 * seq.at(i, 0) - 1.0);
    if (std::abs(x) < 1e-3 * span) x += 1e-2 * span;
    return x;
  };
  const auto res = kernels::map_indices(static_cast<std::size_t>(sample_count), [&](std::size_t i) {
    const double x = point(i);
    return std::abs(operators::apply_hamiltonian_1d(model, params, f, x) - energy * psi(x));
  });
  const auto amp = kernels::map_indices(static_cast<std::size_t>(sample_count),
                                        [&](std::size_t i) { return std::abs(psi(point(i))); });
  return summarize(res, amp, energy);
}

ResidualReport residual_report(const eigenfunctions::ProductWavefunction& psi, double energy,
                               operators::LineModel model, const ModelParams& params, int sample_count,
                               std::uint64_t seed) {
  check_samples(sample_count);
  const int dim = static_cast<int>(psi.factors.size());
  if (dim != params.dim) throw DomainError("residual_report: dimension mismatch");
  const Kronecker seq(dim, seed);
  const double span = 4.0 / psi.factors.front().width;
  const auto fs = psi.as_functions();
  auto point = [&](std::size_t i) {
    std::vector<double> x(dim);
    for (int k = 0; k < dim; ++k) {
      x[k] = span * (2.0 * seq.at(i, k) - 1.0);
      if (std::abs(x[k]) < 1e-3 * span) x[k] += 1e-2 * span;
    }
    return x;
  };
  const auto res = kernels::map_indices(static_cast<std::size_t>(sample_count), [&](std::size_t i) {
    const auto x = point(i);
    return std::abs(operators::apply_hamiltonian_nd(model, params, fs, x) - energy * psi(x));
  });
  const auto amp = kernels::map_indices(static_cast<std::size_t>(sample_count),
                                        [&](std::size_t i) { return std::abs(psi(point(i))); });
  return summarize(res, amp, energy);
}

ResidualReport residual_report(const eigenfunctions::PolarWavefunction& psi, double energy,
                               operators::PolarModel model, const ModelParams& params, int sample_count,
                               std::uint64_t seed) {
  check_samples(sample_count);
  const Kronecker seq(2, seed);
  const double span = 4.0 / psi.radial.width;
  const auto rad = psi.radial.as_function();
  const auto ang = psi.angular.as_function();
  auto point = [&](std::size_t i) {
    const double r = span * (0.01 + 0.99 * seq.at(i, 0));
    const double t = off_pole(2.0 * std::numbers::pi * seq.at(i, 1));
    return std::pair{r, t};
  };
  const auto res = kernels::map_indices(static_cast<std::size_t>(sample_count), [&](std::size_t i) {
    const auto [r, t] = point(i);
    return std::abs(operators::apply_hamiltonian_2d_polar(model, params, rad, ang, r, t) - energy * psi(r, t));
  });
  const auto amp = kernels::map_indices(static_cast<std::size_t>(sample_count), [&](std::size_t i) {
    const auto [r, t] = point(i);
    return std::abs(psi(r, t));
  });
  return summarize(res, amp, energy);
}

}  // namespace ddo::oracle
