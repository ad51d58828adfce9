#include "ddo/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "ddo/errors.hpp"

namespace ddo::quadrature {

double InnerProductWeight::operator()(double x) const {
  switch (kind) {
    case WeightKind::DarbouxLine:
      return 1.0 + lambda * x * x;
    case WeightKind::DunklLine:
      return std::pow(std::abs(x), 2.0 * mu);
    case WeightKind::DunklDarbouxLine:
      return (1.0 + lambda * x * x) * std::pow(std::abs(x), 2.0 * mu);
    case WeightKind::Radial:
      return (1.0 + lambda * x * x) * std::pow(x, radial_exponent);
    case WeightKind::Angular:
      return std::pow(std::abs(std::cos(x)), 2.0 * mu_x) * std::pow(std::abs(std::sin(x)), 2.0 * mu_y);
  }
  return 0.0;
}

void InnerProductWeight::validate() const {
  if (!(lambda >= 0.0)) throw DomainError("weight: lambda must be nonnegative");
  switch (kind) {
    case WeightKind::DarbouxLine:
      break;
    case WeightKind::DunklLine:
    case WeightKind::DunklDarbouxLine:
      if (!(mu > -0.5)) throw DomainError("weight: |x|^{2mu} is not integrable for mu <= -1/2");
      break;
    case WeightKind::Radial:
      if (!(radial_exponent > -1.0)) throw DomainError("weight: r^p is not integrable for p <= -1");
      break;
    case WeightKind::Angular:
      if (!(mu_x > -0.5) || !(mu_y > -0.5)) throw DomainError("weight: angular weight not integrable");
      break;
  }
}

InnerProductWeight darboux_line(double lambda) { return {WeightKind::DarbouxLine, lambda}; }
InnerProductWeight dunkl_line(double mu) { return {WeightKind::DunklLine, 0.0, mu}; }
InnerProductWeight dunkl_darboux_line(double lambda, double mu) { return {WeightKind::DunklDarbouxLine, lambda, mu}; }
InnerProductWeight radial(double exponent, double lambda) {
  InnerProductWeight w{WeightKind::Radial, lambda};
  w.radial_exponent = exponent;
  return w;
}
InnerProductWeight angular(double mu_x, double mu_y) {
  InnerProductWeight w{WeightKind::Angular};
  w.mu_x = mu_x;
  w.mu_y = mu_y;
  return w;
}

double QuadratureRule::integrate(const std::function<double(double)>& h) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * h(nodes[i]);
  return acc;
}

namespace {

// Orthonormal Laguerre functions l_j = p_j sqrt(u^alpha e^{-u}) and their
// u-derivatives up to index n, by the three-term recurrence.
struct LaguerreFunctions {
  double sum_sq = 0.0;  // sum_{j<n} l_j^2
  double last = 0.0;    // l_n
  double last_d = 0.0;  // l_n'
};

LaguerreFunctions laguerre_functions(int n, double alpha, double u) {
  const double log_s = 0.5 * (alpha * std::log(u) - u - std::lgamma(alpha + 1.0));
  double prev = 0.0, prev_d = 0.0;
  double cur = std::exp(log_s);
  double cur_d = cur * 0.5 * (alpha / u - 1.0);
  LaguerreFunctions out;
  for (int j = 0; j < n; ++j) {
    out.sum_sq += cur * cur;
    const double a = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
    const double b = std::sqrt(j * (j + alpha));
    const double next = ((2.0 * j + 1.0 + alpha - u) * cur - b * prev) / a;
    const double next_d = ((2.0 * j + 1.0 + alpha - u) * cur_d - cur - b * prev_d) / a;
    prev = cur;
    prev_d = cur_d;
    cur = next;
    cur_d = next_d;
  }
  out.last = cur;
  out.last_d = cur_d;
  return out;
}

}  // namespace

GaussRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw DomainError("gauss_laguerre: need at least one node");
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int j = 0; j < n; ++j) diag[j] = 2.0 * j + alpha + 1.0;
  for (int j = 0; j + 1 < n; ++j) sub[j] = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  GaussRule rule;
  for (int i = 0; i < n; ++i) {
    double u = solver.eigenvalues()[i];
    // Newton polish on l_n (zeros of p_n); s'/s = (alpha/u - 1)/2.
    for (int it = 0; it < 3; ++it) {
      const auto f = laguerre_functions(n, alpha, u);
      const double denom = f.last_d - f.last * 0.5 * (alpha / u - 1.0);
      if (denom == 0.0) break;
      const double step = f.last / denom;
      if (!std::isfinite(step) || std::abs(step) > 0.5 * u) break;
      u -= step;
    }
    const auto f = laguerre_functions(n, alpha, u);
    const double fw = 1.0 / f.sum_sq;
    rule.nodes.push_back(u);
    rule.function_weights.push_back(fw);
    rule.weights.push_back(fw * std::exp(alpha * std::log(u) - u));
  }
  return rule;
}

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: parameters must exceed -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  const double ab = a + b;
  for (int j = 0; j < n; ++j) {
    if (j == 0)
      diag[j] = (b - a) / (ab + 2.0);
    else
      diag[j] = (b * b - a * a) / ((2.0 * j + ab) * (2.0 * j + ab + 2.0));
  }
  for (int j = 1; j < n; ++j) {
    double v;
    if (j == 1) {
      v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double s = 2.0 * j + ab;
      v = 4.0 * j * (j + a) * (j + b) * (j + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub[j - 1] = std::sqrt(v);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                         std::lgamma(ab + 2.0);
  GaussRule rule;
  for (int i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()[i];
    const double v0 = solver.eigenvectors()(0, i);
    const double w = std::exp(log_mu0) * v0 * v0;
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
    rule.function_weights.push_back(w / (std::pow(1.0 - x, a) * std::pow(1.0 + x, b)));
  }
  return rule;
}

QuadratureRule make_quadrature(const InnerProductWeight& weight, int size, double gaussian_scale) {
  weight.validate();
  if (size < 8) throw DomainError("make_quadrature: size must be at least 8");
  if (!(gaussian_scale > 0.0)) throw DomainError("make_quadrature: gaussian scale must be positive");
  QuadratureRule rule;
  rule.weight = weight;
  rule.gaussian_scale = gaussian_scale;
  const double s = gaussian_scale;

  auto push = [&rule](double x, double w) {
    if (w > 0.0 && std::isfinite(w)) {
      rule.nodes.push_back(x);
      rule.weights.push_back(w);
    }
  };

  switch (weight.kind) {
    case WeightKind::DarbouxLine:
    case WeightKind::DunklLine:
    case WeightKind::DunklDarbouxLine: {
      rule.domain = Domain::Line;
      const double mu = weight.kind == WeightKind::DarbouxLine ? 0.0 : weight.mu;
      const auto g = gauss_laguerre(size, mu - 0.5);
      std::vector<std::pair<double, double>> half;
      for (int i = 0; i < size; ++i) {
        const double u = g.nodes[i];
        const double x = std::sqrt(u / s);
        half.emplace_back(x, g.function_weights[i] / (2.0 * std::sqrt(s * u)) * weight(x));
      }
      for (auto it = half.rbegin(); it != half.rend(); ++it) push(-it->first, it->second);
      for (const auto& [x, w] : half) push(x, w);
      break;
    }
    case WeightKind::Radial: {
      rule.domain = Domain::HalfLine;
      const auto g = gauss_laguerre(size, 0.5 * (weight.radial_exponent - 1.0));
      for (int i = 0; i < size; ++i) {
        const double u = g.nodes[i];
        const double r = std::sqrt(u / s);
        push(r, g.function_weights[i] / (2.0 * std::sqrt(s * u)) * weight(r));
      }
      break;
    }
    case WeightKind::Angular: {
      rule.domain = Domain::Circle;
      const auto g = gauss_jacobi(size, weight.mu_x - 0.5, weight.mu_y - 0.5);
      for (int i = 0; i < size; ++i) {
        const double x = g.nodes[i];
        const double t0 = 0.5 * std::acos(-x);
        const double base = g.function_weights[i] / (2.0 * std::sqrt((1.0 - x) * (1.0 + x)));
        for (double t : {t0, std::numbers::pi - t0, std::numbers::pi + t0, 2.0 * std::numbers::pi - t0})
          push(t, base * weight(t));
      }
      break;
    }
  }
  return rule;
}

}  // namespace ddo::quadrature
