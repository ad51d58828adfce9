#include "ddo/specfun.hpp"

#include <cmath>
#include <string>

#include "ddo/errors.hpp"

namespace ddo::specfun {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative degree");
}

void require_above_minus_one(double p, const char* what) {
  if (!(p > -1.0)) throw DomainError(std::string(what) + ": parameter must exceed -1");
}

}  // namespace

void PolyParams::validate() const {
  require_nonnegative(degree, "PolyParams");
  switch (kind) {
    case PolyKind::Hermite:
      break;
    case PolyKind::GeneralizedLaguerre:
      require_above_minus_one(alpha, "PolyParams(Laguerre)");
      break;
    case PolyKind::Jacobi:
      require_above_minus_one(alpha, "PolyParams(Jacobi)");
      require_above_minus_one(beta_param, "PolyParams(Jacobi)");
      break;
    case PolyKind::GeneralizedHermite:
      if (!(mu > -0.5)) throw DomainError("PolyParams(GeneralizedHermite): mu must exceed -1/2");
      if (parity_q != 0 && parity_q != 1) throw DomainError("PolyParams: parity_q must be 0 or 1");
      break;
  }
}

double eval_hermite(int n, double u) {
  require_nonnegative(n, "eval_hermite");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * u;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * u * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_generalized_laguerre(int n, double alpha, double u) {
  require_nonnegative(n, "eval_generalized_laguerre");
  require_above_minus_one(alpha, "eval_generalized_laguerre");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - u;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - u) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_jacobi(int n, double a, double b, double x) {
  require_nonnegative(n, "eval_jacobi");
  require_above_minus_one(a, "eval_jacobi");
  require_above_minus_one(b, "eval_jacobi");
  if (std::abs(x) > 1.0 + 1e-12) throw DomainError("eval_jacobi: x outside [-1, 1]");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c0 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c1 * cur - c2 * prev) / c0;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_gamma_ratio: arguments must be positive");
  const double diff = a - b;
  const double steps = std::round(diff);
  // Integer offsets: telescoping Gamma(z+1) = z Gamma(z) is exact to rounding.
  if (std::abs(diff - steps) < 1e-14 * std::max(1.0, std::abs(a)) && std::abs(steps) <= 64.0) {
    double acc = 0.0;
    const int k = static_cast<int>(steps);
    if (k >= 0) {
      for (int j = 0; j < k; ++j) acc += std::log(b + j);
    } else {
      for (int j = 0; j < -k; ++j) acc -= std::log(a + j);
    }
    return acc;
  }
  return std::lgamma(a) - std::lgamma(b);
}

double eval_generalized_hermite(int n, double mu, int parity_q, double beta_scale, double x) {
  require_nonnegative(n, "eval_generalized_hermite");
  if (!(mu > -0.5)) throw DomainError("eval_generalized_hermite: mu must exceed -1/2");
  if (parity_q != 0 && parity_q != 1) throw DomainError("eval_generalized_hermite: parity_q must be 0 or 1");
  if (!(beta_scale > 0.0)) throw DomainError("eval_generalized_hermite: beta_scale must be positive");
  const double alpha = mu + parity_q - 0.5;
  // beta^2 n! / Gamma(n + alpha + 1), in log space.
  const double log_c = 2.0 * std::log(beta_scale) - log_gamma_ratio(n + alpha + 1.0, n + 1.0);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double xq = parity_q == 1 ? x : 1.0;
  return sign * std::exp(0.5 * log_c) * xq *
         eval_generalized_laguerre(n, alpha, beta_scale * beta_scale * x * x);
}

double evaluate(const PolyParams& p, double x) {
  p.validate();
  switch (p.kind) {
    case PolyKind::Hermite:
      return eval_hermite(p.degree, x);
    case PolyKind::GeneralizedLaguerre:
      return eval_generalized_laguerre(p.degree, p.alpha, x);
    case PolyKind::Jacobi:
      return eval_jacobi(p.degree, p.alpha, p.beta_param, x);
    case PolyKind::GeneralizedHermite:
      return eval_generalized_hermite(p.degree, p.mu, p.parity_q, 1.0, x);
  }
  return 0.0;
}

RealJet hermite_jet(int n, double u) {
  RealJet j{eval_hermite(n, u), 0.0, 0.0};
  if (n >= 1) j.d1 = 2.0 * n * eval_hermite(n - 1, u);
  if (n >= 2) j.d2 = 4.0 * n * (n - 1.0) * eval_hermite(n - 2, u);
  return j;
}

RealJet laguerre_jet(int n, double alpha, double u) {
  RealJet j{eval_generalized_laguerre(n, alpha, u), 0.0, 0.0};
  if (n >= 1) j.d1 = -eval_generalized_laguerre(n - 1, alpha + 1.0, u);
  if (n >= 2) j.d2 = eval_generalized_laguerre(n - 2, alpha + 2.0, u);
  return j;
}

RealJet jacobi_jet(int n, double a, double b, double x) {
  RealJet j{eval_jacobi(n, a, b, x), 0.0, 0.0};
  if (n >= 1) j.d1 = 0.5 * (n + a + b + 1.0) * eval_jacobi(n - 1, a + 1.0, b + 1.0, x);
  if (n >= 2) j.d2 = 0.25 * (n + a + b + 1.0) * (n + a + b + 2.0) * eval_jacobi(n - 2, a + 2.0, b + 2.0, x);
  return j;
}

}  // namespace ddo::specfun
