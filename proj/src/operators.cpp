#include "ddo/operators.hpp"

#include <cmath>
#include <numbers>

#include "ddo/errors.hpp"

namespace ddo::operators {

namespace {

using cplx = std::complex<double>;

void check_line_params(const ModelParams& p, double mu) {
  if (!(p.hbar > 0.0)) throw DomainError("hbar must be positive");
  if (!(p.omega > 0.0)) throw DomainError("omega must be positive");
  if (!(p.lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  if (!(mu > -0.5)) throw DomainError("mu must exceed -1/2");
}

bool on_sin_pole(double theta) { return std::abs(std::sin(theta)) < 1e-12; }
bool on_cos_pole(double theta) { return std::abs(std::cos(theta)) < 1e-12; }

// g o R == g identically, probed at a few offsets from theta0.
bool reflection_symmetric(const AngularFunction& g, Axis axis, double theta0) {
  for (double d : {1e-2, 0.31, 1.13}) {
    const double t = theta0 + d;
    const cplx a = g.value(t);
    const cplx b = g.value(reflect_angle(axis, t));
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    if (std::abs(a - b) > 1e-12 * scale) return false;
  }
  return true;
}

double mu_or_zero(LineModel model, double mu) { return model == LineModel::DarbouxIII ? 0.0 : mu; }

}  // namespace

double SmoothFunction1D::derivative(double x, int order) const {
  const RealJet j = at(x);
  if (order == 1) return j.d1;
  if (order == 2) return j.d2;
  throw DomainError("derivative order must be 1 or 2");
}

double reflect_angle(Axis axis, double theta) {
  return axis == Axis::X ? std::numbers::pi - theta : -theta;
}

SmoothFunction1D reflect(const SmoothFunction1D& f) {
  SmoothFunction1D out;
  out.at = [at = f.at](double x) {
    const RealJet j = at(-x);
    return RealJet{j.value, -j.d1, j.d2};
  };
  out.parity_hint = f.parity_hint;
  return out;
}

AngularFunction reflect(const AngularFunction& g, Axis axis) {
  // both reflections reverse the orientation of theta
  return {[at = g.at, axis](double t) {
    const ComplexJet j = at(reflect_angle(axis, t));
    return ComplexJet{j.value, -j.d1, j.d2};
  }};
}

double dunkl_derivative_1d(const SmoothFunction1D& f, double mu, double x) {
  if (!(mu > -0.5)) throw DomainError("dunkl_derivative_1d: mu must exceed -1/2");
  const RealJet j = f.at(x);
  if (mu == 0.0) return j.d1;
  if (x == 0.0) {
    if (!f.parity_hint) throw SingularOriginError("dunkl_derivative_1d: x = 0 needs a parity hint");
    return *f.parity_hint == Parity::Even ? 0.0 : (1.0 + 2.0 * mu) * j.d1;
  }
  return j.d1 + (mu / x) * (j.value - f.value(-x));
}

double dunkl_laplacian_1d(const SmoothFunction1D& f, double mu, double x) {
  if (!(mu > -0.5)) throw DomainError("dunkl_laplacian_1d: mu must exceed -1/2");
  const RealJet j = f.at(x);
  if (mu == 0.0) return j.d2;
  if (x == 0.0) {
    if (!f.parity_hint) throw SingularOriginError("dunkl_laplacian_1d: x = 0 needs a parity hint");
    return *f.parity_hint == Parity::Even ? (1.0 + 2.0 * mu) * j.d2 : 0.0;
  }
  return j.d2 + (2.0 * mu / x) * j.d1 - (mu / (x * x)) * (j.value - f.value(-x));
}

double apply_hamiltonian_1d(LineModel model, const ModelParams& params, const SmoothFunction1D& f,
                            double x) {
  const double mu = mu_or_zero(model, params.mu_at(0));
  check_line_params(params, mu);
  const double kin = model == LineModel::DarbouxIII ? f.derivative(x, 2) : dunkl_laplacian_1d(f, mu, x);
  const double h = params.hbar;
  const double num = -0.5 * h * h * kin + 0.5 * params.omega * params.omega * x * x * f.value(x);
  if (model == LineModel::Dunkl) return num;
  return num / (1.0 + params.lambda * x * x);
}

double apply_hamiltonian_nd(LineModel model, const ModelParams& params,
                            const std::vector<SmoothFunction1D>& factors, const std::vector<double>& x) {
  const std::size_t n = factors.size();
  if (n == 0 || x.size() != n) throw DomainError("apply_hamiltonian_nd: dimension mismatch");
  std::vector<double> values(n);
  std::vector<double> laps(n);
  double r2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = mu_or_zero(model, params.mu_at(static_cast<int>(i)));
    check_line_params(params, mu);
    values[i] = factors[i].value(x[i]);
    laps[i] = model == LineModel::DarbouxIII ? factors[i].derivative(x[i], 2)
                                             : dunkl_laplacian_1d(factors[i], mu, x[i]);
    r2 += x[i] * x[i];
  }
  double psi = 1.0;
  for (double v : values) psi *= v;
  double kin = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double term = laps[i];
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) term *= values[k];
    kin += term;
  }
  const double h = params.hbar;
  const double num = -0.5 * h * h * kin + 0.5 * params.omega * params.omega * r2 * psi;
  if (model == LineModel::Dunkl) return num;
  return num / (1.0 + params.lambda * r2);
}

std::complex<double> angular_operator_J(const AngularFunction& g, double mu_x, double mu_y, double theta) {
  const ComplexJet j = g.at(theta);
  cplx acc = j.d1;
  if (mu_y != 0.0) {
    if (on_sin_pole(theta)) {
      if (!reflection_symmetric(g, Axis::Y, theta)) throw PoleError("angular_operator_J: cot pole");
    } else {
      acc += mu_y * (std::cos(theta) / std::sin(theta)) * (j.value - g.value(-theta));
    }
  }
  if (mu_x != 0.0) {
    if (on_cos_pole(theta)) {
      if (!reflection_symmetric(g, Axis::X, theta)) throw PoleError("angular_operator_J: tan pole");
    } else {
      acc -= mu_x * std::tan(theta) * (j.value - g.value(std::numbers::pi - theta));
    }
  }
  return cplx(0.0, 1.0) * acc;
}

std::complex<double> angular_operator_Htheta(const AngularFunction& g, double mu_x, double mu_y,
                                             double theta) {
  const ComplexJet j = g.at(theta);
  cplx acc = -j.d2;
  if (mu_x != 0.0) {
    if (on_cos_pole(theta)) {
      if (!reflection_symmetric(g, Axis::X, theta)) throw PoleError("angular_operator_Htheta: tan pole");
      acc -= 2.0 * mu_x * j.d2;
    } else {
      const double c = std::cos(theta);
      acc += 2.0 * mu_x * std::tan(theta) * j.d1;
      acc += mu_x * (j.value - g.value(std::numbers::pi - theta)) / (c * c);
    }
  }
  if (mu_y != 0.0) {
    if (on_sin_pole(theta)) {
      if (!reflection_symmetric(g, Axis::Y, theta)) throw PoleError("angular_operator_Htheta: cot pole");
      acc -= 2.0 * mu_y * j.d2;
    } else {
      const double s = std::sin(theta);
      acc -= 2.0 * mu_y * (std::cos(theta) / s) * j.d1;
      acc += mu_y * (j.value - g.value(-theta)) / (s * s);
    }
  }
  return acc;
}

std::complex<double> apply_hamiltonian_2d_polar(PolarModel model, const ModelParams& params,
                                                const RadialFunction& radial, const AngularFunction& angular,
                                                double r, double theta) {
  if (!(r > 0.0)) throw DomainError("apply_hamiltonian_2d_polar: r must be positive");
  const bool flat_mu = model == PolarModel::DarbouxIII_B;
  const double mx = flat_mu ? 0.0 : params.mu_at(0);
  const double my = flat_mu ? 0.0 : params.mu_at(1);
  check_line_params(params, mx);
  check_line_params(params, my);
  if (!(params.omega_c >= 0.0)) throw DomainError("omega_c must be nonnegative");

  const RealJet R = radial(r);
  const cplx F = angular.value(theta);
  const cplx HF = angular_operator_Htheta(angular, mx, my, theta);
  const cplx JF = angular_operator_J(angular, mx, my, theta);

  const double h = params.hbar;
  const double wt = params.omega_tilde();
  const cplx lap = (R.d2 + (1.0 + 2.0 * mx + 2.0 * my) / r * R.d1) * F - R.value * HF / (r * r);
  const cplx num = -0.5 * h * h * lap + h * params.omega_c * R.value * JF + 0.5 * wt * wt * r * r * R.value * F;
  if (model == PolarModel::Dunkl_B) return num;
  return num / (1.0 + params.lambda * r * r);
}

}  // namespace ddo::operators
