#pragma once

// Dunkl differential-difference operators and Hamiltonian applicators acting
// on functions that carry exact first and second derivatives.

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "ddo/jet.hpp"
#include "ddo/model.hpp"

namespace ddo::operators {

enum class Parity { Even, Odd };

struct SmoothFunction1D {
  std::function<RealJet(double)> at;  // value, f', f'' at x
  std::optional<Parity> parity_hint;

  double value(double x) const { return at(x).value; }
  // order 1 or 2
  double derivative(double x, int order) const;
};

// Complex 2pi-periodic function of the polar angle with exact derivatives.
struct AngularFunction {
  std::function<ComplexJet(double)> at;
  std::complex<double> value(double theta) const { return at(theta).value; }
};

using RadialFunction = std::function<RealJet(double)>;

enum class Axis { X, Y };

// Polar reflections: X sends theta to pi - theta, Y sends theta to -theta.
double reflect_angle(Axis axis, double theta);
SmoothFunction1D reflect(const SmoothFunction1D& f);
AngularFunction reflect(const AngularFunction& g, Axis axis);

// f'(x) + (mu/x)(f(x) - f(-x)); at x = 0 uses the parity hint, otherwise
// throws SingularOriginError (mu != 0).
double dunkl_derivative_1d(const SmoothFunction1D& f, double mu, double x);

// f'' + (2mu/x) f' - (mu/x^2)(f(x) - f(-x)), same origin rules.
double dunkl_laplacian_1d(const SmoothFunction1D& f, double mu, double x);

enum class LineModel { DarbouxIII, Dunkl, DunklDarbouxIII };

// [-(hbar^2/2) K f + (omega^2/2) x^2 f] / (1 + lambda x^2)^s with K = d^2
// (DarbouxIII) or the Dunkl-Laplacian with mu = params.mu_at(0); s = 0 for Dunkl.
double apply_hamiltonian_1d(LineModel model, const ModelParams& params, const SmoothFunction1D& f,
                            double x);

// Same operator in N dimensions on a product function prod_i f_i(x_i); K is
// the sum of the per-axis (Dunkl-)Laplacians and the prefactor uses |x|^2.
double apply_hamiltonian_nd(LineModel model, const ModelParams& params,
                            const std::vector<SmoothFunction1D>& factors, const std::vector<double>& x);

// i[g' + mu_y cot(t)(g(t) - g(-t)) - mu_x tan(t)(g(t) - g(pi - t))].
std::complex<double> angular_operator_J(const AngularFunction& g, double mu_x, double mu_y, double theta);

// -g'' + 2(mu_x tan t - mu_y cot t) g' + mu_x (1-R_x)g / cos^2 t + mu_y (1-R_y)g / sin^2 t.
// Equals J^2 - 2 mu_x mu_y (1 - R_x R_y).
std::complex<double> angular_operator_Htheta(const AngularFunction& g, double mu_x, double mu_y,
                                             double theta);

enum class PolarModel { DarbouxIII_B, Dunkl_B, DunklDarbouxIII_B };

// H acting on psi(r, t) = radial(r) * angular(t):
// [-(hbar^2/2)(d_r^2 + (1+2mu_x+2mu_y)/r d_r - H_t/r^2) + hbar omega_c J
//  + omega_tilde^2 r^2/2] psi, divided by 1 + lambda r^2 for the Darboux kinds.
// DarbouxIII_B ignores mu. Throws DomainError for r <= 0.
std::complex<double> apply_hamiltonian_2d_polar(PolarModel model, const ModelParams& params,
                                                const RadialFunction& radial, const AngularFunction& angular,
                                                double r, double theta);

}  // namespace ddo::operators
