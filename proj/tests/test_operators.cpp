#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"

#include "ddo/eigenfunctions.hpp"
#include "ddo/errors.hpp"
#include "ddo/operators.hpp"
#include "ddo/spectra.hpp"

using namespace ddo;
using namespace ddo::operators;
using doctest::Approx;
using cplx = std::complex<double>;

namespace {

SmoothFunction1D monomial(int k, std::optional<Parity> hint = std::nullopt) {
  SmoothFunction1D f;
  f.at = [k](double x) {
    return RealJet{std::pow(x, k), k * std::pow(x, k - 1), k * (k - 1) * std::pow(x, k - 2)};
  };
  f.parity_hint = hint;
  return f;
}

AngularFunction fourier_mode(int m) {
  return {[m](double t) {
    const cplx e = std::exp(cplx(0, m * t));
    return ComplexJet{e, cplx(0, m) * e, -double(m * m) * e};
  }};
}

ModelParams params(int dim, double lambda, std::vector<double> mu = {}, double omega_c = 0.0) {
  ModelParams p;
  p.dim = dim;
  p.lambda = lambda;
  p.mu = std::move(mu);
  p.omega_c = omega_c;
  return p;
}

}  // namespace

TEST_CASE("dunkl derivative") {
  CHECK(dunkl_derivative_1d(monomial(1), 0.3, 2.0) == Approx(1.6).epsilon(1e-15));
  CHECK(dunkl_derivative_1d(monomial(2), 0.25, 1.3) == Approx(2.6).epsilon(1e-15));
  SmoothFunction1D even;
  even.at = [](double x) { return RealJet{std::cos(x), -std::sin(x), -std::cos(x)}; };
  for (double x : {-1.2, 0.3, 2.2}) CHECK(dunkl_derivative_1d(even, 0.4, x) == Approx(-std::sin(x)).epsilon(1e-15));
  // mu = 0 is the plain derivative, including at the origin
  SmoothFunction1D general;
  general.at = [](double x) { return RealJet{std::exp(x), std::exp(x), std::exp(x)}; };
  CHECK(dunkl_derivative_1d(general, 0.0, 0.7) == std::exp(0.7));
  CHECK(dunkl_derivative_1d(general, 0.0, 0.0) == 1.0);
  // origin: needs a parity hint
  CHECK_THROWS_AS(dunkl_derivative_1d(monomial(1), 0.3, 0.0), SingularOriginError);
  CHECK(dunkl_derivative_1d(monomial(1, Parity::Odd), 0.3, 0.0) == Approx(1.6).epsilon(1e-15));
  CHECK(dunkl_derivative_1d(monomial(2, Parity::Even), 0.3, 0.0) == 0.0);
}

TEST_CASE("dunkl laplacian") {
  for (double mu : {0.0, 0.02, 0.3}) CHECK(dunkl_laplacian_1d(monomial(2), mu, 1.0) == Approx(2 + 4 * mu).epsilon(1e-15));
  SmoothFunction1D f;
  f.at = [](double x) { return RealJet{std::sin(x) + x * x, std::cos(x) + 2 * x, -std::sin(x) + 2}; };
  CHECK(dunkl_laplacian_1d(f, 0.0, 0.8) == Approx(-std::sin(0.8) + 2).epsilon(1e-15));
  // matches D applied twice on an odd cubic: D x^3 = (3 + 2mu) x^2, D x^2 = 2x
  CHECK(dunkl_laplacian_1d(monomial(3), 0.2, 1.7) == Approx((3 + 0.4) * 2 * 1.7).epsilon(1e-14));
  CHECK(dunkl_laplacian_1d(monomial(2, Parity::Even), 0.2, 0.0) == Approx(2 * 1.4).epsilon(1e-15));
  CHECK_THROWS_AS(dunkl_laplacian_1d(monomial(2), 0.2, 0.0), SingularOriginError);
}

TEST_CASE("dunkl oscillator ground state satisfies the rearranged eigen-equation") {
  const ModelParams p = params(1, 0.0, {0.02});
  const auto psi = eigenfunctions::build_dunkl_1d(p, 0, 1);
  const double e = spectra::spectrum_dunkl_1d(p, 0);
  for (double x : {-1.4, 0.2, 0.9}) {
    const auto f = psi.as_function();
    CHECK(dunkl_laplacian_1d(f, 0.02, x) == Approx(2 * (0.5 * x * x - e) * psi(x)).epsilon(1e-13));
  }
}

TEST_CASE("line hamiltonians") {
  const ModelParams p = params(1, 0.02);
  const auto psi = eigenfunctions::build_darboux_1d(p, 0);
  CHECK(apply_hamiltonian_1d(LineModel::DarbouxIII, p, psi.as_function(), 0.4) ==
        Approx(spectra::spectrum_darboux_nd(p, 0) * psi(0.4)).epsilon(1e-13));
  SmoothFunction1D g;
  g.at = [](double x) { return RealJet{std::exp(-x * x) * (1 + x), std::exp(-x * x) * (1 - 2 * x - 2 * x * x),
                                       std::exp(-x * x) * (-2 - 6 * x + 4 * x * x + 4 * x * x * x)}; };
  const ModelParams d = params(1, 0.0, {0.3});
  for (double x : {-0.7, 0.5, 1.9})
    CHECK(apply_hamiltonian_1d(LineModel::DunklDarbouxIII, d, g, x) ==
          Approx(apply_hamiltonian_1d(LineModel::Dunkl, d, g, x)).epsilon(1e-15));
}

TEST_CASE("angular J") {
  for (int m : {-3, 0, 2, 5}) {
    const auto g = fourier_mode(m);
    for (double t : {0.3, 1.1, 4.0}) {
      const cplx j = angular_operator_J(g, 0.0, 0.0, t);
      CHECK(std::abs(j - double(-m) * g.value(t)) < 1e-14);
    }
  }
  const AngularFunction one{[](double) { return ComplexJet{1.0, 0.0, 0.0}; }};
  CHECK(std::abs(angular_operator_J(one, 0.3, 0.1, 0.7)) == 0.0);
  // eigenfunction in the epsilon = +1, m' = 1 sector
  const auto f = eigenfunctions::build_angular(0.02, 0.02, 1.0, 1, 1);
  const double sigma = 2 * std::sqrt(1.04);
  for (double t : {0.2, 1.0, 2.5, 3.9, 5.5}) {
    const cplx j = angular_operator_J(f.as_function(), 0.02, 0.02, t);
    CHECK(std::abs(j - sigma * f(t)) < 1e-13);
  }
}

TEST_CASE("angular H_theta") {
  for (int m : {-4, 1, 3}) {
    const auto g = fourier_mode(m);
    CHECK(std::abs(angular_operator_Htheta(g, 0.0, 0.0, 0.9) - double(m * m) * g.value(0.9)) < 1e-13);
  }
  // J^2 g = H g + 2 mu_x mu_y (g - g(t - pi)) on the eigenfunctions
  for (int tw = 1; tw < 7; ++tw)
    for (int br : {1, -1}) {
      const auto f = eigenfunctions::build_angular(0.1, 0.3, 0.5 * tw, tw % 2 ? -1 : 1, br);
      for (double t : {0.4, 2.0, 4.4}) {
        const cplx h = angular_operator_Htheta(f.as_function(), 0.1, 0.3, t);
        const cplx rhs = f.sigma * f.sigma * f(t) - 2 * 0.1 * 0.3 * (f(t) - f(t - std::numbers::pi));
        CHECK(std::abs(h - rhs) < 1e-12);
      }
    }
}

TEST_CASE("angular operators at the poles") {
  // even under both reflections: removable limit
  const AngularFunction c2{[](double t) { return ComplexJet{std::cos(2 * t), -2 * std::sin(2 * t), -4 * std::cos(2 * t)}; }};
  CHECK(std::abs(angular_operator_J(c2, 0.1, 0.2, 0.0)) < 1e-14);
  CHECK(std::abs(angular_operator_Htheta(c2, 0.1, 0.2, 0.0) - angular_operator_Htheta(c2, 0.1, 0.2, 1e-6)) < 1e-5);
  CHECK_THROWS_AS(angular_operator_J(fourier_mode(1), 0.1, 0.2, std::numbers::pi / 2), PoleError);
  CHECK_THROWS_AS(angular_operator_Htheta(fourier_mode(1), 0.1, 0.2, 0.0), PoleError);
}

TEST_CASE("reflections") {
  CHECK(reflect_angle(Axis::X, 0.3) == Approx(std::numbers::pi - 0.3));
  CHECK(reflect_angle(Axis::Y, 0.3) == Approx(-0.3));
  const auto f = eigenfunctions::build_angular(0.02, 0.02, 1.5, -1, 1);
  const auto rx = reflect(f.as_function(), Axis::X);
  for (double t : {0.2, 1.3, 3.0}) {
    CHECK(std::abs(rx.value(t) - f(std::numbers::pi - t)) == 0.0);
    // R_x R_y acts as epsilon = -1
    CHECK(std::abs(reflect(rx, Axis::Y).value(t) + f(t)) < 1e-13);
  }
  const auto g = monomial(3);
  CHECK(reflect(g).value(1.5) == Approx(-3.375));
  CHECK(reflect(g).derivative(1.5, 1) == Approx(-3 * 2.25));
}

TEST_CASE("polar hamiltonian") {
  // flat isotropic oscillator on r^|m| e^{-r^2/2} e^{i m t}: energy |m| + 1
  const ModelParams p = params(2, 0.0);
  for (int m : {0, 1, -2}) {
    const RadialFunction rad = [m](double r) {
      const int a = std::abs(m);
      const double g = std::exp(-r * r / 2), pw = std::pow(r, a);
      const double d1 = (a ? a * std::pow(r, a - 1) : 0.0) - r * pw;
      const double d2 = (a > 1 ? a * (a - 1) * std::pow(r, a - 2) : 0.0) - (a + 1) * pw - r * (a ? a * std::pow(r, a - 1) : 0.0) + r * r * pw;
      return RealJet{pw * g, d1 * g, d2 * g};
    };
    const cplx h = apply_hamiltonian_2d_polar(PolarModel::DarbouxIII_B, p, rad, fourier_mode(m), 0.8, 0.6);
    CHECK(std::abs(h - (std::abs(m) + 1.0) * rad(0.8).value * fourier_mode(m).value(0.6)) < 1e-13);
  }
  const ModelParams q = params(2, 0.02, {}, 0.1);
  const auto psi = eigenfunctions::build_polar_2d(ModelKind::DarbouxLandau, q, LandauNumbers{1, -2});
  const cplx h = apply_hamiltonian_2d_polar(PolarModel::DarbouxIII_B, q, psi.radial.as_function(),
                                            psi.angular.as_function(), 1.3, 2.1);
  CHECK(std::abs(h - psi.energy * psi(1.3, 2.1)) < 1e-12);
  const ModelParams d = params(2, 0.0, {0.02, 0.02});
  const auto chi = eigenfunctions::build_polar_2d(ModelKind::DunklLandau, d, SectorNumbers{0, 2, 1, 1});
  const cplx hd = apply_hamiltonian_2d_polar(PolarModel::Dunkl_B, d, chi.radial.as_function(),
                                             chi.angular.as_function(), 0.9, 0.4);
  CHECK(std::abs(hd - spectra::spectrum_landau_dunkl_2d(d, SectorNumbers{0, 2, 1, 1}) * chi(0.9, 0.4)) < 1e-12);
  CHECK_THROWS_AS(apply_hamiltonian_2d_polar(PolarModel::Dunkl_B, d, chi.radial.as_function(),
                                             chi.angular.as_function(), 0.0, 0.4),
                  DomainError);
}
