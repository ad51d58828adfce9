#include <cmath>
#include <numbers>

#include "doctest.h"

#include "ddo/eigenfunctions.hpp"
#include "ddo/errors.hpp"
#include "ddo/oracle.hpp"
#include "ddo/spectra.hpp"

using namespace ddo;
using namespace ddo::eigenfunctions;
using doctest::Approx;

namespace {

ModelParams params(int dim, double lambda, std::vector<double> mu = {}, double omega_c = 0.0) {
  ModelParams p;
  p.dim = dim;
  p.lambda = lambda;
  p.mu = std::move(mu);
  p.omega_c = omega_c;
  return p;
}

// Plain trapezoid on a long interval; independent of the Gauss rules.
template <typename F>
double trapezoid(F&& f, double a, double b, int steps) {
  const double h = (b - a) / steps;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < steps; ++i) s += f(a + i * h);
  return s * h;
}

}  // namespace

TEST_CASE("1D darboux states") {
  const auto g = build_darboux_1d(params(1, 0.0), 0);
  for (double x : {0.0, 0.5, -1.2}) CHECK(g(x) == Approx(std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2)).epsilon(1e-14));
  for (int n : {0, 3, 6}) {
    const auto psi = build_darboux_1d(params(1, 0.02), n);
    const double norm = trapezoid([&](double x) { return (1 + 0.02 * x * x) * psi(x) * psi(x); }, -14, 14, 20000);
    CHECK(norm == Approx(1.0).epsilon(1e-10));
    CHECK(psi.energy == Approx(spectra::spectrum_darboux_nd(params(1, 0.02), n)).epsilon(1e-15));
    CHECK(psi.width == Approx(std::sqrt(psi.frequency)).epsilon(1e-15));
  }
  const auto psi3 = build_darboux_1d(params(1, 0.02), 3);
  CHECK(oracle::residual_report(psi3, psi3.energy, operators::LineModel::DarbouxIII, params(1, 0.02), 200).max_relative < 1e-8);
  CHECK(oracle::residual_report(g, g.energy, operators::LineModel::DarbouxIII, params(1, 0.0), 200).max_relative < 1e-12);
  CHECK(oracle::residual_report(psi3, psi3.energy + 0.1, operators::LineModel::DarbouxIII, params(1, 0.02), 200).max_relative > 1e-3);
}

TEST_CASE("1D dunkl states") {
  const ModelParams p = params(1, 0.0, {0.3});
  for (int n = 0; n < 6; ++n) {
    const auto psi = build_dunkl_1d(p, n, n % 2 ? -1 : 1);
    CHECK(psi.parity == (n % 2 ? -1 : 1));
    CHECK(psi(-0.8) == Approx(psi.parity * psi(0.8)).epsilon(1e-14));
    const double norm = trapezoid([&](double x) { return std::pow(std::abs(x), 0.6) * psi(x) * psi(x); }, -12, 12, 400000);
    CHECK(norm == Approx(1.0).epsilon(1e-5));
  }
  CHECK_THROWS_AS(build_dunkl_1d(p, 1, 1), SectorError);
  // mu = 0, even: the ordinary Hermite state up to sign
  const auto a = build_dunkl_1d(params(1, 0.0), 2, 1);
  const auto b = build_darboux_1d(params(1, 0.0), 2);
  CHECK(std::abs(a(0.7)) == Approx(std::abs(b(0.7))).epsilon(1e-13));
}

TEST_CASE("1D dunkl-darboux limits") {
  for (int n = 0; n < 5; ++n) {
    const int e = n % 2 ? -1 : 1;
    const auto dd = build_dunkl_darboux_1d(params(1, 0.0, {0.2}), n, e);
    const auto d = build_dunkl_1d(params(1, 0.0, {0.2}), n, e);
    CHECK(dd(0.9) == Approx(d(0.9)).epsilon(1e-13));
    const auto z = build_dunkl_darboux_1d(params(1, 0.04), n, e);
    const auto h = build_darboux_1d(params(1, 0.04), n);
    CHECK(std::abs(z(0.6)) == Approx(std::abs(h(0.6))).epsilon(1e-12));
  }
}

TEST_CASE("gram matrices with energy-dependent widths") {
  const ModelParams p = params(1, 0.02, {0.02});
  std::vector<LineWavefunction> st;
  for (int n = 0; n < 10; ++n) st.push_back(build_dunkl_darboux_1d(p, n, n % 2 ? -1 : 1));
  CHECK(st[0].width != st[2].width);
  CHECK(std::abs(inner_product(st[0], st[2], st[0].weight)) < 1e-8);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      CHECK(inner_product(st[i], st[j], st[i].weight) == Approx(i == j ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
  // cross-check one pair against a trapezoid rule
  const double t = trapezoid([&](double x) { return (1 + 0.02 * x * x) * std::pow(std::abs(x), 0.04) * st[1](x) * st[3](x); },
                             -14, 14, 400000);
  CHECK(std::abs(t) < 1e-5);
}

TEST_CASE("product states") {
  const ModelParams p = params(2, 0.0);
  const auto g = build_product_nd(ModelKind::Darboux, p, CartesianNumbers{{0, 0}, {}});
  CHECK(g({0.3, -0.4}) == Approx(std::exp(-0.25 / 2) / std::sqrt(std::numbers::pi)).epsilon(1e-14));
  const ModelParams q = params(3, 0.02, {0.02, 0.3, 0.1});
  const auto a = build_product_nd(ModelKind::DunklDarboux, q, CartesianNumbers{{1, 0, 2}, {-1, 1, 1}});
  const auto b = build_product_nd(ModelKind::DunklDarboux, q, CartesianNumbers{{0, 1, 2}, {1, -1, 1}});
  CHECK(inner_product(a, a, 0.02) == Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner_product(a, b, 0.02)) < 1e-12);
  CHECK(oracle::residual_report(a, a.energy, operators::LineModel::DunklDarbouxIII, q, 200).max_relative < 1e-8);
  CHECK_THROWS_AS(build_product_nd(q, {build_darboux_1d(params(1, 0.0), 0)}), DomainError);
}

TEST_CASE("angular states") {
  // flat limit, epsilon = +1, m' = 1: e^{+-2it} up to a constant
  for (int br : {1, -1}) {
    const auto f = build_angular(0.0, 0.0, 1.0, 1, br);
    const std::complex<double> ratio = f(0.7) / std::exp(std::complex<double>(0, -2.0 * br * 0.7));
    const std::complex<double> ratio2 = f(2.3) / std::exp(std::complex<double>(0, -2.0 * br * 2.3));
    CHECK(std::abs(ratio - ratio2) < 1e-13);
  }
  const auto s = build_angular(0.3, 0.1, 0.0, 1, 1);
  CHECK(std::abs(s(0.1) - s(2.9)) < 1e-15);
  CHECK(s.sigma == 0.0);
  // sector parity: R_x F = e_x-like mix, R_x R_y F = epsilon F
  for (int tw = 1; tw < 6; ++tw) {
    const auto f = build_angular(0.02, 0.02, 0.5 * tw, tw % 2 ? -1 : 1, 1);
    CHECK(std::abs(f(0.4 - std::numbers::pi) - double(f.epsilon) * f(0.4)) < 1e-13);
    CHECK(inner_product(f, f, f.weight).real() == Approx(1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(build_angular(0.02, 0.02, 0.5, 1, 1), SectorError);
}

TEST_CASE("radial states") {
  const ModelParams p = params(2, 0.0, {}, 0.0);
  const auto r = build_radial_2d(ModelKind::DunklLandau, params(2, 0.0, {0.0, 0.0}), SectorNumbers{0, 4, 1, 1});
  CHECK(r.prefactor_power == Approx(4.0));
  CHECK(r.laguerre_alpha == Approx(4.0));
  const auto l = build_radial_2d(ModelKind::DarbouxLandau, params(2, 0.02, {}, 0.1), LandauNumbers{2, -3});
  CHECK(inner_product(l, l, l.weight) == Approx(1.0).epsilon(1e-13));
  const double t = trapezoid([&](double x) { return (1 + 0.02 * x * x) * x * l(x) * l(x); }, 0.0, 16.0, 200000);
  CHECK(t == Approx(1.0).epsilon(1e-8));
  (void)p;
}
