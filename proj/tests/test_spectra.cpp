#include <cmath>
#include <map>

#include "doctest.h"

#include "ddo/errors.hpp"
#include "ddo/spectra.hpp"

using namespace ddo;
using namespace ddo::spectra;
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

// The un-rationalized textbook root of E = hbar T sqrt(w^2 - 2 lambda E).
double literal_root(double hbar, double w, double lambda, double T) {
  return -hbar * hbar * lambda * T * T + hbar * T * std::sqrt(hbar * hbar * lambda * lambda * T * T + w * w);
}

}  // namespace

TEST_CASE("geometry: metric factor and scalar curvature") {
  CHECK(metric_factor(params(2, 0.0), 3.7) == 1.0);
  CHECK(metric_factor(params(2, 0.02), 4.0) == Approx(1.08).epsilon(1e-15));
  CHECK(metric_factor(params(2, 1.0), 0.0) == 1.0);
  CHECK(scalar_curvature(params(1, 0.3), 2.0) == 0.0);
  CHECK(scalar_curvature(params(3, 0.0), 2.0) == 0.0);
  CHECK(scalar_curvature(params(2, 0.02), 0.0) == Approx(-0.08).epsilon(1e-15));
  // N = 3 by hand: -lambda*2*(6 + 3 lambda x^2)/(1+lambda x^2)^3
  const double l = 0.05, x2 = 1.5;
  CHECK(scalar_curvature(params(3, l), x2) == Approx(-l * 2 * (6 + 3 * l * x2) / std::pow(1 + l * x2, 3)).epsilon(1e-14));
}

TEST_CASE("effective frequency") {
  CHECK(effective_frequency(params(1, 0.0), 12.0) == 1.0);
  CHECK(effective_frequency(params(1, 0.02), 0.0) == 1.0);
  // N = 2 ground level satisfies E = hbar Omega(E) * 1
  const double e0 = spectrum_darboux_nd(params(2, 0.02), 0);
  CHECK(effective_frequency(params(2, 0.02), e0) == Approx(e0).epsilon(1e-14));
  CHECK_THROWS_AS(effective_frequency(params(1, 0.02), 30.0), DomainError);
}

TEST_CASE("darboux closed form against high-precision roots and the literal formula") {
  const double n2[] = {0.98019998000399900028, 1.9215993605114885728, 2.8253951487283664676,
                       3.6927795852750247962,  4.5249378105604451351, 5.3230455897668023468};
  for (int n = 0; n < 6; ++n) {
    CHECK(spectrum_darboux_nd(params(2, 0.02), n) == Approx(n2[n]).epsilon(1e-14));
    CHECK(spectrum_darboux_nd(params(2, 0.02), n) == Approx(literal_root(1, 1, 0.02, n + 1)).epsilon(1e-13));
  }
  const double n1[] = {0.48522494939776844361, 1.3710627476967883625, 2.1529685520195855474,
                       2.8413424053074112775,  3.4461398820460215834, 3.976737649445112772};
  for (int n = 0; n < 6; ++n) CHECK(spectrum_darboux_nd(params(1, 0.06), n) == Approx(n1[n]).epsilon(1e-14));
  CHECK(spectrum_darboux_nd(params(2, 0.02), 0) == Approx(-0.02 + std::sqrt(1.0004)).epsilon(1e-14));
  CHECK(spectrum_darboux_nd(params(2, 0.02), 5) == Approx(-0.72 + 6 * std::sqrt(1.0144)).epsilon(1e-14));
  for (int n = 0; n <= 30; ++n) CHECK(spectrum_darboux_nd(params(3, 0.0), n) == n + 1.5);
  // hbar and omega enter as in the literal formula
  ModelParams p = params(3, 0.04);
  p.hbar = 0.7;
  p.omega = 1.3;
  for (int n = 0; n < 10; ++n)
    CHECK(spectrum_darboux_nd(p, n) == Approx(literal_root(0.7, 1.3, 0.04, n + 1.5)).epsilon(1e-12));
}

TEST_CASE("darboux levels are bounded and compress with lambda") {
  for (double l : {0.01, 0.02, 0.06, 0.5}) {
    const ModelParams p = params(2, l);
    double prev_gap = INFINITY;
    for (int n = 0; n < 200; ++n) {
      const double e = spectrum_darboux_nd(p, n);
      CHECK(e < 1.0 / (2 * l));
      const double gap = spectrum_darboux_nd(p, n + 1) - e;
      CHECK(gap > 0.0);
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
  }
}

TEST_CASE("implicit solver") {
  CHECK(solve_energy_implicit(params(1, 0.0), 1.5) == 1.5);
  CHECK(solve_energy_implicit(params(1, 0.02), 1e-9) == Approx(1e-9).epsilon(1e-6));
  for (double T : {0.5, 1.0, 3.5, 20.0}) {
    const ModelParams p = params(1, 0.06);
    const double e = solve_energy_implicit(p, T);
    CHECK(e == Approx(T * std::sqrt(1 - 2 * 0.06 * e)).epsilon(1e-13));
    CHECK(e == Approx(deformed_energy(p, T)).epsilon(1e-12));
  }
  // with a Zeeman shift
  const ModelParams q = params(2, 0.02, {}, 0.1);
  const double w = std::sqrt(1.01);
  const double e = solve_energy_implicit(q, 3.0, -0.2);
  CHECK(e == Approx(-0.2 + 3.0 * std::sqrt(w * w - 0.04 * e)).epsilon(1e-13));
}

TEST_CASE("landau darboux") {
  CHECK(spectrum_landau_darboux_2d(params(2, 0.0, {}, 0.1), 0, 1) == Approx(2 * std::sqrt(1.01) - 0.1).epsilon(1e-15));
  CHECK(spectrum_landau_darboux_2d(params(2, 0.0, {}, 0.1), 0, 1) == Approx(1.90998).epsilon(1e-5));
  const double frozen[][3] = {{0, 0, 0.98518654985032504662},
                              {0, 1, 1.8355396299750595576},
                              {0, -1, 2.0275856146127367586},
                              {1, 2, 4.3695167422546303294},
                              {2, -3, 7.1138495167627128302}};
  for (const auto& f : frozen)
    CHECK(spectrum_landau_darboux_2d(params(2, 0.02, {}, 0.1), int(f[0]), int(f[1])) == Approx(f[2]).epsilon(1e-14));
  for (int n = 0; n <= 5; ++n)
    for (int m = -5; m <= 5; ++m)
      CHECK(spectrum_landau_darboux_2d(params(2, 0.04), n, m) ==
            Approx(spectrum_darboux_nd(params(2, 0.04), 2 * n + std::abs(m))).epsilon(1e-12));
}

TEST_CASE("dunkl spectra") {
  CHECK(spectrum_dunkl_1d(params(1, 0.0, {0.0}), 4) == 4.5);
  CHECK(spectrum_dunkl_1d(params(1, 0.0, {0.02}), 0) == Approx(0.52).epsilon(1e-15));
  CHECK(spectrum_dunkl_1d(params(1, 0.0, {0.3}), 3) == Approx(3.8).epsilon(1e-15));
  CHECK(spectrum_dunkl_nd(params(2, 0.0, {0.02, 0.02}), CartesianNumbers{{0, 0}, {1, 1}}) == Approx(1.04).epsilon(1e-15));
  CHECK(spectrum_dunkl_nd(params(3, 0.0, {0.1, 0.2, 0.3}), CartesianNumbers{{1, 2, 0}, {-1, 1, 1}}) ==
        Approx(3 + 0.6 + 1.5).epsilon(1e-15));
  const ModelParams eq = params(3, 0.0, {0.2, 0.2, 0.2});
  CHECK(spectrum_dunkl_nd(eq, CartesianNumbers{{3, 0, 1}, {-1, 1, -1}}) ==
        spectrum_dunkl_nd(eq, CartesianNumbers{{1, 3, 0}, {-1, -1, 1}}));
}

TEST_CASE("dunkl-darboux spectra") {
  CHECK(spectrum_dunkl_darboux_nd(params(1, 0.02, {0.02}), CartesianNumbers{{0}, {1}}) ==
        Approx(-0.02 * 0.2704 + 0.52 * std::sqrt(0.0004 * 0.2704 + 1)).epsilon(1e-14));
  const double frozen[] = {0.51462012083963305609, 1.4744941994013160498, 2.3961905716673192505,
                           3.2809040603506316693};
  for (int n = 0; n < 4; ++n)
    CHECK(spectrum_dunkl_darboux_nd(params(1, 0.02, {0.02}), CartesianNumbers{{n}, {n % 2 ? -1 : 1}}) ==
          Approx(frozen[n]).epsilon(1e-14));
  const CartesianNumbers q{{2, 1}, {1, -1}};
  CHECK(spectrum_dunkl_darboux_nd(params(2, 0.0, {0.1, 0.3}), q) == Approx(spectrum_dunkl_nd(params(2, 0.0, {0.1, 0.3}), q)).epsilon(1e-15));
  CHECK(spectrum_dunkl_darboux_nd(params(2, 0.03), q) == Approx(spectrum_darboux_nd(params(2, 0.03), 3)).epsilon(1e-15));
}

TEST_CASE("sigma eigenvalues") {
  CHECK(sigma_eigenvalue(0.0, 0.0, 3.0, 1, 1) == Approx(6.0).epsilon(1e-15));
  CHECK(sigma_eigenvalue(0.3, 0.1, 0.0, 1, 1) == 0.0);
  CHECK(sigma_eigenvalue(0.02, 0.02, 0.5, -1, 1) == Approx(1.04).epsilon(1e-15));
  CHECK(sigma_eigenvalue(0.02, 0.02, 1.0, 1, -1) == Approx(-2 * std::sqrt(1.04)).epsilon(1e-15));
  CHECK_THROWS_AS(sigma_eigenvalue(0.02, 0.02, 0.5, 1, 1), SectorError);
  CHECK_THROWS_AS(sigma_eigenvalue(0.02, 0.02, 1.0, -1, 1), SectorError);
}

TEST_CASE("landau dunkl and dunkl-darboux") {
  const ModelParams flat = params(2, 0.0, {0.02, 0.02});
  CHECK(spectrum_landau_dunkl_2d(flat, SectorNumbers{0, 0, 1, 1}) == Approx(1.04).epsilon(1e-15));
  // mu -> 0, epsilon = +1: Landau levels with m = -branch 2m'
  for (double wc : {0.0, 0.1, 0.3}) {
    const ModelParams p = params(2, 0.0, {}, wc);
    const double wt = std::sqrt(1 + wc * wc);
    for (int n = 0; n <= 4; ++n)
      for (int mp = 0; mp <= 4; ++mp)
        for (int br : {1, -1}) {
          if (mp == 0 && br == -1) continue;
          const SectorNumbers s{n, 2 * mp, 1, br};
          CHECK(spectrum_landau_dunkl_2d(p, s) == Approx(wt * (2 * n + 2 * mp + 1) + br * 2 * wc * mp).epsilon(1e-14));
        }
  }
  const ModelParams with_field = params(2, 0.02, {0.02, 0.02}, 0.1);
  struct F {
    int k, twice, eps, br;
    double e;
  };
  const F frozen[] = {{0, 0, 1, 1, 1.0237788969319193011},
                      {0, 2, 1, 1, 3.0675352347825632946},
                      {0, 2, 1, -1, 2.6842473796564299757},
                      {1, 1, -1, 1, 3.8424758703734479596},
                      {2, 3, -1, -1, 6.6339317820693165608}};
  for (const auto& f : frozen)
    CHECK(spectrum_landau_dunkl_darboux_2d(with_field, SectorNumbers{f.k, f.twice, f.eps, f.br}) ==
          Approx(f.e).epsilon(1e-14));
  for (int k = 0; k < 4; ++k)
    for (int tw = 0; tw < 6; ++tw)
      for (int br : {1, -1}) {
        if (tw == 0 && br == -1) continue;
        const SectorNumbers s{k, tw, tw % 2 ? -1 : 1, br};
        CHECK(spectrum_landau_dunkl_darboux_2d(params(2, 0.0, {0.1, 0.3}, 0.2), s) ==
              Approx(spectrum_landau_dunkl_2d(params(2, 0.0, {0.1, 0.3}, 0.2), s)).epsilon(1e-15));
        if (tw % 2 == 0)
          CHECK(spectrum_landau_dunkl_darboux_2d(params(2, 0.02, {}, 0.2), s) ==
                Approx(spectrum_landau_darboux_2d(params(2, 0.02, {}, 0.2), k, -br * tw)).epsilon(1e-14));
      }
  // omega_c = 0, epsilon = +1: plain implicit root with multiplier T
  const ModelParams p0 = params(2, 0.02, {0.02, 0.02});
  const SectorNumbers s{1, 2, 1, 1};
  const auto f = implicit_form(ModelKind::DunklDarbouxLandau, p0, s);
  CHECK(f.shift == 0.0);
  CHECK(spectrum_landau_dunkl_darboux_2d(p0, s) == Approx(solve_energy_implicit(p0, f.multiplier)).epsilon(1e-13));
}

TEST_CASE("enumerate levels") {
  const auto rec = enumerate_levels(ModelKind::Darboux, params(2, 0.02), 5);
  std::map<int, int> mult;
  for (const auto& r : rec) ++mult[r.group];
  REQUIRE(mult.size() == 6);
  int expected = 1;
  for (const auto& [g, count] : mult) CHECK(count == expected++);
  for (std::size_t i = 1; i < rec.size(); ++i) CHECK(rec[i - 1].energy <= rec[i].energy);
  CHECK_THROWS_AS(enumerate_levels(ModelKind::Darboux, params(2, 0.02), -1), DomainError);
  const auto flat = enumerate_levels(ModelKind::Darboux, params(2, 0.0), 5);
  for (const auto& r : flat) CHECK(r.energy == r.group + 1.0);
  // record frequency
  for (const auto& r : rec) CHECK(r.frequency == Approx(std::sqrt(1 - 0.04 * r.energy)).epsilon(1e-14));
}

TEST_CASE("sweeps") {
  CHECK_THROWS_AS(sweep_levels(ModelKind::Darboux, params(2, 0.0), SweepParameter::Lambda, {}, 5), DomainError);
  const auto rows = sweep_levels(ModelKind::Darboux, params(2, 0.0), SweepParameter::Lambda, {0.0, 0.02, 0.06}, 5);
  CHECK(rows.size() == 3 * 21);
  CHECK(rows.front().params.lambda == 0.0);
  CHECK(rows.back().params.lambda == 0.06);
  const auto b = sweep_levels(ModelKind::DarbouxLandau, params(2, 0.0), SweepParameter::Field, {0.1, 0.5}, 2);
  CHECK(b.front().params.omega_c == 0.05);
  CHECK(b.back().params.omega_c == 0.25);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params(1, -0.1).validate(), DomainError);
  CHECK_THROWS_AS(params(1, 0.0, {-0.5}).validate(), DomainError);
  CHECK_THROWS_AS(params(2, 0.0, {0.1}).validate(), DomainError);
  CHECK_THROWS_AS(params(1, 0.0, {}, 0.1).validate_for(ModelKind::Darboux), DomainError);
  CHECK_THROWS_AS(params(2, 0.02, {0.1, 0.1}, 0.1).validate_for(ModelKind::DunklLandau), DomainError);
  CHECK_THROWS_AS(params(2, 0.0, {0.1, 0.1}).validate_for(ModelKind::Darboux), DomainError);
  CHECK_NOTHROW(params(2, 0.02, {0.1, 0.1}, 0.1).validate_for(ModelKind::DunklDarbouxLandau));
  CHECK(parse_model_id("dunkl-darboux-landau") == ModelKind::DunklDarbouxLandau);
  CHECK(!parse_model_id("landau").has_value());
  for (ModelKind k : {ModelKind::Darboux, ModelKind::Dunkl, ModelKind::DunklDarboux, ModelKind::DarbouxLandau,
                      ModelKind::DunklLandau, ModelKind::DunklDarbouxLandau})
    CHECK(parse_model_id(model_id(k)) == k);
}
