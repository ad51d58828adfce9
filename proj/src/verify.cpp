#include "ddo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ddo/eigenfunctions.hpp"
#include "ddo/operators.hpp"
#include "ddo/oracle.hpp"
#include "ddo/spectra.hpp"

namespace ddo::verify {

namespace {

using cplx = std::complex<double>;
using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(std::vector<CheckResult>& out, const Options& opt) : out_(out), opt_(opt) {}

  void add(const std::string& name, double tol, double observed, const std::string& detail = "") {
    const double t = opt_.tolerance.value_or(tol);
    out_.push_back({name, t, observed, std::isfinite(observed) && observed <= t, detail, false});
  }
  // Boolean property: observed = number of violations.
  void count(const std::string& name, int violations, const std::string& detail = "") {
    out_.push_back({name, 0.0, double(violations), violations == 0, detail, false});
  }
  void timing(const std::string& name, double budget, double seconds) {
    out_.push_back({name, budget, seconds, seconds <= budget, "seconds", true});
  }
  void error(const std::string& name, const std::exception& e) {
    out_.push_back({name, 0.0, INFINITY, false, std::string("error: ") + e.what(), false});
  }

 private:
  std::vector<CheckResult>& out_;
  const Options& opt_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string fmt(const char* what, double v) {
  std::ostringstream s;
  s << what << "=" << v;
  return s.str();
}

ModelParams make_params(int dim, double lambda, std::vector<double> mu = {}, double omega_c = 0.0) {
  ModelParams p;
  p.dim = dim;
  p.lambda = lambda;
  p.mu = std::move(mu);
  p.omega_c = omega_c;
  return p;
}

std::string describe(ModelKind kind, const ModelParams& p) {
  std::ostringstream s;
  s << model_id(kind) << " N=" << p.dim << " lambda=" << p.lambda;
  if (!p.mu.empty()) {
    s << " mu=(";
    for (std::size_t i = 0; i < p.mu.size(); ++i) s << (i ? "," : "") << p.mu[i];
    s << ")";
  }
  if (p.omega_c != 0.0) s << " omega_c=" << p.omega_c;
  return s.str();
}

CartesianNumbers cartesian_with_total(int dim, int total) {
  CartesianNumbers c;
  c.n.assign(static_cast<std::size_t>(dim), 0);
  c.n[0] = total;
  for (int v : c.n) c.parity.push_back(v % 2 == 0 ? 1 : -1);
  return c;
}

std::vector<SectorNumbers> dunkl_sectors(const Options& opt) {
  std::vector<SectorNumbers> out;
  for (int eps : {1, -1}) {
    if (opt.epsilon && *opt.epsilon != eps) continue;
    for (int m = 0; m < 3; ++m) {
      const int twice = eps == 1 ? 2 * m : 2 * m + 1;
      for (int br : {1, -1}) {
        if (twice == 0 && br == -1) continue;
        out.push_back({0, twice, eps, br});
      }
    }
  }
  return out;
}

operators::LineModel line_model(ModelKind kind) {
  switch (kind) {
    case ModelKind::Darboux: return operators::LineModel::DarbouxIII;
    case ModelKind::Dunkl: return operators::LineModel::Dunkl;
    default: return operators::LineModel::DunklDarbouxIII;
  }
}

operators::PolarModel polar_model(ModelKind kind) {
  switch (kind) {
    case ModelKind::DarbouxLandau: return operators::PolarModel::DarbouxIII_B;
    case ModelKind::DunklLandau: return operators::PolarModel::Dunkl_B;
    default: return operators::PolarModel::DunklDarbouxIII_B;
  }
}

eigenfunctions::LineWavefunction line_state(ModelKind kind, const ModelParams& p, int n) {
  const int e = n % 2 == 0 ? 1 : -1;
  switch (kind) {
    case ModelKind::Darboux: return eigenfunctions::build_darboux_1d(p, n);
    case ModelKind::Dunkl: return eigenfunctions::build_dunkl_1d(p, n, e);
    default: return eigenfunctions::build_dunkl_darboux_1d(p, n, e);
  }
}

// ---------------------------------------------------------------- suites

void oracle_suite(Recorder& rec, ModelKind kind, const ModelParams& p, const Options& opt) {
  const std::string tag = "oracle " + describe(kind, p);
  try {
    if (!is_landau(kind) && p.dim == 1) {
      const int basis = opt.basis_size > 0 ? opt.basis_size : 128;
      const auto lv = oracle::oracle_levels_1d(kind, p, basis, opt.max_level);
      double err = 0.0;
      for (int n = 0; n < opt.max_level; ++n)
        err = std::max(err, rel(lv[n], spectra::level_energy(kind, p, cartesian_with_total(1, n))));
      rec.add(tag + " lowest " + std::to_string(opt.max_level), 1e-8, err, fmt("basis", basis));
      return;
    }
    if (!is_landau(kind)) {
      const int basis = opt.basis_size > 0 ? opt.basis_size : 128;
      double err = 0.0;
      for (int ell = 0; ell < opt.max_level; ++ell) {
        const int count = (opt.max_level - ell + 1) / 2;
        const auto ev = oracle::solve_generalized(oracle::assemble_nd_radial(kind, p, basis, ell), count);
        for (int k = 0; k < count; ++k)
          err = std::max(err, rel(ev[k], spectra::level_energy(kind, p, cartesian_with_total(p.dim, 2 * k + ell))));
      }
      rec.add(tag + " radial sectors", 1e-8, err, fmt("basis", basis));
      if (p.dim == 2) {
        const int max_degree = 40;
        double cerr = 0.0;
        for (int q1 : {0, 1}) {
          for (int q2 : {0, 1}) {
            std::vector<double> expected;
            for (int n1 = q1; n1 < opt.max_level; n1 += 2)
              for (int n2 = q2; n1 + n2 < opt.max_level; n2 += 2)
                expected.push_back(spectra::level_energy(kind, p, CartesianNumbers{{n1, n2}, {n1 % 2 ? -1 : 1, n2 % 2 ? -1 : 1}}));
            std::sort(expected.begin(), expected.end());
            if (expected.empty()) continue;
            const auto ev = oracle::solve_generalized(oracle::assemble_cartesian_2d(kind, p, max_degree, q1, q2),
                                                      static_cast<int>(expected.size()));
            for (std::size_t i = 0; i < expected.size(); ++i) cerr = std::max(cerr, rel(ev[i], expected[i]));
          }
        }
        rec.add(tag + " cartesian tensor basis", 1e-8, cerr, fmt("max_degree", max_degree));
      }
      return;
    }
    const int basis = opt.basis_size > 0 ? opt.basis_size : 96;
    if (kind == ModelKind::DarbouxLandau) {
      double err = 0.0;
      for (int m = -2; m <= 2; ++m) {
        const auto ev = oracle::solve_generalized(oracle::assemble_2d(kind, p, basis, LandauNumbers{0, m}), 4);
        for (int k = 0; k < 4; ++k) err = std::max(err, rel(ev[k], spectra::spectrum_landau_darboux_2d(p, k, m)));
      }
      rec.add(tag + " |m|<=2 lowest 4", 1e-7, err, fmt("basis", basis));
      return;
    }
    for (const auto& s0 : dunkl_sectors(opt)) {
      const auto ev = oracle::solve_generalized(oracle::assemble_2d(kind, p, basis, s0), 4);
      double err = 0.0;
      for (int k = 0; k < 4; ++k) {
        SectorNumbers s = s0;
        s.k = k;
        err = std::max(err, rel(ev[k], spectra::level_energy(kind, p, s)));
      }
      std::ostringstream name;
      name << tag << " eps=" << s0.epsilon << " m'=" << s0.mprime() << " branch=" << (s0.branch > 0 ? "+" : "-");
      rec.add(name.str() + " lowest 4", 1e-7, err, fmt("basis", basis));
    }
  } catch (const std::exception& e) {
    rec.error(tag, e);
  }
}

void residual_suite(Recorder& rec, ModelKind kind, const ModelParams& p, const Options& opt) {
  const std::string tag = "residual " + describe(kind, p);
  const int samples = 200;
  try {
    if (!is_landau(kind) && p.dim == 1) {
      double worst = 0.0;
      for (int n = 0; n <= 6; ++n) {
        const auto psi = line_state(kind, p, n);
        worst = std::max(worst, oracle::residual_report(psi, psi.energy, line_model(kind), p, samples, opt.seed).max_relative);
      }
      rec.add(tag + " n<=6", 1e-8, worst, fmt("samples", samples));
      return;
    }
    if (!is_landau(kind)) {
      double worst = 0.0;
      for (const auto& q : spectra::quantum_numbers_up_to(kind, p, 4)) {
        const auto psi = eigenfunctions::build_product_nd(kind, p, std::get<CartesianNumbers>(q));
        worst = std::max(worst, oracle::residual_report(psi, psi.energy, line_model(kind), p, samples, opt.seed).max_relative);
      }
      rec.add(tag + " product states, total<=4", 1e-8, worst, fmt("samples", samples));
      return;
    }
    double worst = 0.0;
    std::vector<QuantumNumbers> labels;
    if (kind == ModelKind::DarbouxLandau) {
      for (int k = 0; k <= 3; ++k)
        for (int m = -2; m <= 2; ++m) labels.emplace_back(LandauNumbers{k, m});
    } else {
      for (int k = 0; k <= 3; ++k)
        for (auto s : dunkl_sectors(opt)) {
          s.k = k;
          labels.emplace_back(s);
        }
    }
    for (const auto& q : labels) {
      const auto psi = eigenfunctions::build_polar_2d(kind, p, q);
      worst = std::max(worst, oracle::residual_report(psi, psi.energy, polar_model(kind), p, samples, opt.seed).max_relative);
    }
    rec.add(tag + " k<=3, m'<=2 (|m|<=2)", 1e-8, worst, fmt("samples", samples));
  } catch (const std::exception& e) {
    rec.error(tag, e);
  }
}

template <typename F>
double gram_defect(int size, F&& entry) {
  double worst = 0.0;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) worst = std::max(worst, std::abs(entry(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

void gram_suite(Recorder& rec, ModelKind kind, const ModelParams& p, const Options&) {
  const std::string tag = "gram " + describe(kind, p);
  try {
    if (!is_landau(kind) && p.dim == 1) {
      std::vector<eigenfunctions::LineWavefunction> st;
      for (int n = 0; n < 10; ++n) st.push_back(line_state(kind, p, n));
      const double d = gram_defect(10, [&](int i, int j) { return eigenfunctions::inner_product(st[i], st[j], st[i].weight); });
      rec.add(tag + " 10x10 line", 1e-8, d);
      return;
    }
    if (!is_landau(kind)) {
      auto labels = spectra::quantum_numbers_up_to(kind, p, 3);
      labels.resize(std::min<std::size_t>(labels.size(), 10));
      std::vector<eigenfunctions::ProductWavefunction> st;
      for (const auto& q : labels) st.push_back(eigenfunctions::build_product_nd(kind, p, std::get<CartesianNumbers>(q)));
      const double lam = has_darboux_factor(kind) ? p.lambda : 0.0;
      const int n = static_cast<int>(st.size());
      const double d = gram_defect(n, [&](int i, int j) { return eigenfunctions::inner_product(st[i], st[j], lam); });
      rec.add(tag + " product states", 1e-8, d);
      return;
    }
    std::vector<eigenfunctions::RadialWavefunction> st;
    for (int k = 0; k < 10; ++k) {
      if (kind == ModelKind::DarbouxLandau)
        st.push_back(eigenfunctions::build_radial_2d(kind, p, LandauNumbers{k, 1}));
      else
        st.push_back(eigenfunctions::build_radial_2d(kind, p, SectorNumbers{k, 2, 1, 1}));
    }
    const double d = gram_defect(10, [&](int i, int j) { return eigenfunctions::inner_product(st[i], st[j], st[i].weight); });
    rec.add(tag + " 10x10 radial", 1e-8, d);
    if (kind != ModelKind::DarbouxLandau) {
      std::vector<eigenfunctions::AngularWavefunction> ang;
      for (int twice = 0; twice < 7; ++twice)
        for (int br : {1, -1}) {
          if (twice == 0 && br == -1) continue;
          ang.push_back(eigenfunctions::build_angular(p.mu_at(0), p.mu_at(1), 0.5 * twice, twice % 2 ? -1 : 1, br));
        }
      const int n = static_cast<int>(ang.size());
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          worst = std::max(worst, std::abs(eigenfunctions::inner_product(ang[i], ang[j], ang[i].weight) - (i == j ? 1.0 : 0.0)));
      rec.add(tag + " angular sectors", 1e-8, worst);
    }
  } catch (const std::exception& e) {
    rec.error(tag, e);
  }
}

void limits_suite(Recorder& rec, const ModelParams& given, const Options&) {
  const double lam = given.lambda > 0.0 ? given.lambda : 0.02;
  const double mx = given.mu.empty() ? 0.02 : given.mu_at(0);
  const double my = given.mu.size() > 1 ? given.mu_at(1) : mx;
  const double wc = given.omega_c > 0.0 ? given.omega_c : 0.1;
  double worst = 0.0;
  auto cmp = [&](double a, double b) { worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b))); };
  const int top = 6;
  for (int dim = 1; dim <= 3; ++dim) {
    std::vector<double> mu(static_cast<std::size_t>(dim), mx);
    for (const auto& q : spectra::quantum_numbers_up_to(ModelKind::DunklDarboux, make_params(dim, 0.0, mu), top)) {
      cmp(spectra::level_energy(ModelKind::DunklDarboux, make_params(dim, 0.0, mu), q),
          spectra::level_energy(ModelKind::Dunkl, make_params(dim, 0.0, mu), q));
      CartesianNumbers flat = std::get<CartesianNumbers>(q);
      cmp(spectra::level_energy(ModelKind::DunklDarboux, make_params(dim, lam), flat),
          spectra::level_energy(ModelKind::Darboux, make_params(dim, lam), CartesianNumbers{flat.n, {}}));
      cmp(spectra::level_energy(ModelKind::Dunkl, make_params(dim, 0.0), flat),
          spectra::level_energy(ModelKind::Darboux, make_params(dim, 0.0), CartesianNumbers{flat.n, {}}));
    }
  }
  const std::vector<double> mu2{mx, my};
  for (const auto& q : spectra::quantum_numbers_up_to(ModelKind::DunklLandau, make_params(2, 0.0, mu2), top)) {
    const auto& s = std::get<SectorNumbers>(q);
    cmp(spectra::level_energy(ModelKind::DunklDarbouxLandau, make_params(2, 0.0, mu2, wc), q),
        spectra::level_energy(ModelKind::DunklLandau, make_params(2, 0.0, mu2, wc), q));
    // mu -> 0: sigma = branch 2m' plays the role of -m
    const int m = -s.branch * s.twice_mprime;
    if (s.twice_mprime % 2 == 0) {
      cmp(spectra::level_energy(ModelKind::DunklDarbouxLandau, make_params(2, lam, {}, wc), q),
          spectra::spectrum_landau_darboux_2d(make_params(2, lam, {}, wc), s.k, m));
    }
    const CartesianNumbers flat = cartesian_with_total(2, 2 * s.k + s.twice_mprime);
    cmp(spectra::level_energy(ModelKind::DunklLandau, make_params(2, 0.0, mu2), q),
        spectra::level_energy(ModelKind::Dunkl, make_params(2, 0.0, mu2), flat));
    cmp(spectra::level_energy(ModelKind::DunklDarbouxLandau, make_params(2, lam, mu2), q),
        spectra::level_energy(ModelKind::DunklDarboux, make_params(2, lam, mu2), flat));
  }
  for (const auto& q : spectra::quantum_numbers_up_to(ModelKind::DarbouxLandau, make_params(2, lam), top)) {
    const auto& l = std::get<LandauNumbers>(q);
    cmp(spectra::level_energy(ModelKind::DarbouxLandau, make_params(2, lam), q),
        spectra::spectrum_darboux_nd(make_params(2, lam), 2 * l.n + std::abs(l.m)));
  }
  std::ostringstream d;
  d << "lambda=" << lam << " mu=(" << mx << "," << my << ") omega_c=" << wc;
  rec.add("limits lambda->0, mu->0, omega_c->0 web", 1e-12, worst, d.str());
}

void implicit_suite(Recorder& rec, ModelKind kind, const ModelParams& p, const Options&) {
  const std::string tag = "implicit " + describe(kind, p);
  if (!has_darboux_factor(kind) || p.lambda == 0.0) return;
  try {
    const auto levels = spectra::enumerate_levels(kind, p, 20);
    double worst = 0.0;
    int out_of_range = 0;
    const double cap = p.omega_tilde() * p.omega_tilde() / (2.0 * p.lambda);
    for (const auto& r : levels) {
      const auto f = spectra::implicit_form(kind, p, r.qn);
      const double e = spectra::solve_energy_implicit(p, f.multiplier, f.shift);
      worst = std::max(worst, std::abs(e - r.energy) / std::max(1.0, std::abs(r.energy)));
      if (!(r.energy < cap) || (p.omega_c == 0.0 && !(r.energy > 0.0))) ++out_of_range;
    }
    rec.add(tag + " closed form vs root, index<=20", 1e-11, worst, fmt("levels", double(levels.size())));
    rec.count(tag + " energies below omega~^2/(2 lambda)", out_of_range);
  } catch (const std::exception& e) {
    rec.error(tag, e);
  }
}

void angular_suite(Recorder& rec, double mx, double my, const Options&) {
  std::ostringstream t;
  t << "angular mu=(" << mx << "," << my << ")";
  const std::string tag = t.str();
  try {
    const auto a256 = oracle::discretize_angular_J(mx, my, 256);
    const auto a128 = oracle::discretize_angular_J(mx, my, 128);
    double err_even = 0.0, err_odd = 0.0;
    std::vector<double> expect_even{0.0}, expect_odd;
    for (int m = 1; m <= 4; ++m)
      for (int br : {-1, 1}) expect_even.push_back(spectra::sigma_eigenvalue(mx, my, m, 1, br));
    for (int twice = 1; twice <= 7; twice += 2)
      for (int br : {-1, 1}) expect_odd.push_back(spectra::sigma_eigenvalue(mx, my, 0.5 * twice, -1, br));
    for (std::size_t i = 0; i < expect_even.size(); ++i) err_even = std::max(err_even, std::abs(a256.even_sector[i] - expect_even[i]));
    for (std::size_t i = 0; i < expect_odd.size(); ++i) err_odd = std::max(err_odd, std::abs(a256.odd_sector[i] - expect_odd[i]));
    // Overall constant: ratio of the first nonzero discrete eigenvalue to the
    // formula without its factor 2.
    const double ratio = std::abs(a256.odd_sector[0]) / std::sqrt((0.5 + mx) * (0.5 + my));
    std::ostringstream d;
    d << "grid=256; observed/sqrt((m'+mu_x)(m'+mu_y)) at m'=1/2 is " << ratio
      << (std::abs(ratio - 2.0) < 1e-6 ? " (factor 2 confirmed)" : " (factor 2 contradicted)");
    rec.add(tag + " eps=+1 sigma, m'<=4", 1e-6, err_even, d.str());
    rec.add(tag + " eps=-1 sigma, m'<=7/2", 1e-6, err_odd, d.str());
    rec.add(tag + " even/odd block decoupling", 1e-10, a256.block_residual);
    double drift = 0.0;
    for (std::size_t i = 0; i < 9; ++i) drift = std::max(drift, std::abs(a256.even_sector[i] - a128.even_sector[i]));
    for (std::size_t i = 0; i < 8; ++i) drift = std::max(drift, std::abs(a256.odd_sector[i] - a128.odd_sector[i]));
    rec.add(tag + " grid 128 vs 256", 1e-8, drift);
  } catch (const std::exception& e) {
    rec.error(tag, e);
  }
}

// ---------------------------------------------------------------- operator algebra

// Random polynomial times Gaussian with exact derivatives.
operators::SmoothFunction1D random_line_function(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(5);
  for (auto& v : c) v = u(rng);
  const double b = 0.3 + 0.5 * (u(rng) + 1.0);
  operators::SmoothFunction1D f;
  f.at = [c, b](double x) {
    double p = 0, p1 = 0, p2 = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
      p2 = p2 * x + 2.0 * p1;
      p1 = p1 * x + p;
      p = p * x + c[k];
    }
    const double g = std::exp(-b * x * x);
    const RealJet gj{g, -2.0 * b * x * g, (4.0 * b * b * x * x - 2.0 * b) * g};
    return RealJet{p, p1, p2} * gj;
  };
  return f;
}

struct TrigPoly {
  std::vector<cplx> c;  // modes -K..K
  int K = 0;
  cplx d(double t, int order) const {
    cplx acc = 0.0;
    for (int k = -K; k <= K; ++k) acc += c[k + K] * std::pow(cplx(0.0, k), order) * std::exp(cplx(0.0, k * t));
    return acc;
  }
};

// J g as a function with exact derivatives, built from derivatives of g up to order 3.
operators::AngularFunction apply_j_symbolic(const TrigPoly& g, double mx, double my) {
  return {[g, mx, my](double t) {
    const double s = std::sin(t), c = std::cos(t);
    const double cot = c / s, tan = s / c;
    const double cot1 = -1.0 / (s * s), cot2 = 2.0 * c / (s * s * s);
    const double tan1 = 1.0 / (c * c), tan2 = 2.0 * s / (c * c * c);
    const double pt = std::numbers::pi - t;
    const cplx a0 = g.d(t, 0) - g.d(-t, 0), a1 = g.d(t, 1) + g.d(-t, 1), a2 = g.d(t, 2) - g.d(-t, 2);
    const cplx b0 = g.d(t, 0) - g.d(pt, 0), b1 = g.d(t, 1) + g.d(pt, 1), b2 = g.d(t, 2) - g.d(pt, 2);
    const cplx i(0.0, 1.0);
    const cplx v = i * (g.d(t, 1) + my * cot * a0 - mx * tan * b0);
    const cplx v1 = i * (g.d(t, 2) + my * (cot1 * a0 + cot * a1) - mx * (tan1 * b0 + tan * b1));
    const cplx v2 = i * (g.d(t, 3) + my * (cot2 * a0 + 2.0 * cot1 * a1 + cot * a2) -
                         mx * (tan2 * b0 + 2.0 * tan1 * b1 + tan * b2));
    return ComplexJet{v, v1, v2};
  }};
}

void operator_algebra(Recorder& rec, const Options& opt) {
  std::mt19937_64 rng(20240917u + opt.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_comm = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_line_function(rng);
    const double mu = 0.45 * (u(rng) + 1.0) / 2.0 + 0.01;
    const double hbar = 1.0;
    operators::SmoothFunction1D xf;
    xf.at = [at = f.at](double x) { return RealJet{x, 1.0, 0.0} * at(x); };
    for (int k = 0; k < 5; ++k) {
      double x = 2.5 * u(rng);
      if (std::abs(x) < 1e-2) x = 0.3;
      // x P f - P(x f) with P = -i hbar D, divided by i hbar: -(x D f - D(x f)).
      const double lhs = -(x * operators::dunkl_derivative_1d(f, mu, x) - operators::dunkl_derivative_1d(xf, mu, x));
      const double rhs = hbar * (f.value(x) + 2.0 * mu * f.value(-x)) / hbar;
      const double scale = std::max({1.0, std::abs(f.value(x)), std::abs(f.value(-x))});
      worst_comm = std::max(worst_comm, std::abs(lhs - rhs) / scale);
    }
  }
  rec.add("operators [x, P] = i hbar (1 + 2 mu R), 30 functions", 1e-10, worst_comm);

  double worst_j = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    TrigPoly g;
    g.K = 5;
    for (int k = -g.K; k <= g.K; ++k) g.c.emplace_back(u(rng), u(rng));
    const double mx = 0.45 * (u(rng) + 1.0) / 2.0 + 0.01;
    const double my = 0.45 * (u(rng) + 1.0) / 2.0 + 0.01;
    const operators::AngularFunction gf{[g](double t) { return ComplexJet{g.d(t, 0), g.d(t, 1), g.d(t, 2)}; }};
    const auto jg = apply_j_symbolic(g, mx, my);
    for (int k = 0; k < 5; ++k) {
      double t = std::numbers::pi * (u(rng) + 1.0);
      if (std::abs(std::remainder(t, std::numbers::pi / 2)) < 0.05) t += 0.1;
      const cplx j2 = operators::angular_operator_J(jg, mx, my, t);
      const cplx h = operators::angular_operator_Htheta(gf, mx, my, t) + 2.0 * mx * my * (g.d(t, 0) - g.d(t - std::numbers::pi, 0));
      double scale = 1.0;
      for (const auto& c : g.c) scale = std::max(scale, std::abs(c) * g.K * g.K);
      worst_j = std::max(worst_j, std::abs(j2 - h) / scale);
    }
  }
  rec.add("operators J^2 = H_theta + 2 mu_x mu_y (1 - R_x R_y), 30 functions", 1e-10, worst_j);

  const ModelParams p = make_params(2, 0.02);
  const auto cr = oracle::integrals_of_motion_check(p, 60, 20);
  std::ostringstream d;
  d << "lambda=0.02 max_degree=60 margin=20 interior_states=" << cr.interior_states;
  rec.add("operators [I_i, H] interior block", 1e-6, cr.max_interior, d.str());
}

// ---------------------------------------------------------------- criteria

void criterion_flat(Recorder& rec) {
  double worst = 0.0;
  int checked = 0;
  for (double hbar : {1.0, 0.7}) {
    for (double omega : {1.0, 1.3}) {
      auto with = [&](ModelParams p) {
        p.hbar = hbar;
        p.omega = omega;
        return p;
      };
      auto cmp = [&](double e, double expected) {
        worst = std::max(worst, std::abs(e - expected) / std::max(1.0, std::abs(expected)));
        ++checked;
      };
      for (int dim = 1; dim <= 3; ++dim) {
        const ModelParams p = with(make_params(dim, 0.0));
        for (ModelKind k : {ModelKind::Darboux, ModelKind::Dunkl, ModelKind::DunklDarboux})
          for (int n = 0; n <= 30; ++n) {
            CartesianNumbers c = cartesian_with_total(dim, n);
            if (k == ModelKind::Darboux) c.parity.clear();
            cmp(spectra::level_energy(k, p, c), hbar * omega * (n + 0.5 * dim));
          }
        for (int n = 0; n <= 30; ++n) {
          cmp(spectra::solve_energy_implicit(p, n + 0.5 * dim), hbar * omega * (n + 0.5 * dim));
          cmp(spectra::deformed_energy(p, n + 0.5 * dim), hbar * omega * (n + 0.5 * dim));
        }
      }
      const ModelParams p2 = with(make_params(2, 0.0));
      for (int n = 0; n <= 30; ++n) {
        for (int m = -n; m <= n; ++m) {
          if ((n - std::abs(m)) % 2 != 0) continue;
          cmp(spectra::level_energy(ModelKind::DarbouxLandau, p2, LandauNumbers{(n - std::abs(m)) / 2, m}),
              hbar * omega * (n + 1.0));
        }
        for (int twice = n % 2; twice <= n; twice += 2) {
          for (int br : {1, -1}) {
            if (twice == 0 && br == -1) continue;
            const SectorNumbers s{(n - twice) / 2, twice, twice % 2 ? -1 : 1, br};
            cmp(spectra::level_energy(ModelKind::DunklLandau, p2, s), hbar * omega * (n + 1.0));
            cmp(spectra::level_energy(ModelKind::DunklDarbouxLandau, p2, s), hbar * omega * (n + 1.0));
          }
        }
      }
    }
  }
  rec.add("flat limit hbar omega (n + N/2), all models, n<=30, N=1,2,3", 1e-12, worst,
          fmt("evaluations", checked));
}

void criterion_darboux(Recorder& rec, const Options& opt) {
  for (double lam : {0.02, 0.06}) {
    oracle_suite(rec, ModelKind::Darboux, make_params(1, lam), opt);
    oracle_suite(rec, ModelKind::Darboux, make_params(2, lam), opt);
    oracle_suite(rec, ModelKind::Darboux, make_params(3, lam), opt);
  }
  // compression of the N = 2 levels
  auto e = [](double lam, int n) { return spectra::spectrum_darboux_nd(make_params(2, lam), n); };
  int bad = 0;
  if (!(e(0.06, 5) < e(0.02, 5) && e(0.02, 5) < e(0.0, 5) && e(0.0, 5) == 6.0)) ++bad;
  rec.count("darboux E5(0.06) < E5(0.02) < E5(0) = 6", bad,
            fmt("E5(0.06)", e(0.06, 5)) + " " + fmt("E5(0.02)", e(0.02, 5)));
  const std::vector<double> lams{0.0, 0.02, 0.04, 0.06};
  int viol = 0;
  for (std::size_t i = 0; i + 1 < lams.size(); ++i)
    for (int n = 0; n <= 10; ++n) {
      if (n >= 1 && !(e(lams[i], n) > e(lams[i + 1], n))) ++viol;
      if (!(e(lams[i], n + 1) - e(lams[i], n) > e(lams[i + 1], n + 1) - e(lams[i + 1], n))) ++viol;
    }
  for (double lam : lams)
    for (int n = 0; n + 1 <= 10; ++n)
      if (lam > 0.0 && !(e(lam, n + 2) - e(lam, n + 1) < e(lam, n + 1) - e(lam, n))) ++viol;
  rec.count("darboux levels and gaps compress with lambda, n<=10", viol);
}

void criterion_landau(Recorder& rec, const Options& opt) {
  double worst = 0.0;
  const ModelParams p = make_params(2, 0.04);
  for (int n = 0; n <= 5; ++n)
    for (int m = -5; m <= 5; ++m)
      worst = std::max(worst, rel(spectra::spectrum_landau_darboux_2d(p, n, m),
                                  spectra::spectrum_darboux_nd(p, 2 * n + std::abs(m))));
  rec.add("landau omega_c=0 equals N=2 Darboux with 2n+|m|, lambda=0.04", 1e-12, worst);
  double flat = 0.0;
  for (double wc : {0.0, 0.05, 0.1, 0.25}) {
    const ModelParams q = make_params(2, 0.0, {}, wc);
    const double wt = std::sqrt(1.0 + wc * wc);
    for (int n = 0; n <= 5; ++n)
      for (int m = -5; m <= 5; ++m)
        flat = std::max(flat, rel(spectra::spectrum_landau_darboux_2d(q, n, m), wt * (2 * n + std::abs(m) + 1) - wc * m));
  }
  rec.add("landau lambda=0 equals flat Landau levels", 1e-15, flat);
  // field sweep tables, flat and curved
  const std::vector<double> fields{0.0, 0.1, 0.2, 0.5};
  for (double lam : {0.0, 0.02}) {
    const auto rows = spectra::sweep_levels(ModelKind::DarbouxLandau, make_params(2, lam), spectra::SweepParameter::Field,
                                            fields, 4);
    double err = 0.0;
    int bad = 0;
    const std::size_t per = rows.size() / fields.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const double b = fields[i / per];
      if (r.params.omega_c != 0.5 * b || r.params.lambda != lam) ++bad;
      const auto& l = std::get<LandauNumbers>(r.qn);
      const auto f = spectra::implicit_form(ModelKind::DarbouxLandau, r.params, r.qn);
      err = std::max(err, std::abs(spectra::solve_energy_implicit(r.params, f.multiplier, f.shift) - r.energy));
      if (f.multiplier != 2 * l.n + std::abs(l.m) + 1) ++bad;
    }
    if (rows.size() != per * fields.size() || per != 15) ++bad;
    rec.add(std::string(lam == 0.0 ? "flat" : "curved") + " landau table B={0,0.1,0.2,0.5} regenerated", 1e-11, err,
            fmt("rows", double(rows.size())));
    rec.count(std::string(lam == 0.0 ? "flat" : "curved") + " landau table layout", bad);
  }
  (void)opt;
}

void criterion_dunkl(Recorder& rec, const Options& opt) {
  for (double mu : {0.02, 0.3}) {
    const ModelParams p = make_params(1, 0.0, {mu});
    double diag = 0.0;
    for (int parity : {1, -1}) {
      const auto ev = oracle::solve_generalized(oracle::assemble_1d(ModelKind::Dunkl, p, 128, parity), 4);
      for (int j = 0; j < 4; ++j) {
        const int n = 2 * j + (parity == 1 ? 0 : 1);
        diag = std::max(diag, rel(ev[j], spectra::spectrum_dunkl_1d(p, n)));
      }
    }
    rec.add("dunkl 1D lambda=0 diagonal oracle, mu=" + std::to_string(mu), 1e-15, diag);
    Options o = opt;
    o.max_level = 7;
    oracle_suite(rec, ModelKind::DunklDarboux, make_params(1, 0.02, {mu}), o);
    oracle_suite(rec, ModelKind::DunklDarboux, make_params(1, 0.06, {mu}), o);
  }
}

void criterion_magnetic(Recorder& rec, const Options& opt) {
  const std::vector<double> mu{0.02, 0.02};
  for (double wc : {0.0, 0.05, 0.25}) {
    oracle_suite(rec, ModelKind::DunklLandau, make_params(2, 0.0, mu, wc), opt);
    oracle_suite(rec, ModelKind::DunklDarbouxLandau, make_params(2, 0.0, mu, wc), opt);
    oracle_suite(rec, ModelKind::DunklDarbouxLandau, make_params(2, 0.02, mu, wc), opt);
  }
  const std::vector<double> fields{0.0, 0.1, 0.2, 0.5};
  for (ModelKind k : {ModelKind::DunklLandau, ModelKind::DunklDarbouxLandau}) {
    const ModelParams base = make_params(2, k == ModelKind::DunklLandau ? 0.0 : 0.02, mu);
    const auto rows = spectra::sweep_levels(k, base, spectra::SweepParameter::Field, fields, 4);
    int even = 0, odd = 0, bad = 0;
    double err = 0.0;
    for (const auto& r : rows) {
      const auto& s = std::get<SectorNumbers>(r.qn);
      (s.epsilon == 1 ? even : odd)++;
      err = std::max(err, rel(r.energy, spectra::level_energy(k, r.params, r.qn)));
    }
    if (even == 0 || odd == 0) ++bad;
    const std::string fig = std::string(model_id(k)) + " field table";
    rec.count(fig + " has both epsilon sectors", bad, fmt("rows", double(rows.size())));
    rec.add(fig + " energies", 1e-15, err);
  }
}

void criterion_residuals(Recorder& rec, const Options& opt) {
  residual_suite(rec, ModelKind::Darboux, make_params(1, 0.02), opt);
  residual_suite(rec, ModelKind::Dunkl, make_params(1, 0.0, {0.02}), opt);
  residual_suite(rec, ModelKind::Dunkl, make_params(1, 0.0, {0.3}), opt);
  residual_suite(rec, ModelKind::DunklDarboux, make_params(1, 0.02, {0.02}), opt);
  residual_suite(rec, ModelKind::Darboux, make_params(2, 0.02), opt);
  residual_suite(rec, ModelKind::Darboux, make_params(3, 0.02), opt);
  residual_suite(rec, ModelKind::Dunkl, make_params(2, 0.0, {0.02, 0.3}), opt);
  residual_suite(rec, ModelKind::DunklDarboux, make_params(2, 0.02, {0.02, 0.02}), opt);
  residual_suite(rec, ModelKind::DunklDarboux, make_params(3, 0.02, {0.02, 0.3, 0.1}), opt);
  residual_suite(rec, ModelKind::DarbouxLandau, make_params(2, 0.02, {}, 0.1), opt);
  residual_suite(rec, ModelKind::DunklLandau, make_params(2, 0.0, {0.02, 0.02}, 0.1), opt);
  residual_suite(rec, ModelKind::DunklDarbouxLandau, make_params(2, 0.02, {0.02, 0.02}, 0.1), opt);
  residual_suite(rec, ModelKind::DunklDarbouxLandau, make_params(2, 0.02, {0.3, 0.1}, 0.25), opt);
}

void criterion_gram(Recorder& rec, const Options& opt) {
  gram_suite(rec, ModelKind::Darboux, make_params(1, 0.02), opt);
  gram_suite(rec, ModelKind::Dunkl, make_params(1, 0.0, {0.02}), opt);
  gram_suite(rec, ModelKind::Dunkl, make_params(1, 0.0, {0.3}), opt);
  gram_suite(rec, ModelKind::DunklDarboux, make_params(1, 0.02, {0.02}), opt);
  gram_suite(rec, ModelKind::DarbouxLandau, make_params(2, 0.02, {}, 0.1), opt);
  gram_suite(rec, ModelKind::DunklDarbouxLandau, make_params(2, 0.02, {0.02, 0.02}, 0.1), opt);
}

void criterion_implicit(Recorder& rec, const Options& opt) {
  for (double lam : {0.02, 0.06}) {
    for (int dim = 1; dim <= 3; ++dim) implicit_suite(rec, ModelKind::Darboux, make_params(dim, lam), opt);
    implicit_suite(rec, ModelKind::DunklDarboux, make_params(1, lam, {0.02}), opt);
    implicit_suite(rec, ModelKind::DunklDarboux, make_params(2, lam, {0.02, 0.3}), opt);
    for (double wc : {0.0, 0.1, 0.25}) {
      implicit_suite(rec, ModelKind::DarbouxLandau, make_params(2, lam, {}, wc), opt);
      implicit_suite(rec, ModelKind::DunklDarbouxLandau, make_params(2, lam, {0.02, 0.02}, wc), opt);
    }
  }
}

const char* criterion_title(int id) {
  switch (id) {
    case 1: return "flat-limit exactness";
    case 2: return "Darboux 1D/ND oracle and level compression";
    case 3: return "Landau reduction and field tables";
    case 4: return "Dunkl 1D oracle";
    case 5: return "angular arbiter";
    case 6: return "2D magnetic Dunkl and Dunkl-Darboux oracle";
    case 7: return "eigenfunction residuals";
    case 8: return "weighted Gram matrices";
    case 9: return "operator algebra";
    case 10: return "implicit root vs closed forms";
  }
  return "";
}

}  // namespace

bool Criterion::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Criterion run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must be in 1..10");
  Criterion c;
  c.id = id;
  c.title = criterion_title(id);
  Recorder rec(c.checks, options);
  const auto start = Clock::now();
  double budget = 0.0;
  try {
    switch (id) {
      case 1: criterion_flat(rec); budget = 1.0; break;
      case 2: criterion_darboux(rec, options); budget = 30.0; break;
      case 3: criterion_landau(rec, options); break;
      case 4: criterion_dunkl(rec, options); budget = 30.0; break;
      case 5: angular_suite(rec, 0.02, 0.02, options); budget = 10.0; break;
      case 6: criterion_magnetic(rec, options); budget = 120.0; break;
      case 7: criterion_residuals(rec, options); budget = 60.0; break;
      case 8: criterion_gram(rec, options); break;
      case 9: operator_algebra(rec, options); break;
      case 10: criterion_implicit(rec, options); break;
    }
  } catch (const std::exception& e) {
    rec.error(c.title, e);
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget > 0.0) rec.timing("runtime", budget, c.seconds);
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "residual", "gram", "limits", "implicit", "angular"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, ModelKind kind, const ModelParams& params,
                                   const Options& options) {
  params.validate_for(kind);
  std::vector<CheckResult> out;
  Recorder rec(out, options);
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "oracle") {
    known = true;
    oracle_suite(rec, kind, params, options);
  }
  if (all || suite == "residual") {
    known = true;
    residual_suite(rec, kind, params, options);
  }
  if (all || suite == "gram") {
    known = true;
    gram_suite(rec, kind, params, options);
  }
  if (all || suite == "limits") {
    known = true;
    limits_suite(rec, params, options);
  }
  if (all || suite == "implicit") {
    known = true;
    implicit_suite(rec, kind, params, options);
  }
  if (all || suite == "angular") {
    known = true;
    if (kind == ModelKind::DunklLandau || kind == ModelKind::DunklDarbouxLandau)
      angular_suite(rec, params.mu_at(0), params.mu_at(1), options);
    else if (!all)
      throw std::invalid_argument("the angular suite needs a 2D Dunkl model");
  }
  if (!known) throw std::invalid_argument("unknown check suite: " + suite);
  return out;
}

}  // namespace ddo::verify
