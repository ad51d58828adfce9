#include "ddo/eigenfunctions.hpp"

#include <cmath>
#include <numbers>

#include "ddo/errors.hpp"
#include "ddo/spectra.hpp"

namespace ddo::eigenfunctions {

namespace {

using cplx = std::complex<double>;
using quadrature::InnerProductWeight;
using quadrature::WeightKind;

RealJet gaussian_jet(double width, double x) {
  const double b2 = width * width;
  const double g = std::exp(-0.5 * b2 * x * x);
  return {g, -b2 * x * g, (b2 * b2 * x * x - b2) * g};
}

// L(width^2 x^2) as a jet in x.
RealJet laguerre_in_square(int k, double alpha, double width, double x) {
  const double b2 = width * width;
  const RealJet l = specfun::laguerre_jet(k, alpha, b2 * x * x);
  const double du = 2.0 * b2 * x;
  return {l.value, l.d1 * du, l.d2 * du * du + l.d1 * 2.0 * b2};
}

bool is_line_weight(const InnerProductWeight& w) {
  return w.kind == WeightKind::DarbouxLine || w.kind == WeightKind::DunklLine ||
         w.kind == WeightKind::DunklDarbouxLine;
}

double line_integral(const LineWavefunction& f, const LineWavefunction& g, const InnerProductWeight& weight,
                     int extra_power) {
  const double s = 0.5 * (f.width * f.width + g.width * g.width);
  const int size = (f.n + g.n + extra_power) / 2 + 16;
  const auto rule = quadrature::make_quadrature(weight, size, s);
  return rule.integrate([&](double x) { return std::pow(x, extra_power) * f(x) * g(x); });
}

LineWavefunction make_line(Family family, int n, double mu, double width, const InnerProductWeight& weight,
                           double energy, double frequency) {
  LineWavefunction psi;
  psi.family = family;
  psi.n = n;
  psi.width = width;
  psi.parity = n % 2 == 0 ? 1 : -1;
  psi.energy = energy;
  psi.frequency = frequency;
  psi.weight = weight;
  if (family == Family::HermiteGaussian1D) {
    psi.prefactor_power = 0;
    psi.poly.kind = specfun::PolyKind::Hermite;
    psi.poly.degree = n;
  } else {
    const int q = n % 2;
    psi.prefactor_power = q;
    psi.poly.kind = specfun::PolyKind::GeneralizedLaguerre;
    psi.poly.degree = n / 2;
    psi.poly.alpha = mu + q - 0.5;
    psi.poly.mu = mu;
    psi.poly.parity_q = q;
  }
  psi.poly.validate();
  psi.norm_constant = 1.0;
  const double nn = line_integral(psi, psi, weight, 0);
  psi.norm_constant = 1.0 / std::sqrt(nn);
  return psi;
}

ModelParams one_axis(const ModelParams& params, bool keep_mu) {
  ModelParams p = params;
  p.dim = 1;
  p.mu.clear();
  if (keep_mu) p.mu.push_back(params.mu_at(0));
  return p;
}

void check_parity(int n, int e_x) {
  if (e_x != 1 && e_x != -1) throw SectorError("e_x must be +1 or -1");
  if (e_x != (n % 2 == 0 ? 1 : -1)) throw SectorError("e_x must equal (-1)^n");
}

// Unnormalized Jacobi components (X_a, X_b) of a sector as jets in t.
void jacobi_components(const AngularWavefunction& f, double t, RealJet& a, RealJet& b) {
  const double x = -std::cos(2.0 * t);
  const double dx = 2.0 * std::sin(2.0 * t);
  const double ddx = 4.0 * std::cos(2.0 * t);
  auto in_t = [&](const RealJet& pj) { return RealJet{pj.value, pj.d1 * dx, pj.d2 * dx * dx + pj.d1 * ddx}; };
  const double s = std::sin(t), c = std::cos(t);
  a = RealJet{};
  b = RealJet{};
  if (f.epsilon == 1) {
    const int mp = f.twice_mprime / 2;
    a = in_t(specfun::jacobi_jet(mp, f.mu_x - 0.5, f.mu_y - 0.5, x));
    if (mp >= 1) {
      const RealJet sc{s * c, c * c - s * s, -4.0 * s * c};
      b = sc * in_t(specfun::jacobi_jet(mp - 1, f.mu_x + 0.5, f.mu_y + 0.5, x));
    }
  } else {
    const int j = (f.twice_mprime - 1) / 2;
    a = RealJet{c, -s, -c} * in_t(specfun::jacobi_jet(j, f.mu_x + 0.5, f.mu_y - 0.5, x));
    b = RealJet{s, c, -s} * in_t(specfun::jacobi_jet(j, f.mu_x - 0.5, f.mu_y + 0.5, x));
  }
}

double jacobi_norm(const AngularWavefunction& base, bool second) {
  const auto rule = quadrature::make_quadrature(base.weight, base.degree() + 16);
  return rule.integrate([&](double t) {
    RealJet a, b;
    jacobi_components(base, t, a, b);
    return second ? b.value * b.value : a.value * a.value;
  });
}

}  // namespace

RealJet LineWavefunction::jet(double x) const {
  const RealJet g = gaussian_jet(width, x);
  RealJet p;
  if (family == Family::HermiteGaussian1D) {
    const RealJet h = specfun::hermite_jet(n, width * x);
    p = {h.value, h.d1 * width, h.d2 * width * width};
  } else {
    const RealJet l = laguerre_in_square(poly.degree, poly.alpha, width, x);
    const RealJet pre = prefactor_power == 0 ? RealJet{1.0, 0.0, 0.0} : RealJet{x, 1.0, 0.0};
    p = scale(pre * l, poly.degree % 2 == 0 ? 1.0 : -1.0);
  }
  return scale(p * g, norm_constant);
}

operators::SmoothFunction1D LineWavefunction::as_function() const {
  operators::SmoothFunction1D f;
  f.at = [self = *this](double x) { return self.jet(x); };
  f.parity_hint = parity == 1 ? operators::Parity::Even : operators::Parity::Odd;
  return f;
}

double ProductWavefunction::operator()(const std::vector<double>& x) const {
  if (x.size() != factors.size()) throw DomainError("product wavefunction: dimension mismatch");
  double v = norm_constant;
  for (std::size_t i = 0; i < x.size(); ++i) v *= factors[i](x[i]);
  return v;
}

std::vector<operators::SmoothFunction1D> ProductWavefunction::as_functions() const {
  std::vector<operators::SmoothFunction1D> out;
  for (const auto& f : factors) out.push_back(f.as_function());
  if (!out.empty()) {
    const double c = norm_constant;
    out[0].at = [at = out[0].at, c](double x) { return scale(at(x), c); };
  }
  return out;
}

RealJet RadialWavefunction::jet(double r) const {
  const double p = prefactor_power;
  const double rp = std::pow(r, p);
  const RealJet pre{rp, p * rp / r, p * (p - 1.0) * rp / (r * r)};
  const RealJet l = laguerre_in_square(k, laguerre_alpha, width, r);
  return scale(pre * l * gaussian_jet(width, r), norm_constant);
}

double RadialWavefunction::smooth_part(double r) const {
  return norm_constant * specfun::eval_generalized_laguerre(k, laguerre_alpha, width * width * r * r) *
         std::exp(-0.5 * width * width * r * r);
}

operators::RadialFunction RadialWavefunction::as_function() const {
  return [self = *this](double r) { return self.jet(r); };
}

int AngularWavefunction::degree() const {
  if (plain_exponential) return std::abs(m) / 2 + 1;
  return twice_mprime / 2 + 2;
}

ComplexJet AngularWavefunction::jet(double t) const {
  if (plain_exponential) {
    const cplx e = std::exp(cplx(0.0, m * t)) / std::sqrt(2.0 * std::numbers::pi);
    const cplx im(0.0, m);
    return {e, im * e, im * im * e};
  }
  RealJet a, b;
  jacobi_components(*this, t, a, b);
  const double coef = epsilon == 1 ? branch : -branch;
  const double root2 = norm_b == 0.0 ? 1.0 : std::sqrt(2.0);
  const cplx ib(0.0, coef * norm_b / root2);
  const double ra = norm_a / root2;
  return {ra * a.value + ib * b.value, ra * a.d1 + ib * b.d1, ra * a.d2 + ib * b.d2};
}

operators::AngularFunction AngularWavefunction::as_function() const {
  return {[self = *this](double t) { return self.jet(t); }};
}

LineWavefunction build_darboux_1d(const ModelParams& params, int n) {
  if (n < 0) throw DomainError("build_darboux_1d: negative level index");
  const ModelParams p = one_axis(params, false);
  p.validate_for(ModelKind::Darboux);
  const double e = spectra::spectrum_darboux_nd(p, n);
  const double om = spectra::level_frequency(ModelKind::Darboux, p, e);
  return make_line(Family::HermiteGaussian1D, n, 0.0, std::sqrt(om / p.hbar), quadrature::darboux_line(p.lambda),
                   e, om);
}

LineWavefunction build_dunkl_1d(const ModelParams& params, int n, int e_x) {
  if (n < 0) throw DomainError("build_dunkl_1d: negative level index");
  check_parity(n, e_x);
  ModelParams p = one_axis(params, true);
  p.lambda = 0.0;
  p.validate();
  const double mu = p.mu_at(0);
  const double e = spectra::spectrum_dunkl_1d(p, n);
  return make_line(Family::GeneralizedHermite1D, n, mu, std::sqrt(p.omega / p.hbar), quadrature::dunkl_line(mu), e,
                   p.omega);
}

LineWavefunction build_dunkl_darboux_1d(const ModelParams& params, int n, int e_x) {
  if (n < 0) throw DomainError("build_dunkl_darboux_1d: negative level index");
  check_parity(n, e_x);
  const ModelParams p = one_axis(params, true);
  p.validate_for(ModelKind::DunklDarboux);
  const double mu = p.mu_at(0);
  const double e = spectra::spectrum_dunkl_darboux_nd(p, CartesianNumbers{{n}, {e_x}});
  const double om = spectra::level_frequency(ModelKind::DunklDarboux, p, e);
  return make_line(Family::GeneralizedHermite1D, n, mu, std::sqrt(om / p.hbar),
                   quadrature::dunkl_darboux_line(p.lambda, mu), e, om);
}

namespace {

double product_norm(const std::vector<LineWavefunction>& f, const std::vector<LineWavefunction>& g, double lambda) {
  const std::size_t n = f.size();
  std::vector<double> overlap(n), second(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = f[i].poly.kind == specfun::PolyKind::Hermite ? 0.0 : f[i].poly.mu;
    const auto w = quadrature::dunkl_line(mu);
    overlap[i] = line_integral(f[i], g[i], w, 0);
    second[i] = lambda == 0.0 ? 0.0 : line_integral(f[i], g[i], w, 2);
  }
  double flat = 1.0;
  for (double o : overlap) flat *= o;
  double curved = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double term = second[i];
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) term *= overlap[k];
    curved += term;
  }
  return flat + lambda * curved;
}

}  // namespace

ProductWavefunction build_product_nd(ModelKind kind, const ModelParams& params, const CartesianNumbers& qn) {
  if (is_landau(kind)) throw DomainError("build_product_nd: Cartesian models only");
  params.validate_for(kind);
  if (static_cast<int>(qn.n.size()) != params.dim) throw DomainError("build_product_nd: dimension mismatch");
  const double e = spectra::level_energy(kind, params, qn);
  const double om = spectra::level_frequency(kind, params, e);
  const double width = std::sqrt(om / params.hbar);
  ProductWavefunction psi;
  psi.lambda = has_darboux_factor(kind) ? params.lambda : 0.0;
  psi.energy = e;
  psi.frequency = om;
  for (int i = 0; i < params.dim; ++i) {
    const double mu = has_reflections(kind) ? params.mu_at(i) : 0.0;
    const Family fam = has_reflections(kind) ? Family::GeneralizedHermite1D : Family::HermiteGaussian1D;
    psi.factors.push_back(make_line(fam, qn.n[i], mu, width, quadrature::dunkl_line(mu), e, om));
  }
  psi.norm_constant = 1.0 / std::sqrt(product_norm(psi.factors, psi.factors, psi.lambda));
  return psi;
}

ProductWavefunction build_product_nd(const ModelParams& params, const std::vector<LineWavefunction>& factors) {
  if (static_cast<int>(factors.size()) != params.dim) throw DomainError("build_product_nd: dimension mismatch");
  ProductWavefunction psi;
  psi.factors = factors;
  psi.lambda = params.lambda;
  double e = 0.0;
  for (const auto& f : factors) e += f.energy;
  psi.energy = e;
  psi.frequency = factors.empty() ? 0.0 : factors.front().frequency;
  psi.norm_constant = 1.0 / std::sqrt(product_norm(psi.factors, psi.factors, psi.lambda));
  return psi;
}

AngularWavefunction build_angular(double mu_x, double mu_y, double m_prime, int epsilon, int branch) {
  if (!(mu_x > -0.5) || !(mu_y > -0.5)) throw DomainError("build_angular: mu must exceed -1/2");
  AngularWavefunction f;
  f.mu_x = mu_x;
  f.mu_y = mu_y;
  f.twice_mprime = static_cast<int>(std::llround(2.0 * m_prime));
  f.epsilon = epsilon;
  f.branch = branch;
  f.sigma = spectra::sigma_eigenvalue(mu_x, mu_y, m_prime, epsilon, branch);
  f.weight = quadrature::angular(mu_x, mu_y);
  const bool singlet = epsilon == 1 && f.twice_mprime == 0;
  f.norm_a = 1.0 / std::sqrt(jacobi_norm(f, false));
  f.norm_b = singlet ? 0.0 : 1.0 / std::sqrt(jacobi_norm(f, true));
  return f;
}

RadialWavefunction build_radial_2d(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn) {
  if (!is_landau(kind)) throw DomainError("build_radial_2d: 2D magnetic models only");
  params.validate_for(kind);
  const double e = spectra::level_energy(kind, params, qn);
  const double om = spectra::level_frequency(kind, params, e);
  RadialWavefunction r;
  r.width = std::sqrt(om / params.hbar);
  double w = 1.0;
  if (kind == ModelKind::DarbouxLandau) {
    const auto& l = std::get<LandauNumbers>(qn);
    r.k = l.n;
    r.laguerre_alpha = std::abs(l.m);
    r.prefactor_power = std::abs(l.m);
  } else {
    const auto& s = std::get<SectorNumbers>(qn);
    const double mx = params.mu_at(0), my = params.mu_at(1);
    const double sigma = spectra::sigma_eigenvalue(mx, my, s);
    r.k = s.k;
    r.laguerre_alpha = spectra::radial_laguerre_parameter(mx, my, s.epsilon, sigma);
    r.prefactor_power = r.laguerre_alpha - mx - my;
    w = 1.0 + 2.0 * mx + 2.0 * my;
  }
  const double lam = has_darboux_factor(kind) ? params.lambda : 0.0;
  r.weight = quadrature::radial(w, lam);
  r.norm_constant = 1.0;
  r.norm_constant = 1.0 / std::sqrt(inner_product(r, r, r.weight));
  return r;
}

PolarWavefunction build_polar_2d(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn) {
  PolarWavefunction psi;
  psi.model = kind;
  psi.radial = build_radial_2d(kind, params, qn);
  psi.energy = spectra::level_energy(kind, params, qn);
  psi.frequency = spectra::level_frequency(kind, params, psi.energy);
  if (kind == ModelKind::DarbouxLandau) {
    AngularWavefunction a;
    a.family = Family::AngularJacobi;
    a.plain_exponential = true;
    a.m = std::get<LandauNumbers>(qn).m;
    a.sigma = -a.m;
    a.weight = quadrature::angular(0.0, 0.0);
    psi.angular = a;
  } else {
    const auto& s = std::get<SectorNumbers>(qn);
    psi.angular = build_angular(params.mu_at(0), params.mu_at(1), s.mprime(), s.epsilon, s.branch);
  }
  return psi;
}

double inner_product(const LineWavefunction& f, const LineWavefunction& g, const InnerProductWeight& weight) {
  if (!is_line_weight(weight)) throw DomainError("inner_product: line functions need a line weight");
  return line_integral(f, g, weight, 0);
}

double inner_product(const RadialWavefunction& f, const RadialWavefunction& g, const InnerProductWeight& weight) {
  if (weight.kind != WeightKind::Radial) throw DomainError("inner_product: radial functions need a radial weight");
  const auto w = quadrature::radial(weight.radial_exponent + f.prefactor_power + g.prefactor_power, weight.lambda);
  const double s = 0.5 * (f.width * f.width + g.width * g.width);
  const auto rule = quadrature::make_quadrature(w, f.k + g.k + 16, s);
  return rule.integrate([&](double r) { return f.smooth_part(r) * g.smooth_part(r); });
}

std::complex<double> inner_product(const AngularWavefunction& f, const AngularWavefunction& g,
                                   const InnerProductWeight& weight) {
  if (weight.kind != WeightKind::Angular) throw DomainError("inner_product: angular functions need an angular weight");
  const auto rule = quadrature::make_quadrature(weight, std::max(f.degree(), g.degree()) * 2 + 16);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * std::conj(f(rule.nodes[i])) * g(rule.nodes[i]);
  return acc;
}

double inner_product(const ProductWavefunction& f, const ProductWavefunction& g, double lambda) {
  if (f.factors.size() != g.factors.size()) throw DomainError("inner_product: dimension mismatch");
  return f.norm_constant * g.norm_constant * product_norm(f.factors, g.factors, lambda);
}

std::complex<double> inner_product(const PolarWavefunction& f, const PolarWavefunction& g, double lambda) {
  const double mx = f.angular.mu_x, my = f.angular.mu_y;
  const auto rw = quadrature::radial(1.0 + 2.0 * mx + 2.0 * my, lambda);
  return inner_product(f.radial, g.radial, rw) * inner_product(f.angular, g.angular, quadrature::angular(mx, my));
}

}  // namespace ddo::eigenfunctions
