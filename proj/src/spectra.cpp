#include "ddo/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

#include "ddo/errors.hpp"
#include "ddo/kernels.hpp"

namespace ddo::spectra {

double metric_factor(const ModelParams& params, double x_sq) {
  if (x_sq < 0.0) throw DomainError("metric_factor: x^2 must be nonnegative");
  return 1.0 + params.lambda * x_sq;
}

double scalar_curvature(const ModelParams& params, double x_sq) {
  if (x_sq < 0.0) throw DomainError("scalar_curvature: x^2 must be nonnegative");
  if (params.dim < 1) throw DomainError("scalar_curvature: dimension must be at least 1");
  const double n = params.dim;
  const double lam = params.lambda;
  const double f = 1.0 + lam * x_sq;
  return -lam * (n - 1.0) * (2.0 * n + 3.0 * (n - 2.0) * lam * x_sq) / (f * f * f);
}

double effective_frequency(const ModelParams& params, double energy) {
  const double w = params.omega_tilde();
  const double arg = w * w - 2.0 * params.lambda * energy;
  if (!(arg > 0.0)) throw DomainError("effective_frequency: requires w^2 > 2 lambda E");
  return std::sqrt(arg);
}

double deformed_energy(const ModelParams& params, double multiplier, double shift) {
  const double h = params.hbar;
  const double w = params.omega_tilde();
  if (params.lambda == 0.0) return shift + h * w * multiplier;
  // B = E - shift solves B^2 + 2 a B - h^2 T^2 (w^2 - 2 lambda shift) = 0 with
  // a = lambda h^2 T^2; rationalized positive root.
  const double a = params.lambda * h * h * multiplier * multiplier;
  const double b = h * h * multiplier * multiplier * (w * w - 2.0 * params.lambda * shift);
  const double disc = a * a + b;
  if (!(disc >= 0.0)) throw DomainError("deformed_energy: no real level for these parameters");
  return shift + b / (a + std::sqrt(disc));
}

double solve_energy_implicit(const ModelParams& params, double multiplier, double shift) {
  if (!(multiplier > 0.0)) throw DomainError("solve_energy_implicit: multiplier must be positive");
  const double h = params.hbar;
  const double w = params.omega_tilde();
  if (params.lambda == 0.0) return shift + h * w * multiplier;
  const double upper = w * w / (2.0 * params.lambda);
  if (!(shift < upper)) throw DomainError("solve_energy_implicit: shift outside the bound-state window");
  // g(E) = E - shift - hT sqrt(w^2 - 2 lambda E) is increasing; g(shift) <= 0 <= g(upper).
  auto g = [&](double e) {
    const double arg = std::max(0.0, w * w - 2.0 * params.lambda * e);
    return e - shift - h * multiplier * std::sqrt(arg);
  };
  double lo = shift;
  double hi = upper;
  for (int it = 0; it < 400 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double spectrum_darboux_nd(const ModelParams& params, int n_total) {
  if (n_total < 0) throw DomainError("spectrum_darboux_nd: negative level index");
  return deformed_energy(params, n_total + 0.5 * params.dim);
}

double spectrum_landau_darboux_2d(const ModelParams& params, int n, int m) {
  if (n < 0) throw DomainError("spectrum_landau_darboux_2d: negative radial index");
  const double big_m = 2.0 * n + std::abs(m) + 1.0;
  return deformed_energy(params, big_m, -params.hbar * m * params.omega_c);
}

double spectrum_dunkl_1d(const ModelParams& params, int n) {
  if (n < 0) throw DomainError("spectrum_dunkl_1d: negative level index");
  return params.hbar * params.omega * (n + params.mu_at(0) + 0.5);
}

namespace {

double cartesian_multiplier(const ModelParams& params, const CartesianNumbers& qn) {
  if (static_cast<int>(qn.n.size()) != params.dim)
    throw DomainError("quantum numbers do not match the dimension");
  for (int v : qn.n)
    if (v < 0) throw DomainError("negative per-axis quantum number");
  return qn.total() + params.mu_sum() + 0.5 * params.dim;
}

}  // namespace

double spectrum_dunkl_nd(const ModelParams& params, const CartesianNumbers& qn) {
  return params.hbar * params.omega * cartesian_multiplier(params, qn);
}

double spectrum_dunkl_darboux_nd(const ModelParams& params, const CartesianNumbers& qn) {
  return deformed_energy(params, cartesian_multiplier(params, qn));
}

double sigma_eigenvalue(double mu_x, double mu_y, double m_prime, int epsilon, int branch) {
  if (epsilon != 1 && epsilon != -1) throw SectorError("epsilon must be +1 or -1");
  if (branch != 1 && branch != -1) throw SectorError("branch must be +1 or -1");
  const double twice = 2.0 * m_prime;
  if (twice < 0.0 || twice != std::round(twice)) throw SectorError("m' must be a nonnegative multiple of 1/2");
  const bool odd = static_cast<long>(std::llround(twice)) % 2 != 0;
  if (epsilon == 1) {
    if (odd) throw SectorError("epsilon = +1 requires an integer m'");
    return branch * 2.0 * std::sqrt(m_prime * (m_prime + mu_x + mu_y));
  }
  if (!odd) throw SectorError("epsilon = -1 requires a positive half-odd m'");
  return branch * 2.0 * std::sqrt((m_prime + mu_x) * (m_prime + mu_y));
}

double sigma_eigenvalue(double mu_x, double mu_y, const SectorNumbers& qn) {
  qn.validate();
  return sigma_eigenvalue(mu_x, mu_y, qn.mprime(), qn.epsilon, qn.branch);
}

double radial_laguerre_parameter(double mu_x, double mu_y, int epsilon, double sigma) {
  const double s = mu_x + epsilon * mu_y;
  return std::sqrt(s * s + sigma * sigma);
}

namespace {

ImplicitForm sector_form(const ModelParams& params, const SectorNumbers& qn) {
  const double mx = params.mu_at(0);
  const double my = params.mu_at(1);
  const double sigma = sigma_eigenvalue(mx, my, qn);
  const double t = 2.0 * qn.k + radial_laguerre_parameter(mx, my, qn.epsilon, sigma) + 1.0;
  return {t, params.hbar * params.omega_c * sigma};
}

}  // namespace

double spectrum_landau_dunkl_2d(const ModelParams& params, const SectorNumbers& qn) {
  if (params.lambda != 0.0) throw DomainError("spectrum_landau_dunkl_2d: lambda must vanish");
  const auto form = sector_form(params, qn);
  return params.hbar * params.omega_tilde() * form.multiplier + form.shift;
}

double spectrum_landau_dunkl_darboux_2d(const ModelParams& params, const SectorNumbers& qn) {
  const auto form = sector_form(params, qn);
  return deformed_energy(params, form.multiplier, form.shift);
}

ImplicitForm implicit_form(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn) {
  switch (kind) {
    case ModelKind::Darboux:
    case ModelKind::Dunkl:
    case ModelKind::DunklDarboux: {
      const auto& c = std::get<CartesianNumbers>(qn);
      ModelParams p = params;
      if (kind == ModelKind::Darboux) p.mu.clear();
      return {cartesian_multiplier(p, c), 0.0};
    }
    case ModelKind::DarbouxLandau: {
      const auto& l = std::get<LandauNumbers>(qn);
      return {2.0 * l.n + std::abs(l.m) + 1.0, -params.hbar * l.m * params.omega_c};
    }
    case ModelKind::DunklLandau:
    case ModelKind::DunklDarbouxLandau:
      return sector_form(params, std::get<SectorNumbers>(qn));
  }
  return {};
}

double level_energy(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn) {
  switch (kind) {
    case ModelKind::Darboux: {
      const auto& c = std::get<CartesianNumbers>(qn);
      if (static_cast<int>(c.n.size()) != params.dim) throw DomainError("quantum numbers do not match the dimension");
      return spectrum_darboux_nd(params, c.total());
    }
    case ModelKind::Dunkl: {
      const auto& c = std::get<CartesianNumbers>(qn);
      if (params.dim == 1) return spectrum_dunkl_1d(params, c.n.at(0));
      return spectrum_dunkl_nd(params, c);
    }
    case ModelKind::DunklDarboux:
      return spectrum_dunkl_darboux_nd(params, std::get<CartesianNumbers>(qn));
    case ModelKind::DarbouxLandau: {
      const auto& l = std::get<LandauNumbers>(qn);
      return spectrum_landau_darboux_2d(params, l.n, l.m);
    }
    case ModelKind::DunklLandau:
      return spectrum_landau_dunkl_2d(params, std::get<SectorNumbers>(qn));
    case ModelKind::DunklDarbouxLandau:
      return spectrum_landau_dunkl_darboux_2d(params, std::get<SectorNumbers>(qn));
  }
  return 0.0;
}

double level_frequency(ModelKind kind, const ModelParams& params, double energy) {
  if (!has_darboux_factor(kind) || params.lambda == 0.0) return params.omega_tilde();
  return effective_frequency(params, energy);
}

int total_index(const QuantumNumbers& qn) {
  if (const auto* c = std::get_if<CartesianNumbers>(&qn)) return c->total();
  if (const auto* l = std::get_if<LandauNumbers>(&qn)) return 2 * l->n + std::abs(l->m);
  const auto& s = std::get<SectorNumbers>(qn);
  return 2 * s.k + s.twice_mprime;
}

namespace {

void cartesian_tuples(int dim, int budget, std::vector<int>& prefix, bool with_parity,
                      std::vector<QuantumNumbers>& out) {
  if (static_cast<int>(prefix.size()) == dim) {
    CartesianNumbers c{prefix, {}};
    if (with_parity)
      for (int v : prefix) c.parity.push_back(v % 2 == 0 ? 1 : -1);
    out.emplace_back(std::move(c));
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    prefix.push_back(v);
    cartesian_tuples(dim, budget - v, prefix, with_parity, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<QuantumNumbers> quantum_numbers_up_to(ModelKind kind, const ModelParams& params, int max_index) {
  if (max_index < 0) throw DomainError("max_index must be nonnegative");
  std::vector<QuantumNumbers> out;
  switch (kind) {
    case ModelKind::Darboux:
    case ModelKind::Dunkl:
    case ModelKind::DunklDarboux: {
      std::vector<int> prefix;
      cartesian_tuples(params.dim, max_index, prefix, has_reflections(kind), out);
      break;
    }
    case ModelKind::DarbouxLandau:
      for (int n = 0; 2 * n <= max_index; ++n)
        for (int m = -(max_index - 2 * n); m <= max_index - 2 * n; ++m) out.emplace_back(LandauNumbers{n, m});
      break;
    case ModelKind::DunklLandau:
    case ModelKind::DunklDarbouxLandau:
      for (int k = 0; 2 * k <= max_index; ++k) {
        for (int twice = 0; 2 * k + twice <= max_index; ++twice) {
          const int eps = twice % 2 == 0 ? 1 : -1;
          out.emplace_back(SectorNumbers{k, twice, eps, 1});
          if (twice > 0) out.emplace_back(SectorNumbers{k, twice, eps, -1});
        }
      }
      break;
  }
  return out;
}

bool labels_less(const QuantumNumbers& a, const QuantumNumbers& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ca = std::get_if<CartesianNumbers>(&a)) {
    const auto& cb = std::get<CartesianNumbers>(b);
    if (ca->total() != cb.total()) return ca->total() < cb.total();
    return ca->n < cb.n;
  }
  if (const auto* la = std::get_if<LandauNumbers>(&a)) {
    const auto& lb = std::get<LandauNumbers>(b);
    return std::tie(la->n, la->m) < std::tie(lb.n, lb.m);
  }
  const auto& sa = std::get<SectorNumbers>(a);
  const auto& sb = std::get<SectorNumbers>(b);
  return std::make_tuple(-sa.epsilon, sa.k, sa.twice_mprime, -sa.branch) <
         std::make_tuple(-sb.epsilon, sb.k, sb.twice_mprime, -sb.branch);
}

void sort_and_group(std::vector<LevelRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const LevelRecord& a, const LevelRecord& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return labels_less(a.qn, b.qn);
  });
  // Group consecutive energies within tolerance of the group's first member,
  // then order each group by labels only.
  std::size_t start = 0;
  int group = 0;
  while (start < records.size()) {
    const double e0 = records[start].energy;
    const double tol = kDegeneracyTolerance * std::max(1.0, std::abs(e0));
    std::size_t end = start + 1;
    while (end < records.size() && records[end].energy - e0 <= tol) ++end;
    std::stable_sort(records.begin() + static_cast<std::ptrdiff_t>(start),
                     records.begin() + static_cast<std::ptrdiff_t>(end),
                     [](const LevelRecord& a, const LevelRecord& b) { return labels_less(a.qn, b.qn); });
    for (std::size_t i = start; i < end; ++i) records[i].group = group;
    ++group;
    start = end;
  }
}

std::vector<LevelRecord> enumerate_levels(ModelKind kind, const ModelParams& params, int max_index) {
  if (max_index < 0) throw DomainError("max_index must be nonnegative");
  params.validate_for(kind);
  const auto labels = quantum_numbers_up_to(kind, params, max_index);
  const auto energies = kernels::level_energies(kind, params, labels);
  std::vector<LevelRecord> records;
  records.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    records.push_back({kind, params, labels[i], energies[i], level_frequency(kind, params, energies[i]), 0});
  sort_and_group(records);
  return records;
}

std::vector<LevelRecord> sweep_levels(ModelKind kind, const ModelParams& base, SweepParameter which,
                                      const std::vector<double>& values, int max_index) {
  if (values.empty()) throw DomainError("sweep_levels: empty sweep list");
  std::vector<LevelRecord> out;
  for (double v : values) {
    ModelParams p = base;
    if (which == SweepParameter::Lambda)
      p.lambda = v;
    else
      p.omega_c = 0.5 * v;
    auto rows = enumerate_levels(kind, p, max_index);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace ddo::spectra
