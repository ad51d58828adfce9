#include "ddo/model.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <utility>

#include "ddo/errors.hpp"

namespace ddo {

namespace {

constexpr std::array<std::pair<ModelKind, std::string_view>, 6> kModelIds{{
    {ModelKind::Darboux, "darboux"},
    {ModelKind::Dunkl, "dunkl"},
    {ModelKind::DunklDarboux, "dunkl-darboux"},
    {ModelKind::DarbouxLandau, "darboux-landau"},
    {ModelKind::DunklLandau, "dunkl-landau"},
    {ModelKind::DunklDarbouxLandau, "dunkl-darboux-landau"},
}};

}  // namespace

std::string_view model_id(ModelKind kind) {
  for (const auto& [k, id] : kModelIds)
    if (k == kind) return id;
  return "unknown";
}

std::optional<ModelKind> parse_model_id(std::string_view id) {
  for (const auto& [k, name] : kModelIds)
    if (name == id) return k;
  return std::nullopt;
}

bool is_landau(ModelKind kind) {
  return kind == ModelKind::DarbouxLandau || kind == ModelKind::DunklLandau ||
         kind == ModelKind::DunklDarbouxLandau;
}

bool has_darboux_factor(ModelKind kind) {
  return kind == ModelKind::Darboux || kind == ModelKind::DunklDarboux ||
         kind == ModelKind::DarbouxLandau || kind == ModelKind::DunklDarbouxLandau;
}

bool has_reflections(ModelKind kind) {
  return kind == ModelKind::Dunkl || kind == ModelKind::DunklDarboux ||
         kind == ModelKind::DunklLandau || kind == ModelKind::DunklDarbouxLandau;
}

double ModelParams::mu_at(int axis) const {
  if (mu.empty()) return 0.0;
  return mu.at(static_cast<std::size_t>(axis));
}

double ModelParams::mu_sum() const { return std::accumulate(mu.begin(), mu.end(), 0.0); }

double ModelParams::omega_tilde() const { return std::sqrt(omega * omega + omega_c * omega_c); }

void ModelParams::validate() const {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  if (!(omega_c >= 0.0)) throw DomainError("omega_c must be nonnegative");
  if (dim < 1) throw DomainError("dimension must be at least 1");
  if (!mu.empty() && static_cast<int>(mu.size()) != dim)
    throw DomainError("mu list length must equal the dimension");
  for (double m : mu)
    if (!(m > -0.5)) throw DomainError("each mu must exceed -1/2");
}

void ModelParams::validate_for(ModelKind kind) const {
  validate();
  if (is_landau(kind) && dim != 2) throw DomainError("magnetic models are two-dimensional");
  if (!is_landau(kind) && omega_c != 0.0) throw DomainError("omega_c requires a magnetic (dim = 2) model");
  if (kind == ModelKind::DunklLandau && lambda != 0.0)
    throw DomainError("dunkl-landau requires lambda = 0; use dunkl-darboux-landau");
  if (!has_reflections(kind))
    for (double m : mu)
      if (m != 0.0) throw DomainError("mu is only meaningful for Dunkl models");
  if (!has_darboux_factor(kind) && lambda != 0.0)
    throw DomainError("lambda is only meaningful for Darboux models");
}

int CartesianNumbers::total() const { return std::accumulate(n.begin(), n.end(), 0); }

void SectorNumbers::validate() const {
  if (epsilon != 1 && epsilon != -1) throw SectorError("epsilon must be +1 or -1");
  if (branch != 1 && branch != -1) throw SectorError("branch must be +1 or -1");
  if (k < 0) throw SectorError("radial index must be nonnegative");
  if (twice_mprime < 0) throw SectorError("m' must be nonnegative");
  const bool odd = twice_mprime % 2 != 0;
  if (epsilon == 1 && odd) throw SectorError("epsilon = +1 needs an integer m'");
  if (epsilon == -1 && !odd) throw SectorError("epsilon = -1 needs a half-odd m'");
  if (epsilon == 1 && twice_mprime == 0 && branch != 1)
    throw SectorError("the m' = 0 singlet has a single branch");
}

}  // namespace ddo
