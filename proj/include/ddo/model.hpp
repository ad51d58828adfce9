#pragma once

// Model identifiers, physical parameters and level labels shared by every
// module.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ddo {

enum class ModelKind {
  Darboux,             // position-dependent mass oscillator, N >= 1
  Dunkl,               // reflection oscillator, N >= 1
  DunklDarboux,        // both deformations, N >= 1
  DarbouxLandau,       // 2D Darboux III in a constant field
  DunklLandau,         // 2D Dunkl in a constant field (lambda = 0)
  DunklDarbouxLandau,  // 2D Dunkl-Darboux III in a constant field
};

std::string_view model_id(ModelKind kind);
std::optional<ModelKind> parse_model_id(std::string_view id);
bool is_landau(ModelKind kind);
bool has_darboux_factor(ModelKind kind);
bool has_reflections(ModelKind kind);

struct ModelParams {
  double hbar = 1.0;
  double omega = 1.0;
  double lambda = 0.0;
  std::vector<double> mu;  // one entry per axis; empty means all zero
  double omega_c = 0.0;    // Larmor frequency eB/2c
  int dim = 1;

  double mu_at(int axis) const;
  double mu_sum() const;
  // Modulation frequency sqrt(omega^2 + omega_c^2); equals omega without a field.
  double omega_tilde() const;

  // Throws DomainError on hbar<=0, omega<=0, lambda<0, mu_i<=-1/2, omega_c<0,
  // dim<1, or a mu list whose length is neither 0 nor dim.
  void validate() const;
  // validate() plus the model-specific restrictions (dim = 2 and field only
  // for Landau kinds, lambda = 0 for DunklLandau, mu = 0 for Darboux kinds).
  void validate_for(ModelKind kind) const;

  bool operator==(const ModelParams&) const = default;
};

// Per-axis labels for the Cartesian-separable models. `parity` is e_i = +-1
// and is filled only for models with reflections.
struct CartesianNumbers {
  std::vector<int> n;
  std::vector<int> parity;
  int total() const;
  bool operator==(const CartesianNumbers&) const = default;
};

// (n, m) of the 2D Darboux III oscillator in a field.
struct LandauNumbers {
  int n = 0;
  int m = 0;
  bool operator==(const LandauNumbers&) const = default;
};

// (k, m', epsilon, branch) of the 2D Dunkl models. m' is kept as 2m' so the
// half-odd values of the epsilon = -1 sector stay exact.
struct SectorNumbers {
  int k = 0;
  int twice_mprime = 0;
  int epsilon = 1;
  int branch = 1;
  double mprime() const { return 0.5 * twice_mprime; }
  void validate() const;
  bool operator==(const SectorNumbers&) const = default;
};

using QuantumNumbers = std::variant<CartesianNumbers, LandauNumbers, SectorNumbers>;

struct LevelRecord {
  ModelKind model = ModelKind::Darboux;
  ModelParams params;
  QuantumNumbers qn;
  double energy = 0.0;
  double frequency = 0.0;  // effective Omega at this level
  int group = 0;           // degeneracy group (levels equal within tolerance)

  bool operator==(const LevelRecord&) const = default;
};

}  // namespace ddo
