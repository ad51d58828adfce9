#pragma once

// Closed-form spectra of the oscillator family, the implicit
// energy-dependent-frequency equation, and background geometry.

#include <vector>

#include "ddo/model.hpp"

namespace ddo::spectra {

// Conformal factor 1 + lambda |x|^2 of the Darboux III metric.
double metric_factor(const ModelParams& params, double x_sq);

// Scalar curvature -lambda (N-1)(2N + 3(N-2) lambda x^2) / (1 + lambda x^2)^3.
double scalar_curvature(const ModelParams& params, double x_sq);

// sqrt(w^2 - 2 lambda E) with w = omega_tilde (omega without a field).
// Throws DomainError when w^2 <= 2 lambda E.
double effective_frequency(const ModelParams& params, double energy);

// Root E of E = shift + hbar * multiplier * sqrt(w^2 - 2 lambda E) by
// safeguarded bisection (absolute tolerance 1e-13); exact for lambda = 0.
double solve_energy_implicit(const ModelParams& params, double multiplier, double shift = 0.0);

// Closed-form root of the same equation.
double deformed_energy(const ModelParams& params, double multiplier, double shift = 0.0);

double spectrum_darboux_nd(const ModelParams& params, int n_total);
double spectrum_landau_darboux_2d(const ModelParams& params, int n, int m);
double spectrum_dunkl_1d(const ModelParams& params, int n);
double spectrum_dunkl_nd(const ModelParams& params, const CartesianNumbers& qn);
double spectrum_dunkl_darboux_nd(const ModelParams& params, const CartesianNumbers& qn);

// +-2 sqrt(m'(m'+mu_x+mu_y)) for epsilon = +1, +-2 sqrt((m'+mu_x)(m'+mu_y))
// for epsilon = -1. Throws SectorError when m' does not belong to the sector.
double sigma_eigenvalue(double mu_x, double mu_y, double m_prime, int epsilon, int branch);
double sigma_eigenvalue(double mu_x, double mu_y, const SectorNumbers& qn);

// sqrt((mu_x + epsilon mu_y)^2 + sigma^2): Laguerre parameter of the radial
// factor in sector epsilon.
double radial_laguerre_parameter(double mu_x, double mu_y, int epsilon, double sigma);

double spectrum_landau_dunkl_2d(const ModelParams& params, const SectorNumbers& qn);
double spectrum_landau_dunkl_darboux_2d(const ModelParams& params, const SectorNumbers& qn);

// The multiplier T and Zeeman shift c with E = c + hbar T Omega(E) for a level.
struct ImplicitForm {
  double multiplier = 0.0;
  double shift = 0.0;
};
ImplicitForm implicit_form(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn);

// Dispatches to the closed form matching `kind`; validates params and labels.
double level_energy(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn);

// Effective frequency of a level (omega or omega_tilde for flat models).
double level_frequency(ModelKind kind, const ModelParams& params, double energy);

// Index used to cap enumerations: sum n_i, 2n+|m|, or 2k+2m'.
int total_index(const QuantumNumbers& qn);

// All quantum numbers with total_index <= max_index (both branches where they
// differ), in a fixed generation order.
std::vector<QuantumNumbers> quantum_numbers_up_to(ModelKind kind, const ModelParams& params,
                                                  int max_index);

// Relative grouping tolerance used by enumerate_levels.
inline constexpr double kDegeneracyTolerance = 1e-10;

// Sorted by energy, then labels; levels within 1e-10 max(1,|E|) share a group.
// Throws DomainError for max_index < 0. Energies are computed in parallel.
std::vector<LevelRecord> enumerate_levels(ModelKind kind, const ModelParams& params, int max_index);

// Sorts records and assigns degeneracy groups in place.
void sort_and_group(std::vector<LevelRecord>& records);

enum class SweepParameter {
  Lambda,  // deformation parameter
  Field,   // magnetic field B, mapped to omega_c = B/2 (e = c = 1)
};

// enumerate_levels for each sweep value in the given order (records of one
// value stay contiguous). Throws DomainError for an empty sweep.
std::vector<LevelRecord> sweep_levels(ModelKind kind, const ModelParams& base, SweepParameter which,
                                      const std::vector<double>& values, int max_index);

// Strict ordering of labels used as a tiebreak inside degeneracy groups.
bool labels_less(const QuantumNumbers& a, const QuantumNumbers& b);

}  // namespace ddo::spectra
