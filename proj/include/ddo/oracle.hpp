#pragma once

// Independent checks of the closed forms: basis expansions of each
// Hamiltonian as a symmetric-definite generalized eigenproblem A v = E S v,
// pointwise eigen-residual sampling, and a dense discretization of the Dunkl
// angular momentum.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ddo/eigenfunctions.hpp"
#include "ddo/model.hpp"
#include "ddo/operators.hpp"

namespace ddo::oracle {

struct GeneralizedEigenproblem {
  Eigen::MatrixXd stiffness;  // A: numerator of the Hamiltonian in the basis
  Eigen::MatrixXd mass;       // S: matrix of the Darboux factor 1 + lambda |x|^2
  std::string sector;
  // Total polynomial degree (Cartesian) or radial index k of each basis function.
  std::vector<int> degree;
  int basis_size() const { return static_cast<int>(stiffness.rows()); }
};

// <phi_i| x^2 |phi_j> for the orthonormal parity-q Dunkl oscillator functions
// (degree 2j+q) at width sqrt(omega/hbar), by quadrature.
Eigen::MatrixXd position_square_1d(double mu, int parity_q, int basis_size, double width);
// Same matrix from the Laguerre three-term recurrence (tridiagonal in j).
Eigen::MatrixXd position_square_1d_analytic(double mu, int parity_q, int basis_size, double width);
// <phi_k| r^2 |phi_l> for orthonormal r^p L_k^a(b^2 r^2) e^{-b^2 r^2/2} under
// r^{2a+1-2p} dr, by quadrature; and its tridiagonal closed form.
Eigen::MatrixXd radius_square(double laguerre_alpha, int basis_size, double width);
Eigen::MatrixXd radius_square_analytic(double laguerre_alpha, int basis_size, double width);

// 1D Darboux / Dunkl / DunklDarboux in the parity sector e_x, basis of
// basis_size Dunkl oscillator functions at the reference frequency omega.
// Throws DomainError for basis_size < 16 or other kinds.
GeneralizedEigenproblem assemble_1d(ModelKind kind, const ModelParams& params, int basis_size, int parity);

// Radial problem with A = diag(hbar w (2k + a + 1) + shift), S = I + lambda R^2.
GeneralizedEigenproblem assemble_radial(const ModelParams& params, double frequency, double laguerre_alpha,
                                        double shift, int basis_size);

// 2D magnetic models: LandauNumbers (DarbouxLandau, m used) or SectorNumbers
// (Dunkl kinds; k ignored). The flat Cartesian kinds with dim = 2 are accepted
// with SectorNumbers and omega_c = 0.
GeneralizedEigenproblem assemble_2d(ModelKind kind, const ModelParams& params, int basis_size,
                                    const QuantumNumbers& sector);

// N-dimensional Darboux / DunklDarboux in the h-harmonic sector of degree ell:
// a = ell + (N-2)/2 + sum mu, radial weight exponent N - 1 + 2 sum mu.
GeneralizedEigenproblem assemble_nd_radial(ModelKind kind, const ModelParams& params, int basis_size, int ell);

// N = 2 Cartesian tensor basis with parities (q1, q2) and total degree
// n1 + n2 <= max_degree; S = I + lambda (X1^2 + X2^2).
GeneralizedEigenproblem assemble_cartesian_2d(ModelKind kind, const ModelParams& params, int max_degree, int q1,
                                              int q2);

// Smallest `count` eigenvalues, ascending. Throws OracleError when count
// exceeds basis_size - 10, S is not positive definite, or A, S are not symmetric.
std::vector<double> solve_generalized(const GeneralizedEigenproblem& problem, int count);

struct GeneralizedSolution {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // S-orthonormal columns
};
GeneralizedSolution solve_generalized_full(const GeneralizedEigenproblem& problem);

// Lowest eigenvalues of a Cartesian / radial model merged over sectors.
std::vector<double> oracle_levels_1d(ModelKind kind, const ModelParams& params, int basis_size, int count);

// Max |(E_b - E_a) <a|S I_i|b>| over interior states (total degree <=
// max_degree - 2 margin, i.e. margin basis functions per parity block) of the
// N = 2 Darboux III problem, i = 1, 2.
struct CommutatorReport {
  double max_interior = 0.0;
  int interior_states = 0;
};
CommutatorReport integrals_of_motion_check(const ModelParams& params, int max_degree, int margin = 10);

struct ResidualReport {
  double max_relative = 0.0;
  double mean_relative = 0.0;
  int samples = 0;
};
// |H psi - E psi| / (|E| max|psi|) at quasi-random bulk points (|x|, r within
// four widths, angles away from the poles). `seed` shifts the sequence.
ResidualReport residual_report(const eigenfunctions::LineWavefunction& psi, double energy,
                               operators::LineModel model, const ModelParams& params, int sample_count,
                               std::uint64_t seed = 0);
ResidualReport residual_report(const eigenfunctions::ProductWavefunction& psi, double energy,
                               operators::LineModel model, const ModelParams& params, int sample_count,
                               std::uint64_t seed = 0);
ResidualReport residual_report(const eigenfunctions::PolarWavefunction& psi, double energy,
                               operators::PolarModel model, const ModelParams& params, int sample_count,
                               std::uint64_t seed = 0);

struct AngularDiscretization {
  int grid_size = 0;
  Eigen::MatrixXcd matrix;               // J on the grid t_j = (j + 1/2) 2pi / G
  std::vector<double> eigenvalues;       // all, sorted by |value| then value
  std::vector<double> even_sector;       // epsilon = +1 (even Fourier modes)
  std::vector<double> odd_sector;        // epsilon = -1
  double block_residual = 0.0;           // largest even/odd coupling in the Fourier basis
  double reflection_commutator = 0.0;    // max |J P - P J| for the R_x R_y grid map P
  double max_imaginary = 0.0;            // largest imaginary part among eigenvalues
};
// grid_size must be a multiple of 4 and at least 64 (DomainError otherwise).
AngularDiscretization discretize_angular_J(double mu_x, double mu_y, int grid_size);

}  // namespace ddo::oracle
