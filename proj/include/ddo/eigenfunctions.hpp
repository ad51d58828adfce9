#pragma once

// Eigenfunction families of the oscillator family as evaluable values with
// exact first and second derivatives. Normalization constants come from
// quadrature under each family's own weight.

#include <complex>
#include <vector>

#include "ddo/jet.hpp"
#include "ddo/model.hpp"
#include "ddo/operators.hpp"
#include "ddo/quadrature.hpp"
#include "ddo/specfun.hpp"

namespace ddo::eigenfunctions {

enum class Family { HermiteGaussian1D, ProductND, RadialLaguerre2D, GeneralizedHermite1D, AngularJacobi };

// N x^q P(x) exp(-width^2 x^2 / 2), with P = H_n(width x) (HermiteGaussian1D)
// or (-1)^k L_k^alpha(width^2 x^2), alpha = mu + q - 1/2 (GeneralizedHermite1D).
struct LineWavefunction {
  Family family = Family::HermiteGaussian1D;
  int n = 0;  // total polynomial degree
  double width = 1.0;
  int prefactor_power = 0;  // q
  specfun::PolyParams poly;
  int parity = 1;  // e_x = (-1)^n
  double energy = 0.0;
  double frequency = 0.0;  // Omega at this level
  double norm_constant = 1.0;
  quadrature::InnerProductWeight weight;

  RealJet jet(double x) const;
  double operator()(double x) const { return jet(x).value; }
  operators::SmoothFunction1D as_function() const;
};

// prod_i factors[i](x_i) times norm_constant.
struct ProductWavefunction {
  Family family = Family::ProductND;
  std::vector<LineWavefunction> factors;
  double lambda = 0.0;  // weight (1 + lambda |x|^2) prod |x_i|^{2 mu_i}
  double energy = 0.0;
  double frequency = 0.0;
  double norm_constant = 1.0;

  double operator()(const std::vector<double>& x) const;
  // Factors with the overall constant folded into the first one.
  std::vector<operators::SmoothFunction1D> as_functions() const;
};

// N r^p L_k^a(width^2 r^2) exp(-width^2 r^2 / 2) on r > 0.
struct RadialWavefunction {
  int k = 0;
  double width = 1.0;
  double prefactor_power = 0.0;  // p
  double laguerre_alpha = 0.0;   // a
  double norm_constant = 1.0;
  quadrature::InnerProductWeight weight;  // Radial kind

  RealJet jet(double r) const;
  double operator()(double r) const { return jet(r).value; }
  // Everything except r^p; polynomial times Gaussian in r.
  double smooth_part(double r) const;
  operators::RadialFunction as_function() const;
};

// Angular factor. Dunkl sectors: F = (X_a + i c X_b)/sqrt 2 with unit-norm
// Jacobi components; epsilon = +1: X_a = X^{++}, X_b = X^{--}, c = branch;
// epsilon = -1: X_a = X^{-+}, X_b = X^{+-}, c = -branch. J F = sigma F.
// The epsilon = +1, m' = 0 singlet is the constant. For the flat-angle
// Darboux family the factor is exp(i m t)/sqrt(2 pi).
struct AngularWavefunction {
  Family family = Family::AngularJacobi;
  double mu_x = 0.0;
  double mu_y = 0.0;
  int twice_mprime = 0;
  int epsilon = 1;
  int branch = 1;
  double sigma = 0.0;
  bool plain_exponential = false;
  int m = 0;
  double norm_a = 1.0;
  double norm_b = 0.0;
  quadrature::InnerProductWeight weight;  // Angular kind

  ComplexJet jet(double theta) const;
  std::complex<double> operator()(double theta) const { return jet(theta).value; }
  operators::AngularFunction as_function() const;
  // Polynomial degree in -cos 2t of the largest component, for quadrature sizing.
  int degree() const;
};

struct PolarWavefunction {
  Family family = Family::RadialLaguerre2D;
  ModelKind model = ModelKind::DarbouxLandau;
  RadialWavefunction radial;
  AngularWavefunction angular;
  double energy = 0.0;
  double frequency = 0.0;

  std::complex<double> operator()(double r, double theta) const { return radial(r) * angular(theta); }
};

LineWavefunction build_darboux_1d(const ModelParams& params, int n);
// Throws SectorError unless e_x = (-1)^n.
LineWavefunction build_dunkl_1d(const ModelParams& params, int n, int e_x);
LineWavefunction build_dunkl_darboux_1d(const ModelParams& params, int n, int e_x);

// Product state of a Cartesian model (Darboux, Dunkl, DunklDarboux) with the
// common width sqrt(Omega(E)/hbar) of the total energy on every axis.
ProductWavefunction build_product_nd(ModelKind kind, const ModelParams& params, const CartesianNumbers& qn);
// Product of given per-axis states; throws DomainError unless factors.size() == params.dim.
ProductWavefunction build_product_nd(const ModelParams& params, const std::vector<LineWavefunction>& factors);

AngularWavefunction build_angular(double mu_x, double mu_y, double m_prime, int epsilon, int branch);

// Radial factor of a 2D magnetic level: LandauNumbers for DarbouxLandau,
// SectorNumbers for DunklLandau / DunklDarbouxLandau.
RadialWavefunction build_radial_2d(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn);
PolarWavefunction build_polar_2d(ModelKind kind, const ModelParams& params, const QuantumNumbers& qn);

// Weighted inner products by exact Gauss quadrature. Throws DomainError when
// the weight kind does not belong to the functions' domain.
double inner_product(const LineWavefunction& f, const LineWavefunction& g,
                     const quadrature::InnerProductWeight& weight);
double inner_product(const RadialWavefunction& f, const RadialWavefunction& g,
                     const quadrature::InnerProductWeight& weight);
std::complex<double> inner_product(const AngularWavefunction& f, const AngularWavefunction& g,
                                   const quadrature::InnerProductWeight& weight);
// Full N-dimensional product inner product under (1 + lambda|x|^2) prod |x_i|^{2mu_i}.
double inner_product(const ProductWavefunction& f, const ProductWavefunction& g, double lambda);
// 2D polar inner product under (1 + lambda r^2) r^{1+2mu_x+2mu_y} |cos|^{2mu_x}|sin|^{2mu_y} dr dt.
std::complex<double> inner_product(const PolarWavefunction& f, const PolarWavefunction& g, double lambda);

}  // namespace ddo::eigenfunctions
