#pragma once

// Classical orthogonal polynomials evaluated by forward three-term recurrence,
// together with log-space gamma ratios for normalization constants.

#include "ddo/jet.hpp"

namespace ddo::specfun {

enum class PolyKind { Hermite, GeneralizedHermite, GeneralizedLaguerre, Jacobi };

struct PolyParams {
  PolyKind kind = PolyKind::Hermite;
  int degree = 0;
  double alpha = 0.0;       // Laguerre / Jacobi first parameter
  double beta_param = 0.0;  // Jacobi second parameter
  double mu = 0.0;          // generalized Hermite
  int parity_q = 0;         // generalized Hermite, (1 - e_x)/2
  // Odd-sector Jacobi index m' is stored as degree = m' - 1/2.
  bool half_integer_index = false;

  // Throws DomainError when a parameter invariant is violated.
  void validate() const;
  double index() const { return half_integer_index ? degree + 0.5 : degree; }
};

double eval_hermite(int n, double u);
double eval_generalized_laguerre(int n, double alpha, double u);
double eval_jacobi(int n, double alpha, double beta_param, double x);

// (-1)^n sqrt(beta^2 n! / Gamma(n+mu+q+1/2)) x^q L_n^{(mu+q-1/2)}(beta^2 x^2).
// Unit norm under exp(-beta^2 x^2)|x|^{2mu} dx only at beta = 1; in general the
// norm is beta^{1-2q-2mu}.
double eval_generalized_hermite(int n, double mu, int parity_q, double beta_scale, double x);

// log Gamma(a) - log Gamma(b) for a, b > 0.
double log_gamma_ratio(double a, double b);

// Evaluates p.kind at x (generalized Hermite uses beta_scale = 1).
double evaluate(const PolyParams& p, double x);

/// Polynomial value with first and second derivative in its own argument.
RealJet hermite_jet(int n, double u);
RealJet laguerre_jet(int n, double alpha, double u);
RealJet jacobi_jet(int n, double alpha, double beta_param, double x);

}  // namespace ddo::specfun
