#pragma once

// Gauss-type rules for the weighted inner products of the oscillator family.
//
// A rule built with gaussian_scale s integrates h(x) * weight(x) exactly when
// h is exp(-s x^2) times a polynomial of degree < 2 * size in x^2 (line rules
// split h into even and odd parts, so odd parts integrate to zero exactly).
// Products of two eigenfunctions with widths b1, b2 carry exp(-(b1^2+b2^2) x^2/2),
// so s = (b1^2 + b2^2)/2 makes every inner product below exact.

#include <functional>
#include <vector>

namespace ddo::quadrature {

enum class WeightKind {
  DarbouxLine,       // (1 + lambda x^2) dx
  DunklLine,         // |x|^{2mu} dx
  DunklDarbouxLine,  // (1 + lambda x^2) |x|^{2mu} dx
  Radial,            // (1 + lambda r^2) r^{radial_exponent} dr on (0, inf)
  Angular,           // |cos t|^{2mu_x} |sin t|^{2mu_y} dt on [0, 2pi)
};

struct InnerProductWeight {
  WeightKind kind = WeightKind::DarbouxLine;
  double lambda = 0.0;
  double mu = 0.0;
  double radial_exponent = 1.0;
  double mu_x = 0.0;
  double mu_y = 0.0;

  double operator()(double x) const;
  void validate() const;
};

InnerProductWeight darboux_line(double lambda);
InnerProductWeight dunkl_line(double mu);
InnerProductWeight dunkl_darboux_line(double lambda, double mu);
InnerProductWeight radial(double exponent, double lambda = 0.0);
InnerProductWeight angular(double mu_x, double mu_y);

enum class Domain { Line, HalfLine, Circle };

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // include weight(x) at each node
  Domain domain = Domain::Line;
  InnerProductWeight weight;
  double gaussian_scale = 1.0;
  double declared_tolerance = 1e-12;

  double integrate(const std::function<double(double)>& h) const;
  std::size_t size() const { return nodes.size(); }
};

// size >= 8 Gauss nodes per half-line (or per Jacobi interval for Angular).
// Throws DomainError for non-integrable weights or size < 8.
QuadratureRule make_quadrature(const InnerProductWeight& weight, int size, double gaussian_scale = 1.0);

// Raw rules, exposed for testing.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;          // Christoffel numbers lambda_i
  std::vector<double> function_weights;  // lambda_i / rho(x_i)
};
// rho(u) = u^alpha e^{-u} on (0, inf).
GaussRule gauss_laguerre(int n, double alpha);
// rho(x) = (1-x)^a (1+x)^b on (-1, 1).
GaussRule gauss_jacobi(int n, double a, double b);

}  // namespace ddo::quadrature
