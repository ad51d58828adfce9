#include <cmath>
#include <numbers>

#include "doctest.h"

#include "ddo/errors.hpp"
#include "ddo/specfun.hpp"

using namespace ddo;
using namespace ddo::specfun;
using doctest::Approx;

// Reference values below were produced with mpmath at 40 digits from the
// explicit finite sums (Hermite series, binomial Laguerre sum, Jacobi
// hypergeometric sum), not from the recurrences under test.

TEST_CASE("hermite: low degrees and series values") {
  CHECK(eval_hermite(0, 0.7) == 1.0);
  CHECK(eval_hermite(1, 0.7) == Approx(1.4).epsilon(1e-15));
  CHECK(eval_hermite(4, 1.0) == Approx(-20.0).epsilon(1e-14));
  CHECK(eval_hermite(10, 0.3) == Approx(-6173.8524877824).epsilon(1e-13));
  CHECK(eval_hermite(17, -1.25) == Approx(-5740253979.1650772095).epsilon(1e-13));
  CHECK(eval_hermite(25, 2.5) == Approx(-208763293808096875.0).epsilon(1e-13));
}

TEST_CASE("laguerre: closed low degrees and binomial-sum values") {
  CHECK(eval_generalized_laguerre(0, 0.3, 5.0) == 1.0);
  for (double a : {-0.46, 0.0, 0.54, 3.2})
    for (double u : {0.0, 0.4, 7.0}) CHECK(eval_generalized_laguerre(1, a, u) == Approx(1 + a - u).epsilon(1e-15));
  CHECK(eval_generalized_laguerre(5, 0.04, 2.0) == Approx(0.72352544085333333333).epsilon(1e-13));
  CHECK(eval_generalized_laguerre(12, 2.5, 7.3) == Approx(-12.088868176300093592).epsilon(1e-12));
  CHECK(eval_generalized_laguerre(20, -0.46, 0.9) == Approx(-0.11976360556771894332).epsilon(1e-12));
  CHECK(eval_generalized_laguerre(8, 0.54, 15.0) == Approx(227.73494534396893262).epsilon(1e-12));
}

TEST_CASE("jacobi: Legendre case and hypergeometric-sum values") {
  CHECK(eval_jacobi(0, 0.3, -0.2, 0.1) == 1.0);
  CHECK(eval_jacobi(1, 0.0, 0.0, 0.5) == Approx(0.5).epsilon(1e-15));
  CHECK(eval_jacobi(3, -0.48, 0.52, -std::cos(1.6)) == Approx(0.27681944114904762018).epsilon(1e-12));
  CHECK(eval_jacobi(7, 1.5, -0.3, 0.41) == Approx(0.71976849975520372261).epsilon(1e-12));
  CHECK(eval_jacobi(10, -0.48, -0.48, -0.77) == Approx(0.14694940433850773905).epsilon(1e-12));
  CHECK(eval_jacobi(4, 0.54, 0.54, 0.2) == Approx(0.271108177504).epsilon(1e-12));
}

TEST_CASE("generalized hermite: normalization constants") {
  CHECK(eval_generalized_hermite(0, 0.0, 0, 1.0, 0.9) ==
        Approx(std::pow(std::numbers::pi, -0.25) * 1.0).epsilon(1e-14));
  CHECK(eval_generalized_hermite(0, 0.0, 0, 1.0, 0.9) == Approx(0.75112554446494248286).epsilon(1e-14));
  CHECK(eval_generalized_hermite(3, 0.3, 1, 1.0, 0.0) == 0.0);
  CHECK(eval_generalized_hermite(2, 0.02, 0, 1.0, 0.5) == Approx(0.056572792674892331722).epsilon(1e-12));
  CHECK(eval_generalized_hermite(3, 0.3, 1, 1.0, -0.7) == Approx(0.41482072144724314856).epsilon(1e-12));
  CHECK(eval_generalized_hermite(4, 0.02, 1, 1.3, 1.1) == Approx(-0.19612913409836529797).epsilon(1e-12));
}

TEST_CASE("log gamma ratio") {
  CHECK(log_gamma_ratio(5.0, 3.0) == Approx(std::log(12.0)).epsilon(1e-14));
  CHECK(log_gamma_ratio(2.7, 2.7) == 0.0);
  CHECK(log_gamma_ratio(1000.5, 998.5) == Approx(std::log(999.5 * 998.5)).epsilon(1e-13));
}

TEST_CASE("jets carry exact derivatives") {
  // H_n' = 2n H_{n-1}, L_n^a' = -L_{n-1}^{a+1}, P_n' = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}
  for (int n = 1; n < 12; ++n) {
    const auto h = hermite_jet(n, 0.37);
    CHECK(h.value == Approx(eval_hermite(n, 0.37)).epsilon(1e-13));
    CHECK(h.d1 == Approx(2 * n * eval_hermite(n - 1, 0.37)).epsilon(1e-12));
    const auto l = laguerre_jet(n, 0.54, 1.7);
    CHECK(l.d1 == Approx(-eval_generalized_laguerre(n - 1, 1.54, 1.7)).epsilon(1e-12));
    if (n >= 2) CHECK(l.d2 == Approx(eval_generalized_laguerre(n - 2, 2.54, 1.7)).epsilon(1e-12));
    const auto p = jacobi_jet(n, -0.48, 0.3, 0.21);
    CHECK(p.d1 == Approx(0.5 * (n - 0.48 + 0.3 + 1) * eval_jacobi(n - 1, 0.52, 1.3, 0.21)).epsilon(1e-12));
  }
}

TEST_CASE("orthogonality of Laguerre polynomials by brute-force Simpson") {
  // Independent of the Gauss rules: composite Simpson in t = sqrt(u) on [0, 9].
  const double a = 0.54;
  auto inner = [&](int m, int n) {
    const int steps = 40000;
    const double h = 9.0 / steps;
    double s = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double t = i * h, u = t * t;
      const double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
      s += w * 2.0 * std::pow(t, 2 * a + 1) * std::exp(-u) * eval_generalized_laguerre(m, a, u) *
           eval_generalized_laguerre(n, a, u);
    }
    return s * h / 3.0;
  };
  CHECK(std::abs(inner(2, 5)) < 1e-8);
  CHECK(inner(3, 3) == Approx(std::tgamma(3 + a + 1) / 6.0).epsilon(1e-8));
}

TEST_CASE("parameter validation") {
  PolyParams p;
  p.kind = PolyKind::GeneralizedLaguerre;
  p.alpha = -1.2;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.kind = PolyKind::GeneralizedHermite;
  p.alpha = 0.0;
  p.mu = -0.6;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.mu = 0.1;
  p.parity_q = 2;
  CHECK_THROWS_AS(p.validate(), DomainError);
  PolyParams j;
  j.kind = PolyKind::Jacobi;
  j.degree = 2;
  j.half_integer_index = true;
  CHECK(j.index() == 2.5);
}
