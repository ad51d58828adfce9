#pragma once

#include <stdexcept>
#include <string>

namespace ddo {

// Parameter outside the admissible domain (λ<0, μ≤−1/2, ω²≤2λE, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A Dunkl term (μ/x)(1−R) evaluated at x=0 without parity information.
class SingularOriginError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// tanθ/cotθ pole hit by an angular operator with a non-vanishing difference.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Reflection sector or quantum-number combination that does not exist.
class SectorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Oracle failure (mass matrix not positive definite, guard band violated, ...).
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddo
