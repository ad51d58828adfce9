#pragma once

// Value plus first and second derivative of a function at a point. Arithmetic
// follows the Leibniz rule so eigenfunctions can be assembled from factors
// while carrying exact derivatives along.

#include <complex>

namespace ddo {

template <typename T>
struct Jet {
  T value{};
  T d1{};
  T d2{};

  Jet& operator+=(const Jet& o) {
    value += o.value;
    d1 += o.d1;
    d2 += o.d2;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value -= o.value;
    d1 -= o.d1;
    d2 -= o.d2;
    return *this;
  }
};

template <typename T>
Jet<T> operator+(Jet<T> a, const Jet<T>& b) { return a += b; }

template <typename T>
Jet<T> operator-(Jet<T> a, const Jet<T>& b) { return a -= b; }

template <typename T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b) {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + T(2) * a.d1 * b.d1 + a.value * b.d2};
}

template <typename T, typename S>
Jet<T> scale(const Jet<T>& a, S s) {
  return {a.value * s, a.d1 * s, a.d2 * s};
}

template <typename T>
Jet<std::complex<T>> to_complex(const Jet<T>& a) {
  return {a.value, a.d1, a.d2};
}

using RealJet = Jet<double>;
using ComplexJet = Jet<std::complex<double>>;

}  // namespace ddo
