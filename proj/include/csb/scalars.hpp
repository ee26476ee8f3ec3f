#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <type_traits>

namespace csb {

// Exact scalar mode. Arbitrary-precision rationals keep the symbolic-stage
// algebra (null spaces, Gram-Schmidt, Dirac iterations) free of rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Minimal complex pair over an exact ring (std::complex is only specified
/// for the builtin floating types).
template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT: implicit by design
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

using CRational = Complex<Rational>;

// ---------------------------------------------------------------------------
// Scalar traits: the one place that knows how to conjugate, measure and
// convert each supported coefficient ring.
// ---------------------------------------------------------------------------

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  using Real = double;
  static constexpr bool is_complex = false;
  static constexpr bool is_exact = false;
  static double conj(double x) { return x; }
  static double abs_sq(double x) { return x * x; }
  static bool is_zero(double x) { return x == 0.0; }
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using Real = double;
  static constexpr bool is_complex = true;
  static constexpr bool is_exact = false;
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
  static double abs_sq(const std::complex<double>& x) { return std::norm(x); }
  static bool is_zero(const std::complex<double>& x) {
    return x.real() == 0.0 && x.imag() == 0.0;
  }
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
};

template <>
struct ScalarTraits<Rational> {
  using Real = Rational;
  static constexpr bool is_complex = false;
  static constexpr bool is_exact = true;
  static Rational conj(const Rational& x) { return x; }
  static Rational abs_sq(const Rational& x) { return x * x; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
};

template <>
struct ScalarTraits<CRational> {
  using Real = Rational;
  static constexpr bool is_complex = true;
  static constexpr bool is_exact = true;
  static CRational conj(const CRational& x) { return {x.re, -x.im}; }
  static Rational abs_sq(const CRational& x) { return x.re * x.re + x.im * x.im; }
  static bool is_zero(const CRational& x) { return x.re == 0 && x.im == 0; }
  static CRational zero() { return {}; }
  static CRational one() { return {Rational(1), Rational(0)}; }
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline std::complex<double> to_complex_double(double x) { return {x, 0.0}; }
inline std::complex<double> to_complex_double(const std::complex<double>& x) { return x; }
inline std::complex<double> to_complex_double(const Rational& x) {
  return {to_double(x), 0.0};
}
inline std::complex<double> to_complex_double(const CRational& x) {
  return {to_double(x.re), to_double(x.im)};
}

/// scalar_cast<R>(s): explicit conversion between supported rings.
template <class R, class S>
R scalar_cast(const S& s) {
  if constexpr (std::is_same_v<R, S>) {
    return s;
  } else if constexpr (std::is_same_v<R, double>) {
    return to_double(s);
  } else if constexpr (std::is_same_v<R, std::complex<double>>) {
    return to_complex_double(s);
  } else if constexpr (std::is_same_v<R, CRational> && std::is_same_v<S, Rational>) {
    return CRational(s);
  } else {
    static_assert(std::is_same_v<R, S>, "unsupported scalar conversion");
  }
}

inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace csb
