#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "csb/scalars.hpp"

namespace csb {

/// Basis blade e_A, encoded as a bit set over the generators {1..m}.
/// Bit j-1 set means the factor e_j is present; mask 0 is the unit e_0.
using BladeIndex = std::uint32_t;

inline constexpr int kMaxDim = 8;  // 2^8 = 256 coefficients

inline int blade_grade(BladeIndex a) { return std::popcount(a); }

/// Sign of e_A e_B from transposition count plus one -1 per squared factor
/// (generators obey e_i e_j = -e_j e_i and e_j^2 = -1).
inline int blade_product_sign(BladeIndex a, BladeIndex b) {
  int swaps = 0;
  BladeIndex t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  swaps += std::popcount(a & b);  // e_j^2 = -1
  return (swaps & 1) ? -1 : +1;
}

/// e_A e_B = sign * e_C with C the symmetric difference of the factor sets.
inline std::pair<int, BladeIndex> blade_product(BladeIndex a, BladeIndex b, int m) {
  const BladeIndex valid = static_cast<BladeIndex>((1u << m) - 1u);
  if ((a & ~valid) != 0 || (b & ~valid) != 0)
    throw std::out_of_range("blade_product: generator index out of range for m");
  return {blade_product_sign(a, b), a ^ b};
}

/// Sign of the main involution on a grade-g blade: (-1)^{g(g+1)/2}.
inline int bar_sign(int grade) {
  return ((grade * (grade + 1) / 2) & 1) ? -1 : +1;
}

/// Parse "e0", "e1", "e12", "e134" ... into a blade mask.
inline BladeIndex blade_from_name(const std::string& name, int m) {
  if (name.size() < 2 || name[0] != 'e')
    throw std::invalid_argument("blade name must look like e12");
  BladeIndex mask = 0;
  if (name == "e0") return 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    int j = name[i] - '0';
    if (j < 1 || j > m) throw std::out_of_range("blade factor out of range");
    BladeIndex bit = 1u << (j - 1);
    if (mask & bit) throw std::invalid_argument("repeated blade factor");
    mask |= bit;
  }
  return mask;
}

inline std::string blade_name(BladeIndex a) {
  if (a == 0) return "e0";
  std::string s = "e";
  for (int j = 0; j < kMaxDim; ++j)
    if (a & (1u << j)) s += static_cast<char>('1' + j);
  return s;
}

/// Element of the Clifford algebra over R^m or C^m with e_j^2 = -1.
/// Immutable value semantics; all 2^m blade coefficients stored densely.
template <class S>
class Multivector {
 public:
  using Scalar = S;
  using Real = typename ScalarTraits<S>::Real;

  explicit Multivector(int m) : m_(m), c_(std::size_t{1} << check_dim(m)) {}

  static Multivector zero(int m) { return Multivector(m); }

  static Multivector scalar(int m, S value) {
    Multivector r(m);
    r.c_[0] = std::move(value);
    return r;
  }

  static Multivector blade(int m, BladeIndex a, S value = ScalarTraits<S>::one()) {
    Multivector r(m);
    if (a >= r.c_.size()) throw std::out_of_range("blade index out of range for m");
    r.c_[a] = std::move(value);
    return r;
  }

  /// The Clifford vector sum_j coords[j] e_j.
  static Multivector vector(std::span<const S> coords) {
    Multivector r(static_cast<int>(coords.size()));
    for (std::size_t j = 0; j < coords.size(); ++j) r.c_[1u << j] = coords[j];
    return r;
  }

  int dim() const { return m_; }
  std::size_t size() const { return c_.size(); }

  const S& operator[](BladeIndex a) const { return c_.at(a); }
  void set(BladeIndex a, S v) { c_.at(a) = std::move(v); }

  S scalar_part() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!ScalarTraits<S>::is_zero(x)) return false;
    return true;
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector r(a.m_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector r(a.m_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend Multivector operator-(const Multivector& a) {
    Multivector r(a.m_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = -a.c_[i];
    return r;
  }

  Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
  Multivector& operator-=(const Multivector& o) { return *this = *this - o; }

  /// Geometric product, bilinear extension of blade_product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector r(a.m_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ScalarTraits<S>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (ScalarTraits<S>::is_zero(b.c_[j])) continue;
        const int sign = blade_product_sign(static_cast<BladeIndex>(i),
                                            static_cast<BladeIndex>(j));
        const S term = a.c_[i] * b.c_[j];
        if (sign > 0)
          r.c_[i ^ j] += term;
        else
          r.c_[i ^ j] -= term;
      }
    }
    return r;
  }

  friend Multivector operator*(const S& s, const Multivector& a) {
    Multivector r(a.m_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = s * a.c_[i];
    return r;
  }
  friend Multivector operator*(const Multivector& a, const S& s) { return s * a; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

  /// Main involution: e_A -> (-1)^{|A|(|A|+1)/2} e_A, linear over the scalars.
  Multivector bar() const {
    Multivector r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r.c_[i] = bar_sign(blade_grade(static_cast<BladeIndex>(i))) > 0 ? c_[i] : -c_[i];
    }
    return r;
  }

  /// Hermitian involution: scalar conjugation composed with bar.
  /// Coincides with bar on real coefficient rings.
  Multivector dagger() const {
    Multivector r = bar();
    for (auto& x : r.c_) x = ScalarTraits<S>::conj(x);
    return r;
  }

  Multivector grade_part(int g) const {
    Multivector r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (blade_grade(static_cast<BladeIndex>(i)) == g) r.c_[i] = c_[i];
    return r;
  }

  /// (a,b)_0 = [a^dagger b]_0 = sum_A conj(a_A) b_A.
  friend S inner0(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    S acc = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      acc += ScalarTraits<S>::conj(a.c_[i]) * b.c_[i];
    return acc;
  }

  /// |a|_0^2 = sum_A |a_A|^2, exact in the ring's real part.
  friend Real norm0_sq(const Multivector& a) {
    Real acc = ScalarTraits<Real>::zero();
    for (const auto& x : a.c_) acc += ScalarTraits<S>::abs_sq(x);
    return acc;
  }

  friend double norm0(const Multivector& a) {
    return std::sqrt(to_double(norm0_sq(a)));
  }

  template <class R>
  Multivector<R> cast() const {
    Multivector<R> r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      r.set(static_cast<BladeIndex>(i), scalar_cast<R>(c_[i]));
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (ScalarTraits<S>::is_zero(c_[i])) continue;
      if (!first) os << " + ";
      print_scalar(os, c_[i]);
      os << "*" << blade_name(static_cast<BladeIndex>(i));
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static int check_dim(int m) {
    if (m < 1 || m > kMaxDim) throw std::invalid_argument("Multivector: need 1 <= m <= 8");
    return m;
  }
  void check_same(const Multivector& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Multivector: dimension mismatch");
  }
  // round-trip precision; reports diff these strings
  static void print_scalar(std::ostringstream& os, double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    os << buf;
  }
  static void print_scalar(std::ostringstream& os, const std::complex<double>& x) {
    os << "(";
    print_scalar(os, x.real());
    os << (x.imag() < 0 ? "-" : "+");
    print_scalar(os, std::abs(x.imag()));
    os << "i)";
  }
  static void print_scalar(std::ostringstream& os, const Rational& x) { os << x.str(); }
  static void print_scalar(std::ostringstream& os, const CRational& x) {
    const Rational abs_im = x.im < 0 ? Rational(-x.im) : x.im;
    os << "(" << x.re.str() << (x.im < 0 ? "-" : "+") << abs_im.str() << "i)";
  }

  int m_;
  std::vector<S> c_;
};

using MvD = Multivector<double>;
using MvC = Multivector<std::complex<double>>;
using MvQ = Multivector<Rational>;
using MvCQ = Multivector<CRational>;

}  // namespace csb
