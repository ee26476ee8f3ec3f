#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "csb/multivector.hpp"

namespace csb {

/// Default guard on symbolic polynomial degree; term counts grow fast above it.
inline constexpr int kDegreeCap = 12;

/// Exponent tuple (a_1,...,a_m) of a monomial x^a.
struct MultiIndex {
  std::vector<int> e;

  explicit MultiIndex(int m) : e(static_cast<std::size_t>(m), 0) {}
  MultiIndex(std::initializer_list<int> init) : e(init) {}

  int vars() const { return static_cast<int>(e.size()); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  /// a! = prod a_j!, exact.
  Rational factorial() const {
    BigInt f = 1;
    for (int a : e)
      for (int i = 2; i <= a; ++i) f *= i;
    return Rational(f);
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e == b.e; }
};

/// Graded lexicographic: lower total degree first, then componentwise lex.
/// This is the canonical term order for serialization and j-indexing.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
  }
};

/// All exponent tuples of total degree exactly k over m variables, graded-lex
/// order (here: plain lex, the degree is fixed).
inline std::vector<MultiIndex> monomials_of_degree(int m, int k) {
  std::vector<MultiIndex> out;
  MultiIndex cur(m);
  // lexicographically ascending enumeration by recursion on the first slot
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == m - 1) {
      cur.e[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= rest; ++a) {
      cur.e[pos] = a;
      self(self, pos + 1, rest - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

/// Sparse polynomial in m real (x) or complex (z) variables with Clifford
/// algebra coefficients. Scalar monomials commute with the coefficients, so
/// products only have to order the coefficient factors.
template <class S>
class Polynomial {
 public:
  using Scalar = S;
  using Coeff = Multivector<S>;
  using TermMap = std::map<MultiIndex, Coeff, GradedLexLess>;

  /// vars: number of scalar variables; alg: dimension m of the coefficient
  /// algebra Cl_m. They coincide except on R^{2m}-coordinate views of
  /// complex-variable polynomials.
  explicit Polynomial(int vars, int alg = 0) : m_(vars), alg_(alg == 0 ? vars : alg) {
    if (m_ < 1 || m_ > 2 * kMaxDim) throw std::invalid_argument("Polynomial: bad variable count");
    if (alg_ < 1 || alg_ > kMaxDim) throw std::invalid_argument("Polynomial: bad algebra dim");
  }

  static Polynomial zero(int vars, int alg = 0) { return Polynomial(vars, alg); }

  static Polynomial constant(Coeff c) {
    Polynomial r(c.dim());
    r.add_term(MultiIndex(c.dim()), std::move(c));
    return r;
  }

  static Polynomial monomial(MultiIndex a, Coeff c) {
    Polynomial r(a.vars(), c.dim());
    r.add_term(std::move(a), std::move(c));
    return r;
  }

  /// The vector variable sum_j x_j e_j.
  static Polynomial vector_variable(int m) {
    Polynomial r(m);
    for (int j = 0; j < m; ++j) {
      MultiIndex a(m);
      a.e[static_cast<std::size_t>(j)] = 1;
      r.add_term(std::move(a), Coeff::blade(m, 1u << j));
    }
    return r;
  }

  int vars() const { return m_; }
  int alg_dim() const { return alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {
    int d = -1;  // -1 for the zero polynomial
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
  }

  /// Degree s if every term has |a| = s, otherwise empty.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> s;
    for (const auto& [a, c] : terms_) {
      if (!s)
        s = a.degree();
      else if (*s != a.degree())
        return std::nullopt;
    }
    return s;
  }

  Coeff coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Coeff::zero(alg_) : it->second;
  }

  void add_term(MultiIndex a, Coeff c) { accumulate(a, std::move(c)); }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial r = p;
    for (const auto& [a, c] : q.terms_) r.accumulate(a, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial r = p;
    for (const auto& [a, c] : q.terms_) r.accumulate(a, -c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& p) {
    Polynomial r(p.m_, p.alg_);
    for (const auto& [a, c] : p.terms_) r.terms_.emplace(a, -c);
    return r;
  }

  /// Ring product; coefficients multiply left-to-right as written.
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial r(p.m_, p.alg_);
    for (const auto& [a, c] : p.terms_)
      for (const auto& [b, d] : q.terms_) {
        MultiIndex ab(p.m_);
        for (int j = 0; j < p.m_; ++j) ab.e[j] = a.e[j] + b.e[j];
        r.accumulate(ab, c * d);
      }
    return r;
  }

  friend Polynomial operator*(const S& s, const Polynomial& p) {
    Polynomial r(p.m_, p.alg_);
    for (const auto& [a, c] : p.terms_) r.accumulate(a, s * c);
    return r;
  }

  /// Constant Clifford factor from the left / right.
  friend Polynomial operator*(const Coeff& k, const Polynomial& p) {
    Polynomial r(p.m_, p.alg_);
    for (const auto& [a, c] : p.terms_) r.accumulate(a, k * c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Coeff& k) {
    Polynomial r(p.m_, p.alg_);
    for (const auto& [a, c] : p.terms_) r.accumulate(a, c * k);
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.m_ == q.m_ && p.alg_ == q.alg_ && p.terms_ == q.terms_;
  }

  Polynomial derivative(int axis) const {
    Polynomial r(m_, alg_);
    for (const auto& [a, c] : terms_) {
      const int aj = a.e[axis];
      if (aj == 0) continue;
      MultiIndex b = a;
      b.e[axis] = aj - 1;
      S f = ScalarTraits<S>::one();
      // small-integer multiple inside the ring
      S factor = ScalarTraits<S>::zero();
      for (int i = 0; i < aj; ++i) factor += f;
      r.accumulate(b, factor * c);
    }
    return r;
  }

  /// Coefficient-wise main involution / Hermitian involution.
  Polynomial bar() const {
    Polynomial r(m_, alg_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, c.bar());
    return r;
  }
  Polynomial dagger() const {
    Polynomial r(m_, alg_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, c.dagger());
    return r;
  }

  template <class R>
  Polynomial<R> cast() const {
    Polynomial<R> r(m_, alg_);
    for (const auto& [a, c] : terms_) r.add_term(a, c.template cast<R>());
    return r;
  }

  /// Direct evaluation at a point; exact in exact rings. R must be able to
  /// absorb the coefficient ring (e.g. complex points on a real polynomial).
  template <class R>
  Multivector<R> evaluate(std::span<const R> point) const {
    if (static_cast<int>(point.size()) != m_)
      throw std::invalid_argument("evaluate: point length mismatch");
    Multivector<R> acc(alg_);
    for (const auto& [a, c] : terms_) {
      R mono = ScalarTraits<R>::one();
      for (int j = 0; j < m_; ++j)
        for (int i = 0; i < a.e[j]; ++i) mono *= point[j];
      acc += c.template cast<R>() * mono;
    }
    return acc;
  }

  /// Canonical text form: graded-lex terms, coefficients in blade notation.
  std::string to_string(char var = 'x') const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")";
      os << " * ";
      if (a.degree() == 0) {
        os << "1";
      } else {
        bool fm = true;
        for (int j = 0; j < m_; ++j) {
          if (a.e[j] == 0) continue;
          if (!fm) os << "*";
          fm = false;
          os << var << (j + 1);
          if (a.e[j] > 1) os << "^" << a.e[j];
        }
      }
    }
    return os.str();
  }

 private:
  void check_same(const Polynomial& o) const {
    if (m_ != o.m_ || alg_ != o.alg_)
      throw std::invalid_argument("Polynomial: variable/algebra mismatch");
  }
  void accumulate(const MultiIndex& a, Coeff c) {
    if (a.vars() != m_ || c.dim() != alg_)
      throw std::invalid_argument("Polynomial: term arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_.emplace(a, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int m_;
  int alg_;
  TermMap terms_;
};

/// Left Dirac action D p = sum_j e_j d_j p (e_j multiplies from the left).
template <class S>
Polynomial<S> dirac(const Polynomial<S>& p) {
  const int m = p.vars();
  if (m != p.alg_dim()) throw std::invalid_argument("dirac: needs one variable per generator");
  Polynomial<S> r(m);
  for (int j = 0; j < m; ++j) {
    const auto ej = Multivector<S>::blade(m, 1u << j);
    r = r + ej * p.derivative(j);
  }
  return r;
}

template <class S>
Polynomial<S> laplacian(const Polynomial<S>& p) {
  const int m = p.vars();
  Polynomial<S> r(m, p.alg_dim());
  for (int j = 0; j < m; ++j) r = r + p.derivative(j).derivative(j);
  return r;
}

/// q with D^l (e^{-|x|^2/2} p) = e^{-|x|^2/2} q. The Gaussian envelope is
/// never expanded; one Dirac step maps f to -x f + D f.
template <class S>
Polynomial<S> gaussian_dirac_power(const Polynomial<S>& p, int l, int degree_cap = kDegreeCap) {
  if (l < 0) throw std::invalid_argument("gaussian_dirac_power: l must be >= 0");
  if (p.degree() + l > degree_cap)
    throw std::invalid_argument("gaussian_dirac_power: degree cap exceeded");
  const auto x = Polynomial<S>::vector_variable(p.vars());
  Polynomial<S> q = p;
  for (int i = 0; i < l; ++i) q = dirac(q) - x * q;
  return q;
}

/// Euler identity sum_j x_j d_j p = s p for homogeneous p of degree s,
/// verified symbolically.
template <class S>
bool euler_check(const Polynomial<S>& p) {
  const auto s = p.homogeneous_degree();
  if (!s) return false;
  const int m = p.vars();
  Polynomial<S> lhs(m, p.alg_dim());
  for (int j = 0; j < m; ++j) {
    MultiIndex xj(m);
    xj.e[j] = 1;
    lhs = lhs + Polynomial<S>::monomial(
                    xj, Multivector<S>::scalar(p.alg_dim(), ScalarTraits<S>::one())) *
                    p.derivative(j);
  }
  S deg = ScalarTraits<S>::zero();
  for (int i = 0; i < *s; ++i) deg += ScalarTraits<S>::one();
  return lhs == deg * p;
}

using PolyD = Polynomial<double>;
using PolyC = Polynomial<std::complex<double>>;
using PolyQ = Polynomial<Rational>;

}  // namespace csb
