#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphzeta {

/// Scalar type usable as the coefficient field of the algebra layer.
/// Models an exact field of characteristic zero: all four operations,
/// structural equality, and construction of small integers.
template <class K>
concept FieldScalar = std::regular<K> && requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  K(0);
  K(1);
};

/// Dense univariate polynomial over an exact field K.
///
/// Coefficients are stored ascending by power with no trailing zeros, so the
/// zero polynomial is the empty vector and degree() is size()-1 (-1 for zero).
/// The indeterminate is anonymous; rendering decides whether it prints as
/// "t" or "q".
template <FieldScalar K>
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(K constant) {
    if (!(constant == K(0))) c_.push_back(std::move(constant));
  }
  explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { strip(); }

  /// The monomial t.
  static UniPoly variable() { return UniPoly(std::vector<K>{K(0), K(1)}); }
  /// coeff * t^power.
  static UniPoly monomial(K coeff, std::size_t power) {
    if (coeff == K(0)) return UniPoly();
    std::vector<K> c(power + 1, K(0));
    c.back() = std::move(coeff);
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const {
    if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
    return c_.back();
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (K& x : r.c_) x = -x;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const K& s, const UniPoly& p) {
    UniPoly r;
    r.c_.reserve(p.c_.size());
    for (const K& x : p.c_) r.c_.push_back(s * x);
    r.strip();
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Multiplication by t^k.
  UniPoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<K> c(c_.size() + k, K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UniPoly(std::move(c));
  }

  UniPoly pow(unsigned e) const {
    UniPoly r{K(1)};
    UniPoly base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  K eval(const K& x) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Evaluation into a larger field (L must be constructible from K).
  template <class L>
  L eval_in(const L& x) const {
    L acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + L(c_[i]);
    return acc;
  }

  /// Euclidean division: returns {quotient, remainder} with
  /// deg(remainder) < deg(divisor).  Throws on a zero divisor.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<K> rem = a.c_;
    std::vector<K> quot(a.c_.size() - b.c_.size() + 1, K(0));
    const K& lead = b.c_.back();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
      K& top = rem[shift + b.c_.size() - 1];
      if (top == K(0)) continue;
      K f = top / lead;
      quot[shift] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] = rem[shift + j] - f * b.c_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

private:
  void strip() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }

  std::vector<K> c_;
};

/// Divides leading coefficient out; the zero polynomial stays zero.
template <FieldScalar K>
UniPoly<K> make_monic(const UniPoly<K>& p) {
  if (p.is_zero()) return p;
  return (K(1) / p.leading()) * p;
}

/// Monic greatest common divisor via the Euclidean algorithm.
/// poly_gcd(0, 0) = 0; otherwise the result is monic.
template <FieldScalar K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Exact division for fields (used by the fraction-free elimination below).
template <FieldScalar K>
K exact_div(const K& a, const K& b) {
  return a / b;
}

/// Exact polynomial division; throws if the division leaves a remainder.
template <FieldScalar K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return q;
}

/// lcm normalized monic; zero if either argument is zero.
template <FieldScalar K>
UniPoly<K> poly_lcm(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly<K>();
  return make_monic(exact_div(a * b, poly_gcd(a, b)));
}

} // namespace graphzeta
