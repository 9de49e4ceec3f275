#pragma once

#include "graphzeta/polynomial.hpp"
#include "graphzeta/rational.hpp"

#include <stdexcept>
#include <type_traits>
#include <utility>

namespace graphzeta {

/// Rational function num/den over an exact field K, stored in normal form:
///   * den is monic and nonzero,
///   * gcd(num, den) = 1,
///   * zero is 0/1.
/// With normal form in place, structural equality is mathematical equality.
template <FieldScalar K>
class RatFunc {
public:
  RatFunc() : num_(), den_(K(1)) {}
  RatFunc(long long v) : num_(K(v)), den_(K(1)) {}
  RatFunc(K constant) : num_(std::move(constant)), den_(K(1)) {}
  RatFunc(UniPoly<K> numerator) : num_(std::move(numerator)), den_(K(1)) {}
  RatFunc(UniPoly<K> numerator, UniPoly<K> denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
  }

  /// The generator of K(x) as a rational function (num = x, den = 1).
  static RatFunc variable() { return RatFunc(UniPoly<K>::variable()); }

  const UniPoly<K>& num() const { return num_; }
  const UniPoly<K>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the denominator reduced to 1.
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Evaluation at a point of K; throws if the denominator vanishes there.
  K eval(const K& x) const {
    K d = den_.eval(x);
    if (d == K(0)) throw std::domain_error("RatFunc: pole at evaluation point");
    return num_.eval(x) / d;
  }

private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = UniPoly<K>(K(1));
      return;
    }
    UniPoly<K> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    if (!(den_.leading() == K(1))) {
      K inv = K(1) / den_.leading();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  UniPoly<K> num_;
  UniPoly<K> den_;
};

/// Detects rational-function fields, e.g. to pick determinant strategies that
/// avoid nesting fractions two levels deep.
template <class>
struct is_ratfunc : std::false_type {};
template <FieldScalar K>
struct is_ratfunc<RatFunc<K>> : std::true_type {};
template <class K>
inline constexpr bool is_ratfunc_v = is_ratfunc<K>::value;

/// The field Q(q) of rational functions in one indeterminate over Q; the
/// coefficient field for symbolic Bartholdi-type runs.
using QRat = RatFunc<Rational>;

/// Polynomials in q over Q, the carrier for parsed symbolic weights.
using QPoly = UniPoly<Rational>;

/// Coefficient-wise evaluation of a t-polynomial over Q(q) at a rational q;
/// throws if any coefficient has a pole there.
inline UniPoly<Rational> evaluate_q(const UniPoly<QRat>& p, const Rational& q) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i)
    c.push_back(p.coeff(static_cast<std::size_t>(i)).eval(q));
  return UniPoly<Rational>(std::move(c));
}

} // namespace graphzeta
