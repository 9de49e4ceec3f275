#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace graphzeta {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Normal form invariants (maintained by every operation):
///   * denominator > 0,
///   * gcd(|numerator|, denominator) = 1,
///   * zero is represented as 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  /// Parses "p" or "p/q" (optional leading '-', decimal digits only).
  /// Returns nullopt on any other shape; in particular floating-point
  /// notation is rejected.
  static std::optional<Rational> parse(std::string_view s) {
    auto trim = [](std::string_view v) {
      while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
      while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
      return v;
    };
    s = trim(s);
    auto parse_int = [&](std::string_view v) -> std::optional<BigInt> {
      v = trim(v);
      bool neg = false;
      if (!v.empty() && (v.front() == '-' || v.front() == '+')) {
        neg = v.front() == '-';
        v.remove_prefix(1);
      }
      if (v.empty()) return std::nullopt;
      BigInt value = 0;
      for (char c : v) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
      }
      return neg ? BigInt(-value) : value;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      auto n = parse_int(s);
      if (!n) return std::nullopt;
      return Rational(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || d->is_zero()) return std::nullopt;
    return Rational(*n, *d);
  }

private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

} // namespace graphzeta
