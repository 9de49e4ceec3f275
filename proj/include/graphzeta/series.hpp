#pragma once

#include "graphzeta/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphzeta {

/// Power series over K truncated at a fixed order T: coefficients of
/// t^0 .. t^T inclusive.  All operations stay at the common order and
/// require matching orders on binary inputs.
template <FieldScalar K>
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, K(0)) {}
  explicit TruncatedSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: needs at least the constant term");
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = K(1);
    return s;
  }

  static TruncatedSeries from_poly(const UniPoly<K>& p, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s.c_[i] = p.coeff(i);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const K& coeff(std::size_t i) const { return c_.at(i); }
  K& at(std::size_t i) { return c_.at(i); }
  const std::vector<K>& coeffs() const { return c_; }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order())
      throw std::invalid_argument("TruncatedSeries: cannot extend a truncation");
    return TruncatedSeries(std::vector<K>(c_.begin(), c_.begin() + order + 1));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
  std::vector<K> c_;
};

namespace detail {
template <FieldScalar K>
void require_same_order(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
}
} // namespace detail

template <FieldScalar K>
TruncatedSeries<K> series_sum(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
  detail::require_same_order(a, b);
  TruncatedSeries<K> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r.at(i) = a.coeff(i) + b.coeff(i);
  return r;
}

template <FieldScalar K>
TruncatedSeries<K> series_product(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
  detail::require_same_order(a, b);
  TruncatedSeries<K> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i)
    for (std::size_t j = 0; i + j <= a.order(); ++j)
      r.at(i + j) = r.coeff(i + j) + a.coeff(i) * b.coeff(j);
  return r;
}

/// Multiplicative inverse; requires constant term 1.
template <FieldScalar K>
TruncatedSeries<K> series_inverse(const TruncatedSeries<K>& f) {
  if (!(f.coeff(0) == K(1)))
    throw std::domain_error("series_inverse: constant term must be 1");
  TruncatedSeries<K> g(f.order());
  g.at(0) = K(1);
  for (std::size_t n = 1; n <= f.order(); ++n) {
    K acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc = acc + f.coeff(k) * g.coeff(n - k);
    g.at(n) = -acc;
  }
  return g;
}

/// exp of a series with zero constant term, via the recurrence
/// n·g_n = sum_{k=1..n} k·f_k·g_{n-k} (valid in characteristic zero).
template <FieldScalar K>
TruncatedSeries<K> series_exp(const TruncatedSeries<K>& f) {
  if (!(f.coeff(0) == K(0)))
    throw std::domain_error("series_exp: constant term must be 0");
  TruncatedSeries<K> g(f.order());
  g.at(0) = K(1);
  for (std::size_t n = 1; n <= f.order(); ++n) {
    K acc(0);
    for (std::size_t k = 1; k <= n; ++k)
      acc = acc + K(static_cast<long long>(k)) * f.coeff(k) * g.coeff(n - k);
    g.at(n) = acc / K(static_cast<long long>(n));
  }
  return g;
}

/// log of a series with constant term 1, the inverse recurrence of series_exp.
template <FieldScalar K>
TruncatedSeries<K> series_log(const TruncatedSeries<K>& f) {
  if (!(f.coeff(0) == K(1)))
    throw std::domain_error("series_log: constant term must be 1");
  TruncatedSeries<K> h(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    K acc = K(static_cast<long long>(n)) * f.coeff(n);
    for (std::size_t k = 1; k < n; ++k)
      acc = acc - K(static_cast<long long>(k)) * h.coeff(k) * f.coeff(n - k);
    h.at(n) = acc / K(static_cast<long long>(n));
  }
  return h;
}

} // namespace graphzeta
