#pragma once

#include "graphzeta/matrix.hpp"
#include "graphzeta/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace graphzeta {

/// All Lyndon words over the alphabet {0..n-1} of length <= maxlen, in
/// lexicographic order (Duval's generation).
inline std::vector<std::vector<int>> lyndon_words(int n, int maxlen) {
  if (n <= 0 || maxlen < 0) throw std::invalid_argument("lyndon_words: need n >= 1, maxlen >= 0");
  std::vector<std::vector<int>> words;
  if (maxlen == 0) return words;
  std::vector<int> w{0};
  while (true) {
    words.push_back(w);
    const std::size_t k = w.size();
    while (w.size() < static_cast<std::size_t>(maxlen)) w.push_back(w[w.size() % k]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return words;
}

/// True when the word is strictly smaller than every proper rotation of
/// itself (the defining property of a Lyndon word).
inline bool is_lyndon(const std::vector<int>& w) {
  if (w.empty()) return false;
  std::vector<int> rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (!(w < rot)) return false;
  }
  return true;
}

/// The cyclic weight of a word through a matrix: the product of
/// M(w_i, w_{i+1}) around the cycle.
template <FieldScalar K>
K circ_matrix(const Matrix<K>& m, const std::vector<int>& w) {
  K value(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t from = static_cast<std::size_t>(w[i]);
    std::size_t to = static_cast<std::size_t>(w[(i + 1) % w.size()]);
    value = value * m(from, to);
  }
  return value;
}

/// Checks the cycle expansion of the determinant truncated at order T:
///   det(I - tM)  ==  prod over Lyndon words w, |w| <= T of (1 - circ(w) t^|w|)
/// as truncated series mod t^(T+1).
template <FieldScalar K>
bool foata_zeilberger_check(const Matrix<K>& m, std::size_t T) {
  m.require_square();
  TruncatedSeries<K> lhs = TruncatedSeries<K>::from_poly(det_identity_minus_t(m), T);
  TruncatedSeries<K> rhs = TruncatedSeries<K>::one(T);
  if (m.rows() == 0) return lhs == rhs;
  for (const auto& w : lyndon_words(static_cast<int>(m.rows()), static_cast<int>(T))) {
    K c = circ_matrix(m, w);
    if (c == K(0)) continue;
    UniPoly<K> factor = UniPoly<K>(K(1)) - UniPoly<K>::monomial(c, w.size());
    rhs = series_product(rhs, TruncatedSeries<K>::from_poly(factor, T));
  }
  return lhs == rhs;
}

} // namespace graphzeta
