#pragma once

#include "graphzeta/digraph.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/rational_function.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphzeta {

/// Named weight specializations.  Each preset pins (part of) the two weight
/// functions; GENERAL leaves both free.
enum class Preset { General, Ihara, BowenLanford, MizunoSato, Sato, Bartholdi };

inline const char* preset_name(Preset p) {
  switch (p) {
    case Preset::General: return "GENERAL";
    case Preset::Ihara: return "IHARA";
    case Preset::BowenLanford: return "BOWEN_LANFORD";
    case Preset::MizunoSato: return "MIZUNO_SATO";
    case Preset::Sato: return "SATO";
    case Preset::Bartholdi: return "BARTHOLDI";
  }
  return "GENERAL";
}

/// Per-arc weight pair (tau, upsilon) over the coefficient field K.  tau
/// weighs ordinary head-to-tail transitions, upsilon the backtracking ones.
template <FieldScalar K>
struct WeightScheme {
  std::vector<K> tau;
  std::vector<K> upsilon;
  Preset preset = Preset::General;

  void require_sized(const Digraph& d) const {
    if (static_cast<int>(tau.size()) != d.arc_count() ||
        static_cast<int>(upsilon.size()) != d.arc_count())
      throw std::invalid_argument("WeightScheme: weight vectors must have one entry per arc");
  }
};

/// Uniform scheme tau = upsilon = 1 (the classical vertex-zeta weighting).
template <FieldScalar K = Rational>
WeightScheme<K> make_ihara(const Digraph& d) {
  return {std::vector<K>(static_cast<std::size_t>(d.arc_count()), K(1)),
          std::vector<K>(static_cast<std::size_t>(d.arc_count()), K(1)),
          Preset::Ihara};
}

/// upsilon = 0: no backtracking term, the zeta of the full shift.
template <FieldScalar K = Rational>
WeightScheme<K> make_bowen_lanford(const Digraph& d, std::vector<K> tau) {
  WeightScheme<K> s{std::move(tau),
                    std::vector<K>(static_cast<std::size_t>(d.arc_count()), K(0)),
                    Preset::BowenLanford};
  s.require_sized(d);
  return s;
}

/// upsilon = tau: the reduced-adjacency weighting.
template <FieldScalar K = Rational>
WeightScheme<K> make_mizuno_sato(const Digraph& d, std::vector<K> tau) {
  WeightScheme<K> s{tau, tau, Preset::MizunoSato};
  s.require_sized(d);
  return s;
}

/// upsilon = 1 with free tau.
template <FieldScalar K = Rational>
WeightScheme<K> make_sato(const Digraph& d, std::vector<K> tau) {
  WeightScheme<K> s{std::move(tau),
                    std::vector<K>(static_cast<std::size_t>(d.arc_count()), K(1)),
                    Preset::Sato};
  s.require_sized(d);
  return s;
}

/// tau = 1, upsilon = 1 - q over the symbolic field Q(q).
inline WeightScheme<QRat> make_bartholdi(const Digraph& d) {
  QRat one_minus_q(QPoly(std::vector<Rational>{Rational(1), Rational(-1)}));
  return {std::vector<QRat>(static_cast<std::size_t>(d.arc_count()), QRat(1)),
          std::vector<QRat>(static_cast<std::size_t>(d.arc_count()), one_minus_q),
          Preset::Bartholdi};
}

/// Bartholdi weighting with q evaluated at a rational point.
inline WeightScheme<Rational> make_bartholdi_evaluated(const Digraph& d, const Rational& q) {
  return {std::vector<Rational>(static_cast<std::size_t>(d.arc_count()), Rational(1)),
          std::vector<Rational>(static_cast<std::size_t>(d.arc_count()), Rational(1) - q),
          Preset::Bartholdi};
}

/// The transition weight of the ordered arc pair (a, b):
///   tau(b)·[head(a) = tail(b)]  -  upsilon(b)·[b ∈ S(a)].
template <FieldScalar K>
K theta_eval(const Digraph& d, const WeightScheme<K>& w, int a, int b) {
  K value(0);
  if (d.head(a) == d.tail(b)) value = value + w.tau[static_cast<std::size_t>(b)];
  if (d.is_inverse_pair(a, b)) value = value - w.upsilon[static_cast<std::size_t>(b)];
  return value;
}

/// The |A|×|A| transfer matrix M with M(a,b) = theta(a,b).
template <FieldScalar K>
Matrix<K> edge_matrix(const Digraph& d, const WeightScheme<K>& w) {
  w.require_sized(d);
  const std::size_t n = static_cast<std::size_t>(d.arc_count());
  Matrix<K> m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      m(a, b) = theta_eval(d, w, static_cast<int>(a), static_cast<int>(b));
  return m;
}

/// The head-to-tail part H of the transfer matrix: H(a,b) = tau(b)·[head(a) = tail(b)].
template <FieldScalar K>
Matrix<K> edge_matrix_head_tail(const Digraph& d, const WeightScheme<K>& w) {
  w.require_sized(d);
  const std::size_t n = static_cast<std::size_t>(d.arc_count());
  Matrix<K> m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.head(static_cast<int>(a)) == d.tail(static_cast<int>(b)))
        m(a, b) = w.tau[b];
  return m;
}

/// The backtracking part J: J(a,b) = upsilon(b)·[b ∈ S(a)], so that the
/// transfer matrix is H - J.
template <FieldScalar K>
Matrix<K> edge_matrix_backtrack(const Digraph& d, const WeightScheme<K>& w) {
  w.require_sized(d);
  const std::size_t n = static_cast<std::size_t>(d.arc_count());
  Matrix<K> m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.is_inverse_pair(static_cast<int>(a), static_cast<int>(b)))
        m(a, b) = w.upsilon[b];
  return m;
}

/// How a transfer matrix relates to the digraph's incidence structure.
enum class AdjacencyLevel {
  /// Some entry lives off the head-to-tail incidence pattern.
  Neither,
  /// Entries vanish off head-to-tail incidence.
  Adjacency,
  /// Entries vanish off head-to-tail incidence and on inverse pairs.
  ReducedAdjacency,
};

/// Direct scan of all arc pairs classifying a matrix against the digraph.
template <FieldScalar K>
AdjacencyLevel check_adjacency_condition(const Digraph& d, const Matrix<K>& m) {
  const int n = d.arc_count();
  if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("check_adjacency_condition: matrix must be arcs x arcs");
  bool reduced = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const K& v = m(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (v == K(0)) continue;
      if (d.head(a) != d.tail(b)) return AdjacencyLevel::Neither;
      if (d.is_inverse_pair(a, b)) reduced = false;
    }
  return reduced ? AdjacencyLevel::ReducedAdjacency : AdjacencyLevel::Adjacency;
}

} // namespace graphzeta
