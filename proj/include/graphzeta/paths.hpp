#pragma once

#include "graphzeta/digraph.hpp"
#include "graphzeta/errors.hpp"
#include "graphzeta/series.hpp"
#include "graphzeta/weights.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphzeta {

/// A closed path of positive length: consecutive arcs chain head-to-tail and
/// the last arc returns to the first arc's tail.  Constructing one validates
/// the chain against the digraph.
class ClosedPath {
public:
  ClosedPath(const Digraph& d, std::vector<int> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.empty()) throw std::invalid_argument("ClosedPath: length must be positive");
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      int a = arcs_[i];
      int b = arcs_[(i + 1) % arcs_.size()];
      if (d.head(a) != d.tail(b))
        throw std::invalid_argument("ClosedPath: arcs do not chain");
    }
  }

  int length() const { return static_cast<int>(arcs_.size()); }
  int arc(int i) const { return arcs_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& arcs() const { return arcs_; }

  friend bool operator==(const ClosedPath& a, const ClosedPath& b) { return a.arcs_ == b.arcs_; }
  friend bool operator!=(const ClosedPath& a, const ClosedPath& b) { return !(a == b); }

private:
  std::vector<int> arcs_;
};

/// Lexicographically minimal rotation of an arc sequence; the canonical
/// representative of the rotation class.
inline std::vector<int> canonical_rotation(const std::vector<int>& seq) {
  std::vector<int> best = seq;
  std::vector<int> cur = seq;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

/// Smallest p dividing the length such that the sequence is p-periodic.
inline int prime_period(const std::vector<int>& seq) {
  const int m = static_cast<int>(seq.size());
  for (int p = 1; p <= m; ++p) {
    if (m % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < m && periodic; ++i)
      periodic = seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(i % p)];
    if (periodic) return p;
  }
  return m;
}

/// Number of cyclic backtracks of a closed path: positions i (including the
/// wrap-around) where the next arc lies in S(arc_i).
inline int cyclic_bump_count(const Digraph& d, const ClosedPath& x) {
  int count = 0;
  const int m = x.length();
  for (int i = 0; i < m; ++i)
    if (d.is_inverse_pair(x.arc(i), x.arc((i + 1) % m))) ++count;
  return count;
}

/// A closed path is reduced when it has no cyclic backtracks.
inline bool is_reduced(const Digraph& d, const ClosedPath& x) {
  return cyclic_bump_count(d, x) == 0;
}

/// The cyclic weight of a closed path: the product of theta over consecutive
/// arc pairs, wrapping from the last arc back to the first.
template <FieldScalar K>
K circ_theta(const Digraph& d, const WeightScheme<K>& w, const ClosedPath& x) {
  K value(1);
  const int m = x.length();
  for (int i = 0; i < m; ++i)
    value = value * theta_eval(d, w, x.arc(i), x.arc((i + 1) % m));
  return value;
}

/// Enumeration budget: an enumeration of length-m closed paths is refused
/// up front when |A|^m exceeds max_candidates.
struct PathEnumOptions {
  bool reduced = false;
  std::uint64_t max_candidates = 10'000'000;
};

namespace detail {

inline void check_enumeration_budget(const Digraph& d, int m, std::uint64_t max_candidates) {
  const std::uint64_t base = static_cast<std::uint64_t>(d.arc_count());
  std::uint64_t candidates = 1;
  for (int i = 0; i < m; ++i) {
    if (base != 0 && candidates > max_candidates / base) {
      throw ResourceLimitError("closed-path enumeration of length " + std::to_string(m) +
                               " exceeds the budget of " + std::to_string(max_candidates) +
                               " candidates; raise --max-paths to proceed");
    }
    candidates *= base;
  }
}

template <class Fn>
void extend_path(const Digraph& d, int m, bool reduced, std::vector<int>& stack, Fn&& fn) {
  if (static_cast<int>(stack.size()) == m) {
    int last = stack.back();
    int first = stack.front();
    if (d.head(last) != d.tail(first)) return;
    if (reduced && d.is_inverse_pair(last, first)) return;
    fn(stack);
    return;
  }
  int from = d.head(stack.back());
  for (int next : d.arcs_from(from)) {
    if (reduced && d.is_inverse_pair(stack.back(), next)) continue;
    stack.push_back(next);
    extend_path(d, m, reduced, stack, fn);
    stack.pop_back();
  }
}

} // namespace detail

/// Visits every closed path of length m (every rotation separately), in
/// lexicographic order of arc sequences.  With opts.reduced only paths free
/// of cyclic backtracks (including the wrap-around pair) are visited.
template <class Fn>
void for_each_closed_path(const Digraph& d, int m, const PathEnumOptions& opts, Fn&& fn) {
  if (m <= 0) throw std::invalid_argument("for_each_closed_path: length must be positive");
  detail::check_enumeration_budget(d, m, opts.max_candidates);
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(m));
  for (int first = 0; first < d.arc_count(); ++first) {
    stack.push_back(first);
    detail::extend_path(d, m, opts.reduced, stack, fn);
    stack.pop_back();
  }
}

inline std::vector<ClosedPath> enumerate_closed_paths(const Digraph& d, int m,
                                                      const PathEnumOptions& opts = {}) {
  std::vector<ClosedPath> paths;
  for_each_closed_path(d, m, opts,
                       [&](const std::vector<int>& seq) { paths.emplace_back(d, seq); });
  return paths;
}

/// A rotation class of closed paths of one length.
struct CycleClass {
  std::vector<int> representative; ///< canonical (lex-min) rotation
  int length = 0;
  int period = 0;         ///< prime period; the class is prime iff period == length
  int member_count = 0;   ///< rotations hitting this class
  bool prime = false;
  bool reduced = false;
};

/// Groups closed paths by rotation equivalence; classes come out ordered by
/// canonical representative.
inline std::vector<CycleClass> cycle_classes(const Digraph& d,
                                             const std::vector<ClosedPath>& paths) {
  std::map<std::vector<int>, int> seen;
  for (const ClosedPath& p : paths) ++seen[canonical_rotation(p.arcs())];
  std::vector<CycleClass> classes;
  classes.reserve(seen.size());
  for (const auto& [rep, count] : seen) {
    CycleClass c;
    c.representative = rep;
    c.length = static_cast<int>(rep.size());
    c.period = prime_period(rep);
    c.member_count = count;
    c.prime = c.period == c.length;
    c.reduced = is_reduced(d, ClosedPath(d, rep));
    classes.push_back(std::move(c));
  }
  return classes;
}

/// N_m: the circ-weighted count of closed paths of length m (reduced paths
/// only when opts.reduced is set).
template <FieldScalar K>
K n_m(const Digraph& d, const WeightScheme<K>& w, int m, const PathEnumOptions& opts = {}) {
  K total(0);
  for_each_closed_path(d, m, opts, [&](const std::vector<int>& seq) {
    total = total + circ_theta(d, w, ClosedPath(d, seq));
  });
  return total;
}

/// The exponential expression truncated at order T:
/// exp(sum_{m=1..T} N_m t^m / m).
template <FieldScalar K>
TruncatedSeries<K> exp_expression_truncated(const Digraph& d, const WeightScheme<K>& w,
                                            std::size_t T, const PathEnumOptions& opts = {}) {
  TruncatedSeries<K> arg(T);
  for (std::size_t m = 1; m <= T; ++m)
    arg.at(m) = n_m(d, w, static_cast<int>(m), opts) / K(static_cast<long long>(m));
  return series_exp(arg);
}

/// The Euler-product expression truncated at order T: the product over prime
/// cycle classes of length <= T of (1 - circ(x) t^len)^-1, one factor per
/// class.  Classes are detected by visiting only canonical self-representative
/// prime paths.
template <FieldScalar K>
TruncatedSeries<K> euler_expression_truncated(const Digraph& d, const WeightScheme<K>& w,
                                              std::size_t T, const PathEnumOptions& opts = {}) {
  TruncatedSeries<K> product = TruncatedSeries<K>::one(T);
  for (std::size_t m = 1; m <= T; ++m) {
    for_each_closed_path(d, static_cast<int>(m), opts, [&](const std::vector<int>& seq) {
      if (prime_period(seq) != static_cast<int>(m)) return;
      if (canonical_rotation(seq) != seq) return;
      K c = circ_theta(d, w, ClosedPath(d, seq));
      if (c == K(0)) return;
      UniPoly<K> factor = UniPoly<K>(K(1)) - UniPoly<K>::monomial(c, m);
      product = series_product(product, series_inverse(TruncatedSeries<K>::from_poly(factor, T)));
    });
  }
  return product;
}

} // namespace graphzeta
