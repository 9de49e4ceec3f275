#pragma once

#include "graphzeta/digraph.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/polynomial.hpp"
#include "graphzeta/rational.hpp"
#include "graphzeta/weights.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace gztest {

using namespace graphzeta;

/// Deterministic random source for tests.  Raw draws go through modulo
/// reduction instead of std distributions so that sequences are identical
/// across standard libraries.
class TestRng {
public:
  explicit TestRng(std::uint64_t seed) : gen_(seed) {}

  int int_in(int lo, int hi) { // inclusive
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small exact rational with numerator in [-max_num, max_num] and
  /// denominator in [1, max_den].
  Rational rational(int max_num = 3, int max_den = 4) {
    return Rational(int_in(-max_num, max_num), int_in(1, max_den));
  }

  Rational nonzero_rational(int max_num = 3, int max_den = 4) {
    while (true) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Matrix<Rational> matrix(std::size_t rows, std::size_t cols, int max_num = 3, int max_den = 4) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(max_num, max_den);
    return m;
  }

  /// Random digraph with 1..max_vertices vertices and 0..max_arcs arcs.
  Digraph digraph(int max_vertices, int max_arcs) {
    int n = int_in(1, max_vertices);
    int a = int_in(0, max_arcs);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) arcs.push_back({int_in(0, n - 1), int_in(0, n - 1)});
    return Digraph(n, std::move(arcs));
  }

  /// Random polynomial of degree at most max_deg (possibly zero).
  UniPoly<Rational> random_poly(int max_deg, int max_num = 3, int max_den = 3) {
    std::vector<Rational> coeffs;
    int deg = int_in(0, max_deg);
    for (int i = 0; i <= deg; ++i) coeffs.push_back(rational(max_num, max_den));
    return UniPoly<Rational>(std::move(coeffs));
  }

  UniPoly<Rational> nonzero_poly(int max_deg, int max_num = 3, int max_den = 3) {
    while (true) {
      UniPoly<Rational> p = random_poly(max_deg, max_num, max_den);
      if (!p.is_zero()) return p;
    }
  }

  /// Random weights for every arc of d.
  WeightScheme<Rational> general_scheme(const Digraph& d, int max_num = 3, int max_den = 3) {
    WeightScheme<Rational> w;
    w.preset = Preset::General;
    for (int a = 0; a < d.arc_count(); ++a) {
      w.tau.push_back(rational(max_num, max_den));
      w.upsilon.push_back(rational(max_num, max_den));
    }
    return w;
  }

private:
  std::mt19937_64 gen_;
};

/// Rational-coefficient polynomial from integer coefficients, ascending.
inline UniPoly<Rational> rpoly(std::vector<long long> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return UniPoly<Rational>(std::move(c));
}

/// The demo multidigraph used throughout: three vertices, two loops at the
/// first vertex, a two-way pair, a one-way arc, and a doubled arc.
inline Digraph demo_digraph() {
  return Digraph(3, {{0, 0}, {0, 0}, {0, 1}, {1, 0}, {1, 2}, {1, 2}, {2, 1}, {2, 0}});
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
inline Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

/// Reference determinant: first-row cofactor expansion with memoization on
/// the set of available columns.  Exponential but exact; the independent
/// oracle for the elimination-based routines.
template <class S>
S det_cofactor(const Matrix<S>& m) {
  m.require_square();
  const std::size_t n = m.rows();
  if (n == 0) return S(1);
  if (n > 30) throw std::invalid_argument("det_cofactor: too large");
  std::map<std::uint32_t, S> memo;
  // mask has bit j set when column j is still available; row = n - popcount.
  auto rec = [&](auto&& self, std::uint32_t mask) -> S {
    if (mask == 0) return S(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    S acc{};
    bool negative = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      S sub = self(self, mask & ~(1u << j));
      S term = m(row, j) * sub;
      acc = negative ? acc - term : acc + term;
      negative = !negative;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n == 32 ? ~0u : ((1u << n) - 1u)));
}

/// Number of Lyndon words of exact length len over an n-letter alphabet,
/// by Moebius inversion of the necklace count.
inline long long lyndon_count(int n, int len) {
  auto mobius = [](int x) {
    int result = 1;
    for (int p = 2; p * p <= x; ++p) {
      if (x % p) continue;
      x /= p;
      if (x % p == 0) return 0;
      result = -result;
    }
    if (x > 1) result = -result;
    return result;
  };
  long long total = 0;
  for (int d = 1; d <= len; ++d) {
    if (len % d) continue;
    long long power = 1;
    for (int i = 0; i < len / d; ++i) power *= n;
    total += mobius(d) * power;
  }
  return total / len;
}

} // namespace gztest
