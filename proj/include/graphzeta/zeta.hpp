#pragma once

#include "graphzeta/digraph.hpp"
#include "graphzeta/lyndon.hpp"
#include "graphzeta/matrix.hpp"
#include "graphzeta/paths.hpp"
#include "graphzeta/weights.hpp"

#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphzeta {

/// Reciprocal of the Hashimoto-style expression: det(I - t·M) with M the
/// theta transfer matrix, an exact polynomial in t of degree <= |A| with
/// constant term 1.
template <FieldScalar K>
UniPoly<K> hashimoto_polynomial(const Digraph& d, const WeightScheme<K>& w) {
  return det_identity_minus_t(edge_matrix(d, w));
}

namespace detail {

template <FieldScalar K>
K upsilon_sum(const Digraph& d, const WeightScheme<K>& w, int u, int v) {
  K s(0);
  for (int a : d.arcs_between(u, v)) s = s + w.upsilon[static_cast<std::size_t>(a)];
  return s;
}

template <FieldScalar K>
K tau_sum(const Digraph& d, const WeightScheme<K>& w, int u, int v) {
  K s(0);
  for (int a : d.arcs_between(u, v)) s = s + w.tau[static_cast<std::size_t>(a)];
  return s;
}

} // namespace detail

/// The local factor f_{(u,v)}:
///   u == v : 1 + t · sum of upsilon over loops at u,
///   u != v : 1 - t^2 · (sum of upsilon over A_uv) · (sum over A_vu).
/// For pairs outside the support the factor is 1.
template <FieldScalar K>
UniPoly<K> f_pair(const Digraph& d, const WeightScheme<K>& w, int u, int v) {
  w.require_sized(d);
  if (u == v) {
    K s = detail::upsilon_sum(d, w, u, u);
    return UniPoly<K>(std::vector<K>{K(1), s});
  }
  K s = detail::upsilon_sum(d, w, u, v) * detail::upsilon_sum(d, w, v, u);
  return UniPoly<K>(std::vector<K>{K(1), K(0), -s});
}

/// Everything the vertex-side (Ihara) expression is assembled from.
template <FieldScalar K>
struct IharaData {
  /// Local factors keyed by supported pair (u <= v).
  std::map<std::pair<int, int>, UniPoly<K>> f_pairs;
  /// Product of all local factors.
  UniPoly<K> f_delta;
  /// tau-weighted arc count a_{uv} per ordered vertex pair.
  Matrix<K> tau_counts;
  /// Backtracking weights d_{uv} = (sum tau over A_uv)·(sum upsilon over A_vu)
  /// for both orientations of every two-way pair.
  std::map<std::pair<int, int>, K> d_pairs;
  /// Weighted adjacency A_w over K(t): entry (u,v) is a_{uv} / f_{(u,v)}.
  Matrix<RatFunc<K>> weighted_adjacency;
  /// Weighted backtrack D_w over K(t): diagonal, entry (u,u) summing
  /// d_{uv} / f_{(u,v)} over two-way pairs through u.
  Matrix<RatFunc<K>> weighted_backtrack;
};

template <FieldScalar K>
IharaData<K> ihara_data(const Digraph& d, const WeightScheme<K>& w) {
  w.require_sized(d);
  const std::size_t n = static_cast<std::size_t>(d.vertex_count());
  IharaData<K> data;
  PhiPartition phi = phi_partition(d);

  for (const auto& [u, v] : phi.all()) data.f_pairs[{u, v}] = f_pair(d, w, u, v);
  data.f_delta = UniPoly<K>(K(1));
  for (const auto& [pair, f] : data.f_pairs) data.f_delta *= f;

  data.tau_counts = Matrix<K>(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      data.tau_counts(u, v) = detail::tau_sum(d, w, static_cast<int>(u), static_cast<int>(v));

  auto local_factor = [&](int u, int v) -> const UniPoly<K>& {
    static const UniPoly<K> one{K(1)};
    auto it = data.f_pairs.find(u <= v ? std::make_pair(u, v) : std::make_pair(v, u));
    return it == data.f_pairs.end() ? one : it->second;
  };

  data.weighted_adjacency = Matrix<RatFunc<K>>(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const K& count = data.tau_counts(u, v);
      if (count == K(0)) continue;
      data.weighted_adjacency(u, v) =
          RatFunc<K>(UniPoly<K>(count), local_factor(static_cast<int>(u), static_cast<int>(v)));
    }

  data.weighted_backtrack = Matrix<RatFunc<K>>(n, n);
  for (const auto& [u, v] : phi.two_way) {
    K duv = detail::tau_sum(d, w, u, v) * detail::upsilon_sum(d, w, v, u);
    K dvu = detail::tau_sum(d, w, v, u) * detail::upsilon_sum(d, w, u, v);
    data.d_pairs[{u, v}] = duv;
    data.d_pairs[{v, u}] = dvu;
    const UniPoly<K>& f = data.f_pairs.at({u, v});
    data.weighted_backtrack(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) +=
        RatFunc<K>(UniPoly<K>(duv), f);
    data.weighted_backtrack(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) +=
        RatFunc<K>(UniPoly<K>(dvu), f);
  }
  return data;
}

namespace detail {

/// I - t·A_w + t^2·D_w over K(t).
template <FieldScalar K>
Matrix<RatFunc<K>> ihara_core_matrix(const IharaData<K>& data) {
  const std::size_t n = data.weighted_adjacency.rows();
  RatFunc<K> t = RatFunc<K>::variable();
  RatFunc<K> t2 = t * t;
  Matrix<RatFunc<K>> s = Matrix<RatFunc<K>>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s(i, j) = s(i, j) - t * data.weighted_adjacency(i, j) + t2 * data.weighted_backtrack(i, j);
  return s;
}

} // namespace detail

/// The vertex-side value through a fraction-free route: rows of the core
/// matrix are scaled by their denominator lcm, the determinant is taken over
/// K[t] by Bareiss, and the scaling is divided back out by plain polynomial
/// division (no gcd anywhere in t, so the coefficients never leave the sizes
/// Cramer's rule dictates).
template <FieldScalar K>
UniPoly<K> ihara_polynomial_fraction_free(const Digraph& d, const WeightScheme<K>& w) {
  IharaData<K> data = ihara_data(d, w);
  Matrix<RatFunc<K>> s = detail::ihara_core_matrix(data);
  const std::size_t n = s.rows();
  Matrix<UniPoly<K>> p(n, n);
  UniPoly<K> scale{K(1)};
  for (std::size_t i = 0; i < n; ++i) {
    UniPoly<K> l{K(1)};
    for (std::size_t j = 0; j < n; ++j) l = poly_lcm(l, s(i, j).den());
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = s(i, j).num() * exact_div(l, s(i, j).den());
    scale *= l;
  }
  auto [quotient, remainder] = divmod(data.f_delta * det_bareiss(std::move(p)), scale);
  if (!remainder.is_zero())
    throw std::logic_error("ihara_polynomial_fraction_free: expression did not reduce to a polynomial");
  return quotient;
}

/// The vertex-side expression f_Delta(t) · det(I - t·A_w + t^2·D_w),
/// which the main identity asserts equals the Hashimoto polynomial.  The
/// determinant is taken over K(t) by field elimination; the assembled product
/// must come out polynomial, anything else is an internal error.  Over a
/// rational-function field K the elimination would nest fractions two levels
/// deep — its normal-form gcds in t blow up — so those instances go through
/// the fraction-free route instead.
template <FieldScalar K>
UniPoly<K> ihara_polynomial(const Digraph& d, const WeightScheme<K>& w) {
  if constexpr (is_ratfunc_v<K>) {
    return ihara_polynomial_fraction_free(d, w);
  } else {
    IharaData<K> data = ihara_data(d, w);
    RatFunc<K> det = det_over_field(detail::ihara_core_matrix(data));
    RatFunc<K> result = RatFunc<K>(data.f_delta) * det;
    if (!result.is_polynomial())
      throw std::logic_error("ihara_polynomial: expression did not reduce to a polynomial");
    return result.num();
  }
}

/// Outcome of checking the main identity on one instance.
template <FieldScalar K>
struct ZetaReport {
  UniPoly<K> hashimoto;
  UniPoly<K> ihara;
  bool match = false;
  std::string scheme;
  double hashimoto_ms = 0.0;
  double ihara_ms = 0.0;
};

/// Computes both sides of the main identity exactly and compares them.
template <FieldScalar K>
ZetaReport<K> verify_main_theorem(const Digraph& d, const WeightScheme<K>& w) {
  using clock = std::chrono::steady_clock;
  ZetaReport<K> report;
  report.scheme = preset_name(w.preset);
  auto t0 = clock::now();
  report.hashimoto = hashimoto_polynomial(d, w);
  auto t1 = clock::now();
  report.ihara = ihara_polynomial(d, w);
  auto t2 = clock::now();
  report.hashimoto_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  report.ihara_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  report.match = report.hashimoto == report.ihara;
  return report;
}

// ---------------------------------------------------------------------------
// Proof-side decomposition: the transfer matrix factors as M = H - J with
// H = K·L through the vertex space, and both J and the incidence factors are
// block-diagonal along the supported pairs.  Exposed for structural tests.
// ---------------------------------------------------------------------------

/// Arc order grouping the arcs by their supported pair (pairs lexicographic;
/// within a two-way pair the u→v arcs come before the v→u arcs, each bundle
/// ascending by id).
inline std::vector<int> arc_block_order(const Digraph& d) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(d.arc_count()));
  for (const auto& [u, v] : phi_partition(d).all()) {
    for (int a : d.arcs_between(u, v)) order.push_back(a);
    if (u != v)
      for (int a : d.arcs_between(v, u)) order.push_back(a);
  }
  return order;
}

/// Head incidence: entry (a, w) = [head(a) = w].
template <FieldScalar K>
Matrix<K> incidence_head(const Digraph& d) {
  Matrix<K> k(static_cast<std::size_t>(d.arc_count()), static_cast<std::size_t>(d.vertex_count()));
  for (int a = 0; a < d.arc_count(); ++a)
    k(static_cast<std::size_t>(a), static_cast<std::size_t>(d.head(a))) = K(1);
  return k;
}

/// tau-weighted tail incidence: entry (w, a) = tau(a)·[tail(a) = w].
template <FieldScalar K>
Matrix<K> incidence_tail_weighted(const Digraph& d, const WeightScheme<K>& w) {
  w.require_sized(d);
  Matrix<K> l(static_cast<std::size_t>(d.vertex_count()), static_cast<std::size_t>(d.arc_count()));
  for (int a = 0; a < d.arc_count(); ++a)
    l(static_cast<std::size_t>(d.tail(a)), static_cast<std::size_t>(a)) =
        w.tau[static_cast<std::size_t>(a)];
  return l;
}

namespace detail {

inline std::vector<int> pair_arcs(const Digraph& d, int u, int v) {
  std::vector<int> arcs = d.arcs_between(u, v);
  if (u != v) {
    std::vector<int> back = d.arcs_between(v, u);
    arcs.insert(arcs.end(), back.begin(), back.end());
  }
  return arcs;
}

} // namespace detail

/// The backtracking block J(u,v): J restricted to the arcs of the pair, in
/// block order.
template <FieldScalar K>
Matrix<K> pair_block_backtrack(const Digraph& d, const WeightScheme<K>& w, int u, int v) {
  std::vector<int> arcs = detail::pair_arcs(d, u, v);
  Matrix<K> j(arcs.size(), arcs.size());
  for (std::size_t r = 0; r < arcs.size(); ++r)
    for (std::size_t c = 0; c < arcs.size(); ++c)
      if (d.is_inverse_pair(arcs[r], arcs[c])) j(r, c) = w.upsilon[static_cast<std::size_t>(arcs[c])];
  return j;
}

/// The head-incidence block K(u,v): rows are the pair's arcs in block order.
template <FieldScalar K>
Matrix<K> pair_block_head(const Digraph& d, int u, int v) {
  std::vector<int> arcs = detail::pair_arcs(d, u, v);
  Matrix<K> k(arcs.size(), static_cast<std::size_t>(d.vertex_count()));
  for (std::size_t r = 0; r < arcs.size(); ++r)
    k(r, static_cast<std::size_t>(d.head(arcs[r]))) = K(1);
  return k;
}

/// The weighted tail block L(u,v): columns are the pair's arcs in block order.
template <FieldScalar K>
Matrix<K> pair_block_tail(const Digraph& d, const WeightScheme<K>& w, int u, int v) {
  std::vector<int> arcs = detail::pair_arcs(d, u, v);
  Matrix<K> l(static_cast<std::size_t>(d.vertex_count()), arcs.size());
  for (std::size_t c = 0; c < arcs.size(); ++c)
    l(static_cast<std::size_t>(d.tail(arcs[c])), c) = w.tau[static_cast<std::size_t>(arcs[c])];
  return l;
}

// ---------------------------------------------------------------------------
// Classical closed forms on graphs (via the symmetric digraph).
// ---------------------------------------------------------------------------

namespace detail {

/// Adjacency and degree matrices of a graph's symmetric digraph: a loop
/// contributes one to its diagonal entry and one to its vertex degree.
inline std::pair<Matrix<Rational>, Matrix<Rational>> graph_adjacency_degree(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count);
  Matrix<Rational> a(n, n);
  Matrix<Rational> deg(n, n);
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      a(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) += Rational(1);
      deg(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) += Rational(1);
    } else {
      a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) += Rational(1);
      a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) += Rational(1);
      deg(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) += Rational(1);
      deg(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) += Rational(1);
    }
  }
  return {std::move(a), std::move(deg)};
}

/// det(I - t·X + t^2·Y) over K by point evaluation at 2n+1 points.
template <FieldScalar K>
UniPoly<K> det_quadratic_pencil(const Matrix<K>& x, const Matrix<K>& y) {
  x.require_square();
  const std::size_t n = x.rows();
  if (n == 0) return UniPoly<K>(K(1));
  std::vector<K> xs, ys;
  for (std::size_t p = 0; p <= 2 * n; ++p) {
    K t(static_cast<long long>(p));
    Matrix<K> m = Matrix<K>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = m(i, j) - t * x(i, j) + t * t * y(i, j);
    xs.push_back(t);
    if constexpr (std::is_same_v<K, Rational>)
      ys.push_back(detail::det_rational_cleared(m));
    else
      ys.push_back(det_over_field(std::move(m)));
  }
  return interpolate_poly(xs, ys);
}

/// prefactor^exponent · p, with a possibly negative exponent; the result must
/// reduce to a polynomial.
template <FieldScalar K>
UniPoly<K> apply_prefactor(const UniPoly<K>& prefactor, long long exponent, const UniPoly<K>& p) {
  RatFunc<K> r(p);
  if (exponent >= 0)
    r = RatFunc<K>(prefactor.pow(static_cast<unsigned>(exponent))) * r;
  else
    r = r / RatFunc<K>(prefactor.pow(static_cast<unsigned>(-exponent)));
  if (!r.is_polynomial())
    throw std::logic_error("classical form did not reduce to a polynomial");
  return r.num();
}

} // namespace detail

/// Bass's closed form for the classical vertex zeta of a simple graph:
/// (1-t^2)^(|E|-|V|) · det(I - t·A + t^2·(D - I)).
inline UniPoly<Rational> bass_ihara_classical(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("bass_ihara_classical: graph must be simple");
  auto [a, deg] = detail::graph_adjacency_degree(g);
  UniPoly<Rational> det =
      detail::det_quadratic_pencil(a, deg - Matrix<Rational>::identity(a.rows()));
  UniPoly<Rational> one_minus_t2(std::vector<Rational>{1, 0, -1});
  long long exponent = static_cast<long long>(g.edges.size()) - g.vertex_count;
  return detail::apply_prefactor(one_minus_t2, exponent, det);
}

/// Weighted closed form with a free edge-supported weight matrix W and the
/// unweighted degree matrix:
/// (1-t^2)^(|E|-|V|) · det(I - t·W + t^2·(D - I)).
inline UniPoly<Rational> mizuno_sato_classical(const Graph& g, const Matrix<Rational>& weight) {
  if (!g.is_simple()) throw std::invalid_argument("mizuno_sato_classical: graph must be simple");
  auto [a, deg] = detail::graph_adjacency_degree(g);
  if (weight.rows() != a.rows() || weight.cols() != a.cols())
    throw std::invalid_argument("mizuno_sato_classical: weight matrix has wrong shape");
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v)
      if (!(weight(u, v) == Rational(0)) && a(u, v) == Rational(0))
        throw std::invalid_argument("mizuno_sato_classical: weight off the edge support");
  UniPoly<Rational> det =
      detail::det_quadratic_pencil(weight, deg - Matrix<Rational>::identity(a.rows()));
  UniPoly<Rational> one_minus_t2(std::vector<Rational>{1, 0, -1});
  long long exponent = static_cast<long long>(g.edges.size()) - g.vertex_count;
  return detail::apply_prefactor(one_minus_t2, exponent, det);
}

/// Weighted closed form whose quadratic term carries the weighted out-degrees
/// D(w) = diag(sum_v W(u,v)):
/// (1-t^2)^(|E|-|V|) · det(I - t·W + t^2·(D(w) - I)).
inline UniPoly<Rational> sato_classical(const Graph& g, const Matrix<Rational>& weight) {
  if (!g.is_simple()) throw std::invalid_argument("sato_classical: graph must be simple");
  auto [a, deg] = detail::graph_adjacency_degree(g);
  (void)deg;
  if (weight.rows() != a.rows() || weight.cols() != a.cols())
    throw std::invalid_argument("sato_classical: weight matrix has wrong shape");
  Matrix<Rational> wdeg(a.rows(), a.cols());
  for (std::size_t u = 0; u < a.rows(); ++u) {
    Rational s(0);
    for (std::size_t v = 0; v < a.cols(); ++v) {
      if (!(weight(u, v) == Rational(0)) && a(u, v) == Rational(0))
        throw std::invalid_argument("sato_classical: weight off the edge support");
      s += weight(u, v);
    }
    wdeg(u, u) = s;
  }
  UniPoly<Rational> det =
      detail::det_quadratic_pencil(weight, wdeg - Matrix<Rational>::identity(a.rows()));
  UniPoly<Rational> one_minus_t2(std::vector<Rational>{1, 0, -1});
  long long exponent = static_cast<long long>(g.edges.size()) - g.vertex_count;
  return detail::apply_prefactor(one_minus_t2, exponent, det);
}

/// det(I - t·A): the reciprocal of the full-shift zeta of a graph's
/// symmetric digraph under the tau = 1, upsilon = 0 weighting.
inline UniPoly<Rational> bowen_lanford_classical(const Graph& g) {
  auto [a, deg] = detail::graph_adjacency_degree(g);
  (void)deg;
  return det_identity_minus_t(a);
}

/// The q-deformed closed form over Q(q) for a simple graph (loops allowed,
/// counted once in A and once in the degree):
/// (1+(1-q)t)^|L| · (1-(1-q)^2 t^2)^(|E|-|L|-|V|) ·
///   det(I - t·A + (1-q)·t^2·(D - (1-q)·I)).
inline UniPoly<QRat> bartholdi_classical(const Graph& g) {
  {
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw std::invalid_argument("bartholdi_classical: parallel edges are not supported");
  }
  auto [aq, degq] = detail::graph_adjacency_degree(g);
  const std::size_t n = aq.rows();
  auto lift = [](const Matrix<Rational>& m) {
    return m.template map<QRat>([](const Rational& x) { return QRat(x); });
  };
  QRat u(QPoly(std::vector<Rational>{Rational(1), Rational(-1)})); // 1 - q
  Matrix<QRat> a = lift(aq);
  Matrix<QRat> quad = u * (lift(degq) - (u * Matrix<QRat>::identity(n)));
  UniPoly<QRat> det = detail::det_quadratic_pencil(a, quad);

  long long loops = 0;
  for (const auto& [x, y] : g.edges)
    if (x == y) ++loops;
  UniPoly<QRat> loop_factor(std::vector<QRat>{QRat(1), u});
  UniPoly<QRat> edge_factor(std::vector<QRat>{QRat(1), QRat(0), -(u * u)});
  long long exponent = static_cast<long long>(g.edges.size()) - loops - g.vertex_count;
  return detail::apply_prefactor(edge_factor, exponent,
                                 loop_factor.pow(static_cast<unsigned>(loops)) * det);
}

} // namespace graphzeta
