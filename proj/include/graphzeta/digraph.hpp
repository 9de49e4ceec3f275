#pragma once

#include "graphzeta/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphzeta {

/// One arc of a digraph: tail → head.  Arcs are identified by their index in
/// the owning digraph's arc list, which is the order of the input document.
struct Arc {
  int tail = 0;
  int head = 0;
};

/// Finite digraph with multi-arcs and multi-loops allowed.  Vertices are
/// 0..vertex_count-1; no isolated-vertex restrictions.  The structure is
/// immutable after construction.
class Digraph {
public:
  Digraph() : vertex_count_(0) {}
  Digraph(int vertex_count, std::vector<Arc> arcs)
      : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
    if (vertex_count_ < 0) throw std::invalid_argument("Digraph: negative vertex count");
    for (const Arc& a : arcs_)
      if (a.tail < 0 || a.tail >= vertex_count_ || a.head < 0 || a.head >= vertex_count_)
        throw std::invalid_argument("Digraph: arc endpoint out of range");
    out_by_vertex_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (int a = 0; a < arc_count(); ++a)
      out_by_vertex_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(a)].tail)].push_back(a);
  }

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  int tail(int arc) const { return arcs_.at(static_cast<std::size_t>(arc)).tail; }
  int head(int arc) const { return arcs_.at(static_cast<std::size_t>(arc)).head; }
  bool is_loop(int arc) const { return tail(arc) == head(arc); }

  /// Arc ids with tail u, ascending.
  const std::vector<int>& arcs_from(int u) const {
    return out_by_vertex_.at(static_cast<std::size_t>(u));
  }

  /// Arc ids in the set A_{uv} (tail u, head v), ascending.
  std::vector<int> arcs_between(int u, int v) const {
    std::vector<int> r;
    for (int a : arcs_from(u))
      if (head(a) == v) r.push_back(a);
    return r;
  }

  /// The inverse-arc set S(a) = A_{head(a), tail(a)}.  For a loop this is the
  /// whole loop bundle at its vertex, including a itself.
  std::vector<int> inverse_set(int a) const { return arcs_between(head(a), tail(a)); }

  /// True when b ∈ S(a), i.e. traversing a then b backtracks.
  bool is_inverse_pair(int a, int b) const {
    return tail(b) == head(a) && head(b) == tail(a);
  }

  /// Vertex-by-vertex arc counts |A_{uv}|.
  Matrix<std::int64_t> adjacency_matrix() const {
    Matrix<std::int64_t> m(static_cast<std::size_t>(vertex_count_),
                           static_cast<std::size_t>(vertex_count_));
    for (const Arc& a : arcs_)
      m(static_cast<std::size_t>(a.tail), static_cast<std::size_t>(a.head)) += 1;
    return m;
  }

  /// Diagonal matrix of backtracking pair counts: entry (u,u) counts ordered
  /// pairs (a, a') with tail(a) = u, a' ∈ S(a) and a not a loop, i.e.
  /// sum over v ≠ u of |A_{uv}|·|A_{vu}|.
  Matrix<std::int64_t> backtrack_matrix() const {
    Matrix<std::int64_t> counts = adjacency_matrix();
    Matrix<std::int64_t> m(static_cast<std::size_t>(vertex_count_),
                           static_cast<std::size_t>(vertex_count_));
    for (int u = 0; u < vertex_count_; ++u)
      for (int v = 0; v < vertex_count_; ++v) {
        if (u == v) continue;
        m(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) +=
            counts(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) *
            counts(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
      }
    return m;
  }

private:
  int vertex_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_by_vertex_;
};

/// The supported pairs Φ of a digraph, split by how {u,v} is realized:
///   * loop_pairs: (u,u) with at least one loop at u,
///   * one_way: u < v with arcs in exactly one direction,
///   * two_way: u < v with arcs in both directions.
/// Pairs are normalized (u <= v) and listed in lexicographic order.
struct PhiPartition {
  std::vector<std::pair<int, int>> loop_pairs;
  std::vector<std::pair<int, int>> one_way;
  std::vector<std::pair<int, int>> two_way;

  /// All supported pairs, lexicographic.
  std::vector<std::pair<int, int>> all() const {
    std::vector<std::pair<int, int>> r;
    r.reserve(loop_pairs.size() + one_way.size() + two_way.size());
    r.insert(r.end(), loop_pairs.begin(), loop_pairs.end());
    r.insert(r.end(), one_way.begin(), one_way.end());
    r.insert(r.end(), two_way.begin(), two_way.end());
    std::sort(r.begin(), r.end());
    return r;
  }
};

inline PhiPartition phi_partition(const Digraph& d) {
  Matrix<std::int64_t> counts = d.adjacency_matrix();
  PhiPartition phi;
  for (int u = 0; u < d.vertex_count(); ++u) {
    if (counts(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) > 0)
      phi.loop_pairs.emplace_back(u, u);
    for (int v = u + 1; v < d.vertex_count(); ++v) {
      const auto uv = counts(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
      const auto vu = counts(static_cast<std::size_t>(v), static_cast<std::size_t>(u));
      if (uv > 0 && vu > 0)
        phi.two_way.emplace_back(u, v);
      else if (uv > 0 || vu > 0)
        phi.one_way.emplace_back(u, v);
    }
  }
  return phi;
}

/// Finite undirected graph; multi-edges and loops allowed.  Edges are stored
/// with endpoints normalized to u <= v, in input order.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> e) : vertex_count(n), edges(std::move(e)) {
    if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
  }

  /// No loops, no parallel edges.
  bool is_simple() const {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i].first == sorted[i].second) return false;
      if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    return true;
  }
};

/// The symmetric digraph of a graph plus the edge → arc provenance.  Each
/// non-loop edge {u,v} becomes the arc pair (u,v), (v,u); each loop becomes a
/// single self-inverse loop arc.  Arc order follows edge order, forward arc
/// first, which makes the construction deterministic.
struct SymmetricDigraph {
  Digraph digraph;
  std::vector<std::vector<int>> arcs_of_edge;
};

inline SymmetricDigraph symmetric_digraph(const Graph& g) {
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> prov;
  prov.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      prov.push_back({static_cast<int>(arcs.size())});
      arcs.push_back({u, u});
    } else {
      prov.push_back({static_cast<int>(arcs.size()), static_cast<int>(arcs.size()) + 1});
      arcs.push_back({u, v});
      arcs.push_back({v, u});
    }
  }
  return {Digraph(g.vertex_count, std::move(arcs)), std::move(prov)};
}

} // namespace graphzeta
