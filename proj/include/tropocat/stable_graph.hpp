#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "tropocat/monoid.hpp"

namespace tropocat {

/// Combinatorial graph (X, s, r): s an involution, r idempotent, and
/// s(x) = x exactly when r(x) = x. Fixed points are vertices, the rest are
/// half-edges, and r sends a half-edge to its vertex.
struct HalfEdgeGraph {
  std::vector<std::size_t> s;
  std::vector<std::size_t> r;

  std::size_t size() const { return s.size(); }
  /// Throws InvalidArgument when the defining equations fail.
  void validate() const;
  bool is_vertex(std::size_t x) const { return s[x] == x; }
};

/// Vertex-weighted multigraph. Edge k is the half-edge pair {2k, 2k+1};
/// half-edge 2k sits at edges()[k].first and 2k+1 at edges()[k].second.
/// Loops are edges with equal endpoints.
class StableGraph {
 public:
  using Element = WeightingMonoid::Element;
  using Edge = std::pair<std::size_t, std::size_t>;

  StableGraph() = default;
  /// Throws InvalidArgument on endpoints out of range.
  StableGraph(std::vector<Element> weights, std::vector<Edge> edges);

  /// Vertices are the fixed points of s in increasing order; each edge
  /// {h, s(h)} with h < s(h) is listed in order of h.
  static StableGraph from_half_edges(const HalfEdgeGraph& g, const std::vector<Element>& weights);

  /// Carrier: vertices 0..V-1, then half-edges V + 2k, V + 2k + 1 of edge k.
  HalfEdgeGraph to_half_edges() const;

  std::size_t vertex_count() const { return weights_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Element>& weights() const { return weights_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_loop(std::size_t e) const { return edges_[e].first == edges_[e].second; }

  /// Number of half-edges at v (a loop counts twice).
  std::size_t valence(std::size_t v) const;
  std::vector<std::size_t> valences() const;
  bool is_connected() const;
  /// |E| - |V| + 1; requires connectivity (Disconnected otherwise).
  std::int64_t first_betti() const;

  bool operator==(const StableGraph&) const = default;
  auto operator<=>(const StableGraph& o) const {
    return std::tie(weights_, edges_) <=> std::tie(o.weights_, o.edges_);
  }

 private:
  std::vector<Element> weights_;
  std::vector<Edge> edges_;
};

/// (|E| - |V| + 1)·α + Σ w(v). Throws Disconnected.
StableGraph::Element genus(const StableGraph& g, const WeightingMonoid& monoid);

/// Connected, valence-1 vertices weighted in A₁, valence-2 vertices of
/// nonzero weight, isolated vertices in A₁. Edgeless graphs are allowed here.
bool is_stable(const StableGraph& g, const WeightingMonoid& monoid);

/// Contracts edge e. A non-loop merges its endpoints (weights add; the merged
/// vertex takes the smaller index, higher vertices shift down). A loop is
/// deleted and its vertex gains α. Remaining edges keep their relative order,
/// so edge j maps to j (j < e) or j - 1 (j > e).
StableGraph contract_edge(const StableGraph& g, std::size_t e, const WeightingMonoid& monoid);

/// Index of old vertex v after contract_edge(g, e, ·).
std::size_t contracted_vertex(const StableGraph& g, std::size_t e, std::size_t v);

/// Renumbers vertices and edges: new vertex vertex_perm[v], new edge
/// edge_perm[k]; edges in flip are reversed.
StableGraph relabel(const StableGraph& g, const std::vector<std::size_t>& vertex_perm,
                    const std::vector<std::size_t>& edge_perm, const std::vector<bool>& flip);

}  // namespace tropocat
