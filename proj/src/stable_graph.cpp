#include "tropocat/stable_graph.hpp"

#include <numeric>

#include "tropocat/error.hpp"

namespace tropocat {

void HalfEdgeGraph::validate() const {
  if (s.size() != r.size()) throw Error(ErrorCode::InvalidArgument, "s and r differ in size");
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (s[x] >= n || r[x] >= n) throw Error(ErrorCode::InvalidArgument, "map out of range");
    if (s[s[x]] != x) throw Error(ErrorCode::InvalidArgument, "s is not an involution");
    if (r[r[x]] != r[x]) throw Error(ErrorCode::InvalidArgument, "r is not idempotent");
    if ((s[x] == x) != (r[x] == x)) {
      throw Error(ErrorCode::InvalidArgument, "fixed points of s and r differ");
    }
  }
}

StableGraph::StableGraph(std::vector<Element> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u >= weights_.size() || v >= weights_.size()) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
  }
}

StableGraph StableGraph::from_half_edges(const HalfEdgeGraph& g,
                                         const std::vector<Element>& weights) {
  g.validate();
  std::vector<std::size_t> index(g.size(), 0);
  std::size_t vertices = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g.is_vertex(x)) index[x] = vertices++;
  }
  if (weights.size() != vertices) {
    throw Error(ErrorCode::InvalidArgument, "one weight per vertex required");
  }
  std::vector<Edge> edges;
  for (std::size_t h = 0; h < g.size(); ++h) {
    if (!g.is_vertex(h) && h < g.s[h]) edges.emplace_back(index[g.r[h]], index[g.r[g.s[h]]]);
  }
  return StableGraph(weights, std::move(edges));
}

HalfEdgeGraph StableGraph::to_half_edges() const {
  const std::size_t V = vertex_count();
  HalfEdgeGraph g;
  g.s.resize(V + 2 * edge_count());
  g.r.resize(g.s.size());
  for (std::size_t v = 0; v < V; ++v) g.s[v] = g.r[v] = v;
  for (std::size_t k = 0; k < edge_count(); ++k) {
    const std::size_t a = V + 2 * k, b = a + 1;
    g.s[a] = b;
    g.s[b] = a;
    g.r[a] = edges_[k].first;
    g.r[b] = edges_[k].second;
  }
  return g;
}

std::size_t StableGraph::valence(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& [a, b] : edges_) n += (a == v) + (b == v);
  return n;
}

std::vector<std::size_t> StableGraph::valences() const {
  std::vector<std::size_t> val(vertex_count(), 0);
  for (const auto& [a, b] : edges_) {
    ++val[a];
    ++val[b];
  }
  return val;
}

bool StableGraph::is_connected() const {
  const std::size_t V = vertex_count();
  if (V == 0) return false;
  std::vector<std::size_t> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = V;
  for (const auto& [a, b] : edges_) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[std::max(ra, rb)] = std::min(ra, rb);
      --parts;
    }
  }
  return parts == 1;
}

std::int64_t StableGraph::first_betti() const {
  if (!is_connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
  return static_cast<std::int64_t>(edge_count()) - static_cast<std::int64_t>(vertex_count()) + 1;
}

StableGraph::Element genus(const StableGraph& g, const WeightingMonoid& monoid) {
  auto total = monoid.times(monoid.alpha(), g.first_betti());
  for (auto w : g.weights()) total = monoid.add(total, w);
  return total;
}

bool is_stable(const StableGraph& g, const WeightingMonoid& monoid) {
  if (!g.is_connected()) return false;
  const auto val = g.valences();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto w = g.weights()[v];
    if (!monoid.contains(w)) return false;
    if (val[v] <= 1 && !monoid.in_A1(w)) return false;
    if (val[v] == 2 && w == monoid.zero()) return false;
  }
  return true;
}

std::size_t contracted_vertex(const StableGraph& g, std::size_t e, std::size_t v) {
  const auto [a, b] = g.edges()[e];
  if (a == b) return v;
  const std::size_t keep = std::min(a, b), drop = std::max(a, b);
  if (v == drop) return keep;
  return v > drop ? v - 1 : v;
}

StableGraph contract_edge(const StableGraph& g, std::size_t e, const WeightingMonoid& monoid) {
  if (e >= g.edge_count()) throw Error(ErrorCode::InvalidArgument, "edge index out of range");
  const auto [a, b] = g.edges()[e];
  std::vector<StableGraph::Element> weights;
  std::vector<StableGraph::Edge> edges;
  if (a == b) {
    weights = g.weights();
    weights[a] = monoid.add(weights[a], monoid.alpha());
  } else {
    const std::size_t keep = std::min(a, b), drop = std::max(a, b);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (v != drop) weights.push_back(g.weights()[v]);
    }
    weights[keep] = monoid.add(g.weights()[keep], g.weights()[drop]);
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k == e) continue;
    edges.emplace_back(contracted_vertex(g, e, g.edges()[k].first),
                       contracted_vertex(g, e, g.edges()[k].second));
  }
  return StableGraph(std::move(weights), std::move(edges));
}

StableGraph relabel(const StableGraph& g, const std::vector<std::size_t>& vertex_perm,
                    const std::vector<std::size_t>& edge_perm, const std::vector<bool>& flip) {
  std::vector<StableGraph::Element> weights(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) weights[vertex_perm[v]] = g.weights()[v];
  std::vector<StableGraph::Edge> edges(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto [a, b] = g.edges()[k];
    if (!flip.empty() && flip[k]) std::swap(a, b);
    edges[edge_perm[k]] = {vertex_perm[a], vertex_perm[b]};
  }
  return StableGraph(std::move(weights), std::move(edges));
}

}  // namespace tropocat
