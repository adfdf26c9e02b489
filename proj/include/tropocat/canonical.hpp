#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropocat/stable_graph.hpp"

namespace tropocat {

/// Automorphisms of a canonical graph, as permutations of its half-edge
/// carrier (see StableGraph::to_half_edges) together with the sign of the
/// induced permutation of edges.
struct AutomorphismData {
  std::vector<std::vector<std::size_t>> generators;
  std::vector<int> parities;
  /// Some automorphism permutes the edges oddly.
  bool has_odd = false;
};

struct CanonicalForm {
  StableGraph graph;
  /// Edge colours carried over to the canonical edge order.
  std::vector<std::int64_t> edge_colors;
  std::vector<std::size_t> vertex_map;  // input vertex -> canonical vertex
  std::vector<std::size_t> edge_map;    // input edge -> canonical edge
  std::vector<bool> edge_flip;          // input edge stored reversed
  AutomorphismData automorphisms;
};

/// Canonical relabelling. Vertices are ordered by colour refinement on
/// (weight, loops, valence, neighbour multiset) and a full individualisation
/// search picking the least code; edges are then sorted by (endpoints, colour)
/// with each edge stored as (smaller, larger). Optional edge colours must be
/// preserved by isomorphisms (used for metric graphs).
CanonicalForm canonical_form(const StableGraph& g, const std::vector<std::int64_t>& edge_colors = {});

StableGraph canonical_graph(const StableGraph& g);

bool is_isomorphic(const StableGraph& a, const StableGraph& b);

/// +1 or -1.
int permutation_sign(const std::vector<std::size_t>& perm);

/// Order used for every sorted graph list: edge count, vertex count, then
/// weights and edges lexicographically.
bool canonical_less(const StableGraph& a, const StableGraph& b);

}  // namespace tropocat
