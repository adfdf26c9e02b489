#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropocat/cuts.hpp"
#include "tropocat/monoid.hpp"
#include "tropocat/rational.hpp"
#include "tropocat/stable_graph.hpp"
#include "tropocat/weighted_cospan.hpp"

namespace tropocat {

/// A point of Δ_g: a stable graph with positive edge lengths summing to 1.
/// Values returned by this module are canonical (see canonical_metric), so
/// equal points compare equal.
struct MetricGraph {
  StableGraph graph;
  std::vector<Rational> lengths;

  bool operator==(const MetricGraph& o) const;
  bool operator<(const MetricGraph& o) const;
};

/// Canonical relabelling with lengths folded into the edge colouring.
MetricGraph canonical_metric(const MetricGraph& m);

/// Contracts zero-length edges, smooths valence-2 weight-0 vertices, rescales
/// to total length 1 and canonicalises. Throws UnstableResidue when the
/// result is not a stable graph with an edge (a bare weight-0 circle
/// included), Disconnected for disconnected input, InvalidArgument for
/// negative or all-zero lengths.
MetricGraph stabilize(const StableGraph& g, const std::vector<Rational>& lengths,
                      const WeightingMonoid& monoid = WeightingMonoid::nat_stable());

/// Weight- and length-preserving isomorphism (inputs are stabilised first).
bool delta_point_eq(const MetricGraph& p, const MetricGraph& q);

/// Nonnegative, summing to 1, with the expected count; InvalidArgument
/// otherwise.
void check_coordinates(const std::vector<Rational>& t, std::size_t expected);

/// One vertex per class of each piece weighted by its label, one edge of
/// length t_i/|M_i| per element of M_i, then stabilize. Throws InvalidChain
/// for an invalid chain or composite genus below 2.
MetricGraph phi(const FactorizationChain& chain, const std::vector<Rational>& t,
                const WeightingMonoid& monoid = WeightingMonoid::nat_stable());

/// A chain G_0 -> … -> G_n in J_g. steps[i] sends each edge of G_i to its
/// image edge in G_{i+1}, or nullopt when the edge is collapsed.
struct JgSimplex {
  std::vector<StableGraph> graphs;
  std::vector<std::vector<std::optional<std::size_t>>> steps;

  std::size_t dimension() const { return graphs.empty() ? 0 : graphs.size() - 1; }
  /// Throws InvalidSimplex unless each step is a contraction of the collapsed
  /// edges followed by an isomorphism matching the edge maps, and every
  /// graph is a stable graph with an edge.
  void validate(const WeightingMonoid& monoid) const;
  /// Drops G_i, composing the adjacent steps; needs dimension >= 1.
  JgSimplex face(std::size_t i) const;
};

/// (G_0, d) with d(e) = Σ_{i <= m_e} t_i/|E(G_i)|, m_e the last index at which
/// e survives, then stabilize.
MetricGraph phi2(const JgSimplex& simplex, const std::vector<Rational>& t,
                 const WeightingMonoid& monoid = WeightingMonoid::nat_stable());

/// A point [(G, d), a, b] of the double suspension; the graph has total
/// length 1 and `genus` records the label of the component it came from.
struct SuspendedPoint {
  MetricGraph point;
  Rational a;
  Rational b;
  WeightingMonoid::Element genus = 0;

  bool operator==(const SuspendedPoint& o) const;
  bool operator<(const SuspendedPoint& o) const;
};

/// M_0 -> M_1 -> … -> M_n as object sizes and the morphisms W_1..W_n.
struct NerveChain {
  std::vector<std::size_t> objects;
  std::vector<WeightedCospan> morphisms;

  /// Throws InvalidChain when sizes or labels do not fit.
  void validate(const WeightingMonoid& monoid) const;
  /// The i-th face: drops M_i, composing across it when 0 < i < n.
  NerveChain face(std::size_t i, const WeightingMonoid& monoid) const;
};

/// Sorted multiset of suspended points, one per closed component U of the
/// glued chain with genus >= 2, with a = t_0 + … + t_{a_U - 1},
/// b = t_{b_U + 1} + … + t_n and the restricted chain sent through phi with
/// (t_{a_U}, …, t_{b_U}) rescaled to total 1. Basepoints (a = 0, b = 0,
/// a + b = 1, or U meeting none of the M_i) are dropped.
std::vector<SuspendedPoint> mu(const NerveChain& chain, const std::vector<Rational>& t,
                               const WeightingMonoid& monoid = WeightingMonoid::nat_stable());

}  // namespace tropocat
