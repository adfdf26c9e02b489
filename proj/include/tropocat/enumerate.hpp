#pragma once

#include <cstdint>
#include <vector>

#include "tropocat/monoid.hpp"
#include "tropocat/parallel.hpp"
#include "tropocat/stable_graph.hpp"

namespace tropocat {

enum class EnumerationStrategy {
  /// Multigraphs generated per (vertex count, sorted weight vector), filtered
  /// for stability and deduplicated by canonical form.
  Direct,
  /// Trivalent weight-0 graphs, then closure under edge contraction.
  ContractionClosure,
};

/// All isomorphism classes of connected stable graphs with at least one edge
/// and genus g, canonical and sorted by canonical_less. Only (ℕ, ℕ≥1, 1) is
/// supported (UnsupportedMonoid otherwise); g < 2 is InvalidArgument.
std::vector<StableGraph> enumerate_Jg(std::int64_t g, const WeightingMonoid& monoid,
                                      EnumerationStrategy strategy = EnumerationStrategy::ContractionClosure,
                                      const Budget& budget = Budget::unlimited());

/// Connected trivalent weight-0 graphs of genus g (2g-2 vertices, 3g-3
/// edges), canonical and sorted.
std::vector<StableGraph> trivalent_graphs(std::int64_t g, const Budget& budget = Budget::unlimited());

/// Every contraction of a listed graph with at least two edges is listed
/// (up to isomorphism).
bool closed_under_contraction(const std::vector<StableGraph>& graphs, const WeightingMonoid& monoid);

}  // namespace tropocat
