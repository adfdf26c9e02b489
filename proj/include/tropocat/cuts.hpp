#pragma once

#include <cstddef>
#include <vector>

#include "tropocat/monoid.hpp"
#include "tropocat/rational.hpp"
#include "tropocat/stable_graph.hpp"
#include "tropocat/weighted_cospan.hpp"

namespace tropocat {

/// ∅ -> M_0 -> … -> M_n -> ∅ as the pieces W_0 .. W_{n+1}.
struct FactorizationChain {
  std::vector<WeightedCospan> pieces;

  std::size_t cut_count() const { return pieces.empty() ? 0 : pieces.size() - 1; }
  /// |M_i|.
  std::size_t cut_size(std::size_t i) const { return pieces.at(i).right_size(); }

  /// Throws InvalidChain unless the pieces compose, start and end at ∅, carry
  /// valid stable labels, there is at least one cut, and the composite is a
  /// single closed class.
  void validate(const WeightingMonoid& monoid) const;
  WeightedCospan composite(const WeightingMonoid& monoid) const;
  /// Removes M_i by composing W_i and W_{i+1}; needs at least two cuts.
  FactorizationChain face(std::size_t i, const WeightingMonoid& monoid) const;
};

/// A point where edge k crosses cut `level`, as element `index` of that cut.
struct CutMark {
  std::size_t level = 0;
  std::size_t index = 0;
};

/// Nested cuts of a graph given combinatorially. Regions are 0..levels, cut
/// i separating region i from region i+1. Each vertex lies in a region and
/// each edge lists its marks in order from its first endpoint to its second.
struct GraphCuts {
  std::size_t levels = 0;
  std::vector<std::size_t> vertex_region;
  std::vector<std::vector<CutMark>> marks;
};

/// The chain whose i-th object is the i-th cut and whose pieces are the
/// regions between consecutive cuts, each component labelled by its genus.
/// Throws EmptyCut for a cut with no points, NotNested when an edge does not
/// step between adjacent regions consistently, InvalidArgument on malformed
/// indices.
FactorizationChain cut_to_factorization(const StableGraph& g, const GraphCuts& cuts,
                                        const WeightingMonoid& monoid = WeightingMonoid::nat_stable());

/// Edge lengths Σ t_i / |M_i| over the marks of each edge.
std::vector<Rational> induced_metric(const StableGraph& g, const GraphCuts& cuts,
                                     const std::vector<Rational>& t);

}  // namespace tropocat
