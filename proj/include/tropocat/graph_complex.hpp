#pragma once

#include <cstdint>
#include <vector>

#include "tropocat/chain_complex.hpp"
#include "tropocat/stable_graph.hpp"

namespace tropocat {

/// Genus-g part of the connected graph complex without tadpoles, graded by
/// edge count, degrees 0 .. 3g-3.
struct GCComplex {
  std::int64_t genus = 0;
  ChainComplex complex;
  /// basis[e] lists the non-degenerate generators with e edges (canonical
  /// edge order is the orientation).
  std::vector<std::vector<StableGraph>> basis;
};

/// Connected loop-free graphs with all valences >= 3 and first Betti number
/// g, weights 0, canonical and sorted; degenerate ones included.
std::vector<StableGraph> gc_graphs(std::int64_t g, const Budget& budget = Budget::unlimited());

/// ∂G = Σ_i (-1)^i G/e_i over edges whose contraction creates no loop, signs
/// by edge-ordering parity, degenerate targets dropped.
GCComplex build_gc(std::int64_t g, const Budget& budget = Budget::unlimited());

/// (edge-degree, Betti) rows for degrees 0 .. 3g-3.
std::vector<HomologyRow> gc_homology(std::int64_t g, const Budget& budget = Budget::unlimited());

}  // namespace tropocat
