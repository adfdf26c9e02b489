#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropocat/chain_complex.hpp"
#include "tropocat/enumerate.hpp"
#include "tropocat/stable_graph.hpp"

namespace tropocat {

/// A J_g graph with its edge-ordering sign data. The reference ordering is
/// the canonical edge order unless a reference seed was requested.
struct GeneratorCell {
  StableGraph graph;
  int degree = 0;  // |E| - 1
  /// Some automorphism permutes the edges oddly; such cells vanish.
  bool degenerate = false;
};

struct DeltaComplex {
  std::int64_t genus = 0;
  ChainComplex complex;
  /// basis[k] spans degree complex.min_degree + k; degree -1 holds the empty
  /// generator, represented by the edgeless vertex of weight g.
  std::vector<std::vector<StableGraph>> basis;
  /// reference[k][i][j] is the canonical edge in position j of the ordering
  /// fixed for basis[k][i].
  std::vector<std::vector<std::vector<std::size_t>>> reference;
};

struct DeltaOptions {
  EnumerationStrategy strategy = EnumerationStrategy::ContractionClosure;
  /// When set, every basis graph gets a pseudo-random reference ordering
  /// drawn from this seed instead of the canonical one.
  std::optional<std::uint64_t> reference_seed;
};

/// Every J_g graph with its degenerate flag, sorted by canonical_less.
std::vector<GeneratorCell> generator_cells(std::int64_t g, const Budget& budget = Budget::unlimited());

/// Reduced simplicial chains of Δ_g in degrees -1 .. 3g-4. The basis in
/// degree p consists of the non-degenerate cells with p+1 edges and
/// ∂(G, ω) = Σ_i (-1)^i (G/e_i, induced ordering), each term rewritten to the
/// target's reference ordering with the sign of the reordering and dropped
/// when the target is degenerate. One-edge graphs map to the empty generator.
DeltaComplex build_complex(std::int64_t g, const Budget& budget = Budget::unlimited(),
                           const DeltaOptions& options = {});

/// Betti numbers of H̃_*(Δ_g; ℚ) in degrees -1 .. 3g-4.
std::vector<HomologyRow> reduced_homology(std::int64_t g, const Budget& budget = Budget::unlimited());

/// Σ (-1)^p dim C_p including the augmentation degree.
std::int64_t delta_euler_characteristic(std::int64_t g, const Budget& budget = Budget::unlimited());

}  // namespace tropocat
