#include "tropocat/tropical_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropocat/canonical.hpp"
#include "tropocat/error.hpp"

namespace tropocat {

std::vector<GeneratorCell> generator_cells(std::int64_t g, const Budget& budget) {
  const auto graphs = enumerate_Jg(g, WeightingMonoid::nat_stable(),
                                   EnumerationStrategy::ContractionClosure, budget);
  std::vector<GeneratorCell> cells(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    cells[i].graph = graphs[i];
    cells[i].degree = static_cast<int>(graphs[i].edge_count()) - 1;
    cells[i].degenerate = canonical_form(graphs[i]).automorphisms.has_odd;
  });
  return cells;
}

DeltaComplex build_complex(std::int64_t g, const Budget& budget, const DeltaOptions& options) {
  const WeightingMonoid m = WeightingMonoid::nat_stable();
  const auto graphs = enumerate_Jg(g, m, options.strategy, budget);
  const int top = static_cast<int>(3 * g - 4);

  DeltaComplex out;
  out.genus = g;
  out.complex.min_degree = -1;
  out.basis.assign(static_cast<std::size_t>(top + 2), {});
  out.reference.assign(out.basis.size(), {});
  out.basis[0].push_back(StableGraph({g}, {}));
  out.reference[0].push_back({});

  std::vector<char> degenerate(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    degenerate[i] = canonical_form(graphs[i]).automorphisms.has_odd;
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (degenerate[i]) continue;
    const std::size_t k = graphs[i].edge_count();  // degree k - 1 sits at index k
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    if (options.reference_seed) {
      Rng rng = Rng::for_trial(*options.reference_seed, i);
      for (std::size_t j = k; j > 1; --j) std::swap(order[j - 1], order[rng.below(j)]);
    }
    out.basis[k].push_back(graphs[i]);
    out.reference[k].push_back(std::move(order));
  }

  // Row lookup and reference positions per degree.
  std::vector<std::map<StableGraph, std::size_t>> index(out.basis.size());
  for (std::size_t k = 0; k < out.basis.size(); ++k) {
    for (std::size_t i = 0; i < out.basis[k].size(); ++i) index[k][out.basis[k][i]] = i;
  }

  out.complex.dims.resize(out.basis.size());
  out.complex.boundaries.resize(out.basis.size());
  for (std::size_t k = 0; k < out.basis.size(); ++k) out.complex.dims[k] = out.basis[k].size();
  out.complex.boundaries[0] = SparseRationalMatrix(0, out.basis[0].size(), {});

  for (std::size_t k = 1; k < out.basis.size(); ++k) {
    const auto& sources = out.basis[k];
    std::vector<std::vector<SparseRationalMatrix::Entry>> columns(sources.size());
    parallel_for(sources.size(), [&](std::size_t col) {
      budget.check("boundary");
      const StableGraph& G = sources[col];
      const auto& ref = out.reference[k][col];
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const int face_sign = i % 2 == 0 ? 1 : -1;
        if (k == 1) {
          columns[col].push_back({0, col, face_sign});
          continue;
        }
        const std::size_t e = ref[i];
        const auto contracted = contract_edge(G, e, m);
        const auto cf = canonical_form(contracted);
        if (cf.automorphisms.has_odd) continue;
        const auto it = index[k - 1].find(cf.graph);
        if (it == index[k - 1].end()) {
          throw Error(ErrorCode::InvalidArgument, "contraction left the generator set");
        }
        const auto& target_ref = out.reference[k - 1][it->second];
        std::vector<std::size_t> position(target_ref.size());
        for (std::size_t j = 0; j < target_ref.size(); ++j) position[target_ref[j]] = j;
        std::vector<std::size_t> perm;
        for (std::size_t j = 0; j < ref.size(); ++j) {
          if (j == i) continue;
          const std::size_t old_edge = ref[j];
          const std::size_t shifted = old_edge < e ? old_edge : old_edge - 1;
          perm.push_back(position[cf.edge_map[shifted]]);
        }
        columns[col].push_back({it->second, col, face_sign * permutation_sign(perm)});
      }
    });
    std::vector<SparseRationalMatrix::Entry> entries;
    for (auto& c : columns) {
      for (auto& e : c) entries.push_back(std::move(e));
    }
    out.complex.boundaries[k] =
        SparseRationalMatrix(out.basis[k - 1].size(), sources.size(), std::move(entries));
  }
  out.complex.validate();
  return out;
}

std::vector<HomologyRow> reduced_homology(std::int64_t g, const Budget& budget) {
  return build_complex(g, budget).complex.homology(budget);
}

std::int64_t delta_euler_characteristic(std::int64_t g, const Budget& budget) {
  return build_complex(g, budget).complex.euler_characteristic();
}

}  // namespace tropocat
