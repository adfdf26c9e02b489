#include "tropocat/graph_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tropocat/canonical.hpp"
#include "tropocat/error.hpp"
#include "tropocat/parallel.hpp"

namespace tropocat {

namespace {

std::set<StableGraph> graphs_on(std::size_t V, std::size_t E, const Budget& budget) {
  std::vector<StableGraph::Edge> slots;
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t j = i + 1; j < V; ++j) slots.emplace_back(i, j);
  std::set<StableGraph> found;
  std::vector<std::size_t> val(V, 0);
  std::vector<StableGraph::Edge> edges;
  std::size_t visits = 0;
  auto row_done = [&](std::size_t i) {
    return val[i] >= 3 && (i == 0 || val[i] <= val[i - 1]);
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t remaining) {
    if ((++visits & 0xffff) == 0) budget.check("graph complex generators");
    if (slot == slots.size()) {
      if (remaining != 0 || !row_done(V - 1)) return;
      StableGraph g(std::vector<StableGraph::Element>(V, 0), edges);
      if (g.is_connected()) found.insert(canonical_graph(g));
      return;
    }
    const auto [i, j] = slots[slot];
    const bool closes_row = j + 1 == V;
    for (std::size_t count = 0; count <= remaining; ++count) {
      if (count > 0) {
        edges.emplace_back(i, j);
        ++val[i];
        ++val[j];
      }
      if (!closes_row || row_done(i)) rec(slot + 1, remaining - count);
    }
    for (std::size_t count = 0; count < remaining; ++count) {
      edges.pop_back();
      --val[i];
      --val[j];
    }
  };
  rec(0, E);
  return found;
}

}  // namespace

std::vector<StableGraph> gc_graphs(std::int64_t g, const Budget& budget) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
  std::vector<std::size_t> sizes;
  for (std::size_t V = 2; V <= static_cast<std::size_t>(2 * g - 2); ++V) sizes.push_back(V);
  std::vector<std::set<StableGraph>> parts(sizes.size());
  parallel_for(sizes.size(), [&](std::size_t k) {
    const std::size_t V = sizes[k];
    parts[k] = graphs_on(V, V + static_cast<std::size_t>(g) - 1, budget);
  });
  std::vector<StableGraph> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

GCComplex build_gc(std::int64_t g, const Budget& budget) {
  const auto graphs = gc_graphs(g, budget);
  const std::size_t top = static_cast<std::size_t>(3 * g - 3);
  GCComplex out;
  out.genus = g;
  out.basis.assign(top + 1, {});
  std::vector<char> degenerate(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    degenerate[i] = canonical_form(graphs[i]).automorphisms.has_odd;
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!degenerate[i]) out.basis[graphs[i].edge_count()].push_back(graphs[i]);
  }
  std::vector<std::map<StableGraph, std::size_t>> index(top + 1);
  for (std::size_t e = 0; e <= top; ++e) {
    for (std::size_t i = 0; i < out.basis[e].size(); ++i) index[e][out.basis[e][i]] = i;
  }

  const WeightingMonoid trivial = WeightingMonoid::trivial();
  out.complex.min_degree = 0;
  out.complex.dims.resize(top + 1);
  out.complex.boundaries.resize(top + 1);
  for (std::size_t e = 0; e <= top; ++e) out.complex.dims[e] = out.basis[e].size();
  out.complex.boundaries[0] = SparseRationalMatrix(0, out.basis[0].size(), {});
  for (std::size_t e = 1; e <= top; ++e) {
    const auto& sources = out.basis[e];
    std::vector<std::vector<SparseRationalMatrix::Entry>> columns(sources.size());
    parallel_for(sources.size(), [&](std::size_t col) {
      budget.check("graph complex differential");
      const StableGraph& G = sources[col];
      for (std::size_t i = 0; i < G.edge_count(); ++i) {
        bool parallel = false;
        for (std::size_t j = 0; j < G.edge_count(); ++j) {
          if (j != i && G.edges()[j] == G.edges()[i]) parallel = true;
        }
        if (parallel) continue;  // would create a tadpole
        const auto cf = canonical_form(contract_edge(G, i, trivial));
        if (cf.automorphisms.has_odd) continue;
        const auto it = index[e - 1].find(cf.graph);
        if (it == index[e - 1].end()) {
          throw Error(ErrorCode::InvalidArgument, "contraction left the generator set");
        }
        std::vector<std::size_t> perm;
        for (std::size_t j = 0; j < G.edge_count(); ++j) {
          if (j != i) perm.push_back(cf.edge_map[j < i ? j : j - 1]);
        }
        const int sign = (i % 2 == 0 ? 1 : -1) * permutation_sign(perm);
        columns[col].push_back({it->second, col, sign});
      }
    });
    std::vector<SparseRationalMatrix::Entry> entries;
    for (auto& c : columns) {
      for (auto& x : c) entries.push_back(std::move(x));
    }
    out.complex.boundaries[e] =
        SparseRationalMatrix(out.basis[e - 1].size(), sources.size(), std::move(entries));
  }
  out.complex.validate();
  return out;
}

std::vector<HomologyRow> gc_homology(std::int64_t g, const Budget& budget) {
  return build_gc(g, budget).complex.homology(budget);
}

}  // namespace tropocat
