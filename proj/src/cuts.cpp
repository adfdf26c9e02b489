#include "tropocat/cuts.hpp"

#include <numeric>

#include "tropocat/error.hpp"

namespace tropocat {

void FactorizationChain::validate(const WeightingMonoid& monoid) const {
  if (pieces.size() < 2) throw Error(ErrorCode::InvalidChain, "a chain needs at least one cut");
  if (pieces.front().left_size() != 0 || pieces.back().right_size() != 0) {
    throw Error(ErrorCode::InvalidChain, "a chain starts and ends at the empty set");
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!has_valid_labels(pieces[i], monoid) || !is_stable(pieces[i], monoid)) {
      throw Error(ErrorCode::InvalidChain, "piece " + std::to_string(i) + " is not stable");
    }
    if (i + 1 < pieces.size() && pieces[i].right_size() != pieces[i + 1].left_size()) {
      throw Error(ErrorCode::InvalidChain, "pieces " + std::to_string(i) + " and " +
                                               std::to_string(i + 1) + " do not compose");
    }
  }
  if (composite(monoid).class_count() != 1) {
    throw Error(ErrorCode::InvalidChain, "the composite is not connected");
  }
}

WeightedCospan FactorizationChain::composite(const WeightingMonoid& monoid) const {
  WeightedCospan acc = pieces.at(0);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (acc.right_size() != pieces[i].left_size()) {
      throw Error(ErrorCode::InvalidChain, "pieces do not compose");
    }
    acc = compose_weighted(acc, pieces[i], monoid);
  }
  return acc;
}

FactorizationChain FactorizationChain::face(std::size_t i, const WeightingMonoid& monoid) const {
  if (cut_count() < 2 || i >= cut_count()) {
    throw Error(ErrorCode::InvalidChain, "face index out of range");
  }
  FactorizationChain out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k == i) {
      out.pieces.push_back(compose_weighted(pieces[k], pieces[k + 1], monoid));
      ++k;
    } else {
      out.pieces.push_back(pieces[k]);
    }
  }
  return out;
}

namespace {

struct Segment {
  std::size_t region;
  std::size_t arcs = 0;  // ends attached to vertices
};

}  // namespace

FactorizationChain cut_to_factorization(const StableGraph& g, const GraphCuts& cuts,
                                        const WeightingMonoid& monoid) {
  const std::size_t V = g.vertex_count(), L = cuts.levels;
  if (L == 0) throw Error(ErrorCode::EmptyCut, "at least one cut is required");
  if (cuts.vertex_region.size() != V || cuts.marks.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "cut data does not match the graph");
  }
  for (auto r : cuts.vertex_region) {
    if (r > L) throw Error(ErrorCode::InvalidArgument, "vertex region out of range");
  }
  std::vector<std::size_t> size(L, 0);
  for (const auto& edge_marks : cuts.marks) {
    for (const auto& m : edge_marks) {
      if (m.level >= L) throw Error(ErrorCode::InvalidArgument, "cut level out of range");
      size[m.level] = std::max(size[m.level], m.index + 1);
    }
  }
  for (std::size_t i = 0; i < L; ++i) {
    if (size[i] == 0) throw Error(ErrorCode::EmptyCut, "cut " + std::to_string(i) + " is empty");
  }

  // Nodes: vertices first, then segments.
  std::vector<Segment> segments;
  std::vector<std::size_t> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  std::vector<std::vector<std::size_t>> below(L), above(L);  // segment node at each mark
  for (std::size_t i = 0; i < L; ++i) {
    below[i].assign(size[i], SIZE_MAX);
    above[i].assign(size[i], SIZE_MAX);
  }
  auto new_segment = [&](std::size_t region) {
    segments.push_back({region});
    parent.push_back(parent.size());
    return parent.size() - 1;
  };

  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto [u, v] = g.edges()[k];
    std::size_t region = cuts.vertex_region[u];
    std::size_t seg = new_segment(region);
    segments.back().arcs = 1;
    unite(seg, u);
    for (const auto& m : cuts.marks[k]) {
      auto& slot_here = m.level == region ? below[m.level] : above[m.level];
      auto& slot_next = m.level == region ? above[m.level] : below[m.level];
      std::size_t next_region;
      if (m.level == region) {
        next_region = region + 1;
      } else if (m.level + 1 == region) {
        next_region = region - 1;
      } else {
        throw Error(ErrorCode::NotNested, "edge " + std::to_string(k) + " skips a cut");
      }
      if (slot_here[m.index] != SIZE_MAX) {
        throw Error(ErrorCode::InvalidArgument, "cut point used twice");
      }
      slot_here[m.index] = seg;
      seg = new_segment(next_region);
      slot_next[m.index] = seg;
      region = next_region;
    }
    if (region != cuts.vertex_region[v]) {
      throw Error(ErrorCode::NotNested,
                  "edge " + std::to_string(k) + " ends in the wrong region");
    }
    segments[seg - V].arcs += 1;
    unite(seg, v);
  }
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < size[i]; ++j) {
      if (below[i][j] == SIZE_MAX) throw Error(ErrorCode::InvalidArgument, "cut point unused");
    }
  }

  auto region_of = [&](std::size_t node) {
    return node < V ? cuts.vertex_region[node] : segments[node - V].region;
  };
  const std::size_t N = parent.size();
  FactorizationChain chain;
  for (std::size_t r = 0; r <= L; ++r) {
    std::vector<std::size_t> cls(N, SIZE_MAX);
    std::vector<std::int64_t> nodes, arcs;
    std::vector<WeightingMonoid::Element> weight;
    for (std::size_t x = 0; x < N; ++x) {
      if (region_of(x) != r) continue;
      const std::size_t root = find(x);
      if (cls[root] == SIZE_MAX) {
        cls[root] = nodes.size();
        nodes.push_back(0);
        arcs.push_back(0);
        weight.push_back(monoid.zero());
      }
      const std::size_t c = cls[root];
      ++nodes[c];
      if (x < V) {
        weight[c] = monoid.add(weight[c], g.weights()[x]);
      } else {
        arcs[c] += static_cast<std::int64_t>(segments[x - V].arcs);
      }
    }
    std::vector<WeightingMonoid::Element> labels(nodes.size());
    for (std::size_t c = 0; c < nodes.size(); ++c) {
      labels[c] = monoid.add(weight[c], monoid.times(monoid.alpha(), arcs[c] - nodes[c] + 1));
    }
    std::vector<std::size_t> lm, rm;
    if (r > 0) {
      for (auto seg : above[r - 1]) lm.push_back(cls[find(seg)]);
    }
    if (r < L) {
      for (auto seg : below[r]) rm.push_back(cls[find(seg)]);
    }
    chain.pieces.emplace_back(lm.size(), rm.size(), std::move(lm), std::move(rm), std::move(labels));
  }
  return chain;
}

std::vector<Rational> induced_metric(const StableGraph& g, const GraphCuts& cuts,
                                     const std::vector<Rational>& t) {
  if (t.size() != cuts.levels) throw Error(ErrorCode::InvalidArgument, "one coordinate per cut");
  std::vector<std::size_t> size(cuts.levels, 0);
  for (const auto& edge_marks : cuts.marks) {
    for (const auto& m : edge_marks) size.at(m.level) += 1;
  }
  std::vector<Rational> lengths(g.edge_count(), 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    for (const auto& m : cuts.marks.at(k)) lengths[k] += t[m.level] / size[m.level];
  }
  return lengths;
}

}  // namespace tropocat
