#include "tropocat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tropocat/canonical.hpp"
#include "tropocat/error.hpp"

namespace tropocat {

namespace {

using Element = StableGraph::Element;

void check_request(std::int64_t g, const WeightingMonoid& monoid) {
  if (monoid.kind() != MonoidKind::NatStable) {
    throw Error(ErrorCode::UnsupportedMonoid,
                "enumeration is restricted to (N, N>=1, 1), got " + monoid.name());
  }
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
}

std::vector<StableGraph> sorted(std::set<StableGraph> graphs) {
  std::vector<StableGraph> out(graphs.begin(), graphs.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Sorted weight vectors of length n summing to total.
void weight_vectors(std::size_t n, Element total, Element floor, std::vector<Element>& cur,
                    std::vector<std::vector<Element>>& out) {
  if (cur.size() == n) {
    if (total == 0) out.push_back(cur);
    return;
  }
  const std::size_t left = n - cur.size();
  for (Element w = floor; w * static_cast<Element>(left) <= total; ++w) {
    cur.push_back(w);
    weight_vectors(n, total - w, w, cur, out);
    cur.pop_back();
  }
}

struct Partition {
  std::size_t vertices;
  std::size_t edges;
  std::vector<Element> weights;
};

// All connected stable multigraphs on the given sorted weights, up to
// isomorphism. Vertex valences are final once every slot (i, j) with
// j >= i has been decided, in lexicographic slot order.
std::set<StableGraph> direct_partition(const Partition& p, const Budget& budget) {
  const std::size_t V = p.vertices;
  std::vector<StableGraph::Edge> slots;
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t j = i; j < V; ++j) slots.emplace_back(i, j);

  std::set<StableGraph> found;
  std::vector<std::size_t> val(V, 0);
  std::vector<StableGraph::Edge> edges;
  auto min_valence = [&](std::size_t v) -> std::size_t { return p.weights[v] == 0 ? 3 : 1; };
  std::size_t visits = 0;

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t remaining) {
    if ((++visits & 0xffff) == 0) budget.check("enumerate");
    if (slot == slots.size()) {
      if (remaining != 0) return;
      StableGraph g(p.weights, edges);
      if (!g.is_connected()) return;
      WeightingMonoid m = WeightingMonoid::nat_stable();
      if (!is_stable(g, m)) return;
      found.insert(canonical_graph(g));
      return;
    }
    const auto [i, j] = slots[slot];
    const bool closes_block = j + 1 == V;  // last slot touching i from row i
    const std::size_t step = i == j ? 2 : 1;
    for (std::size_t count = 0; count <= remaining; ++count) {
      if (count > 0) {
        edges.emplace_back(i, j);
        val[i] += step;
        if (i != j) val[j] += 1;
      }
      bool ok = true;
      if (closes_block) {
        ok = val[i] >= min_valence(i);
        // Within a run of equal weights valences are nonincreasing.
        if (ok && i > 0 && p.weights[i - 1] == p.weights[i] && val[i] > val[i - 1]) ok = false;
      }
      if (ok) rec(slot + 1, remaining - count);
    }
    for (std::size_t count = remaining + 1; count-- > 1;) {
      edges.pop_back();
      val[i] -= step;
      if (i != j) val[j] -= 1;
    }
  };
  rec(0, p.edges);
  return found;
}

std::vector<StableGraph> enumerate_direct(std::int64_t g, const Budget& budget) {
  std::vector<Partition> parts;
  const std::size_t max_v = static_cast<std::size_t>(2 * g - 2);
  const std::size_t max_e = static_cast<std::size_t>(3 * g - 3);
  for (std::size_t V = 1; V <= max_v; ++V) {
    for (std::size_t E = std::max<std::size_t>(1, V - 1); E <= max_e; ++E) {
      const std::int64_t b1 = static_cast<std::int64_t>(E) - static_cast<std::int64_t>(V) + 1;
      if (b1 < 0 || b1 > g) continue;
      std::vector<std::vector<Element>> ws;
      std::vector<Element> cur;
      weight_vectors(V, g - b1, 0, cur, ws);
      for (auto& w : ws) parts.push_back({V, E, std::move(w)});
    }
  }
  std::vector<std::set<StableGraph>> results(parts.size());
  parallel_for(parts.size(), [&](std::size_t i) { results[i] = direct_partition(parts[i], budget); });
  std::set<StableGraph> all;
  for (auto& r : results) all.merge(r);
  return sorted(std::move(all));
}

}  // namespace

std::vector<StableGraph> trivalent_graphs(std::int64_t g, const Budget& budget) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "genus must be at least 2");
  const std::size_t V = static_cast<std::size_t>(2 * g - 2);
  std::vector<std::size_t> free(V, 3);
  std::vector<StableGraph::Edge> edges;
  std::set<StableGraph> found;
  std::size_t visits = 0;

  // The smallest vertex with a free half-edge is matched to some vertex; free
  // half-edges at one vertex are interchangeable and so are untouched vertices,
  // so only the first untouched vertex is tried.
  std::function<void()> rec = [&]() {
    if ((++visits & 0xffff) == 0) budget.check("trivalent");
    std::size_t v = 0;
    while (v < V && free[v] == 0) ++v;
    if (v == V) {
      StableGraph graph(std::vector<Element>(V, 0), edges);
      if (graph.is_connected()) found.insert(canonical_graph(graph));
      return;
    }
    bool tried_fresh = false;
    for (std::size_t w = v; w < V; ++w) {
      if (w == v ? free[v] < 2 : free[w] == 0) continue;
      if (w != v && free[w] == 3) {
        if (tried_fresh) continue;
        tried_fresh = true;
      }
      --free[v];
      --free[w];
      edges.emplace_back(v, w);
      rec();
      edges.pop_back();
      ++free[v];
      ++free[w];
    }
  };
  rec();
  return sorted(std::move(found));
}

namespace {

std::vector<StableGraph> enumerate_closure(std::int64_t g, const Budget& budget) {
  const WeightingMonoid m = WeightingMonoid::nat_stable();
  std::set<StableGraph> all;
  std::vector<StableGraph> level = trivalent_graphs(g, budget);
  while (!level.empty()) {
    for (const auto& G : level) all.insert(G);
    if (level.front().edge_count() < 2) break;
    std::vector<std::set<StableGraph>> next(level.size());
    parallel_for(level.size(), [&](std::size_t i) {
      budget.check("contraction closure");
      const auto& G = level[i];
      for (std::size_t e = 0; e < G.edge_count(); ++e) {
        next[i].insert(canonical_graph(contract_edge(G, e, m)));
      }
    });
    std::set<StableGraph> merged;
    for (auto& s : next) merged.merge(s);
    level = sorted(std::move(merged));
  }
  return sorted(std::move(all));
}

}  // namespace

std::vector<StableGraph> enumerate_Jg(std::int64_t g, const WeightingMonoid& monoid,
                                      EnumerationStrategy strategy, const Budget& budget) {
  check_request(g, monoid);
  return strategy == EnumerationStrategy::Direct ? enumerate_direct(g, budget)
                                                 : enumerate_closure(g, budget);
}

bool closed_under_contraction(const std::vector<StableGraph>& graphs, const WeightingMonoid& monoid) {
  std::set<StableGraph> known;
  for (const auto& G : graphs) known.insert(canonical_graph(G));
  for (const auto& G : graphs) {
    if (G.edge_count() < 2) continue;
    for (std::size_t e = 0; e < G.edge_count(); ++e) {
      if (!known.count(canonical_graph(contract_edge(G, e, monoid)))) return false;
    }
  }
  return true;
}

}  // namespace tropocat
