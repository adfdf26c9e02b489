#pragma once

// Random generators and brute-force oracles shared by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "tropocat/canonical.hpp"
#include "tropocat/cuts.hpp"
#include "tropocat/enumerate.hpp"
#include "tropocat/moduli.hpp"
#include "tropocat/parallel.hpp"
#include "tropocat/rational.hpp"
#include "tropocat/stable_graph.hpp"
#include "tropocat/weighted_cospan.hpp"

namespace testsupport {

using namespace tropocat;

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

/// Random vertex and edge renumbering with random edge reversals.
inline StableGraph shuffle(Rng& rng, const StableGraph& g) {
  std::vector<bool> flip(g.edge_count());
  for (std::size_t k = 0; k < flip.size(); ++k) flip[k] = rng.chance(1, 2);
  return relabel(g, random_permutation(rng, g.vertex_count()), random_permutation(rng, g.edge_count()),
                 flip);
}

/// Sorted edge multiset under a vertex map, with edge colours.
inline std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> edge_multiset(
    const StableGraph& g, const std::vector<std::size_t>& pos, const std::vector<std::int64_t>& colors) {
  std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> out;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto a = pos[g.edges()[k].first], b = pos[g.edges()[k].second];
    out.emplace_back(std::min(a, b), std::max(a, b), colors.empty() ? 0 : colors[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Isomorphism by trying every vertex bijection.
inline bool brute_isomorphic(const StableGraph& a, const StableGraph& b,
                             const std::vector<std::int64_t>& ca = {},
                             const std::vector<std::int64_t>& cb = {}) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> id(b.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_multiset(b, id, cb);
  std::vector<std::size_t> pos = id;
  do {
    bool weights_ok = true;
    for (std::size_t v = 0; v < a.vertex_count() && weights_ok; ++v) {
      weights_ok = a.weights()[v] == b.weights()[pos[v]];
    }
    if (weights_ok && edge_multiset(a, pos, ca) == target) return true;
  } while (std::next_permutation(pos.begin(), pos.end()));
  return false;
}

/// Some automorphism permutes edges oddly: searched over all vertex
/// bijections and all edge bijections.
inline bool brute_has_odd_automorphism(const StableGraph& g) {
  const std::size_t V = g.vertex_count(), E = g.edge_count();
  std::vector<std::size_t> sigma(V);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (std::size_t v = 0; v < V && ok; ++v) ok = g.weights()[v] == g.weights()[sigma[v]];
    if (!ok) continue;
    std::vector<std::size_t> pi(E);
    std::iota(pi.begin(), pi.end(), 0);
    do {
      bool hom = true;
      for (std::size_t k = 0; k < E && hom; ++k) {
        const auto [a, b] = g.edges()[k];
        const auto [c, d] = g.edges()[pi[k]];
        hom = (sigma[a] == c && sigma[b] == d) || (sigma[a] == d && sigma[b] == c);
      }
      if (hom && permutation_sign(pi) < 0) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

/// Random multigraph with the given vertex and edge counts and
/// weights in [0, max_weight]; loops allowed. Connected once E >= V - 1.
inline StableGraph random_graph(Rng& rng, std::size_t V, std::size_t E, std::int64_t max_weight) {
  std::vector<StableGraph::Element> w(V);
  for (auto& x : w) x = rng.between(0, max_weight);
  std::vector<StableGraph::Edge> edges;
  for (std::size_t v = 1; v < V && edges.size() < E; ++v) edges.emplace_back(rng.below(v), v);
  while (edges.size() < E) edges.emplace_back(rng.below(V), rng.below(V));
  return StableGraph(std::move(w), std::move(edges));
}

/// Positive rationals summing to 1, with coordinate `zero` (if in range)
/// set to 0.
inline std::vector<Rational> random_coordinates(Rng& rng, std::size_t n, std::size_t zero = SIZE_MAX) {
  std::vector<Rational> t(n);
  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = i == zero ? 0 : static_cast<long>(1 + rng.below(9));
    sum += t[i];
  }
  for (auto& x : t) x /= sum;
  return t;
}

inline std::vector<Rational> without(const std::vector<Rational>& t, std::size_t i) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k != i) out.push_back(t[k]);
  }
  return out;
}

/// J_2 followed by J_3.
inline const std::vector<StableGraph>& small_graphs() {
  static const std::vector<StableGraph> graphs = [] {
    auto m = WeightingMonoid::nat_stable();
    auto a = enumerate_Jg(2, m);
    auto b = enumerate_Jg(3, m);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }();
  return graphs;
}

/// Random nested cuts: `levels` cuts, random vertex regions, and along each
/// edge the shortest walk between its end regions plus an optional detour.
/// Returns nothing usable if some cut stays empty (callers retry).
inline std::optional<GraphCuts> random_cuts(Rng& rng, const StableGraph& g, std::size_t levels) {
  GraphCuts cuts;
  cuts.levels = levels;
  cuts.vertex_region.resize(g.vertex_count());
  for (auto& r : cuts.vertex_region) r = rng.below(levels + 1);
  cuts.marks.resize(g.edge_count());
  std::vector<std::size_t> count(levels, 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    std::size_t region = cuts.vertex_region[g.edges()[k].first];
    const std::size_t end = cuts.vertex_region[g.edges()[k].second];
    std::vector<std::size_t> path;  // levels crossed in order
    if (rng.chance(1, 3)) {
      // Detour: step away and back first.
      if (region < levels && (region == 0 || rng.chance(1, 2))) {
        path.push_back(region);
        path.push_back(region);
      } else if (region > 0) {
        path.push_back(region - 1);
        path.push_back(region - 1);
      }
    }
    for (std::size_t r = region; r < end; ++r) path.push_back(r);
    for (std::size_t r = region; r > end; --r) path.push_back(r - 1);
    for (auto level : path) cuts.marks[k].push_back({level, count[level]++});
  }
  for (auto c : count) {
    if (c == 0) return std::nullopt;
  }
  // Shuffle indices inside each cut.
  std::vector<std::vector<std::size_t>> perm(levels);
  for (std::size_t i = 0; i < levels; ++i) perm[i] = random_permutation(rng, count[i]);
  for (auto& marks : cuts.marks) {
    for (auto& m : marks) m.index = perm[m.level][m.index];
  }
  return cuts;
}

struct CutSample {
  StableGraph graph;
  GraphCuts cuts;
};

inline CutSample random_cut_sample(Rng& rng, std::size_t min_levels = 1, std::size_t max_levels = 3) {
  const auto& graphs = small_graphs();
  while (true) {
    const StableGraph g = shuffle(rng, graphs[rng.below(graphs.size())]);
    const std::size_t levels = min_levels + rng.below(max_levels - min_levels + 1);
    if (auto c = random_cuts(rng, g, levels)) return {g, *c};
  }
}

/// A random chain G_0 -> … -> G_n in J_2 ∪ J_3: each step collapses a random
/// proper subset of edges and then renumbers everything at random.
inline JgSimplex random_simplex(Rng& rng, std::size_t max_steps = 3) {
  const auto m = WeightingMonoid::nat_stable();
  const auto& graphs = small_graphs();
  JgSimplex s;
  StableGraph cur;
  do {
    cur = shuffle(rng, graphs[rng.below(graphs.size())]);
  } while (cur.edge_count() < 2);
  s.graphs.push_back(cur);
  const std::size_t steps = 1 + rng.below(max_steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t E = cur.edge_count();
    std::vector<char> collapse(E, 0);
    std::size_t collapsed = 0;
    if (E > 1) {
      for (std::size_t k = 0; k < E; ++k) {
        if (collapsed + 1 < E && rng.chance(1, 3)) {
          collapse[k] = 1;
          ++collapsed;
        }
      }
    }
    StableGraph next = cur;
    for (std::size_t k = E; k-- > 0;) {
      if (collapse[k]) next = contract_edge(next, k, m);
    }
    const auto vp = random_permutation(rng, next.vertex_count());
    const auto ep = random_permutation(rng, next.edge_count());
    std::vector<bool> flip(next.edge_count());
    for (std::size_t k = 0; k < flip.size(); ++k) flip[k] = rng.chance(1, 2);
    next = relabel(next, vp, ep, flip);
    std::vector<std::optional<std::size_t>> step(E);
    std::size_t survivor = 0;
    for (std::size_t k = 0; k < E; ++k) {
      if (!collapse[k]) step[k] = ep[survivor++];
    }
    s.steps.push_back(std::move(step));
    s.graphs.push_back(next);
    cur = next;
  }
  return s;
}

/// Random composable chain M_0 -> … -> M_n over (ℕ, ℕ≥1, 1) with small end
/// objects so that closed components spanning several pieces are common.
inline NerveChain random_nerve_chain(Rng& rng, std::size_t max_n = 4) {
  NerveChain c;
  const std::size_t n = 1 + rng.below(max_n);
  c.objects.push_back(rng.below(2));
  for (std::size_t i = 1; i < n; ++i) c.objects.push_back(1 + rng.below(3));
  c.objects.push_back(rng.below(2));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t left = c.objects[i], right = c.objects[i + 1];
    const std::size_t feet = left + right;
    std::vector<std::size_t> assign(feet);
    const std::size_t classes = feet == 0 ? 0 : 1 + rng.below(std::min<std::size_t>(feet, 3));
    for (auto& a : assign) a = rng.below(classes);
    std::vector<std::size_t> per(classes, 0);
    for (auto a : assign) ++per[a];
    std::vector<WeightingMonoid::Element> labels;
    for (auto p : per) labels.push_back(p <= 1 ? 1 + rng.below(2) : rng.below(3));
    if (rng.chance(1, 5)) labels.push_back(1 + rng.below(3));  // a closed class
    c.morphisms.emplace_back(left, right,
                             std::vector<std::size_t>(assign.begin(), assign.begin() + left),
                             std::vector<std::size_t>(assign.begin() + left, assign.end()),
                             std::move(labels));
  }
  return c;
}

/// Dense Gaussian elimination over ℚ.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace testsupport
