#include "tropocat/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "tropocat/error.hpp"

namespace tropocat {

namespace {

using Cells = std::vector<std::int64_t>;

struct Search {
  const StableGraph& g;
  const std::vector<std::int64_t>& color;
  std::vector<std::vector<std::pair<std::int64_t, std::size_t>>> neighbours;  // (edge colour, vertex)
  std::vector<std::int64_t> best_code;
  std::vector<std::vector<std::size_t>> best_leaves;

  Search(const StableGraph& graph, const std::vector<std::int64_t>& colors)
      : g(graph), color(colors), neighbours(graph.vertex_count()) {
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const auto [a, b] = g.edges()[k];
      if (a == b) continue;
      neighbours[a].emplace_back(color[k], b);
      neighbours[b].emplace_back(color[k], a);
    }
  }

  Cells initial() const {
    const std::size_t V = g.vertex_count();
    std::vector<std::vector<std::int64_t>> loops(V);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      if (g.is_loop(k)) loops[g.edges()[k].first].push_back(color[k]);
    }
    const auto val = g.valences();
    using Sig = std::tuple<std::int64_t, std::vector<std::int64_t>, std::size_t>;
    std::vector<Sig> sig(V);
    for (std::size_t v = 0; v < V; ++v) {
      std::sort(loops[v].begin(), loops[v].end());
      sig[v] = Sig(g.weights()[v], loops[v], val[v]);
    }
    return rank(sig);
  }

  template <typename Sig>
  static Cells rank(const std::vector<Sig>& sig) {
    std::vector<Sig> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Cells out(sig.size());
    for (std::size_t v = 0; v < sig.size(); ++v) {
      out[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
    }
    return out;
  }

  static std::size_t distinct(const Cells& c) {
    return std::set<std::int64_t>(c.begin(), c.end()).size();
  }

  Cells refine(Cells cells) const {
    using Sig = std::pair<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>>;
    std::size_t count = distinct(cells);
    while (true) {
      std::vector<Sig> sig(cells.size());
      for (std::size_t v = 0; v < cells.size(); ++v) {
        sig[v].first = cells[v];
        for (const auto& [c, w] : neighbours[v]) sig[v].second.emplace_back(c, cells[w]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      Cells next = rank(sig);
      const std::size_t n = distinct(next);
      cells = std::move(next);
      if (n == count) return cells;
      count = n;
    }
  }

  std::vector<std::int64_t> code(const std::vector<std::size_t>& pos) const {
    std::vector<std::int64_t> out(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out[pos[v]] = g.weights()[v];
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> edges;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      auto a = pos[g.edges()[k].first], b = pos[g.edges()[k].second];
      edges.emplace_back(std::min(a, b), std::max(a, b), color[k]);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b, c] : edges) {
      out.push_back(static_cast<std::int64_t>(a));
      out.push_back(static_cast<std::int64_t>(b));
      out.push_back(c);
    }
    return out;
  }

  void run(const Cells& cells) {
    const std::size_t V = cells.size();
    if (distinct(cells) == V) {
      std::vector<std::size_t> pos(V);
      for (std::size_t v = 0; v < V; ++v) pos[v] = static_cast<std::size_t>(cells[v]);
      auto c = code(pos);
      if (best_leaves.empty() || c < best_code) {
        best_code = std::move(c);
        best_leaves.assign(1, pos);
      } else if (c == best_code) {
        best_leaves.push_back(pos);
      }
      return;
    }
    // First non-singleton cell.
    std::map<std::int64_t, std::size_t> size;
    for (auto c : cells) ++size[c];
    std::int64_t target = 0;
    for (const auto& [c, n] : size) {
      if (n > 1) {
        target = c;
        break;
      }
    }
    for (std::size_t v = 0; v < V; ++v) {
      if (cells[v] != target) continue;
      Cells next(V);
      for (std::size_t w = 0; w < V; ++w) next[w] = 2 * cells[w] + 1;
      next[v] = 2 * cells[v];
      run(refine(std::move(next)));
    }
  }
};

using EdgeKey = std::tuple<std::size_t, std::size_t, std::int64_t>;

}  // namespace

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

CanonicalForm canonical_form(const StableGraph& g, const std::vector<std::int64_t>& edge_colors) {
  if (!edge_colors.empty() && edge_colors.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "one colour per edge required");
  }
  const std::vector<std::int64_t> colors =
      edge_colors.empty() ? std::vector<std::int64_t>(g.edge_count(), 0) : edge_colors;
  const std::size_t V = g.vertex_count(), E = g.edge_count();

  CanonicalForm out;
  if (V == 0) {
    out.graph = g;
    return out;
  }
  Search search(g, colors);
  search.run(search.refine(search.initial()));
  const auto& pos = search.best_leaves.front();

  // Canonical edge order: (smaller end, larger end, colour), ties by input order.
  std::vector<EdgeKey> key(E);
  for (std::size_t k = 0; k < E; ++k) {
    auto a = pos[g.edges()[k].first], b = pos[g.edges()[k].second];
    key[k] = EdgeKey(std::min(a, b), std::max(a, b), colors[k]);
  }
  std::vector<std::size_t> order(E);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return key[x] < key[y]; });

  out.vertex_map = pos;
  out.edge_map.assign(E, 0);
  out.edge_flip.assign(E, false);
  out.edge_colors.assign(E, 0);
  std::vector<StableGraph::Edge> edges(E);
  for (std::size_t i = 0; i < E; ++i) {
    const std::size_t k = order[i];
    out.edge_map[k] = i;
    out.edge_colors[i] = colors[k];
    edges[i] = {std::get<0>(key[k]), std::get<1>(key[k])};
    out.edge_flip[k] = pos[g.edges()[k].first] != std::get<0>(key[k]);
  }
  std::vector<StableGraph::Element> weights(V);
  for (std::size_t v = 0; v < V; ++v) weights[pos[v]] = g.weights()[v];
  out.graph = StableGraph(std::move(weights), std::move(edges));

  // Automorphisms of the canonical graph.
  const auto& cg = out.graph;
  auto& aut = out.automorphisms;
  std::map<EdgeKey, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < E; ++i) {
    classes[EdgeKey(cg.edges()[i].first, cg.edges()[i].second, out.edge_colors[i])].push_back(i);
  }
  auto half = [&](std::size_t e, std::size_t side) { return V + 2 * e + side; };
  auto identity = [&] {
    std::vector<std::size_t> p(V + 2 * E);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };

  std::set<std::vector<std::size_t>> vertex_perms;
  for (const auto& leaf : search.best_leaves) {
    std::vector<std::size_t> tau(V);
    for (std::size_t v = 0; v < V; ++v) tau[pos[v]] = leaf[v];
    vertex_perms.insert(tau);
  }
  for (const auto& tau : vertex_perms) {
    bool trivial = true;
    for (std::size_t v = 0; v < V; ++v) trivial = trivial && tau[v] == v;
    if (trivial) continue;
    std::vector<std::size_t> edge_perm(E);
    std::map<EdgeKey, std::size_t> used;
    auto perm = identity();
    for (std::size_t v = 0; v < V; ++v) perm[v] = tau[v];
    for (const auto& [k, members] : classes) {
      const auto [a, b, c] = k;
      const EdgeKey image(std::min(tau[a], tau[b]), std::max(tau[a], tau[b]), c);
      const auto& targets = classes.at(image);
      for (std::size_t j = 0; j < members.size(); ++j) {
        const std::size_t from = members[j], to = targets[j];
        edge_perm[from] = to;
        const bool flip = a != b && tau[a] != cg.edges()[to].first;
        perm[half(from, 0)] = half(to, flip ? 1 : 0);
        perm[half(from, 1)] = half(to, flip ? 0 : 1);
      }
    }
    aut.generators.push_back(std::move(perm));
    aut.parities.push_back(permutation_sign(edge_perm));
  }
  for (const auto& [k, members] : classes) {
    for (std::size_t j = 0; j + 1 < members.size(); ++j) {
      auto perm = identity();
      const std::size_t x = members[j], y = members[j + 1];
      for (std::size_t side = 0; side < 2; ++side) {
        perm[half(x, side)] = half(y, side);
        perm[half(y, side)] = half(x, side);
      }
      aut.generators.push_back(std::move(perm));
      aut.parities.push_back(-1);
    }
    if (std::get<0>(k) == std::get<1>(k)) {
      for (auto x : members) {
        auto perm = identity();
        std::swap(perm[half(x, 0)], perm[half(x, 1)]);
        aut.generators.push_back(std::move(perm));
        aut.parities.push_back(1);
      }
    }
  }
  aut.has_odd = std::find(aut.parities.begin(), aut.parities.end(), -1) != aut.parities.end();
  return out;
}

StableGraph canonical_graph(const StableGraph& g) { return canonical_form(g).graph; }

bool is_isomorphic(const StableGraph& a, const StableGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

bool canonical_less(const StableGraph& a, const StableGraph& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  return a < b;
}

}  // namespace tropocat
