#include "tropocat/moduli.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropocat/canonical.hpp"
#include "tropocat/error.hpp"

namespace tropocat {

bool MetricGraph::operator==(const MetricGraph& o) const {
  return graph == o.graph && lengths == o.lengths;
}

bool MetricGraph::operator<(const MetricGraph& o) const {
  if (!(graph == o.graph)) return canonical_less(graph, o.graph);
  return std::lexicographical_compare(lengths.begin(), lengths.end(), o.lengths.begin(),
                                      o.lengths.end());
}

MetricGraph canonical_metric(const MetricGraph& m) {
  if (m.lengths.size() != m.graph.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "one length per edge required");
  }
  std::vector<Rational> distinct = m.lengths;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::int64_t> colors(m.lengths.size());
  for (std::size_t k = 0; k < colors.size(); ++k) {
    colors[k] = std::lower_bound(distinct.begin(), distinct.end(), m.lengths[k]) - distinct.begin();
  }
  const auto cf = canonical_form(m.graph, colors);
  MetricGraph out{cf.graph, {}};
  for (auto c : cf.edge_colors) out.lengths.push_back(distinct[static_cast<std::size_t>(c)]);
  return out;
}

MetricGraph stabilize(const StableGraph& g, const std::vector<Rational>& lengths,
                      const WeightingMonoid& monoid) {
  if (lengths.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "one length per edge required");
  }
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "metric graph is not connected");
  Rational total = 0;
  for (const auto& l : lengths) {
    if (l < 0) throw Error(ErrorCode::InvalidArgument, "negative edge length");
    total += l;
  }
  if (total == 0) throw Error(ErrorCode::InvalidArgument, "total length is zero");

  StableGraph cur = g;
  std::vector<Rational> len = lengths;
  for (std::size_t k = len.size(); k-- > 0;) {
    if (len[k] == 0) {
      cur = contract_edge(cur, k, monoid);
      len.erase(len.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  while (true) {
    const auto val = cur.valences();
    std::size_t v = 0;
    while (v < cur.vertex_count() && !(val[v] == 2 && cur.weights()[v] == monoid.zero())) ++v;
    if (v == cur.vertex_count()) break;
    std::vector<std::size_t> incident;
    for (std::size_t k = 0; k < cur.edge_count(); ++k) {
      const auto [a, b] = cur.edges()[k];
      if (a == v || b == v) incident.push_back(k);
    }
    if (incident.size() == 1) {
      throw Error(ErrorCode::UnstableResidue, "smoothing leaves a weightless circle");
    }
    auto other = [&](std::size_t k) {
      const auto [a, b] = cur.edges()[k];
      return a == v ? b : a;
    };
    auto shift = [&](std::size_t w) { return w > v ? w - 1 : w; };
    const std::size_t e1 = incident[0], e2 = incident[1];
    std::vector<StableGraph::Element> weights;
    for (std::size_t w = 0; w < cur.vertex_count(); ++w) {
      if (w != v) weights.push_back(cur.weights()[w]);
    }
    std::vector<StableGraph::Edge> edges;
    std::vector<Rational> next_len;
    for (std::size_t k = 0; k < cur.edge_count(); ++k) {
      if (k == e1 || k == e2) continue;
      edges.emplace_back(shift(cur.edges()[k].first), shift(cur.edges()[k].second));
      next_len.push_back(len[k]);
    }
    edges.emplace_back(shift(other(e1)), shift(other(e2)));
    next_len.push_back(len[e1] + len[e2]);
    cur = StableGraph(std::move(weights), std::move(edges));
    len = std::move(next_len);
  }
  if (cur.edge_count() == 0 || !is_stable(cur, monoid)) {
    throw Error(ErrorCode::UnstableResidue, "stabilisation leaves an unstable graph");
  }
  for (auto& l : len) l /= total;
  return canonical_metric(MetricGraph{std::move(cur), std::move(len)});
}

bool delta_point_eq(const MetricGraph& p, const MetricGraph& q) {
  return stabilize(p.graph, p.lengths) == stabilize(q.graph, q.lengths);
}

void check_coordinates(const std::vector<Rational>& t, std::size_t expected) {
  if (t.size() != expected) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(expected) +
                                                " coordinates, got " + std::to_string(t.size()));
  }
  Rational sum = 0;
  for (const auto& x : t) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative coordinate");
    sum += x;
  }
  if (sum != 1) throw Error(ErrorCode::InvalidArgument, "coordinates must sum to 1");
}

MetricGraph phi(const FactorizationChain& chain, const std::vector<Rational>& t,
                const WeightingMonoid& monoid) {
  chain.validate(monoid);
  check_coordinates(t, chain.cut_count());
  if (chain.composite(monoid).labels().front() < 2) {
    throw Error(ErrorCode::InvalidChain, "composite genus is below 2");
  }
  std::vector<std::size_t> offset(chain.pieces.size() + 1, 0);
  std::vector<StableGraph::Element> weights;
  for (std::size_t r = 0; r < chain.pieces.size(); ++r) {
    offset[r + 1] = offset[r] + chain.pieces[r].class_count();
    for (auto l : chain.pieces[r].labels()) weights.push_back(l);
  }
  std::vector<StableGraph::Edge> edges;
  std::vector<Rational> lengths;
  for (std::size_t i = 0; i < chain.cut_count(); ++i) {
    const auto& lower = chain.pieces[i];
    const auto& upper = chain.pieces[i + 1];
    const std::size_t n = chain.cut_size(i);
    for (std::size_t j = 0; j < n; ++j) {
      edges.emplace_back(offset[i] + lower.right_map()[j], offset[i + 1] + upper.left_map()[j]);
      lengths.push_back(t[i] / static_cast<long>(n));
    }
  }
  return stabilize(StableGraph(std::move(weights), std::move(edges)), lengths, monoid);
}

void JgSimplex::validate(const WeightingMonoid& monoid) const {
  if (graphs.empty()) throw Error(ErrorCode::InvalidSimplex, "a simplex needs a graph");
  if (steps.size() + 1 != graphs.size()) {
    throw Error(ErrorCode::InvalidSimplex, "one step between consecutive graphs required");
  }
  const auto g0 = genus(graphs[0], monoid);
  for (const auto& G : graphs) {
    if (G.edge_count() == 0 || !is_stable(G, monoid) || genus(G, monoid) != g0) {
      throw Error(ErrorCode::InvalidSimplex, "graphs must be stable of one genus with an edge");
    }
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& from = graphs[i];
    const auto& to = graphs[i + 1];
    const auto& step = steps[i];
    if (step.size() != from.edge_count()) {
      throw Error(ErrorCode::InvalidSimplex, "step " + std::to_string(i) + " has the wrong size");
    }
    std::vector<char> hit(to.edge_count(), 0);
    for (const auto& img : step) {
      if (!img) continue;
      if (*img >= to.edge_count() || hit[*img]) {
        throw Error(ErrorCode::InvalidSimplex, "step " + std::to_string(i) + " is not a bijection");
      }
      hit[*img] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      throw Error(ErrorCode::InvalidSimplex, "step " + std::to_string(i) + " misses an edge");
    }
    StableGraph contracted = from;
    for (std::size_t k = step.size(); k-- > 0;) {
      if (!step[k]) contracted = contract_edge(contracted, k, monoid);
    }
    std::vector<std::int64_t> colors;
    for (const auto& img : step) {
      if (img) colors.push_back(static_cast<std::int64_t>(*img));
    }
    std::vector<std::int64_t> own(to.edge_count());
    std::iota(own.begin(), own.end(), 0);
    const auto a = canonical_form(contracted, colors);
    const auto b = canonical_form(to, own);
    if (!(a.graph == b.graph) || a.edge_colors != b.edge_colors) {
      throw Error(ErrorCode::InvalidSimplex,
                  "step " + std::to_string(i) + " is not a contraction followed by an isomorphism");
    }
  }
}

JgSimplex JgSimplex::face(std::size_t i) const {
  const std::size_t n = dimension();
  if (n == 0 || i > n) throw Error(ErrorCode::InvalidSimplex, "face index out of range");
  JgSimplex out;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k != i) out.graphs.push_back(graphs[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (i == 0 && k == 0) continue;
    if (i == n && k == n - 1) continue;
    if (i > 0 && i < n && k == i) continue;
    if (i > 0 && i < n && k == i - 1) {
      std::vector<std::optional<std::size_t>> composed;
      for (const auto& img : steps[i - 1]) {
        composed.push_back(img ? steps[i][*img] : std::nullopt);
      }
      out.steps.push_back(std::move(composed));
    } else {
      out.steps.push_back(steps[k]);
    }
  }
  return out;
}

MetricGraph phi2(const JgSimplex& simplex, const std::vector<Rational>& t,
                 const WeightingMonoid& monoid) {
  simplex.validate(monoid);
  check_coordinates(t, simplex.graphs.size());
  const auto& G0 = simplex.graphs[0];
  std::vector<Rational> lengths(G0.edge_count(), 0);
  for (std::size_t e = 0; e < G0.edge_count(); ++e) {
    std::optional<std::size_t> cur = e;
    for (std::size_t i = 0; cur; ++i) {
      lengths[e] += t[i] / static_cast<long>(simplex.graphs[i].edge_count());
      if (i == simplex.steps.size()) break;
      cur = simplex.steps[i][*cur];
    }
  }
  return stabilize(G0, lengths, monoid);
}

bool SuspendedPoint::operator==(const SuspendedPoint& o) const {
  return point == o.point && a == o.a && b == o.b && genus == o.genus;
}

bool SuspendedPoint::operator<(const SuspendedPoint& o) const {
  if (genus != o.genus) return genus < o.genus;
  if (!(point == o.point)) return point < o.point;
  if (a != o.a) return a < o.a;
  return b < o.b;
}

void NerveChain::validate(const WeightingMonoid& monoid) const {
  if (objects.size() != morphisms.size() + 1) {
    throw Error(ErrorCode::InvalidChain, "n morphisms need n+1 objects");
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const auto& w = morphisms[i];
    if (w.left_size() != objects[i] || w.right_size() != objects[i + 1]) {
      throw Error(ErrorCode::InvalidChain, "morphism " + std::to_string(i + 1) + " has wrong feet");
    }
    if (!has_valid_labels(w, monoid) || !is_stable(w, monoid)) {
      throw Error(ErrorCode::InvalidChain, "morphism " + std::to_string(i + 1) + " is not stable");
    }
  }
}

NerveChain NerveChain::face(std::size_t i, const WeightingMonoid& monoid) const {
  const std::size_t n = morphisms.size();
  if (n == 0 || i > n) throw Error(ErrorCode::InvalidChain, "face index out of range");
  NerveChain out;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k != i) out.objects.push_back(objects[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    // morphisms[k] : M_k -> M_{k+1}
    if (i == 0 && k == 0) continue;
    if (i == n && k == n - 1) continue;
    if (i > 0 && i < n && k == i) continue;
    if (i > 0 && i < n && k == i - 1) {
      out.morphisms.push_back(compose_weighted(morphisms[k], morphisms[k + 1], monoid));
    } else {
      out.morphisms.push_back(morphisms[k]);
    }
  }
  return out;
}

std::vector<SuspendedPoint> mu(const NerveChain& chain, const std::vector<Rational>& t,
                               const WeightingMonoid& monoid) {
  chain.validate(monoid);
  const std::size_t n = chain.morphisms.size();
  check_coordinates(t, n + 1);
  if (n == 0) return {};

  // Nodes are the classes of W_1..W_n; W_r is chain.morphisms[r - 1].
  std::vector<std::size_t> offset(n + 2, 0);
  for (std::size_t r = 1; r <= n; ++r) offset[r + 1] = offset[r] + chain.morphisms[r - 1].class_count();
  auto W = [&](std::size_t r) -> const WeightedCospan& { return chain.morphisms[r - 1]; };
  auto node = [&](std::size_t r, std::size_t c) { return offset[r] + c; };
  std::vector<std::size_t> parent(offset[n + 1]);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < chain.objects[i]; ++j) {
      auto a = find(node(i, W(i).right_map()[j])), b = find(node(i + 1, W(i + 1).left_map()[j]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Component of element j of M_i for 1 <= i < n.
  auto component_of = [&](std::size_t i, std::size_t j) { return find(node(i, W(i).right_map()[j])); };

  std::vector<char> boundary(parent.size(), 0);
  for (std::size_t j = 0; j < chain.objects[0]; ++j) boundary[find(node(1, W(1).left_map()[j]))] = 1;
  for (std::size_t j = 0; j < chain.objects[n]; ++j) boundary[find(node(n, W(n).right_map()[j]))] = 1;

  std::vector<SuspendedPoint> out;
  for (std::size_t root = 0; root < parent.size(); ++root) {
    if (find(root) != root || boundary[root]) continue;
    std::size_t a_u = 0, b_u = 0, elements = 0, classes = 0;
    WeightingMonoid::Element label = monoid.zero();
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < chain.objects[i]; ++j) {
        if (component_of(i, j) != root) continue;
        if (a_u == 0) a_u = i;
        b_u = i;
        ++elements;
      }
    }
    for (std::size_t r = 1; r <= n; ++r) {
      for (std::size_t c = 0; c < W(r).class_count(); ++c) {
        if (find(node(r, c)) != root) continue;
        ++classes;
        label = monoid.add(label, W(r).labels()[c]);
      }
    }
    if (a_u == 0) continue;  // lies inside a single piece: basepoint
    label = monoid.add(label, monoid.times(monoid.alpha(), static_cast<std::int64_t>(elements) -
                                                               static_cast<std::int64_t>(classes) + 1));
    if (label < 2) continue;
    Rational before = 0, after = 0, inside = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i < a_u) {
        before += t[i];
      } else if (i > b_u) {
        after += t[i];
      } else {
        inside += t[i];
      }
    }
    if (before == 0 || after == 0 || inside == 0) continue;

    // Restriction of W_{a_U} .. W_{b_U + 1} to U.
    FactorizationChain restricted;
    for (std::size_t r = a_u; r <= b_u + 1; ++r) {
      const auto& w = W(r);
      std::vector<std::size_t> local(w.class_count(), SIZE_MAX);
      std::vector<WeightingMonoid::Element> labels;
      for (std::size_t c = 0; c < w.class_count(); ++c) {
        if (find(node(r, c)) == root) {
          local[c] = labels.size();
          labels.push_back(w.labels()[c]);
        }
      }
      std::vector<std::size_t> lm, rm;
      if (r > a_u) {
        for (std::size_t j = 0; j < chain.objects[r - 1]; ++j) {
          if (component_of(r - 1, j) == root) lm.push_back(local[w.left_map()[j]]);
        }
      }
      if (r <= b_u) {
        for (std::size_t j = 0; j < chain.objects[r]; ++j) {
          if (component_of(r, j) == root) rm.push_back(local[w.right_map()[j]]);
        }
      }
      restricted.pieces.emplace_back(lm.size(), rm.size(), std::move(lm), std::move(rm),
                                     std::move(labels));
    }
    std::vector<Rational> inner(t.begin() + static_cast<std::ptrdiff_t>(a_u),
                                t.begin() + static_cast<std::ptrdiff_t>(b_u + 1));
    for (auto& x : inner) x /= inside;
    out.push_back({phi(restricted, inner, monoid), before, after, label});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropocat
