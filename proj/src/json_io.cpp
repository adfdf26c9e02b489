#include "tropocat/json_io.hpp"

#include <algorithm>

#include "tropocat/error.hpp"

namespace tropocat {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed ") + what + ": " + e.what());
  }
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_pq_string(v));
  return out;
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::InvalidArgument, "rationals are \"p/q\" strings");
}

}  // namespace

Json to_json(const Cospan& c) {
  const auto reps = c.apex().classes();
  auto index = [&](std::size_t rep) {
    return static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin());
  };
  Json j;
  j["left"] = c.left_size();
  j["right"] = c.right_size();
  j["apex_classes"] = reps.size();
  Json lm = Json::array(), rm = Json::array();
  for (auto x : c.left_map()) lm.push_back(index(x));
  for (auto x : c.right_map()) rm.push_back(index(x));
  j["left_map"] = lm;
  j["right_map"] = rm;
  return j;
}

Json to_json(const WeightedCospan& w) {
  Json j = to_json(w.cospan());
  j["labels"] = w.labels();
  return j;
}

Json to_json(const StableGraph& g) {
  Json j;
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Json x;
    x["id"] = v;
    x["weight"] = g.weights()[v];
    vertices.push_back(x);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["vertices"] = vertices;
  j["edges"] = edges;
  return j;
}

Json to_json(const MetricGraph& m) {
  Json j = to_json(m.graph);
  j["lengths"] = rationals(m.lengths);
  return j;
}

Json to_json(const SuspendedPoint& p) {
  Json j;
  j["point"] = to_json(p.point);
  j["a"] = to_pq_string(p.a);
  j["b"] = to_pq_string(p.b);
  j["genus"] = p.genus;
  return j;
}

Json to_json(const Counterexample& c) {
  Json j;
  j["property"] = c.property;
  j["trial"] = c.trial;
  if (c.diagram != 0) j["diagram"] = c.diagram;
  if (!c.sizes.empty()) j["sizes"] = c.sizes;
  Json inputs = Json::array();
  for (const auto& w : c.inputs) inputs.push_back(to_json(w));
  j["inputs"] = inputs;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["check"] = r.check;
  j["monoid"] = r.monoid;
  j["seed"] = r.seed;
  j["random_trials"] = r.random_trials;
  j["exhaustive_cases"] = r.exhaustive_cases;
  j["passed"] = r.passed();
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back(to_json(c));
  j["counterexamples"] = ce;
  return j;
}

WeightedCospan weighted_cospan_from_json(const Json& j) {
  return guarded("weighted cospan", [&] {
    const auto left = j.at("left").get<std::size_t>();
    const auto right = j.at("right").get<std::size_t>();
    auto lm = j.at("left_map").get<std::vector<std::size_t>>();
    auto rm = j.at("right_map").get<std::vector<std::size_t>>();
    auto labels = j.at("labels").get<std::vector<WeightingMonoid::Element>>();
    if (j.contains("apex_classes") && j.at("apex_classes").get<std::size_t>() != labels.size()) {
      throw Error(ErrorCode::InvalidArgument, "apex_classes disagrees with labels");
    }
    if (lm.size() != left || rm.size() != right) {
      throw Error(ErrorCode::InvalidArgument, "feet maps disagree with left/right");
    }
    for (auto x : lm) {
      if (x >= labels.size()) throw Error(ErrorCode::InvalidArgument, "left_map out of range");
    }
    for (auto x : rm) {
      if (x >= labels.size()) throw Error(ErrorCode::InvalidArgument, "right_map out of range");
    }
    return WeightedCospan(left, right, std::move(lm), std::move(rm), std::move(labels));
  });
}

StableGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const auto& vs = j.at("vertices");
    std::vector<StableGraph::Element> weights(vs.size());
    std::vector<char> seen(vs.size(), 0);
    for (const auto& v : vs) {
      const auto id = v.at("id").get<std::size_t>();
      if (id >= vs.size() || seen[id]) throw Error(ErrorCode::InvalidArgument, "vertex ids must be 0..n-1");
      seen[id] = 1;
      weights[id] = v.at("weight").get<StableGraph::Element>();
    }
    std::vector<StableGraph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidArgument, "edges are pairs");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return StableGraph(std::move(weights), std::move(edges));
  });
}

MetricGraph metric_graph_from_json(const Json& j) {
  return guarded("metric graph", [&] {
    MetricGraph m{graph_from_json(j), {}};
    for (const auto& x : j.at("lengths")) m.lengths.push_back(rational_from(x));
    return m;
  });
}

FactorizationChain factorization_from_json(const Json& j) {
  return guarded("factorization chain", [&] {
    FactorizationChain c;
    for (const auto& p : j.at("pieces")) c.pieces.push_back(weighted_cospan_from_json(p));
    return c;
  });
}

Json to_json(const FactorizationChain& c) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces) pieces.push_back(to_json(p));
  Json j;
  j["pieces"] = pieces;
  return j;
}

NerveChain nerve_from_json(const Json& j) {
  return guarded("nerve chain", [&] {
    NerveChain c;
    for (const auto& m : j.at("morphisms")) c.morphisms.push_back(weighted_cospan_from_json(m));
    if (j.contains("objects")) {
      c.objects = j.at("objects").get<std::vector<std::size_t>>();
    } else if (!c.morphisms.empty()) {
      c.objects.push_back(c.morphisms.front().left_size());
      for (const auto& m : c.morphisms) c.objects.push_back(m.right_size());
    } else {
      throw Error(ErrorCode::InvalidArgument, "a chain without morphisms needs \"objects\"");
    }
    return c;
  });
}

Json to_json(const NerveChain& c) {
  Json j;
  j["objects"] = c.objects;
  Json ms = Json::array();
  for (const auto& m : c.morphisms) ms.push_back(to_json(m));
  j["morphisms"] = ms;
  return j;
}

JgSimplex simplex_from_json(const Json& j) {
  return guarded("simplex", [&] {
    JgSimplex s;
    for (const auto& g : j.at("graphs")) s.graphs.push_back(graph_from_json(g));
    for (const auto& step : j.at("steps")) {
      std::vector<std::optional<std::size_t>> map;
      for (const auto& x : step) {
        if (x.is_null()) {
          map.push_back(std::nullopt);
        } else {
          map.push_back(x.get<std::size_t>());
        }
      }
      s.steps.push_back(std::move(map));
    }
    return s;
  });
}

Json to_json(const JgSimplex& s) {
  Json j;
  Json graphs = Json::array();
  for (const auto& g : s.graphs) graphs.push_back(to_json(g));
  Json steps = Json::array();
  for (const auto& step : s.steps) {
    Json map = Json::array();
    for (const auto& x : step) {
      if (x) {
        map.push_back(*x);
      } else {
        map.push_back(nullptr);
      }
    }
    steps.push_back(map);
  }
  j["graphs"] = graphs;
  j["steps"] = steps;
  return j;
}

}  // namespace tropocat
