#pragma once

#include <json.hpp>

#include "tropocat/axioms.hpp"
#include "tropocat/chain_complex.hpp"
#include "tropocat/cuts.hpp"
#include "tropocat/finset.hpp"
#include "tropocat/moduli.hpp"
#include "tropocat/stable_graph.hpp"
#include "tropocat/weighted_cospan.hpp"

namespace tropocat {

/// Field order in every document is fixed by insertion.
using Json = nlohmann::ordered_json;

/// {"left", "right", "apex_classes", "left_map", "right_map"}; maps are class
/// indices in increasing representative order.
Json to_json(const Cospan& c);
/// Cospan JSON plus "labels".
Json to_json(const WeightedCospan& w);
/// {"vertices": [{"id", "weight"}], "edges": [[u, v], …]}.
Json to_json(const StableGraph& g);
/// Graph JSON plus "lengths" as "p/q" strings.
Json to_json(const MetricGraph& m);
/// {"point", "a", "b", "genus"}.
Json to_json(const SuspendedPoint& p);
Json to_json(const Counterexample& c);
Json to_json(const Report& r);

/// Parsers throw InvalidArgument on malformed input.
WeightedCospan weighted_cospan_from_json(const Json& j);
StableGraph graph_from_json(const Json& j);
MetricGraph metric_graph_from_json(const Json& j);

/// {"pieces": [weighted cospan, …]}.
FactorizationChain factorization_from_json(const Json& j);
Json to_json(const FactorizationChain& c);
/// {"morphisms": [weighted cospan, …]} with optional "objects" (required
/// when there are no morphisms).
NerveChain nerve_from_json(const Json& j);
Json to_json(const NerveChain& c);
/// {"graphs": [graph, …], "steps": [[image or null, …], …]}.
JgSimplex simplex_from_json(const Json& j);
Json to_json(const JgSimplex& s);

}  // namespace tropocat
