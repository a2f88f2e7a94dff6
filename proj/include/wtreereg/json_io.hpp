#pragma once

#include <string>

#include <json.hpp>

#include "wtreereg/betti.hpp"
#include "wtreereg/formulas.hpp"
#include "wtreereg/harness.hpp"
#include "wtreereg/monomial.hpp"
#include "wtreereg/wgraph.hpp"

namespace wtreereg {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edges": [{"u": .., "v": .., "w": ..}]}; "w" defaults to 1.
WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& g);
WeightedGraph read_graph_file(const std::string& path);

/// {"vars": [...], "gens": [{"x1": 1, ...}, ...]}
MonomialIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const MonomialIdeal& ideal);

/// {"entries": [{"i": .., "j": .., "beta": ..}], "reg": ..}
Json betti_to_json(const BettiTable& table);

Json spine_to_json(const WeightedGraph& g, const SpineData& s);
Json formula_to_json(const RegFormulaResult& r);
Json report_to_json(const VerificationReport& r);

}  // namespace wtreereg
