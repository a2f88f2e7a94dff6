#include "wtreereg/json_io.hpp"

#include <fstream>

#include "wtreereg/error.hpp"

namespace wtreereg {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

WeightedGraph graph_from_json(const Json& j) {
    try {
        std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
        std::vector<WeightedEdge> edges;
        for (const auto& e : j.value("edges", Json::array())) {
            WeightedEdge edge{e.at("u").get<std::string>(), e.at("v").get<std::string>(), 1};
            if (e.contains("w")) edge.weight = e.at("w").get<int>();
            edges.push_back(std::move(edge));
        }
        return WeightedGraph(std::move(vertices), edges);
    } catch (const Json::exception& ex) {
        throw Error(ErrorCode::InvalidInput, std::string("graph JSON: ") + ex.what());
    }
}

Json graph_to_json(const WeightedGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.weighted_edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.weight}});
    return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& ex) {
        throw Error(ErrorCode::InvalidInput, path + ": " + ex.what());
    }
    return graph_from_json(j);
}

MonomialIdeal ideal_from_json(const Json& j) {
    try {
        auto vars = j.at("vars").get<std::vector<std::string>>();
        std::vector<Monomial> gens;
        for (const auto& g : j.at("gens")) gens.emplace_back(g.get<std::map<std::string, int>>());
        return MonomialIdeal::from_monomials(std::move(vars), gens);
    } catch (const Json::exception& ex) {
        throw Error(ErrorCode::InvalidInput, std::string("ideal JSON: ") + ex.what());
    }
}

Json ideal_to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) {
        Json m = Json::object();
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[j] > 0) m[ideal.vars()[j]] = g[j];
        gens.push_back(std::move(m));
    }
    return {{"vars", ideal.vars()}, {"gens", std::move(gens)}};
}

Json betti_to_json(const BettiTable& table) {
    Json entries = Json::array();
    for (const auto& [ij, beta] : table.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    Json out = {{"entries", std::move(entries)}};
    out["reg"] = table.empty() ? Json(nullptr) : Json(table.regularity());
    return out;
}

Json spine_to_json(const WeightedGraph& g, const SpineData& s) {
    return {{"path", s.path_names(g)},
            {"k", s.k()},
            {"heavy_index", s.heavy_index},
            {"omega_i", s.omega_i},
            {"omega_i_plus_2", optional_json(s.omega_i_plus_2)},
            {"d", s.d}};
}

Json formula_to_json(const RegFormulaResult& r) {
    return {{"value", r.value},
            {"case", to_string(r.case_tag)},
            {"inputs",
             {{"nu", r.inputs.nu},
              {"s_i", optional_json(r.inputs.s_i)},
              {"s_i_plus_2", optional_json(r.inputs.s_i_plus_2)},
              {"omega_i", optional_json(r.inputs.omega_i)},
              {"omega_i_plus_2", optional_json(r.inputs.omega_i_plus_2)},
              {"k", optional_json(r.inputs.k)},
              {"i", optional_json(r.inputs.i)}}}};
}

Json report_to_json(const VerificationReport& r) {
    Json powers = Json::array();
    for (const auto& p : r.powers) {
        powers.push_back({{"t", p.t},
                          {"exact", optional_json(p.exact)},
                          {"exact_case", optional_json(p.exact_case)},
                          {"bound", optional_json(p.bound)},
                          {"oracle", optional_json(p.oracle)},
                          {"status", to_string(p.status)},
                          {"skip_reason", optional_json(p.skip_reason)}});
    }
    return {{"schema_version", kReportSchemaVersion},
            {"index", r.index},
            {"label", r.label},
            {"instance", graph_to_json(r.instance)},
            {"integrally_closed", r.integrally_closed},
            {"spine", r.spine ? spine_to_json(r.instance, *r.spine) : Json(nullptr)},
            {"invariants", {{"nu", optional_json(r.nu)}, {"s_i", optional_json(r.s_i)}, {"s_i_plus_2", optional_json(r.s_i_plus_2)}}},
            {"formula_reg", r.formula ? formula_to_json(*r.formula) : Json(nullptr)},
            {"oracle_reg", optional_json(r.oracle_reg)},
            {"powers", std::move(powers)},
            {"verdict", to_string(r.verdict)},
            {"notes", r.notes}};
}

}  // namespace wtreereg
