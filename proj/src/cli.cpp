#include "wtreereg/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wtreereg/betti.hpp"
#include "wtreereg/error.hpp"
#include "wtreereg/formulas.hpp"
#include "wtreereg/harness.hpp"
#include "wtreereg/json_io.hpp"
#include "wtreereg/matchings.hpp"
#include "wtreereg/monomial.hpp"

namespace wtreereg {

namespace {

Json check_json(const WeightedGraph& g) {
    Json j = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"is_tree", g.is_tree()}};
    j["integrally_closed"] = g.is_tree() ? Json(is_integrally_closed(g)) : Json(nullptr);
    auto m = induced_matching_number(g);
    Json witness = Json::array();
    for (auto e : m.witness) {
        auto [u, v] = g.edge_name(e);
        witness.push_back({u, v});
    }
    j["nu"] = m.size;
    j["nu_witness"] = std::move(witness);
    j["spine"] = nullptr;
    if (g.is_tree() && !g.is_trivial() && is_integrally_closed(g)) j["spine"] = spine_to_json(g, non_trivial_spine(g));
    return j;
}

int oracle_or_null(Json& j, const char* key, const MonomialIdeal& ideal, const OracleLimits& limits) {
    try {
        auto table = betti_table(ideal, limits);
        j[key] = betti_to_json(table);
        return table.regularity();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooManyGenerators && e.code() != ErrorCode::LatticeTooLarge &&
            e.code() != ErrorCode::PowerTooLarge)
            throw;
        j[key] = {{"skipped", e.what()}};
        return -1;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regularity of edge ideals of integrally closed edge-weighted trees"};
    app.require_subcommand(1);

    std::string graph_path;
    bool with_oracle = false;
    int power_t = 1;

    auto* check = app.add_subcommand("check", "Tree and integral-closure checks, spine and induced matching number");
    check->add_option("graph", graph_path, "Graph JSON file")->required();

    auto* reg = app.add_subcommand("reg", "Closed-form regularity of I(G_w)");
    reg->add_option("graph", graph_path, "Graph JSON file")->required();
    reg->add_flag("--oracle", with_oracle, "Also compute the Betti table and compare");

    auto* pow = app.add_subcommand("power", "Regularity of I(G_w)^t: exact value when known and upper bound");
    pow->add_option("graph", graph_path, "Graph JSON file")->required();
    pow->add_option("--t", power_t, "Power")->required()->check(CLI::PositiveNumber);
    pow->add_flag("--oracle", with_oracle, "Also compute the Betti table of the power");

    SuiteConfig config;
    int random_count = 0;
    int t_max = 0;
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "Compare closed forms with the Betti oracle; JSON lines output");
    verify->add_flag("--golden", config.golden, "Worked examples with published values");
    verify->add_flag("--enumerate", config.enumerate, "Every integrally closed weighted tree up to the size limits");
    verify->add_option("--random", random_count, "Number of random instances")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "Seed for --random");
    verify->add_option("--max-vertices", config.max_vertices, "Vertex limit")->check(CLI::Range(2, 64));
    verify->add_option("--max-weight", config.max_weight, "Weight limit")->check(CLI::Range(1, 1000));
    verify->add_option("--t-max", t_max, "Highest power checked (default 3 for at most six edges, else 2)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "Write JSON lines here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_code::usage;
    }

    try {
        const auto limits = OracleLimits::from_environment();
        if (*check) {
            out << check_json(read_graph_file(graph_path)).dump(2) << '\n';
            return exit_code::ok;
        }
        if (*reg) {
            auto g = read_graph_file(graph_path);
            auto formula = reg_closed_form(g);
            Json j = formula_to_json(formula);
            if (!with_oracle) {
                out << j.dump(2) << '\n';
                return exit_code::ok;
            }
            int oracle = oracle_or_null(j, "betti", edge_ideal(g), limits);
            j["oracle_reg"] = oracle < 0 ? Json(nullptr) : Json(oracle);
            out << j.dump(2) << '\n';
            return oracle >= 0 && oracle != formula.value ? exit_code::mismatch : exit_code::ok;
        }
        if (*pow) {
            auto g = read_graph_file(graph_path);
            auto r = power_regularity(g, power_t);
            Json j = {{"t", r.t},
                      {"exact", r.exact ? Json(*r.exact) : Json(nullptr)},
                      {"exact_case", r.exact_case_tag ? Json(to_string(*r.exact_case_tag)) : Json(nullptr)},
                      {"upper_bound", r.upper_bound}};
            if (!with_oracle) {
                out << j.dump(2) << '\n';
                return exit_code::ok;
            }
            int oracle = -1;
            try {
                oracle = oracle_or_null(j, "betti", power(edge_ideal(g), power_t), limits);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::PowerTooLarge) throw;
                j["betti"] = {{"skipped", e.what()}};
            }
            j["oracle_reg"] = oracle < 0 ? Json(nullptr) : Json(oracle);
            out << j.dump(2) << '\n';
            bool bad = oracle >= 0 && ((r.exact && oracle != *r.exact) || oracle > r.upper_bound);
            return bad ? exit_code::mismatch : exit_code::ok;
        }
        if (*verify) {
            if (random_count > 0) config.random_count = random_count;
            if (t_max > 0) config.t_max = t_max;
            config.limits = limits;
            if (!config.golden && !config.enumerate && !config.random_count) {
                err << "usage error: verify needs --golden, --enumerate or --random N\n" << verify->help();
                return exit_code::usage;
            }
            SuiteSummary summary;
            if (out_path.empty()) {
                summary = run_suite(config, out);
            } else {
                std::ofstream file(out_path);
                if (!file) throw std::ios_base::failure("cannot open '" + out_path + "' for writing");
                summary = run_suite(config, file);
            }
            err << "instances: " << summary.instances;
            for (const auto& [v, n] : summary.verdicts) err << ", " << to_string(v) << ": " << n;
            err << '\n';
            return summary.exit_code;
        }
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_code::io_error;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code::input_error;
    }
    return exit_code::usage;
}

}  // namespace wtreereg
