#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "wtreereg/cli.hpp"
#include "wtreereg/error.hpp"
#include "wtreereg/harness.hpp"
#include "wtreereg/json_io.hpp"

using namespace wtreereg;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected wtreereg::Error");
    return ErrorCode::InvalidInput;
}

WeightedGraph relabelled(const WeightedGraph& g, const std::vector<std::size_t>& perm) {
    std::vector<std::string> v(g.vertex_count());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = "v" + std::to_string(perm[k]);
    std::vector<WeightedEdge> e;
    for (const auto& edge : g.edges()) e.push_back({v[edge.u], v[edge.v], edge.weight});
    std::reverse(e.begin(), e.end());
    return WeightedGraph(v, e);
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("wtreereg-test-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        auto p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("Pruefer decoding") {
    auto star = tree_from_pruefer({3, 3, 3}, 5);
    CHECK(star.is_tree());
    CHECK(star.degree(star.vertex("x4")) == 4);
    auto path = tree_from_pruefer({1, 2, 3}, 5);
    CHECK(path.is_path());
    CHECK(tree_from_pruefer({}, 2).edge_count() == 1);
    CHECK(tree_from_pruefer({}, 1).edge_count() == 0);
    CHECK(code_of([] { tree_from_pruefer({1}, 4); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { tree_from_pruefer({7, 0}, 4); }) == ErrorCode::InvalidInput);
}

TEST_CASE("random instances") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 2 + static_cast<int>(seed % 12);
        auto g = generate_instance(seed, n, 4);
        REQUIRE(g == generate_instance(seed, n, 4));
        REQUIRE(g.is_tree());
        REQUIRE(static_cast<int>(g.vertex_count()) == n);
        REQUIRE(is_integrally_closed(g));
        REQUIRE(g.max_weight() <= 4);
        REQUIRE(generate_instance(seed, n, 1).is_trivial());
        if (n >= 4) {
            auto two = generate_instance(seed, n, 3, 2);
            REQUIRE(two.nontrivial_edges().size() == 2);
            REQUIRE(is_integrally_closed(two));
            auto s = non_trivial_spine(two);
            REQUIRE(s.omega_i_plus_2.has_value());
            REQUIRE(*s.omega_i_plus_2 >= 2);
        }
        REQUIRE(generate_instance(seed, n, 3, 1).nontrivial_edges().size() == 1);
        REQUIRE(generate_instance(seed, n, 3, 0).is_trivial());
    }
    std::set<std::string> shapes;
    for (std::uint64_t seed = 0; seed < 50; ++seed) shapes.insert(canonical_form(generate_instance(seed, 8, 3)));
    CHECK(shapes.size() > 30);

    CHECK(code_of([] { generate_instance(1, 1, 3); }) == ErrorCode::InfeasibleConstraints);
    CHECK(code_of([] { generate_instance(1, 5, 0); }) == ErrorCode::InfeasibleConstraints);
    CHECK(code_of([] { generate_instance(1, 3, 3, 2); }) == ErrorCode::InfeasibleConstraints);
    CHECK(code_of([] { generate_instance(1, 6, 3, 3); }) == ErrorCode::InfeasibleConstraints);
    CHECK(code_of([] { generate_instance(1, 6, 1, 1); }) == ErrorCode::InfeasibleConstraints);
}

TEST_CASE("canonical forms and enumeration") {
    const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_trees(n).size() == counts[static_cast<std::size_t>(n - 1)]);

    auto a = fixtures::tree_b();
    std::vector<std::size_t> perm{9, 3, 7, 1, 0, 5, 2, 8, 6, 4};
    CHECK(canonical_form(a) == canonical_form(relabelled(a, perm)));
    auto heavier = WeightedGraph(a.vertices(), [&] {
        auto e = a.weighted_edges();
        e[0].weight = 2;
        return e;
    }());
    CHECK(canonical_form(a) != canonical_form(heavier));
    CHECK(code_of([] { canonical_form(WeightedGraph({"a", "b"}, {})); }) == ErrorCode::NotATree);

    auto corpus = enumerate_weighted_trees(6, 3);
    std::set<std::string> forms;
    for (const auto& g : corpus) {
        REQUIRE(is_integrally_closed(g));
        REQUIRE(forms.insert(canonical_form(g)).second);
    }
    // both orders of two unequal heavy weights on P4 are the same tree up to isomorphism
    CHECK(forms.count(canonical_form(make_path({3, 1, 2}))));
    CHECK(forms.count(canonical_form(make_path({2, 1, 3}))));
    CHECK(canonical_form(make_path({3, 1, 2})) == canonical_form(make_path({2, 1, 3})));
    // heavy edges at the two ends of P5 are not joined by an edge, so excluded
    CHECK_FALSE(forms.count(canonical_form(make_path({2, 1, 1, 2}))));
}

TEST_CASE("verification reports") {
    SUBCASE("one heavy edge, long legs") {
        auto r = verify_instance(fixtures::tree_a(), 2);
        CHECK(r.verdict == Verdict::Pass);
        REQUIRE(r.formula);
        CHECK(r.formula->value == 5);
        CHECK(r.oracle_reg == 5);
        REQUIRE(r.powers.size() == 2);
        CHECK(r.powers[1].oracle == 8);
        CHECK(r.powers[1].bound == 9);
        CHECK(r.powers[1].status == PowerStatus::WithinBound);
        CHECK(r.notes.empty());
    }
    SUBCASE("golden reference with a differing printed value") {
        auto golden = golden_instances();
        REQUIRE(golden.size() == 2);
        auto r = verify_instance(golden[1].graph, 2, {}, &golden[1].reference);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.oracle_reg == 7);
        CHECK(r.powers[1].oracle == 12);
        CHECK(r.powers[1].bound == 13);
        CHECK(r.s_i_plus_2 == 4);
        REQUIRE(r.notes.size() == 1);
        CHECK(r.notes[0].find("s_3 reference 3, recomputed 4") != std::string::npos);
    }
    SUBCASE("trivial path") {
        auto r = verify_instance(make_path({1, 1}), 3);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.formula->case_tag == RegCase::TrivialTree);
        for (const auto& p : r.powers) {
            CHECK(p.status == PowerStatus::Exact);
            CHECK(p.oracle == 2 * p.t);
        }
        CHECK(r.powers[1].exact_case == "TRIVIAL_TREE_POWER");
    }
    SUBCASE("guards trip") {
        OracleLimits tight;
        tight.max_lattice = 40;
        auto r = verify_instance(fixtures::tree_a(), 2, tight);
        CHECK(r.verdict == Verdict::Skipped);
        CHECK(r.powers[0].status == PowerStatus::Skipped);
        CHECK(r.powers[0].skip_reason->find("LatticeTooLarge") != std::string::npos);
        CHECK_FALSE(r.oracle_reg.has_value());
        OracleLimits mid;
        mid.max_lattice = 1000;
        auto m = verify_instance(fixtures::tree_a(), 2, mid);
        CHECK(m.verdict == Verdict::Pass);
        CHECK(m.powers[1].status == PowerStatus::Skipped);
    }
    SUBCASE("not integrally closed") {
        auto r = verify_instance(make_path({2, 3}), 2);
        CHECK(r.verdict == Verdict::Skipped);
        CHECK_FALSE(r.formula.has_value());
        CHECK(r.notes.at(0).find("NOT_INTEGRALLY_CLOSED") == 0);
    }
    CHECK(code_of([] { verify_instance(WeightedGraph({"a", "b"}, {}), 1); }) == ErrorCode::NotATree);
    CHECK(code_of([] { verify_instance(make_path({1}), 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("suites") {
    SuiteConfig golden;
    golden.golden = true;
    std::ostringstream out;
    auto summary = run_suite(golden, out);
    CHECK(summary.instances == 2);
    CHECK(summary.verdicts[Verdict::Pass] == 2);
    CHECK(summary.exit_code == exit_code::ok);
    auto lines = json_lines(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0]["schema_version"] == kReportSchemaVersion);
    CHECK(lines[0]["label"] == "golden-k5-one-heavy-edge");
    CHECK(lines[1]["index"] == 1);
    CHECK(lines[1]["verdict"] == "PASS");
    CHECK(lines[1]["formula_reg"]["case"] == "REG_CASE3");

    SuiteConfig random;
    random.random_count = 25;
    random.seed = 99;
    random.max_vertices = 8;
    std::ostringstream a, b;
    run_suite(random, a);
    run_suite(random, b);
    CHECK(a.str() == b.str());
    random.seed = 100;
    std::ostringstream c;
    run_suite(random, c);
    CHECK(a.str() != c.str());

    SuiteConfig sweep;
    sweep.enumerate = true;
    sweep.max_vertices = 5;
    sweep.t_max = 2;
    std::ostringstream d;
    auto s = run_suite(sweep, d);
    CHECK(s.exit_code == exit_code::ok);
    CHECK(s.instances == enumerate_weighted_trees(5, 3).size());

    CHECK(code_of([] {
              std::ostringstream sink;
              run_suite(SuiteConfig{}, sink);
          }) == ErrorCode::InvalidInput);
}

TEST_CASE("JSON forms") {
    auto g = graph_from_json(Json::parse(R"({"vertices": ["a", "b", "c"], "edges": [{"u": "a", "v": "b"}, {"u": "b", "v": "c", "w": 3}]})"));
    CHECK(g.weight(g.vertex("a"), g.vertex("b")) == 1);
    CHECK(g.weight(g.vertex("b"), g.vertex("c")) == 3);
    CHECK(graph_from_json(graph_to_json(fixtures::tree_b())) == fixtures::tree_b());
    CHECK(code_of([] { graph_from_json(Json::parse(R"({"edges": []})")); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { graph_from_json(Json::parse(R"({"vertices": ["a"], "edges": [{"u": "a", "v": 3}]})")); }) ==
          ErrorCode::InvalidInput);

    auto I = ideal_from_json(Json::parse(R"({"vars": ["x1", "x2", "x3"], "gens": [{"x1": 1, "x2": 1}, {"x2": 2, "x3": 2}]})"));
    CHECK(I.generator_count() == 2);
    CHECK(ideal_from_json(ideal_to_json(I)) == I);

    auto table = betti_to_json(betti_table(ideal_from_json(Json::parse(R"({"vars": ["x", "y", "z"], "gens": [{"x": 1, "y": 1}, {"y": 1, "z": 1}]})"))));
    CHECK(table.dump() == R"({"entries":[{"i":0,"j":2,"beta":2},{"i":1,"j":3,"beta":1}],"reg":2})");
}

TEST_CASE("command line") {
    TempDir dir;
    const auto tree = dir.write("tree.json", graph_to_json(fixtures::tree_a()).dump());
    const auto bad_tree = dir.write("bad.json", R"({"vertices": ["a", "b", "c"], "edges": [{"u": "a", "v": "b", "w": 2}, {"u": "b", "v": "c", "w": 2}]})");
    const auto broken = dir.write("broken.json", "{ not json");

    auto check = cli({"check", tree});
    CHECK(check.code == exit_code::ok);
    auto cj = Json::parse(check.out);
    CHECK(cj["integrally_closed"] == true);
    CHECK(cj["nu"] == 4);
    CHECK(cj["spine"]["k"] == 5);

    auto reg = cli({"reg", tree});
    CHECK(reg.code == exit_code::ok);
    CHECK(Json::parse(reg.out)["value"] == 5);
    auto reg_oracle = cli({"reg", tree, "--oracle"});
    CHECK(reg_oracle.code == exit_code::ok);
    CHECK(Json::parse(reg_oracle.out)["oracle_reg"] == 5);
    CHECK(Json::parse(reg_oracle.out)["betti"]["reg"] == 5);

    auto pw = cli({"power", tree, "--t", "2", "--oracle"});
    CHECK(pw.code == exit_code::ok);
    auto pj = Json::parse(pw.out);
    CHECK(pj["upper_bound"] == 9);
    CHECK(pj["exact"].is_null());
    CHECK(pj["oracle_reg"] == 8);

    auto golden = cli({"verify", "--golden"});
    CHECK(golden.code == exit_code::ok);
    CHECK(json_lines(golden.out).size() == 2);
    CHECK(golden.err.find("PASS: 2") != std::string::npos);

    const auto out_file = (dir.path / "reports.jsonl").string();
    auto to_file = cli({"verify", "--random", "5", "--seed", "3", "--max-vertices", "6", "--out", out_file});
    CHECK(to_file.code == exit_code::ok);
    CHECK(to_file.out.empty());
    std::ifstream in(out_file);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(json_lines(body.str()).size() == 5);

    CHECK(cli({}).code == exit_code::usage);
    CHECK(cli({"verify"}).code == exit_code::usage);
    CHECK(cli({"power", tree}).code == exit_code::usage);
    CHECK(cli({"power", tree, "--t", "0"}).code == exit_code::usage);
    CHECK(cli({"frobnicate"}).code == exit_code::usage);
    CHECK(cli({"--help"}).code == exit_code::ok);
    CHECK(cli({"check", (dir.path / "missing.json").string()}).code == exit_code::io_error);
    CHECK(cli({"verify", "--golden", "--out", (dir.path / "no-such-dir" / "x.jsonl").string()}).code ==
          exit_code::io_error);
    auto parse_fail = cli({"reg", broken});
    CHECK(parse_fail.code == exit_code::input_error);
    auto not_closed = cli({"reg", bad_tree});
    CHECK(not_closed.code == exit_code::input_error);
    CHECK(not_closed.err.find("NotIntegrallyClosed") != std::string::npos);
    CHECK(cli({"check", bad_tree}).code == exit_code::ok);
}
