#include "wtreereg/harness.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

#include "wtreereg/error.hpp"
#include "wtreereg/json_io.hpp"
#include "wtreereg/matchings.hpp"
#include "wtreereg/monomial.hpp"

namespace wtreereg {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::BoundOnly: return "BOUND_ONLY";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "UNKNOWN";
}

std::string_view to_string(PowerStatus s) noexcept {
    switch (s) {
        case PowerStatus::Exact: return "EXACT";
        case PowerStatus::WithinBound: return "WITHIN_BOUND";
        case PowerStatus::Mismatch: return "MISMATCH";
        case PowerStatus::Skipped: return "SKIPPED";
        case PowerStatus::Unchecked: return "UNCHECKED";
    }
    return "UNKNOWN";
}

namespace {

// Platform-independent bounded draws (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % n;
    }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 engine_;
};

std::string vertex_name(int v) { return "x" + std::to_string(v + 1); }

// Pairs of edge indices (ab, cd) lying on an induced path a-b-c-d.
std::vector<std::pair<std::size_t, std::size_t>> separated_edge_pairs(const WeightedGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < g.edge_count(); ++a) {
        for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
            const auto& x = g.edges()[a];
            const auto& y = g.edges()[b];
            if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) continue;
            if (g.adjacent(x.u, y.u) || g.adjacent(x.u, y.v) || g.adjacent(x.v, y.u) || g.adjacent(x.v, y.v))
                out.emplace_back(a, b);
        }
    }
    return out;
}

WeightedGraph reweighted(const WeightedGraph& g, const std::map<std::size_t, int>& weights) {
    auto edges = g.weighted_edges();
    for (const auto& [e, w] : weights) edges[e].weight = w;
    return WeightedGraph(g.vertices(), edges);
}

std::string encode(const WeightedGraph& t, VertexIndex v, VertexIndex parent) {
    std::vector<std::string> children;
    for (auto c : t.neighbors(v)) {
        if (c == parent) continue;
        children.push_back(std::to_string(t.weight(v, c)) + encode(t, c, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

bool is_guard(ErrorCode code) {
    return code == ErrorCode::PowerTooLarge || code == ErrorCode::TooManyGenerators ||
           code == ErrorCode::LatticeTooLarge;
}

std::string s_name(std::size_t index) { return "s_" + std::to_string(index); }

void note_reference(VerificationReport& r, const std::string& what, std::optional<int> reference,
                    std::optional<int> computed, const std::string& how) {
    if (!reference || !computed || *reference == *computed) return;
    r.notes.push_back("REFERENCE_DIFFERS: " + what + " reference " + std::to_string(*reference) +
                      ", recomputed " + std::to_string(*computed) + " (" + how + ")");
}

}  // namespace

WeightedGraph tree_from_pruefer(const std::vector<int>& sequence, int n) {
    if (n < 1 || static_cast<int>(sequence.size()) != std::max(n - 2, 0))
        throw Error(ErrorCode::InvalidInput, "Pruefer sequence length must be n - 2");
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back(vertex_name(v));
    std::vector<WeightedEdge> edges;
    if (n == 2) edges.push_back({names[0], names[1], 1});
    if (n > 2) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : sequence) {
            if (x < 0 || x >= n) throw Error(ErrorCode::InvalidInput, "Pruefer entry out of range");
            ++degree[static_cast<std::size_t>(x)];
        }
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        for (int x : sequence) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({names[static_cast<std::size_t>(leaf)], names[static_cast<std::size_t>(x)], 1});
            if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
        }
        int a = *leaves.begin();
        int b = *std::next(leaves.begin());
        edges.push_back({names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)], 1});
    }
    return WeightedGraph(names, edges);
}

WeightedGraph generate_instance(std::uint64_t seed, int n, int max_weight, std::optional<int> heavy_edges) {
    if (n < 2) throw Error(ErrorCode::InfeasibleConstraints, "need at least 2 vertices");
    if (max_weight < 1) throw Error(ErrorCode::InfeasibleConstraints, "max_weight must be >= 1");
    if (heavy_edges) {
        if (*heavy_edges < 0 || *heavy_edges > 2)
            throw Error(ErrorCode::InfeasibleConstraints, "an integrally closed tree has at most 2 non-trivial edges");
        if (*heavy_edges > 0 && max_weight < 2)
            throw Error(ErrorCode::InfeasibleConstraints, "non-trivial edges need max_weight >= 2");
        if (*heavy_edges == 2 && n < 4)
            throw Error(ErrorCode::InfeasibleConstraints, "two non-trivial edges need at least 4 vertices");
    }

    Rng rng(seed);
    WeightedGraph tree;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    // A star has no path on four vertices; redraw when two heavy edges are
    // requested (n >= 4 makes non-stars available).
    do {
        std::vector<int> sequence;
        for (int s = 0; s < n - 2; ++s) sequence.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        tree = tree_from_pruefer(sequence, n);
        pairs = separated_edge_pairs(tree);
    } while (heavy_edges == 2 && pairs.empty());

    std::vector<int> feasible{0};
    if (max_weight >= 2) feasible.push_back(1);
    if (max_weight >= 2 && !pairs.empty()) feasible.push_back(2);
    int count = heavy_edges ? *heavy_edges
                            : feasible[static_cast<std::size_t>(rng.below(feasible.size()))];

    std::map<std::size_t, int> weights;
    if (count == 1) {
        weights[static_cast<std::size_t>(rng.below(tree.edge_count()))] = rng.between(2, max_weight);
    } else if (count == 2) {
        auto [a, b] = pairs[static_cast<std::size_t>(rng.below(pairs.size()))];
        weights[a] = rng.between(2, max_weight);
        weights[b] = rng.between(2, max_weight);
    }
    return reweighted(tree, weights);
}

std::string canonical_form(const WeightedGraph& tree) {
    if (!tree.is_tree()) throw Error(ErrorCode::NotATree, "canonical form requires a tree");
    // centres by repeated leaf stripping
    std::vector<std::size_t> degree(tree.vertex_count());
    std::vector<VertexIndex> layer;
    for (VertexIndex v = 0; v < tree.vertex_count(); ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = tree.vertex_count();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<VertexIndex> next;
        for (auto v : layer)
            for (auto w : tree.neighbors(v))
                if (--degree[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    const VertexIndex none = tree.vertex_count();
    if (layer.size() == 1) return encode(tree, layer[0], none);
    auto a = encode(tree, layer[0], layer[1]);
    auto b = encode(tree, layer[1], layer[0]);
    if (b < a) std::swap(a, b);
    return "E" + std::to_string(tree.weight(layer[0], layer[1])) + a + b;
}

std::vector<WeightedGraph> enumerate_trees(int n) {
    if (n < 1) return {};
    std::vector<WeightedGraph> trees{WeightedGraph({vertex_name(0)}, {})};
    for (int size = 2; size <= n; ++size) {
        std::vector<WeightedGraph> grown;
        std::set<std::string> seen;
        for (const auto& t : trees) {
            auto names = t.vertices();
            names.push_back(vertex_name(size - 1));
            for (VertexIndex v = 0; v < t.vertex_count(); ++v) {
                auto edges = t.weighted_edges();
                edges.push_back({t.name(v), names.back(), 1});
                WeightedGraph g(names, edges);
                if (seen.insert(canonical_form(g)).second) grown.push_back(std::move(g));
            }
        }
        trees = std::move(grown);
    }
    return trees;
}

std::vector<WeightedGraph> enumerate_weighted_trees(int max_vertices, int max_weight) {
    std::vector<WeightedGraph> out;
    for (int n = 2; n <= max_vertices; ++n) {
        std::set<std::string> seen;
        auto keep = [&](WeightedGraph g) {
            if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
        };
        for (const auto& tree : enumerate_trees(n)) {
            keep(tree);
            for (int w = 2; w <= max_weight; ++w)
                for (std::size_t e = 0; e < tree.edge_count(); ++e) keep(reweighted(tree, {{e, w}}));
            for (const auto& [a, b] : separated_edge_pairs(tree))
                for (int wa = 2; wa <= max_weight; ++wa)
                    for (int wb = 2; wb <= max_weight; ++wb) keep(reweighted(tree, {{a, wa}, {b, wb}}));
        }
    }
    return out;
}

VerificationReport verify_instance(const WeightedGraph& tree, int t_max, const OracleLimits& limits,
                                   const ReferenceValues* reference) {
    if (!tree.is_tree()) throw Error(ErrorCode::NotATree, "verification requires a tree");
    if (t_max < 1) throw Error(ErrorCode::InvalidInput, "t_max must be >= 1");

    VerificationReport r;
    r.instance = tree;
    r.integrally_closed = is_integrally_closed(tree);
    r.nu = induced_matching_number(tree).size;
    if (!r.integrally_closed) {
        r.notes.push_back("NOT_INTEGRALLY_CLOSED: no closed form applies");
        r.verdict = Verdict::Skipped;
        return r;
    }

    r.formula = reg_closed_form(tree);
    if (!tree.is_trivial()) {
        r.spine = non_trivial_spine(tree);
        const auto& s = *r.spine;
        r.s_i = r.formula->inputs.s_i;
        if (s.omega_i_plus_2) {
            auto e = tree.find_edge(s.path[s.heavy_index + 1], s.path[s.heavy_index + 2]);
            r.s_i_plus_2 = constrained_matching_number(tree, *e).size;
        }
    }

    const auto ideal = edge_ideal(tree);
    bool exact_checked = false;
    bool bound_checked = false;
    bool mismatch = false;
    for (int t = 1; t <= t_max; ++t) {
        PowerRecord rec;
        rec.t = t;
        if (t == 1) {
            rec.exact = r.formula->value;
            rec.exact_case = std::string(to_string(r.formula->case_tag));
            rec.bound = r.formula->value;
        } else {
            auto pr = power_regularity(tree, t);
            rec.exact = pr.exact;
            if (pr.exact_case_tag) rec.exact_case = std::string(to_string(*pr.exact_case_tag));
            rec.bound = pr.upper_bound;
        }
        try {
            rec.oracle = regularity(t == 1 ? ideal : power(ideal, t, kDefaultPowerGuard), limits);
        } catch (const Error& e) {
            if (!is_guard(e.code())) throw;
            rec.status = PowerStatus::Skipped;
            rec.skip_reason = e.what();
            r.notes.push_back("SKIPPED t=" + std::to_string(t) + ": " + e.what());
        }
        if (rec.oracle) {
            bool ok = true;
            if (rec.bound && *rec.oracle > *rec.bound) ok = false;
            if (rec.exact) {
                ok = ok && *rec.oracle == *rec.exact;
                exact_checked = true;
            } else {
                bound_checked = true;
            }
            rec.status = !ok ? PowerStatus::Mismatch : rec.exact ? PowerStatus::Exact : PowerStatus::WithinBound;
            if (!ok) {
                mismatch = true;
                r.notes.push_back("MISMATCH t=" + std::to_string(t) + ": oracle " + std::to_string(*rec.oracle) +
                                  (rec.exact ? ", formula " + std::to_string(*rec.exact) : std::string()) +
                                  (rec.bound ? ", bound " + std::to_string(*rec.bound) : std::string()));
                if (tree.is_trivial())
                    r.notes.push_back("TRIVIAL_TREE_READING t=" + std::to_string(t) + ": reg(I^t) = 2t+nu-1 gives " +
                                      std::to_string(2 * t + *r.nu - 1) + ", the reg(S/I^t) reading gives " +
                                      std::to_string(2 * t + *r.nu - 2) + ", oracle " + std::to_string(*rec.oracle));
            }
        }
        if (t == 1) r.oracle_reg = rec.oracle;
        r.powers.push_back(std::move(rec));
    }

    if (reference) {
        note_reference(r, "nu", reference->nu, r.nu, "tree dynamic program / exhaustive search");
        if (r.spine) {
            const auto& s = *r.spine;
            std::string how = tree.edge_count() <= kExhaustiveEdgeLimit
                                  ? "neighbourhood reduction, confirmed by exhaustive search"
                                  : "neighbourhood reduction";
            note_reference(r, s_name(s.heavy_index), reference->s_i, r.s_i, how);
            note_reference(r, s_name(s.heavy_index + 2), reference->s_i_plus_2, r.s_i_plus_2, how);
        }
        note_reference(r, "reg", reference->reg, r.oracle_reg, "Betti oracle");
        for (const auto& rec : r.powers) {
            auto it = reference->power_reg.find(rec.t);
            if (it != reference->power_reg.end())
                note_reference(r, "reg(I^" + std::to_string(rec.t) + ")", it->second, rec.oracle, "Betti oracle");
        }
    }

    r.verdict = mismatch        ? Verdict::Mismatch
                : exact_checked ? Verdict::Pass
                : bound_checked ? Verdict::BoundOnly
                                : Verdict::Skipped;
    return r;
}

std::vector<GoldenInstance> golden_instances() {
    std::vector<GoldenInstance> out;
    {
        std::vector<std::string> v;
        for (int i = 1; i <= 9; ++i) v.push_back("x" + std::to_string(i));
        WeightedGraph g(v, {{"x1", "x2", 1}, {"x2", "x3", 2}, {"x3", "x4", 1}, {"x4", "x5", 1},
                            {"x3", "x6", 1}, {"x6", "x7", 1}, {"x3", "x8", 1}, {"x8", "x9", 1}});
        ReferenceValues ref;
        ref.nu = 4;
        ref.s_i = 1;
        ref.reg = 5;
        ref.power_reg = {{2, 8}};
        out.push_back({"golden-k5-one-heavy-edge", std::move(g), ref});
    }
    {
        std::vector<std::string> v;
        for (int i = 1; i <= 10; ++i) v.push_back("x" + std::to_string(i));
        WeightedGraph g(v, {{"x1", "x2", 3}, {"x2", "x3", 1}, {"x3", "x4", 2}, {"x2", "x5", 1}, {"x5", "x6", 1},
                            {"x2", "x7", 1}, {"x7", "x8", 1}, {"x2", "x9", 1}, {"x9", "x10", 1}});
        ReferenceValues ref;
        ref.nu = 4;
        ref.s_i = 1;
        ref.s_i_plus_2 = 3;
        ref.reg = 7;
        ref.power_reg = {{2, 12}};
        out.push_back({"golden-k4-two-heavy-edges", std::move(g), ref});
    }
    return out;
}

SuiteSummary run_suite(const SuiteConfig& config, std::ostream& out) {
    if (!config.golden && !config.enumerate && !config.random_count)
        throw Error(ErrorCode::InvalidInput, "select at least one of golden, enumerate, random");
    if (config.max_vertices < 2 || config.max_weight < 1)
        throw Error(ErrorCode::InvalidInput, "max_vertices must be >= 2 and max_weight >= 1");

    SuiteSummary summary;
    auto t_max_for = [&](const WeightedGraph& g) {
        if (config.t_max) return *config.t_max;
        return g.edge_count() <= 6 ? 3 : 2;
    };
    auto emit = [&](VerificationReport report, std::string label) {
        report.index = summary.instances++;
        report.label = std::move(label);
        ++summary.verdicts[report.verdict];
        out << report_to_json(report).dump() << '\n';
        if (!out) throw std::ios_base::failure("failed to write report stream");
    };

    if (config.golden)
        for (const auto& g : golden_instances())
            emit(verify_instance(g.graph, t_max_for(g.graph), config.limits, &g.reference), g.label);
    if (config.enumerate) {
        std::size_t k = 0;
        for (const auto& g : enumerate_weighted_trees(config.max_vertices, config.max_weight))
            emit(verify_instance(g, t_max_for(g), config.limits), "enumerated-" + std::to_string(k++));
    }
    if (config.random_count) {
        Rng rng(config.seed);
        for (int k = 0; k < *config.random_count; ++k) {
            int n = rng.between(2, config.max_vertices);
            auto g = generate_instance(rng.next(), n, config.max_weight);
            emit(verify_instance(g, t_max_for(g), config.limits), "random-" + std::to_string(k));
        }
    }
    summary.exit_code = summary.verdicts[Verdict::Mismatch] > 0 ? exit_code::mismatch : exit_code::ok;
    return summary;
}

}  // namespace wtreereg
