#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtreereg/betti.hpp"
#include "wtreereg/formulas.hpp"
#include "wtreereg/wgraph.hpp"

namespace wtreereg {

inline constexpr int kReportSchemaVersion = 1;

enum class Verdict { Pass, BoundOnly, Mismatch, Skipped };
std::string_view to_string(Verdict v) noexcept;

enum class PowerStatus { Exact, WithinBound, Mismatch, Skipped, Unchecked };
std::string_view to_string(PowerStatus s) noexcept;

struct PowerRecord {
    int t = 1;
    std::optional<int> exact;
    std::optional<std::string> exact_case;
    std::optional<int> bound;
    std::optional<int> oracle;
    PowerStatus status = PowerStatus::Unchecked;
    std::optional<std::string> skip_reason;  // guard that tripped
};

/// Values published alongside a golden instance; recomputed values that
/// disagree with them are noted, never asserted.
struct ReferenceValues {
    std::optional<int> nu;
    std::optional<int> s_i;
    std::optional<int> s_i_plus_2;
    std::optional<int> reg;
    std::map<int, int> power_reg;
};

struct VerificationReport {
    std::string label;
    std::size_t index = 0;
    WeightedGraph instance;
    bool integrally_closed = false;
    std::optional<SpineData> spine;
    std::optional<int> nu;
    std::optional<int> s_i;
    std::optional<int> s_i_plus_2;
    std::optional<RegFormulaResult> formula;
    std::optional<int> oracle_reg;
    std::vector<PowerRecord> powers;
    Verdict verdict = Verdict::Skipped;
    std::vector<std::string> notes;
};

/// Random tree from a Prüfer sequence with 0, 1 or 2 non-trivial edges placed
/// so the result is integrally closed. `heavy_edges` forces the count;
/// otherwise it is drawn from the feasible counts. Deterministic in `seed`.
WeightedGraph generate_instance(std::uint64_t seed, int n, int max_weight,
                                std::optional<int> heavy_edges = std::nullopt);

/// Tree with vertices x1..xn decoded from a Prüfer sequence over 0..n-1.
WeightedGraph tree_from_pruefer(const std::vector<int>& sequence, int n);

/// Isomorphism-invariant string of a weighted tree.
std::string canonical_form(const WeightedGraph& tree);

/// All unweighted trees on n vertices up to isomorphism (vertices x1..xn).
std::vector<WeightedGraph> enumerate_trees(int n);

/// All integrally closed weighted trees with 2..max_vertices vertices and
/// weights in 1..max_weight, up to weighted isomorphism.
std::vector<WeightedGraph> enumerate_weighted_trees(int max_vertices, int max_weight);

/// Runs formulas, invariants and (within guards) the Betti oracle for
/// t = 1..t_max. Throws NotATree.
VerificationReport verify_instance(const WeightedGraph& tree, int t_max, const OracleLimits& limits = {},
                                   const ReferenceValues* reference = nullptr);

struct GoldenInstance {
    std::string label;
    WeightedGraph graph;
    ReferenceValues reference;
};

/// The two worked examples with their published values.
std::vector<GoldenInstance> golden_instances();

struct SuiteConfig {
    bool golden = false;
    bool enumerate = false;
    std::optional<int> random_count;
    std::uint64_t seed = 1;
    int max_vertices = 7;
    int max_weight = 3;
    /// Fixed t_max; when absent t_max is 3 for ideals with at most six
    /// generators and 2 otherwise.
    std::optional<int> t_max;
    OracleLimits limits = {};
};

struct SuiteSummary {
    std::size_t instances = 0;
    std::map<Verdict, std::size_t> verdicts;
    int exit_code = 0;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int usage = 2;
inline constexpr int io_error = 3;
inline constexpr int input_error = 4;
}  // namespace exit_code

/// Writes one JSON line per instance (golden, then enumerated, then random)
/// to `out`. Exit code 0 iff no MISMATCH. Throws InvalidInput when no mode
/// is selected.
SuiteSummary run_suite(const SuiteConfig& config, std::ostream& out);

}  // namespace wtreereg
