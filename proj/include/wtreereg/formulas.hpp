#pragma once

#include <optional>
#include <string_view>

#include "wtreereg/wgraph.hpp"

namespace wtreereg {

// All regularity values are for the ideal I; reg(S/I) = reg(I) - 1.

enum class RegCase { TrivialTree, K4, RegCase1, RegCase2, RegCase3, PathSmall, PathGeneral };
enum class PowerCase { TrivialTreePower, CatK4D1Mid, CatK4D1End, EqCase };

std::string_view to_string(RegCase c) noexcept;
std::string_view to_string(PowerCase c) noexcept;

/// Invariants a formula read off the tree. Absent fields were not needed.
struct FormulaInputs {
    int nu = 0;
    std::optional<int> s_i;
    std::optional<int> s_i_plus_2;
    std::optional<int> omega_i;
    std::optional<int> omega_i_plus_2;
    std::optional<int> k;
    std::optional<int> i;
};

struct RegFormulaResult {
    int value = 0;
    RegCase case_tag = RegCase::TrivialTree;
    FormulaInputs inputs;
};

struct PowerExact {
    int value;
    PowerCase case_tag;
};

struct PowerRegResult {
    int t = 1;
    std::optional<int> exact;
    int upper_bound = 0;
    std::optional<PowerCase> exact_case_tag;
};

/// reg(I(T)) for an integrally closed weighted tree.
RegFormulaResult reg_closed_form(const WeightedGraph& t);

/// Floor-expression form for integrally closed non-trivial weighted paths;
/// agrees with `reg_closed_form`.
RegFormulaResult reg_path_closed_form(const WeightedGraph& p);

/// 2t + ν(T) - 1 for trivially weighted trees.
int reg_power_trivial(const WeightedGraph& t, int power);

/// reg(I(T)^t) where a proven exact formula applies, otherwise nullopt.
std::optional<PowerExact> reg_power_exact(const WeightedGraph& t, int power);

/// 2ω(t - 1) + reg(I(T)) with ω the largest spine weight.
int reg_power_upper_bound(const WeightedGraph& t, int power);

/// Exact value (when known) together with the upper bound; trivially
/// weighted trees get exact = bound = 2t + ν - 1.
PowerRegResult power_regularity(const WeightedGraph& t, int power);

}  // namespace wtreereg
