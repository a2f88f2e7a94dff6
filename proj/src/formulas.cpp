#include "wtreereg/formulas.hpp"

#include <algorithm>
#include <string>

#include "wtreereg/error.hpp"
#include "wtreereg/matchings.hpp"

namespace wtreereg {

std::string_view to_string(RegCase c) noexcept {
    switch (c) {
        case RegCase::TrivialTree: return "TRIVIAL_TREE";
        case RegCase::K4: return "K4";
        case RegCase::RegCase1: return "REG_CASE1";
        case RegCase::RegCase2: return "REG_CASE2";
        case RegCase::RegCase3: return "REG_CASE3";
        case RegCase::PathSmall: return "PATH_SMALL";
        case RegCase::PathGeneral: return "PATH_GENERAL";
    }
    return "UNKNOWN";
}

std::string_view to_string(PowerCase c) noexcept {
    switch (c) {
        case PowerCase::TrivialTreePower: return "TRIVIAL_TREE_POWER";
        case PowerCase::CatK4D1Mid: return "CAT_K4_D1_MID";
        case PowerCase::CatK4D1End: return "CAT_K4_D1_END";
        case PowerCase::EqCase: return "EQ_CASE";
    }
    return "UNKNOWN";
}

namespace {

void require_closed_tree(const WeightedGraph& t) {
    if (!t.is_tree()) throw Error(ErrorCode::NotATree, "formula requires a tree");
    if (!is_integrally_closed(t)) throw Error(ErrorCode::NotIntegrallyClosed, "formula requires integral closure");
}

void require_power(int power) {
    if (power < 1) throw Error(ErrorCode::InvalidInput, "power must be >= 1");
}

int floor_div3(int a) { return a >= 0 ? a / 3 : -((-a + 2) / 3); }

int s_of_spine_edge(const WeightedGraph& t, const SpineData& s, std::size_t index) {
    auto e = t.find_edge(s.path.at(index - 1), s.path.at(index));
    return constrained_matching_number(t, *e).size;
}

}  // namespace

RegFormulaResult reg_closed_form(const WeightedGraph& t) {
    require_closed_tree(t);
    RegFormulaResult r;
    r.inputs.nu = induced_matching_number(t).size;
    if (t.is_trivial()) {
        r.value = r.inputs.nu + 1;
        r.case_tag = RegCase::TrivialTree;
        return r;
    }

    const auto spine = non_trivial_spine(t);
    const int k = static_cast<int>(spine.k());
    const int i = static_cast<int>(spine.heavy_index);
    const int w = spine.omega_i;
    r.inputs.k = k;
    r.inputs.i = i;
    r.inputs.omega_i = w;
    r.inputs.omega_i_plus_2 = spine.omega_i_plus_2;
    r.inputs.s_i = s_of_spine_edge(t, spine, spine.heavy_index);

    if (k == 4 && i == 2) {
        r.value = 2 * w;
        r.case_tag = RegCase::K4;
    } else if (!spine.omega_i_plus_2) {
        r.value = 2 * w;
        r.case_tag = RegCase::RegCase1;
    } else if (*spine.omega_i_plus_2 == 1) {
        r.value = std::max(r.inputs.nu + 1, 2 * w + *r.inputs.s_i - 1);
        r.case_tag = RegCase::RegCase2;
    } else {
        r.inputs.s_i_plus_2 = s_of_spine_edge(t, spine, spine.heavy_index + 2);
        r.value = std::max({r.inputs.nu + 1, 2 * w + *r.inputs.s_i - 1,
                            2 * *spine.omega_i_plus_2 + *r.inputs.s_i_plus_2 - 1});
        r.case_tag = RegCase::RegCase3;
    }
    return r;
}

RegFormulaResult reg_path_closed_form(const WeightedGraph& p) {
    if (!p.is_path()) throw Error(ErrorCode::NotAPath, "path formula requires a path");
    if (p.is_trivial()) throw Error(ErrorCode::TrivialWeights, "path formula needs a non-trivial weight");
    if (!is_integrally_closed(p)) throw Error(ErrorCode::NotIntegrallyClosed, "path is not integrally closed");

    RegFormulaResult r;
    const int n = static_cast<int>(p.vertex_count());
    r.inputs.nu = (n + 1) / 3;
    r.inputs.k = n;
    if (n <= 4) {
        r.value = 2 * p.max_weight();
        r.inputs.omega_i = p.max_weight();
        r.case_tag = RegCase::PathSmall;
        return r;
    }
    const auto spine = non_trivial_spine(p);
    const int i = static_cast<int>(spine.heavy_index);
    const int wi = spine.omega_i;
    const int wi2 = spine.omega_i_plus_2.value();
    r.inputs.i = i;
    r.inputs.omega_i = wi;
    r.inputs.omega_i_plus_2 = wi2;
    r.inputs.s_i = floor_div3(i - 1) + floor_div3(n - (i + 1)) + 1;
    r.inputs.s_i_plus_2 = floor_div3(i + 1) + floor_div3(n - (i + 3)) + 1;
    r.value = std::max(2 * wi + floor_div3(i - 1) + floor_div3(n - (i + 1)),
                       2 * wi2 + floor_div3(i - 2) + floor_div3(n - i));
    r.case_tag = RegCase::PathGeneral;
    return r;
}

int reg_power_trivial(const WeightedGraph& t, int power) {
    require_power(power);
    if (!t.is_tree()) throw Error(ErrorCode::NotATree, "formula requires a tree");
    if (!t.is_trivial()) throw Error(ErrorCode::NonTrivialWeights, "tree has a non-trivial edge");
    return 2 * power + induced_matching_number(t).size - 1;
}

std::optional<PowerExact> reg_power_exact(const WeightedGraph& t, int power) {
    require_power(power);
    require_closed_tree(t);
    if (t.is_trivial()) return PowerExact{reg_power_trivial(t, power), PowerCase::TrivialTreePower};

    const auto spine = non_trivial_spine(t);
    if (spine.k() == 4 && spine.d == 1 && is_caterpillar(t)) {
        int w1 = spine.spine_weight(t, 1), w2 = spine.spine_weight(t, 2), w3 = spine.spine_weight(t, 3);
        int top = std::max({w1, w2, w3});
        if (w2 == top) return PowerExact{2 * w2 * power, PowerCase::CatK4D1Mid};
        return PowerExact{2 * top * power, PowerCase::CatK4D1End};
    }
    auto reg = reg_closed_form(t);
    const int s_i = reg.inputs.s_i.value();
    if (reg.value == 2 * spine.omega_i + s_i - 1)
        return PowerExact{2 * spine.omega_i * power + s_i - 1, PowerCase::EqCase};
    return std::nullopt;
}

int reg_power_upper_bound(const WeightedGraph& t, int power) {
    require_power(power);
    require_closed_tree(t);
    if (t.is_trivial()) throw Error(ErrorCode::TrivialWeights, "use reg_power_trivial for trivial trees");
    const auto spine = non_trivial_spine(t);
    return 2 * spine.omega_i * (power - 1) + reg_closed_form(t).value;
}

PowerRegResult power_regularity(const WeightedGraph& t, int power) {
    PowerRegResult r;
    r.t = power;
    if (auto exact = reg_power_exact(t, power)) {
        r.exact = exact->value;
        r.exact_case_tag = exact->case_tag;
    }
    r.upper_bound = t.is_trivial() ? reg_power_trivial(t, power) : reg_power_upper_bound(t, power);
    return r;
}

}  // namespace wtreereg
