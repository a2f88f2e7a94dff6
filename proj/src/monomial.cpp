#include "wtreereg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wtreereg/error.hpp"

namespace wtreereg {

Monomial::Monomial(std::initializer_list<std::pair<const std::string, int>> exps)
    : Monomial(std::map<std::string, int>(exps)) {}

Monomial::Monomial(const std::map<std::string, int>& exps) {
    for (const auto& [var, e] : exps) {
        if (e < 0) throw Error(ErrorCode::InvalidInput, "negative exponent for " + var);
        if (e > 0) exps_.emplace(var, e);
    }
}

int Monomial::exponent(const std::string& var) const {
    auto it = exps_.find(var);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::degree() const noexcept {
    int d = 0;
    for (const auto& [var, e] : exps_) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [&](const auto& ve) { return other.exponent(ve.first) >= ve.second; });
}

std::string Monomial::to_string() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [var, e] : exps_) {
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    auto exps = a.exps_;
    for (const auto& [var, e] : b.exps_) exps[var] += e;
    return Monomial(exps);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    auto exps = a.exps_;
    for (const auto& [var, e] : b.exps_) exps[var] = std::max(exps[var], e);
    return Monomial(exps);
}

int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    // degree ascending, then lexicographically larger exponent vectors first
    std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a > b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> kept;
    for (auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Exponents& h) { return divides(h, g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Exponents> gens)
    : vars_(std::move(vars)) {
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw Error(ErrorCode::InvalidInput, "duplicate ambient variable");
    for (const auto& g : gens) {
        if (g.size() != vars_.size())
            throw Error(ErrorCode::InvalidInput, "generator length does not match ambient");
        if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
            throw Error(ErrorCode::InvalidInput, "negative exponent");
    }
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_monomials(std::vector<std::string> vars, const std::vector<Monomial>& gens) {
    std::vector<Exponents> dense;
    for (const auto& m : gens) {
        Exponents e(vars.size(), 0);
        for (const auto& [var, x] : m.exponents()) {
            auto it = std::find(vars.begin(), vars.end(), var);
            if (it == vars.end()) throw Error(ErrorCode::InvalidInput, "variable " + var + " not in ambient");
            e[static_cast<std::size_t>(it - vars.begin())] = x;
        }
        dense.push_back(std::move(e));
    }
    return MonomialIdeal(std::move(vars), std::move(dense));
}

Monomial MonomialIdeal::monomial(std::size_t i) const {
    std::map<std::string, int> exps;
    for (std::size_t j = 0; j < vars_.size(); ++j)
        if (gens_.at(i)[j] > 0) exps.emplace(vars_[j], gens_[i][j]);
    return Monomial(exps);
}

std::vector<Monomial> MonomialIdeal::monomials() const {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens_.size(); ++i) out.push_back(monomial(i));
    return out;
}

int MonomialIdeal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, degree(g));
    return d;
}

std::size_t MonomialIdeal::var_index(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw Error(ErrorCode::InvalidInput, "variable " + var + " not in ambient");
    return static_cast<std::size_t>(it - vars_.begin());
}

MonomialIdeal MonomialIdeal::with_ambient(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    return from_monomials(vars, monomials());
}

std::string MonomialIdeal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += monomial(i).to_string();
    }
    return out + ")";
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    auto ma = a.monomials();
    auto mb = b.monomials();
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    return ma == mb;
}

std::vector<std::string> unite_ambients(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    auto out = a;
    for (const auto& v : b)
        if (std::find(a.begin(), a.end(), v) == a.end()) out.push_back(v);
    return out;
}

namespace {

std::vector<std::string> ambient_with(const std::vector<std::string>& vars, const Monomial& m) {
    std::vector<std::string> extra;
    for (const auto& [var, e] : m.exponents()) extra.push_back(var);
    return unite_ambients(vars, extra);
}

Exponents dense(const std::vector<std::string>& vars, const Monomial& m) {
    Exponents e(vars.size(), 0);
    for (std::size_t j = 0; j < vars.size(); ++j) e[j] = m.exponent(vars[j]);
    return e;
}

}  // namespace

MonomialIdeal edge_ideal(const WeightedGraph& g) {
    std::vector<Exponents> gens;
    for (const auto& e : g.edges()) {
        Exponents x(g.vertex_count(), 0);
        x[e.u] = e.weight;
        x[e.v] = e.weight;
        gens.push_back(std::move(x));
    }
    return MonomialIdeal(g.vertices(), std::move(gens));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    for (const auto& g : ideal.generators()) {
        bool divides_m = true;
        for (std::size_t j = 0; j < g.size() && divides_m; ++j)
            if (g[j] > m.exponent(ideal.vars()[j])) divides_m = false;
        if (divides_m) return true;
    }
    return false;
}

MonomialIdeal power(const MonomialIdeal& ideal, int t, std::size_t guard) {
    if (t < 1) throw Error(ErrorCode::InvalidInput, "power exponent must be >= 1");
    // number of t-multisets of generators, C(m + t - 1, t), saturating
    const std::size_t m = ideal.generator_count();
    double multisets = 1.0;
    for (int s = 1; s <= t; ++s) multisets = multisets * static_cast<double>(m + s - 1) / s;
    if (multisets > static_cast<double>(guard))
        throw Error(ErrorCode::PowerTooLarge, std::to_string(static_cast<long long>(multisets + 0.5)) +
                                                  " products exceed guard " + std::to_string(guard));
    MonomialIdeal result = ideal;
    for (int s = 2; s <= t; ++s) result = product(result, ideal);
    return result;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    auto vars = unite_ambients(a.vars(), b.vars());
    auto x = a.with_ambient(vars);
    auto y = b.with_ambient(vars);
    std::vector<Exponents> gens;
    gens.reserve(x.generator_count() * y.generator_count());
    for (const auto& g : x.generators()) {
        for (const auto& h : y.generators()) {
            Exponents p(vars.size());
            for (std::size_t j = 0; j < vars.size(); ++j) p[j] = g[j] + h[j];
            gens.push_back(std::move(p));
        }
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    auto vars = ambient_with(ideal.vars(), m);
    auto base = ideal.with_ambient(vars);
    auto md = dense(vars, m);
    std::vector<Exponents> gens;
    for (const auto& g : base.generators()) {
        Exponents q(vars.size());
        for (std::size_t j = 0; j < vars.size(); ++j) q[j] = std::max(g[j] - md[j], 0);
        gens.push_back(std::move(q));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    auto vars = unite_ambients(a.vars(), b.vars());
    auto x = a.with_ambient(vars);
    auto y = b.with_ambient(vars);
    std::vector<Exponents> gens;
    for (const auto& g : x.generators()) {
        for (const auto& h : y.generators()) {
            Exponents l(vars.size());
            for (std::size_t j = 0; j < vars.size(); ++j) l[j] = std::max(g[j], h[j]);
            gens.push_back(std::move(l));
        }
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    auto vars = unite_ambients(a.vars(), b.vars());
    auto gens = a.with_ambient(vars).generators();
    const auto rhs = b.with_ambient(vars);
    for (const auto& h : rhs.generators()) gens.push_back(h);
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const Monomial& m) {
    auto vars = ambient_with(a.vars(), m);
    auto gens = a.with_ambient(vars).generators();
    gens.push_back(dense(vars, m));
    return MonomialIdeal(std::move(vars), std::move(gens));
}

Polarization polarize(const MonomialIdeal& ideal) {
    const auto& vars = ideal.vars();
    std::vector<int> top(vars.size(), 0);
    for (const auto& g : ideal.generators())
        for (std::size_t j = 0; j < vars.size(); ++j) top[j] = std::max(top[j], g[j]);

    Polarization out;
    std::vector<std::string> new_vars;
    std::vector<std::size_t> offset(vars.size(), 0);
    for (std::size_t j = 0; j < vars.size(); ++j) {
        offset[j] = new_vars.size();
        for (int k = 1; k <= top[j]; ++k) {
            new_vars.push_back(vars[j] + "#" + std::to_string(k));
            out.provenance.push_back({vars[j], k});
        }
    }
    std::vector<Exponents> gens;
    for (const auto& g : ideal.generators()) {
        Exponents p(new_vars.size(), 0);
        for (std::size_t j = 0; j < vars.size(); ++j)
            for (int k = 0; k < g[j]; ++k) p[offset[j] + static_cast<std::size_t>(k)] = 1;
        gens.push_back(std::move(p));
    }
    out.ideal = MonomialIdeal(std::move(new_vars), std::move(gens));
    return out;
}

}  // namespace wtreereg
