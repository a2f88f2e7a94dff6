#include "wtreereg/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "wtreereg/error.hpp"
#include "wtreereg/exact_rank.hpp"

namespace wtreereg {

OracleLimits OracleLimits::from_environment() {
    OracleLimits limits;
    if (const char* raw = std::getenv("WTREEREG_GUARD_LCM"); raw && *raw) {
        char* end = nullptr;
        auto value = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || value == 0)
            throw Error(ErrorCode::InvalidInput, std::string("WTREEREG_GUARD_LCM must be a positive integer, got '") +
                                                     raw + "'");
        limits.max_lattice = static_cast<std::size_t>(value);
    }
    return limits;
}

void BettiTable::add(int i, int j, long long beta) {
    if (beta == 0) return;
    if (beta < 0 || i < 0 || j < 0) throw std::invalid_argument("BettiTable::add: negative entry");
    entries_[{i, j}] += beta;
}

long long BettiTable::operator()(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
    if (entries_.empty()) throw Error(ErrorCode::UndefinedRegularity, "regularity of the zero ideal");
    int reg = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [ij, beta] : entries_) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

int BettiTable::projective_dimension() const {
    int pd = -1;
    for (const auto& [ij, beta] : entries_) pd = std::max(pd, ij.first);
    return pd;
}

namespace {

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

std::size_t rank_of_boundary(const std::vector<std::uint32_t>& faces, const std::vector<std::uint32_t>& lower) {
    std::vector<SparseRow<std::int64_t>> rows;
    rows.reserve(faces.size());
    for (auto f : faces) {
        SparseRow<std::int64_t> row;
        std::int64_t sign = 1;
        for (auto rest = f; rest != 0; rest &= rest - 1) {
            auto bit = rest & (~rest + 1);
            auto it = std::lower_bound(lower.begin(), lower.end(), f & ~bit);
            row.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), sign);
            sign = -sign;
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    return exact_rank(rows, lower.size());
}

}  // namespace

std::vector<Exponents> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_lattice) {
    const auto& gens = ideal.generators();
    std::unordered_set<Exponents, ExponentsHash> seen(gens.begin(), gens.end());
    if (seen.size() > max_lattice)
        throw Error(ErrorCode::LatticeTooLarge, "lcm lattice exceeds guard " + std::to_string(max_lattice));
    std::vector<Exponents> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
        std::vector<Exponents> next;
        for (const auto& b : frontier) {
            for (const auto& g : gens) {
                Exponents l(b.size());
                for (std::size_t j = 0; j < b.size(); ++j) l[j] = std::max(b[j], g[j]);
                if (l == b || !seen.insert(l).second) continue;
                if (seen.size() > max_lattice)
                    throw Error(ErrorCode::LatticeTooLarge,
                                "lcm lattice exceeds guard " + std::to_string(max_lattice));
                next.push_back(std::move(l));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Exponents> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a > b;
    });
    return out;
}

namespace {

std::vector<std::uint32_t> maximal_sets(std::vector<std::uint32_t> sets) {
    std::sort(sets.begin(), sets.end(), [](auto x, auto y) { return std::popcount(x) > std::popcount(y); });
    std::vector<std::uint32_t> out;
    for (auto f : sets)
        if (std::none_of(out.begin(), out.end(), [f](auto m) { return (f & m) == f; })) out.push_back(f);
    return out;
}

}  // namespace

KoszulHomology upper_koszul_homology(const MonomialIdeal& ideal, const Exponents& b, std::size_t max_faces) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] > 0) support.push_back(j);
    if (support.size() > 30)
        throw Error(ErrorCode::LatticeTooLarge, "upper-Koszul complex on more than 30 vertices");

    // facet of generator g (when g | b): { j in supp(b) : g_j < b_j }
    std::vector<std::uint32_t> facets;
    for (const auto& g : ideal.generators()) {
        if (!divides(g, b)) continue;
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < support.size(); ++k)
            if (g[support[k]] < b[support[k]]) mask |= std::uint32_t{1} << k;
        facets.push_back(mask);
    }
    KoszulHomology out;
    if (facets.empty()) return out;  // void complex

    auto maximal = maximal_sets(std::move(facets));

    // Strong collapses: drop a vertex v while some other vertex lies in every
    // facet containing v. Homotopy type is unchanged.
    for (bool changed = true; changed;) {
        changed = false;
        std::uint32_t present = 0;
        for (auto f : maximal) present |= f;
        for (std::size_t v = 0; v < support.size() && !changed; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << v;
            if (!(present & bit)) continue;
            std::uint32_t shared = present & ~bit;
            for (auto f : maximal)
                if (f & bit) shared &= f;
            if (shared == 0) continue;
            for (auto& f : maximal) f &= ~bit;
            maximal = maximal_sets(std::move(maximal));
            changed = true;
        }
    }

    std::uint32_t common = ~std::uint32_t{0};
    for (auto f : maximal) common &= f;
    if (common != 0) {
        out.cone = true;
        return out;
    }

    std::unordered_set<std::uint32_t> faces;
    for (auto f : maximal) {
        for (std::uint32_t sub = f;; sub = (sub - 1) & f) {
            faces.insert(sub);
            if (faces.size() > max_faces)
                throw Error(ErrorCode::LatticeTooLarge,
                            "upper-Koszul complex exceeds " + std::to_string(max_faces) + " faces");
            if (sub == 0) break;
        }
    }
    int top = 0;
    for (auto f : maximal) top = std::max(top, std::popcount(f));
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 1);
    for (auto f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (auto& layer : by_size) std::sort(layer.begin(), layer.end());

    // rank[s] = rank of the boundary map from faces with s vertices
    std::vector<std::size_t> rank(by_size.size() + 1, 0);
    for (std::size_t s = 1; s < by_size.size(); ++s)
        rank[s] = s == 1 ? (by_size[1].empty() ? 0 : 1) : rank_of_boundary(by_size[s], by_size[s - 1]);

    long long euler_faces = 0;
    long long euler_homology = 0;
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        out.face_counts.push_back(by_size[s].size());
        out.reduced_betti.push_back(by_size[s].size() - rank[s] - rank[s + 1]);
        long long sign = s % 2 == 0 ? -1 : 1;  // dimension s - 1
        euler_faces += sign * static_cast<long long>(by_size[s].size());
        euler_homology += sign * static_cast<long long>(out.reduced_betti.back());
    }
    if (euler_faces != euler_homology)
        throw std::logic_error("upper-Koszul homology fails the Euler characteristic check");
    return out;
}

std::vector<MultigradedBetti> multigraded_betti(const MonomialIdeal& ideal, const OracleLimits& limits) {
    if (ideal.generator_count() > limits.max_generators)
        throw Error(ErrorCode::TooManyGenerators, std::to_string(ideal.generator_count()) +
                                                      " generators exceed guard " +
                                                      std::to_string(limits.max_generators));
    std::vector<MultigradedBetti> out;
    if (ideal.is_zero()) return out;
    for (const auto& b : lcm_lattice(ideal, limits.max_lattice)) {
        auto h = upper_koszul_homology(ideal, b, limits.max_faces);
        for (std::size_t s = 0; s < h.reduced_betti.size(); ++s)
            if (h.reduced_betti[s] != 0)
                out.push_back({b, static_cast<int>(s), static_cast<long long>(h.reduced_betti[s])});
    }
    return out;
}

BettiTable betti_table(const MonomialIdeal& ideal, const OracleLimits& limits) {
    BettiTable table;
    for (const auto& entry : multigraded_betti(ideal, limits)) table.add(entry.i, degree(entry.degree), entry.beta);
    return table;
}

int regularity(const MonomialIdeal& ideal, const OracleLimits& limits) {
    if (ideal.is_zero()) throw Error(ErrorCode::UndefinedRegularity, "regularity of the zero ideal");
    return betti_table(ideal, limits).regularity();
}

bool betti_splitting_check(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                           const OracleLimits& limits) {
    auto gi = i.monomials();
    auto gj = j.monomials();
    auto gk = k.monomials();
    if (gj.empty() || gk.empty())
        throw Error(ErrorCode::PartitionInvalid, "both parts of a splitting need generators");
    std::set<Monomial> sj(gj.begin(), gj.end());
    std::set<Monomial> sk(gk.begin(), gk.end());
    std::set<Monomial> si(gi.begin(), gi.end());
    std::set<Monomial> joined = sj;
    for (const auto& m : sk)
        if (!joined.insert(m).second)
            throw Error(ErrorCode::PartitionInvalid, "generator " + m.to_string() + " lies in both parts");
    if (joined != si) throw Error(ErrorCode::PartitionInvalid, "parts do not reproduce G(I)");

    auto bi = betti_table(i, limits);
    auto bj = betti_table(j, limits);
    auto bk = betti_table(k, limits);
    auto bjk = betti_table(intersect(j, k), limits);

    std::set<std::pair<int, int>> keys;
    for (const auto* t : {&bi, &bj, &bk}) {
        for (const auto& [ij, beta] : t->entries()) keys.insert(ij);
    }
    for (const auto& [ij, beta] : bjk.entries()) keys.insert({ij.first + 1, ij.second});
    for (const auto& [a, d] : keys) {
        long long rhs = bj(a, d) + bk(a, d) + (a > 0 ? bjk(a - 1, d) : 0);
        if (bi(a, d) != rhs) return false;
    }
    return true;
}

}  // namespace wtreereg
