#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wtreereg/wgraph.hpp"

namespace wtreereg {

/// Dense exponent vector over an ideal's ambient variable list.
using Exponents = std::vector<int>;

/// Name-keyed monomial; only positive exponents are stored.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<const std::string, int>> exps);
    explicit Monomial(const std::map<std::string, int>& exps);

    const std::map<std::string, int>& exponents() const noexcept { return exps_; }
    int exponent(const std::string& var) const;
    int degree() const noexcept;
    bool divides(const Monomial& other) const;
    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::map<std::string, int> exps_;
};

/// Monomial ideal held as its minimal generating set over an ordered ambient
/// variable list. The zero ideal has no generators; the unit ideal has the
/// single generator 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Generators are minimalized and put in canonical order.
    MonomialIdeal(std::vector<std::string> vars, std::vector<Exponents> gens);
    static MonomialIdeal from_monomials(std::vector<std::string> vars, const std::vector<Monomial>& gens);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const std::vector<Exponents>& generators() const noexcept { return gens_; }
    std::size_t generator_count() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }

    Monomial monomial(std::size_t i) const;
    std::vector<Monomial> monomials() const;
    int max_generator_degree() const;
    std::size_t var_index(const std::string& var) const;  // throws InvalidInput

    /// Same generators over a superset ambient; new variables are appended
    /// in the given order.
    MonomialIdeal with_ambient(const std::vector<std::string>& vars) const;

    std::string to_string() const;

    /// Ideal equality: equal minimal generating sets after aligning
    /// variables by name.
    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    std::vector<std::string> vars_;
    std::vector<Exponents> gens_;
};

struct PolarizedVariable {
    std::string source;
    int copy;  // 1-based
};

struct Polarization {
    MonomialIdeal ideal;
    std::vector<PolarizedVariable> provenance;  // parallel to ideal.vars()
};

/// Default guard on the number of t-fold products formed by `power`.
inline constexpr std::size_t kDefaultPowerGuard = 200'000;

int degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
/// Sort, deduplicate, and drop every element divisible by another.
std::vector<Exponents> minimalize(std::vector<Exponents> gens);

MonomialIdeal edge_ideal(const WeightedGraph& g);
bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal power(const MonomialIdeal& ideal, int t, std::size_t guard = kDefaultPowerGuard);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
Polarization polarize(const MonomialIdeal& ideal);

/// Union of two ambients: a's variables, then b's new ones in order.
std::vector<std::string> unite_ambients(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace wtreereg
