#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "wtreereg/monomial.hpp"

namespace wtreereg {

/// Resource guards for the Betti oracle.
struct OracleLimits {
    std::size_t max_generators = 64;
    std::size_t max_lattice = 50'000;
    std::size_t max_faces = 2'000'000;  // per upper-Koszul complex

    /// Defaults, with `max_lattice` taken from WTREEREG_GUARD_LCM when set.
    static OracleLimits from_environment();
};

/// Graded Betti numbers β_{i,j} of an ideal (not of S/I): β_{0,j} counts the
/// minimal generators of degree j. Only non-zero entries are stored.
class BettiTable {
public:
    void add(int i, int j, long long beta);
    long long operator()(int i, int j) const;
    const std::map<std::pair<int, int>, long long>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// max{ j - i : β_{i,j} ≠ 0 }; throws UndefinedRegularity when empty.
    int regularity() const;
    int projective_dimension() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<std::pair<int, int>, long long> entries_;
};

/// Reduced homology of K^b(I) = { σ ⊆ supp(b) squarefree : x^{b-σ} ∈ I }.
/// Dominated vertices are removed first, so `face_counts` describes the
/// collapsed complex. Both vectors are indexed by dimension + 1, starting at
/// dimension -1.
struct KoszulHomology {
    std::vector<std::size_t> face_counts;
    std::vector<std::size_t> reduced_betti;
    bool cone = false;  // collapsed to a point; homology is zero
};

/// Multidegrees of lcms of non-empty subsets of the minimal generators.
/// Throws LatticeTooLarge once more than `max_lattice` degrees are found.
std::vector<Exponents> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_lattice);

KoszulHomology upper_koszul_homology(const MonomialIdeal& ideal, const Exponents& b,
                                     std::size_t max_faces = OracleLimits{}.max_faces);

struct MultigradedBetti {
    Exponents degree;
    int i;
    long long beta;
};

/// Every non-zero β_{i,b}(I), ordered by lattice degree then i.
std::vector<MultigradedBetti> multigraded_betti(const MonomialIdeal& ideal,
                                                const OracleLimits& limits = {});

BettiTable betti_table(const MonomialIdeal& ideal, const OracleLimits& limits = {});

int regularity(const MonomialIdeal& ideal, const OracleLimits& limits = {});

/// Checks β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J ∩ K) for all i, j.
/// Throws PartitionInvalid unless G(I) is the disjoint union of the non-empty
/// sets G(J) and G(K).
bool betti_splitting_check(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                           const OracleLimits& limits = {});

}  // namespace wtreereg
