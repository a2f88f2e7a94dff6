#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wtreereg {

/// Sparse integer row: (column, value) pairs, columns strictly increasing,
/// no zero values.
template <typename Scalar>
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

namespace detail {

struct ScalarOverflow : std::overflow_error {
    ScalarOverflow() : std::overflow_error("int64 overflow in exact elimination") {}
};

template <typename Scalar>
struct Arith {
    static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
    static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
    static Scalar gcd(const Scalar& a, const Scalar& b) { return boost::multiprecision::gcd(a, b); }
    static Scalar abs(const Scalar& a) { return a < 0 ? Scalar(-a) : a; }
};

template <>
struct Arith<std::int64_t> {
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw ScalarOverflow();
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw ScalarOverflow();
        return r;
    }
    static std::int64_t abs(std::int64_t a) {
        if (a == INT64_MIN) throw ScalarOverflow();
        return a < 0 ? -a : a;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) {
        a = abs(a);
        b = abs(b);
        while (b != 0) {
            auto t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
};

template <typename Scalar>
void normalize(SparseRow<Scalar>& row) {
    using A = Arith<Scalar>;
    Scalar g = 0;
    for (const auto& [c, v] : row) {
        g = A::gcd(g, v);
        if (g == 1) break;
    }
    bool flip = row.front().second < 0;
    if (g == 1 && !flip) return;
    for (auto& [c, v] : row) {
        v = v / g;
        if (flip) v = -v;
    }
}

// row <- beta * row - alpha * pivot; entries cancelling to zero are dropped
template <typename Scalar>
SparseRow<Scalar> combine(const SparseRow<Scalar>& row, const Scalar& beta,
                          const SparseRow<Scalar>& pivot, const Scalar& alpha) {
    using A = Arith<Scalar>;
    SparseRow<Scalar> out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, A::mul(beta, row[i].second));
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, A::sub(Scalar(0), A::mul(alpha, pivot[j].second)));
            ++j;
        } else {
            Scalar v = A::sub(A::mul(beta, row[i].second), A::mul(alpha, pivot[j].second));
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

/// Rank over the rationals of an integer matrix given by sparse rows, by
/// fraction-free elimination (rows are kept primitive after every step).
template <typename Scalar>
std::size_t exact_rank(std::vector<SparseRow<Scalar>> rows, std::size_t columns) {
    using A = detail::Arith<Scalar>;
    std::vector<std::optional<SparseRow<Scalar>>> pivot_of(columns);
    std::size_t rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto col = row.front().first;
            auto& pivot = pivot_of.at(col);
            if (!pivot) {
                detail::normalize(row);
                pivot = std::move(row);
                ++rank;
                break;
            }
            Scalar a = row.front().second;
            Scalar b = pivot->front().second;
            Scalar g = A::gcd(a, b);
            row = detail::combine(row, Scalar(b / g), *pivot, Scalar(a / g));
            if (!row.empty()) detail::normalize(row);
        }
    }
    return rank;
}

/// int64 fast path with a transparent retry in arbitrary precision.
inline std::size_t exact_rank(const std::vector<SparseRow<std::int64_t>>& rows, std::size_t columns) {
    try {
        return exact_rank<std::int64_t>(rows, columns);
    } catch (const detail::ScalarOverflow&) {
        using Big = boost::multiprecision::cpp_int;
        std::vector<SparseRow<Big>> big;
        big.reserve(rows.size());
        for (const auto& r : rows) {
            SparseRow<Big> br;
            for (const auto& [c, v] : r) br.emplace_back(c, Big(v));
            big.push_back(std::move(br));
        }
        return exact_rank<Big>(std::move(big), columns);
    }
}

}  // namespace wtreereg
