#ifndef DIOSOLVE_ORACLE_HPP
#define DIOSOLVE_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>

#include "diosolve/equation.hpp"

namespace diosolve {

/// All positive-integer solutions of an instance, found by exhaustive
/// search over the bound box [1, floor(N^(1/p_i))] per coordinate.
struct SolutionSet {
    std::vector<WeightVector> solutions; // sorted lexicographically
    bool exhaustive = true;

    bool contains(const WeightVector& w) const {
        return std::binary_search(solutions.begin(), solutions.end(), w);
    }
};

/// Largest integer r with r^p <= n, exact integer arithmetic throughout.
inline std::int64_t integer_root(std::int64_t n, std::int64_t p) {
    if (n < 1 || p < 1) throw std::invalid_argument("integer_root requires n >= 1, p >= 1");
    if (p == 1) return n;
    std::int64_t lo = 1, hi = n;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        auto v = checked_pow(mid, p);
        if (v && *v <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

constexpr std::int64_t kDefaultEnumerationCap = 100'000'000;

namespace detail {

inline void enumerate_rec(const DiophantineEquation& eq, std::size_t idx,
                          std::int64_t residual, WeightVector& partial,
                          std::vector<WeightVector>& out) {
    const std::size_t n = eq.powers.size();
    const std::int64_t p = eq.powers[idx];
    if (idx + 1 == n) {
        std::int64_t r = residual >= 1 ? integer_root(residual, p) : 0;
        if (r >= 1) {
            auto v = checked_pow(r, p);
            if (v && *v == residual) {
                partial.push_back(r);
                out.push_back(partial);
                partial.pop_back();
            }
        }
        return;
    }
    // remaining coordinates each contribute at least 1
    const std::int64_t reserve = static_cast<std::int64_t>(n - idx - 1);
    if (residual - reserve < 1) return;
    const std::int64_t hi = integer_root(residual - reserve, p);
    for (std::int64_t w = 1; w <= hi; ++w) {
        auto term = checked_pow(w, p);
        partial.push_back(w);
        enumerate_rec(eq, idx + 1, residual - *term, partial, out);
        partial.pop_back();
    }
}

} // namespace detail

/// Exhaustively enumerates the full solution set. Returns nullopt when the
/// bound box holds more than `cap` candidate tuples (caller should skip
/// oracle verification for such instances). Pruning on the running residual
/// is an internal speedup only; the returned set equals the full box scan.
inline std::optional<SolutionSet>
enumerate_solutions(const DiophantineEquation& eq,
                    std::int64_t cap = kDefaultEnumerationCap) {
    require_valid(eq);
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");

    std::int64_t box = 1;
    for (auto p : eq.powers) {
        auto next = detail::checked_mul(box, integer_root(eq.target, p));
        if (!next || *next > cap) return std::nullopt;
        box = *next;
    }

    SolutionSet set;
    WeightVector partial;
    partial.reserve(eq.powers.size());
    detail::enumerate_rec(eq, 0, eq.target, partial, set.solutions);
    std::sort(set.solutions.begin(), set.solutions.end());
    set.exhaustive = true;
    return set;
}

} // namespace diosolve

#endif // DIOSOLVE_ORACLE_HPP
