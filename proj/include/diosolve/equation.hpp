#ifndef DIOSOLVE_EQUATION_HPP
#define DIOSOLVE_EQUATION_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace diosolve {

/// A power-sum equation  w_1^p1 + w_2^p2 + ... + w_n^pn = target,
/// solved over positive integers.
struct DiophantineEquation {
    std::vector<std::int64_t> powers;
    std::int64_t target = 1;

    std::size_t variable_count() const { return powers.size(); }

    friend bool operator==(const DiophantineEquation&, const DiophantineEquation&) = default;
};

/// Candidate solution; one positive integer per variable.
using WeightVector = std::vector<std::int64_t>;

inline bool is_valid(const DiophantineEquation& eq) {
    if (eq.powers.empty() || eq.target < 1) return false;
    return std::all_of(eq.powers.begin(), eq.powers.end(),
                       [](std::int64_t p) { return p >= 1; });
}

inline void require_valid(const DiophantineEquation& eq) {
    if (!is_valid(eq)) {
        throw std::invalid_argument(
            "equation must have n >= 1 variables, powers >= 1 and target >= 1");
    }
}

inline std::int64_t max_power(const DiophantineEquation& eq) {
    require_valid(eq);
    return *std::max_element(eq.powers.begin(), eq.powers.end());
}

namespace detail {

inline std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
    // a, b >= 0
    if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a) return std::nullopt;
    return a * b;
}

inline std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
    if (a > std::numeric_limits<std::int64_t>::max() - b) return std::nullopt;
    return a + b;
}

} // namespace detail

/// base^exp with overflow detection, base >= 1, exp >= 1.
inline std::optional<std::int64_t> checked_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t result = 1;
    std::int64_t acc = base;
    for (;;) {
        if (exp & 1) {
            auto r = detail::checked_mul(result, acc);
            if (!r) return std::nullopt;
            result = *r;
        }
        exp >>= 1;
        if (exp == 0) break;
        auto sq = detail::checked_mul(acc, acc);
        if (!sq) return std::nullopt;
        acc = *sq;
    }
    return result;
}

/// Output value Q = sum of w_i^p_i; nullopt when the sum is not
/// representable (callers treat that as an aborted attempt).
inline std::optional<std::int64_t> evaluate(const DiophantineEquation& eq,
                                            const WeightVector& w) {
    require_valid(eq);
    if (w.size() != eq.powers.size()) {
        throw std::invalid_argument("weight vector length does not match equation");
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1) throw std::invalid_argument("weights must be >= 1");
        auto term = checked_pow(w[i], eq.powers[i]);
        if (!term) return std::nullopt;
        auto next = detail::checked_add(sum, *term);
        if (!next) return std::nullopt;
        sum = *next;
    }
    return sum;
}

/// E = Q - target; zero exactly at a solution.
inline std::optional<std::int64_t> error(const DiophantineEquation& eq,
                                         const WeightVector& w) {
    auto q = evaluate(eq, w);
    if (!q) return std::nullopt;
    return *q - eq.target;
}

/// Update direction derived from the error: +1 grow (output below target),
/// -1 shrink (output above target), 0 solved.
inline int direction(std::int64_t err) {
    if (err < 0) return +1;
    if (err > 0) return -1;
    return 0;
}

} // namespace diosolve

#endif // DIOSOLVE_EQUATION_HPP
