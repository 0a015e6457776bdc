#ifndef DIOSOLVE_SOLVER_HPP
#define DIOSOLVE_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "diosolve/equation.hpp"
#include "diosolve/oracle.hpp"
#include "diosolve/trace.hpp"

namespace diosolve {

struct SolverConfig {
    std::uint64_t seed = 0;
    std::int64_t init_lo = 1;   // initial weight range, inclusive
    std::int64_t init_hi = 10;
    std::int64_t max_iters_per_attempt = 3000;
    std::int64_t max_restarts = 1999;
    std::int64_t restart_range_shift = 10; // widening increment of the range ladder

    friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct SolverState {
    WeightVector weights;
    std::int64_t iteration = 0;        // global across restarts
    std::int64_t restart_index = 0;
    std::int64_t overshoot_streak = 0; // consecutive preceding iterations with direction -1
    bool solved = false;
};

struct StepOutcome {
    CaseApplied case_applied = CaseApplied::Case1;
    std::vector<std::int64_t> deltas;
    WeightVector new_weights; // new = max(1, old + delta) per coordinate
};

enum class SolveStatus { Found, BudgetExhausted, Overflow };

inline std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "found";
        case SolveStatus::BudgetExhausted: return "budget_exhausted";
        case SolveStatus::Overflow: return "overflow";
    }
    return "?";
}

struct SolveResult {
    SolveStatus status = SolveStatus::BudgetExhausted;
    std::optional<WeightVector> solution;
    std::int64_t total_iterations = 0;
    std::int64_t restarts_used = 0;
    std::vector<TraceRecord> trace;

    friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

namespace detail {

/// Unbiased draw from [0, bound), classic rejection on the low partial block.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t min = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t x = rng();
        if (x >= min) return x % bound;
    }
}

} // namespace detail

/// Fresh random weights, each drawn uniformly from [lo, hi].
inline WeightVector init_weights(std::size_t n, std::int64_t lo, std::int64_t hi,
                                 std::mt19937_64& rng) {
    if (n < 1 || lo < 1 || lo > hi) throw std::invalid_argument("bad init range");
    WeightVector w(n);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    for (auto& wi : w) {
        wi = lo + static_cast<std::int64_t>(detail::draw_below(rng, span));
    }
    return w;
}

/// Grow-phase step magnitude: max(1, floor(|E| / (Max * n))).
inline std::int64_t base_step(const DiophantineEquation& eq, std::int64_t err) {
    const std::int64_t denom = max_power(eq) * static_cast<std::int64_t>(eq.powers.size());
    const std::int64_t mag = (err < 0 ? -err : err) / denom;
    return mag < 1 ? 1 : mag;
}

inline CaseApplied classify_case(const SolverState& state, std::int64_t err) {
    if (err == 0) return CaseApplied::Solved;
    if (direction(err) > 0) return CaseApplied::Case1;
    for (auto w : state.weights) {
        if (w == 1) return CaseApplied::Case3;
    }
    return CaseApplied::Case2;
}

/// All weights grow by the same step. Nullopt if any addition overflows.
inline std::optional<StepOutcome> apply_case1(const SolverState& state, std::int64_t step) {
    StepOutcome out;
    out.case_applied = CaseApplied::Case1;
    out.deltas.assign(state.weights.size(), step);
    out.new_weights.reserve(state.weights.size());
    for (auto w : state.weights) {
        auto nw = detail::checked_add(w, step);
        if (!nw) return std::nullopt;
        out.new_weights.push_back(*nw);
    }
    return out;
}

/// Unit decrement of the first weight only; the rest stay put.
inline StepOutcome apply_case2(const SolverState& state) {
    StepOutcome out;
    out.case_applied = CaseApplied::Case2;
    out.deltas.assign(state.weights.size(), 0);
    out.deltas[0] = -1;
    out.new_weights = state.weights;
    out.new_weights[0] = std::max<std::int64_t>(1, out.new_weights[0] - 1);
    return out;
}

/// Boundary kick: the lowest-indexed weight sitting at 1 grows by the
/// momentum s = max(1, overshoot_streak); its successor (wrapping n -> 1)
/// drops by one. With n = 1 the two deltas compose on the single weight.
inline StepOutcome apply_case3(const SolverState& state) {
    const std::size_t n = state.weights.size();
    std::size_t j = 0;
    while (j < n && state.weights[j] != 1) ++j;
    if (j == n) throw std::logic_error("apply_case3 requires some weight == 1");

    const std::int64_t s = std::max<std::int64_t>(1, state.overshoot_streak);
    const std::size_t succ = (j + 1) % n;

    StepOutcome out;
    out.case_applied = CaseApplied::Case3;
    out.deltas.assign(n, 0);
    out.deltas[j] += s;
    out.deltas[succ] -= 1;
    out.new_weights = state.weights;
    for (std::size_t i = 0; i < n; ++i) {
        out.new_weights[i] = std::max<std::int64_t>(1, out.new_weights[i] + out.deltas[i]);
    }
    return out;
}

/// One iteration: evaluate, classify, update, record. Nullopt when the
/// arithmetic is not representable; the caller abandons the attempt.
inline std::optional<std::pair<SolverState, TraceRecord>>
step(const DiophantineEquation& eq, const SolverState& state) {
    auto q = evaluate(eq, state.weights);
    if (!q) return std::nullopt;
    const std::int64_t err = *q - eq.target;
    const int dir = direction(err);
    const CaseApplied kind = classify_case(state, err);

    StepOutcome outcome;
    switch (kind) {
        case CaseApplied::Solved:
            outcome.case_applied = CaseApplied::Solved;
            outcome.deltas.assign(state.weights.size(), 0);
            outcome.new_weights = state.weights;
            break;
        case CaseApplied::Case1: {
            auto o = apply_case1(state, base_step(eq, err));
            if (!o) return std::nullopt;
            outcome = std::move(*o);
            break;
        }
        case CaseApplied::Case2:
            outcome = apply_case2(state);
            break;
        case CaseApplied::Case3:
            outcome = apply_case3(state);
            break;
    }

    SolverState next = state;
    next.weights = outcome.new_weights;
    next.overshoot_streak = dir < 0 ? state.overshoot_streak + 1 : 0;
    next.iteration = state.iteration + 1;
    next.solved = kind == CaseApplied::Solved;

    TraceRecord rec;
    rec.iteration = state.iteration;
    rec.restart_index = state.restart_index;
    rec.weights = next.weights;
    rec.output = *q;
    rec.error = err;
    rec.direction = dir;
    rec.case_applied = kind;
    rec.streak = next.overshoot_streak;
    rec.deltas = outcome.deltas;
    rec.learning_rate = 0;
    for (auto d : rec.deltas) rec.learning_rate += d < 0 ? -d : d;

    return std::make_pair(std::move(next), std::move(rec));
}

/// Runs restart attempts of the three-regime walk until a verified solution
/// is found or the budget runs out. Deterministic for a given (eq, config).
///
/// Each restart draws fresh weights from [init_lo, hi_k], where hi_k cycles
/// through a ladder init_hi, init_hi + shift, ... wide enough to cover the
/// largest possible solution coordinate. An attempt is abandoned early when
/// its state provably repeats or a weight races past any useful magnitude;
/// both are treated like an exhausted iteration budget.
inline SolveResult solve(const DiophantineEquation& eq, const SolverConfig& config) {
    require_valid(eq);
    if (config.init_lo < 1 || config.init_lo > config.init_hi)
        throw std::invalid_argument("init range must satisfy 1 <= lo <= hi");
    if (config.max_iters_per_attempt < 1) throw std::invalid_argument("max_iters_per_attempt must be >= 1");
    if (config.max_restarts < 0) throw std::invalid_argument("max_restarts must be >= 0");
    if (config.restart_range_shift < 1) throw std::invalid_argument("restart_range_shift must be >= 1");

    const std::size_t n = eq.powers.size();
    std::int64_t max_root = 1;
    for (auto p : eq.powers) max_root = std::max(max_root, integer_root(eq.target, p));

    // ladder period: enough rungs for the widest range to reach max_root
    std::int64_t rungs = 1;
    if (max_root > config.init_hi) {
        rungs += (max_root - config.init_hi + config.restart_range_shift - 1)
                 / config.restart_range_shift;
    }

    std::mt19937_64 rng(config.seed);
    SolveResult result;
    bool overflow_seen = false;

    std::set<std::pair<WeightVector, std::int64_t>> seen; // (weights, streak) per attempt
    for (std::int64_t attempt = 0; attempt <= config.max_restarts; ++attempt) {
        const std::int64_t hi = config.init_hi + config.restart_range_shift * (attempt % rungs);
        const std::int64_t lo = config.init_lo;
        const std::int64_t runaway_limit = 4 * (max_root + hi) + 64;

        SolverState state;
        state.weights = init_weights(n, lo, hi, rng);
        state.restart_index = attempt;
        state.iteration = result.total_iterations;
        result.restarts_used = attempt;

        seen.clear();
        for (std::int64_t it = 0; it < config.max_iters_per_attempt; ++it) {
            if (!seen.emplace(state.weights, state.overshoot_streak).second) {
                break; // state repeats: this attempt cycles forever
            }
            auto stepped = step(eq, state);
            if (!stepped) {
                overflow_seen = true;
                break;
            }
            state = std::move(stepped->first);
            result.trace.push_back(std::move(stepped->second));
            result.total_iterations = state.iteration;

            if (state.solved) {
                if (error(eq, state.weights).value_or(1) != 0)
                    throw std::logic_error("solver produced an unverified solution");
                result.status = SolveStatus::Found;
                result.solution = state.weights;
                return result;
            }
            bool runaway = false;
            for (auto w : state.weights) runaway = runaway || w > runaway_limit;
            if (runaway) break;
        }
    }

    result.status = overflow_seen ? SolveStatus::Overflow : SolveStatus::BudgetExhausted;
    return result;
}

} // namespace diosolve

#endif // DIOSOLVE_SOLVER_HPP
