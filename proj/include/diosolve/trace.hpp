#ifndef DIOSOLVE_TRACE_HPP
#define DIOSOLVE_TRACE_HPP

#include <cstdint>
#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diosolve/equation.hpp"

namespace diosolve {

enum class CaseApplied { Case1, Case2, Case3, Solved };

inline std::string_view to_string(CaseApplied c) {
    switch (c) {
        case CaseApplied::Case1: return "Case1";
        case CaseApplied::Case2: return "Case2";
        case CaseApplied::Case3: return "Case3";
        case CaseApplied::Solved: return "Solved";
    }
    return "?";
}

inline CaseApplied case_from_string(std::string_view s) {
    if (s == "Case1") return CaseApplied::Case1;
    if (s == "Case2") return CaseApplied::Case2;
    if (s == "Case3") return CaseApplied::Case3;
    if (s == "Solved") return CaseApplied::Solved;
    throw std::invalid_argument("unknown case name: " + std::string(s));
}

/// One iteration of a solver run. `output`, `error` and `direction` are
/// computed on the weights the iteration started from; `weights` is the
/// snapshot after the update, so each record explains one decision.
struct TraceRecord {
    std::int64_t iteration = 0;     // global, monotone across restarts
    std::int64_t restart_index = 0;
    WeightVector weights;           // post-update
    std::int64_t output = 0;        // Q, pre-update
    std::int64_t error = 0;         // Q - target, pre-update
    int direction = 0;              // +1 grow, -1 shrink, 0 solved
    CaseApplied case_applied = CaseApplied::Case1;
    std::int64_t streak = 0;        // trailing run of direction == -1, incl. this record
    std::vector<std::int64_t> deltas;
    std::int64_t learning_rate = 0; // sum |delta_i|

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

inline std::vector<std::pair<std::int64_t, std::int64_t>>
error_series(std::span<const TraceRecord> trace) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(trace.size());
    for (const auto& r : trace) out.emplace_back(r.iteration, r.error);
    return out;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>>
learning_rate_series(std::span<const TraceRecord> trace) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(trace.size());
    for (const auto& r : trace) out.emplace_back(r.iteration, r.learning_rate);
    return out;
}

/// CSV columns: iteration,restart,case,direction,streak,output,error,
/// learning_rate,w1..wn  (8 + n columns per row).
inline void export_csv(std::span<const TraceRecord> trace, std::ostream& os,
                       std::size_t variable_count) {
    os << "iteration,restart,case,direction,streak,output,error,learning_rate";
    for (std::size_t i = 1; i <= variable_count; ++i) os << ",w" << i;
    os << '\n';
    for (const auto& r : trace) {
        os << r.iteration << ',' << r.restart_index << ',' << to_string(r.case_applied)
           << ',' << r.direction << ',' << r.streak << ',' << r.output << ','
           << r.error << ',' << r.learning_rate;
        for (auto w : r.weights) os << ',' << w;
        os << '\n';
    }
}

inline void export_csv(std::span<const TraceRecord> trace, const std::string& path,
                       std::size_t variable_count) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open trace destination: " + path);
    export_csv(trace, os, variable_count);
    os.flush();
    if (!os) throw std::runtime_error("write failed for trace destination: " + path);
}

} // namespace diosolve

#endif // DIOSOLVE_TRACE_HPP
