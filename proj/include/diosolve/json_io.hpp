#ifndef DIOSOLVE_JSON_IO_HPP
#define DIOSOLVE_JSON_IO_HPP

#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "diosolve/solver.hpp"
#include "diosolve/trace.hpp"

namespace diosolve {

inline SolveStatus status_from_string(std::string_view s) {
    if (s == "found") return SolveStatus::Found;
    if (s == "budget_exhausted") return SolveStatus::BudgetExhausted;
    if (s == "overflow") return SolveStatus::Overflow;
    throw std::invalid_argument("unknown status: " + std::string(s));
}

inline void to_json(nlohmann::json& j, const TraceRecord& r) {
    j = nlohmann::json{
        {"iteration", r.iteration},
        {"restart", r.restart_index},
        {"case", to_string(r.case_applied)},
        {"direction", r.direction},
        {"streak", r.streak},
        {"output", r.output},
        {"error", r.error},
        {"learning_rate", r.learning_rate},
        {"weights", r.weights},
        {"deltas", r.deltas},
    };
}

inline void from_json(const nlohmann::json& j, TraceRecord& r) {
    r.iteration = j.at("iteration").get<std::int64_t>();
    r.restart_index = j.at("restart").get<std::int64_t>();
    r.case_applied = case_from_string(j.at("case").get<std::string>());
    r.direction = j.at("direction").get<int>();
    r.streak = j.at("streak").get<std::int64_t>();
    r.output = j.at("output").get<std::int64_t>();
    r.error = j.at("error").get<std::int64_t>();
    r.learning_rate = j.at("learning_rate").get<std::int64_t>();
    r.weights = j.at("weights").get<WeightVector>();
    r.deltas = j.at("deltas").get<std::vector<std::int64_t>>();
}

inline void to_json(nlohmann::json& j, const SolveResult& res) {
    j = nlohmann::json{
        {"status", to_string(res.status)},
        {"solution", res.solution ? nlohmann::json(*res.solution) : nlohmann::json(nullptr)},
        {"total_iterations", res.total_iterations},
        {"restarts_used", res.restarts_used},
        {"trace", res.trace},
    };
}

inline void from_json(const nlohmann::json& j, SolveResult& res) {
    res.status = status_from_string(j.at("status").get<std::string>());
    if (j.at("solution").is_null()) {
        res.solution.reset();
    } else {
        res.solution = j.at("solution").get<WeightVector>();
    }
    res.total_iterations = j.at("total_iterations").get<std::int64_t>();
    res.restarts_used = j.at("restarts_used").get<std::int64_t>();
    res.trace = j.at("trace").get<std::vector<TraceRecord>>();
}

inline void export_json(const SolveResult& res, std::ostream& os) {
    os << nlohmann::json(res).dump(2) << '\n';
}

inline void export_json(const SolveResult& res, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open json destination: " + path);
    export_json(res, os);
    os.flush();
    if (!os) throw std::runtime_error("write failed for json destination: " + path);
}

} // namespace diosolve

#endif // DIOSOLVE_JSON_IO_HPP
