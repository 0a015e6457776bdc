#ifndef DIOSOLVE_BENCH_HPP
#define DIOSOLVE_BENCH_HPP

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diosolve/oracle.hpp"
#include "diosolve/parse.hpp"
#include "diosolve/solver.hpp"

namespace diosolve {

/// One benchmark instance. `known_solution` / `reference_iterations` are
/// metadata attached to the suite definition, shown for comparison only;
/// they never decide success.
struct BenchCase {
    std::string name;
    DiophantineEquation equation;
    std::optional<WeightVector> known_solution;
    std::optional<std::int64_t> reference_iterations;
};

struct BenchCaseStats {
    std::string name;
    std::string equation_text;
    std::int64_t seed_count = 0;
    std::int64_t success_count = 0;
    std::optional<std::int64_t> median_iterations; // over successful runs, lower median
    std::optional<std::int64_t> min_iterations;
    std::optional<std::int64_t> max_iterations;
    std::optional<WeightVector> example_solution;
    std::optional<std::int64_t> reference_iterations;
    bool oracle_checked = false; // full enumeration fit under the cap
};

struct BenchReport {
    std::vector<BenchCaseStats> cases;
    double success_rate = 0.0; // over all (case, seed) runs
};

namespace detail {

inline DiophantineEquation squares(std::size_t n, std::int64_t target) {
    return DiophantineEquation{std::vector<std::int64_t>(n, 2), target};
}

inline DiophantineEquation degree_pair(std::int64_t p, std::int64_t target) {
    return DiophantineEquation{{p, p}, target};
}

} // namespace detail

/// Suite of quadratic instances with a growing number of variables.
inline std::vector<BenchCase> suite_table1() {
    using detail::squares;
    return {
        {"table1/1", squares(2, 149), WeightVector{10, 7}, 10},
        {"table1/2", squares(3, 244), WeightVector{12, 6, 8}, 6},
        {"table1/3", squares(4, 295), WeightVector{1, 2, 13, 11}, 51},
        {"table1/4", squares(5, 325), WeightVector{1, 5, 9, 7, 13}, 33},
        {"table1/5", squares(6, 420), WeightVector{1, 1, 2, 7, 13, 14}, 97},
        {"table1/6", squares(7, 450), WeightVector{1, 1, 2, 2, 10, 14, 12}, 457},
        {"table1/7", squares(8, 590), WeightVector{1, 1, 1, 1, 5, 13, 14, 14}, 1669},
        {"table1/8", squares(9, 720), WeightVector{1, 1, 1, 2, 2, 14, 12, 12, 15}, 1373},
        {"table1/9", squares(10, 956), WeightVector{1, 1, 1, 1, 1, 1, 1, 15, 20, 18}, 9068},
    };
}

/// Suite of two-variable instances with growing degree.
inline std::vector<BenchCase> suite_table2() {
    using detail::degree_pair;
    return {
        {"table2/1", degree_pair(2, 625), WeightVector{20, 15}, 7},
        {"table2/2", degree_pair(3, 1008), WeightVector{2, 10}, 23},
        {"table2/3", degree_pair(4, 1921), WeightVector{6, 5}, 10},
        {"table2/4", degree_pair(5, 19932), WeightVector{7, 5}, 9},
        {"table2/5", degree_pair(6, 47385), WeightVector{6, 3}, 6},
        {"table2/6", degree_pair(7, 4799353), WeightVector{9, 4}, 5},
        {"table2/7", degree_pair(8, 16777472), WeightVector{8, 2}, 2},
        {"table2/8", degree_pair(9, 1000019683), WeightVector{3, 10}, 12},
        {"table2/9", degree_pair(10, 1356217073), WeightVector{7, 8}, 4},
    };
}

/// Single harder quadratic instance used for the convergence traces.
inline std::vector<BenchCase> suite_eq12() {
    return {
        {"eq12", detail::squares(2, 4000), std::nullopt, std::nullopt},
    };
}

inline std::vector<BenchCase> suite(const std::string& name) {
    if (name == "table1") return suite_table1();
    if (name == "table2") return suite_table2();
    if (name == "eq12") return suite_eq12();
    if (name == "all") {
        auto v = suite_table1();
        auto t2 = suite_table2();
        auto e = suite_eq12();
        v.insert(v.end(), t2.begin(), t2.end());
        v.insert(v.end(), e.begin(), e.end());
        return v;
    }
    throw std::invalid_argument("unknown suite name: " + name);
}

/// Runs every (case, seed) pair. A run counts as a success only if the
/// returned tuple verifies by evaluation, and additionally sits in the
/// enumerated solution set whenever the instance is small enough to
/// enumerate. Overflow or exhausted budgets count as plain failures.
inline BenchReport run_suite(const std::vector<BenchCase>& cases,
                             const std::vector<std::uint64_t>& seeds,
                             const SolverConfig& base_config = SolverConfig{},
                             std::int64_t oracle_cap = kDefaultEnumerationCap) {
    if (seeds.empty()) throw std::invalid_argument("run_suite needs at least one seed");

    BenchReport report;
    std::int64_t runs = 0, successes = 0;
    for (const auto& bc : cases) {
        require_valid(bc.equation);
        if (bc.known_solution &&
            error(bc.equation, *bc.known_solution).value_or(1) != 0) {
            throw std::logic_error("bench metadata solution does not satisfy " + bc.name);
        }
        const auto oracle = enumerate_solutions(bc.equation, oracle_cap);

        BenchCaseStats stats;
        stats.name = bc.name;
        stats.equation_text = format_equation(bc.equation);
        stats.seed_count = static_cast<std::int64_t>(seeds.size());
        stats.reference_iterations = bc.reference_iterations;
        stats.oracle_checked = oracle.has_value();

        std::vector<std::int64_t> iterations;
        for (auto seed : seeds) {
            SolverConfig cfg = base_config;
            cfg.seed = seed;
            const SolveResult res = solve(bc.equation, cfg);
            ++runs;
            if (res.status != SolveStatus::Found) continue;
            const bool verified =
                error(bc.equation, *res.solution).value_or(1) == 0 &&
                (!oracle || oracle->contains(*res.solution));
            if (!verified) continue;
            ++successes;
            ++stats.success_count;
            iterations.push_back(res.total_iterations);
            if (!stats.example_solution) stats.example_solution = *res.solution;
        }
        if (!iterations.empty()) {
            std::sort(iterations.begin(), iterations.end());
            stats.median_iterations = iterations[(iterations.size() - 1) / 2];
            stats.min_iterations = iterations.front();
            stats.max_iterations = iterations.back();
        }
        report.cases.push_back(std::move(stats));
    }
    report.success_rate = runs ? static_cast<double>(successes) / static_cast<double>(runs) : 0.0;
    return report;
}

namespace detail {

inline std::string tuple_text(const WeightVector& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(w[i]);
    }
    s += ")";
    return s;
}

inline std::string opt_text(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

} // namespace detail

inline std::string render_text(const BenchReport& report) {
    std::size_t name_w = 4, eq_w = 8;
    for (const auto& c : report.cases) {
        name_w = std::max(name_w, c.name.size());
        eq_w = std::max(eq_w, c.equation_text.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(name_w + 2)) << "case"
       << std::setw(static_cast<int>(eq_w + 2)) << "equation" << std::right
       << std::setw(7) << "found" << std::setw(7) << "seeds" << std::setw(9)
       << "med_it" << std::setw(9) << "min_it" << std::setw(9) << "max_it"
       << std::setw(8) << "ref_it" << "  example\n";
    for (const auto& c : report.cases) {
        os << std::left << std::setw(static_cast<int>(name_w + 2)) << c.name
           << std::setw(static_cast<int>(eq_w + 2)) << c.equation_text
           << std::right << std::setw(7) << c.success_count << std::setw(7)
           << c.seed_count << std::setw(9) << detail::opt_text(c.median_iterations)
           << std::setw(9) << detail::opt_text(c.min_iterations) << std::setw(9)
           << detail::opt_text(c.max_iterations) << std::setw(8)
           << detail::opt_text(c.reference_iterations) << "  "
           << (c.example_solution ? detail::tuple_text(*c.example_solution) : "-")
           << '\n';
    }
    os << "overall success rate: " << std::fixed << std::setprecision(4)
       << report.success_rate << '\n';
    return os.str();
}

inline void to_json(nlohmann::json& j, const BenchCaseStats& c) {
    j = nlohmann::json{
        {"name", c.name},
        {"equation", c.equation_text},
        {"seed_count", c.seed_count},
        {"success_count", c.success_count},
        {"median_iterations", c.median_iterations ? nlohmann::json(*c.median_iterations) : nlohmann::json(nullptr)},
        {"min_iterations", c.min_iterations ? nlohmann::json(*c.min_iterations) : nlohmann::json(nullptr)},
        {"max_iterations", c.max_iterations ? nlohmann::json(*c.max_iterations) : nlohmann::json(nullptr)},
        {"example_solution", c.example_solution ? nlohmann::json(*c.example_solution) : nlohmann::json(nullptr)},
        {"reference_iterations", c.reference_iterations ? nlohmann::json(*c.reference_iterations) : nlohmann::json(nullptr)},
        {"oracle_checked", c.oracle_checked},
    };
}

inline void to_json(nlohmann::json& j, const BenchReport& r) {
    j = nlohmann::json{{"cases", r.cases}, {"success_rate", r.success_rate}};
}

} // namespace diosolve

#endif // DIOSOLVE_BENCH_HPP
