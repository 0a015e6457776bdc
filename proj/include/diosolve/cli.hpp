#ifndef DIOSOLVE_CLI_HPP
#define DIOSOLVE_CLI_HPP

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diosolve/bench.hpp"
#include "diosolve/json_io.hpp"
#include "diosolve/oracle.hpp"
#include "diosolve/parse.hpp"
#include "diosolve/solver.hpp"
#include "diosolve/trace.hpp"

namespace diosolve::cli {

// exit codes: 0 solved / completed, 1 exhausted or empty, 2 usage / parse error
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string tuple_text(const WeightVector& w) {
    return diosolve::detail::tuple_text(w);
}

inline std::uint64_t time_derived_seed() {
    return static_cast<std::uint64_t>(
        std::chrono::system_clock::now().time_since_epoch().count());
}

struct EquationOrExit {
    std::optional<DiophantineEquation> eq;
    int exit_code = kExitOk;
};

inline EquationOrExit parse_or_report(const std::string& text, std::ostream& err) {
    auto parsed = parse_equation(text);
    if (auto* pe = std::get_if<ParseError>(&parsed)) {
        err << "parse error (" << to_string(pe->kind) << ") at position "
            << pe->position << ": " << pe->message << '\n';
        return {std::nullopt, kExitUsage};
    }
    return {std::get<DiophantineEquation>(std::move(parsed)), kExitOk};
}

inline bool parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoll(text.substr(0, colon));
        hi = std::stoll(text.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

} // namespace detail

/// Entry point shared by the binary and the tests. Streams are injected so
/// output bytes can be asserted on.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"solver for power-sum equations over positive integers"};
    app.require_subcommand(1);

    std::string eq_text;
    std::string init_range;
    std::string trace_path;
    std::string suite_name;
    bool as_json = false;
    std::uint64_t seed = 0;
    SolverConfig defaults;
    std::int64_t max_iters = defaults.max_iters_per_attempt;
    std::int64_t max_restarts = defaults.max_restarts;
    std::int64_t cap = kDefaultEnumerationCap;
    std::int64_t seed_count = 20;

    auto* solve_cmd = app.add_subcommand("solve", "run the search on one equation");
    solve_cmd->add_option("--eq", eq_text, "equation, e.g. \"x1^2 + x2^2 = 149\"")->required();
    solve_cmd->add_option("--seed", seed, "RNG seed (time-derived and printed when omitted)");
    solve_cmd->add_option("--max-iters", max_iters, "iteration budget per attempt");
    solve_cmd->add_option("--max-restarts", max_restarts, "restart budget");
    solve_cmd->add_option("--init-range", init_range, "initial weight range LO:HI");
    solve_cmd->add_option("--trace", trace_path, "write the per-iteration trace as CSV");
    solve_cmd->add_flag("--json", as_json, "print the full result as JSON");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustively enumerate all solutions");
    oracle_cmd->add_option("--eq", eq_text, "equation to enumerate")->required();
    oracle_cmd->add_option("--cap", cap, "largest bound box the oracle will scan");

    auto* bench_cmd = app.add_subcommand("bench", "run a built-in benchmark suite");
    bench_cmd->add_option("--suite", suite_name, "table1, table2, eq12 or all")->required();
    bench_cmd->add_option("--seeds", seed_count, "number of seeds (1..N)");
    bench_cmd->add_option("--max-iters", max_iters, "iteration budget per attempt");
    bench_cmd->add_option("--max-restarts", max_restarts, "restart budget");
    bench_cmd->add_flag("--json", as_json, "print the report as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) {
            auto got = detail::parse_or_report(eq_text, err);
            if (!got.eq) return got.exit_code;

            SolverConfig cfg;
            cfg.max_iters_per_attempt = max_iters;
            cfg.max_restarts = max_restarts;
            if (!init_range.empty() &&
                !detail::parse_range(init_range, cfg.init_lo, cfg.init_hi)) {
                err << "bad --init-range, expected LO:HI with 1 <= LO <= HI\n";
                return kExitUsage;
            }
            const bool seed_given = solve_cmd->count("--seed") > 0;
            if (!seed_given) {
                seed = detail::time_derived_seed();
                (as_json ? err : out) << "seed: " << seed << '\n';
            }
            cfg.seed = seed;

            const SolveResult result = solve(*got.eq, cfg);
            if (!trace_path.empty()) {
                export_csv(result.trace, trace_path, got.eq->variable_count());
            }
            if (as_json) {
                export_json(result, out);
            } else {
                out << "equation: " << format_equation(*got.eq) << '\n';
                if (seed_given) out << "seed: " << seed << '\n';
                out << "status: " << to_string(result.status) << '\n';
                if (result.solution)
                    out << "solution: " << detail::tuple_text(*result.solution) << '\n';
                out << "iterations: " << result.total_iterations << '\n'
                    << "restarts: " << result.restarts_used << '\n';
            }
            return result.status == SolveStatus::Found ? kExitOk : kExitNotFound;
        }

        if (oracle_cmd->parsed()) {
            auto got = detail::parse_or_report(eq_text, err);
            if (!got.eq) return got.exit_code;
            const auto set = enumerate_solutions(*got.eq, cap);
            if (!set) {
                err << "bound box exceeds cap " << cap << "; raise --cap to enumerate\n";
                return kExitUsage;
            }
            out << "equation: " << format_equation(*got.eq) << '\n';
            for (const auto& w : set->solutions) out << detail::tuple_text(w) << '\n';
            out << "count: " << set->solutions.size() << '\n';
            return set->solutions.empty() ? kExitNotFound : kExitOk;
        }

        // bench
        std::vector<BenchCase> cases;
        try {
            cases = suite(suite_name);
        } catch (const std::invalid_argument& e) {
            err << e.what() << '\n';
            return kExitUsage;
        }
        if (seed_count < 1) {
            err << "--seeds must be >= 1\n";
            return kExitUsage;
        }
        std::vector<std::uint64_t> seeds(static_cast<std::size_t>(seed_count));
        for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i + 1;
        SolverConfig cfg;
        cfg.max_iters_per_attempt = max_iters;
        cfg.max_restarts = max_restarts;
        const BenchReport report = run_suite(cases, seeds, cfg);
        if (as_json) {
            out << nlohmann::json(report).dump(2) << '\n';
        } else {
            out << render_text(report);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace diosolve::cli

#endif // DIOSOLVE_CLI_HPP
