#pragma once

// Repeated seeded trials of all planners on one scenario, summary statistics
// over node counts, and JSON/CSV report writers.

#include "curveplan/baselines.hpp"
#include "curveplan/dccppa.hpp"
#include "curveplan/scenario.hpp"
#include "curveplan/serialization.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace curveplan {

[[nodiscard]] inline PlanResult run_planner(Planner planner, const Scenario& scenario,
                                            const PlannerConfigs& configs, RngSeed seed) {
    switch (planner) {
    case Planner::Dccppa: return plan(scenario, configs.dccppa, seed);
    case Planner::Rrt: return rrt_plan(scenario, configs.rrt, seed);
    case Planner::Prm: return prm_plan(scenario, configs.prm, seed);
    }
    throw std::logic_error("unknown planner");
}

/// Stream id used when deriving per-trial seeds.
[[nodiscard]] constexpr std::uint64_t planner_stream(Planner p) noexcept {
    return static_cast<std::uint64_t>(p) + 1;
}

[[nodiscard]] constexpr RngSeed trial_seed(RngSeed base, Planner p, std::size_t trial_index) noexcept {
    return derive_seed(base, planner_stream(p), trial_index);
}

struct TrialRecord {
    Planner planner = Planner::Dccppa;
    std::size_t trial_index = 0;
    RngSeed seed;
    std::size_t nodes_expanded = 0;
    double path_length = 0.0;
    double objective_value = 0.0;
    bool succeeded = false;
    double wall_ms = 0.0;

    /// Equality ignoring wall time.
    [[nodiscard]] bool same_outcome(const TrialRecord& o) const noexcept {
        return planner == o.planner && trial_index == o.trial_index && seed == o.seed &&
               nodes_expanded == o.nodes_expanded && path_length == o.path_length &&
               objective_value == o.objective_value && succeeded == o.succeeded;
    }
};

struct NodeStats {
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    double stddev = 0.0; ///< sample (n - 1) standard deviation, 0 for n == 1
};

struct Summary {
    Planner planner = Planner::Dccppa;
    std::size_t trials = 0;
    std::size_t succeeded = 0;
    double success_rate = 0.0;
    std::optional<NodeStats> nodes; ///< over succeeded trials; empty if none succeeded
};

[[nodiscard]] inline NodeStats node_stats(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("node_stats: empty input");
    std::vector<double> v(values.begin(), values.end());
    std::ranges::sort(v);
    const auto n = v.size();
    NodeStats s;
    s.min = v.front();
    s.max = v.back();
    s.median = n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double x : v)
            ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

/// Per-planner summaries in canonical planner order; planners without
/// records are omitted.
[[nodiscard]] inline std::vector<Summary> summarize(std::span<const TrialRecord> records) {
    if (records.empty())
        throw std::invalid_argument("summarize: no trial records");
    std::vector<Summary> out;
    for (Planner p : kAllPlanners) {
        Summary s;
        s.planner = p;
        std::vector<double> nodes;
        for (const auto& r : records) {
            if (r.planner != p)
                continue;
            ++s.trials;
            if (r.succeeded) {
                ++s.succeeded;
                nodes.push_back(static_cast<double>(r.nodes_expanded));
            }
        }
        if (s.trials == 0)
            continue;
        s.success_rate = static_cast<double>(s.succeeded) / static_cast<double>(s.trials);
        if (!nodes.empty())
            s.nodes = node_stats(nodes);
        out.push_back(s);
    }
    return out;
}

[[nodiscard]] inline const Summary* find_summary(std::span<const Summary> summaries, Planner p) {
    for (const auto& s : summaries)
        if (s.planner == p)
            return &s;
    return nullptr;
}

struct BenchReport {
    std::string scenario;
    PlannerConfigs configs;
    std::vector<TrialRecord> trials; ///< ordered by (planner, trial_index)
    std::vector<Summary> summary;
    std::string rng{kRngAlgorithm};
};

/// Runs `tasks` indices on up to `workers` threads. Each index is handled
/// exactly once; callers write results into per-index slots.
template <typename Fn>
void parallel_for(std::size_t tasks, std::size_t workers, Fn&& fn) {
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(tasks, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1))
                fn(i);
        });
}

[[nodiscard]] inline TrialRecord run_trial(Planner planner, const Scenario& scenario,
                                           const PlannerConfigs& configs, std::size_t trial_index,
                                           RngSeed base_seed) {
    TrialRecord rec;
    rec.planner = planner;
    rec.trial_index = trial_index;
    rec.seed = trial_seed(base_seed, planner, trial_index);
    const auto t0 = std::chrono::steady_clock::now();
    const PlanResult r = run_planner(planner, scenario, configs, rec.seed);
    const auto t1 = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.nodes_expanded = r.nodes_expanded;
    rec.succeeded = r.succeeded;
    rec.path_length = path_length(r.path);
    rec.objective_value = objective(r.path, scenario.obstacles, configs.dccppa.beta);
    return rec;
}

[[nodiscard]] inline BenchReport run_benchmark(const Scenario& scenario, const PlannerConfigs& configs,
                                               std::size_t n_trials, RngSeed base_seed,
                                               std::size_t workers = 1) {
    if (n_trials == 0)
        throw std::invalid_argument("run_benchmark: n_trials must be >= 1");
    configs.validate();
    BenchReport report;
    report.scenario = scenario.name;
    report.configs = configs;
    report.trials.resize(std::size(kAllPlanners) * n_trials);
    parallel_for(report.trials.size(), workers, [&](std::size_t slot) {
        const Planner p = kAllPlanners[slot / n_trials];
        report.trials[slot] = run_trial(p, scenario, configs, slot % n_trials, base_seed);
    });
    report.summary = summarize(report.trials);
    return report;
}

// ---------------------------------------------------------------------------
// Reports

namespace detail {
/// Shortest round-trip decimal form.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}
} // namespace detail

inline constexpr std::string_view kCsvHeader = "planner,trial,seed,nodes,path_length,objective,succeeded,wall_ms";

/// Writes the CSV report. With `include_timing` false the wall_ms column is
/// zeroed so repeated runs are byte-identical.
inline void write_csv(std::ostream& out, const BenchReport& report, bool include_timing) {
    using detail::format_double;
    out << kCsvHeader << '\n';
    for (const auto& t : report.trials)
        out << to_string(t.planner) << ',' << t.trial_index + 1 << ',' << t.seed.value << ','
            << t.nodes_expanded << ',' << format_double(t.path_length) << ','
            << format_double(t.objective_value) << ',' << (t.succeeded ? "true" : "false") << ','
            << format_double(include_timing ? t.wall_ms : 0.0) << '\n';
}

[[nodiscard]] inline nlohmann::json report_json(const BenchReport& report, bool include_timing) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : report.trials)
        trials.push_back({{"planner", to_string(t.planner)},
                          {"trial", t.trial_index + 1},
                          {"seed", t.seed.value},
                          {"nodes", t.nodes_expanded},
                          {"path_length", t.path_length},
                          {"objective", t.objective_value},
                          {"succeeded", t.succeeded},
                          {"wall_ms", include_timing ? t.wall_ms : 0.0}});
    nlohmann::json summary = nlohmann::json::object();
    for (const auto& s : report.summary) {
        nlohmann::json js = {{"trials", s.trials}, {"succeeded", s.succeeded}, {"success_rate", s.success_rate}};
        if (s.nodes)
            js["nodes"] = {{"mean", s.nodes->mean},
                           {"median", s.nodes->median},
                           {"min", s.nodes->min},
                           {"max", s.nodes->max},
                           {"stddev", s.nodes->stddev}};
        else
            js["nodes"] = nullptr;
        summary[std::string(to_string(s.planner))] = std::move(js);
    }
    return {{"scenario", report.scenario},
            {"rng", report.rng},
            {"configs", report.configs},
            {"trials", std::move(trials)},
            {"summary", std::move(summary)}};
}

// ---------------------------------------------------------------------------
// Scaling probe

struct ScalingCase {
    std::size_t problem_size = 0; ///< e.g. obstacle count
    std::vector<Scenario> scenarios;
};

struct ScalingRow {
    std::size_t problem_size = 0;
    double mean_nodes = 0.0; ///< over all runs, failed ones included
    double mean_wall_ms = 0.0;
    double success_rate = 0.0;
};

/// Scenarios with `count` random obstacles for each entry of `counts`.
[[nodiscard]] inline std::vector<ScalingCase> obstacle_family(const Bounds& bounds,
                                                              std::span<const std::size_t> counts,
                                                              RadiusRange radius,
                                                              std::size_t scenarios_per_size, RngSeed seed) {
    std::vector<ScalingCase> family;
    for (std::size_t c : counts) {
        ScalingCase sc;
        sc.problem_size = c;
        for (std::size_t i = 0; i < scenarios_per_size; ++i)
            sc.scenarios.push_back(generate_scenario(bounds, c, radius, derive_seed(seed, c, i)));
        family.push_back(std::move(sc));
    }
    return family;
}

/// Mean nodes and wall time of `planner` per problem size, every scenario of
/// a case run once per seed. Single-threaded so timings are comparable.
[[nodiscard]] inline std::vector<ScalingRow> scaling_probe(std::span<const ScalingCase> family,
                                                           const PlannerConfigs& configs,
                                                           std::span<const RngSeed> seeds,
                                                           Planner planner = Planner::Dccppa) {
    if (family.empty())
        throw std::invalid_argument("scaling_probe: empty scenario family");
    if (seeds.empty())
        throw std::invalid_argument("scaling_probe: no seeds");
    std::vector<ScalingRow> rows;
    for (const auto& sc : family) {
        ScalingRow row;
        row.problem_size = sc.problem_size;
        std::size_t runs = 0;
        std::size_t ok = 0;
        double nodes = 0.0;
        double ms = 0.0;
        for (const auto& s : sc.scenarios) {
            for (RngSeed seed : seeds) {
                const auto t0 = std::chrono::steady_clock::now();
                const PlanResult r = run_planner(planner, s, configs, seed);
                const auto t1 = std::chrono::steady_clock::now();
                ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
                nodes += static_cast<double>(r.nodes_expanded);
                ok += r.succeeded ? 1 : 0;
                ++runs;
            }
        }
        if (runs > 0) {
            row.mean_nodes = nodes / static_cast<double>(runs);
            row.mean_wall_ms = ms / static_cast<double>(runs);
            row.success_rate = static_cast<double>(ok) / static_cast<double>(runs);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace curveplan
