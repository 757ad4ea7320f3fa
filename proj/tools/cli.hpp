#pragma once

// curveplan command-line front end: plan, bench, render, gen.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 planner did not reach the goal.

#include "curveplan/curveplan.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace curveplan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPlanFailed = 2;

/// Flags layered over defaults and an optional --config file.
struct ConfigOverrides {
    std::string config_file;
    std::optional<double> beta;
    std::optional<double> kappa_max;
    std::optional<double> step;
    std::optional<double> tolerance;
    std::optional<std::size_t> iters;

    void attach(CLI::App& cmd) {
        cmd.add_option("--config", config_file, "JSON file with dccppa/rrt/prm config objects")
            ->check(CLI::ExistingFile);
        cmd.add_option("--beta", beta, "DCCPPA curvature-deviation weight in J(p)");
        cmd.add_option("--kappa-max", kappa_max, "DCCPPA curvature threshold");
        cmd.add_option("--step", step, "DCCPPA max step and RRT step size");
        cmd.add_option("--tolerance", tolerance, "goal tolerance for every planner");
        cmd.add_option("--iters", iters, "DCCPPA max iterations");
    }

    [[nodiscard]] PlannerConfigs resolve() const {
        PlannerConfigs c;
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            if (!in)
                throw std::runtime_error("cannot open config file '" + config_file + "'");
            nlohmann::json j;
            in >> j;
            j.get_to(c);
        }
        if (beta)
            c.dccppa.beta = *beta;
        if (kappa_max)
            c.dccppa.curvature_threshold = *kappa_max;
        if (step) {
            c.dccppa.max_step = *step;
            c.rrt.step_size = *step;
        }
        if (tolerance) {
            c.dccppa.goal_tolerance = *tolerance;
            c.rrt.goal_tolerance = *tolerance;
            c.prm.goal_tolerance = *tolerance;
        }
        if (iters)
            c.dccppa.max_iterations = *iters;
        c.validate();
        return c;
    }
};

inline void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

inline std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

/// Trial-by-planner node table followed by summary rows.
inline void print_bench_table(std::ostream& out, const BenchReport& report, std::size_t n_trials) {
    constexpr Planner order[] = {Planner::Dccppa, Planner::Prm, Planner::Rrt};
    auto cell = [&](std::string s) { out << std::setw(10) << s; };
    out << "Scenario: " << report.scenario << "\n";
    out << std::setw(8) << "Trial";
    for (Planner p : order)
        cell(std::string(to_string(p)));
    out << '\n';
    for (std::size_t t = 0; t < n_trials; ++t) {
        out << std::setw(8) << t + 1;
        for (Planner p : order) {
            const auto& rec = report.trials[static_cast<std::size_t>(p) * n_trials + t];
            cell(rec.succeeded ? std::to_string(rec.nodes_expanded) : "fail");
        }
        out << '\n';
    }
    auto stat_row = [&](const char* name, auto get) {
        out << std::setw(8) << name;
        for (Planner p : order) {
            const Summary* s = find_summary(report.summary, p);
            cell(s && s->nodes ? fixed(get(*s->nodes), 1) : "-");
        }
        out << '\n';
    };
    stat_row("mean", [](const NodeStats& s) { return s.mean; });
    stat_row("median", [](const NodeStats& s) { return s.median; });
    stat_row("min", [](const NodeStats& s) { return s.min; });
    stat_row("max", [](const NodeStats& s) { return s.max; });
    stat_row("stddev", [](const NodeStats& s) { return s.stddev; });
    out << std::setw(8) << "success";
    for (Planner p : order) {
        const Summary* s = find_summary(report.summary, p);
        cell(fixed(s ? 100.0 * s->success_rate : 0.0, 0) + "%");
    }
    out << '\n';
}

/// Runs one CLI invocation; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"curvature-constrained 2D path planning with RRT/PRM baselines", "curveplan"};
    app.require_subcommand(1);

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "Run one planner once and write the result as JSON");
    std::string plan_scenario;
    std::string planner_name = "dccppa";
    std::uint64_t plan_seed = 0;
    std::string plan_out;
    ConfigOverrides plan_cfg;
    plan_cmd->add_option("--scenario", plan_scenario, "scenario JSON file")->required();
    plan_cmd->add_option("--planner", planner_name, "dccppa | rrt | prm")->capture_default_str();
    plan_cmd->add_option("--seed", plan_seed, "RNG seed")->envname("CURVEPLAN_SEED")->capture_default_str();
    plan_cmd->add_option("--out", plan_out, "output result JSON")->required();
    plan_cfg.attach(*plan_cmd);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Repeated seeded trials of all planners");
    std::string bench_scenario;
    std::size_t n_trials = 10;
    std::uint64_t bench_seed = 0;
    std::string out_dir = ".";
    std::size_t jobs = 1;
    bool timing = false;
    ConfigOverrides bench_cfg;
    bench_cmd->add_option("--scenario", bench_scenario, "scenario JSON file")->required();
    bench_cmd->add_option("--trials", n_trials, "trials per planner (>= 1)")->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed, "base RNG seed")->envname("CURVEPLAN_SEED")->capture_default_str();
    bench_cmd->add_option("--out-dir", out_dir, "directory for report.json and report.csv")
        ->capture_default_str();
    bench_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    bench_cmd->add_flag("--timing", timing, "record wall times in the reports (breaks byte-identical output)");
    bench_cfg.attach(*bench_cmd);

    // render
    auto* render_cmd = app.add_subcommand("render", "Draw a scenario and optional plan results as SVG");
    std::string render_scenario;
    std::vector<std::string> results;
    std::string svg_out;
    RenderStyle style;
    render_cmd->add_option("--scenario", render_scenario, "scenario JSON file")->required();
    render_cmd->add_option("--result", results, "plan result JSON (repeatable)");
    render_cmd->add_option("--out", svg_out, "output SVG file")->required();
    render_cmd->add_option("--width", style.width_px, "canvas width in pixels")->capture_default_str();
    render_cmd->add_option("--height", style.height_px, "canvas height in pixels")->capture_default_str();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random scenario");
    std::string gen_out;
    std::string gen_name;
    std::size_t n_obstacles = 6;
    RadiusRange radius{4.0, 10.0};
    Bounds bounds;
    std::uint64_t gen_seed = 0;
    gen_cmd->add_option("--out", gen_out, "output scenario JSON")->required();
    gen_cmd->add_option("--name", gen_name, "scenario name (default: generated-<seed>)");
    gen_cmd->add_option("--obstacles", n_obstacles, "number of obstacles")->capture_default_str();
    gen_cmd->add_option("--rmin", radius.min, "minimum obstacle radius")->capture_default_str();
    gen_cmd->add_option("--rmax", radius.max, "maximum obstacle radius")->capture_default_str();
    gen_cmd->add_option("--min-x", bounds.min_x)->capture_default_str();
    gen_cmd->add_option("--min-y", bounds.min_y)->capture_default_str();
    gen_cmd->add_option("--max-x", bounds.max_x)->capture_default_str();
    gen_cmd->add_option("--max-y", bounds.max_y)->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->envname("CURVEPLAN_SEED")->capture_default_str();

    std::ranges::reverse(args);
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*plan_cmd) {
            const auto planner = parse_planner(planner_name);
            if (!planner) {
                err << "error: unknown planner '" << planner_name << "' (expected dccppa, rrt or prm)\n";
                return kExitUsage;
            }
            const Scenario scenario = load_scenario(plan_scenario);
            const PlannerConfigs configs = plan_cfg.resolve();
            const RngSeed seed{plan_seed};
            const PlanResult r = run_planner(*planner, scenario, configs, seed);
            const auto doc = plan_result_json(*planner, scenario, r, configs.dccppa.beta, seed);
            write_json_file(plan_out, doc);
            out << to_string(*planner) << ' ' << (r.succeeded ? "reached goal" : "FAILED")
                << ": nodes=" << r.nodes_expanded << " length=" << fixed(doc["path_length"].get<double>(), 3)
                << " J=" << fixed(doc["objective"].get<double>(), 3) << '\n';
            return r.succeeded ? kExitOk : kExitPlanFailed;
        }
        if (*bench_cmd) {
            if (n_trials == 0) {
                err << "error: --trials must be >= 1\n" << bench_cmd->help();
                return kExitUsage;
            }
            const Scenario scenario = load_scenario(bench_scenario);
            const PlannerConfigs configs = bench_cfg.resolve();
            const BenchReport report = run_benchmark(scenario, configs, n_trials, RngSeed{bench_seed}, jobs);
            std::filesystem::create_directories(out_dir);
            write_json_file(std::filesystem::path(out_dir) / "report.json", report_json(report, timing));
            const auto csv_path = std::filesystem::path(out_dir) / "report.csv";
            std::ofstream csv(csv_path);
            if (!csv)
                throw std::runtime_error("cannot write '" + csv_path.string() + "'");
            write_csv(csv, report, timing);
            print_bench_table(out, report, n_trials);
            return kExitOk;
        }
        if (*render_cmd) {
            const Scenario scenario = load_scenario(render_scenario);
            std::vector<LabelledPath> paths;
            for (const auto& file : results) {
                std::ifstream in(file);
                if (!in)
                    throw std::runtime_error("cannot open result file '" + file + "'");
                nlohmann::json j;
                in >> j;
                paths.push_back(labelled_path_from_json(j));
            }
            write_svg(svg_out, scenario, paths, style);
            out << "wrote " << svg_out << '\n';
            return kExitOk;
        }
        if (*gen_cmd) {
            Scenario s = generate_scenario(bounds, n_obstacles, radius, RngSeed{gen_seed});
            if (!gen_name.empty())
                s.name = gen_name;
            save_scenario(s, gen_out);
            out << "wrote " << gen_out << " (" << s.obstacles.size() << " obstacles)\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace curveplan::cli
