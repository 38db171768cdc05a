// mmsim: run the moving-mass Remus experiment, compare formulations, or run
// the built-in invariant suite.
//
// Exit codes: 0 success, 2 configuration/usage, 3 numerical failure, 4 I/O.

#include <mmsim/checks.hpp>
#include <mmsim/comparison.hpp>
#include <mmsim/config.hpp>
#include <mmsim/errors.hpp>
#include <mmsim/trajectory_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace mmsim;

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code(ErrorClass cls) {
    switch (cls) {
    case ErrorClass::Config:
        return kExitConfig;
    case ErrorClass::Numeric:
        return kExitNumeric;
    case ErrorClass::Io:
        return kExitIo;
    }
    return 1;
}

const char *class_name(ErrorClass cls) {
    switch (cls) {
    case ErrorClass::Config:
        return "config";
    case ErrorClass::Numeric:
        return "numeric";
    case ErrorClass::Io:
        return "io";
    }
    return "unknown";
}

void report_error(ErrorClass cls, const std::string &name, const std::string &message) {
    std::cerr << "error " << class_name(cls) << " " << name << ": " << message << '\n';
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunOverrides {
    std::optional<std::string> formulation;
    std::optional<std::string> out;
    std::optional<double> dt;
    std::optional<double> duration;
    std::optional<int> decimate;
};

RunMetadata base_metadata(const RunConfig &cfg, const std::string &config_text) {
    RunMetadata meta;
    meta.config_hash = content_hash(config_text);
    meta.formulation = cfg.formulation;
    meta.dt = cfg.scenario.dt;
    meta.duration = cfg.scenario.duration;
    meta.notes = cfg.warnings;
    meta.vehicle_params_json = serialize_params(cfg.vehicle);
    return meta;
}

int cmd_run(const std::string &config_path, const RunOverrides &ov) {
    const std::string text = read_text(config_path);
    RunConfig cfg = parse_config(text);
    std::vector<std::string> applied;
    if (ov.formulation) {
        cfg.formulation = parse_formulation(*ov.formulation);
        applied.push_back("--formulation " + *ov.formulation);
    }
    if (ov.out) {
        cfg.output_path = *ov.out;
        applied.push_back("--out " + *ov.out);
    }
    if (ov.dt) {
        cfg.scenario.dt = *ov.dt;
        applied.push_back("--dt " + std::to_string(*ov.dt));
    }
    if (ov.duration) {
        cfg.scenario.duration = *ov.duration;
        applied.push_back("--duration " + std::to_string(*ov.duration));
    }
    if (ov.decimate) {
        if (*ov.decimate < 1) {
            throw ValidationError("--decimate must be a positive integer");
        }
        cfg.decimation = *ov.decimate;
        applied.push_back("--decimate " + std::to_string(*ov.decimate));
    }
    cfg.scenario.validate();

    const ScenarioResult result = run_scenario(cfg.vehicle, cfg.scenario, cfg.formulation);
    RunMetadata meta = base_metadata(cfg, text);
    meta.overrides = applied;
    if (result.error) {
        meta.error = *result.error_name + ": " + *result.error;
    }
    const WriteSummary summary = write_trajectory(result.records, cfg.output_path, cfg.decimation, meta);
    std::cout << "wrote " << summary.rows << " rows to " << summary.csv_path << '\n';
    if (result.error) {
        report_error(ErrorClass::Numeric, *result.error_name,
                     *result.error + " (partial trajectory of " + std::to_string(result.records.size()) + " samples written)");
        return kExitNumeric;
    }
    return 0;
}

int cmd_compare(const std::string &config_path, const std::string &out_dir) {
    const std::string text = read_text(config_path);
    const RunConfig cfg = parse_config(text);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
    }

    auto ne_future = std::async(std::launch::async, [&] {
        return run_scenario(cfg.vehicle, cfg.scenario, Formulation::NewtonEuler);
    });
    const ScenarioResult woolsey = run_scenario(cfg.vehicle, cfg.scenario, Formulation::Woolsey);
    const ScenarioResult newton_euler = ne_future.get();

    const auto dir = std::filesystem::path(out_dir);
    nlohmann::json summary;
    int status = 0;
    for (const auto &[formulation, result] :
         {std::pair{Formulation::NewtonEuler, &newton_euler}, std::pair{Formulation::Woolsey, &woolsey}}) {
        RunMetadata meta = base_metadata(cfg, text);
        meta.formulation = formulation;
        if (result->error) {
            meta.error = *result->error_name + ": " + *result->error;
            summary["errors"][to_string(formulation)] = meta.error;
            status = kExitNumeric;
        }
        const std::string path = (dir / (to_string(formulation) + ".csv")).string();
        const WriteSummary ws = write_trajectory(result->records, path, cfg.decimation, meta);
        summary["files"][to_string(formulation)] = ws.csv_path;
        std::cout << "wrote " << ws.rows << " rows to " << ws.csv_path << '\n';
    }

    // Compare over the common prefix when a run stopped early.
    const std::size_t common = std::min(newton_euler.records.size(), woolsey.records.size());
    const std::vector<TrajectoryRecord> a(newton_euler.records.begin(), newton_euler.records.begin() + common);
    const std::vector<TrajectoryRecord> b(woolsey.records.begin(), woolsey.records.begin() + common);
    const double t_common = common ? a.back().t : 0.0;

    const auto channels_json = [](const ComparisonReport &report) {
        nlohmann::json j;
        for (const auto &c : report.channels) {
            j[c.name] = {{"max_abs_diff", c.max_abs},
                         {"mean_abs_diff", c.mean_abs},
                         {"peak_abs_newton_euler", c.peak_abs_a},
                         {"peak_abs_woolsey", c.peak_abs_b},
                         {"sign_changes_newton_euler", c.sign_changes_a},
                         {"sign_changes_woolsey", c.sign_changes_b}};
        }
        return j;
    };
    const ComparisonReport full = compare_trajectories(a, b);
    const ComparisonReport closeup = compare_trajectories(a, b, {0.0, 12.0});
    summary["compared_until"] = t_common;
    summary["full"] = channels_json(full);
    summary["first_12s"] = channels_json(closeup);
    summary["first_12s"]["complete"] = t_common >= 12.0;

    const std::string summary_path = (dir / "summary.json").string();
    std::ofstream out(summary_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + summary_path + "' for writing");
    }
    out << summary.dump(2) << '\n';

    const auto &q = closeup.channel("q");
    std::cout << "first 12 s (" << (t_common >= 12.0 ? "complete" : "truncated at t = " + std::to_string(t_common))
              << "): max |dq| = " << q.max_abs << " rad/s, peak |q| newton-euler = " << q.peak_abs_a
              << ", woolsey = " << q.peak_abs_b << '\n';
    if (status != 0) {
        for (const auto &[name, message] : summary["errors"].items()) {
            report_error(ErrorClass::Numeric, name, message.get<std::string>());
        }
    }
    return status;
}

int cmd_check(std::uint64_t seed, std::size_t samples, const std::optional<std::string> &config_path,
              const std::vector<std::string> &csv_paths) {
    std::vector<CheckResult> results = run_builtin_checks(seed, samples);
    if (!csv_paths.empty()) {
        const ScenarioSpec spec = config_path ? load_config(*config_path).scenario : remus_scenario();
        for (const auto &path : csv_paths) {
            CheckResult r = check_trajectory_csv(read_csv(path), spec);
            r.name += " " + path;
            results.push_back(r);
        }
    }
    bool ok = true;
    for (const auto &r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        ok = ok && r.passed;
    }
    return ok ? 0 : kExitNumeric;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Moving-mass underwater vehicle simulator"};
    app.require_subcommand(1);

    std::string config_path;
    RunOverrides overrides;
    auto *run = app.add_subcommand("run", "Simulate one formulation and write a trajectory CSV");
    run->add_option("--config", config_path, "YAML run configuration")->required();
    run->add_option_function<std::string>("--formulation", [&](const std::string &v) { overrides.formulation = v; },
                                          "newton-euler | woolsey");
    run->add_option_function<std::string>("--out", [&](const std::string &v) { overrides.out = v; }, "CSV path");
    run->add_option_function<double>("--dt", [&](double v) { overrides.dt = v; }, "step size [s]");
    run->add_option_function<double>("--duration", [&](double v) { overrides.duration = v; }, "duration [s]");
    run->add_option_function<int>("--decimate", [&](int v) { overrides.decimate = v; }, "keep every N-th sample");

    std::string compare_config, compare_out;
    auto *compare = app.add_subcommand("compare", "Run both formulations and summarize their differences");
    compare->add_option("--config", compare_config, "YAML run configuration")->required();
    compare->add_option("--out", compare_out, "output directory")->required();

    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    std::optional<std::string> check_config;
    std::vector<std::string> csv_paths;
    auto *check = app.add_subcommand("check", "Run the built-in invariant suite");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--samples", samples, "random states per property");
    check->add_option_function<std::string>("--config", [&](const std::string &v) { check_config = v; },
                                            "configuration whose scenario the CSVs are checked against");
    check->add_option("--csv", csv_paths, "trajectory CSV files to validate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << app.help();
        report_error(ErrorClass::Config, "UsageError", e.what());
        return kExitConfig;
    }

    try {
        if (*run) {
            return cmd_run(config_path, overrides);
        }
        if (*compare) {
            return cmd_compare(compare_config, compare_out);
        }
        return cmd_check(seed, samples, check_config, csv_paths);
    } catch (const Error &e) {
        report_error(e.error_class(), e.name(), e.what());
        return exit_code(e.error_class());
    } catch (const std::exception &e) {
        report_error(ErrorClass::Io, "Unexpected", e.what());
        return 1;
    }
}
