#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "datadam/engine.hpp"
#include "datadam/errors.hpp"
#include "datadam/queueing.hpp"
#include "datadam/scenario.hpp"
#include "datadam/scenario_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

json metrics_json(const datadam::RunMetrics& m) {
    return {
        {"avg_storage", m.avg_storage},
        {"total_outflow", m.total_outflow},
        {"total_spill", m.total_spill},
        {"max_storage", m.max_storage},
        {"time_at_capacity", m.time_at_capacity},
        {"trajectory_cost", m.trajectory_cost},
    };
}

datadam::ControllerSpec controller_by_name(const std::string& name, double o_optimal) {
    if (name == "baseline") return datadam::BaselineSluice{o_optimal};
    if (name == "capped") return datadam::CappedSluice{};
    return datadam::OptimizedSluice{};
}

int run_simulate(const std::string& scenario_path, const std::string& out_path,
                 const std::string& controller_override) {
    datadam::Scenario scenario = datadam::load_scenario(scenario_path);
    if (!controller_override.empty()) {
        scenario.controller =
            controller_by_name(controller_override, scenario.params.o_optimal);
    }
    const datadam::RunResult result = datadam::run(scenario);
    datadam::write_trajectory_csv(result, out_path);
    std::cout << metrics_json(result.metrics).dump(2) << "\n";
    return 0;
}

int run_compare(const std::string& scenario_path, const std::string& report_path,
                const std::string& traces_dir) {
    const datadam::Scenario scenario = datadam::load_scenario(scenario_path);
    const datadam::ComparisonRuns runs = datadam::compare_runs(scenario);
    const datadam::ComparisonReport report = datadam::compare(scenario);
    datadam::write_report_json(report, report_path);
    if (!traces_dir.empty()) {
        const std::filesystem::path dir(traces_dir);
        std::filesystem::create_directories(dir);
        datadam::write_trajectory_csv(runs.optimized, dir / "optimized.csv");
        datadam::write_trajectory_csv(runs.baseline, dir / "baseline.csv");
    }
    std::cout << datadam::report_json_string(report);
    return 0;
}

int run_mm1(double lambda, double mu) {
    const datadam::Mm1Metrics m = datadam::mm1_metrics({lambda, mu});
    const json j = {{"rho", m.rho}, {"l", m.l}, {"w", m.w}, {"lq", m.lq}, {"wq", m.wq}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_init(const std::string& out_path) {
    datadam::save_scenario(datadam::make_reference_scenario(), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reservoir flow-control simulator: sluice policies, downstream queue "
                 "analysis and the optimized-vs-baseline comparison"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string controller_override;
    std::string report_path;
    std::string traces_dir;
    double lambda = 0.0;
    double mu = 0.0;

    CLI::App* simulate = app.add_subcommand("simulate", "Run one scenario and write its trajectory CSV");
    simulate->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    simulate->add_option("--out", out_path, "Trajectory CSV output path")->required();
    simulate
        ->add_option("--controller", controller_override,
                     "Override the scenario's controller (baseline uses the scenario's o_optimal)")
        ->check(CLI::IsMember({"baseline", "capped", "optimized"}));

    CLI::App* cmp = app.add_subcommand("compare", "Run optimized vs baseline on identical inflow");
    cmp->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    cmp->add_option("--report", report_path, "Comparison report JSON output path")->required();
    cmp->add_option("--traces", traces_dir, "Directory for optimized.csv and baseline.csv");

    CLI::App* mm1 = app.add_subcommand("mm1", "Analytic M/M/1 metrics printed as JSON");
    mm1->add_option("--lambda", lambda, "Arrival rate")->required();
    mm1->add_option("--mu", mu, "Service rate")->required();

    CLI::App* init = app.add_subcommand("init", "Write the bundled reference scenario");
    init->add_option("--out", out_path, "Scenario JSON output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return run_simulate(scenario_path, out_path, controller_override);
        if (cmp->parsed()) return run_compare(scenario_path, report_path, traces_dir);
        if (mm1->parsed()) return run_mm1(lambda, mu);
        if (init->parsed()) return run_init(out_path);
    } catch (const datadam::ValidationError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const datadam::UnknownFieldError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const datadam::ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return kExitValidation;
    } catch (const datadam::InvalidRateError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const datadam::InstabilityError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const datadam::DegenerateWeightsError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: runtime: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
