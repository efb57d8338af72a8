#include "datadam/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string_view>

#include "json.hpp"

#include "datadam/errors.hpp"

namespace datadam {

namespace {

using nlohmann::json;

constexpr int kScenarioVersion = 1;

void write_text_atomic(const std::filesystem::path& path, std::string_view text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot open " + tmp.string() + " for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out)
            throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

void reject_unknown_keys(const json& object, const std::string& prefix,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (std::string_view name : allowed) {
            if (key == name) {
                known = true;
                break;
            }
        }
        if (!known)
            throw UnknownFieldError(prefix.empty() ? key : prefix + "." + key);
    }
}

const json& require_field(const json& object, const std::string& prefix,
                          const std::string& key) {
    auto it = object.find(key);
    if (it == object.end())
        throw ValidationError(prefix.empty() ? key : prefix + "." + key, "missing required field");
    return *it;
}

double require_number(const json& object, const std::string& prefix, const std::string& key) {
    const json& value = require_field(object, prefix, key);
    if (!value.is_number())
        throw ValidationError(prefix.empty() ? key : prefix + "." + key, "must be a number");
    return value.get<double>();
}

double optional_number(const json& object, const std::string& prefix, const std::string& key,
                       double fallback) {
    auto it = object.find(key);
    if (it == object.end()) return fallback;
    if (!it->is_number())
        throw ValidationError(prefix.empty() ? key : prefix + "." + key, "must be a number");
    return it->get<double>();
}

SystemParams params_from_json(const json& j) {
    if (!j.is_object())
        throw ValidationError("params", "must be an object");
    reject_unknown_keys(j, "params",
                        {"capacity", "o_max", "processing", "bandwidth", "security_threshold",
                         "o_optimal", "alpha", "beta", "duration", "dt"});
    SystemParams p;
    p.capacity = require_number(j, "params", "capacity");
    p.o_max = require_number(j, "params", "o_max");
    p.processing = require_number(j, "params", "processing");
    p.bandwidth = require_number(j, "params", "bandwidth");
    p.security_threshold = require_number(j, "params", "security_threshold");
    p.o_optimal = require_number(j, "params", "o_optimal");
    p.alpha = require_number(j, "params", "alpha");
    p.beta = require_number(j, "params", "beta");
    p.duration = require_number(j, "params", "duration");
    p.dt = require_number(j, "params", "dt");
    p.safe_level = p.capacity;
    return p;
}

InflowSpec inflow_from_json(const json& j) {
    if (!j.is_object())
        throw ValidationError("inflow", "must be an object");
    reject_unknown_keys(j, "inflow", {"base", "amplitude", "period", "spikes", "noise_std", "seed"});
    InflowSpec spec;
    spec.base = require_number(j, "inflow", "base");
    spec.amplitude = require_number(j, "inflow", "amplitude");
    spec.period = require_number(j, "inflow", "period");
    spec.noise_std = optional_number(j, "inflow", "noise_std", 0.0);
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_integer() ||
            (!it->is_number_unsigned() && it->get<std::int64_t>() < 0))
            throw ValidationError("inflow.seed", "must be an unsigned integer");
        spec.seed = it->get<std::uint64_t>();
    }
    const json& spikes = require_field(j, "inflow", "spikes");
    if (!spikes.is_array())
        throw ValidationError("inflow.spikes", "must be an array");
    for (const json& w : spikes) {
        if (!w.is_object())
            throw ValidationError("inflow.spikes", "entries must be objects");
        reject_unknown_keys(w, "inflow.spikes", {"start", "end", "boost"});
        spec.spikes.push_back({require_number(w, "inflow.spikes", "start"),
                               require_number(w, "inflow.spikes", "end"),
                               require_number(w, "inflow.spikes", "boost")});
    }
    return spec;
}

ControllerSpec controller_from_json(const json& j) {
    if (!j.is_object())
        throw ValidationError("controller", "must be an object");
    reject_unknown_keys(j, "controller", {"type", "rate"});
    const json& type = require_field(j, "controller", "type");
    if (!type.is_string())
        throw ValidationError("controller.type", "must be a string");
    const std::string name = type.get<std::string>();
    const bool has_rate = j.contains("rate");
    if (name == "baseline") {
        if (!has_rate)
            throw ValidationError("controller.rate", "required for the baseline controller");
        return BaselineSluice{require_number(j, "controller", "rate")};
    }
    if (has_rate)
        throw ValidationError("controller.rate", "only allowed for the baseline controller");
    if (name == "capped") return CappedSluice{};
    if (name == "optimized") return OptimizedSluice{};
    throw ValidationError("controller.type", "must be baseline, capped or optimized");
}

json scenario_to_json(const Scenario& s) {
    json controller;
    if (const auto* baseline = std::get_if<BaselineSluice>(&s.controller)) {
        controller = {{"type", "baseline"}, {"rate", baseline->rate}};
    } else if (std::holds_alternative<CappedSluice>(s.controller)) {
        controller = {{"type", "capped"}};
    } else {
        controller = {{"type", "optimized"}};
    }

    json spikes = json::array();
    for (const SpikeWindow& w : s.inflow.spikes) {
        spikes.push_back({{"start", w.start}, {"end", w.end}, {"boost", w.boost}});
    }

    return {
        {"version", kScenarioVersion},
        {"params",
         {{"capacity", s.params.capacity},
          {"o_max", s.params.o_max},
          {"processing", s.params.processing},
          {"bandwidth", s.params.bandwidth},
          {"security_threshold", s.params.security_threshold},
          {"o_optimal", s.params.o_optimal},
          {"alpha", s.params.alpha},
          {"beta", s.params.beta},
          {"duration", s.params.duration},
          {"dt", s.params.dt}}},
        {"inflow",
         {{"base", s.inflow.base},
          {"amplitude", s.inflow.amplitude},
          {"period", s.inflow.period},
          {"spikes", spikes},
          {"noise_std", s.inflow.noise_std},
          {"seed", s.inflow.seed}}},
        {"controller", controller},
        {"initial_storage", s.initial_storage},
    };
}

json metrics_to_json(const RunMetrics& m) {
    return {
        {"avg_storage", m.avg_storage},
        {"total_outflow", m.total_outflow},
        {"total_spill", m.total_spill},
        {"max_storage", m.max_storage},
        {"time_at_capacity", m.time_at_capacity},
        {"trajectory_cost", m.trajectory_cost},
    };
}

} // namespace

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());

    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());  // nlohmann reports line/byte position
    }

    if (!j.is_object())
        throw ValidationError("document", "must be a JSON object");
    reject_unknown_keys(j, "", {"version", "params", "inflow", "controller", "initial_storage"});

    const json& version = require_field(j, "", "version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != kScenarioVersion)
        throw ValidationError("version", "must be 1");

    Scenario scenario;
    scenario.params = params_from_json(require_field(j, "", "params"));
    scenario.inflow = inflow_from_json(require_field(j, "", "inflow"));
    scenario.controller = controller_from_json(require_field(j, "", "controller"));
    scenario.initial_storage = optional_number(j, "", "initial_storage", 0.0);
    scenario.validate();
    return scenario;
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    scenario.validate();
    write_text_atomic(path, scenario_to_json(scenario).dump(2) + "\n");
}

std::string trajectory_csv_string(const RunResult& result) {
    std::string out = "t,inflow,outflow_commanded,outflow_actual,storage,spill,step_cost\n";
    out.reserve(out.size() + result.records.size() * 96);
    char line[256];
    for (const StepRecord& r : result.records) {
        std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      r.t, r.inflow, r.outflow_commanded, r.outflow_actual, r.storage,
                      r.spill, r.step_cost);
        out += line;
    }
    return out;
}

void write_trajectory_csv(const RunResult& result, const std::filesystem::path& path) {
    write_text_atomic(path, trajectory_csv_string(result));
}

std::string report_json_string(const ComparisonReport& report) {
    const json j = {
        {"optimized", metrics_to_json(report.optimized)},
        {"baseline", metrics_to_json(report.baseline)},
        {"deltas",
         {{"avg_storage_delta", report.deltas.avg_storage_delta},
          {"total_outflow_delta", report.deltas.total_outflow_delta},
          {"spill_delta", report.deltas.spill_delta},
          {"cost_delta", report.deltas.cost_delta}}},
    };
    return j.dump(2) + "\n";
}

void write_report_json(const ComparisonReport& report, const std::filesystem::path& path) {
    write_text_atomic(path, report_json_string(report));
}

} // namespace datadam
