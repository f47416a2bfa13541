#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontier/fit.hpp"
#include "frontier/rng.hpp"

namespace frontier {

inline constexpr int kSchemaVersion = 1;

// One finished experiment, complete enough to reproduce the run: the config
// echo plus the seed determine every number exactly. Volatile run metadata
// (timestamp, wall time) is serialized to a separate sidecar so the result
// file itself is byte-stable across reruns.
struct ResultRecord {
    std::string experiment;     // e.g. "exp.nonintersect"
    std::string exponent_name;  // e.g. "xi(1,1)"
    std::optional<double> reference;  // closed-form value when one exists
    std::optional<PowerLawFit> fit;
    std::optional<double> scalar;  // for single-number experiments
    std::optional<double> scalar_std_error;
    std::string config_json;  // echoed parameters as a JSON object
    Seed seed;
    std::string library_version;
    std::string git_describe;
    // volatile
    double wall_seconds = 0.0;
    std::string timestamp;
    int threads_used = 0;
};

std::string record_to_json(const ResultRecord& r);      // deterministic
std::string record_run_log_json(const ResultRecord& r); // volatile sidecar
ResultRecord record_from_json(const std::string& text);

// Writes <dir>/<name>.json, <dir>/<name>.csv (fit points, when present) and
// <dir>/<name>.run.json; returns the main path.
std::string write_record(const ResultRecord& r, const std::string& dir,
                         const std::string& name);
ResultRecord read_record_file(const std::string& path);

// Markdown summary comparing every record against its closed form, with
// z-scores; duplicate experiments are pooled by inverse-variance weighting.
std::string make_report(const std::vector<ResultRecord>& records);

std::string library_version();
std::string git_describe_string();

}  // namespace frontier
