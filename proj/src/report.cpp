#include "frontier/report.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "frontier/errors.hpp"
#include "frontier/io.hpp"

#ifndef FRONTIER_GIT_DESCRIBE
#define FRONTIER_GIT_DESCRIBE "unknown"
#endif

namespace frontier {

using ordered_json = nlohmann::ordered_json;

std::string library_version() { return "0.1.0"; }
std::string git_describe_string() { return FRONTIER_GIT_DESCRIBE; }

namespace {

ordered_json fit_to_json(const PowerLawFit& f) {
    ordered_json j;
    j["slope"] = f.slope;
    j["std_error"] = f.std_error;
    j["intercept"] = f.intercept;
    j["r_squared"] = f.r_squared;
    ordered_json pts = ordered_json::array();
    for (const auto& p : f.points) {
        ordered_json pj;
        pj["scale"] = p.scale;
        pj["value"] = p.value;
        pj["sigma_log"] = p.sigma_log;
        pj["n_samples"] = p.n_samples;
        pj["used"] = p.used;
        pts.push_back(pj);
    }
    j["points"] = pts;
    return j;
}

PowerLawFit fit_from_json(const nlohmann::json& j) {
    PowerLawFit f;
    f.slope = j.at("slope").get<double>();
    f.std_error = j.at("std_error").get<double>();
    f.intercept = j.at("intercept").get<double>();
    f.r_squared = j.at("r_squared").get<double>();
    for (const auto& pj : j.at("points")) {
        FitPoint p;
        p.scale = pj.at("scale").get<double>();
        p.value = pj.at("value").get<double>();
        p.sigma_log = pj.at("sigma_log").get<double>();
        p.n_samples = pj.at("n_samples").get<std::size_t>();
        p.used = pj.at("used").get<bool>();
        f.points.push_back(p);
    }
    return f;
}

}  // namespace

std::string record_to_json(const ResultRecord& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["experiment"] = r.experiment;
    j["exponent_name"] = r.exponent_name;
    if (r.reference) j["reference"] = *r.reference;
    if (r.fit) j["fit"] = fit_to_json(*r.fit);
    if (r.scalar) {
        j["value"] = *r.scalar;
        j["std_error"] = r.scalar_std_error.value_or(0.0);
    }
    j["config"] = nlohmann::ordered_json::parse(
        r.config_json.empty() ? "{}" : r.config_json);
    j["seed"] = {{"root", r.seed.root}, {"stream", r.seed.stream}};
    j["library_version"] = r.library_version;
    j["git_describe"] = r.git_describe;
    return j.dump(2) + "\n";
}

std::string record_run_log_json(const ResultRecord& r) {
    ordered_json j;
    j["timestamp"] = r.timestamp;
    j["wall_seconds"] = r.wall_seconds;
    j["threads_used"] = r.threads_used;
    return j.dump(2) + "\n";
}

ResultRecord record_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw ConfigError("record_from_json: unsupported schema version");
    ResultRecord r;
    r.experiment = j.at("experiment").get<std::string>();
    r.exponent_name = j.at("exponent_name").get<std::string>();
    if (j.contains("reference")) r.reference = j["reference"].get<double>();
    if (j.contains("fit")) r.fit = fit_from_json(j["fit"]);
    if (j.contains("value")) {
        r.scalar = j["value"].get<double>();
        r.scalar_std_error = j.value("std_error", 0.0);
    }
    r.config_json = j.at("config").dump();
    r.seed.root = j.at("seed").at("root").get<std::uint64_t>();
    r.seed.stream = j.at("seed").at("stream").get<std::uint64_t>();
    r.library_version = j.value("library_version", "");
    r.git_describe = j.value("git_describe", "");
    return r;
}

std::string write_record(const ResultRecord& r, const std::string& dir,
                         const std::string& name) {
    std::string base = dir.empty() ? name : dir + "/" + name;
    {
        std::ofstream os(base + ".json");
        if (!os) throw ConfigError("write_record: cannot open " + base + ".json");
        os << record_to_json(r);
    }
    if (r.fit) {
        std::ofstream os(base + ".csv");
        write_fit_csv(*r.fit, os);
    }
    {
        std::ofstream os(base + ".run.json");
        os << record_run_log_json(r);
    }
    return base + ".json";
}

ResultRecord read_record_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("read_record_file: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return record_from_json(ss.str());
}

std::string make_report(const std::vector<ResultRecord>& records) {
    if (records.empty()) throw ConfigError("make_report: no records");
    std::ostringstream md;
    md << "# Exponent estimates vs closed forms\n\n";
    md << "| experiment | exponent | estimate | std error | reference | z |\n";
    md << "|---|---|---|---|---|---|\n";

    struct Pool {
        double wsum = 0.0, wsum_est = 0.0;
        std::optional<double> reference;
        std::size_t count = 0;
    };
    std::map<std::string, Pool> pools;

    for (const auto& r : records) {
        double est = 0.0, se = 0.0;
        if (r.fit) {
            est = r.fit->slope;
            se = r.fit->std_error;
        } else if (r.scalar) {
            est = *r.scalar;
            se = r.scalar_std_error.value_or(0.0);
        } else {
            throw ConfigError("make_report: record without estimate: " + r.experiment);
        }
        std::string z = "-";
        if (r.reference && se > 0.0)
            z = format_double((est - *r.reference) / se);
        md << "| " << r.experiment << " | " << r.exponent_name << " | "
           << format_double(est) << " | " << format_double(se) << " | "
           << (r.reference ? format_double(*r.reference) : std::string("-")) << " | "
           << z << " |\n";
        if (se > 0.0) {
            Pool& p = pools[r.exponent_name];
            double w = 1.0 / (se * se);
            p.wsum += w;
            p.wsum_est += w * est;
            p.reference = r.reference;
            p.count += 1;
        }
    }

    bool any_pooled = false;
    std::ostringstream pooled;
    pooled << "\n## Pooled (inverse-variance weighted)\n\n";
    pooled << "| exponent | pooled estimate | std error | reference | z | runs |\n";
    pooled << "|---|---|---|---|---|---|\n";
    for (const auto& [name, p] : pools) {
        if (p.count < 2) continue;
        any_pooled = true;
        double est = p.wsum_est / p.wsum;
        double se = 1.0 / std::sqrt(p.wsum);
        std::string z = p.reference ? format_double((est - *p.reference) / se)
                                    : std::string("-");
        pooled << "| " << name << " | " << format_double(est) << " | "
               << format_double(se) << " | "
               << (p.reference ? format_double(*p.reference) : std::string("-"))
               << " | " << z << " | " << p.count << " |\n";
    }
    if (any_pooled) md << pooled.str();
    return md.str();
}

}  // namespace frontier
