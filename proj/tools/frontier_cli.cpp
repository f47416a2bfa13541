// frontier: reproducible experiments on planar Brownian exponents, SLE and
// critical percolation. Every experiment is a pure function of its config
// and seed; results are written as deterministic JSON + CSV with a volatile
// .run.json sidecar (see schema/result_schema.json).

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frontier/errors.hpp"
#include "frontier/exponents.hpp"
#include "frontier/extremal.hpp"
#include "frontier/grid.hpp"
#include "frontier/io.hpp"
#include "frontier/loewner.hpp"
#include "frontier/mc.hpp"
#include "frontier/parallel.hpp"
#include "frontier/paths.hpp"
#include "frontier/percolation.hpp"
#include "frontier/report.hpp"
#include "frontier/special.hpp"
#include "frontier/walk_geometry.hpp"

using namespace frontier;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string now_iso8601() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::vector<double> parse_radii(const std::string& text) {
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        double lo = std::stod(text.substr(0, colon));
        double hi = std::stod(text.substr(colon + 1));
        return dyadic_radii(lo, hi);
    }
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw ConfigError("empty radii list");
    return out;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw ConfigError("empty list");
    return out;
}

// "14:20" = dyadic sizes 2^14 .. 2^20; or an explicit comma list of sizes.
std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        int lo = std::stoi(text.substr(0, colon));
        int hi = std::stoi(text.substr(colon + 1));
        if (lo < 8 || hi < lo || hi > 30) throw ConfigError("bad size exponents");
        for (int e = lo; e <= hi; ++e) out.push_back(std::size_t{1} << e);
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    if (out.empty()) throw ConfigError("empty size list");
    return out;
}

struct Common {
    std::string out_dir;
    std::string name;
    std::uint64_t seed_root = 1;
    int threads = 0;
};

// Config-file preprocessing: --config FILE supplies defaults for long
// options; explicit flags override them.
ordered_json preload_config(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        std::string path;
        if (a == "--config" && i + 1 < argc)
            path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0)
            path = a.substr(9);
        if (!path.empty()) {
            std::ifstream is(path);
            if (!is) throw ConfigError("cannot open config file " + path);
            return ordered_json::parse(is);
        }
    }
    return ordered_json::object();
}

template <class T>
T cfg_or(const ordered_json& cfg, const std::string& key, T fallback) {
    if (cfg.contains(key)) return cfg[key].get<T>();
    return fallback;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

ResultRecord base_record(const std::string& experiment, const Common& common,
                         const ordered_json& config_echo) {
    ResultRecord r;
    r.experiment = experiment;
    r.config_json = config_echo.dump();
    r.seed = Seed{common.seed_root, 0};
    r.library_version = library_version();
    r.git_describe = git_describe_string();
    r.timestamp = now_iso8601();
    r.threads_used = effective_threads(common.threads);
    return r;
}

void finish(ResultRecord& r, const Common& common, const Timer& timer,
            const std::string& default_name) {
    r.wall_seconds = timer.seconds();
    std::string name = common.name.empty() ? default_name : common.name;
    std::string path = write_record(r, common.out_dir, name);
    double est = r.fit ? r.fit->slope : r.scalar.value_or(0.0);
    double se = r.fit ? r.fit->std_error : r.scalar_std_error.value_or(0.0);
    std::cout << r.experiment << ": " << r.exponent_name << " = "
              << format_double(est) << " +/- " << format_double(se);
    if (r.reference) std::cout << "  (closed form " << format_double(*r.reference) << ")";
    std::cout << "\n  -> " << path << "\n";
}

int run_cli(int argc, char** argv) {
    ordered_json cfg = preload_config(argc, argv);

    CLI::App app{"Brownian intersection exponents, SLE and percolation experiments"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    Common common;
    const char* env_dir = std::getenv("FRONTIER_OUTDIR");
    common.out_dir = cfg_or<std::string>(cfg, "out_dir", env_dir ? env_dir : ".");
    common.seed_root = cfg_or<std::uint64_t>(cfg, "seed", 1);
    common.threads = cfg_or<int>(cfg, "threads", 0);
    app.add_option("--out-dir", common.out_dir, "output directory");
    app.add_option("--name", common.name, "output basename");
    app.add_option("--seed", common.seed_root, "root seed");
    app.add_option("--threads", common.threads, "worker threads (0 = all)");

    // ----- formulas ------------------------------------------------------
    auto* formulas = app.add_subcommand("formulas", "closed-form exponent values");
    auto* f_eval = formulas->add_subcommand("eval", "evaluate one function");
    std::string fn_name, fn_args;
    f_eval->add_option("--function", fn_name, "name")->required();
    f_eval->add_option("--args", fn_args, "comma-separated arguments")->required();
    f_eval->callback([&] {
        std::vector<double> a = parse_doubles(fn_args);
        double value;
        if (fn_name == "xi_tilde") value = xi_tilde(a);
        else if (fn_name == "xi_plane") value = xi_plane(a);
        else if (fn_name == "xi_j_lambda" && a.size() == 2)
            value = xi_j_lambda(static_cast<int>(a[0]), a[1]);
        else if (fn_name == "xi_hat_sle6" && a.size() == 1) value = xi_hat_sle6(a[0]);
        else if (fn_name == "xi_radial_sle6" && a.size() == 1)
            value = xi_radial_sle6(a[0]).value;
        else if (fn_name == "xi_tilde_sle6_two_sided" && a.size() == 2)
            value = xi_tilde_sle6_two_sided(a[0], a[1]);
        else if (fn_name == "hyp2f1" && a.size() == 4)
            value = hyp2f1(a[0], a[1], a[2], a[3]);
        else if (fn_name == "cardy" && a.size() == 1) value = cardy_crossing(a[0]);
        else if (fn_name == "L_of_x" && a.size() == 1) value = L_of_x(a[0]);
        else if (fn_name == "annulus_L" && a.size() == 1) value = annulus_L(a[0]);
        else throw ConfigError("unknown function or wrong arity: " + fn_name);
        ordered_json out;
        out["function"] = fn_name;
        out["args"] = a;
        out["value"] = value;
        std::cout << out.dump() << "\n";
    });

    auto* f_table = formulas->add_subcommand("table", "headline exponent table");
    f_table->callback([&] {
        std::cout << "exponent      value\n"
                  << "xi(2,0)       " << format_double(xi_j_lambda(2, 0)) << "  (= 2/3)\n"
                  << "xi(1,1)       " << format_double(xi_j_lambda(1, 1)) << "  (= 5/4)\n"
                  << "xi(1,0)       " << format_double(xi_j_lambda(1, 0)) << "  (= 1/4)\n"
                  << "dim frontier  " << format_double(2 - xi_j_lambda(2, 0)) << "  (= 4/3)\n"
                  << "dim cut       " << format_double(2 - xi_j_lambda(1, 1)) << "  (= 3/4)\n"
                  << "dim pioneer   " << format_double(2 - xi_j_lambda(1, 0)) << "  (= 7/4)\n";
    });

    auto* f_id = formulas->add_subcommand("identities", "run the identity suite");
    f_id->callback([&] {
        bool all = true;
        for (const auto& c : formula_identity_checks()) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                      << "  (max err " << format_double(c.max_error) << ", tol "
                      << format_double(c.tolerance) << ")\n";
            all = all && c.pass;
        }
        if (!all) throw NumericError("identity suite failed");
    });

    // ----- exp -----------------------------------------------------------
    auto* exp_cmd = app.add_subcommand("exp", "Monte Carlo exponent estimators");
    struct ExpOpts {
        int j = 1, k = 1;
        double lambda = 1.0;
        std::string radii = "2:64";
        std::size_t trials = 1000, inner = 200;
        double dt = 0.05;
    } eo;
    eo.j = cfg_or(cfg, "j", eo.j);
    eo.k = cfg_or(cfg, "k", eo.k);
    eo.lambda = cfg_or(cfg, "lambda", eo.lambda);
    eo.radii = cfg_or<std::string>(cfg, "radii", eo.radii);
    eo.trials = cfg_or<std::size_t>(cfg, "trials", eo.trials);
    eo.inner = cfg_or<std::size_t>(cfg, "inner", eo.inner);
    eo.dt = cfg_or(cfg, "dt", eo.dt);

    auto add_exp_opts = [&](CLI::App* cmd, bool with_k, bool with_lambda) {
        cmd->add_option("--j", eo.j, "paths in the first packet");
        if (with_k) cmd->add_option("--k", eo.k, "paths in the second packet");
        if (with_lambda) cmd->add_option("--lambda", eo.lambda, "moment order");
        cmd->add_option("--radii", eo.radii, "lo:hi dyadic or comma list");
        cmd->add_option("--trials", eo.trials, "trials per radius");
        cmd->add_option("--dt", eo.dt, "Brownian step variance");
    };
    auto make_plan = [&]() {
        ExperimentPlan plan;
        plan.radii = parse_radii(eo.radii);
        plan.trials_per_radius = eo.trials;
        plan.dt = eo.dt;
        plan.inner_samples = eo.inner;
        plan.seed = Seed{common.seed_root, 0};
        plan.threads = common.threads;
        // stream finished radii so an interrupted run leaves partial results
        plan.on_point = [](const FitPoint& p) {
            std::fprintf(stderr, "  radius %g: value %.6g (n=%zu)\n", p.scale,
                         p.value, p.n_samples);
        };
        return plan;
    };
    auto plan_echo = [&](const ExperimentPlan& plan) {
        ordered_json j;
        j["radii"] = plan.radii;
        j["trials_per_radius"] = plan.trials_per_radius;
        j["dt"] = plan.dt;
        j["seed"] = plan.seed.root;
        return j;
    };

    auto* e_non = exp_cmd->add_subcommand("nonintersect", "xi(j,k) non-intersection");
    add_exp_opts(e_non, true, false);
    e_non->callback([&] {
        Timer timer;
        ExperimentPlan plan = make_plan();
        ordered_json echo = plan_echo(plan);
        echo["j"] = eo.j;
        echo["k"] = eo.k;
        ResultRecord r = base_record("exp.nonintersect", common, echo);
        r.exponent_name = "xi(" + std::to_string(eo.j) + "," + std::to_string(eo.k) + ")";
        r.fit = estimate_nonintersection(eo.j, eo.k, plan);
        std::vector<double> args{static_cast<double>(eo.j), static_cast<double>(eo.k)};
        r.reference = xi_plane(args);
        finish(r, common, timer, "nonintersect");
    });

    auto* e_dis = exp_cmd->add_subcommand("disconnect", "xi(j,0) disconnection");
    add_exp_opts(e_dis, false, false);
    e_dis->callback([&] {
        Timer timer;
        ExperimentPlan plan = make_plan();
        ordered_json echo = plan_echo(plan);
        echo["j"] = eo.j;
        ResultRecord r = base_record("exp.disconnect", common, echo);
        r.exponent_name = "xi(" + std::to_string(eo.j) + ",0)";
        r.fit = estimate_disconnection(eo.j, plan);
        r.reference = xi_j_lambda(eo.j, 0.0);
        finish(r, common, timer, "disconnect");
    });

    auto* e_half = exp_cmd->add_subcommand("halfplane", "half-plane xi~(j,k)");
    add_exp_opts(e_half, true, false);
    e_half->callback([&] {
        Timer timer;
        ExperimentPlan plan = make_plan();
        ordered_json echo = plan_echo(plan);
        echo["j"] = eo.j;
        echo["k"] = eo.k;
        ResultRecord r = base_record("exp.halfplane", common, echo);
        r.exponent_name =
            "xi~(" + std::to_string(eo.j) + "," + std::to_string(eo.k) + ")";
        r.fit = estimate_halfplane(eo.j, eo.k, plan);
        std::vector<double> args;
        for (int i = 0; i < eo.j + eo.k; ++i) args.push_back(1.0);
        r.reference = xi_tilde(args);
        finish(r, common, timer, "halfplane");
    });

    auto* e_zr = exp_cmd->add_subcommand("zr-moment", "E[Z_R^lambda] moments");
    add_exp_opts(e_zr, false, true);
    e_zr->add_option("--inner", eo.inner, "inner samples per outer trial");
    e_zr->callback([&] {
        Timer timer;
        ExperimentPlan plan = make_plan();
        ordered_json echo = plan_echo(plan);
        echo["j"] = eo.j;
        echo["lambda"] = eo.lambda;
        echo["inner_samples"] = plan.inner_samples;
        ResultRecord r = base_record("exp.zr-moment", common, echo);
        r.exponent_name = "xi(" + std::to_string(eo.j) + "," +
                          format_double(eo.lambda) + ")";
        ZrMomentResult zr = estimate_zr_moment(eo.j, eo.lambda, plan);
        r.fit = zr.fit;
        r.reference = xi_j_lambda(eo.j, eo.lambda);
        finish(r, common, timer, "zr-moment");
        std::cout << "  Jensen diagnostic (inner/4): slope "
                  << format_double(zr.quarter_inner_fit.slope) << " +/- "
                  << format_double(zr.quarter_inner_fit.std_error) << "\n";
    });

    // ----- dims ----------------------------------------------------------
    auto* dims = app.add_subcommand("dims", "fractal dimension estimators");
    struct DimOpts {
        std::string sizes = "14:20";
        std::size_t trials = 128;
    } dodim;
    dodim.sizes = cfg_or<std::string>(cfg, "sizes", dodim.sizes);
    dodim.trials = cfg_or<std::size_t>(cfg, "trials", dodim.trials);
    for (auto [sub, kind, ref] :
         {std::tuple{"frontier", DimensionKind::frontier, 4.0 / 3.0},
          std::tuple{"cut", DimensionKind::cut, 3.0 / 4.0},
          std::tuple{"pioneer", DimensionKind::pioneer, 7.0 / 4.0}}) {
        auto* cmd = dims->add_subcommand(sub, std::string("dimension of ") + sub +
                                                  " points");
        cmd->add_option("--sizes", dodim.sizes, "lo:hi log2 sizes or comma list");
        cmd->add_option("--trials", dodim.trials, "walks per size");
        cmd->callback([&, kind, ref, sub] {
            Timer timer;
            std::vector<std::size_t> sizes = parse_sizes(dodim.sizes);
            ordered_json echo;
            echo["sizes"] = sizes;
            echo["trials"] = dodim.trials;
            echo["seed"] = common.seed_root;
            ResultRecord r = base_record(std::string("dims.") + sub, common, echo);
            r.exponent_name = std::string("dim ") + sub;
            DimensionCounts counts = dimension_counts(
                sizes, dodim.trials, Seed{common.seed_root, 0}, common.threads);
            PowerLawFit f = kind == DimensionKind::frontier ? counts.frontier_fit
                            : kind == DimensionKind::cut    ? counts.cut_fit
                                                            : counts.pioneer_fit;
            // report the dimension: 2x the count-growth slope
            PowerLawFit d = f;
            d.slope = dimension_from_fit(f);
            d.std_error = 2.0 * f.std_error;
            r.fit = d;
            r.reference = ref;
            finish(r, common, timer, std::string("dims-") + sub);
            if (kind == DimensionKind::frontier)
                std::cout << "  box-counting cross-check on the largest size: "
                          << format_double(counts.box_check.slope) << " +/- "
                          << format_double(counts.box_check_std_error) << "\n";
        });
    }

    // ----- sle -----------------------------------------------------------
    auto* sle = app.add_subcommand("sle", "Loewner evolution experiments");
    struct SleOpts {
        double kappa = 6.0, time = 1.0, dt = 1e-4, x = 0.5, lambda = 0.0;
        std::size_t trials = 10000, decimation = 8;
        std::string xgrid = "0.7,0.85,0.95,0.98,0.995,0.9999";
        std::string radii = "0.5,0.25,0.125,0.0625";
        int grid = 128;
    } so;
    so.kappa = cfg_or(cfg, "kappa", so.kappa);
    so.dt = cfg_or(cfg, "sle_dt", so.dt);
    so.trials = cfg_or<std::size_t>(cfg, "trials", so.trials);

    auto* s_trace = sle->add_subcommand("trace", "sample a chordal trace");
    s_trace->add_option("--kappa", so.kappa, "SLE parameter");
    s_trace->add_option("--time", so.time, "total capacity time");
    s_trace->add_option("--dt", so.dt, "drive step");
    s_trace->add_option("--decimation", so.decimation, "trace every n steps");
    std::string replay_path;
    s_trace->add_option("--replay", replay_path,
                        "replay a chain JSON file (the t=0 sample becomes the "
                        "first step drive; all later samples reproduce exactly)");
    s_trace->callback([&] {
        DrivingFunction drive;
        if (!replay_path.empty()) {
            std::ifstream is(replay_path);
            if (!is) throw ConfigError("cannot open " + replay_path);
            std::stringstream ss;
            ss << is.rdbuf();
            ConformalChain chain = chain_from_json_text(ss.str());
            drive.dt = chain.steps.empty() ? 1e-4 : chain.steps[0].duration;
            drive.values.push_back(chain.steps.empty() ? 0.0 : chain.steps[0].drive);
            for (const auto& s : chain.steps) drive.values.push_back(s.drive);
        } else {
            std::size_t n = static_cast<std::size_t>(so.time / so.dt);
            drive = sample_driving(so.kappa, n, so.dt, Seed{common.seed_root, 0});
        }
        Path2D tr = chordal_trace(drive, so.decimation);
        std::string name = common.name.empty() ? "sle-trace" : common.name;
        std::string base = common.out_dir + "/" + name;
        {
            std::ofstream os(base + ".csv");
            write_path_csv(tr, os);
        }
        {
            std::ofstream os(base + ".svg");
            write_svg(tr.points, os);
        }
        {
            std::ofstream os(base + ".chain.json");
            os << chain_to_json(chain_from_driving(drive)) << "\n";
        }
        std::cout << "sle.trace: " << tr.size() << " points -> " << base
                  << ".{csv,svg,chain.json}\n";
    });

    auto* s_swallow = sle->add_subcommand("swallow", "boundary swallowing sides");
    s_swallow->add_option("--x", so.x, "start point in (0,1)");
    s_swallow->add_option("--trials", so.trials, "trials");
    s_swallow->add_option("--dt", so.dt, "base drive step");
    s_swallow->callback([&] {
        Timer timer;
        ordered_json echo;
        echo["x"] = so.x;
        echo["trials"] = so.trials;
        echo["dt"] = so.dt;
        echo["seed"] = common.seed_root;
        ResultRecord r = base_record("sle.swallow", common, echo);
        r.exponent_name = "P(one-side | x=" + format_double(so.x) + ")";
        std::vector<std::uint8_t> one(so.trials, 0);
        parallel_trials(so.trials, common.threads, [&](std::size_t t) {
            SwallowResult res =
                sle6_swallow_experiment(so.x, so.dt, Seed{common.seed_root, t});
            one[t] = res.side == SwallowSide::one_side ? 1 : 0;
        });
        std::size_t cnt = 0;
        for (auto v : one) cnt += v;
        double p = static_cast<double>(cnt) / static_cast<double>(so.trials);
        r.scalar = p;
        r.scalar_std_error = std::sqrt(p * (1 - p) / static_cast<double>(so.trials));
        r.reference = cardy_crossing(so.x);
        finish(r, common, timer, "sle-swallow");
    });

    auto* s_xihat = sle->add_subcommand("xi-hat", "rectangle exponent estimate");
    s_xihat->add_option("--lambda", so.lambda, "exponent argument");
    s_xihat->add_option("--xgrid", so.xgrid, "start points");
    s_xihat->add_option("--trials", so.trials, "trials per x");
    s_xihat->add_option("--dt", so.dt, "base drive step");
    s_xihat->callback([&] {
        Timer timer;
        std::vector<double> xs = parse_doubles(so.xgrid);
        ordered_json echo;
        echo["lambda"] = so.lambda;
        echo["x_grid"] = xs;
        echo["trials"] = so.trials;
        echo["dt"] = so.dt;
        echo["seed"] = common.seed_root;
        ResultRecord r = base_record("sle.xi-hat", common, echo);
        r.exponent_name = "xi_hat(SLE6," + format_double(so.lambda) + ")";
        r.fit = xi_hat_estimate(so.lambda, xs, so.trials, so.dt,
                                Seed{common.seed_root, 0}, common.threads);
        r.reference = xi_hat_sle6(so.lambda);
        finish(r, common, timer, "sle-xi-hat");
    });

    auto* s_rad = sle->add_subcommand("radial-xi", "annulus exponent estimate");
    s_rad->add_option("--lambda", so.lambda, "exponent argument (> 0)");
    s_rad->add_option("--radii", so.radii, "target radii in (0,1)");
    s_rad->add_option("--trials", so.trials, "trials per radius");
    s_rad->add_option("--dt", so.dt, "drive step");
    s_rad->add_option("--grid", so.grid, "annulus cells per unit");
    s_rad->callback([&] {
        Timer timer;
        std::vector<double> rs = parse_doubles(so.radii);
        ordered_json echo;
        echo["lambda"] = so.lambda;
        echo["radii"] = rs;
        echo["trials"] = so.trials;
        echo["dt"] = so.dt;
        echo["grid"] = so.grid;
        echo["seed"] = common.seed_root;
        ResultRecord r = base_record("sle.radial-xi", common, echo);
        r.exponent_name = "xi(SLE6," + format_double(so.lambda) + ")";
        r.fit = xi_radial_estimate(so.lambda, rs, so.trials, so.dt,
                                   Seed{common.seed_root, 0}, common.threads, so.grid);
        r.reference = xi_radial_sle6(so.lambda).value;
        finish(r, common, timer, "sle-radial-xi");
    });

    // ----- perc ----------------------------------------------------------
    auto* perc = app.add_subcommand("perc", "critical percolation");
    struct PercOpts {
        double aspect = 1.0;
        int mesh = 64;
        std::size_t trials = 4000;
        std::string shape = "auto";
        int cols = 80, rows = 40;
    } po;
    po.mesh = cfg_or(cfg, "mesh", po.mesh);
    po.trials = cfg_or<std::size_t>(cfg, "trials", po.trials);

    auto* p_cross = perc->add_subcommand("crossing", "rectangle crossing probability");
    p_cross->add_option("--aspect", po.aspect, "width / height");
    p_cross->add_option("--mesh", po.mesh, "sites per short side");
    p_cross->add_option("--trials", po.trials, "trials");
    p_cross->add_option("--shape", po.shape, "auto | rhombus | rect");
    p_cross->callback([&] {
        Timer timer;
        CrossShape shape = CrossShape::rect;
        if (po.shape == "rhombus" || (po.shape == "auto" && po.aspect == 1.0))
            shape = CrossShape::rhombus;
        ordered_json echo;
        echo["aspect"] = po.aspect;
        echo["mesh"] = po.mesh;
        echo["trials"] = po.trials;
        echo["shape"] = shape == CrossShape::rhombus ? "rhombus" : "rect";
        echo["seed"] = common.seed_root;
        ResultRecord r = base_record("perc.crossing", common, echo);
        r.exponent_name = "P(cross | aspect=" + format_double(po.aspect) + ")";
        CrossingEstimate est = crossing_probability(
            po.aspect, po.mesh, po.trials, Seed{common.seed_root, 0}, shape,
            common.threads);
        r.scalar = est.p;
        r.scalar_std_error = est.std_error;
        // Cardy prediction: the vertical-edge crossing is the complement of
        // C(x) at the conformal rectangle's x.
        r.reference = 1.0 - cardy_crossing(x_of_L(M_PI * po.aspect));
        finish(r, common, timer, "perc-crossing");
        std::string name = common.name.empty() ? "perc-crossing" : common.name;
        std::ofstream csv(common.out_dir + "/" + name + ".csv");
        csv << "aspect,mesh,trials,estimate,stderr\n"
            << format_double(po.aspect) << ',' << po.mesh << ',' << po.trials << ','
            << format_double(est.p) << ',' << format_double(est.std_error) << '\n';
    });

    auto* p_exp = perc->add_subcommand("explore", "interface exploration figure");
    p_exp->add_option("--cols", po.cols, "region columns");
    p_exp->add_option("--rows", po.rows, "region rows");
    p_exp->callback([&] {
        TriRegion reg = lazy_region(po.cols, po.rows, 1.0, Seed{common.seed_root, 0},
                                    po.cols / 2);
        ExplorationPath path = explore(reg);
        std::string name = common.name.empty() ? "perc-explore" : common.name;
        std::string base = common.out_dir + "/" + name;
        {
            std::ofstream os(base + ".svg");
            write_svg(path.vertices, os, "#9c1f1f");
        }
        {
            std::ofstream os(base + ".ppm", std::ios::binary);
            write_region_ppm(reg, os);
        }
        std::cout << "perc.explore: " << path.vertices.size() << " vertices -> "
                  << base << ".{svg,ppm}\n";
    });

    // ----- modulus -------------------------------------------------------
    auto* mod = app.add_subcommand("modulus", "extremal length utilities");
    struct ModOpts {
        double width = 1.0, height = 1.0, r = 0.5;
        std::string base;
    } mo;
    auto* m_rect = mod->add_subcommand("rect", "rectangle closed form");
    m_rect->add_option("--width", mo.width)->required();
    m_rect->add_option("--height", mo.height)->required();
    m_rect->callback([&] {
        ordered_json out;
        out["L"] = rectangle_L(mo.width, mo.height);
        std::cout << out.dump() << "\n";
    });
    auto* m_ann = mod->add_subcommand("annulus", "annulus closed form");
    m_ann->add_option("--r", mo.r)->required();
    m_ann->callback([&] {
        ordered_json out;
        out["L"] = annulus_L(mo.r);
        std::cout << out.dump() << "\n";
    });
    auto* m_num = mod->add_subcommand("numeric", "solve a quadrilateral file");
    m_num->add_option("--quad", mo.base, "base path of .pbm/.sides.json")->required();
    m_num->callback([&] {
        Quadrilateral q = read_quadrilateral(mo.base);
        ExtremalLength L = modulus_numeric(q);
        ordered_json out;
        out["finite"] = L.finite;
        if (L.finite) out["L"] = L.value;
        std::cout << out.dump() << "\n";
    });

    // ----- report --------------------------------------------------------
    auto* rep = app.add_subcommand("report", "summarize result records");
    std::vector<std::string> inputs;
    std::string report_out;
    rep->add_option("files", inputs, "result JSON files")->required();
    rep->add_option("--out", report_out, "write markdown here (default stdout)");
    rep->callback([&] {
        std::vector<ResultRecord> records;
        for (const auto& f : inputs) records.push_back(read_record_file(f));
        std::string md = make_report(records);
        if (report_out.empty()) {
            std::cout << md;
        } else {
            std::ofstream os(report_out);
            os << md;
            std::cout << "report -> " << report_out << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 4;
    }
}
