// adsim command-line front end: simulate velocity/position paths, dump
// filters/densities/acvfs, and run the Monte Carlo validation experiments.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adsim/cascade.hpp"
#include "adsim/exact.hpp"
#include "adsim/experiments.hpp"
#include "adsim/inference.hpp"
#include "adsim/models.hpp"
#include "adsim/quadrature.hpp"
#include "adsim/spectra.hpp"
#include "adsim/wavelets.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string out = ".";
    int threads = 1;
    double quad_tol = 0.0;  // 0: library defaults
    std::string format = "csv";
};

struct ModelOpts {
    std::string process = "ou";
    double zeta = 1.0;
    double sigma = 1.0;
    double d = 0.25;
    double mass = 1.0;
    double thermal = 1.0;
};

adsim::ProcessModel make_model(const ModelOpts& m) {
    if (m.process == "ou") return adsim::ProcessModel::ou(m.zeta, m.sigma);
    if (m.process == "fou") return adsim::ProcessModel::fou(m.zeta, m.sigma, m.d);
    return adsim::ProcessModel::fgle(m.zeta, m.mass, m.d, m.thermal);
}

adsim::QuadratureConfig make_quad(const GlobalOpts& g, const adsim::ProcessModel& model) {
    adsim::QuadratureConfig cfg;
    cfg.rho = adsim::default_rho(adsim::delta_exponent(model));
    if (g.quad_tol > 0.0) {
        cfg.abs_tol = g.quad_tol;
        cfg.rel_tol = g.quad_tol * 100.0;
    }
    return cfg;
}

void add_model_flags(CLI::App* cmd, ModelOpts& m) {
    cmd->add_option("--process", m.process, "Velocity process")
        ->check(CLI::IsMember({"ou", "fou", "fgle"}));
    cmd->add_option("--zeta", m.zeta, "Damping coefficient");
    cmd->add_option("--sigma", m.sigma, "Noise amplitude (ou/fou)");
    cmd->add_option("--d", m.d, "Memory parameter (fou/fgle)");
    cmd->add_option("--mass", m.mass, "Particle mass (fgle)");
    cmd->add_option("--thermal", m.thermal, "k_B*tau product (fgle)");
}

json model_json(const ModelOpts& m) {
    json j{{"process", m.process}, {"zeta", m.zeta}};
    if (m.process != "fgle") j["sigma"] = m.sigma;
    if (m.process != "ou") j["d"] = m.d;
    if (m.process == "fgle") {
        j["mass"] = m.mass;
        j["thermal"] = m.thermal;
    }
    return j;
}

std::filesystem::path out_dir(const GlobalOpts& g) {
    std::filesystem::path dir(g.out);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path.string());
    f << content;
}

std::string fmt17(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

/// Two-column table as CSV or a JSON array of rows, per --format.
std::string render_table(const GlobalOpts& g, const std::string& c0, const std::string& c1,
                         const std::vector<std::pair<double, double>>& rows) {
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& [a, b] : rows) arr.push_back({{c0, a}, {c1, b}});
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    os << c0 << "," << c1 << "\n";
    for (const auto& [a, b] : rows) os << fmt17(a) << "," << fmt17(b) << "\n";
    return os.str();
}

std::string table_ext(const GlobalOpts& g) { return g.format == "json" ? ".json" : ".csv"; }

/// Static polyline plot of (x, y) rows.
std::string render_svg(const std::vector<std::pair<double, double>>& rows,
                       const std::string& title) {
    const int W = 900, H = 420, M = 45;
    double xmin = rows.front().first, xmax = rows.back().first;
    double ymin = rows.front().second, ymax = rows.front().second;
    for (const auto& [x, y] : rows) {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    auto px = [&](double x) { return M + (x - xmin) / (xmax - xmin) * (W - 2 * M); };
    auto py = [&](double y) { return H - M - (y - ymin) / (ymax - ymin) * (H - 2 * M); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
       << title << "</text>\n"
       << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    os << std::setprecision(6);
    for (const auto& [x, y] : rows) os << px(x) << "," << py(y) << " ";
    os << "\"/>\n</svg>\n";
    return os.str();
}

void write_manifest(const GlobalOpts& g, const std::string& subcommand, json config,
                    const std::vector<std::string>& outputs, double elapsed_ms) {
    json m;
    m["tool"] = "adsim";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["seed"] = g.seed;
    m["threads"] = g.threads;
    m["quad_tol"] = g.quad_tol;
    m["format"] = g.format;
    m["config"] = std::move(config);
    m["outputs"] = outputs;
    m["elapsed_ms"] = elapsed_ms;
    write_file(out_dir(g) / "manifest.json", m.dump(2) + "\n");
}

/// Integer-lag acvf table of the unit-spacing comparison sequence: sampled
/// velocity for ou/fou with d >= 0, position increments otherwise.
adsim::AcvfTable exact_acvf_table(const adsim::ProcessModel& model, int n,
                                  const adsim::QuadratureConfig& quad) {
    adsim::QuadratureConfig cfg = quad;
    cfg.abs_tol = std::max(cfg.abs_tol, 1e-9);
    cfg.rel_tol = std::max(cfg.rel_tol, 1e-7);
    cfg.max_subdivisions = std::max(cfg.max_subdivisions, 500000);
    std::vector<double> r(n);
    if (model.is_fgle()) {
        for (int k = 0; k < n; ++k) r[k] = adsim::deltaX_acvf_fgle(model, k, cfg);
        return adsim::make_acvf_table(std::move(r), "fgle increment acvf");
    }
    const adsim::ProcessModel fou =
        model.is_ou() ? adsim::ProcessModel::fou(model.as_ou().zeta, model.as_ou().sigma, 0.0)
                      : model;
    if (fou.as_fou().d < 0.0) {
        for (int k = 0; k < n; ++k) r[k] = adsim::deltaX_acvf_fou(fou, k, cfg);
        return adsim::make_acvf_table(std::move(r), "fou increment acvf");
    }
    const adsim::AliasedDensity f =
        adsim::make_aliased_density(fou, adsim::AliasKind::SampledVelocityFou, 1e-9);
    const bool singular = fou.as_fou().d > 0.0;
    for (int k = 0; k < n; ++k)
        r[k] = adsim::time_filter_coeff_even([&](double x) { return f(x); }, k, cfg, singular);
    return adsim::make_acvf_table(std::move(r), "sampled velocity acvf");
}

// --- subcommands ---

int cmd_simulate(const GlobalOpts& g, const ModelOpts& mo, const std::string& method, int J,
                 const std::string& init, int n, int duration, bool position, bool svg) {
    const auto t0 = std::chrono::steady_clock::now();
    const adsim::ProcessModel model = make_model(mo);
    std::vector<std::pair<double, double>> rows;
    std::string value_col = "value";
    if (method == "wavelet") {
        adsim::CascadeConfig cfg(model);
        cfg.J_final = J;
        cfg.duration = duration;
        cfg.seed = g.seed;
        cfg.policy = adsim::default_policy(model);
        if (init == "conv")
            cfg.init = adsim::FilterConvolutionInit{};
        else
            cfg.init = adsim::CmeInit{0};
        const adsim::FilterBank bank = adsim::build_filter_bank(cfg, make_quad(g, model));
        const adsim::SamplePath raw = adsim::simulate_velocity(cfg, bank);
        const double dt = std::exp2(-J);
        if (position) {
            const adsim::SamplePath x = adsim::position_path(raw);
            value_col = "position";
            for (std::size_t k = 0; k < x.values.size(); ++k)
                rows.emplace_back(k * dt, x.values[k]);
        } else {
            const adsim::SamplePath v = adsim::to_physical(raw);
            for (std::size_t k = 0; k < v.values.size(); ++k)
                rows.emplace_back(k * dt, v.values[k]);
        }
    } else {
        adsim::GaussianRng rng(adsim::RngStream{g.seed, 0});
        std::vector<double> path;
        if (method == "ar1") {
            if (!model.is_ou() && !(model.is_fou() && model.as_fou().d == 0.0))
                throw adsim::ParameterOutOfRange("ar1 method requires the ou process");
            const double zeta = mo.zeta, sigma = mo.sigma;
            const double phi = std::exp(-zeta);
            const double s2 = sigma * sigma * (1.0 - phi * phi) / (2.0 * zeta);
            path = adsim::ar1_simulate(phi, std::sqrt(s2), n, rng);
        } else {
            const adsim::AcvfTable table = exact_acvf_table(model, n, make_quad(g, model));
            path = method == "cholesky" ? adsim::cholesky_simulate(table, n, rng)
                                        : adsim::cme_simulate(table, n, rng);
        }
        for (std::size_t k = 0; k < path.size(); ++k)
            rows.emplace_back(static_cast<double>(k), path[k]);
    }
    const std::string stem = position ? "position" : "path";
    const bool exact = method != "wavelet";
    const std::string data = render_table(g, exact ? "index" : "t", value_col, rows);
    std::vector<std::string> outputs;
    const std::string data_name = stem + table_ext(g);
    write_file(out_dir(g) / data_name, data);
    outputs.push_back(data_name);
    if (svg) {
        write_file(out_dir(g) / (stem + ".svg"), render_svg(rows, mo.process + " " + method));
        outputs.push_back(stem + ".svg");
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json cfg = model_json(mo);
    cfg["method"] = method;
    if (method == "wavelet") {
        cfg["J"] = J;
        cfg["init"] = init;
        cfg["duration"] = duration;
    } else {
        cfg["n"] = n;
    }
    cfg["position"] = position;
    write_manifest(g, "simulate", std::move(cfg), outputs, ms);
    return 0;
}

int cmd_filters(const GlobalOpts& g, const ModelOpts& mo, int j, int T0, bool svg) {
    const auto t0 = std::chrono::steady_clock::now();
    const adsim::ProcessModel model = make_model(mo);
    const adsim::CmfPair cmf = adsim::daubechies_cmf(4);
    const adsim::QuadratureConfig quad = make_quad(g, model);
    const adsim::TruncationPolicy policy = adsim::default_policy(model);
    const adsim::ScaleFilters sf = adsim::build_scale_filters(
        model, j, cmf, adsim::Smoothing::Smoothed, quad, policy);
    const std::vector<double> g0 =
        adsim::g0_time_filter(model, cmf, adsim::Smoothing::Smoothed, T0, quad);
    std::vector<std::string> outputs;
    auto dump = [&](const std::string& stem, const std::vector<double>& coeffs, int half) {
        std::vector<std::pair<double, double>> rows;
        for (int k = -half; k <= half; ++k)
            rows.emplace_back(static_cast<double>(k), coeffs[half + k]);
        const std::string name = stem + table_ext(g);
        write_file(out_dir(g) / name, render_table(g, "lag", "value", rows));
        outputs.push_back(name);
        if (svg) {
            write_file(out_dir(g) / (stem + ".svg"), render_svg(rows, stem));
            outputs.push_back(stem + ".svg");
        }
    };
    dump("u", sf.u, sf.trunc_lag);
    dump("v", sf.v, sf.trunc_lag);
    dump("g0", g0, T0);
    json meta;
    meta["model"] = model_json(mo);
    meta["j"] = j;
    meta["vanishing_moments"] = cmf.vanishing_moments;
    meta["T"] = sf.trunc_lag;
    meta["T0"] = T0;
    meta["max_tail_value"] = sf.max_tail_value;
    write_file(out_dir(g) / "meta.json", meta.dump(2) + "\n");
    outputs.push_back("meta.json");
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json cfg = model_json(mo);
    cfg["j"] = j;
    cfg["T0"] = T0;
    write_manifest(g, "filters", std::move(cfg), outputs, ms);
    return 0;
}

int cmd_density(const GlobalOpts& g, const ModelOpts& mo, const std::string& kind,
                double xmin, double xmax, int points) {
    const auto t0 = std::chrono::steady_clock::now();
    const adsim::ProcessModel model = make_model(mo);
    std::function<double(double)> f;
    if (kind == "ghat2") {
        const adsim::SpectralDensityFn sd = adsim::spectral_density(model);
        f = sd.evaluator;
    } else {
        adsim::AliasKind ak = adsim::AliasKind::SampledVelocityFou;
        if (kind == "increment")
            ak = model.is_fgle() ? adsim::AliasKind::IncrementFgle
                                 : adsim::AliasKind::IncrementFou;
        const adsim::AliasedDensity ad = adsim::make_aliased_density(model, ak);
        f = [ad](double x) { return ad(x); };
    }
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i < points; ++i) {
        const double x = points == 1 ? xmin : xmin + (xmax - xmin) * i / (points - 1);
        rows.emplace_back(x, f(x));
    }
    const std::string name = "density" + table_ext(g);
    write_file(out_dir(g) / name, render_table(g, "x", "value", rows));
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json cfg = model_json(mo);
    cfg["kind"] = kind;
    cfg["xmin"] = xmin;
    cfg["xmax"] = xmax;
    cfg["points"] = points;
    write_manifest(g, "density", std::move(cfg), {name}, ms);
    return 0;
}

int cmd_acvf(const GlobalOpts& g, const ModelOpts& mo, const std::string& kind, int lags) {
    const auto t0 = std::chrono::steady_clock::now();
    const adsim::ProcessModel model = make_model(mo);
    const adsim::QuadratureConfig quad = make_quad(g, model);
    std::vector<std::pair<double, double>> rows;
    if (kind == "init") {
        adsim::QuadratureConfig cfg = quad;
        cfg.abs_tol = std::max(cfg.abs_tol, 1e-9);
        cfg.rel_tol = std::max(cfg.rel_tol, 1e-7);
        cfg.max_subdivisions = std::max(cfg.max_subdivisions, 500000);
        for (int k = 0; k <= lags; ++k)
            rows.emplace_back(k, adsim::velocity_acvf_for_init(model, adsim::Smoothing::Smoothed,
                                                               k, cfg));
    } else {
        const adsim::AcvfTable table = exact_acvf_table(model, lags + 1, quad);
        for (int k = 0; k <= lags; ++k) rows.emplace_back(k, table.values[k]);
    }
    const std::string name = "acvf" + table_ext(g);
    write_file(out_dir(g) / name, render_table(g, "lag", "value", rows));
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json cfg = model_json(mo);
    cfg["kind"] = kind;
    cfg["lags"] = lags;
    write_manifest(g, "acvf", std::move(cfg), {name}, ms);
    return 0;
}

int cmd_validate(const GlobalOpts& g, const std::string& experiment, int replicates,
                 int length) {
    const auto t0 = std::chrono::steady_clock::now();
    namespace ex = adsim::experiments;
    std::vector<ex::MCReport> reports;
    if (experiment == "table3")
        reports = ex::run_table3(replicates, length, g.seed);
    else if (experiment == "table4")
        reports = ex::run_table4(replicates, length, g.seed);
    else if (experiment == "table5")
        reports = ex::run_table5(replicates, length, g.seed);
    else if (experiment == "table6")
        reports = ex::run_table6(replicates, length, g.seed);
    else
        reports = ex::run_gof(replicates, length, g.seed);
    const std::string text = ex::report_to_text(reports);
    write_file(out_dir(g) / "report.json", ex::report_to_json(reports));
    write_file(out_dir(g) / "report.txt", text);
    std::cout << text;
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json cfg{{"experiment", experiment}, {"replicates", replicates}, {"length", length}};
    write_manifest(g, "validate", std::move(cfg), {"report.json", "report.txt"}, ms);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adsim: wavelet-cascade simulation of anomalous-diffusion processes"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--out", g.out, "Output directory")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--quad-tol", g.quad_tol, "Quadrature absolute tolerance");
    app.add_option("--format", g.format, "Tabular output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    ModelOpts sim_m;
    std::string method = "wavelet", init = "cme";
    int J = 6, n = 1024, duration = 1;
    bool position = false, svg = false;
    CLI::App* sim = app.add_subcommand("simulate", "Generate one sample path");
    add_model_flags(sim, sim_m);
    sim->add_option("--method", method, "Simulation method")
        ->check(CLI::IsMember({"wavelet", "cholesky", "cme", "ar1"}));
    sim->add_option("--J", J, "Finest dyadic scale (wavelet)")->check(CLI::NonNegativeNumber);
    sim->add_option("--init", init, "Cascade initialization")
        ->check(CLI::IsMember({"cme", "conv"}));
    sim->add_option("--n", n, "Path length (exact methods)")->check(CLI::PositiveNumber);
    sim->add_option("--duration", duration, "Time horizon in whole units (wavelet)")
        ->check(CLI::PositiveNumber);
    sim->add_flag("--position", position, "Emit the Riemann-sum position path");
    sim->add_flag("--svg", svg, "Also write a static SVG plot");

    ModelOpts filt_m;
    int filt_j = 0, filt_T0 = 400;
    bool filt_svg = false;
    CLI::App* filt = app.add_subcommand("filters", "Dump cascade filters u_j, v_j, g0");
    add_model_flags(filt, filt_m);
    filt->add_option("--j", filt_j, "Scale index")->check(CLI::NonNegativeNumber);
    filt->add_option("--T0", filt_T0, "Half-lag of the g0 dump")->check(CLI::PositiveNumber);
    filt->add_flag("--svg", filt_svg, "Also write static SVG plots");

    ModelOpts dens_m;
    std::string dens_kind = "ghat2";
    double xmin = -M_PI, xmax = M_PI;
    int points = 512;
    CLI::App* dens = app.add_subcommand("density", "Evaluate a spectral density on a grid");
    add_model_flags(dens, dens_m);
    dens->add_option("--kind", dens_kind, "Density kind")
        ->check(CLI::IsMember({"ghat2", "sampled", "increment"}));
    dens->add_option("--xmin", xmin, "Grid start");
    dens->add_option("--xmax", xmax, "Grid end");
    dens->add_option("--points", points, "Grid size")->check(CLI::PositiveNumber);

    ModelOpts acvf_m;
    std::string acvf_kind = "exact";
    int lags = 32;
    CLI::App* acvf = app.add_subcommand("acvf", "Tabulate an autocovariance function");
    add_model_flags(acvf, acvf_m);
    acvf->add_option("--kind", acvf_kind, "exact: comparison-sequence acvf; init: scale-0 acvf")
        ->check(CLI::IsMember({"exact", "init"}));
    acvf->add_option("--lags", lags, "Largest lag")->check(CLI::NonNegativeNumber);

    std::string experiment = "table4";
    int replicates = 1000, length = 512;
    CLI::App* val = app.add_subcommand("validate", "Run a Monte Carlo comparison experiment");
    val->add_option("--experiment", experiment, "Experiment name")
        ->check(CLI::IsMember({"table3", "table4", "table5", "table6", "gof"}));
    val->add_option("--replicates", replicates, "Monte Carlo replicates")
        ->check(CLI::PositiveNumber);
    val->add_option("--length", length, "Series length per replicate")
        ->check(CLI::PositiveNumber);

    int gof_replicates = 1000, gof_length = 512;
    CLI::App* gof = app.add_subcommand("gof", "Run the goodness-of-fit comparison");
    gof->add_option("--replicates", gof_replicates, "Monte Carlo replicates")
        ->check(CLI::PositiveNumber);
    gof->add_option("--length", gof_length, "Series length per replicate")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(g, sim_m, method, J, init, n, duration, position, svg);
        if (filt->parsed()) return cmd_filters(g, filt_m, filt_j, filt_T0, filt_svg);
        if (dens->parsed()) return cmd_density(g, dens_m, dens_kind, xmin, xmax, points);
        if (acvf->parsed()) return cmd_acvf(g, acvf_m, acvf_kind, lags);
        if (val->parsed()) return cmd_validate(g, experiment, replicates, length);
        if (gof->parsed()) return cmd_validate(g, "gof", gof_replicates, gof_length);
    } catch (const adsim::ParameterOutOfRange& e) {
        std::cerr << "ParameterOutOfRange: " << e.what() << "\n";
        return 3;
    } catch (const adsim::SingularityAtOrigin& e) {
        std::cerr << "SingularityAtOrigin: " << e.what() << "\n";
        return 3;
    } catch (const adsim::MaxSubdivisionsExceeded& e) {
        std::cerr << "MaxSubdivisionsExceeded: " << e.what() << "\n";
        return 3;
    } catch (const adsim::NonFiniteIntegrand& e) {
        std::cerr << "NonFiniteIntegrand: " << e.what() << "\n";
        return 3;
    } catch (const adsim::TailBoundUnavailable& e) {
        std::cerr << "TailBoundUnavailable: " << e.what() << "\n";
        return 3;
    } catch (const adsim::UnsupportedOrder& e) {
        std::cerr << "UnsupportedOrder: " << e.what() << "\n";
        return 3;
    } catch (const adsim::RatioUndefined& e) {
        std::cerr << "RatioUndefined: " << e.what() << "\n";
        return 3;
    } catch (const adsim::NotPositiveDefinite& e) {
        std::cerr << "NotPositiveDefinite: " << e.what() << "\n";
        return 3;
    } catch (const adsim::NegativeEigenvalue& e) {
        std::cerr << "NegativeEigenvalue: " << e.what() << "\n";
        return 3;
    } catch (const adsim::NonStationary& e) {
        std::cerr << "NonStationary: " << e.what() << "\n";
        return 3;
    } catch (const adsim::DegenerateVariance& e) {
        std::cerr << "DegenerateVariance: " << e.what() << "\n";
        return 3;
    } catch (const adsim::LengthMismatch& e) {
        std::cerr << "LengthMismatch: " << e.what() << "\n";
        return 3;
    } catch (const adsim::ModelDensityZero& e) {
        std::cerr << "ModelDensityZero: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
