#include "adsim/experiments.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "adsim/exact.hpp"
#include "adsim/spectra.hpp"

namespace adsim::experiments {

namespace {

RngStream exact_stream(std::uint64_t seed, int method_tag, int replicate) {
    return RngStream{seed, (static_cast<std::uint64_t>(method_tag) << 32) |
                               static_cast<std::uint64_t>(replicate)};
}

CascadeConfig wavelet_config(const ProcessModel& model, int J, int duration,
                             std::uint64_t seed, int replicate, Smoothing smoothing) {
    CascadeConfig cfg(model);
    cfg.J_final = J;
    cfg.init = CmeInit{0};
    cfg.smoothing = smoothing;
    cfg.policy = default_policy(model);
    cfg.duration = duration;
    cfg.seed = seed;
    cfg.replicate = static_cast<std::uint64_t>(replicate);
    return cfg;
}

// Physical-scale velocity sampled every `step` raw indices.
std::vector<double> sample_velocity(const SamplePath& raw, int step, int count) {
    const double scale = std::exp2(0.5 * raw.J);
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k)
        out[k] = scale * raw.values[static_cast<std::size_t>(k) * step];
    return out;
}

// Unit-time increments of the Riemann-sum position path.
std::vector<double> unit_increments(const SamplePath& raw, int count) {
    const SamplePath x = position_path(raw);
    const int step = 1 << raw.J;
    std::vector<double> y(count);
    for (int k = 0; k < count; ++k)
        y[k] = x.values[static_cast<std::size_t>(k + 1) * step] -
               x.values[static_cast<std::size_t>(k) * step];
    return y;
}

// Statistical baselines need ~1e-9 acvf accuracy, far below the default
// quadrature target; loosening keeps the high-lag oscillatory integrals cheap.
QuadratureConfig table_quad(const ProcessModel& model) {
    QuadratureConfig cfg;
    cfg.rho = default_rho(delta_exponent(model));
    cfg.abs_tol = 1e-9;
    cfg.rel_tol = 1e-7;
    cfg.max_subdivisions = 500000;
    return cfg;
}

AcvfTable velocity_acvf_table(const ProcessModel& model, int n) {
    const QuadratureConfig cfg = table_quad(model);
    std::vector<double> r(n);
    const SpectralDensityFn f = spectral_density(model);
    for (int k = 0; k < n; ++k) r[k] = acvf_from_density(f, k, cfg);
    return make_acvf_table(std::move(r), "continuous velocity acvf at integer lags");
}

AcvfTable deltaX_acvf_table(const ProcessModel& model, int n) {
    const QuadratureConfig cfg = table_quad(model);
    std::vector<double> r(n);
    for (int k = 0; k < n; ++k)
        r[k] = model.is_fgle() ? deltaX_acvf_fgle(model, k, cfg)
                               : deltaX_acvf_fou(model, k, cfg);
    return make_acvf_table(std::move(r), "Delta X acvf");
}

MethodResult make_result(MethodSummary s, const MethodSummary& baseline, bool is_baseline) {
    MethodResult r;
    r.abs_t = is_baseline ? 0.0 : two_sample_t(s, baseline);
    r.baseline = is_baseline;
    r.summary = std::move(s);
    return r;
}

}  // namespace

std::vector<double> yw_ou_wavelet(double zeta, double spacing, int J, int n, int N,
                                  std::uint64_t seed, Smoothing smoothing) {
    const ProcessModel model = ProcessModel::ou(zeta, 1.0);
    const double step_f = spacing * std::exp2(J);
    const int step = static_cast<int>(std::lround(step_f));
    if (step < 1 || std::abs(step_f - step) > 1e-9)
        throw ParameterOutOfRange("yw_ou_wavelet: spacing * 2^J must be a positive integer");
    const double dur_f = n * spacing;
    const int duration = std::max(1, static_cast<int>(std::ceil(dur_f)));
    CascadeConfig cfg = wavelet_config(model, J, duration, seed, 0, smoothing);
    QuadratureConfig quad;
    const FilterBank bank = build_filter_bank(cfg, quad);
    std::vector<double> est(N);
    for (int r = 0; r < N; ++r) {
        cfg.replicate = static_cast<std::uint64_t>(r);
        const SamplePath path = simulate_velocity(cfg, bank);
        est[r] = yule_walker_ar1(sample_velocity(path, step, n));
    }
    return est;
}

std::vector<double> yw_ou_iterative(double zeta, double spacing, int n, int N,
                                    std::uint64_t seed) {
    const double phi = std::exp(-zeta * spacing);
    const double innovation_sd = std::sqrt((1.0 - phi * phi) / (2.0 * zeta));
    std::vector<double> est(N);
    for (int r = 0; r < N; ++r) {
        GaussianRng rng(exact_stream(seed, 3, r));
        est[r] = yule_walker_ar1(ar1_simulate(phi, innovation_sd, n, rng));
    }
    return est;
}

std::vector<double> yw_ou_cme(double zeta, double spacing, int n, int N, std::uint64_t seed) {
    // exact sampled-OU acvf: r(k) = e^{-zeta spacing k} / (2 zeta)
    std::vector<double> r(n);
    for (int k = 0; k < n; ++k) r[k] = std::exp(-zeta * spacing * k) / (2.0 * zeta);
    const AcvfTable table = make_acvf_table(std::move(r), "sampled OU acvf");
    CmeSampler sampler(table, n);
    std::vector<double> est(N);
    for (int rep = 0; rep < N; ++rep) {
        GaussianRng rng(exact_stream(seed, 2, rep));
        est[rep] = yule_walker_ar1(sampler.sample(rng));
    }
    return est;
}

std::vector<double> lw_fou_wavelet(double zeta, double d, int J, int n, int bw, int N,
                                   std::uint64_t seed, Smoothing smoothing) {
    const ProcessModel model = ProcessModel::fou(zeta, 1.0, d);
    CascadeConfig cfg = wavelet_config(model, J, n, seed, 0, smoothing);
    QuadratureConfig quad;
    quad.rho = default_rho(d);
    const FilterBank bank = build_filter_bank(cfg, quad);
    const int step = 1 << J;
    std::vector<double> est(N);
    for (int r = 0; r < N; ++r) {
        cfg.replicate = static_cast<std::uint64_t>(r);
        const SamplePath path = simulate_velocity(cfg, bank);
        const std::vector<double> series =
            d > 0.0 ? sample_velocity(path, step, n) : unit_increments(path, n);
        est[r] = local_whittle(series, bw).d_hat;
    }
    return est;
}

std::vector<double> lw_fou_exact(ExactKind kind, double zeta, double d, int n, int bw, int N,
                                 std::uint64_t seed) {
    const ProcessModel model = ProcessModel::fou(zeta, 1.0, d);
    const AcvfTable table = d > 0.0 ? velocity_acvf_table(model, n) : deltaX_acvf_table(model, n);
    std::vector<double> est(N);
    if (kind == ExactKind::Cholesky) {
        const CholeskyFactor chol(table, n);
        for (int r = 0; r < N; ++r) {
            GaussianRng rng(exact_stream(seed, 1, r));
            est[r] = local_whittle(chol.sample(rng), bw).d_hat;
        }
    } else if (kind == ExactKind::Cme) {
        const CmeSampler sampler(table, n);
        for (int r = 0; r < N; ++r) {
            GaussianRng rng(exact_stream(seed, 2, r));
            est[r] = local_whittle(sampler.sample(rng), bw).d_hat;
        }
    } else {
        throw ParameterOutOfRange("lw_fou_exact: iterative kind applies to the OU only");
    }
    return est;
}

std::vector<double> lw_fgle_wavelet(double zeta, double mass, double d, int J, int n, int bw,
                                    int N, std::uint64_t seed, Smoothing smoothing) {
    const ProcessModel model = ProcessModel::fgle(zeta, mass, d);
    CascadeConfig cfg = wavelet_config(model, J, n, seed, 0, smoothing);
    QuadratureConfig quad;
    quad.rho = default_rho(-d);
    const FilterBank bank = build_filter_bank(cfg, quad);
    std::vector<double> est(N);
    for (int r = 0; r < N; ++r) {
        cfg.replicate = static_cast<std::uint64_t>(r);
        const SamplePath path = simulate_velocity(cfg, bank);
        est[r] = local_whittle(unit_increments(path, n), bw).d_hat;
    }
    return est;
}

std::vector<double> lw_fgle_exact(ExactKind kind, double zeta, double mass, double d, int n,
                                  int bw, int N, std::uint64_t seed) {
    const ProcessModel model = ProcessModel::fgle(zeta, mass, d);
    const AcvfTable table = deltaX_acvf_table(model, n);
    std::vector<double> est(N);
    if (kind == ExactKind::Cholesky) {
        const CholeskyFactor chol(table, n);
        for (int r = 0; r < N; ++r) {
            GaussianRng rng(exact_stream(seed, 1, r));
            est[r] = local_whittle(chol.sample(rng), bw).d_hat;
        }
    } else if (kind == ExactKind::Cme) {
        const CmeSampler sampler(table, n);
        for (int r = 0; r < N; ++r) {
            GaussianRng rng(exact_stream(seed, 2, r));
            est[r] = local_whittle(sampler.sample(rng), bw).d_hat;
        }
    } else {
        throw ParameterOutOfRange("lw_fgle_exact: iterative kind applies to the OU only");
    }
    return est;
}

std::vector<double> gof_fou(GofMethod method, double zeta, double d, int n, int N,
                            std::uint64_t seed, int J) {
    const ProcessModel model = ProcessModel::fou(zeta, 1.0, d);
    const AliasedDensity f_model =
        make_aliased_density(model, AliasKind::SampledVelocityFou);
    auto f = [&f_model](double x) { return f_model(x); };
    std::vector<double> stats(N);
    if (method == GofMethod::Wavelet) {
        CascadeConfig cfg = wavelet_config(model, J, n, seed, 0, Smoothing::Smoothed);
        QuadratureConfig quad;
        quad.rho = default_rho(d);
        const FilterBank bank = build_filter_bank(cfg, quad);
        const int step = 1 << J;
        for (int r = 0; r < N; ++r) {
            cfg.replicate = static_cast<std::uint64_t>(r);
            const SamplePath path = simulate_velocity(cfg, bank);
            stats[r] = spectral_gof(sample_velocity(path, step, n), f);
        }
        return stats;
    }
    const AcvfTable table = velocity_acvf_table(model, n);
    if (method == GofMethod::Cholesky) {
        const CholeskyFactor chol(table, n);
        for (int r = 0; r < N; ++r) {
            GaussianRng rng(exact_stream(seed, 1, r));
            stats[r] = spectral_gof(chol.sample(rng), f);
        }
    } else {
        const CmeSampler sampler(table, n);
        for (int r = 0; r < N; ++r) {
            GaussianRng rng(exact_stream(seed, 2, r));
            stats[r] = spectral_gof(sampler.sample(rng), f);
        }
    }
    return stats;
}

std::vector<MCReport> run_table3(int N, int n, std::uint64_t seed) {
    std::vector<MCReport> out;
    const int bw = comparison_bandwidth(n);
    for (double d : {0.25, -0.25}) {
        MCReport rep;
        rep.experiment = "table3";
        std::ostringstream est;
        est << "Local Whittle d-hat (fOU, zeta=1, d=" << d << ")";
        rep.estimator = est.str();
        rep.baseline = "cholesky";
        const MethodSummary base =
            summarize("cholesky", lw_fou_exact(ExactKind::Cholesky, 1.0, d, n, bw, N, seed));
        rep.methods.push_back(make_result(
            summarize("wavelet (CME init, J=6)", lw_fou_wavelet(1.0, d, 6, n, bw, N, seed)),
            base, false));
        rep.methods.push_back(make_result(
            summarize("cme", lw_fou_exact(ExactKind::Cme, 1.0, d, n, bw, N, seed)), base,
            false));
        rep.methods.push_back(make_result(base, base, true));
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<MCReport> run_table4(int N, int n, std::uint64_t seed) {
    MCReport rep;
    rep.experiment = "table4";
    rep.estimator = "Yule-Walker phi-hat (OU, phi=0.8825)";
    rep.baseline = "iterative";
    const MethodSummary base =
        summarize("iterative", yw_ou_iterative(1.0, 0.125, n, N, seed));
    rep.methods.push_back(make_result(
        summarize("wavelet (zeta=1, J=6)", yw_ou_wavelet(1.0, 0.125, 6, n, N, seed)), base,
        false));
    rep.methods.push_back(make_result(
        summarize("wavelet (zeta=1/2, J=4)", yw_ou_wavelet(0.5, 0.25, 4, n, N, seed)), base,
        false));
    rep.methods.push_back(make_result(
        summarize("wavelet (zeta=1/2, J=8)", yw_ou_wavelet(0.5, 0.25, 8, n, N, seed)), base,
        false));
    rep.methods.push_back(
        make_result(summarize("cme", yw_ou_cme(1.0, 0.125, n, N, seed)), base, false));
    rep.methods.push_back(make_result(base, base, true));
    return {rep};
}

std::vector<MCReport> run_table5(int N, int n, std::uint64_t seed) {
    std::vector<MCReport> out;
    const int bw = comparison_bandwidth(n);
    for (double d : {0.25, -0.25}) {
        MCReport rep;
        rep.experiment = "table5";
        std::ostringstream est;
        est << "Local Whittle d-hat vs J (fOU, zeta=1, d=" << d << ")";
        rep.estimator = est.str();
        rep.baseline = "cholesky";
        const MethodSummary base =
            summarize("cholesky", lw_fou_exact(ExactKind::Cholesky, 1.0, d, n, bw, N, seed));
        for (int J : {2, 4, 6, 8}) {
            std::ostringstream name;
            name << "wavelet (CME init, J=" << J << ")";
            rep.methods.push_back(make_result(
                summarize(name.str(), lw_fou_wavelet(1.0, d, J, n, bw, N, seed)), base,
                false));
        }
        rep.methods.push_back(make_result(base, base, true));
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<MCReport> run_table6(int N, int n, std::uint64_t seed) {
    MCReport rep;
    rep.experiment = "table6";
    rep.estimator = "Local Whittle d-hat (fGLE, zeta=2, m=1, d=0.25)";
    rep.baseline = "cholesky";
    const int bw = comparison_bandwidth(n);
    const MethodSummary base = summarize(
        "cholesky", lw_fgle_exact(ExactKind::Cholesky, 2.0, 1.0, 0.25, n, bw, N, seed));
    for (int J : {6, 8}) {
        std::ostringstream name;
        name << "wavelet (CME init, J=" << J << ")";
        rep.methods.push_back(make_result(
            summarize(name.str(), lw_fgle_wavelet(2.0, 1.0, 0.25, J, n, bw, N, seed)), base,
            false));
    }
    rep.methods.push_back(make_result(base, base, true));
    return {rep};
}

std::vector<MCReport> run_gof(int N, int n, std::uint64_t seed) {
    MCReport rep;
    rep.experiment = "gof";
    rep.estimator = "spectral T-statistic (fOU, zeta=1, d=0.25)";
    rep.baseline = "cholesky";
    const std::vector<double> cme = gof_fou(GofMethod::Cme, 1.0, 0.25, n, N, seed);
    const std::vector<double> chol = gof_fou(GofMethod::Cholesky, 1.0, 0.25, n, N, seed);
    const std::vector<double> wav = gof_fou(GofMethod::Wavelet, 1.0, 0.25, n, N, seed);
    const MethodSummary base = summarize("cholesky", chol);
    rep.methods.push_back(make_result(summarize("cme", cme), base, false));
    rep.methods.push_back(make_result(summarize("wavelet (CME init, J=6)", wav), base, false));
    rep.methods.push_back(make_result(base, base, true));

    auto add_ks = [&rep](const std::string& a, const std::string& b,
                         const std::vector<double>& xa, const std::vector<double>& xb) {
        const KsResult ks = ks_two_sample(xa, xb);
        rep.ks_pairs.push_back(KsPair{a, b, ks.d, ks.p});
    };
    add_ks("cme", "wavelet", cme, wav);
    add_ks("wavelet", "cholesky", wav, chol);
    add_ks("cme", "cholesky", cme, chol);

    std::vector<double> pooled;
    pooled.reserve(cme.size() + chol.size() + wav.size());
    for (const auto* v : {&cme, &chol, &wav}) pooled.insert(pooled.end(), v->begin(), v->end());
    const MethodSummary ps = summarize("pooled", pooled);
    rep.pooled_mean = ps.mean;
    rep.pooled_sd = ps.sd;
    return {rep};
}

std::string report_to_json(const std::vector<MCReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rep : reports) {
        nlohmann::json jr;
        jr["experiment"] = rep.experiment;
        jr["estimator"] = rep.estimator;
        jr["baseline"] = rep.baseline;
        jr["methods"] = nlohmann::json::array();
        for (const auto& m : rep.methods) {
            jr["methods"].push_back({{"name", m.summary.name},
                                     {"mean", m.summary.mean},
                                     {"s", m.summary.sd},
                                     {"N", m.summary.n},
                                     {"abs_t", m.abs_t},
                                     {"baseline", m.baseline}});
        }
        if (!rep.ks_pairs.empty()) {
            jr["ks_pairs"] = nlohmann::json::array();
            for (const auto& k : rep.ks_pairs)
                jr["ks_pairs"].push_back({{"a", k.a}, {"b", k.b}, {"D", k.d}, {"p", k.p}});
            jr["pooled_mean"] = rep.pooled_mean;
            jr["pooled_sd"] = rep.pooled_sd;
        }
        out.push_back(std::move(jr));
    }
    return out.dump(2);
}

std::string report_to_text(const std::vector<MCReport>& reports) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    for (const auto& rep : reports) {
        os << rep.estimator << "\n";
        os << "method | estimate | s | N | |t| statistic\n";
        os.precision(8);
        for (const auto& m : rep.methods) {
            os << m.summary.name << " | " << m.summary.mean << " | " << m.summary.sd << " | "
               << m.summary.n << " | ";
            if (m.baseline)
                os << "-";
            else
                os << m.abs_t;
            os << "\n";
        }
        for (const auto& k : rep.ks_pairs)
            os << "KS " << k.a << " vs " << k.b << ": D=" << k.d << " p=" << k.p << "\n";
        if (!rep.ks_pairs.empty())
            os << "pooled mean=" << rep.pooled_mean << " sd=" << rep.pooled_sd << "\n";
        os << "\n";
    }
    return os.str();
}

}  // namespace adsim::experiments
